//! Exhaustive search over rotation systems.

use super::SearchError;
use crate::embedding::{genus_from_counts, Embedding};
use crate::graph::{Dart, Graph};
use crate::walk::Walk;

/// Number of distinct rotation systems, `prod (deg(v) - 1)!`, saturating.
pub fn rotation_system_count(g: &Graph) -> u64 {
    (0..g.vertex_count())
        .map(|v| factorial(g.degree(v).saturating_sub(1)))
        .fold(1u64, |acc, x| acc.saturating_mul(x))
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).fold(1u64, |acc, x| acc.saturating_mul(x))
}

#[derive(Debug, Clone)]
pub struct SrsWitness {
    pub length: usize,
    pub walk: Walk,
    pub embedding: Embedding,
}

#[derive(Debug, Clone)]
pub struct MaxGenus {
    pub genus: usize,
    pub embedding: Embedding,
}

/// Shortest reporter strand walk: the shortest edge-spanning face over all
/// rotation systems. The witness is the first minimum met in enumeration
/// order.
pub fn exact_srs(g: &Graph, budget: u64) -> Result<SrsWitness, SearchError> {
    g.require_connected()?;
    if g.edge_count() == 0 {
        return Err(SearchError::NoEdges);
    }
    let mut systems = RotationSystems::new(g, budget)?;
    let m = g.edge_count();
    let mut seen = vec![false; g.dart_count()];
    let mut edge_mark = vec![usize::MAX; m];
    let mut best: Option<(usize, Vec<usize>)> = None;
    let mut orbit_id = 0usize;
    loop {
        seen.iter_mut().for_each(|s| *s = false);
        for start in 0..g.dart_count() {
            if seen[start] {
                continue;
            }
            orbit_id += 1;
            let mut len = 0;
            let mut distinct = 0;
            let mut d = Dart::from_index(start);
            loop {
                seen[d.index()] = true;
                len += 1;
                if edge_mark[d.edge()] != orbit_id {
                    edge_mark[d.edge()] = orbit_id;
                    distinct += 1;
                }
                d = systems.succ[d.opposite().index()];
                if d.index() == start {
                    break;
                }
            }
            if distinct == m && best.as_ref().is_none_or(|(l, _)| len < *l) {
                best = Some((len, systems.choice.clone()));
            }
        }
        if !systems.advance() {
            break;
        }
    }
    let (length, choice) = best.expect("every connected graph has an edge-spanning face");
    let embedding = systems.embedding(&choice);
    let faces = embedding.trace_faces();
    let face = (0..faces.len())
        .find(|&f| faces.spans_all_edges(f) && faces.face(f).len() == length)
        .expect("witness embedding has the minimal face");
    Ok(SrsWitness {
        length,
        walk: Walk::from_darts_unchecked(faces.face(face).to_vec()),
        embedding,
    })
}

/// Maximum orientable genus over all rotation systems.
pub fn max_genus_exhaustive(g: &Graph, budget: u64) -> Result<MaxGenus, SearchError> {
    g.require_connected()?;
    let mut systems = RotationSystems::new(g, budget)?;
    if g.edge_count() == 0 {
        return Ok(MaxGenus {
            genus: 0,
            embedding: Embedding::identity(g.clone()),
        });
    }
    let mut seen = vec![false; g.dart_count()];
    let mut best: Option<(usize, Vec<usize>)> = None;
    loop {
        seen.iter_mut().for_each(|s| *s = false);
        let mut faces = 0;
        for start in 0..g.dart_count() {
            if seen[start] {
                continue;
            }
            faces += 1;
            let mut d = Dart::from_index(start);
            while !seen[d.index()] {
                seen[d.index()] = true;
                d = systems.succ[d.opposite().index()];
            }
        }
        if best.as_ref().is_none_or(|(f, _)| faces < *f) {
            best = Some((faces, systems.choice.clone()));
        }
        if faces <= 2 || !systems.advance() {
            break;
        }
    }
    let (faces, choice) = best.expect("at least one rotation system");
    Ok(MaxGenus {
        genus: genus_from_counts(g.vertex_count(), g.edge_count(), faces),
        embedding: systems.embedding(&choice),
    })
}

/// Odometer over rotation systems. Each vertex keeps its first incident dart
/// fixed and permutes the rest.
struct RotationSystems<'g> {
    graph: &'g Graph,
    orders: Vec<Vec<Vec<Dart>>>,
    choice: Vec<usize>,
    succ: Vec<Dart>,
}

impl<'g> RotationSystems<'g> {
    fn new(graph: &'g Graph, budget: u64) -> Result<Self, SearchError> {
        let required = rotation_system_count(graph);
        if required > budget {
            return Err(SearchError::BudgetExceeded {
                required,
                limit: budget,
            });
        }
        let orders: Vec<Vec<Vec<Dart>>> = (0..graph.vertex_count())
            .map(|v| cyclic_orders(graph.incident(v)))
            .collect();
        let mut systems = RotationSystems {
            graph,
            choice: vec![0; orders.len()],
            orders,
            succ: vec![Dart::from_index(0); graph.dart_count()],
        };
        for v in 0..graph.vertex_count() {
            systems.apply(v);
        }
        Ok(systems)
    }

    fn apply(&mut self, v: usize) {
        let order = &self.orders[v][self.choice[v]];
        for (i, &d) in order.iter().enumerate() {
            self.succ[d.index()] = order[(i + 1) % order.len()];
        }
    }

    fn advance(&mut self) -> bool {
        for v in 0..self.orders.len() {
            if self.choice[v] + 1 < self.orders[v].len() {
                self.choice[v] += 1;
                self.apply(v);
                return true;
            }
            if self.choice[v] != 0 {
                self.choice[v] = 0;
                self.apply(v);
            }
        }
        false
    }

    fn embedding(&self, choice: &[usize]) -> Embedding {
        let rotation = choice
            .iter()
            .enumerate()
            .map(|(v, &c)| self.orders[v][c].clone())
            .collect();
        Embedding::new(self.graph.clone(), rotation).expect("enumerated orders are rotations")
    }
}

/// All cyclic orders of `darts` with the first dart held in front.
fn cyclic_orders(darts: &[Dart]) -> Vec<Vec<Dart>> {
    let Some((&anchor, rest)) = darts.split_first() else {
        return vec![Vec::new()];
    };
    let mut out = Vec::new();
    let mut current = vec![anchor];
    let mut used = vec![false; rest.len()];
    permute(rest, &mut used, &mut current, &mut out);
    out
}

fn permute(rest: &[Dart], used: &mut [bool], current: &mut Vec<Dart>, out: &mut Vec<Vec<Dart>>) {
    if current.len() == rest.len() + 1 {
        out.push(current.clone());
        return;
    }
    for i in 0..rest.len() {
        if !used[i] {
            used[i] = true;
            current.push(rest[i]);
            permute(rest, used, current, out);
            current.pop();
            used[i] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::walk::is_reporter_strand_walk;

    fn k4() -> Graph {
        Graph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn theta() -> Graph {
        Graph::new(2, vec![(0, 1), (0, 1), (0, 1)]).unwrap()
    }

    #[test]
    fn counts() {
        assert_eq!(rotation_system_count(&k4()), 16);
        assert_eq!(rotation_system_count(&theta()), 4);
        assert_eq!(cyclic_orders(&[Dart::new(0, 0), Dart::new(1, 0), Dart::new(2, 0)]).len(), 2);
        let complete = Graph::new(
            30,
            (0..30).flat_map(|u| (u + 1..30).map(move |v| (u, v))).collect(),
        )
        .unwrap();
        assert_eq!(rotation_system_count(&complete), u64::MAX);
    }

    #[test]
    fn srs_values() {
        let w = exact_srs(&k4(), 100).unwrap();
        assert_eq!(w.length, 8);
        assert!(is_reporter_strand_walk(&k4(), &w.walk));
        assert_eq!(exact_srs(&theta(), 100).unwrap().length, 6);
        let tri = Graph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(exact_srs(&tri, 100).unwrap().length, 3);
    }

    #[test]
    fn max_genus_values() {
        assert_eq!(max_genus_exhaustive(&theta(), 100).unwrap().genus, 1);
        assert_eq!(max_genus_exhaustive(&k4(), 100).unwrap().genus, 1);
        let tree = Graph::new(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(max_genus_exhaustive(&tree, 100).unwrap().genus, 0);
        let single = Graph::new(1, vec![]).unwrap();
        assert_eq!(max_genus_exhaustive(&single, 1).unwrap().genus, 0);
    }

    #[test]
    fn budget_is_enforced() {
        assert_eq!(
            exact_srs(&k4(), 15).unwrap_err(),
            SearchError::BudgetExceeded { required: 16, limit: 15 }
        );
        assert!(matches!(
            max_genus_exhaustive(&k4(), 3),
            Err(SearchError::BudgetExceeded { .. })
        ));
    }
}
