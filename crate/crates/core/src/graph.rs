//! Undirected multigraphs stored as darts (edge-ends).
//!
//! Every edge `e = (u, v)` owns two darts: `(e, 0)` sitting at `u` and
//! `(e, 1)` sitting at `v`. Loops put both of their darts in the same
//! incidence list, so the two ends of a loop stay distinguishable.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {edge} has endpoint {vertex}, but the graph has only {vertex_count} vertices")]
    EndpointOutOfRange {
        edge: usize,
        vertex: usize,
        vertex_count: usize,
    },
    #[error("graph is not connected")]
    Disconnected,
}

/// One end of an edge. Ordered by `(edge, side)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart(usize);

impl Dart {
    pub fn new(edge: usize, side: u8) -> Self {
        debug_assert!(side < 2);
        Dart(2 * edge + side as usize)
    }

    /// Inverse of [`Dart::index`].
    pub fn from_index(index: usize) -> Self {
        Dart(index)
    }

    /// Dense index in `0..2 * edge_count`.
    pub fn index(self) -> usize {
        self.0
    }

    pub fn edge(self) -> usize {
        self.0 >> 1
    }

    pub fn side(self) -> u8 {
        (self.0 & 1) as u8
    }

    pub fn opposite(self) -> Dart {
        Dart(self.0 ^ 1)
    }
}

impl fmt::Debug for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.edge(), self.side())
    }
}

impl fmt::Display for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.edge(), self.side())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    incidence: Vec<Vec<Dart>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub is_cubic: bool,
    pub is_simple: bool,
    pub degrees: Vec<usize>,
}

impl Graph {
    /// Builds a graph; incidence lists follow `edges` order.
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        let mut incidence = vec![Vec::new(); vertex_count];
        for (e, &(u, v)) in edges.iter().enumerate() {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(GraphError::EndpointOutOfRange {
                        edge: e,
                        vertex: w,
                        vertex_count,
                    });
                }
            }
            incidence[u].push(Dart::new(e, 0));
            incidence[v].push(Dart::new(e, 1));
        }
        Ok(Graph {
            vertex_count,
            edges,
            incidence,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn dart_count(&self) -> usize {
        2 * self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn darts(&self) -> impl Iterator<Item = Dart> {
        (0..self.dart_count()).map(Dart::from_index)
    }

    /// Darts incident with `v`, in insertion order.
    pub fn incident(&self, v: usize) -> &[Dart] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    /// The vertex a dart sits at.
    pub fn endpoint(&self, d: Dart) -> usize {
        let (u, v) = self.edges[d.edge()];
        if d.side() == 0 {
            u
        } else {
            v
        }
    }

    /// The vertex reached by traversing `d` away from its endpoint.
    pub fn head(&self, d: Dart) -> usize {
        self.endpoint(d.opposite())
    }

    pub fn is_loop(&self, e: usize) -> bool {
        let (u, v) = self.edges[e];
        u == v
    }

    /// Neighbors of `v` with multiplicity, following the incidence order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.incidence[v].iter().map(move |&d| self.head(d))
    }

    /// The unique dart at `u` whose edge leads to `v`, if exactly one exists.
    pub fn dart_between(&self, u: usize, v: usize) -> Option<Dart> {
        let mut found = None;
        for &d in &self.incidence[u] {
            if self.head(d) == v {
                if found.is_some() {
                    return None;
                }
                found = Some(d);
            }
        }
        found
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees: Vec<usize> = (0..self.vertex_count).map(|v| self.degree(v)).collect();
        let is_cubic = degrees.iter().all(|&d| d == 3);
        let mut seen = HashSet::with_capacity(self.edges.len());
        let is_simple = self
            .edges
            .iter()
            .all(|&(u, v)| u != v && seen.insert((u.min(v), u.max(v))));
        DegreeProfile {
            is_cubic,
            is_simple,
            degrees,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_without(&[])
    }

    pub fn require_connected(&self) -> Result<(), GraphError> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(GraphError::Disconnected)
        }
    }

    /// Whether the graph minus `removed` is connected. An empty remainder
    /// counts as connected.
    pub(crate) fn is_connected_without(&self, removed: &[usize]) -> bool {
        let mut seen = vec![false; self.vertex_count];
        for &r in removed {
            seen[r] = true;
        }
        let Some(start) = (0..self.vertex_count).find(|&v| !seen[v]) else {
            return true;
        };
        seen[start] = true;
        let mut stack = vec![start];
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached + removed.len() == self.vertex_count
    }

    /// Unit-length shortest path distances from `source`; `usize::MAX` when
    /// unreachable.
    pub fn bfs_distances(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertex_count];
        dist[source] = 0;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn theta_degrees() {
        let g = Graph::new(2, vec![(0, 1), (0, 1), (0, 1)]).unwrap();
        let p = g.degree_profile();
        assert_eq!(p.degrees, vec![3, 3]);
        assert!(p.is_cubic);
        assert!(!p.is_simple);
    }

    #[test]
    fn k4_is_cubic_and_simple() {
        let p = k4().degree_profile();
        assert_eq!(p.degrees, vec![3, 3, 3, 3]);
        assert!(p.is_cubic && p.is_simple);
    }

    #[test]
    fn loop_contributes_two() {
        let g = Graph::new(1, vec![(0, 0)]).unwrap();
        assert_eq!(g.degree(0), 2);
        assert_eq!(g.incident(0), &[Dart::new(0, 0), Dart::new(0, 1)]);
        let p = g.degree_profile();
        assert!(!p.is_cubic && !p.is_simple);
    }

    #[test]
    fn endpoint_out_of_range() {
        assert_eq!(
            Graph::new(2, vec![(0, 2)]),
            Err(GraphError::EndpointOutOfRange {
                edge: 0,
                vertex: 2,
                vertex_count: 2
            })
        );
    }

    #[test]
    fn darts_and_endpoints() {
        let g = k4();
        for d in g.darts() {
            assert_eq!(d.opposite().opposite(), d);
            assert_ne!(d.opposite(), d);
            assert!(g.incident(g.endpoint(d)).contains(&d));
        }
        assert_eq!(g.dart_between(0, 3), Some(Dart::new(2, 0)));
        assert_eq!(g.dart_between(3, 0), Some(Dart::new(2, 1)));
        let theta = Graph::new(2, vec![(0, 1), (0, 1), (0, 1)]).unwrap();
        assert_eq!(theta.dart_between(0, 1), None);
    }

    #[test]
    fn connectivity_basics() {
        assert!(k4().is_connected());
        let g = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        assert_eq!(g.require_connected(), Err(GraphError::Disconnected));
        assert!(Graph::new(1, vec![]).unwrap().is_connected());
    }
}
