//! Closed directed walks and the face-boundary predicates.
//!
//! A walk is a cyclic sequence of darts; dart `d` is traversed from
//! `endpoint(d)` to `head(d)`. A closed walk is a face boundary of some
//! orientable embedding exactly when it is orientable and
//! rotation-compatible, and [`realize_as_face`] builds such an embedding.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::embedding::Embedding;
use crate::graph::{Dart, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WalkError {
    #[error("walk is empty")]
    Empty,
    #[error("dart {dart} does not belong to the graph")]
    UnknownDart { dart: Dart },
    #[error("darts {prev} and {next} (positions {index} and {}) are not consecutive", index + 1)]
    NotIncident { index: usize, prev: Dart, next: Dart },
    #[error("no single edge joins vertices {u} and {v}")]
    NoEdge { u: usize, v: usize },
    #[error("walk is not orientable")]
    NotOrientable,
    #[error("walk is not rotation-compatible at vertex {vertex}")]
    NotRotationCompatible { vertex: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Walk {
    darts: Vec<Dart>,
}

impl Walk {
    /// Checks that `darts` is a nonempty closed walk in `g`.
    pub fn new(g: &Graph, darts: Vec<Dart>) -> Result<Self, WalkError> {
        if darts.is_empty() {
            return Err(WalkError::Empty);
        }
        if let Some(&dart) = darts.iter().find(|d| d.index() >= g.dart_count()) {
            return Err(WalkError::UnknownDart { dart });
        }
        for i in 0..darts.len() {
            let (prev, next) = (darts[i], darts[(i + 1) % darts.len()]);
            if g.head(prev) != g.endpoint(next) {
                return Err(WalkError::NotIncident { index: i, prev, next });
            }
        }
        Ok(Walk { darts })
    }

    /// Closed walk through `vertices` (the first vertex is not repeated at
    /// the end). Every consecutive pair must be joined by exactly one edge.
    pub fn from_vertices(g: &Graph, vertices: &[usize]) -> Result<Self, WalkError> {
        let n = vertices.len();
        let darts = (0..n)
            .map(|i| {
                let (u, v) = (vertices[i], vertices[(i + 1) % n]);
                if u >= g.vertex_count() || v >= g.vertex_count() {
                    return Err(WalkError::NoEdge { u, v });
                }
                g.dart_between(u, v).ok_or(WalkError::NoEdge { u, v })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Walk::new(g, darts)
    }

    pub(crate) fn from_darts_unchecked(darts: Vec<Dart>) -> Self {
        Walk { darts }
    }

    pub fn darts(&self) -> &[Dart] {
        &self.darts
    }

    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// Vertices in visiting order, starting at the tail of the first dart.
    pub fn vertices(&self, g: &Graph) -> Vec<usize> {
        self.darts.iter().map(|&d| g.endpoint(d)).collect()
    }

    pub fn reversed(&self) -> Walk {
        Walk {
            darts: self.darts.iter().rev().map(|d| d.opposite()).collect(),
        }
    }

    /// Lexicographically least dart sequence among all cyclic shifts of the
    /// walk and of its reversal.
    pub fn canonical(&self) -> Vec<Dart> {
        let fwd = least_rotation(&self.darts);
        let rev = least_rotation(&self.reversed().darts);
        fwd.min(rev)
    }

    /// Equality up to cyclic shift and reversal.
    pub fn same_cycle(&self, other: &Walk) -> bool {
        self.len() == other.len() && self.canonical() == other.canonical()
    }

    /// Equality up to cyclic shift only.
    pub fn same_directed_cycle(&self, other: &Walk) -> bool {
        self.len() == other.len() && least_rotation(&self.darts) == least_rotation(&other.darts)
    }

    /// Number of times each edge is used.
    pub fn edge_usage(&self, g: &Graph) -> Vec<usize> {
        let mut used = vec![0; g.edge_count()];
        for d in &self.darts {
            used[d.edge()] += 1;
        }
        used
    }
}

fn least_rotation(seq: &[Dart]) -> Vec<Dart> {
    let n = seq.len();
    let best = (0..n)
        .min_by(|&a, &b| {
            (0..n)
                .map(|k| seq[(a + k) % n])
                .cmp((0..n).map(|k| seq[(b + k) % n]))
        })
        .unwrap_or(0);
    (0..n).map(|k| seq[(best + k) % n]).collect()
}

/// Local transition structure of a closed walk at one vertex: nodes are the
/// vertex's darts; each visit adds a link between the arrival dart and the
/// departure dart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotGraph {
    pub vertex: usize,
    pub nodes: Vec<Dart>,
    pub links: Vec<(Dart, Dart)>,
}

impl RotGraph {
    /// Either one cycle through every node, or vertex-disjoint paths.
    pub fn is_compatible(&self) -> bool {
        let k = self.nodes.len();
        let pos = |d: Dart| self.nodes.iter().position(|&x| x == d).expect("link endpoint is a node");
        let mut degree = vec![0usize; k];
        for &(a, b) in &self.links {
            degree[pos(a)] += 1;
            degree[pos(b)] += 1;
        }
        if degree.iter().any(|&x| x > 2) {
            return false;
        }
        // Union-find over the nodes; a link closing a cycle is only allowed
        // when it completes a single cycle through all nodes.
        let mut parent: Vec<usize> = (0..k).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            parent[x] = r;
            r
        }
        let mut closed = false;
        for &(a, b) in &self.links {
            let (ra, rb) = (find(&mut parent, pos(a)), find(&mut parent, pos(b)));
            if ra == rb {
                closed = true;
            } else {
                parent[ra] = rb;
            }
        }
        if !closed {
            return true;
        }
        self.links.len() == k && degree.iter().all(|&x| x == 2) && {
            let root = find(&mut parent, 0);
            (0..k).all(|i| find(&mut parent, i) == root)
        }
    }
}

pub fn rot_graph(g: &Graph, w: &Walk, v: usize) -> RotGraph {
    let darts = w.darts();
    let n = darts.len();
    let links = (0..n)
        .filter_map(|i| {
            let arrive = darts[i].opposite();
            let depart = darts[(i + 1) % n];
            (g.endpoint(arrive) == v).then_some((arrive, depart))
        })
        .collect();
    RotGraph {
        vertex: v,
        nodes: g.incident(v).to_vec(),
        links,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkReport {
    pub edge_spanning: bool,
    pub edge_2_bounded: bool,
    pub orientable: bool,
    pub retraction_free: bool,
    pub rotation_compatible: bool,
    pub solo_edges: BTreeSet<usize>,
    pub double_edges: BTreeSet<usize>,
}

impl WalkReport {
    pub fn is_reporter_strand_walk(&self) -> bool {
        self.edge_spanning && self.orientable && self.rotation_compatible
    }
}

/// Computes every walk predicate. `w` must be a walk of `g`, as guaranteed
/// by [`Walk::new`].
pub fn validate_walk(g: &Graph, w: &Walk) -> WalkReport {
    let usage = w.edge_usage(g);
    let mut dart_uses = vec![0usize; g.dart_count()];
    for d in w.darts() {
        dart_uses[d.index()] += 1;
    }
    let darts = w.darts();
    let n = darts.len();
    let retraction_free = (0..n).all(|i| darts[(i + 1) % n] != darts[i].opposite());
    let rotation_compatible = (0..g.vertex_count()).all(|v| rot_graph(g, w, v).is_compatible());
    WalkReport {
        edge_spanning: usage.iter().all(|&u| u >= 1),
        edge_2_bounded: usage.iter().all(|&u| u <= 2),
        orientable: dart_uses.iter().all(|&u| u <= 1),
        retraction_free,
        rotation_compatible,
        solo_edges: (0..usage.len()).filter(|&e| usage[e] == 1).collect(),
        double_edges: (0..usage.len()).filter(|&e| usage[e] == 2).collect(),
    }
}

pub fn is_reporter_strand_walk(g: &Graph, w: &Walk) -> bool {
    validate_walk(g, w).is_reporter_strand_walk()
}

/// Builds an embedding in which `w` is a face boundary.
///
/// Each transition `arrive -> depart` of the walk fixes
/// `succ(arrive) = depart`. At every vertex the resulting directed paths are
/// chained into one rotation: the path holding the walk's first transition
/// at that vertex comes first, the others follow by increasing first dart.
pub fn realize_as_face(g: &Graph, w: &Walk) -> Result<Embedding, WalkError> {
    let report = validate_walk(g, w);
    if !report.orientable {
        return Err(WalkError::NotOrientable);
    }
    let darts = w.darts();
    let n = darts.len();
    let mut succ: Vec<Option<Dart>> = vec![None; g.dart_count()];
    let mut has_pred = vec![false; g.dart_count()];
    let mut first_arrival: Vec<Option<Dart>> = vec![None; g.vertex_count()];
    for i in 0..n {
        let arrive = darts[i].opposite();
        let depart = darts[(i + 1) % n];
        succ[arrive.index()] = Some(depart);
        has_pred[depart.index()] = true;
        first_arrival[g.endpoint(arrive)].get_or_insert(arrive);
    }
    let mut rotation = Vec::with_capacity(g.vertex_count());
    for v in 0..g.vertex_count() {
        let incident = g.incident(v);
        let cycle_at_v = incident.iter().all(|d| has_pred[d.index()]);
        let mut order: Vec<Dart> = Vec::with_capacity(incident.len());
        if cycle_at_v && !incident.is_empty() {
            let start = first_arrival[v].expect("a spanning cycle has transitions");
            let mut d = start;
            loop {
                order.push(d);
                d = succ[d.index()].expect("every dart continues the cycle");
                if d == start || order.len() > incident.len() {
                    break;
                }
            }
        } else {
            let mut heads: Vec<Dart> = incident
                .iter()
                .copied()
                .filter(|d| !has_pred[d.index()])
                .collect();
            heads.sort();
            if let Some(first) = first_arrival[v] {
                let mut h = first;
                let mut guard = 0;
                while has_pred[h.index()] && guard <= incident.len() {
                    h = *incident
                        .iter()
                        .find(|x| succ[x.index()] == Some(h))
                        .expect("a dart with a predecessor has one at this vertex");
                    guard += 1;
                }
                if let Some(i) = heads.iter().position(|&x| x == h) {
                    let h = heads.remove(i);
                    heads.insert(0, h);
                }
            }
            for h in heads {
                let mut d = Some(h);
                while let Some(x) = d {
                    if order.len() > incident.len() {
                        break;
                    }
                    order.push(x);
                    d = succ[x.index()];
                }
            }
        }
        let mut sorted = order.clone();
        sorted.sort();
        sorted.dedup();
        if order.len() != incident.len() || sorted.len() != incident.len() {
            return Err(WalkError::NotRotationCompatible { vertex: v });
        }
        rotation.push(order);
    }
    Embedding::new(g.clone(), rotation).map_err(|_| WalkError::NotRotationCompatible { vertex: 0 })
}
