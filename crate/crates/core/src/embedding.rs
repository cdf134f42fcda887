//! Rotation systems and face tracing.
//!
//! A rotation assigns each vertex a cyclic order of its darts. Faces are the
//! orbits of `next(d) = succ(opposite(d))`: arrive at a vertex along a dart's
//! edge and leave on the rotation-successor of the arrival dart. "Clockwise"
//! in the gadget constructions always refers to this successor order.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{Dart, Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingError {
    #[error("rotation covers {given} vertices, graph has {expected}")]
    VertexCount { expected: usize, given: usize },
    #[error("rotation at vertex {vertex} is not a permutation of its darts")]
    BadRotation { vertex: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("face {face} does not exist")]
    NoSuchFace { face: usize },
    #[error("dart {dart} lies on face {face}")]
    DartOnFace { dart: Dart, face: usize },
    #[error("corner ({arrive}, {depart}) is not a corner of face {face} at the dart's vertex")]
    CornerNotOnFace {
        arrive: Dart,
        depart: Dart,
        face: usize,
    },
    #[error("vertices {u} and {v} are not joined by exactly one edge")]
    NotSingleEdge { u: usize, v: usize },
}

/// A pair of rotation-consecutive darts `(arrive, depart)` at one vertex, with
/// `depart = succ(arrive)`. A face passes through the corner when its trace
/// comes in along `arrive`'s edge and leaves along `depart`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Corner {
    pub arrive: Dart,
    pub depart: Dart,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    graph: Graph,
    rotation: Vec<Vec<Dart>>,
    succ: Vec<Dart>,
    pred: Vec<Dart>,
}

impl Embedding {
    pub fn new(graph: Graph, rotation: Vec<Vec<Dart>>) -> Result<Self, EmbeddingError> {
        if rotation.len() != graph.vertex_count() {
            return Err(EmbeddingError::VertexCount {
                expected: graph.vertex_count(),
                given: rotation.len(),
            });
        }
        for (v, cyc) in rotation.iter().enumerate() {
            let mut given: Vec<Dart> = cyc.clone();
            let mut expected: Vec<Dart> = graph.incident(v).to_vec();
            given.sort();
            expected.sort();
            if given != expected {
                return Err(EmbeddingError::BadRotation { vertex: v });
            }
        }
        Ok(Self::from_parts(graph, rotation))
    }

    fn from_parts(graph: Graph, rotation: Vec<Vec<Dart>>) -> Self {
        let mut succ = vec![Dart::from_index(0); graph.dart_count()];
        let mut pred = succ.clone();
        for cyc in &rotation {
            for (i, &d) in cyc.iter().enumerate() {
                let next = cyc[(i + 1) % cyc.len()];
                succ[d.index()] = next;
                pred[next.index()] = d;
            }
        }
        Embedding {
            graph,
            rotation,
            succ,
            pred,
        }
    }

    /// Each vertex's rotation is its incidence list in stored order.
    pub fn identity(graph: Graph) -> Self {
        let rotation = (0..graph.vertex_count())
            .map(|v| graph.incident(v).to_vec())
            .collect();
        Self::from_parts(graph, rotation)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self, v: usize) -> &[Dart] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<Dart>] {
        &self.rotation
    }

    pub fn succ(&self, d: Dart) -> Dart {
        self.succ[d.index()]
    }

    pub fn pred(&self, d: Dart) -> Dart {
        self.pred[d.index()]
    }

    /// Face-tracing permutation.
    pub fn next(&self, d: Dart) -> Dart {
        self.succ(d.opposite())
    }

    pub fn trace_faces(&self) -> FaceSet {
        let m = self.graph.edge_count();
        let mut face_of = vec![usize::MAX; self.graph.dart_count()];
        let mut faces = Vec::new();
        for start in self.graph.darts() {
            if face_of[start.index()] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut cycle = Vec::new();
            let mut d = start;
            loop {
                face_of[d.index()] = id;
                cycle.push(d);
                d = self.next(d);
                if d == start {
                    break;
                }
            }
            faces.push(cycle);
        }
        let edge_sets = faces
            .iter()
            .map(|f| {
                let mut set = vec![false; m];
                for d in f {
                    set[d.edge()] = true;
                }
                set
            })
            .collect();
        FaceSet {
            faces,
            face_of,
            edge_sets,
        }
    }

    /// Orientable genus from Euler's formula. An edgeless single vertex has
    /// one face.
    pub fn genus(&self) -> Result<usize, EmbeddingError> {
        self.graph.require_connected()?;
        let faces = if self.graph.edge_count() == 0 {
            1
        } else {
            self.trace_faces().len()
        };
        Ok(genus_from_counts(
            self.graph.vertex_count(),
            self.graph.edge_count(),
            faces,
        ))
    }

    /// Moves `dart` out of its place in the rotation at its vertex and
    /// reinserts it inside `corner`, which must be a corner of `face` there.
    pub fn flip(&self, dart: Dart, face: usize, corner: Corner) -> Result<Embedding, EmbeddingError> {
        let faces = self.trace_faces();
        self.flip_traced(&faces, dart, face, corner)
    }

    pub(crate) fn flip_traced(
        &self,
        faces: &FaceSet,
        dart: Dart,
        face: usize,
        corner: Corner,
    ) -> Result<Embedding, EmbeddingError> {
        if face >= faces.len() {
            return Err(EmbeddingError::NoSuchFace { face });
        }
        if faces.contains_edge(face, dart.edge()) {
            return Err(EmbeddingError::DartOnFace { dart, face });
        }
        let v = self.graph.endpoint(dart);
        let valid_corner = self.graph.endpoint(corner.arrive) == v
            && self.succ(corner.arrive) == corner.depart
            && faces.face_of(corner.depart) == face;
        if !valid_corner {
            return Err(EmbeddingError::CornerNotOnFace {
                arrive: corner.arrive,
                depart: corner.depart,
                face,
            });
        }
        let mut rotation = self.rotation.clone();
        let cyc = &mut rotation[v];
        cyc.retain(|&d| d != dart);
        let at = cyc
            .iter()
            .position(|&d| d == corner.arrive)
            .expect("corner dart sits at the flipped vertex");
        cyc.insert(at + 1, dart);
        Ok(Self::from_parts(self.graph.clone(), rotation))
    }

    /// The neighbor of `u` immediately after `v` in the rotation at `u`.
    /// Requires a single `u`–`v` edge.
    pub fn clockwise_neighbor(&self, u: usize, v: usize) -> Result<usize, EmbeddingError> {
        let d = self
            .graph
            .dart_between(u, v)
            .ok_or(EmbeddingError::NotSingleEdge { u, v })?;
        Ok(self.graph.head(self.succ(d)))
    }

    /// Every rotation reversed; the mirror-image embedding.
    pub fn mirrored(&self) -> Embedding {
        let rotation = self
            .rotation
            .iter()
            .map(|c| c.iter().rev().copied().collect())
            .collect();
        Self::from_parts(self.graph.clone(), rotation)
    }
}

pub(crate) fn genus_from_counts(v: usize, e: usize, f: usize) -> usize {
    let twice = 2 + e as isize - v as isize - f as isize;
    debug_assert!(twice >= 0 && twice % 2 == 0, "Euler characteristic parity");
    (twice / 2) as usize
}

/// Orbits of the face-tracing permutation. Each face is listed starting at
/// its smallest dart; faces are ordered by that dart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSet {
    faces: Vec<Vec<Dart>>,
    face_of: Vec<usize>,
    edge_sets: Vec<Vec<bool>>,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn faces(&self) -> &[Vec<Dart>] {
        &self.faces
    }

    pub fn face(&self, f: usize) -> &[Dart] {
        &self.faces[f]
    }

    pub fn face_of(&self, d: Dart) -> usize {
        self.face_of[d.index()]
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    pub fn contains_edge(&self, f: usize, e: usize) -> bool {
        self.edge_sets[f][e]
    }

    pub fn edge_set(&self, f: usize) -> BTreeSet<usize> {
        self.edge_sets[f]
            .iter()
            .enumerate()
            .filter_map(|(e, &on)| on.then_some(e))
            .collect()
    }

    /// Whether face `f` uses every edge of the graph.
    pub fn spans_all_edges(&self, f: usize) -> bool {
        self.edge_sets[f].iter().all(|&b| b)
    }

    /// Corners of face `f` in trace order, starting with the corner entered
    /// just before the face's first dart.
    pub fn corners(&self, f: usize) -> impl Iterator<Item = Corner> + '_ {
        let face = &self.faces[f];
        (0..face.len()).map(move |i| Corner {
            arrive: face[(i + face.len() - 1) % face.len()].opposite(),
            depart: face[i],
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn theta() -> Graph {
        Graph::new(2, vec![(0, 1), (0, 1), (0, 1)]).unwrap()
    }

    fn k4() -> Graph {
        Graph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    /// K4 drawn in the plane with vertex 0 in the middle of triangle 1 2 3.
    fn planar_k4() -> Embedding {
        let g = k4();
        let dart = |u: usize, v: usize| g.dart_between(u, v).unwrap();
        let rot = vec![
            vec![dart(0, 1), dart(0, 2), dart(0, 3)],
            vec![dart(1, 0), dart(1, 3), dart(1, 2)],
            vec![dart(2, 0), dart(2, 1), dart(2, 3)],
            vec![dart(3, 0), dart(3, 2), dart(3, 1)],
        ];
        Embedding::new(g, rot).unwrap()
    }

    fn d(e: usize, s: u8) -> Dart {
        Dart::new(e, s)
    }

    #[test]
    fn identity_follows_incidence() {
        let emb = Embedding::identity(theta());
        assert_eq!(emb.rotation(0), &[d(0, 0), d(1, 0), d(2, 0)]);
        assert_eq!(emb.rotation(1), &[d(0, 1), d(1, 1), d(2, 1)]);
        let lp = Embedding::identity(Graph::new(1, vec![(0, 0)]).unwrap());
        assert_eq!(lp.rotation(0), &[d(0, 0), d(0, 1)]);
    }

    #[test]
    fn theta_one_face() {
        let emb = Embedding::identity(theta());
        let faces = emb.trace_faces();
        // a1 b2 a3 b1 a2 b3, written as darts.
        assert_eq!(
            faces.faces(),
            &[vec![d(0, 0), d(1, 1), d(2, 0), d(0, 1), d(1, 0), d(2, 1)]]
        );
        assert_eq!(emb.genus().unwrap(), 1);
    }

    #[test]
    fn theta_three_digons() {
        let emb = Embedding::new(
            theta(),
            vec![vec![d(0, 0), d(1, 0), d(2, 0)], vec![d(2, 1), d(1, 1), d(0, 1)]],
        )
        .unwrap();
        let faces = emb.trace_faces();
        assert_eq!(faces.lengths(), vec![2, 2, 2]);
        assert_eq!(faces.face(0), &[d(0, 0), d(2, 1)]);
        assert_eq!(emb.genus().unwrap(), 0);
    }

    #[test]
    fn planar_k4_has_four_faces() {
        let emb = planar_k4();
        let faces = emb.trace_faces();
        assert_eq!(faces.lengths(), vec![3, 3, 3, 3]);
        assert_eq!(emb.genus().unwrap(), 0);
    }

    #[test]
    fn rejects_bad_rotation() {
        let err = Embedding::new(theta(), vec![vec![d(0, 0), d(1, 0)], vec![]]).unwrap_err();
        assert_eq!(err, EmbeddingError::BadRotation { vertex: 0 });
        let err = Embedding::new(theta(), vec![]).unwrap_err();
        assert!(matches!(err, EmbeddingError::VertexCount { .. }));
    }

    #[test]
    fn genus_of_disconnected_graph_fails() {
        let emb = Embedding::identity(Graph::new(3, vec![(0, 1)]).unwrap());
        assert!(matches!(emb.genus(), Err(EmbeddingError::Graph(GraphError::Disconnected))));
        assert_eq!(Embedding::identity(Graph::new(1, vec![]).unwrap()).genus(), Ok(0));
    }

    #[test]
    fn flip_grows_the_digon() {
        // Planar theta; the digon on edges {0, 2} is the face of dart 0.0.
        let emb = Embedding::new(
            theta(),
            vec![vec![d(0, 0), d(1, 0), d(2, 0)], vec![d(2, 1), d(1, 1), d(0, 1)]],
        )
        .unwrap();
        let faces = emb.trace_faces();
        let f = faces.face_of(d(0, 0));
        assert_eq!(faces.edge_set(f), BTreeSet::from([0, 2]));
        let corner = faces
            .corners(f)
            .find(|c| emb.graph().endpoint(c.depart) == 0)
            .unwrap();
        let flipped = emb.flip(d(1, 0), f, corner).unwrap();
        let after = flipped.trace_faces();
        let g = after.face_of(d(1, 0));
        assert_eq!(after.edge_set(g), BTreeSet::from([0, 1, 2]));
        assert_eq!(after.face(g).iter().filter(|x| x.edge() == 1).count(), 2);
        // Both ends of edge 1 touch the digon, so the new face swallows the
        // other two digons as well.
        assert_eq!(after.lengths(), vec![6]);
        assert_eq!(flipped.genus().unwrap(), 1);
    }

    #[test]
    fn flip_errors() {
        let emb = Embedding::identity(theta());
        let faces = emb.trace_faces();
        let corner = faces.corners(0).next().unwrap();
        assert_eq!(
            emb.flip(d(1, 0), 0, corner),
            Err(EmbeddingError::DartOnFace { dart: d(1, 0), face: 0 })
        );
        assert_eq!(emb.flip(d(1, 0), 7, corner), Err(EmbeddingError::NoSuchFace { face: 7 }));

        let planar = planar_k4();
        let faces = planar.trace_faces();
        // Face of dart 0->1 is a triangle through 0, 1 and one other vertex;
        // take a dart at vertex 0 not on it and a corner at a different vertex.
        let f = faces.face_of(d(0, 0));
        let off = planar
            .rotation(0)
            .iter()
            .copied()
            .find(|x| !faces.contains_edge(f, x.edge()))
            .unwrap();
        let wrong = faces
            .corners(f)
            .find(|c| planar.graph().endpoint(c.depart) != 0)
            .unwrap();
        assert!(matches!(
            planar.flip(off, f, wrong),
            Err(EmbeddingError::CornerNotOnFace { .. })
        ));
    }

    #[test]
    fn clockwise_neighbors_of_k4() {
        let emb = Embedding::identity(k4());
        assert_eq!(emb.clockwise_neighbor(0, 1), Ok(2));
        assert_eq!(emb.clockwise_neighbor(0, 3), Ok(1));
        let mut v = 1;
        for _ in 0..3 {
            v = emb.clockwise_neighbor(0, v).unwrap();
        }
        assert_eq!(v, 1);
        assert_eq!(
            emb.clockwise_neighbor(0, 0),
            Err(EmbeddingError::NotSingleEdge { u: 0, v: 0 })
        );
        assert!(Embedding::identity(theta()).clockwise_neighbor(0, 1).is_err());
    }

    #[test]
    fn mirror_preserves_face_lengths() {
        let emb = planar_k4();
        let mut a = emb.trace_faces().lengths();
        let mut b = emb.mirrored().trace_faces().lengths();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }
}
