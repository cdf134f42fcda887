//! Flip-based construction of reporter strand walks.
//!
//! Starting from any rotation system, pick a face `f`. While some edge is
//! missing from `f`, take a missing edge `e` with an end at a vertex of `f`
//! and move that end into a corner of `f`. The face through the moved end
//! contains all of `f` plus `e` twice, and becomes the new `f`. Each edge is
//! moved at most once, and the face count never grows, so starting from a
//! maximum genus embedding ends in one.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::embedding::{genus_from_counts, Corner, Embedding, FaceSet};
use crate::graph::{Dart, Graph, GraphError};
use crate::optimal::{max_genus_exhaustive, SearchError};
use crate::walk::Walk;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReporterError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph has no edges")]
    NoEdges,
    #[error("start embedding belongs to a different graph")]
    ForeignEmbedding,
    #[error(transparent)]
    Search(#[from] SearchError),
}

/// One iteration of the flip loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlipStep {
    pub dart: Dart,
    pub corner: Corner,
    pub edges_before: BTreeSet<usize>,
    pub edges_after: BTreeSet<usize>,
    pub genus_before: usize,
    pub genus_after: usize,
}

#[derive(Debug, Clone)]
pub struct ReporterRun {
    pub embedding: Embedding,
    /// Index of the edge-spanning face in `embedding.trace_faces()`.
    pub face: usize,
    pub walk: Walk,
    pub flips: Vec<FlipStep>,
}

/// Runs the flip loop from `start`, beginning with the face that contains
/// dart `0.0`.
///
/// Choices: the smallest-id edge missing from the face with an end on it;
/// its smaller qualifying dart; the first corner at that dart's vertex in
/// trace order from the face's smallest dart.
pub fn reporter_strand_walk(g: &Graph, start: &Embedding) -> Result<ReporterRun, ReporterError> {
    g.require_connected()?;
    if g.edge_count() == 0 {
        return Err(ReporterError::NoEdges);
    }
    if start.graph() != g {
        return Err(ReporterError::ForeignEmbedding);
    }
    let (v, e) = (g.vertex_count(), g.edge_count());
    let mut emb = start.clone();
    let mut faces = emb.trace_faces();
    let mut face = faces.face_of(Dart::new(0, 0));
    let mut flips = Vec::new();
    loop {
        let on_face = vertices_on_face(g, &faces, face);
        let pick = (0..e)
            .filter(|&edge| !faces.contains_edge(face, edge))
            .find_map(|edge| {
                [Dart::new(edge, 0), Dart::new(edge, 1)]
                    .into_iter()
                    .find(|&d| on_face[g.endpoint(d)])
            });
        let Some(dart) = pick else {
            break;
        };
        let vertex = g.endpoint(dart);
        let corner = faces
            .corners(face)
            .find(|c| g.endpoint(c.depart) == vertex)
            .expect("the vertex lies on the face");
        let next = emb
            .flip_traced(&faces, dart, face, corner)
            .expect("the chosen dart and corner satisfy the flip preconditions");
        let next_faces = next.trace_faces();
        let next_face = next_faces.face_of(dart);
        flips.push(FlipStep {
            dart,
            corner,
            edges_before: faces.edge_set(face),
            edges_after: next_faces.edge_set(next_face),
            genus_before: genus_from_counts(v, e, faces.len()),
            genus_after: genus_from_counts(v, e, next_faces.len()),
        });
        emb = next;
        faces = next_faces;
        face = next_face;
    }
    let walk = Walk::from_darts_unchecked(faces.face(face).to_vec());
    Ok(ReporterRun {
        embedding: emb,
        face,
        walk,
        flips,
    })
}

/// Runs the flip loop from a maximum genus embedding found by exhaustive
/// search over at most `budget` rotation systems.
pub fn reporter_strand_walk_max_genus(g: &Graph, budget: u64) -> Result<ReporterRun, ReporterError> {
    g.require_connected()?;
    let best = max_genus_exhaustive(g, budget)?;
    reporter_strand_walk(g, &best.embedding)
}

fn vertices_on_face(g: &Graph, faces: &FaceSet, face: usize) -> Vec<bool> {
    let mut on = vec![false; g.vertex_count()];
    for &d in faces.face(face) {
        on[g.endpoint(d)] = true;
    }
    on
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::walk::{is_reporter_strand_walk, validate_walk};

    fn d(e: usize, s: u8) -> Dart {
        Dart::new(e, s)
    }

    fn theta() -> Graph {
        Graph::new(2, vec![(0, 1), (0, 1), (0, 1)]).unwrap()
    }

    #[test]
    fn planar_theta_needs_one_flip() {
        let g = theta();
        let planar = Embedding::new(
            g.clone(),
            vec![vec![d(0, 0), d(1, 0), d(2, 0)], vec![d(2, 1), d(1, 1), d(0, 1)]],
        )
        .unwrap();
        let run = reporter_strand_walk(&g, &planar).unwrap();
        assert_eq!(run.flips.len(), 1);
        assert_eq!(run.flips[0].dart.edge(), 1);
        assert_eq!(run.flips[0].edges_before, BTreeSet::from([0, 2]));
        assert_eq!(run.walk.len(), 6);
        assert!(is_reporter_strand_walk(&g, &run.walk));
        assert_eq!(run.embedding.genus().unwrap(), 1);
    }

    #[test]
    fn tree_gets_double_cover() {
        let g = Graph::new(5, vec![(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let run = reporter_strand_walk(&g, &Embedding::identity(g.clone())).unwrap();
        assert_eq!(run.walk.len(), 8);
        assert!(run.flips.is_empty());
        let report = validate_walk(&g, &run.walk);
        assert!(report.is_reporter_strand_walk());
        assert_eq!(report.double_edges.len(), 4);
        assert_eq!(run.embedding.genus().unwrap(), 0);
    }

    #[test]
    fn loops_and_parallel_edges() {
        let g = Graph::new(3, vec![(0, 0), (0, 1), (0, 1), (1, 2), (2, 2), (1, 1)]).unwrap();
        let run = reporter_strand_walk(&g, &Embedding::identity(g.clone())).unwrap();
        assert!(is_reporter_strand_walk(&g, &run.walk));
        assert!(run.flips.len() <= g.edge_count());
    }

    #[test]
    fn rejects_disconnected_and_edgeless() {
        let g = Graph::new(2, vec![]).unwrap();
        assert_eq!(
            reporter_strand_walk(&g, &Embedding::identity(g.clone())).unwrap_err(),
            ReporterError::Graph(GraphError::Disconnected)
        );
        let single = Graph::new(1, vec![]).unwrap();
        assert_eq!(
            reporter_strand_walk(&single, &Embedding::identity(single.clone())).unwrap_err(),
            ReporterError::NoEdges
        );
        let other = Embedding::identity(theta());
        let tri = Graph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(
            reporter_strand_walk(&tri, &other).unwrap_err(),
            ReporterError::ForeignEmbedding
        );
    }

    #[test]
    fn max_genus_start_on_theta() {
        let run = reporter_strand_walk_max_genus(&theta(), 1000).unwrap();
        assert_eq!(run.embedding.genus().unwrap(), 1);
        assert_eq!(run.walk.len(), 6);
        assert_eq!(run.embedding.trace_faces().len(), 1);
    }
}
