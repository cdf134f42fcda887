//! Edge-outer orientable embeddings and reporter strand walks.
//!
//! A reporter strand walk of a connected graph is a closed walk that uses
//! every edge, and occurs as the boundary of one face of some orientable
//! embedding. This crate builds such walks, computes exact shortest ones on
//! small graphs, and constructs the gadget graphs that reduce hamilton cycles
//! in cubic planar graphs to Chinese postman reporter strand walks.

pub mod connectivity;
pub mod embedding;
pub mod format;
pub mod gadgets;
pub mod graph;
pub mod optimal;
pub mod reporter;
pub mod walk;

pub use embedding::{Corner, Embedding, EmbeddingError, FaceSet};
pub use graph::{Dart, DegreeProfile, Graph, GraphError};
pub use walk::{is_reporter_strand_walk, realize_as_face, rot_graph, validate_walk, RotGraph, Walk, WalkError, WalkReport};
