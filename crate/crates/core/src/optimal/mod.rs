//! Exact solvers for small graphs.
//!
//! Everything here is exponential in the worst case and guarded by an
//! explicit budget; running out of budget is reported as
//! [`SearchError::BudgetExceeded`], never as a wrong answer.

mod cprs;
mod hamilton;
mod postman;
mod search;

pub use cprs::{cprs_trace, enumerate_cprs, is_cprs_walk, perfect_matchings, solo_cycles, CprsCandidate, TraceOutcome};
pub use hamilton::hamilton_cycle;
pub use postman::{chinese_postman_length, MAX_ODD_VERTICES};
pub use search::{exact_srs, max_genus_exhaustive, rotation_system_count, MaxGenus, SrsWitness};

use thiserror::Error;

use crate::graph::GraphError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("search needs {required} steps, budget is {limit}")]
    BudgetExceeded { required: u64, limit: u64 },
    #[error("graph has {count} odd-degree vertices, at most {max} supported")]
    TooManyOddVertices { count: usize, max: usize },
    #[error("graph has no edges")]
    NoEdges,
    #[error("graph is not cubic")]
    NotCubic,
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("edge set is not a perfect matching")]
    NotPerfectMatching,
    #[error("expected {expected} cycle orientations, got {given}")]
    OrientationCount { expected: usize, given: usize },
}
