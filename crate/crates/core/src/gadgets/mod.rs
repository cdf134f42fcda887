//! Gadget graphs reducing hamilton cycles in cubic planar graphs to Chinese
//! postman reporter strand walks.
//!
//! From a 3-connected cubic plane graph `N`:
//!
//! * `P` replaces every edge `uv` by the edge gadget `P_uv` on
//!   `a(u,v), d(u,v), a(v,u), d(v,u)`;
//! * `Q` subdivides every `a(u,v) d(u,v)` into `a b c d` and adds the
//!   bracing edge `c(u,v) b(v,w)` with `w` the clockwise neighbor of `u`
//!   around `v`;
//! * `R` replaces every `b(u,v)` by a copy of the 19-vertex vertex gadget B,
//!   itself two mirrored copies of the 9-vertex gadget A plus a vertex `q`.
//!
//! Each builder returns the graph with a plane rotation system and a
//! [`GadgetMap`] naming every vertex, so walks move between stages by name.

mod build;
mod names;
mod passages;

pub use build::{build_a, build_b, build_p, build_q, build_r, check_stage, StageReport};
pub use names::{NameError, NodeName, Part, Twin};
pub use passages::{
    classify_a_copy, classify_b_copy, classify_p_passages, cprs_p_to_hamilton, hamilton_to_cprs_p,
    lift_p_to_r, normalize_p, project_r_to_p, wt1, wt2, AForm, Form, PassageForm,
};

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::embedding::{Embedding, EmbeddingError};
use crate::graph::{Graph, GraphError};
use crate::optimal::SearchError;
use crate::walk::{Walk, WalkError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Stage {
    P,
    Q,
    R,
    /// Cubic completion of gadget A.
    A,
    /// Cubic completion of gadget B.
    B,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Stage::P => "P",
            Stage::Q => "Q",
            Stage::R => "R",
            Stage::A => "A+",
            Stage::B => "B+",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GadgetError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error(transparent)]
    Walk(#[from] WalkError),
    #[error("embedding belongs to a different graph")]
    ForeignEmbedding,
    #[error("input graph is not cubic")]
    NotCubic,
    #[error("input graph is not simple")]
    NotSimple,
    #[error("input graph is not 3-connected")]
    NotThreeConnected,
    #[error("input embedding has genus {genus}, expected a plane embedding")]
    NotPlane { genus: usize },
    #[error("expected a {expected} gadget, got {found}")]
    WrongStage { expected: Stage, found: Stage },
    #[error("gadgets were built from different input graphs")]
    BaseMismatch,
    #[error("not a hamilton cycle of the input graph")]
    NotHamiltonCycle,
    #[error("walk is not a Chinese postman reporter strand walk")]
    NotCprsWalk,
    #[error("walk passes through {subgraph} in no admissible form")]
    Nonconforming { subgraph: String },
    #[error("edge {edge} is not used exactly once")]
    NotSolo { edge: String },
    #[error("walk has no vertex named {name}")]
    UnknownName { name: String },
}

/// Names of the vertices of a gadget graph, plus the plane graph it was
/// built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetMap {
    stage: Stage,
    names: Vec<NodeName>,
    ids: HashMap<NodeName, usize>,
    base: Option<Embedding>,
}

impl GadgetMap {
    pub(crate) fn new(stage: Stage, names: Vec<NodeName>, base: Option<Embedding>) -> Self {
        let ids = names.iter().enumerate().map(|(i, &n)| (n, i)).collect();
        GadgetMap {
            stage,
            names,
            ids,
            base,
        }
    }

    pub fn stage(&self) -> Stage {
        self.stage
    }

    pub fn names(&self) -> &[NodeName] {
        &self.names
    }

    pub fn name(&self, v: usize) -> NodeName {
        self.names[v]
    }

    pub fn id(&self, name: &NodeName) -> Option<usize> {
        self.ids.get(name).copied()
    }

    /// The plane embedding of the input graph `N`; absent for A and B.
    pub fn base(&self) -> Option<&Embedding> {
        self.base.as_ref()
    }

    /// Names of both ends of edge `e`.
    pub fn edge_name(&self, g: &Graph, e: usize) -> (NodeName, NodeName) {
        let (u, v) = g.edge(e);
        (self.names[u], self.names[v])
    }

    /// The edge joining two named vertices.
    pub fn edge_between(&self, g: &Graph, a: &NodeName, b: &NodeName) -> Option<usize> {
        g.dart_between(self.id(a)?, self.id(b)?).map(|d| d.edge())
    }
}

/// A constructed graph with its plane rotation system and vertex names.
#[derive(Debug, Clone)]
pub struct Gadget {
    pub graph: Graph,
    pub embedding: Embedding,
    pub map: GadgetMap,
}

impl Gadget {
    /// Vertex names along a walk of this gadget.
    pub fn walk_names(&self, w: &Walk) -> Vec<NodeName> {
        w.vertices(&self.graph).into_iter().map(|v| self.map.name(v)).collect()
    }

    /// The closed walk through the named vertices.
    pub fn walk_from_names(&self, names: &[NodeName]) -> Result<Walk, GadgetError> {
        let ids = names
            .iter()
            .map(|n| {
                self.map
                    .id(n)
                    .ok_or_else(|| GadgetError::UnknownName { name: n.to_string() })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Walk::from_vertices(&self.graph, &ids)?)
    }

    pub(crate) fn require(&self, stage: Stage) -> Result<(), GadgetError> {
        if self.map.stage == stage {
            Ok(())
        } else {
            Err(GadgetError::WrongStage {
                expected: stage,
                found: self.map.stage,
            })
        }
    }
}
