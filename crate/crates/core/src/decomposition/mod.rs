//! Special graphs, decompositions `(M, Γ, Δ, F, p, Θ)`, markings, tameness
//! and complexity.
//!
//! Ids: `Γ` keeps its own vertex and edge ids inside `Θ`. `Δ` elements
//! outside `F` are shifted by an offset (the next free `Γ` id), and `F`
//! elements are replaced by their `p`-images. So every `Θ` id below the
//! offset is a `Γ` element.

mod assemble;
mod complexity;
mod halve;
pub mod io;
mod marking;
mod report;
mod special;
mod tame;
mod unfold;

pub use assemble::{assemble, Attachment, Decomposition, Witnesses};
pub use complexity::{complexity, potential, Complexity, ComplexityTuple};
pub use halve::{halve_special_type, HalvingResult};
pub use marking::{neighborhood, omega4_violations, omega_neighborhood, saturate_marking, Marking};
pub use report::{Check, Status};
pub use special::{validate_special, SpecialGraph, SpecialPath, SpecialReport};
pub use tame::{check_tame, forest_check, inequality_chain, o3_coverage_check, ChainStep, TameReport};
pub use unfold::{unfold_components, unfold_isolated, unfold_merge, UnfoldTrace};

use std::collections::BTreeSet;

use thiserror::Error;

use crate::coxeter::CoxeterError;
use crate::graph::{EdgeId, GraphError, LabeledGraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompositionError {
    #[error("malformed decomposition: {0}")]
    Malformed(String),
    #[error("invalid attachment: {0}")]
    InvalidAttachment(String),
    #[error("invalid arguments: {0}")]
    InvalidArguments(String),
    #[error("invalid state: {0}")]
    InvalidState(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invariant violated: {0}")]
    InvariantBreach(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
}

/// A subgraph given by ids of a parent graph. Edge sets are kept closed
/// under inversion.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IdSet {
    pub vertices: BTreeSet<VertexId>,
    pub edges: BTreeSet<EdgeId>,
}

impl IdSet {
    pub fn new() -> Self {
        IdSet::default()
    }

    /// Builds the set from edges of `parent` (either orientation) plus extra
    /// vertices; endpoints and inverses are added.
    pub fn closed(
        parent: &LabeledGraph,
        vertices: impl IntoIterator<Item = VertexId>,
        edges: impl IntoIterator<Item = EdgeId>,
    ) -> Self {
        let mut out = IdSet { vertices: vertices.into_iter().collect(), edges: BTreeSet::new() };
        for e in edges {
            out.add_edge(parent, e);
        }
        out
    }

    pub fn add_edge(&mut self, parent: &LabeledGraph, e: EdgeId) {
        let edge = parent.edge(e);
        self.edges.insert(e);
        self.edges.insert(edge.inv);
        self.vertices.insert(edge.alpha);
        self.vertices.insert(edge.omega);
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty() && self.edges.is_empty()
    }

    pub fn geometric_edge_count(&self) -> usize {
        self.edges.len() / 2
    }

    pub fn euler(&self) -> i64 {
        self.vertices.len() as i64 - self.geometric_edge_count() as i64
    }

    /// The forward (smaller id) edge of each pair.
    pub fn geometric_edges<'a>(&'a self, parent: &'a LabeledGraph) -> impl Iterator<Item = EdgeId> + 'a {
        self.edges.iter().copied().filter(move |&e| e < parent.inv(e))
    }

    pub fn graph(&self, parent: &LabeledGraph) -> LabeledGraph {
        parent.subgraph(&self.vertices, &self.edges)
    }

    pub fn is_subset(&self, other: &IdSet) -> bool {
        self.vertices.is_subset(&other.vertices) && self.edges.is_subset(&other.edges)
    }

    pub fn union(&self, other: &IdSet) -> IdSet {
        IdSet {
            vertices: self.vertices.union(&other.vertices).copied().collect(),
            edges: self.edges.union(&other.edges).copied().collect(),
        }
    }
}
