//! `S`-labeled graphs, Stallings folds and AO-moves.
//!
//! Edges come in inverse pairs. In the involutive alphabet (Coxeter
//! generators) both edges of a pair carry the same label; in the free
//! alphabet the inverse edge carries the inverse letter.

mod ao;
mod fold;
pub mod io;
mod labeled;

pub use ao::{ao_move, AoTrace};
pub use fold::{fold, fold_based, fold_once, fold_with, FoldStep, FoldTrace};
pub use labeled::{
    accepts, based_isomorphic, pi1_generators, rose, wedge_graph, wedge_of_words, AlphabetMode, BasedGraph, Edge,
    EdgeId, GraphPath, LabeledGraph, Letter, VertexId,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("malformed graph: {0}")]
    Malformed(String),
    #[error("invalid arguments: {0}")]
    InvalidArguments(String),
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("invalid fold: {0}")]
    InvalidFold(String),
    #[error("invalid move: {0}")]
    InvalidMove(String),
    #[error("move rejected: {0}")]
    Rejected(String),
}
