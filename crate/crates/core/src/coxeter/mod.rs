//! Words over a Coxeter generating set and the word problem.
//!
//! The engine is Tits' rewriting system: cancellations `ss -> 1` and
//! homotopies `γ_st(m) -> γ_ts(m)`. A word is non-reduced exactly when some
//! sequence of homotopies exposes a cancellation, so [`reduce`] alternates
//! between exploring the homotopy class of the current word and cancelling.

mod alternating;
mod bounds;
mod matrix;
mod tits;
mod word;

pub use alternating::{
    alternating_segments, alternating_word, cancellation_sites, find_almost_relator, homotopy_sites, kappa,
    AlmostRelator, HomotopySite, Segment,
};
pub use bounds::{mod2_rank_bound, petersen_thom_bound, petersen_thom_sum, theorem_applies, theorem_threshold};
pub use matrix::{CoxeterMatrix, MatrixFile, Order};
pub use tits::{
    equal_in_group, equal_in_group_with, is_identity, is_identity_with, is_reduced, reduce, reduce_with, tits_closure,
    TitsClosure, DEFAULT_BUDGET,
};
pub use word::{Generator, Word};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoxeterError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown generator in {0:?}")]
    UnknownGenerator(String),
    #[error("invalid arguments: {0}")]
    InvalidArguments(String),
    #[error("indeterminate: budget of {budget} words exhausted")]
    Indeterminate { budget: usize },
    #[error("word is not reduced")]
    NotReduced,
}

impl CoxeterError {
    pub fn is_indeterminate(&self) -> bool {
        matches!(self, CoxeterError::Indeterminate { .. })
    }
}
