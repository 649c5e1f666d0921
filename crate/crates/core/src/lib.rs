//! Rank questions for Coxeter groups, done by machine.
//!
//! * [`coxeter`]: words, the Tits word problem, alternating factors and the
//!   elementary rank lower bounds.
//! * [`graph`]: `S`-labeled graphs, Stallings folds and AO-moves.
//! * [`decomposition`]: special graphs, decompositions, markings, tameness
//!   and the complexity used in the rank argument.
//! * [`family`]: the rank-five family whose rank drops below the number of
//!   generators, with certified witnesses.
//! * [`fixtures`]: hand-built decompositions used by tests and examples.

pub mod commands;
pub mod coxeter;
pub mod decomposition;
pub mod family;
pub mod fixtures;
pub mod graph;
