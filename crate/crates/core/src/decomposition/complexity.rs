use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::assemble::Decomposition;
use super::marking::{omega_neighborhood, Marking};
use super::DecompositionError;
use crate::graph::fold;

/// `(c1, …, c7)`, compared lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ComplexityTuple(pub [i64; 7]);

impl ComplexityTuple {
    /// `c_i`, one-based.
    pub fn c(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    /// `(c1, …, c5)`.
    pub fn primary(&self) -> [i64; 5] {
        let c = self.0;
        [c[0], c[1], c[2], c[3], c[4]]
    }
}

impl fmt::Display for ComplexityTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Complexity {
    pub tuple: ComplexityTuple,
    pub c_star: i64,
}

/// `c* = b(Θ) + cc(Δ) − |E|`.
pub fn potential(d: &Decomposition) -> i64 {
    d.theta_betti() + d.delta.graph.components() as i64 - d.delta.loop_count() as i64
}

pub fn complexity(d: &Decomposition, omega: &Marking) -> Result<Complexity, DecompositionError> {
    let theta = &d.theta.graph;
    let b = d.theta_betti();
    let c1 = b - d.special_count() as i64;
    let c2 = b + d.delta.graph.euler();

    let trace = fold(theta);
    let folded = &trace.result;
    let delta_f: BTreeSet<_> =
        d.delta_bar(&d.delta_all()).edges.iter().map(|&e| folded.representative(trace.map_edge(e))).collect();
    let c3 = folded.geometric_edges().filter(|e| !delta_f.contains(e)).count() as i64;
    let c4 = folded.geometric_edge_count() as i64;
    let c5 = d.delta.graph.geometric_edge_count() as i64;
    let c6 = theta.geometric_edge_count() as i64;
    let (_, tilde3) = omega_neighborhood(d, omega, 3)?;
    let c7 = tilde3.geometric_edges(&d.delta.graph).filter(|e| !d.forest.edges.contains(e)).count() as i64;
    Ok(Complexity { tuple: ComplexityTuple([c1, c2, c3, c4, c5, c6, c7]), c_star: potential(d) })
}
