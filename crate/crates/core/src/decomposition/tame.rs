use std::collections::BTreeSet;

use serde::Serialize;

use super::assemble::{Decomposition, Witnesses};
use super::complexity::potential;
use super::marking::{omega4_violations, omega_neighborhood, Marking};
use super::report::{find, Check, Status};
use super::DecompositionError;
use crate::coxeter::{equal_in_group, Order, Word};
use crate::graph::EdgeId;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TameReport {
    pub checks: Vec<Check>,
    pub c_star: i64,
}

impl TameReport {
    /// Every condition passed, including the surjectivity witnesses.
    pub fn is_tame(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    /// No condition failed outright.
    pub fn no_failures(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn check(&self, name: &str) -> &Check {
        find(&self.checks, name)
    }
}

fn theta_check(d: &Decomposition, witnesses: Option<&Witnesses>) -> Check {
    let name = "Θ".to_string();
    let g = &d.theta.graph;
    if !g.is_connected() {
        return Check { name, status: Status::Fail, details: vec!["Θ is not connected".into()] };
    }
    let Some(witnesses) = witnesses else {
        return Check { name, status: Status::NotVerified, details: vec!["no witnesses supplied".into()] };
    };
    let mut details = Vec::new();
    for s in 0..d.matrix.rank() {
        let sname = d.matrix.name(s);
        let Some(path) = witnesses.get(&s) else {
            details.push(format!("no witness for {sname}"));
            continue;
        };
        if path.validate(g).is_err() || path.start != d.theta.basepoint || !path.is_closed(g) {
            details.push(format!("witness for {sname} is not a closed path at the basepoint"));
            continue;
        }
        match equal_in_group(&path.word(g), &Word::from(vec![s]), &d.matrix) {
            Ok(true) => {}
            Ok(false) => details.push(format!("witness for {sname} does not read {sname}")),
            Err(e) => details.push(format!("witness for {sname}: {e}")),
        }
    }
    let status = if details.is_empty() { Status::Pass } else { Status::NotVerified };
    Check { name, status, details }
}

/// Evaluates every tameness condition of `(D, Ω)`. Surjectivity of
/// `π1(Θ) -> W` is certified only through `witnesses`.
pub fn check_tame(
    d: &Decomposition,
    omega: &Marking,
    witnesses: Option<&Witnesses>,
) -> Result<TameReport, DecompositionError> {
    let (_, tilde3) = omega_neighborhood(d, omega, 3)?;
    let dg = &d.delta.graph;
    let c_star = potential(d);

    let mut o1 = Vec::new();
    let fv: Vec<_> = d.forest.vertices.iter().copied().collect();
    for (i, &x) in fv.iter().enumerate() {
        for &y in &fv[i + 1..] {
            if d.attach.vertices[&x] == d.attach.vertices[&y]
                && !(tilde3.vertices.contains(&x) && tilde3.vertices.contains(&y))
            {
                o1.push(format!("vertices {x} and {y} share an image outside Ω̃₃"));
            }
        }
    }

    let o2 = d
        .forest
        .geometric_edges(dg)
        .filter(|e| !tilde3.edges.contains(e))
        .map(|e| format!("F edge {e} is outside Ω̃₃"))
        .collect();

    let mut o3 = Vec::new();
    let budget = 8 * (dg.euler() - d.delta_bar(&d.delta_all()).euler() - omega.omega.euler());
    let size = omega.omega.geometric_edge_count() as i64;
    if size > budget {
        o3.push(format!("|EΩ| = {size} exceeds 8(χ(Δ) − χ(Δ̄) − χ(Ω)) = {budget}"));
    }

    let o4 = omega4_violations(d, omega, 3).into_iter().map(|p| format!("short path {p} leaves Ω")).collect();

    let mut star = Vec::new();
    for (i, sp) in d.delta.paths.iter().enumerate() {
        let images: BTreeSet<EdgeId> =
            sp.path.edges.iter().map(|&e| d.theta.graph.representative(d.delta_edge_bar(e))).collect();
        if images.len() != sp.len() {
            star.push(format!("path {i} has {} edges but its image has {}", sp.len(), images.len()));
        }
    }

    let mut m = Vec::new();
    let needed = if c_star >= 0 {
        if c_star >= 120 {
            u128::MAX
        } else {
            6u128 << c_star
        }
    } else {
        let k = (-c_star).min(8) as u32;
        6u128.div_ceil(1 << k)
    };
    for (s, t, order) in d.matrix.pairs() {
        if !order.at_least(needed) {
            let shown = match order {
                Order::Finite(x) => x.to_string(),
                Order::Infinite => "∞".into(),
            };
            m.push(format!("m({}, {}) = {shown} is below 6·2^{c_star}", d.matrix.name(s), d.matrix.name(t)));
        }
    }

    Ok(TameReport {
        checks: vec![
            theta_check(d, witnesses),
            Check::from_details("Ω1", o1),
            Check::from_details("Ω2", o2),
            Check::from_details("Ω3", o3),
            Check::from_details("Ω4", o4),
            Check::from_details("Δ̄*", star),
            Check::from_details("M", m),
        ],
        c_star,
    })
}

/// One step of the counting argument bounding `|EΩ|` by the potential.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainStep {
    pub statement: String,
    pub lhs: i64,
    pub relation: &'static str,
    pub rhs: i64,
    pub holds: bool,
}

fn step(statement: &str, lhs: i64, relation: &'static str, rhs: i64) -> ChainStep {
    let holds = match relation {
        "=" => lhs == rhs,
        "<" => lhs < rhs,
        _ => lhs <= rhs,
    };
    ChainStep { statement: statement.to_string(), lhs, relation, rhs, holds }
}

/// The inequalities leading from `Ω3` to `|EΩ| ≤ 16(c* − 1) − 8`, each
/// evaluated on the data. Steps that need `Ω ≠ ∅` are left out otherwise.
pub fn inequality_chain(d: &Decomposition, omega: &Marking) -> Vec<ChainStep> {
    let dg = &d.delta.graph;
    let theta = &d.theta.graph;
    let e_omega = omega.omega.geometric_edge_count() as i64;
    let chi_delta = dg.euler();
    let chi_delta_bar = d.delta_bar(&d.delta_all()).euler();
    let minus = d.delta.without_loops();
    let image = d.delta_minus_loops_image().graph(theta);
    let omega_graph = omega.omega.graph(theta);
    let loops = d.delta.loop_count() as i64;
    let cc = dg.components() as i64;
    let b = d.theta_betti();
    let c_star = potential(d);

    let mut out = vec![
        step("|EΩ| ≤ 8(χ(Δ) − χ(Δ̄) − χ(Ω))", e_omega, "≤", 8 * (chi_delta - chi_delta_bar - omega.omega.euler())),
        step("χ(Δ) − χ(Δ̄) = χ(Δ∖E) − χ(Δ̄∖E)", chi_delta - chi_delta_bar, "=", minus.euler() - image.euler()),
        step("cc(Δ∖E) = cc(Δ)", minus.components() as i64, "=", cc),
        step("b(Δ̄∖E) ≤ b(Θ) − |E|", image.betti(), "≤", b - loops),
    ];
    if omega.omega.is_empty() {
        return out;
    }
    out.extend([
        step(
            "χ(Δ∖E) − χ(Δ̄∖E) − χ(Ω) ≤ cc(Δ∖E) + b(Δ̄∖E) − 1 + b(Ω) − 1",
            minus.euler() - image.euler() - omega.omega.euler(),
            "≤",
            minus.components() as i64 + image.betti() - 1 + omega_graph.betti() - 1,
        ),
        step("b(Ω) ≤ b(Θ) − |E|", omega_graph.betti(), "≤", b - loops),
        step("|EΩ| ≤ 8cc(Δ) + 16(b(Θ) − |E| − 1)", e_omega, "≤", 8 * cc + 16 * (b - loops - 1)),
        step("8cc(Δ) + 16(b(Θ) − |E| − 1) ≤ 16(c* − 1) − 8", 8 * cc + 16 * (b - loops - 1), "≤", 16 * (c_star - 1) - 8),
    ]);
    if (0..=40).contains(&c_star) {
        out.push(step("|EΩ| + 8 < 6·2^c* − 1", e_omega + 8, "<", 6 * (1i64 << c_star) - 1));
    }
    out
}

fn require_no_failures(d: &Decomposition, omega: &Marking) -> Result<(), DecompositionError> {
    let report = check_tame(d, omega, None)?;
    if !report.no_failures() {
        let failed: Vec<&str> =
            report.checks.iter().filter(|c| c.status == Status::Fail).map(|c| c.name.as_str()).collect();
        return Err(DecompositionError::Precondition(format!("not tame: {} fail", failed.join(", "))));
    }
    Ok(())
}

/// `Ω̃₃` and `F` are forests. Refuses inputs that fail a tameness condition.
pub fn forest_check(d: &Decomposition, omega: &Marking) -> Result<bool, DecompositionError> {
    require_no_failures(d, omega)?;
    let (_, tilde3) = omega_neighborhood(d, omega, 3)?;
    Ok(tilde3.graph(&d.delta.graph).betti() == 0 && d.forest_is_forest())
}

/// No special path has all of its inner edges in `Ω̃₃`. Refuses inputs
/// that fail a tameness condition.
pub fn o3_coverage_check(d: &Decomposition, omega: &Marking) -> Result<bool, DecompositionError> {
    require_no_failures(d, omega)?;
    let (_, tilde3) = omega_neighborhood(d, omega, 3)?;
    Ok(d.delta.paths.iter().all(|sp| {
        let n = sp.len();
        n >= 2 && sp.path.edges[1..n - 1].iter().any(|e| !tilde3.edges.contains(e))
    }))
}
