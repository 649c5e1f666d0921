use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::report::{find, Check};
use super::DecompositionError;
use crate::coxeter::{CoxeterMatrix, Generator};
use crate::graph::{AlphabetMode, EdgeId, GraphPath, LabeledGraph, VertexId};

/// A distinguished path of `Δ` and its type `{s, t}` with `s < t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialPath {
    pub path: GraphPath,
    pub pair: (Generator, Generator),
}

impl SpecialPath {
    pub fn new(path: GraphPath, s: Generator, t: Generator) -> Self {
        SpecialPath { path, pair: (s.min(t), s.max(t)) }
    }

    pub fn len(&self) -> usize {
        self.path.len()
    }

    pub fn is_empty(&self) -> bool {
        self.path.is_empty()
    }

    pub fn has_type(&self, s: Generator, t: Generator) -> bool {
        self.pair == (s.min(t), s.max(t))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialGraph {
    pub graph: LabeledGraph,
    pub paths: Vec<SpecialPath>,
}

impl SpecialGraph {
    pub fn new(graph: LabeledGraph, paths: Vec<SpecialPath>) -> Result<Self, DecompositionError> {
        if graph.mode() != AlphabetMode::Involutive {
            return Err(DecompositionError::Malformed("special graphs use the involutive alphabet".into()));
        }
        for (i, p) in paths.iter().enumerate() {
            p.path.validate(&graph).map_err(|e| DecompositionError::Malformed(format!("special path {i}: {e}")))?;
            if p.pair.0 == p.pair.1 || p.pair.1 >= graph.alphabet().len() {
                return Err(DecompositionError::Malformed(format!("special path {i} has a bad type")));
            }
        }
        Ok(SpecialGraph { graph, paths })
    }

    pub fn empty(alphabet: &[String]) -> Self {
        SpecialGraph { graph: LabeledGraph::involutive(alphabet), paths: Vec::new() }
    }

    /// Every loop edge, both orientations.
    pub fn loop_edges(&self) -> BTreeSet<EdgeId> {
        self.graph.edge_ids().filter(|&e| self.graph.is_loop(e)).collect()
    }

    /// `|E|`, counted geometrically.
    pub fn loop_count(&self) -> usize {
        self.loop_edges().len() / 2
    }

    /// `Δ∖E`.
    pub fn without_loops(&self) -> LabeledGraph {
        let mut g = self.graph.clone();
        for e in self.loop_edges() {
            g.remove_edge_pair(e);
        }
        g
    }

    /// Loop edges at `v`, one orientation each.
    pub fn loops_at(&self, v: VertexId) -> Vec<EdgeId> {
        self.graph.out_edges(v).filter(|&e| self.graph.is_loop(e) && e < self.graph.inv(e)).collect()
    }

    /// Loops `(e, f)` at `α(δ)`, `ω(δ)` such that `δ f δ⁻¹ e` reads
    /// `(st)^m` for a finite `m = m_st`, together with `{s, t}`.
    pub fn relator_loops(&self, index: usize, matrix: &CoxeterMatrix) -> Vec<(EdgeId, EdgeId, (Generator, Generator))> {
        let g = &self.graph;
        let delta = &self.paths[index].path;
        let word = delta.word(g);
        let mut out = Vec::new();
        if delta.is_empty() {
            return out;
        }
        for f in self.loops_at(delta.omega(g)) {
            for e in self.loops_at(delta.alpha()) {
                let mut full: Vec<Generator> = word.letters().to_vec();
                full.push(g.label(f).generator);
                full.extend(word.letters().iter().rev());
                full.push(g.label(e).generator);
                let (s, t) = (full[0], full[1]);
                if s == t || !full.iter().enumerate().all(|(i, &x)| x == if i % 2 == 0 { s } else { t }) {
                    continue;
                }
                if matrix.entry(s, t).finite() == Some((full.len() / 2) as u32) {
                    out.push((e, f, (s.min(t), s.max(t))));
                }
            }
        }
        out
    }
}

/// Outcome of checking `Δ1`–`Δ6`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpecialReport {
    pub checks: Vec<Check>,
    /// Configurations accepted but worth a look (two shared extremal edges).
    pub flags: Vec<String>,
}

impl SpecialReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn check(&self, name: &str) -> &Check {
        find(&self.checks, name)
    }

    pub fn failed(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.passed()).map(|c| c.name.as_str()).collect()
    }
}

fn is_simple_or_closed(g: &LabeledGraph, p: &GraphPath) -> bool {
    if p.is_empty() {
        return false;
    }
    let vs = p.vertices(g);
    let body = if vs.first() == vs.last() { &vs[..vs.len() - 1] } else { &vs[..] };
    body.iter().collect::<BTreeSet<_>>().len() == body.len()
}

fn extremal_edges(g: &LabeledGraph, p: &GraphPath) -> BTreeSet<EdgeId> {
    [p.edges.first(), p.edges.last()].into_iter().flatten().map(|&e| g.representative(e)).collect()
}

fn intersection_problems(
    g: &LabeledGraph,
    (i, a): (usize, &GraphPath),
    (j, b): (usize, &GraphPath),
    details: &mut Vec<String>,
    flags: &mut Vec<String>,
) {
    let va: BTreeSet<VertexId> = a.vertices(g).into_iter().collect();
    let vb: BTreeSet<VertexId> = b.vertices(g).into_iter().collect();
    let ea: BTreeSet<EdgeId> = a.edges.iter().map(|&e| g.representative(e)).collect();
    let eb: BTreeSet<EdgeId> = b.edges.iter().map(|&e| g.representative(e)).collect();
    let shared_v: Vec<VertexId> = va.intersection(&vb).copied().collect();
    let shared_e: Vec<EdgeId> = ea.intersection(&eb).copied().collect();
    if shared_v.is_empty() {
        return;
    }
    let ext_a: BTreeSet<VertexId> = [a.alpha(), a.omega(g)].into();
    let ext_b: BTreeSet<VertexId> = [b.alpha(), b.omega(g)].into();
    let (xa, xb) = (extremal_edges(g, a), extremal_edges(g, b));

    // components of the intersection
    let mut comp: BTreeMap<VertexId, VertexId> = shared_v.iter().map(|&v| (v, v)).collect();
    fn root(comp: &BTreeMap<VertexId, VertexId>, mut v: VertexId) -> VertexId {
        while comp[&v] != v {
            v = comp[&v];
        }
        v
    }
    for &e in &shared_e {
        let (x, y) = (root(&comp, g.alpha(e)), root(&comp, g.omega(e)));
        comp.insert(x.max(y), x.min(y));
    }
    let mut groups: BTreeMap<VertexId, (Vec<VertexId>, Vec<EdgeId>)> = BTreeMap::new();
    for &v in &shared_v {
        groups.entry(root(&comp, v)).or_default().0.push(v);
    }
    for &e in &shared_e {
        groups.entry(root(&comp, g.alpha(e))).or_default().1.push(e);
    }
    for (vs, es) in groups.values() {
        if !vs.iter().any(|v| ext_a.contains(v) && ext_b.contains(v)) {
            details.push(format!("paths {i} and {j} meet away from a common extremal vertex at {vs:?}"));
        }
        for e in es {
            if !xa.contains(e) || !xb.contains(e) {
                details.push(format!("paths {i} and {j} share the non-extremal edge {e}"));
            }
        }
        if es.len() > 2 {
            details.push(format!("paths {i} and {j} share {} edges in one piece", es.len()));
        } else if es.len() == 2 {
            flags.push(format!("paths {i} and {j} share two extremal edges {es:?}"));
        }
    }
}

/// Checks `Δ1`–`Δ6` and that every type has a finite entry in `matrix`.
pub fn validate_special(delta: &SpecialGraph, matrix: &CoxeterMatrix) -> SpecialReport {
    let g = &delta.graph;
    let paths = &delta.paths;
    let mut flags = Vec::new();

    let d1 = paths
        .iter()
        .enumerate()
        .filter(|(_, p)| p.len() < 5)
        .map(|(i, p)| format!("path {i} has length {}", p.len()))
        .collect();

    let mut d2 = Vec::new();
    let covered: BTreeSet<EdgeId> =
        paths.iter().flat_map(|p| p.path.edges.iter().map(|&e| g.representative(e))).collect();
    for e in g.geometric_edges() {
        if !g.is_loop(e) && !covered.contains(&e) {
            d2.push(format!("edge {e} lies on no special path"));
        }
    }
    for v in g.vertices() {
        if g.valence(v) == 0 {
            d2.push(format!("vertex {v} is isolated"));
        }
    }

    let d3 = paths
        .iter()
        .enumerate()
        .filter(|(_, p)| !is_simple_or_closed(g, &p.path))
        .map(|(i, _)| format!("path {i} is neither simple nor simple closed"))
        .collect();

    let mut d4 = Vec::new();
    for i in 0..paths.len() {
        for j in i + 1..paths.len() {
            intersection_problems(g, (i, &paths[i].path), (j, &paths[j].path), &mut d4, &mut flags);
        }
    }

    let mut d5 = Vec::new();
    for l in g.geometric_edges().filter(|&e| g.is_loop(e)) {
        let v = g.alpha(l);
        for (i, p) in paths.iter().enumerate() {
            let vs = p.path.vertices(g);
            if vs.contains(&v) && v != p.path.alpha() && v != p.path.omega(g) {
                d5.push(format!("loop {l} sits at the inner vertex {v} of path {i}"));
            }
        }
    }

    let mut d6 = Vec::new();
    for (i, p) in paths.iter().enumerate() {
        let found = delta.relator_loops(i, matrix);
        if found.is_empty() {
            d6.push(format!("path {i} and its end loops do not read a relator"));
        } else if !found.iter().any(|&(_, _, pair)| pair == p.pair) {
            d6.push(format!(
                "path {i} is declared of type {{{}, {}}} but reads another relator",
                matrix.name(p.pair.0),
                matrix.name(p.pair.1)
            ));
        }
    }

    SpecialReport {
        checks: vec![
            Check::from_details("Δ1", d1),
            Check::from_details("Δ2", d2),
            Check::from_details("Δ3", d3),
            Check::from_details("Δ4", d4),
            Check::from_details("Δ5", d5),
            Check::from_details("Δ6", d6),
        ],
        flags,
    }
}
