use std::collections::{BTreeMap, BTreeSet};

use super::special::SpecialGraph;
use super::{DecompositionError, IdSet};
use crate::coxeter::{CoxeterMatrix, Generator};
use crate::graph::{AlphabetMode, BasedGraph, EdgeId, GraphPath, LabeledGraph, VertexId};

/// The morphism `p: F -> Γ`, keyed by `Δ` ids. Edge entries cover both
/// orientations once assembled.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Attachment {
    pub vertices: BTreeMap<VertexId, VertexId>,
    pub edges: BTreeMap<EdgeId, EdgeId>,
}

/// One closed path at the basepoint of `Θ` per generator.
pub type Witnesses = BTreeMap<Generator, GraphPath>;

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub matrix: CoxeterMatrix,
    pub gamma: LabeledGraph,
    pub gamma_basepoint: Option<VertexId>,
    pub delta: SpecialGraph,
    /// `F`, in `Δ` ids.
    pub forest: IdSet,
    pub attach: Attachment,
    pub theta: BasedGraph,
    vertex_offset: VertexId,
    edge_offset: EdgeId,
}

fn check_alphabet(name: &str, g: &LabeledGraph, matrix: &CoxeterMatrix) -> Result<(), DecompositionError> {
    if g.mode() != AlphabetMode::Involutive || g.alphabet() != matrix.names() {
        return Err(DecompositionError::Malformed(format!(
            "{name} must be an involutive graph over the generators of the matrix"
        )));
    }
    Ok(())
}

/// Builds `Θ = (Γ ⊔ Δ)/{x ~ p(x)}` and checks that `p` is a label
/// preserving morphism from `F ⊆ Δ∖E` to `Γ`.
pub fn assemble(
    matrix: CoxeterMatrix,
    gamma: LabeledGraph,
    gamma_basepoint: Option<VertexId>,
    delta: SpecialGraph,
    forest: IdSet,
    attach: Attachment,
) -> Result<Decomposition, DecompositionError> {
    use DecompositionError::{InvalidAttachment, Malformed};
    check_alphabet("Γ", &gamma, &matrix)?;
    check_alphabet("Δ", &delta.graph, &matrix)?;
    gamma.validate()?;
    delta.graph.validate()?;
    if let Some(b) = gamma_basepoint {
        if !gamma.has_vertex(b) {
            return Err(Malformed(format!("basepoint {b} is not a vertex of Γ")));
        }
    }
    let dg = &delta.graph;

    let mut f = IdSet { vertices: forest.vertices.clone(), edges: BTreeSet::new() };
    for &e in &forest.edges {
        if !dg.has_edge(e) {
            return Err(Malformed(format!("F edge {e} is not an edge of Δ")));
        }
        if dg.is_loop(e) {
            return Err(Malformed(format!("F contains the loop edge {e}")));
        }
        f.edges.insert(e);
        f.edges.insert(dg.inv(e));
    }
    for &v in &f.vertices {
        if !dg.has_vertex(v) {
            return Err(Malformed(format!("F vertex {v} is not a vertex of Δ")));
        }
    }
    for &e in &f.edges {
        if !f.vertices.contains(&dg.alpha(e)) {
            return Err(Malformed(format!("F edge {e} has an endpoint outside F")));
        }
    }

    let mut p = Attachment { vertices: attach.vertices.clone(), edges: BTreeMap::new() };
    if p.vertices.keys().copied().collect::<BTreeSet<_>>() != f.vertices {
        return Err(InvalidAttachment("p must be defined on exactly the vertices of F".into()));
    }
    for (&x, &px) in &p.vertices {
        if !gamma.has_vertex(px) {
            return Err(InvalidAttachment(format!("p({x}) = {px} is not a vertex of Γ")));
        }
    }
    for (&e, &pe) in &attach.edges {
        for (a, b) in [(e, pe), (dg.try_edge(e).map_or(e, |x| x.inv), gamma.try_edge(pe).map_or(pe, |x| x.inv))] {
            if p.edges.insert(a, b).is_some_and(|old| old != b) {
                return Err(InvalidAttachment(format!("p is given twice on edge {a}")));
            }
        }
    }
    if p.edges.keys().copied().collect::<BTreeSet<_>>() != f.edges {
        return Err(InvalidAttachment("p must be defined on exactly the edges of F".into()));
    }
    for (&e, &pe) in &p.edges {
        let (de, ge) = match gamma.try_edge(pe) {
            Some(ge) => (dg.edge(e), ge),
            None => return Err(InvalidAttachment(format!("p({e}) = {pe} is not an edge of Γ"))),
        };
        if de.label != ge.label {
            return Err(InvalidAttachment(format!("p does not preserve the label of edge {e}")));
        }
        if p.vertices[&de.alpha] != ge.alpha || p.vertices[&de.omega] != ge.omega {
            return Err(InvalidAttachment(format!("p does not commute with the endpoints of edge {e}")));
        }
    }

    let vertex_offset = gamma.next_vertex_id();
    let edge_offset = gamma.next_edge_id();
    let mut theta = gamma.clone();
    for v in dg.vertices() {
        if !f.vertices.contains(&v) {
            theta.insert_vertex(v + vertex_offset);
        }
    }
    let vbar = |v: VertexId| p.vertices.get(&v).copied().unwrap_or(v + vertex_offset);
    for e in dg.geometric_edges() {
        if f.edges.contains(&e) {
            continue;
        }
        let edge = dg.edge(e);
        theta.insert_edge_pair(
            e + edge_offset,
            edge.inv + edge_offset,
            vbar(edge.alpha),
            vbar(edge.omega),
            edge.label,
        )?;
    }
    let basepoint = gamma_basepoint
        .or_else(|| theta.vertices().next())
        .ok_or_else(|| DecompositionError::InvalidArguments("Γ and Δ are both empty".into()))?;
    let theta = BasedGraph::new(theta, basepoint)?;

    let d = Decomposition {
        matrix,
        gamma,
        gamma_basepoint,
        delta,
        forest: f,
        attach: p,
        theta,
        vertex_offset,
        edge_offset,
    };
    let lhs = d.theta.graph.euler();
    let rhs = d.gamma.euler() + d.delta.graph.euler() - d.forest.euler();
    if lhs != rhs {
        return Err(DecompositionError::InvariantBreach(format!("χ(Θ) = {lhs} but χ(Γ) + χ(Δ) − χ(F) = {rhs}")));
    }
    Ok(d)
}

impl Decomposition {
    /// `Δ` empty, `F` empty: `Θ = Γ`.
    pub fn from_gamma(matrix: CoxeterMatrix, gamma: BasedGraph) -> Result<Self, DecompositionError> {
        let delta = SpecialGraph::empty(matrix.names());
        assemble(matrix, gamma.graph, Some(gamma.basepoint), delta, IdSet::new(), Attachment::default())
    }

    pub fn vertex_offset(&self) -> VertexId {
        self.vertex_offset
    }

    pub fn edge_offset(&self) -> EdgeId {
        self.edge_offset
    }

    /// `x̄` for a vertex `x` of `Δ`.
    pub fn delta_vertex_bar(&self, v: VertexId) -> VertexId {
        self.attach.vertices.get(&v).copied().unwrap_or(v + self.vertex_offset)
    }

    /// `ē` for an edge `e` of `Δ`.
    pub fn delta_edge_bar(&self, e: EdgeId) -> EdgeId {
        self.attach.edges.get(&e).copied().unwrap_or(e + self.edge_offset)
    }

    pub fn delta_path_bar(&self, p: &GraphPath) -> GraphPath {
        GraphPath {
            start: self.delta_vertex_bar(p.start),
            edges: p.edges.iter().map(|&e| self.delta_edge_bar(e)).collect(),
        }
    }

    /// The image in `Θ` of a subgraph of `Δ`.
    pub fn delta_bar(&self, s: &IdSet) -> IdSet {
        IdSet {
            vertices: s.vertices.iter().map(|&v| self.delta_vertex_bar(v)).collect(),
            edges: s.edges.iter().map(|&e| self.delta_edge_bar(e)).collect(),
        }
    }

    /// `Δ∖E` as an id set of `Δ`.
    pub fn delta_minus_loops(&self) -> IdSet {
        let g = &self.delta.graph;
        IdSet { vertices: g.vertices().collect(), edges: g.edge_ids().filter(|&e| !g.is_loop(e)).collect() }
    }

    /// All of `Δ` as an id set.
    pub fn delta_all(&self) -> IdSet {
        let g = &self.delta.graph;
        IdSet { vertices: g.vertices().collect(), edges: g.edge_ids().collect() }
    }

    /// The image of `Δ∖E` in `Θ`, where markings live.
    pub fn delta_minus_loops_image(&self) -> IdSet {
        self.delta_bar(&self.delta_minus_loops())
    }

    /// `b(Θ)`.
    pub fn theta_betti(&self) -> i64 {
        self.theta.graph.betti()
    }

    /// `|SP|`.
    pub fn special_count(&self) -> usize {
        self.delta.paths.len()
    }

    /// Turns edges named on `Γ` (`false`) or `Δ` (`true`) into a path of
    /// `Θ` starting at its basepoint.
    pub fn theta_path(&self, steps: &[(bool, EdgeId)]) -> Result<GraphPath, DecompositionError> {
        let mut edges = Vec::with_capacity(steps.len());
        for &(on_delta, e) in steps {
            let exists = if on_delta { self.delta.graph.has_edge(e) } else { self.gamma.has_edge(e) };
            if !exists {
                let side = if on_delta { "Δ" } else { "Γ" };
                return Err(DecompositionError::InvalidArguments(format!("{side} has no edge {e}")));
            }
            edges.push(if on_delta { self.delta_edge_bar(e) } else { e });
        }
        let path = GraphPath { start: self.theta.basepoint, edges };
        path.validate(&self.theta.graph)?;
        Ok(path)
    }

    /// Where an edge of `Θ` comes from: `(false, id)` for `Γ`, `(true, id)`
    /// for `Δ∖F`.
    pub fn theta_edge_source(&self, e: EdgeId) -> (bool, EdgeId) {
        if e < self.edge_offset {
            (false, e)
        } else {
            (true, e - self.edge_offset)
        }
    }

    /// The components of `F` as vertex sets, in order of their smallest
    /// vertex.
    pub fn forest_components(&self) -> Vec<BTreeSet<VertexId>> {
        let fg = self.forest.graph(&self.delta.graph);
        let mut groups: BTreeMap<VertexId, BTreeSet<VertexId>> = BTreeMap::new();
        for (v, c) in fg.component_map() {
            groups.entry(c).or_default().insert(v);
        }
        groups.into_values().collect()
    }

    pub fn forest_is_forest(&self) -> bool {
        self.forest.graph(&self.delta.graph).betti() == 0
    }
}
