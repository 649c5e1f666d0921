use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::assemble::{assemble, Attachment, Decomposition, Witnesses};
use super::{DecompositionError, IdSet};
use crate::graph::{EdgeId, GraphPath, LabeledGraph, VertexId};

/// An unfolded decomposition plus what is needed to carry paths of the old
/// `Θ` into the new one.
#[derive(Clone, Debug)]
pub struct UnfoldTrace {
    pub result: Decomposition,
    /// For each old `F` vertex `x`: a path in the new `Θ` from `x̄` to
    /// `p(x)` whose label cancels freely or reads an `ss`.
    connectors: BTreeMap<VertexId, GraphPath>,
}

impl UnfoldTrace {
    /// Lifts a path of the old `Θ` to the new one. The label changes only by
    /// inserted connectors, which are trivial in `W`.
    pub fn lift_path(&self, before: &Decomposition, path: &GraphPath) -> Result<GraphPath, DecompositionError> {
        path.validate(&before.theta.graph)?;
        let after = &self.result;
        let ag = &after.theta.graph;
        let to_new = |v: VertexId| {
            if v < before.vertex_offset() {
                v
            } else {
                after.delta_vertex_bar(v - before.vertex_offset())
            }
        };
        let mut out = GraphPath::empty(to_new(path.start));
        for &e in &path.edges {
            match before.theta_edge_source(e) {
                (false, g) => out.edges.push(g),
                (true, de) => {
                    let dg = &before.delta.graph;
                    if let Some(c) = self.connectors.get(&dg.alpha(de)) {
                        out.edges.extend(c.inverse(ag).edges);
                    }
                    out.edges.push(after.delta_edge_bar(de));
                    if let Some(c) = self.connectors.get(&dg.omega(de)) {
                        out.edges.extend(c.edges.iter().copied());
                    }
                }
            }
        }
        out.validate(ag)?;
        Ok(out.reduced(ag))
    }

    pub fn lift_witnesses(&self, before: &Decomposition, w: &Witnesses) -> Result<Witnesses, DecompositionError> {
        w.iter().map(|(&s, p)| Ok((s, self.lift_path(before, p)?))).collect()
    }
}

fn require_unfoldable(d: &Decomposition) -> Result<(), DecompositionError> {
    if !d.forest_is_forest() {
        return Err(DecompositionError::InvalidState("F is not a forest".into()));
    }
    if !d.theta.graph.is_connected() {
        return Err(DecompositionError::InvalidState("Θ is not connected".into()));
    }
    if d.gamma.is_empty() {
        return Err(DecompositionError::InvalidState("Γ is empty".into()));
    }
    Ok(())
}

/// Edge path inside `F` from `x` to `y`.
fn forest_path(d: &Decomposition, x: VertexId, y: VertexId) -> Option<Vec<EdgeId>> {
    let g = &d.delta.graph;
    let mut prev: BTreeMap<VertexId, Option<EdgeId>> = BTreeMap::from([(x, None)]);
    let mut queue = VecDeque::from([x]);
    while let Some(v) = queue.pop_front() {
        if v == y {
            let mut edges = Vec::new();
            let mut at = y;
            while let Some(Some(e)) = prev.get(&at) {
                edges.push(*e);
                at = g.alpha(*e);
            }
            edges.reverse();
            return Some(edges);
        }
        for e in g.out_edges(v).filter(|e| d.forest.edges.contains(e)) {
            let w = g.omega(e);
            if let std::collections::btree_map::Entry::Vacant(slot) = prev.entry(w) {
                slot.insert(Some(e));
                queue.push_back(w);
            }
        }
    }
    None
}

/// The `Δ` path `edges` followed by its `p`-image read backwards, as edges
/// of the new `Θ`: from `x̄'` over to `p(x)`.
fn tree_connector(after: &Decomposition, before: &Decomposition, start: VertexId, edges: &[EdgeId]) -> GraphPath {
    let mut out = GraphPath::empty(after.delta_vertex_bar(start));
    out.edges.extend(edges.iter().map(|&e| after.delta_edge_bar(e)));
    out.edges.extend(edges.iter().rev().map(|&e| before.attach.edges[&before.delta.graph.inv(e)]));
    out
}

fn restrict(d: &Decomposition, keep: &IdSet) -> Attachment {
    Attachment {
        vertices: d.attach.vertices.iter().filter(|(v, _)| keep.vertices.contains(v)).map(|(&a, &b)| (a, b)).collect(),
        edges: d.attach.edges.iter().filter(|(e, _)| keep.edges.contains(e)).map(|(&a, &b)| (a, b)).collect(),
    }
}

/// Unfolding 1: keep a single vertex of each component of `F`.
pub fn unfold_components(d: &Decomposition, choice: &[VertexId]) -> Result<UnfoldTrace, DecompositionError> {
    require_unfoldable(d)?;
    let components = d.forest_components();
    let chosen: BTreeSet<VertexId> = choice.iter().copied().collect();
    if chosen.len() != choice.len()
        || components.iter().any(|c| c.intersection(&chosen).count() != 1)
        || !chosen.is_subset(&d.forest.vertices)
    {
        return Err(DecompositionError::InvalidArguments("choose exactly one vertex in every component of F".into()));
    }
    let forest = IdSet { vertices: chosen.clone(), edges: BTreeSet::new() };
    let attach = restrict(d, &forest);
    let after = assemble(d.matrix.clone(), d.gamma.clone(), d.gamma_basepoint, d.delta.clone(), forest, attach)?;
    let mut connectors = BTreeMap::new();
    for comp in &components {
        let c = *comp.intersection(&chosen).next().expect("one chosen vertex");
        for &x in comp {
            if x != c {
                let edges = forest_path(d, x, c).expect("component is connected");
                connectors.insert(x, tree_connector(&after, d, x, &edges));
            }
        }
    }
    Ok(UnfoldTrace { result: after, connectors })
}

/// Unfolding 2: glue a copy of `γ` (a path of `Δ` from `x` to `y`, which lie
/// in distinct components `T`, `T′` of `F`) into `Γ` from `p(x)` to `p(y)`
/// and drop `T′` from `F`.
pub fn unfold_merge(
    d: &Decomposition,
    x: VertexId,
    y: VertexId,
    gamma_path: &GraphPath,
) -> Result<UnfoldTrace, DecompositionError> {
    require_unfoldable(d)?;
    let dg = &d.delta.graph;
    gamma_path.validate(dg)?;
    if gamma_path.alpha() != x || gamma_path.omega(dg) != y {
        return Err(DecompositionError::InvalidArguments("γ must run from x to y".into()));
    }
    let components = d.forest_components();
    let find = |v: VertexId| components.iter().position(|c| c.contains(&v));
    let ty = match (find(x), find(y)) {
        (Some(a), Some(b)) if a != b => b,
        _ => return Err(DecompositionError::InvalidState("x and y must lie in distinct components of F".into())),
    };
    let dropped = &components[ty];

    let mut gamma = d.gamma.clone();
    let mut copy = Vec::new();
    let mut at = d.attach.vertices[&x];
    for (k, &e) in gamma_path.edges.iter().enumerate() {
        let to = if k + 1 == gamma_path.len() { d.attach.vertices[&y] } else { gamma.add_vertex() };
        copy.push(gamma.add_edge(at, to, dg.label(e)));
        at = to;
    }

    let forest = IdSet {
        vertices: d.forest.vertices.difference(dropped).copied().collect(),
        edges: d.forest.edges.iter().copied().filter(|&e| !dropped.contains(&dg.alpha(e))).collect(),
    };
    let attach = restrict(d, &forest);
    let after = assemble(d.matrix.clone(), gamma, d.gamma_basepoint, d.delta.clone(), forest, attach)?;
    let ag = &after.theta.graph;

    // x' in T′: x' → y in T′, back along γ to x, over the copy to p(y), then
    // the image of y → x' in Γ.
    let back = after.delta_path_bar(&gamma_path.inverse(dg));
    let mut connectors = BTreeMap::new();
    for &v in dropped {
        let inside = forest_path(d, v, y).expect("component is connected");
        let mut path = GraphPath::empty(after.delta_vertex_bar(v));
        path.edges.extend(inside.iter().map(|&e| after.delta_edge_bar(e)));
        path.edges.extend(back.edges.iter().copied());
        path.edges.extend(copy.iter().copied());
        path.edges.extend(inside.iter().rev().map(|&e| d.attach.edges[&dg.inv(e)]));
        path.validate(ag)?;
        connectors.insert(v, path);
    }
    Ok(UnfoldTrace { result: after, connectors })
}

/// Unfolding 3: an isolated vertex `v` of `F` is re-attached at the far end
/// of a new spur of length two at `p(v)`, both edges labeled like `e`.
pub fn unfold_isolated(d: &Decomposition, v: VertexId, e: EdgeId) -> Result<UnfoldTrace, DecompositionError> {
    require_unfoldable(d)?;
    let dg = &d.delta.graph;
    if !d.forest.vertices.contains(&v) || d.forest.edges.iter().any(|&f| dg.alpha(f) == v) {
        return Err(DecompositionError::InvalidState(format!("{v} is not an isolated vertex of F")));
    }
    if !dg.has_edge(e) || (dg.alpha(e) != v && dg.omega(e) != v) {
        return Err(DecompositionError::InvalidArguments(format!("edge {e} is not adjacent to {v}")));
    }
    let label = dg.label(e);
    let mut gamma: LabeledGraph = d.gamma.clone();
    let pv = d.attach.vertices[&v];
    let mid = gamma.add_vertex();
    let far = gamma.add_vertex();
    let first = gamma.add_edge(pv, mid, label);
    let second = gamma.add_edge(mid, far, label);

    let mut attach = d.attach.clone();
    attach.vertices.insert(v, far);
    let after = assemble(d.matrix.clone(), gamma, d.gamma_basepoint, d.delta.clone(), d.forest.clone(), attach)?;
    let ag = &after.theta.graph;
    let connector = GraphPath { start: far, edges: vec![ag.inv(second), ag.inv(first)] };
    Ok(UnfoldTrace { result: after, connectors: BTreeMap::from([(v, connector)]) })
}
