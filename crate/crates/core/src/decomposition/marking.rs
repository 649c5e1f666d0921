use std::collections::{BTreeMap, VecDeque};

use super::assemble::Decomposition;
use super::{DecompositionError, IdSet};
use crate::graph::{EdgeId, GraphPath, LabeledGraph, VertexId};

/// A marking `Ω`: a subgraph of the image of `Δ∖E` in `Θ`, in `Θ` ids.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Marking {
    pub omega: IdSet,
}

impl Marking {
    pub fn empty() -> Self {
        Marking::default()
    }

    /// The image of a subgraph of `Δ∖E`, given in `Δ` ids.
    pub fn from_delta(d: &Decomposition, tilde: &IdSet) -> Result<Self, DecompositionError> {
        let g = &d.delta.graph;
        for &v in &tilde.vertices {
            if !g.has_vertex(v) {
                return Err(DecompositionError::InvalidArguments(format!("marking vertex {v} not in Δ")));
            }
        }
        let mut closed = IdSet { vertices: tilde.vertices.clone(), edges: Default::default() };
        for &e in &tilde.edges {
            if !g.has_edge(e) || g.is_loop(e) {
                return Err(DecompositionError::InvalidArguments(format!("marking edge {e} is not an edge of Δ∖E")));
            }
            closed.add_edge(g, e);
        }
        Ok(Marking { omega: d.delta_bar(&closed) })
    }

    pub fn validate(&self, d: &Decomposition) -> Result<(), DecompositionError> {
        if !self.omega.is_subset(&d.delta_minus_loops_image()) {
            return Err(DecompositionError::InvalidArguments(
                "the marking is not contained in the image of Δ∖E".into(),
            ));
        }
        Ok(())
    }

    /// `Ω̃`, the preimage in `Δ∖E`.
    pub fn preimage(&self, d: &Decomposition) -> IdSet {
        let base = d.delta_minus_loops();
        IdSet {
            vertices: base
                .vertices
                .into_iter()
                .filter(|&v| self.omega.vertices.contains(&d.delta_vertex_bar(v)))
                .collect(),
            edges: base.edges.into_iter().filter(|&e| self.omega.edges.contains(&d.delta_edge_bar(e))).collect(),
        }
    }
}

/// The `k`-neighborhood of `base` inside `g`: vertices at distance at most
/// `k` from it, and edges with an endpoint at distance at most `k − 1`.
pub fn neighborhood(g: &LabeledGraph, base: &IdSet, k: usize) -> IdSet {
    let mut dist: BTreeMap<VertexId, usize> = BTreeMap::new();
    let mut queue = VecDeque::new();
    for &v in &base.vertices {
        dist.insert(v, 0);
        queue.push_back(v);
    }
    let adjacency = g.adjacency();
    while let Some(v) = queue.pop_front() {
        let dv = dist[&v];
        if dv == k {
            continue;
        }
        for &(_, w) in adjacency.get(&v).into_iter().flatten() {
            if let std::collections::btree_map::Entry::Vacant(slot) = dist.entry(w) {
                slot.insert(dv + 1);
                queue.push_back(w);
            }
        }
    }
    let mut out = base.clone();
    out.vertices.extend(dist.keys().copied());
    for (&v, &dv) in &dist {
        if dv < k {
            for &(e, _) in adjacency.get(&v).into_iter().flatten() {
                out.edges.insert(e);
                out.edges.insert(g.inv(e));
            }
        }
    }
    out
}

/// `(Ω_k, Ω̃_k)`: the `k`-neighborhood of `Ω` inside the image of `Δ∖E`
/// and that of `Ω̃` inside `Δ∖E`.
pub fn omega_neighborhood(d: &Decomposition, omega: &Marking, k: usize) -> Result<(IdSet, IdSet), DecompositionError> {
    omega.validate(d)?;
    let image = d.delta_minus_loops_image().graph(&d.theta.graph);
    let outer = neighborhood(&image, &omega.omega, k);
    let inner = neighborhood(&d.delta.without_loops(), &omega.preimage(d), k);
    if !d.delta_bar(&inner).is_subset(&outer) {
        return Err(DecompositionError::InvariantBreach(format!("the image of Ω̃_{k} is not inside Ω_{k}")));
    }
    Ok((outer, inner))
}

/// Reduced paths of length at most 8 in the image of `Δ∖E` that start and
/// end in `Ω` without staying inside it. At most `limit` are returned.
pub fn omega4_violations(d: &Decomposition, omega: &Marking, limit: usize) -> Vec<GraphPath> {
    let image = d.delta_minus_loops_image().graph(&d.theta.graph);
    let adjacency = image.adjacency();
    let om = &omega.omega;
    let mut out = Vec::new();

    struct Walk<'a> {
        g: &'a LabeledGraph,
        adjacency: &'a BTreeMap<VertexId, Vec<(EdgeId, VertexId)>>,
        om: &'a IdSet,
        limit: usize,
    }
    fn extend(w: &Walk, path: &mut Vec<EdgeId>, at: VertexId, inside: bool, start: VertexId, out: &mut Vec<GraphPath>) {
        if out.len() >= w.limit {
            return;
        }
        if !path.is_empty() && !inside && w.om.vertices.contains(&at) {
            out.push(GraphPath { start, edges: path.clone() });
            return;
        }
        if path.len() == 8 {
            return;
        }
        for &(e, to) in w.adjacency.get(&at).into_iter().flatten() {
            if path.last().is_some_and(|&l| w.g.inv(l) == e) {
                continue;
            }
            let still = inside && w.om.edges.contains(&e) && w.om.vertices.contains(&to);
            path.push(e);
            extend(w, path, to, still, start, out);
            path.pop();
        }
    }

    let walk = Walk { g: &image, adjacency: &adjacency, om, limit };
    for &v in &om.vertices {
        if !image.has_vertex(v) {
            continue;
        }
        extend(&walk, &mut Vec::new(), v, true, v, &mut out);
        if out.len() >= limit {
            break;
        }
    }
    out
}

/// Adjoins violating short paths to `Ω` until condition `Ω4` holds.
pub fn saturate_marking(d: &Decomposition, omega: &Marking) -> Result<Marking, DecompositionError> {
    omega.validate(d)?;
    let mut current = omega.clone();
    let theta = &d.theta.graph;
    while let Some(path) = omega4_violations(d, &current, 1).pop() {
        for &e in &path.edges {
            current.omega.add_edge(theta, e);
        }
    }
    Ok(current)
}
