use std::collections::{BTreeMap, BTreeSet};

use super::assemble::{assemble, Attachment, Decomposition, Witnesses};
use super::special::{validate_special, SpecialGraph, SpecialPath, SpecialReport};
use super::{DecompositionError, IdSet};
use crate::coxeter::{Generator, Order};
use crate::graph::{EdgeId, GraphPath, LabeledGraph, VertexId};

#[derive(Clone, Debug)]
pub struct HalvingResult {
    pub result: Decomposition,
    /// `Δ′` against `M′`. Short paths may now fail `Δ1`.
    pub report: SpecialReport,
    /// Quotient maps `Δ -> Δ′`.
    pub vertex_map: BTreeMap<VertexId, VertexId>,
    pub edge_map: BTreeMap<EdgeId, EdgeId>,
}

impl HalvingResult {
    /// Image of a path of the old `Θ`; `Γ` is untouched, so only `Δ` edges
    /// move.
    pub fn map_theta_path(&self, before: &Decomposition, path: &GraphPath) -> GraphPath {
        let after = &self.result;
        let start = if path.start < before.vertex_offset() {
            path.start
        } else {
            after.delta_vertex_bar(self.vertex_map[&(path.start - before.vertex_offset())])
        };
        let edges = path
            .edges
            .iter()
            .map(|&e| match before.theta_edge_source(e) {
                (false, g) => g,
                (true, d) => after.delta_edge_bar(self.edge_map[&d]),
            })
            .collect();
        GraphPath { start, edges }
    }

    pub fn map_witnesses(&self, before: &Decomposition, w: &Witnesses) -> Witnesses {
        w.iter().map(|(&s, p)| (s, self.map_theta_path(before, p))).collect()
    }
}

struct UnionFind(BTreeMap<usize, usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let parent = *self.0.entry(x).or_insert(x);
        if parent == x {
            return x;
        }
        let root = self.find(parent);
        self.0.insert(x, root);
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0.insert(ra.max(rb), ra.min(rb));
        }
    }
}

/// Folds every special path of type `{s, t}` in half and halves `m_st`.
///
/// A path `e_0, …, e_n` (`n = m_st − 2`) gets `e_i ~ e_{n−i}⁻¹` for
/// `i ≠ n/2`; its middle edge becomes a loop. When the path was not closed
/// its two end loops now sit at one vertex and are identified as well.
pub fn halve_special_type(d: &Decomposition, s: Generator, t: Generator) -> Result<HalvingResult, DecompositionError> {
    let m = match d.matrix.entry(s, t) {
        Order::Finite(m) if s != t && m % 2 == 0 => m as usize,
        _ => {
            return Err(DecompositionError::InvalidArguments(format!(
                "m({}, {}) must be finite and even",
                d.matrix.name(s),
                d.matrix.name(t)
            )))
        }
    };
    let g = &d.delta.graph;
    let mut vertices = UnionFind(BTreeMap::new());
    let mut edges = UnionFind(BTreeMap::new());
    let mut halves = BTreeMap::new();
    for (i, sp) in d.delta.paths.iter().enumerate() {
        if !sp.has_type(s, t) {
            continue;
        }
        let loops = d.delta.relator_loops(i, &d.matrix);
        let Some(&(e_loop, f_loop, _)) = loops.first() else {
            return Err(DecompositionError::InvalidState(format!("path {i} does not read its relator")));
        };
        let vs = sp.path.vertices(g);
        let inner: BTreeSet<_> = vs[1..vs.len() - 1].iter().collect();
        if inner.len() != vs.len() - 2 || inner.contains(&vs[0]) || inner.contains(&vs[vs.len() - 1]) {
            return Err(DecompositionError::InvalidState(format!("path {i} is not simple or simple closed")));
        }
        let len = sp.len();
        debug_assert_eq!(len, m - 1);
        for k in 0..=len {
            vertices.union(vs[k], vs[len - k]);
        }
        let n = len - 1;
        for k in 0..n / 2 {
            let (a, b) = (sp.path.edges[k], g.inv(sp.path.edges[n - k]));
            edges.union(a, b);
            edges.union(g.inv(a), g.inv(b));
        }
        if vs[0] != vs[len] && e_loop != f_loop {
            edges.union(e_loop, f_loop);
            edges.union(g.inv(e_loop), g.inv(f_loop));
        }
        halves.insert(i, n / 2);
    }

    let vertex_map: BTreeMap<VertexId, VertexId> = g.vertices().map(|v| (v, vertices.find(v))).collect();
    let edge_map: BTreeMap<EdgeId, EdgeId> = g.edge_ids().map(|e| (e, edges.find(e))).collect();

    let mut quotient = LabeledGraph::involutive(g.alphabet());
    for &v in vertex_map.values() {
        quotient.insert_vertex(v);
    }
    for (e, edge) in g.edges() {
        let (r, ri) = (edge_map[&e], edge_map[&edge.inv]);
        if r == ri {
            return Err(DecompositionError::InvariantBreach(format!("edge {e} is identified with its inverse")));
        }
        let (a, w) = (vertex_map[&edge.alpha], vertex_map[&edge.omega]);
        match quotient.try_edge(r) {
            Some(existing) => {
                if existing.alpha != a || existing.omega != w || existing.label != edge.label || existing.inv != ri {
                    return Err(DecompositionError::InvariantBreach(format!("identified edges disagree at edge {e}")));
                }
            }
            None => quotient.insert_edge_pair(r, ri, a, w, edge.label)?,
        }
    }

    let map_path = |p: &GraphPath, keep: usize| GraphPath {
        start: vertex_map[&p.start],
        edges: p.edges[..keep].iter().map(|e| edge_map[e]).collect(),
    };
    let paths = d
        .delta
        .paths
        .iter()
        .enumerate()
        .map(|(i, sp)| {
            let keep = halves.get(&i).copied().unwrap_or(sp.len());
            SpecialPath { path: map_path(&sp.path, keep), pair: sp.pair }
        })
        .collect();
    let delta = SpecialGraph::new(quotient, paths)?;

    let mut forest = IdSet::new();
    let mut attach = Attachment::default();
    for (&x, &px) in &d.attach.vertices {
        let y = vertex_map[&x];
        forest.vertices.insert(y);
        if attach.vertices.insert(y, px).is_some_and(|old| old != px) {
            return Err(DecompositionError::InvalidState(format!(
                "F vertices merged onto {y} have different images under p"
            )));
        }
    }
    for (&e, &pe) in &d.attach.edges {
        let y = edge_map[&e];
        forest.edges.insert(y);
        if attach.edges.insert(y, pe).is_some_and(|old| old != pe) {
            return Err(DecompositionError::InvalidState(format!(
                "F edges merged onto {y} have different images under p"
            )));
        }
    }

    let matrix = d.matrix.with_entry(s, t, Order::Finite((m / 2) as u32));
    let result = assemble(matrix, d.gamma.clone(), d.gamma_basepoint, delta, forest, attach)?;
    let report = validate_special(&result.delta, &result.matrix);
    Ok(HalvingResult { result, report, vertex_map, edge_map })
}
