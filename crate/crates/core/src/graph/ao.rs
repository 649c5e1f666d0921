use std::collections::BTreeSet;

use crate::coxeter::{equal_in_group, CoxeterMatrix, Word};

use super::labeled::{AlphabetMode, BasedGraph, EdgeId, GraphPath, Letter, VertexId};
use super::GraphError;

/// Outcome of an AO-move, with what is needed to carry paths across it.
#[derive(Clone, Debug)]
pub struct AoTrace {
    pub result: BasedGraph,
    /// Geometric edges of the removed inner subpath (both orientations).
    pub removed_edges: BTreeSet<EdgeId>,
    pub removed_vertices: BTreeSet<VertexId>,
    /// The glued segment from `α(γ)` to `ω(γ)`, labeled `w`.
    pub new_segment: GraphPath,
    /// `(e_i, …, e_j)` of the original path.
    pub inner: Vec<EdgeId>,
    prefix: GraphPath,
    suffix: GraphPath,
    merged: Option<(VertexId, VertexId)>,
}

impl AoTrace {
    fn map_vertex(&self, v: VertexId) -> VertexId {
        match self.merged {
            Some((keep, drop)) if v == drop => keep,
            _ => v,
        }
    }

    fn relocate(&self, p: &GraphPath) -> GraphPath {
        GraphPath { start: self.map_vertex(p.start), edges: p.edges.clone() }
    }

    /// Carries a path of the old graph to the new one. Each traversal of the
    /// inner subpath `γ̂` is replaced by `pre⁻¹ · γ̃ · suf⁻¹`, where `γ = pre ·
    /// γ̂ · suf`; the result is then freely reduced.
    pub fn transport_path(&self, before: &BasedGraph, p: &GraphPath) -> Result<GraphPath, GraphError> {
        let old = &before.graph;
        let new = &self.result.graph;
        let p = p.reduced(old);
        let detour = self
            .relocate(&self.prefix)
            .inverse(new)
            .concat(&self.new_segment)
            .concat(&self.relocate(&self.suffix).inverse(new));
        let detour_back = detour.inverse(new);
        let backward: Vec<EdgeId> = self.inner.iter().rev().map(|&e| old.inv(e)).collect();
        let mut out = GraphPath::empty(self.map_vertex(p.start));
        let mut i = 0;
        while i < p.edges.len() {
            let e = p.edges[i];
            if !self.removed_edges.contains(&e) {
                out.edges.push(e);
                i += 1;
                continue;
            }
            let k = self.inner.len();
            let window = p.edges.get(i..i + k);
            if window == Some(&self.inner[..]) {
                out.edges.extend(&detour.edges);
            } else if window == Some(&backward[..]) {
                out.edges.extend(&detour_back.edges);
            } else {
                return Err(GraphError::InvalidPath("path enters the removed segment without crossing it".into()));
            }
            i += k;
        }
        let out = out.reduced(new);
        out.validate(new)?;
        Ok(out)
    }
}

/// Replaces the inner subpath `γ[i..=j]` of `γ` by a fresh segment from
/// `α(γ)` to `ω(γ)` labeled `w`, provided `w = ℓ(γ)` in `W(M)`.
///
/// The inner subpath must be embedded and its interior vertices must have
/// valence two and differ from the basepoint. The prefix and suffix of `γ`
/// must avoid the removed edges, so that every path can be carried across
/// the move.
pub fn ao_move(
    bg: &BasedGraph,
    gamma: &GraphPath,
    inner: (usize, usize),
    w: &Word,
    matrix: &CoxeterMatrix,
) -> Result<AoTrace, GraphError> {
    let g = &bg.graph;
    if g.mode() != AlphabetMode::Involutive {
        return Err(GraphError::InvalidMove("AO-moves need the involutive alphabet".into()));
    }
    gamma.validate(g)?;
    let (i, j) = inner;
    if i > j || j >= gamma.len() {
        return Err(GraphError::InvalidMove(format!("inner range {i}..={j} out of bounds")));
    }
    let inner_edges: Vec<EdgeId> = gamma.edges[i..=j].to_vec();
    let geometric: BTreeSet<EdgeId> = inner_edges.iter().map(|&e| g.representative(e)).collect();
    if geometric.len() != inner_edges.len() {
        return Err(GraphError::InvalidMove("inner subpath is not embedded".into()));
    }
    let interior: Vec<VertexId> = inner_edges[..inner_edges.len() - 1].iter().map(|&e| g.omega(e)).collect();
    for &v in &interior {
        if v == bg.basepoint {
            return Err(GraphError::InvalidMove(format!("interior vertex {v} is the basepoint")));
        }
        if g.valence(v) != 2 {
            return Err(GraphError::InvalidMove(format!("interior vertex {v} has valence {}", g.valence(v))));
        }
    }
    let removed_vertices: BTreeSet<VertexId> = interior.iter().copied().collect();
    if removed_vertices.len() != interior.len() {
        return Err(GraphError::InvalidMove("inner subpath is not embedded".into()));
    }
    let removed_edges: BTreeSet<EdgeId> = inner_edges.iter().flat_map(|&e| [e, g.inv(e)]).collect();
    let prefix = gamma.slice(g, 0, i);
    let suffix = gamma.slice(g, j + 1, gamma.len());
    if prefix.edges.iter().chain(&suffix.edges).any(|e| removed_edges.contains(e)) {
        return Err(GraphError::InvalidMove("prefix or suffix runs through the inner subpath".into()));
    }
    let (a, b) = (gamma.alpha(), gamma.omega(g));
    if removed_vertices.contains(&a) || removed_vertices.contains(&b) {
        return Err(GraphError::InvalidMove("an endpoint of the path would be removed".into()));
    }
    match equal_in_group(w, &gamma.word(g), matrix) {
        Ok(true) => {}
        Ok(false) => return Err(GraphError::Rejected("w differs from the path label in W(M)".into())),
        Err(e) => return Err(GraphError::Rejected(format!("group equality undecided: {e}"))),
    }

    let mut out = g.clone();
    for &e in &inner_edges {
        out.remove_edge_pair(e);
    }
    for &v in &removed_vertices {
        out.remove_vertex(v);
    }
    let mut merged = None;
    let mut segment = GraphPath::empty(a);
    if w.is_empty() {
        if a != b {
            let (keep, drop) = (a.min(b), a.max(b));
            out.merge_vertices(keep, drop);
            merged = Some((keep, drop));
            segment = GraphPath::empty(keep);
        }
    } else {
        let mut at = a;
        for (k, &s) in w.iter().enumerate() {
            let next = if k + 1 == w.len() { b } else { out.add_vertex() };
            let e = out.add_edge(at, next, Letter::new(s));
            segment.edges.push(e);
            at = next;
        }
    }
    let basepoint = match merged {
        Some((keep, drop)) if bg.basepoint == drop => keep,
        _ => bg.basepoint,
    };
    Ok(AoTrace {
        result: BasedGraph { graph: out, basepoint },
        removed_edges,
        removed_vertices,
        new_segment: segment,
        inner: inner_edges,
        prefix,
        suffix,
        merged,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::Order;
    use crate::graph::labeled::{pi1_generators, LabeledGraph};

    fn matrix() -> CoxeterMatrix {
        CoxeterMatrix::uniform(&["s", "t", "u"], Order::Finite(3))
            .unwrap()
            .with_entry(0, 2, Order::Infinite)
            .with_entry(1, 2, Order::Infinite)
    }

    /// A u-loop at v0 followed by a cycle reading `sts` plus a u-edge.
    fn fixture() -> (BasedGraph, GraphPath) {
        let m = matrix();
        let mut g = LabeledGraph::involutive(m.names());
        let v0 = g.add_vertex();
        let a = g.add_vertex();
        let b = g.add_vertex();
        let c = g.add_vertex();
        g.add_edge(v0, v0, Letter::new(2));
        let e1 = g.add_edge(v0, a, Letter::new(0));
        let e2 = g.add_edge(a, b, Letter::new(1));
        let e3 = g.add_edge(b, c, Letter::new(0));
        g.add_edge(c, v0, Letter::new(2));
        let bg = BasedGraph::new(g, v0).unwrap();
        (bg, GraphPath { start: v0, edges: vec![e1, e2, e3] })
    }

    #[test]
    fn replacing_sts_by_tst_keeps_subgroup() {
        let m = matrix();
        let (bg, gamma) = fixture();
        let w = m.parse_word("tst").unwrap();
        let trace = ao_move(&bg, &gamma, (0, 2), &w, &m).unwrap();
        assert_eq!(trace.result.graph.geometric_edge_count(), bg.graph.geometric_edge_count());
        for p in pi1_generators(&bg).unwrap() {
            let q = trace.transport_path(&bg, &p).unwrap();
            assert!(q.is_closed(&trace.result.graph));
            assert!(equal_in_group(&p.word(&bg.graph), &q.word(&trace.result.graph), &m).unwrap());
        }
    }

    #[test]
    fn identical_segment_gives_isomorphic_graph() {
        let m = matrix();
        let (bg, gamma) = fixture();
        let w = gamma.word(&bg.graph);
        let trace = ao_move(&bg, &gamma, (0, 2), &w, &m).unwrap();
        let g = &trace.result.graph;
        assert_eq!((g.vertex_count(), g.geometric_edge_count()), (4, 5));
        assert_eq!(trace.new_segment.word(g), w);
    }

    #[test]
    fn almost_relator_stretch_is_shortened() {
        // γ reads ststs = γ_st(2m-3) with m = 4; its last four edges form a
        // valence-two stretch, which is replaced by a segment reading tst
        let m = CoxeterMatrix::uniform(&["s", "t", "u"], Order::Finite(4))
            .unwrap()
            .with_entry(0, 2, Order::Infinite)
            .with_entry(1, 2, Order::Infinite);
        let mut g = LabeledGraph::involutive(m.names());
        let v0 = g.add_vertex();
        let mut at = v0;
        let mut edges = Vec::new();
        for k in 0..5 {
            let next = g.add_vertex();
            edges.push(g.add_edge(at, next, Letter::new(k % 2)));
            at = next;
        }
        g.add_edge(at, v0, Letter::new(2));
        let bg = BasedGraph::new(g, v0).unwrap();
        let gamma = GraphPath { start: v0, edges };
        let w = m.parse_word("tst").unwrap();
        let trace = ao_move(&bg, &gamma, (1, 4), &w, &m).unwrap();
        assert_eq!(trace.result.graph.geometric_edge_count() + 1, bg.graph.geometric_edge_count());
        assert_eq!(trace.result.graph.betti(), bg.graph.betti());
        assert!(ao_move(&bg, &gamma, (0, 4), &w, &m).is_ok());
    }

    #[test]
    fn prefix_through_removed_stretch_is_refused() {
        let m = matrix();
        let (bg, gamma) = fixture();
        let mut twice = gamma.clone();
        let back = gamma.inverse(&bg.graph);
        twice.edges.extend(back.edges);
        twice.edges.extend(gamma.edges.iter().copied());
        let w = twice.word(&bg.graph);
        assert!(matches!(ao_move(&bg, &twice, (6, 8), &w, &m), Err(GraphError::InvalidMove(_))));
    }

    #[test]
    fn valence_and_basepoint_conditions() {
        let m = matrix();
        let (bg, gamma) = fixture();
        let w = gamma.word(&bg.graph);
        let mut through_base = GraphPath { start: 0, edges: vec![0] };
        through_base.edges.extend(&gamma.edges);
        let w_base = through_base.word(&bg.graph);
        assert!(matches!(ao_move(&bg, &through_base, (0, 1), &w_base, &m), Err(GraphError::InvalidMove(_))));
        let mut spur = bg.clone();
        let x = spur.graph.add_vertex();
        spur.graph.add_edge(gamma.vertices(&bg.graph)[2], x, Letter::new(2));
        assert!(matches!(ao_move(&spur, &gamma, (0, 2), &w, &m), Err(GraphError::InvalidMove(_))));
        assert!(ao_move(&spur, &gamma, (0, 1), &w, &m).is_ok());
        let wrong = m.parse_word("s").unwrap();
        assert!(matches!(ao_move(&bg, &gamma, (0, 2), &wrong, &m), Err(GraphError::Rejected(_))));
        assert!(ao_move(&bg, &gamma, (2, 1), &w, &m).is_err());
    }
}
