use std::collections::BTreeMap;

use super::labeled::{BasedGraph, EdgeId, GraphPath, LabeledGraph, VertexId};
use super::GraphError;

/// One identification `e1 ~ e2`. The smaller ids survive.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FoldStep {
    pub kept_edge: EdgeId,
    pub dropped_edge: EdgeId,
    pub kept_vertex: VertexId,
    /// `None` when `ω(e1) = ω(e2)` already.
    pub dropped_vertex: Option<VertexId>,
}

/// Result of a sequence of folds with the quotient maps from the input.
#[derive(Clone, Debug)]
pub struct FoldTrace {
    pub result: LabeledGraph,
    pub vertex_map: BTreeMap<VertexId, VertexId>,
    pub edge_map: BTreeMap<EdgeId, EdgeId>,
    pub steps: Vec<FoldStep>,
}

impl FoldTrace {
    fn identity(g: &LabeledGraph) -> Self {
        FoldTrace {
            result: g.clone(),
            vertex_map: g.vertices().map(|v| (v, v)).collect(),
            edge_map: g.edge_ids().map(|e| (e, e)).collect(),
            steps: Vec::new(),
        }
    }

    pub fn map_vertex(&self, v: VertexId) -> VertexId {
        self.vertex_map[&v]
    }

    pub fn map_edge(&self, e: EdgeId) -> EdgeId {
        self.edge_map[&e]
    }

    pub fn map_path(&self, p: &GraphPath) -> GraphPath {
        GraphPath { start: self.map_vertex(p.start), edges: p.edges.iter().map(|&e| self.map_edge(e)).collect() }
    }

    pub fn based(&self, basepoint: VertexId) -> BasedGraph {
        BasedGraph { graph: self.result.clone(), basepoint: self.map_vertex(basepoint) }
    }

    fn push(&mut self, g: &mut LabeledGraph, e1: EdgeId, e2: EdgeId) {
        let step = apply_fold(g, e1, e2);
        let drop_inv_target = g.inv(step.kept_edge);
        for target in self.edge_map.values_mut() {
            if *target == step.dropped_edge {
                *target = step.kept_edge;
            } else if !g.has_edge(*target) {
                *target = drop_inv_target;
            }
        }
        if let Some(dv) = step.dropped_vertex {
            for target in self.vertex_map.values_mut() {
                if *target == dv {
                    *target = step.kept_vertex;
                }
            }
        }
        self.steps.push(step);
    }
}

fn check_fold(g: &LabeledGraph, e1: EdgeId, e2: EdgeId) -> Result<(), GraphError> {
    let (a, b) = match (g.try_edge(e1), g.try_edge(e2)) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(GraphError::InvalidFold(format!("edges {e1}/{e2} do not exist"))),
    };
    if e1 == e2 || a.inv == e2 {
        return Err(GraphError::InvalidFold(format!("edges {e1} and {e2} cannot be identified")));
    }
    if a.alpha != b.alpha || a.label != b.label {
        return Err(GraphError::InvalidFold(format!("edges {e1} and {e2} differ in initial vertex or label")));
    }
    Ok(())
}

fn apply_fold(g: &mut LabeledGraph, e1: EdgeId, e2: EdgeId) -> FoldStep {
    let (keep, drop) = (e1.min(e2), e1.max(e2));
    let (w1, w2) = (g.omega(keep), g.omega(drop));
    let (kv, dv) = (w1.min(w2), w1.max(w2));
    g.remove_edge_pair(drop);
    g.merge_vertices(kv, dv);
    FoldStep { kept_edge: keep, dropped_edge: drop, kept_vertex: kv, dropped_vertex: (kv != dv).then_some(dv) }
}

/// Identifies `e1` and `e2`, which must share initial vertex and label.
pub fn fold_once(g: &LabeledGraph, e1: EdgeId, e2: EdgeId) -> Result<FoldTrace, GraphError> {
    check_fold(g, e1, e2)?;
    let mut trace = FoldTrace::identity(g);
    let mut work = g.clone();
    trace.push(&mut work, e1, e2);
    trace.result = work;
    Ok(trace)
}

/// Folds until no fold applies, always taking the first candidate in
/// `(vertex, label)` order.
pub fn fold(g: &LabeledGraph) -> FoldTrace {
    fold_with(g, |_, _| 0)
}

/// Folds completely, letting `choose` pick among the current candidates
/// (as listed by [`LabeledGraph::fold_pairs`]) at every step.
pub fn fold_with<F>(g: &LabeledGraph, mut choose: F) -> FoldTrace
where
    F: FnMut(&LabeledGraph, &[(EdgeId, EdgeId)]) -> usize,
{
    let mut trace = FoldTrace::identity(g);
    let mut work = g.clone();
    loop {
        let pairs = work.fold_pairs();
        if pairs.is_empty() {
            break;
        }
        let (e1, e2) = pairs[choose(&work, &pairs) % pairs.len()];
        trace.push(&mut work, e1, e2);
    }
    trace.result = work;
    trace
}

pub fn fold_based(bg: &BasedGraph) -> (BasedGraph, FoldTrace) {
    let trace = fold(&bg.graph);
    (trace.based(bg.basepoint), trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::labeled::{wedge_graph, AlphabetMode, Letter};

    fn names(n: usize) -> Vec<String> {
        ["a", "b", "c"][..n].iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parallel_edges_fold_to_one() {
        let mut g = LabeledGraph::new(AlphabetMode::Involutive, names(1));
        let u = g.add_vertex();
        let v = g.add_vertex();
        let e = g.add_edge(u, v, Letter::new(0));
        let f = g.add_edge(u, v, Letter::new(0));
        let t = fold_once(&g, e, f).unwrap();
        assert_eq!(t.result.geometric_edge_count(), 1);
        assert_eq!(t.result.betti(), 0);
        assert_eq!(g.betti(), 1);
        assert_eq!(t.map_edge(f), e);
        assert_eq!(t.map_edge(f + 1), e + 1);
    }

    #[test]
    fn loop_and_edge_merge_endpoints() {
        let mut g = LabeledGraph::new(AlphabetMode::Involutive, names(2));
        let v = g.add_vertex();
        let w = g.add_vertex();
        let x = g.add_vertex();
        let l = g.add_edge(v, v, Letter::new(0));
        let e = g.add_edge(v, w, Letter::new(0));
        g.add_edge(w, x, Letter::new(1));
        let t = fold_once(&g, l, e).unwrap();
        assert_eq!(t.result.vertex_count(), 2);
        assert_eq!(t.result.geometric_edge_count(), 2);
        assert_eq!(t.map_vertex(w), v);
        assert!(t.result.is_loop(l));
    }

    #[test]
    fn invalid_folds_rejected() {
        let mut g = LabeledGraph::new(AlphabetMode::Involutive, names(2));
        let v = g.add_vertex();
        let l = g.add_edge(v, v, Letter::new(0));
        let m = g.add_edge(v, v, Letter::new(1));
        assert!(fold_once(&g, l, l + 1).is_err());
        assert!(fold_once(&g, l, m).is_err());
        assert!(fold_once(&g, l, l).is_err());
    }

    #[test]
    fn free_wedge_of_repeated_word() {
        let (a, b) = (Letter::new(0), Letter::new(1));
        let bg = wedge_graph(AlphabetMode::Free, names(2), &[vec![a, b], vec![a, b]]).unwrap();
        let (folded, trace) = fold_based(&bg);
        assert_eq!(folded.graph.betti(), 1);
        assert_eq!(folded.graph.geometric_edge_count(), 2);
        assert_eq!(trace.steps.len(), 2);
    }

    #[test]
    fn folded_input_gives_identity_trace() {
        let bg = wedge_graph(AlphabetMode::Involutive, names(2), &[vec![Letter::new(0)]]).unwrap();
        let t = fold(&bg.graph);
        assert!(t.steps.is_empty());
        assert_eq!(t.result, bg.graph);
    }
}
