use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::coxeter::{Generator, Word};

use super::GraphError;

pub type VertexId = usize;
pub type EdgeId = usize;

/// Edge label: a generator, possibly inverted. Inversion only occurs in
/// [`AlphabetMode::Free`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: Generator,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: Generator) -> Self {
        Letter { generator, inverse: false }
    }

    pub fn inv(generator: Generator) -> Self {
        Letter { generator, inverse: true }
    }

    pub fn flipped(self) -> Self {
        Letter { inverse: !self.inverse, ..self }
    }

    pub fn of_word(w: &Word) -> Vec<Letter> {
        w.iter().map(|&g| Letter::new(g)).collect()
    }

    /// Drops inversion flags. Meaningful for involutive labels.
    pub fn to_word(letters: &[Letter]) -> Word {
        letters.iter().map(|l| l.generator).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlphabetMode {
    /// Coxeter generators: `ℓ(e⁻¹) = ℓ(e)`.
    Involutive,
    /// Free generators: `ℓ(e⁻¹) = ℓ(e)⁻¹`.
    Free,
}

impl AlphabetMode {
    pub fn inverse_label(self, l: Letter) -> Letter {
        match self {
            AlphabetMode::Involutive => l,
            AlphabetMode::Free => l.flipped(),
        }
    }

    /// Inverse of a label sequence.
    pub fn inverse_word(self, w: &[Letter]) -> Vec<Letter> {
        w.iter().rev().map(|&l| self.inverse_label(l)).collect()
    }

    /// Cancels adjacent `x x⁻¹` pairs (in involutive mode `x x`).
    pub fn free_reduce(self, w: &[Letter]) -> Vec<Letter> {
        let mut out: Vec<Letter> = Vec::with_capacity(w.len());
        for &l in w {
            if out.last() == Some(&self.inverse_label(l)) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        out
    }

    pub fn is_freely_reduced(self, w: &[Letter]) -> bool {
        w.windows(2).all(|p| p[1] != self.inverse_label(p[0]))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub inv: EdgeId,
    pub alpha: VertexId,
    pub omega: VertexId,
    pub label: Letter,
}

/// A graph in the sense of Serre: every edge has an inverse edge, and each
/// geometric edge is the pair `{e, e⁻¹}`. Ids are stable under all edits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    mode: AlphabetMode,
    alphabet: Vec<String>,
    vertices: BTreeSet<VertexId>,
    edges: BTreeMap<EdgeId, Edge>,
}

impl LabeledGraph {
    pub fn new(mode: AlphabetMode, alphabet: Vec<String>) -> Self {
        Self { mode, alphabet, vertices: BTreeSet::new(), edges: BTreeMap::new() }
    }

    pub fn involutive(alphabet: &[String]) -> Self {
        Self::new(AlphabetMode::Involutive, alphabet.to_vec())
    }

    pub fn mode(&self) -> AlphabetMode {
        self.mode
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn format_letter(&self, l: Letter) -> String {
        let name = &self.alphabet[l.generator];
        if l.inverse {
            format!("{name}^-1")
        } else {
            name.clone()
        }
    }

    pub fn format_letters(&self, w: &[Letter]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.iter().map(|&l| self.format_letter(l)).collect::<Vec<_>>().join(" ")
    }

    pub fn next_vertex_id(&self) -> VertexId {
        self.vertices.last().map_or(0, |v| v + 1)
    }

    pub fn next_edge_id(&self) -> EdgeId {
        self.edges.keys().last().map_or(0, |e| e + 1)
    }

    pub fn add_vertex(&mut self) -> VertexId {
        let v = self.next_vertex_id();
        self.vertices.insert(v);
        v
    }

    pub fn insert_vertex(&mut self, v: VertexId) -> bool {
        self.vertices.insert(v)
    }

    /// Adds the pair `e: alpha -> omega` and `e⁻¹`, returning `e`. The
    /// forward edge gets the smaller id.
    pub fn add_edge(&mut self, alpha: VertexId, omega: VertexId, label: Letter) -> EdgeId {
        let e = self.next_edge_id();
        self.insert_edge_pair(e, e + 1, alpha, omega, label).expect("fresh ids and existing endpoints");
        e
    }

    /// Inserts a pair with explicit ids.
    pub fn insert_edge_pair(
        &mut self,
        e: EdgeId,
        f: EdgeId,
        alpha: VertexId,
        omega: VertexId,
        label: Letter,
    ) -> Result<(), GraphError> {
        if e == f || self.edges.contains_key(&e) || self.edges.contains_key(&f) {
            return Err(GraphError::Malformed(format!("edge ids {e}/{f} unavailable")));
        }
        if !self.vertices.contains(&alpha) || !self.vertices.contains(&omega) {
            return Err(GraphError::Malformed(format!("edge {e} has an unknown endpoint")));
        }
        if label.generator >= self.alphabet.len() {
            return Err(GraphError::Malformed(format!("edge {e} has a label outside the alphabet")));
        }
        if self.mode == AlphabetMode::Involutive && label.inverse {
            return Err(GraphError::Malformed("inverse labels need the free alphabet".into()));
        }
        self.edges.insert(e, Edge { inv: f, alpha, omega, label });
        self.edges.insert(f, Edge { inv: e, alpha: omega, omega: alpha, label: self.mode.inverse_label(label) });
        Ok(())
    }

    /// Removes `e` together with its inverse.
    pub fn remove_edge_pair(&mut self, e: EdgeId) {
        if let Some(edge) = self.edges.remove(&e) {
            self.edges.remove(&edge.inv);
        }
    }

    /// Removes `v` and every edge incident to it.
    pub fn remove_vertex(&mut self, v: VertexId) {
        let incident: Vec<EdgeId> = self.out_edges(v).collect();
        for e in incident {
            self.remove_edge_pair(e);
        }
        self.vertices.remove(&v);
    }

    /// Identifies `drop` with `keep`, redirecting edges.
    pub fn merge_vertices(&mut self, keep: VertexId, drop: VertexId) {
        if keep == drop {
            return;
        }
        for edge in self.edges.values_mut() {
            if edge.alpha == drop {
                edge.alpha = keep;
            }
            if edge.omega == drop {
                edge.omega = keep;
            }
        }
        self.vertices.remove(&drop);
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn has_edge(&self, e: EdgeId) -> bool {
        self.edges.contains_key(&e)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.iter().copied()
    }

    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, &Edge)> + '_ {
        self.edges.iter().map(|(&e, edge)| (e, edge))
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.keys().copied()
    }

    /// One representative per geometric edge: the smaller id of each pair.
    pub fn geometric_edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.iter().filter(|(&e, edge)| e < edge.inv).map(|(&e, _)| e)
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[&e]
    }

    pub fn try_edge(&self, e: EdgeId) -> Option<&Edge> {
        self.edges.get(&e)
    }

    pub fn alpha(&self, e: EdgeId) -> VertexId {
        self.edges[&e].alpha
    }

    pub fn omega(&self, e: EdgeId) -> VertexId {
        self.edges[&e].omega
    }

    pub fn inv(&self, e: EdgeId) -> EdgeId {
        self.edges[&e].inv
    }

    pub fn label(&self, e: EdgeId) -> Letter {
        self.edges[&e].label
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        let edge = &self.edges[&e];
        edge.alpha == edge.omega
    }

    pub fn representative(&self, e: EdgeId) -> EdgeId {
        e.min(self.inv(e))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn geometric_edge_count(&self) -> usize {
        self.edges.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Edges `e` with `α(e) = v`, in id order.
    pub fn out_edges(&self, v: VertexId) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.iter().filter(move |(_, edge)| edge.alpha == v).map(|(&e, _)| e)
    }

    /// Number of edges starting at `v`; a loop counts twice.
    pub fn valence(&self, v: VertexId) -> usize {
        self.out_edges(v).count()
    }

    /// Component label for each vertex (the smallest vertex id in it).
    pub fn component_map(&self) -> BTreeMap<VertexId, VertexId> {
        let mut comp = BTreeMap::new();
        let adjacency = self.adjacency();
        for v in self.vertices() {
            if comp.contains_key(&v) {
                continue;
            }
            let mut queue = VecDeque::from([v]);
            comp.insert(v, v);
            while let Some(x) = queue.pop_front() {
                for &(_, y) in adjacency.get(&x).into_iter().flatten() {
                    if let std::collections::btree_map::Entry::Vacant(slot) = comp.entry(y) {
                        slot.insert(v);
                        queue.push_back(y);
                    }
                }
            }
        }
        comp
    }

    /// Outgoing `(edge, target)` lists, in edge-id order.
    pub fn adjacency(&self) -> BTreeMap<VertexId, Vec<(EdgeId, VertexId)>> {
        let mut adj: BTreeMap<VertexId, Vec<(EdgeId, VertexId)>> = BTreeMap::new();
        for (e, edge) in self.edges() {
            adj.entry(edge.alpha).or_default().push((e, edge.omega));
        }
        adj
    }

    pub fn components(&self) -> usize {
        self.component_map().values().collect::<BTreeSet<_>>().len()
    }

    pub fn is_connected(&self) -> bool {
        self.components() <= 1
    }

    /// First Betti number `|E| - |V| + cc`.
    pub fn betti(&self) -> i64 {
        self.geometric_edge_count() as i64 - self.vertex_count() as i64 + self.components() as i64
    }

    /// Euler characteristic `|V| - |E| = cc - b`.
    pub fn euler(&self) -> i64 {
        self.vertex_count() as i64 - self.geometric_edge_count() as i64
    }

    /// Two distinct edges with the same initial vertex and label, other than
    /// the two orientations of one involutive loop. Scans vertices and
    /// labels in order and returns the smallest such pair.
    pub fn first_fold_pair(&self) -> Option<(EdgeId, EdgeId)> {
        self.fold_pairs().into_iter().next()
    }

    /// All fold candidates `(e1, e2)` with `e1 < e2`, ordered by
    /// `(vertex, label, e1, e2)`.
    pub fn fold_pairs(&self) -> Vec<(EdgeId, EdgeId)> {
        let mut groups: BTreeMap<(VertexId, Letter), Vec<EdgeId>> = BTreeMap::new();
        for (e, edge) in self.edges() {
            groups.entry((edge.alpha, edge.label)).or_default().push(e);
        }
        let mut out = Vec::new();
        for group in groups.values() {
            for (i, &a) in group.iter().enumerate() {
                for &b in &group[i + 1..] {
                    if self.inv(a) != b {
                        out.push((a, b));
                    }
                }
            }
        }
        out
    }

    pub fn is_folded(&self) -> bool {
        self.first_fold_pair().is_none()
    }

    /// The outgoing edge at `v` labeled `l`, if the graph is deterministic
    /// there. For an involutive loop either orientation may be returned.
    pub fn follow(&self, v: VertexId, l: Letter) -> Option<EdgeId> {
        self.out_edges(v).find(|&e| self.label(e) == l)
    }

    /// Induced subgraph data on the given edge set (closed under inverse)
    /// plus the given extra vertices.
    pub fn subgraph(&self, vertices: &BTreeSet<VertexId>, edges: &BTreeSet<EdgeId>) -> LabeledGraph {
        let mut g = LabeledGraph::new(self.mode, self.alphabet.clone());
        for &v in vertices {
            g.vertices.insert(v);
        }
        for &e in edges {
            let edge = self.edge(e);
            g.vertices.insert(edge.alpha);
            g.vertices.insert(edge.omega);
            g.edges.insert(e, *edge);
            g.edges.insert(edge.inv, *self.edge(edge.inv));
        }
        g
    }

    /// Checks the structural invariants: `inv` is a fixed-point-free
    /// involution, `α(e) = ω(e⁻¹)`, labels are compatible, endpoints exist.
    pub fn validate(&self) -> Result<(), GraphError> {
        for (e, edge) in self.edges() {
            let back = self
                .edges
                .get(&edge.inv)
                .ok_or_else(|| GraphError::Malformed(format!("edge {e} has a missing inverse")))?;
            if edge.inv == e || back.inv != e {
                return Err(GraphError::Malformed(format!("inverse of edge {e} is not an involution")));
            }
            if back.alpha != edge.omega || back.omega != edge.alpha {
                return Err(GraphError::Malformed(format!("edge {e} and its inverse disagree on endpoints")));
            }
            if back.label != self.mode.inverse_label(edge.label) {
                return Err(GraphError::Malformed(format!("edge {e} and its inverse have incompatible labels")));
            }
            if !self.vertices.contains(&edge.alpha) || !self.vertices.contains(&edge.omega) {
                return Err(GraphError::Malformed(format!("edge {e} has an unknown endpoint")));
            }
            if edge.label.generator >= self.alphabet.len()
                || (self.mode == AlphabetMode::Involutive && edge.label.inverse)
            {
                return Err(GraphError::Malformed(format!("edge {e} has an invalid label")));
            }
        }
        Ok(())
    }
}

/// A labeled graph with a base vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasedGraph {
    pub graph: LabeledGraph,
    pub basepoint: VertexId,
}

impl BasedGraph {
    pub fn new(graph: LabeledGraph, basepoint: VertexId) -> Result<Self, GraphError> {
        if !graph.has_vertex(basepoint) {
            return Err(GraphError::InvalidArguments(format!("basepoint {basepoint} is not a vertex")));
        }
        Ok(Self { graph, basepoint })
    }
}

/// Edge path `e_1, …, e_k`. The start vertex is kept so that empty paths
/// have endpoints too.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GraphPath {
    pub start: VertexId,
    pub edges: Vec<EdgeId>,
}

impl GraphPath {
    pub fn empty(v: VertexId) -> Self {
        GraphPath { start: v, edges: Vec::new() }
    }

    pub fn from_edges(g: &LabeledGraph, edges: Vec<EdgeId>) -> Result<Self, GraphError> {
        let first =
            *edges.first().ok_or_else(|| GraphError::InvalidArguments("an empty path needs a start vertex".into()))?;
        let start = g.try_edge(first).ok_or_else(|| GraphError::InvalidPath(format!("edge {first} missing")))?.alpha;
        let path = GraphPath { start, edges };
        path.validate(g)?;
        Ok(path)
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn validate(&self, g: &LabeledGraph) -> Result<(), GraphError> {
        if !g.has_vertex(self.start) {
            return Err(GraphError::InvalidPath(format!("start vertex {} missing", self.start)));
        }
        let mut at = self.start;
        for &e in &self.edges {
            let edge = g.try_edge(e).ok_or_else(|| GraphError::InvalidPath(format!("edge {e} missing")))?;
            if edge.alpha != at {
                return Err(GraphError::InvalidPath(format!("edge {e} does not start at vertex {at}")));
            }
            at = edge.omega;
        }
        Ok(())
    }

    pub fn alpha(&self) -> VertexId {
        self.start
    }

    pub fn omega(&self, g: &LabeledGraph) -> VertexId {
        self.edges.last().map_or(self.start, |&e| g.omega(e))
    }

    pub fn is_closed(&self, g: &LabeledGraph) -> bool {
        self.omega(g) == self.start
    }

    /// No backtracking: `e_{i+1} ≠ e_i⁻¹`.
    pub fn is_reduced(&self, g: &LabeledGraph) -> bool {
        self.edges.windows(2).all(|p| p[1] != g.inv(p[0]))
    }

    pub fn label(&self, g: &LabeledGraph) -> Vec<Letter> {
        self.edges.iter().map(|&e| g.label(e)).collect()
    }

    /// The label as a Coxeter word (involutive mode).
    pub fn word(&self, g: &LabeledGraph) -> Word {
        Letter::to_word(&self.label(g))
    }

    /// The vertices visited, `α(e_1), ω(e_1), …, ω(e_k)`.
    pub fn vertices(&self, g: &LabeledGraph) -> Vec<VertexId> {
        let mut out = vec![self.start];
        out.extend(self.edges.iter().map(|&e| g.omega(e)));
        out
    }

    pub fn inverse(&self, g: &LabeledGraph) -> GraphPath {
        GraphPath { start: self.omega(g), edges: self.edges.iter().rev().map(|&e| g.inv(e)).collect() }
    }

    pub fn concat(&self, other: &GraphPath) -> GraphPath {
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&other.edges);
        GraphPath { start: self.start, edges }
    }

    /// Removes backtracking pairs `e e⁻¹`.
    pub fn reduced(&self, g: &LabeledGraph) -> GraphPath {
        let mut out: Vec<EdgeId> = Vec::with_capacity(self.edges.len());
        for &e in &self.edges {
            if out.last().is_some_and(|&last| g.inv(last) == e) {
                out.pop();
            } else {
                out.push(e);
            }
        }
        GraphPath { start: self.start, edges: out }
    }

    pub fn slice(&self, g: &LabeledGraph, from: usize, to: usize) -> GraphPath {
        let start = if from == 0 { self.start } else { g.omega(self.edges[from - 1]) };
        GraphPath { start, edges: self.edges[from..to].to_vec() }
    }
}

impl fmt::Display for GraphPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "@{}", self.start)?;
        for e in &self.edges {
            write!(f, " {e}")?;
        }
        Ok(())
    }
}

/// The wedge of one labeled cycle per word, all through the basepoint 0.
pub fn wedge_graph(mode: AlphabetMode, alphabet: Vec<String>, words: &[Vec<Letter>]) -> Result<BasedGraph, GraphError> {
    let mut g = LabeledGraph::new(mode, alphabet);
    let v0 = g.add_vertex();
    for w in words {
        if w.is_empty() {
            return Err(GraphError::InvalidArguments("wedge words must be nonempty".into()));
        }
        if w.iter().any(|l| l.generator >= g.alphabet.len() || (l.inverse && mode == AlphabetMode::Involutive)) {
            return Err(GraphError::InvalidArguments("word uses letters outside the alphabet".into()));
        }
        let mut at = v0;
        for (i, &l) in w.iter().enumerate() {
            let next = if i + 1 == w.len() { v0 } else { g.add_vertex() };
            g.add_edge(at, next, l);
            at = next;
        }
    }
    BasedGraph::new(g, v0)
}

/// Wedge over Coxeter words.
pub fn wedge_of_words(alphabet: &[String], words: &[Word]) -> Result<BasedGraph, GraphError> {
    let letters: Vec<Vec<Letter>> = words.iter().map(Letter::of_word).collect();
    wedge_graph(AlphabetMode::Involutive, alphabet.to_vec(), &letters)
}

/// Bouquet with one loop per listed generator at a single vertex.
pub fn rose(mode: AlphabetMode, alphabet: Vec<String>, labels: &[Letter]) -> BasedGraph {
    let words: Vec<Vec<Letter>> = labels.iter().map(|&l| vec![l]).collect();
    wedge_graph(mode, alphabet, &words).expect("single letters are nonempty")
}

/// Closed paths at the basepoint forming a free basis of `π1`, one per edge
/// outside a breadth-first spanning tree.
pub fn pi1_generators(bg: &BasedGraph) -> Result<Vec<GraphPath>, GraphError> {
    let g = &bg.graph;
    if !g.is_connected() {
        return Err(GraphError::InvalidArguments("graph is not connected".into()));
    }
    let adjacency = g.adjacency();
    let mut parent: BTreeMap<VertexId, EdgeId> = BTreeMap::new();
    let mut visited = BTreeSet::from([bg.basepoint]);
    let mut tree: BTreeSet<EdgeId> = BTreeSet::new();
    let mut queue = VecDeque::from([bg.basepoint]);
    while let Some(v) = queue.pop_front() {
        for &(e, w) in adjacency.get(&v).into_iter().flatten() {
            if visited.insert(w) {
                parent.insert(w, e);
                tree.insert(e);
                tree.insert(g.inv(e));
                queue.push_back(w);
            }
        }
    }
    let to_vertex = |v: VertexId| -> GraphPath {
        let mut edges = Vec::new();
        let mut at = v;
        while let Some(&e) = parent.get(&at) {
            edges.push(e);
            at = g.alpha(e);
        }
        edges.reverse();
        GraphPath { start: bg.basepoint, edges }
    };
    let mut out = Vec::new();
    for e in g.geometric_edges() {
        if tree.contains(&e) {
            continue;
        }
        let there = to_vertex(g.alpha(e));
        let back = to_vertex(g.omega(e)).inverse(g);
        let mut path = there;
        path.edges.push(e);
        path.edges.extend(back.edges);
        out.push(path);
    }
    Ok(out)
}

/// Whether `w` labels a closed path at the basepoint, following labels
/// deterministically. Requires a folded graph.
pub fn accepts(bg: &BasedGraph, w: &[Letter]) -> Result<bool, GraphError> {
    if !bg.graph.is_folded() {
        return Err(GraphError::InvalidArguments("acceptance needs a folded graph".into()));
    }
    let mut at = bg.basepoint;
    for &l in w {
        match bg.graph.follow(at, l) {
            Some(e) => at = bg.graph.omega(e),
            None => return Ok(false),
        }
    }
    Ok(at == bg.basepoint)
}

/// Label- and basepoint-preserving isomorphism test for folded, connected
/// graphs, by parallel traversal from the basepoints.
pub fn based_isomorphic(a: &BasedGraph, b: &BasedGraph) -> Result<bool, GraphError> {
    for g in [&a.graph, &b.graph] {
        if !g.is_folded() || !g.is_connected() {
            return Err(GraphError::InvalidArguments("isomorphism test needs folded connected graphs".into()));
        }
    }
    if a.graph.vertex_count() != b.graph.vertex_count()
        || a.graph.geometric_edge_count() != b.graph.geometric_edge_count()
    {
        return Ok(false);
    }
    let profile = |g: &LabeledGraph, v: VertexId| -> BTreeMap<Letter, (VertexId, usize)> {
        let mut out: BTreeMap<Letter, (VertexId, usize)> = BTreeMap::new();
        for e in g.out_edges(v) {
            let entry = out.entry(g.label(e)).or_insert((g.omega(e), 0));
            entry.1 += 1;
        }
        out
    };
    let mut forward: BTreeMap<VertexId, VertexId> = BTreeMap::from([(a.basepoint, b.basepoint)]);
    let mut backward: BTreeMap<VertexId, VertexId> = BTreeMap::from([(b.basepoint, a.basepoint)]);
    let mut queue = VecDeque::from([(a.basepoint, b.basepoint)]);
    while let Some((va, vb)) = queue.pop_front() {
        let (pa, pb) = (profile(&a.graph, va), profile(&b.graph, vb));
        if pa.len() != pb.len() {
            return Ok(false);
        }
        for ((la, (ta, ca)), (lb, (tb, cb))) in pa.iter().zip(pb.iter()) {
            if la != lb || ca != cb {
                return Ok(false);
            }
            match (forward.get(ta), backward.get(tb)) {
                (None, None) => {
                    forward.insert(*ta, *tb);
                    backward.insert(*tb, *ta);
                    queue.push_back((*ta, *tb));
                }
                (Some(x), Some(y)) if x == tb && y == ta => {}
                _ => return Ok(false),
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: usize) -> Vec<String> {
        ["a", "b", "c", "d"][..n].iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn wedge_counts() {
        let x = vec![vec![Letter::new(0), Letter::new(1)], vec![Letter::new(0), Letter::new(1)]];
        let bg = wedge_graph(AlphabetMode::Involutive, names(2), &x).unwrap();
        assert_eq!(bg.graph.betti(), 2);
        assert_eq!(bg.graph.geometric_edge_count(), 4);
        assert!(wedge_graph(AlphabetMode::Involutive, names(2), &[vec![]]).is_err());
    }

    #[test]
    fn rose_measurements() {
        let bg = rose(AlphabetMode::Involutive, names(3), &[Letter::new(0), Letter::new(1), Letter::new(2)]);
        let g = &bg.graph;
        assert_eq!((g.betti(), g.components(), g.euler()), (3, 1, -2));
        assert!(g.is_folded());
        assert_eq!(g.valence(0), 6);
        let gens = pi1_generators(&bg).unwrap();
        assert_eq!(gens.len(), 3);
        assert!(gens.iter().all(|p| p.len() == 1));
    }

    #[test]
    fn tree_measurements() {
        let mut g = LabeledGraph::new(AlphabetMode::Involutive, names(2));
        let a = g.add_vertex();
        let b = g.add_vertex();
        let c = g.add_vertex();
        g.add_edge(a, b, Letter::new(0));
        g.add_edge(b, c, Letter::new(1));
        assert_eq!((g.betti(), g.euler()), (0, 1));
        let bg = BasedGraph::new(g, a).unwrap();
        assert!(pi1_generators(&bg).unwrap().is_empty());
        assert!(LabeledGraph::new(AlphabetMode::Free, names(1)).is_folded());
    }

    #[test]
    fn involutive_loop_is_not_a_fold() {
        let bg = rose(AlphabetMode::Involutive, names(1), &[Letter::new(0)]);
        assert!(bg.graph.is_folded());
        let bg = rose(AlphabetMode::Involutive, names(1), &[Letter::new(0), Letter::new(0)]);
        assert_eq!(bg.graph.fold_pairs().len(), 4);
    }

    #[test]
    fn wedge_generators_read_the_words() {
        let (a, b, c) = (Letter::new(0), Letter::new(1), Letter::new(2));
        let x = vec![vec![a, b.flipped()], vec![c, a, b], vec![a, b.flipped(), a, a]];
        let bg = wedge_graph(AlphabetMode::Free, names(3), &x).unwrap();
        assert_eq!(bg.graph.betti(), 3);
        let labels: Vec<Vec<Letter>> = pi1_generators(&bg).unwrap().iter().map(|p| p.label(&bg.graph)).collect();
        assert_eq!(labels, x);
    }

    #[test]
    fn acceptance_on_roses() {
        let bg = rose(AlphabetMode::Involutive, names(2), &[Letter::new(0), Letter::new(1)]);
        assert!(accepts(&bg, &[Letter::new(0), Letter::new(1)]).unwrap());
        let bg = rose(AlphabetMode::Involutive, names(3), &[Letter::new(0), Letter::new(1)]);
        assert!(!accepts(&bg, &[Letter::new(2)]).unwrap());
    }

    #[test]
    fn isomorphism_basics() {
        let a = rose(AlphabetMode::Involutive, names(3), &[Letter::new(0), Letter::new(1)]);
        let b = rose(AlphabetMode::Involutive, names(3), &[Letter::new(0), Letter::new(2)]);
        assert!(based_isomorphic(&a, &a).unwrap());
        assert!(!based_isomorphic(&a, &b).unwrap());
    }
}
