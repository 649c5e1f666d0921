//! Oracles independent of the Tits rewriting engine.
#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

use coxrank::coxeter::{equal_in_group, reduce, CoxeterMatrix, Order, Word};
use coxrank::graph::{
    ao_move, pi1_generators, wedge_graph, AlphabetMode, AoTrace, BasedGraph, GraphPath, LabeledGraph, Letter,
};
use rand::seq::SliceRandom;
use rand::Rng;

/// `D_m` as formal affine maps `x ↦ εx + c` over `Z/m`, with
/// `s = (−1, 0)` and `t = (−1, 1)`. The sign is kept formally so that
/// `m = 2` still gives the Klein four-group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Affine {
    pub flip: bool,
    pub shift: i64,
}

pub struct Dihedral {
    pub m: i64,
}

impl Dihedral {
    pub fn new(m: u32) -> Self {
        Dihedral { m: m as i64 }
    }

    pub fn identity(&self) -> Affine {
        Affine { flip: false, shift: 0 }
    }

    pub fn generator(&self, g: usize) -> Affine {
        Affine { flip: true, shift: (g as i64) % self.m }
    }

    pub fn mul(&self, a: Affine, b: Affine) -> Affine {
        let c = if a.flip { -b.shift } else { b.shift };
        Affine { flip: a.flip != b.flip, shift: (c + a.shift).rem_euclid(self.m) }
    }

    pub fn eval(&self, word: &[usize]) -> Affine {
        word.iter().fold(self.identity(), |acc, &g| self.mul(acc, self.generator(g)))
    }

    /// Word length of every element, by breadth-first search of the Cayley graph.
    pub fn lengths(&self) -> HashMap<Affine, usize> {
        let mut dist = HashMap::from([(self.identity(), 0)]);
        let mut queue = VecDeque::from([self.identity()]);
        while let Some(x) = queue.pop_front() {
            for g in 0..2 {
                let y = self.mul(x, self.generator(g));
                if !dist.contains_key(&y) {
                    dist.insert(y, dist[&x] + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }
}

/// `a + bω` with `ω² = pω + q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Quad {
    pub a: i64,
    pub b: i64,
}

#[derive(Clone, Copy, Debug)]
pub struct Ring {
    pub p: i64,
    pub q: i64,
}

impl Ring {
    pub const ZERO: Quad = Quad { a: 0, b: 0 };
    pub const ONE: Quad = Quad { a: 1, b: 0 };

    pub fn add(&self, x: Quad, y: Quad) -> Quad {
        Quad { a: x.a + y.a, b: x.b + y.b }
    }

    pub fn mul(&self, x: Quad, y: Quad) -> Quad {
        let bd = x.b * y.b;
        Quad { a: x.a * y.a + bd * self.q, b: x.a * y.b + x.b * y.a + bd * self.p }
    }
}

pub type Mat = Vec<Vec<Quad>>;

/// The geometric representation of a rank-3 Coxeter group with entries
/// in `{2, 3, 4, 5}` (not both 4 and 5); faithful, and exact over
/// `Z[2cos(π/k)]`.
pub struct Triangle {
    pub ring: Ring,
    pub gens: Vec<Mat>,
}

impl Triangle {
    pub fn uniform(m: u32) -> Self {
        Self::new([m, m, m])
    }

    /// `entries = [m_st, m_su, m_tu]`.
    pub fn new(entries: [u32; 3]) -> Self {
        // ω = 2cos(π/4) or 2cos(π/5)
        let ring = if entries.contains(&4) { Ring { p: 0, q: 2 } } else { Ring { p: 1, q: 1 } };
        assert!(!(entries.contains(&4) && entries.contains(&5)));
        let entry = |s: usize, t: usize| match (s.min(t), s.max(t)) {
            (0, 1) => entries[0],
            (0, 2) => entries[1],
            _ => entries[2],
        };
        // σ_s(e_t) = e_t − c_st e_s with c_ss = 2 and c_st = −2cos(π/m_st)
        let c = |s: usize, t: usize| match (s == t, entry(s, t)) {
            (true, _) => Quad { a: 2, b: 0 },
            (false, 2) => Ring::ZERO,
            (false, 3) => Quad { a: -1, b: 0 },
            (false, 4 | 5) => Quad { a: 0, b: -1 },
            (false, m) => panic!("unsupported entry {m}"),
        };
        let gens = (0..3)
            .map(|s| {
                let mut mat = vec![vec![Ring::ZERO; 3]; 3];
                for (t, row) in mat.iter_mut().enumerate() {
                    row[t] = Ring::ONE;
                }
                for (t, entry) in mat[s].iter_mut().enumerate() {
                    let neg = c(s, t);
                    *entry = ring.add(*entry, Quad { a: -neg.a, b: -neg.b });
                }
                mat
            })
            .collect();
        Triangle { ring, gens }
    }

    pub fn identity(&self) -> Mat {
        (0..3).map(|i| (0..3).map(|j| if i == j { Ring::ONE } else { Ring::ZERO }).collect()).collect()
    }

    pub fn mul(&self, x: &Mat, y: &Mat) -> Mat {
        (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| (0..3).fold(Ring::ZERO, |acc, k| self.ring.add(acc, self.ring.mul(x[i][k], y[k][j]))))
                    .collect()
            })
            .collect()
    }

    pub fn eval(&self, word: &[usize]) -> Mat {
        word.iter().fold(self.identity(), |acc, &g| self.mul(&acc, &self.gens[g]))
    }

    /// Elements of length at most `radius` with their lengths.
    pub fn ball(&self, radius: usize) -> HashMap<Mat, usize> {
        let mut dist = HashMap::from([(self.identity(), 0)]);
        let mut frontier = vec![self.identity()];
        for r in 1..=radius {
            let mut next = Vec::new();
            for x in &frontier {
                for g in &self.gens {
                    let y = self.mul(x, g);
                    if !dist.contains_key(&y) {
                        dist.insert(y.clone(), r);
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        dist
    }

    /// Freely reduced words of length `2..=max_len` equal to a generator.
    pub fn words_equal_to_generators(&self, max_len: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut stack: Vec<(Vec<usize>, Mat)> = vec![(Vec::new(), self.identity())];
        while let Some((w, m)) = stack.pop() {
            if w.len() >= 2 && self.gens.contains(&m) {
                out.push(w.clone());
            }
            if w.len() == max_len {
                continue;
            }
            for g in 0..3 {
                if w.last() != Some(&g) {
                    let mut v = w.clone();
                    v.push(g);
                    let mv = self.mul(&m, &self.gens[g]);
                    stack.push((v, mv));
                }
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }
}

/// Every word over `{0, 1}` of length at most `max_len`.
pub fn binary_words(max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<usize>| {
                (0..2).map(move |g| {
                    let mut v = w.clone();
                    v.push(g);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

pub fn alphabet(n: usize) -> Vec<String> {
    ["a", "b", "c", "d", "e"][..n].iter().map(|s| s.to_string()).collect()
}

fn random_letter(rng: &mut impl Rng, mode: AlphabetMode, labels: usize) -> Letter {
    let g = rng.gen_range(0..labels);
    if mode == AlphabetMode::Free && rng.gen_bool(0.5) {
        Letter::inv(g)
    } else {
        Letter::new(g)
    }
}

/// A connected graph on at most `max_vertices` vertices with at most
/// `max_edges` geometric edges, based at its first vertex.
pub fn random_graph(
    rng: &mut impl Rng,
    mode: AlphabetMode,
    labels: usize,
    max_vertices: usize,
    max_edges: usize,
) -> BasedGraph {
    let mut g = LabeledGraph::new(mode, alphabet(labels));
    let n = rng.gen_range(1..=max_vertices.min(max_edges + 1));
    let vs: Vec<_> = (0..n).map(|_| g.add_vertex()).collect();
    for i in 1..n {
        let u = vs[rng.gen_range(0..i)];
        let l = random_letter(rng, mode, labels);
        g.add_edge(u, vs[i], l);
    }
    let extra = rng.gen_range(0..=max_edges - (n - 1));
    for _ in 0..extra {
        let (a, b) = (*vs.choose(rng).unwrap(), *vs.choose(rng).unwrap());
        let l = random_letter(rng, mode, labels);
        g.add_edge(a, b, l);
    }
    BasedGraph::new(g, vs[0]).unwrap()
}

/// Finite Coxeter groups with entries at most 5.
pub fn small_finite_matrix(rng: &mut impl Rng) -> CoxeterMatrix {
    let f = Order::Finite;
    let names = |n: usize| alphabet(n);
    match rng.gen_range(0..4) {
        0 => CoxeterMatrix::from_upper(names(2), &[vec![f(rng.gen_range(2..=5))]]).unwrap(),
        1 => {
            let top = [3, 4, 5][rng.gen_range(0..3)];
            CoxeterMatrix::from_upper(names(3), &[vec![f(top), f(2)], vec![f(3)]]).unwrap()
        }
        2 => CoxeterMatrix::from_upper(names(3), &[vec![f(2), f(2)], vec![f(rng.gen_range(2..=5))]]).unwrap(),
        _ => CoxeterMatrix::from_upper(names(3), &[vec![f(3), f(2)], vec![f(3)]]).unwrap(),
    }
}

pub fn random_word(rng: &mut impl Rng, labels: usize, len: usize) -> Word {
    (0..len).map(|_| rng.gen_range(0..labels)).collect::<Vec<_>>().into()
}

/// A random legal AO-move on a wedge of random words: a stretch of one
/// petal is replaced by a word equal to its label.
pub fn random_ao_move(rng: &mut impl Rng, matrix: &CoxeterMatrix) -> Option<(BasedGraph, AoTrace, Word)> {
    let n = matrix.rank();
    let petals = rng.gen_range(1..=3);
    let mut words: Vec<Vec<Letter>> = Vec::new();
    for _ in 0..petals {
        let len = rng.gen_range(2..=7);
        words.push(Letter::of_word(&random_word(rng, n, len)));
    }
    let bg = wedge_graph(AlphabetMode::Involutive, matrix.names().to_vec(), &words).ok()?;
    let g = &bg.graph;
    let petal = pi1_generators(&bg).ok()?.into_iter().find(|p| p.len() >= 2)?;
    let a = rng.gen_range(0..petal.len());
    let b = rng.gen_range(a..petal.len());
    let gamma = petal.slice(g, a, b + 1);
    let label = gamma.word(g);
    let w = match rng.gen_range(0..4) {
        0 => label.clone(),
        1 => reduce(&label, matrix).ok()?,
        2 => {
            let at = rng.gen_range(0..=label.len());
            let s = rng.gen_range(0..n);
            let mut v = label.letters().to_vec();
            v.splice(at..at, [s, s]);
            Word::from(v)
        }
        _ => {
            let (s, t) = (0, 1);
            let m = matrix.entry(s, t).finite()? as usize;
            let rel = coxrank::coxeter::alternating_word(s, t, 2 * m).ok()?;
            label.concat(&rel)
        }
    };
    let trace = ao_move(&bg, &gamma, (0, gamma.len() - 1), &w, matrix).ok()?;
    Some((bg, trace, label))
}

/// Every π1 generator before the move reads, after transport, an equal
/// element; and every generator after the move lifts back through the
/// reverse move.
pub fn ao_preserves_subgroup(before: &BasedGraph, trace: &AoTrace, old_inner: &Word, matrix: &CoxeterMatrix) -> bool {
    let after = &trace.result;
    for p in pi1_generators(before).unwrap() {
        let q = match trace.transport_path(before, &p) {
            Ok(q) => q,
            Err(_) => return false,
        };
        if q.validate(&after.graph).is_err() || q.start != after.basepoint || !q.is_closed(&after.graph) {
            return false;
        }
        if !equal_in_group(&p.word(&before.graph), &q.word(&after.graph), matrix).unwrap() {
            return false;
        }
    }
    let seg: &GraphPath = &trace.new_segment;
    if seg.is_empty() {
        return true;
    }
    let Ok(back) = ao_move(after, seg, (0, seg.len() - 1), old_inner, matrix) else {
        return false;
    };
    pi1_generators(after).unwrap().iter().all(|q| match back.transport_path(after, q) {
        Ok(p) => equal_in_group(&q.word(&after.graph), &p.word(&back.result.graph), matrix).unwrap(),
        Err(_) => false,
    })
}

/// Nielsen moves applied to the standard basis, keeping words short.
pub fn random_free_basis(rng: &mut impl Rng, n: usize, max_len: usize) -> Vec<Vec<Letter>> {
    let mode = AlphabetMode::Free;
    let mut basis: Vec<Vec<Letter>> = (0..n).map(|g| vec![Letter::new(g)]).collect();
    for _ in 0..rng.gen_range(0..12) {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let mut next = basis.clone();
        match rng.gen_range(0..3) {
            0 if i != j => {
                let other = if rng.gen_bool(0.5) { basis[j].clone() } else { mode.inverse_word(&basis[j]) };
                next[i] = mode.free_reduce(&[basis[i].clone(), other].concat());
            }
            1 if i != j => {
                let other = if rng.gen_bool(0.5) { basis[j].clone() } else { mode.inverse_word(&basis[j]) };
                next[i] = mode.free_reduce(&[other, basis[i].clone()].concat());
            }
            _ => next[i] = mode.inverse_word(&basis[i]),
        }
        if next.iter().all(|w| w.len() <= max_len) {
            basis = next;
        }
    }
    basis
}
