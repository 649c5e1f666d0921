//! Hand-built decompositions used by the tests, the examples and the CLI.
//!
//! Each builder has a frozen JSON twin under `fixtures/`; a test keeps the
//! two in sync. Names:
//!
//! * `two_paths`: two special paths of types `{s,t}` (`m = 6`) and `{t,u}`
//!   (`m = 7`) meeting at a shared loop.
//! * `theta_cycle`: two long special paths glued to `Γ` at both ends of a
//!   three-edge stretch, closing a hexagon in `Θ`; tame with `Ω` the hexagon.
//! * `three_pieces`: a closed special path and two open ones hung on two
//!   roses; `b(Θ) = 10`, `c2 = 7`, `c* = 8`.
//! * `long_path`: one special path of length 47 on a two-loop rose; tame.
//! * `rose`: `Δ` empty and `Γ` the rose over all of `S`; tame.
//! * `halving_m{6,8,10,12}`: a closed special path of type `{s,t}` with a
//!   single loop, hung on a rose.

use std::collections::BTreeMap;

use crate::coxeter::{CoxeterMatrix, Generator, Order};
use crate::decomposition::io::{DecompositionFile, LoadedDecomposition};
use crate::decomposition::{assemble, Attachment, Decomposition, IdSet, SpecialGraph, SpecialPath};
use crate::graph::{rose, AlphabetMode, EdgeId, GraphPath, LabeledGraph, Letter, VertexId};

pub const NAMES: &[&str] = &[
    "two_paths",
    "theta_cycle",
    "three_pieces",
    "long_path",
    "rose",
    "halving_m6",
    "halving_m8",
    "halving_m10",
    "halving_m12",
];

/// Fixtures that pass every tameness condition, witnesses included.
pub const TAME: &[&str] = &["theta_cycle", "long_path", "rose"];

const S: Generator = 0;
const T: Generator = 1;
const U: Generator = 2;

fn names() -> Vec<String> {
    vec!["s".into(), "t".into(), "u".into()]
}

fn matrix(st: u32, tu: u32, su: Order) -> CoxeterMatrix {
    use Order::Finite;
    CoxeterMatrix::from_upper(names(), &[vec![Finite(st), su], vec![Finite(tu)]]).expect("valid matrix")
}

/// Adds an alternating path `a b a b …` of `len` edges from `start`, ending
/// at `end` (or at a fresh vertex).
fn alternating_path(
    g: &mut LabeledGraph,
    start: VertexId,
    end: Option<VertexId>,
    (a, b): (Generator, Generator),
    len: usize,
) -> GraphPath {
    let mut path = GraphPath::empty(start);
    let mut at = start;
    for k in 0..len {
        let to = match end {
            Some(v) if k + 1 == len => v,
            _ => g.add_vertex(),
        };
        let label = if k % 2 == 0 { a } else { b };
        path.edges.push(g.add_edge(at, to, Letter::new(label)));
        at = to;
    }
    path
}

fn add_loop(g: &mut LabeledGraph, v: VertexId, label: Generator) -> EdgeId {
    g.add_edge(v, v, Letter::new(label))
}

struct Built {
    decomposition: Decomposition,
    marking: Option<IdSet>,
    witnesses: Option<BTreeMap<String, Vec<(bool, EdgeId)>>>,
}

fn witnesses(list: &[(&str, &[(bool, EdgeId)])]) -> Option<BTreeMap<String, Vec<(bool, EdgeId)>>> {
    Some(list.iter().map(|(n, refs)| (n.to_string(), refs.to_vec())).collect())
}

fn two_paths() -> Built {
    let m = matrix(6, 7, Order::Infinite);
    let mut d = LabeledGraph::involutive(&names());
    let a = d.add_vertex();
    let p1 = alternating_path(&mut d, a, None, (S, T), 5);
    let w = p1.omega(&d);
    let p2 = alternating_path(&mut d, w, None, (U, T), 6);
    let b = p2.omega(&d);
    add_loop(&mut d, a, T);
    add_loop(&mut d, w, T);
    add_loop(&mut d, b, U);
    let delta = SpecialGraph::new(d, vec![SpecialPath::new(p1, S, T), SpecialPath::new(p2, T, U)]).unwrap();
    let gamma = rose(AlphabetMode::Involutive, names(), &[Letter::new(S)]);
    let forest = IdSet { vertices: [a].into(), edges: Default::default() };
    let attach = Attachment { vertices: [(a, gamma.basepoint)].into(), edges: Default::default() };
    let decomposition = assemble(m, gamma.graph, Some(gamma.basepoint), delta, forest, attach).unwrap();
    Built { decomposition, marking: None, witnesses: None }
}

fn theta_cycle() -> Built {
    let m = CoxeterMatrix::uniform(&["s", "t", "u"], Order::Finite(96)).unwrap();
    let mut gamma = LabeledGraph::involutive(&names());
    let v0 = gamma.add_vertex();
    let g1 = gamma.add_vertex();
    let g2 = gamma.add_vertex();
    let s_loop = add_loop(&mut gamma, v0, S);
    let spoke = gamma.add_edge(v0, g1, Letter::new(S));

    let mut d = LabeledGraph::involutive(&names());
    let a0 = d.add_vertex();
    let p1 = alternating_path(&mut d, a0, None, (S, T), 95);
    let b0 = d.add_vertex();
    let p2 = alternating_path(&mut d, b0, None, (S, U), 95);
    let t_loop = add_loop(&mut d, a0, T);
    let end = p1.omega(&d);
    add_loop(&mut d, end, T);
    let u_loop = add_loop(&mut d, b0, U);
    let end = p2.omega(&d);
    add_loop(&mut d, end, U);
    let av = p1.vertices(&d);
    let bv = p2.vertices(&d);

    let mut tilde = IdSet::new();
    for e in p1.edges[..3].iter().chain(&p2.edges[..3]) {
        tilde.add_edge(&d, *e);
    }
    let forest = IdSet::closed(&d, [a0, av[1], b0, av[3], bv[3]], [p1.edges[0]]);
    let attach = Attachment {
        vertices: [(a0, v0), (av[1], g1), (b0, v0), (av[3], g2), (bv[3], g2)].into(),
        edges: [(p1.edges[0], spoke)].into(),
    };
    let delta = SpecialGraph::new(d, vec![SpecialPath::new(p1, S, T), SpecialPath::new(p2, S, U)]).unwrap();
    let decomposition = assemble(m, gamma, Some(v0), delta, forest, attach).unwrap();
    Built {
        decomposition,
        marking: Some(tilde),
        witnesses: witnesses(&[("s", &[(false, s_loop)]), ("t", &[(true, t_loop)]), ("u", &[(true, u_loop)])]),
    }
}

fn three_pieces() -> Built {
    let m = matrix(6, 7, Order::Finite(6));
    let mut gamma = LabeledGraph::involutive(&names());
    let ga = gamma.add_vertex();
    let gb = gamma.add_vertex();
    add_loop(&mut gamma, ga, S);
    add_loop(&mut gamma, ga, T);
    add_loop(&mut gamma, gb, U);
    add_loop(&mut gamma, gb, S);

    let mut d = LabeledGraph::involutive(&names());
    let c1 = d.add_vertex();
    let p1 = alternating_path(&mut d, c1, Some(c1), (S, T), 5);
    add_loop(&mut d, c1, T);
    let x = d.add_vertex();
    let p2 = alternating_path(&mut d, x, None, (U, T), 6);
    let y = p2.omega(&d);
    add_loop(&mut d, x, T);
    add_loop(&mut d, y, U);
    let c3 = d.add_vertex();
    let p3 = alternating_path(&mut d, c3, None, (S, U), 5);
    add_loop(&mut d, c3, U);
    let end = p3.omega(&d);
    add_loop(&mut d, end, U);

    let delta =
        SpecialGraph::new(d, vec![SpecialPath::new(p1, S, T), SpecialPath::new(p2, T, U), SpecialPath::new(p3, S, U)])
            .unwrap();
    let forest = IdSet { vertices: [c1, x, y, c3].into(), edges: Default::default() };
    let attach = Attachment { vertices: [(c1, ga), (x, ga), (y, gb), (c3, gb)].into(), edges: Default::default() };
    let decomposition = assemble(m, gamma, Some(ga), delta, forest, attach).unwrap();
    Built { decomposition, marking: None, witnesses: None }
}

fn long_path() -> Built {
    let m = CoxeterMatrix::uniform(&["s", "t", "u"], Order::Finite(48)).unwrap();
    let mut gamma = LabeledGraph::involutive(&names());
    let v0 = gamma.add_vertex();
    let s_loop = add_loop(&mut gamma, v0, S);
    let u_loop = add_loop(&mut gamma, v0, U);
    let mut d = LabeledGraph::involutive(&names());
    let a = d.add_vertex();
    let p = alternating_path(&mut d, a, None, (S, T), 47);
    let t_loop = add_loop(&mut d, a, T);
    let end = p.omega(&d);
    add_loop(&mut d, end, T);
    let delta = SpecialGraph::new(d, vec![SpecialPath::new(p, S, T)]).unwrap();
    let forest = IdSet { vertices: [a].into(), edges: Default::default() };
    let attach = Attachment { vertices: [(a, v0)].into(), edges: Default::default() };
    let decomposition = assemble(m, gamma, Some(v0), delta, forest, attach).unwrap();
    Built {
        decomposition,
        marking: None,
        witnesses: witnesses(&[("s", &[(false, s_loop)]), ("t", &[(true, t_loop)]), ("u", &[(false, u_loop)])]),
    }
}

fn rose_fixture() -> Built {
    let m = CoxeterMatrix::uniform(&["s", "t", "u"], Order::Finite(48)).unwrap();
    let labels = [Letter::new(S), Letter::new(T), Letter::new(U)];
    let bg = rose(AlphabetMode::Involutive, names(), &labels);
    let loops: Vec<EdgeId> = bg.graph.geometric_edges().collect();
    let decomposition = Decomposition::from_gamma(m, bg).unwrap();
    Built {
        decomposition,
        marking: None,
        witnesses: witnesses(&[("s", &[(false, loops[0])]), ("t", &[(false, loops[1])]), ("u", &[(false, loops[2])])]),
    }
}

fn halving(mst: u32) -> Built {
    let m = CoxeterMatrix::uniform(&["s", "t", "u"], Order::Finite(mst)).unwrap();
    let bg = rose(AlphabetMode::Involutive, names(), &[Letter::new(U)]);
    let u_loop = bg.graph.geometric_edges().next().unwrap();
    let mut d = LabeledGraph::involutive(&names());
    let a = d.add_vertex();
    let p = alternating_path(&mut d, a, Some(a), (S, T), (mst - 1) as usize);
    let t_loop = add_loop(&mut d, a, T);
    let delta = SpecialGraph::new(d, vec![SpecialPath::new(p, S, T)]).unwrap();
    let forest = IdSet { vertices: [a].into(), edges: Default::default() };
    let attach = Attachment { vertices: [(a, bg.basepoint)].into(), edges: Default::default() };
    let decomposition = assemble(m, bg.graph, Some(bg.basepoint), delta, forest, attach).unwrap();
    Built { decomposition, marking: None, witnesses: witnesses(&[("t", &[(true, t_loop)]), ("u", &[(false, u_loop)])]) }
}

fn built(name: &str) -> Option<Built> {
    Some(match name {
        "two_paths" => two_paths(),
        "theta_cycle" => theta_cycle(),
        "three_pieces" => three_pieces(),
        "long_path" => long_path(),
        "rose" => rose_fixture(),
        "halving_m6" => halving(6),
        "halving_m8" => halving(8),
        "halving_m10" => halving(10),
        "halving_m12" => halving(12),
        _ => return None,
    })
}

/// The file form of a fixture, produced by its builder.
pub fn build(name: &str) -> Option<DecompositionFile> {
    let b = built(name)?;
    Some(DecompositionFile::from_parts(&b.decomposition, b.marking.as_ref(), b.witnesses.as_ref()))
}

/// The frozen JSON of a fixture.
pub fn json(name: &str) -> Option<&'static str> {
    Some(match name {
        "two_paths" => include_str!("../fixtures/two_paths.json"),
        "theta_cycle" => include_str!("../fixtures/theta_cycle.json"),
        "three_pieces" => include_str!("../fixtures/three_pieces.json"),
        "long_path" => include_str!("../fixtures/long_path.json"),
        "rose" => include_str!("../fixtures/rose.json"),
        "halving_m6" => include_str!("../fixtures/halving_m6.json"),
        "halving_m8" => include_str!("../fixtures/halving_m8.json"),
        "halving_m10" => include_str!("../fixtures/halving_m10.json"),
        "halving_m12" => include_str!("../fixtures/halving_m12.json"),
        _ => return None,
    })
}

/// The assembled `Θ` of `theta_cycle`, frozen.
pub const THETA_CYCLE_THETA: &str = include_str!("../fixtures/theta_cycle.theta.json");

/// Loads a fixture from its frozen JSON.
pub fn load(name: &str) -> LoadedDecomposition {
    let text = json(name).unwrap_or_else(|| panic!("unknown fixture {name}"));
    DecompositionFile::from_json(text).and_then(|f| f.load(None)).unwrap_or_else(|e| panic!("fixture {name}: {e}"))
}

/// `Γ` is a rose at its basepoint and `F` meets every component of `Δ` in
/// exactly one vertex. Such a decomposition reads one generator per loop.
pub fn is_full_standard(d: &Decomposition) -> bool {
    let rose = d.gamma.vertex_count() == 1 && d.gamma.geometric_edges().all(|e| d.gamma.is_loop(e));
    let dg = &d.delta.graph;
    let components = dg.component_map();
    let mut hits: BTreeMap<VertexId, usize> = components.values().map(|&c| (c, 0)).collect();
    for v in &d.forest.vertices {
        *hits.entry(components[v]).or_default() += 1;
    }
    rose && d.forest.edges.is_empty() && hits.values().all(|&k| k == 1)
}
