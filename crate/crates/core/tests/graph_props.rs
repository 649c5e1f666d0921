mod common;

use common::{random_ao_move, random_graph, small_finite_matrix};
use coxrank::coxeter::equal_in_group;
use coxrank::graph::{
    accepts, based_isomorphic, fold, fold_based, fold_once, fold_with, pi1_generators, wedge_graph, AlphabetMode,
    GraphPath, LabeledGraph,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn mode(free: bool) -> AlphabetMode {
    if free {
        AlphabetMode::Free
    } else {
        AlphabetMode::Involutive
    }
}

/// Reduced paths of length `1..=max` starting anywhere.
fn reduced_paths(g: &LabeledGraph, max: usize) -> Vec<GraphPath> {
    let mut out = Vec::new();
    let mut stack: Vec<GraphPath> = g.vertices().map(GraphPath::empty).collect();
    while let Some(p) = stack.pop() {
        if !p.is_empty() {
            out.push(p.clone());
        }
        if p.len() == max {
            continue;
        }
        let at = p.omega(g);
        for e in g.out_edges(at) {
            if p.edges.last().is_some_and(|&l| g.inv(l) == e) {
                continue;
            }
            let mut q = p.clone();
            q.edges.push(e);
            stack.push(q);
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn fold_orders_agree(seed in any::<u64>(), free in any::<bool>(), labels in 1usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let bg = random_graph(&mut rng, mode(free), labels, 20, 60);
        let mut r1 = ChaCha8Rng::seed_from_u64(seed ^ 1);
        let mut r2 = ChaCha8Rng::seed_from_u64(seed ^ 2);
        let a = fold_with(&bg.graph, |_, p| r1.gen_range(0..p.len()));
        let b = fold_with(&bg.graph, |_, p| r2.gen_range(0..p.len()));
        prop_assert!(based_isomorphic(&a.based(bg.basepoint), &b.based(bg.basepoint)).unwrap());
    }

    #[test]
    fn each_fold_drops_one_edge_and_never_raises_betti(seed in any::<u64>(), free in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut g = random_graph(&mut rng, mode(free), 3, 12, 30).graph;
        while let Some((x, y)) = g.first_fold_pair() {
            let h = fold_once(&g, x, y).unwrap().result;
            prop_assert_eq!(h.geometric_edge_count() + 1, g.geometric_edge_count());
            let dv = g.vertex_count() - h.vertex_count();
            prop_assert!(dv <= 1);
            prop_assert!(h.betti() <= g.betti());
            g = h;
        }
        prop_assert!(g.is_folded());
    }

    #[test]
    fn folded_graphs_read_reduced_words(seed in any::<u64>(), free in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = fold(&random_graph(&mut rng, mode(free), 3, 8, 14).graph).result;
        for p in reduced_paths(&g, 5) {
            // an involutive loop read twice in a row spells `s s`
            let repeats_loop = p.edges.windows(2).any(|w| w[0] == w[1]);
            if g.mode() == AlphabetMode::Free || !repeats_loop {
                prop_assert!(g.mode().is_freely_reduced(&p.label(&g)));
            }
        }
    }

    #[test]
    fn fold_keeps_the_subgroup(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let matrix = small_finite_matrix(&mut rng);
        let bg = random_graph(&mut rng, AlphabetMode::Involutive, matrix.rank(), 8, 14);
        let g = &bg.graph;
        if let Some((x, y)) = g.first_fold_pair() {
            let trace = fold_once(g, x, y).unwrap();
            for p in pi1_generators(&bg).unwrap() {
                let q = trace.map_path(&p);
                prop_assert!(equal_in_group(&p.word(g), &q.word(&trace.result), &matrix).unwrap());
            }
        }
    }

    #[test]
    fn free_fold_keeps_the_subgroup_both_ways(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let bg = random_graph(&mut rng, AlphabetMode::Free, 3, 8, 14);
        let g = &bg.graph;
        let (folded, _) = fold_based(&bg);
        if let Some((x, y)) = g.first_fold_pair() {
            let trace = fold_once(g, x, y).unwrap();
            let after = trace.based(bg.basepoint);
            for p in pi1_generators(&bg).unwrap() {
                let q = trace.map_path(&p);
                let (lp, lq) = (p.label(g), q.label(&after.graph));
                prop_assert_eq!(g.mode().free_reduce(&lp), g.mode().free_reduce(&lq));
            }
            for q in pi1_generators(&after).unwrap() {
                let l = g.mode().free_reduce(&q.label(&after.graph));
                prop_assert!(accepts(&folded, &l).unwrap());
            }
        }
    }

    #[test]
    fn ao_moves_keep_the_subgroup(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let matrix = small_finite_matrix(&mut rng);
        if let Some((before, trace, old)) = random_ao_move(&mut rng, &matrix) {
            prop_assert!(common::ao_preserves_subgroup(&before, &trace, &old, &matrix));
        }
    }
}

#[test]
fn free_bases_fold_to_roses() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 2..=4 {
        for _ in 0..50 {
            let words = common::random_free_basis(&mut rng, n, 8);
            let bg = wedge_graph(AlphabetMode::Free, common::alphabet(n), &words).unwrap();
            let mut g = bg.graph.clone();
            assert_eq!(g.betti(), n as i64);
            while let Some((x, y)) = g.first_fold_pair() {
                g = fold_once(&g, x, y).unwrap().result;
                assert_eq!(g.betti(), n as i64);
            }
            assert_eq!(g.vertex_count(), 1);
            assert_eq!(g.geometric_edge_count(), n);
        }
    }
}
