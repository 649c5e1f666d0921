//! Folding a wedge of words into the core graph of the subgroup it spans.

use coxrank::graph::io::graph_to_dot;
use coxrank::graph::{accepts, fold_based, wedge_graph, AlphabetMode, Letter};

fn main() {
    let names = vec!["a".to_string(), "b".to_string()];
    let a = Letter::new(0);
    let b = Letter::new(1);
    // <ab, ab^-1 a, b^2>
    let words = vec![vec![a, b], vec![a, b.flipped(), a], vec![b, b]];
    let bg = wedge_graph(AlphabetMode::Free, names, &words).unwrap();
    let (folded, trace) = fold_based(&bg);
    println!(
        "{} vertices, {} edges -> {} vertices, {} edges in {} folds",
        bg.graph.vertex_count(),
        bg.graph.geometric_edge_count(),
        folded.graph.vertex_count(),
        folded.graph.geometric_edge_count(),
        trace.steps.len()
    );
    println!("rank {}", folded.graph.betti());
    println!("contains b a^-1: {}", accepts(&folded, &[b, a.flipped()]).unwrap());
    print!("{}", graph_to_dot(&folded.graph, Some(folded.basepoint)));
}
