//! Rewriting an arc of a graph by an equal word.

use coxrank::coxeter::CoxeterMatrix;
use coxrank::graph::{ao_move, pi1_generators, wedge_graph, AlphabetMode, Letter};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m = CoxeterMatrix::parse_text("s t u\n3 inf\n4\n")?;
    let petal = Letter::of_word(&m.parse_word("u s t s u")?);
    let bg = wedge_graph(AlphabetMode::Involutive, m.names().to_vec(), &[petal])?;
    let g = &bg.graph;
    let petal = pi1_generators(&bg)?.remove(0);
    // the stretch reading s t s, off the basepoint
    let gamma = petal.slice(g, 1, 4);

    let w = m.parse_word("t s t")?;
    let trace = ao_move(&bg, &gamma, (0, 2), &w, &m)?;
    let after = &trace.result;
    let moved = trace.transport_path(&bg, &petal)?;
    println!("{} became {}", m.format_word(&petal.word(g)), m.format_word(&moved.word(&after.graph)));
    Ok(())
}
