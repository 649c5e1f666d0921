//! Validating a stored decomposition and computing its complexity.

use coxrank::decomposition::{check_tame, complexity, inequality_chain, validate_special};
use coxrank::fixtures;

fn main() {
    let f = fixtures::load("three_pieces");
    let d = &f.decomposition;
    let report = validate_special(&d.delta, &d.matrix);
    println!("special: {} (failed {:?})", report.passed(), report.failed());

    let c = complexity(d, &f.marking).unwrap();
    println!("complexity {}, c* = {}", c.tuple, c.c_star);

    let tame = check_tame(d, &f.marking, f.witnesses.as_ref()).unwrap();
    println!("tame: {}", tame.is_tame());
    for step in inequality_chain(d, &f.marking) {
        println!("  {step:?}");
    }
}
