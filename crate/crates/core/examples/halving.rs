//! Halving an even label along special paths of that type.

use coxrank::decomposition::{complexity, halve_special_type, Marking};
use coxrank::fixtures;

fn main() {
    for m in [6, 8, 10, 12] {
        let f = fixtures::load(&format!("halving_m{m}"));
        let d = &f.decomposition;
        let h = halve_special_type(d, 0, 1).unwrap();
        let before = complexity(d, &Marking::empty()).unwrap();
        let after = complexity(&h.result, &Marking::empty()).unwrap();
        println!(
            "m = {m} -> {:?}: c* {} -> {}, failed {:?}",
            h.result.matrix.entry(0, 1),
            before.c_star,
            after.c_star,
            h.report.failed()
        );
    }
}
