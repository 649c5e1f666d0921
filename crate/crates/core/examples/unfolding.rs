//! Unfolding moves keep the primary complexity.

use coxrank::decomposition::{complexity, unfold_components, Marking};
use coxrank::fixtures;

fn main() {
    let f = fixtures::load("three_pieces");
    let d = &f.decomposition;
    let choice: Vec<_> = d.forest_components().iter().map(|c| *c.iter().next().unwrap()).collect();
    let t = unfold_components(d, &choice).unwrap();
    let before = complexity(d, &Marking::empty()).unwrap();
    let after = complexity(&t.result, &Marking::empty()).unwrap();
    println!("before {}", before.tuple);
    println!("after  {}", after.tuple);
    println!("Γ: {} -> {} vertices", d.gamma.vertex_count(), t.result.gamma.vertex_count());
}
