//! A five generator group with rank at most four.

use coxrank::coxeter::DEFAULT_BUDGET;
use coxrank::family::{certify, closed_form_witnesses, ExampleFamily};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(7);
    let f = ExampleFamily::new(q)?;
    let witnesses = closed_form_witnesses(&f);
    match certify(&f, &witnesses, DEFAULT_BUDGET)? {
        Some(done) => {
            for c in done {
                println!("{}  (length {}, {} x-letters)", c.witness, c.word_length, c.x_letters);
            }
            println!("x1..x4 generate W");
        }
        None => println!("not certified"),
    }
    Ok(())
}
