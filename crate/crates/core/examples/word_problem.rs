//! Solving the word problem in a hyperbolic triangle group.

use coxrank::coxeter::{find_almost_relator, is_identity, kappa, reduce, CoxeterMatrix};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m = CoxeterMatrix::parse_text("s t u\n4 5\n5\n")?;

    let w = m.parse_word("s t s t s u u t")?;
    println!("{} reduces to {}", m.format_word(&w), m.format_word(&reduce(&w, &m)?));

    let rel = m.parse_word("s t s t s t s t")?;
    println!("(st)^4 trivial: {}", is_identity(&rel, &m)?);

    let long = m.parse_word("u s t s t s u")?;
    if let Some(a) = find_almost_relator(&long, &m) {
        println!("almost relator at [{}, {})", a.start, a.end);
    }
    println!("kappa = {}", kappa(&long, &m)?);
    Ok(())
}
