//! The lower bounds on the rank and the large-label threshold.

use coxrank::coxeter::{
    mod2_rank_bound, petersen_thom_bound, petersen_thom_sum, theorem_applies, theorem_threshold, CoxeterMatrix,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for text in ["a b c\n3 3\n3\n", "a b c\n4 6\ninf\n", "a b c\n48 48\n60\n", "a b c d\n96 inf 96\n100 96\n96\n"] {
        let m = CoxeterMatrix::parse_text(text)?;
        let n = m.rank();
        println!(
            "n = {n}: mod-2 {}, sum {} ({:?}), threshold {}, applies {}",
            mod2_rank_bound(&m),
            petersen_thom_sum(&m),
            petersen_thom_bound(&m),
            theorem_threshold(n),
            theorem_applies(&m)
        );
    }
    Ok(())
}
