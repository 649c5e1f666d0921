use num_rational::BigRational;

use super::{CoxeterMatrix, Order};

/// Number of components of the graph on `S` joining `s` and `t` when
/// `m_st` is odd. This is the rank of the abelianization `W -> (Z/2)^k`,
/// hence a lower bound for the rank of `W(M)`.
pub fn mod2_rank_bound(matrix: &CoxeterMatrix) -> usize {
    let n = matrix.rank();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = n;
    for (s, t, m) in matrix.pairs() {
        if let Order::Finite(v) = m {
            if v % 2 == 1 {
                let (a, b) = (find(&mut parent, s), find(&mut parent, t));
                if a != b {
                    parent[a] = b;
                    components -= 1;
                }
            }
        }
    }
    components
}

/// `½ Σ 1/m_st` over ordered pairs `s ≠ t`, with `∞` contributing zero.
/// Each unordered pair therefore contributes `1/m_st` once.
pub fn petersen_thom_sum(matrix: &CoxeterMatrix) -> BigRational {
    matrix
        .pairs()
        .filter_map(|(_, _, m)| m.finite())
        .map(|m| BigRational::new(1.into(), m.into()))
        .fold(BigRational::from_integer(0.into()), |acc, x| acc + x)
}

/// `⌈n/2⌉` when the sum above is below one.
pub fn petersen_thom_bound(matrix: &CoxeterMatrix) -> Option<usize> {
    (petersen_thom_sum(matrix) < BigRational::from_integer(1.into())).then(|| matrix.rank().div_ceil(2))
}

/// `6 · 2^n`, the entry threshold of the rank theorem.
pub fn theorem_threshold(n: usize) -> u128 {
    6u128.checked_shl(n as u32).unwrap_or(u128::MAX)
}

/// Every off-diagonal entry is at least `6 · 2^n`, so the rank equals `n`.
pub fn theorem_applies(matrix: &CoxeterMatrix) -> bool {
    let bound = if matrix.rank() >= 125 { u128::MAX } else { theorem_threshold(matrix.rank()) };
    matrix.pairs().all(|(_, _, m)| m.at_least(bound))
}
