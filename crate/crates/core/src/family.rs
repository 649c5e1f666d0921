//! A rank-five Coxeter group generated by four elements.
//!
//! For odd `q ≥ 3` take `m(s1, s2) = 8`, `m(s2, sj) = q` for `j ≥ 3` and
//! `∞` elsewhere. With `h = (q − 1)/2` the four words
//!
//! ```text
//! x1 = s2
//! x2 = (s1 s2)³ s1 · (s3 s2)^h
//! x3 = s1 s2 s1 · (s4 s2)^h
//! x4 = s1 · (s5 s2)^h
//! ```
//!
//! generate `W`. Every entry is large compared to the rank, yet the rank
//! drops to at most four. Generation is certified here by writing each
//! `s_i` as a product of the `x_j` and of generators certified before it,
//! and checking every such equation with the word-problem engine.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coxeter::{alternating_word, reduce_with, CoxeterError, CoxeterMatrix, Generator, Order, Word};

pub const RANK: usize = 5;

#[derive(Clone, Debug)]
pub struct ExampleFamily {
    pub q: u32,
    pub matrix: CoxeterMatrix,
    pub x: Vec<Word>,
}

impl ExampleFamily {
    pub fn new(q: u32) -> Result<Self, CoxeterError> {
        if q < 3 || q.is_multiple_of(2) {
            return Err(CoxeterError::InvalidArguments(format!("q must be odd and at least 3, got {q}")));
        }
        let names: Vec<String> = (1..=RANK).map(|i| format!("s{i}")).collect();
        let inf = Order::Infinite;
        let fq = Order::Finite(q);
        let upper = vec![vec![Order::Finite(8), inf, inf, inf], vec![fq, fq, fq], vec![inf, inf], vec![inf]];
        let matrix = CoxeterMatrix::from_upper(names, &upper)?;
        let h2 = (q - 1) as usize;
        let alt = |a, b, k| alternating_word(a, b, k).expect("distinct generators");
        let x = vec![
            Word::from(vec![1]),
            alt(0, 1, 7).concat(&alt(2, 1, h2)),
            alt(0, 1, 3).concat(&alt(3, 1, h2)),
            Word::from(vec![0]).concat(&alt(4, 1, h2)),
        ];
        Ok(ExampleFamily { q, matrix, x })
    }

    pub fn h(&self) -> usize {
        ((self.q - 1) / 2) as usize
    }
}

/// One factor of a witness product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Factor {
    /// `x_{i+1}` or its inverse.
    X(usize, bool),
    /// A generator certified earlier.
    Gen(Generator),
    /// `γ(a, b; k)`, the alternating word of length `k`, in generators
    /// certified earlier.
    Alt(Generator, Generator, usize),
}

impl Factor {
    fn word(&self, family: &ExampleFamily) -> Word {
        match *self {
            Factor::X(i, false) => family.x[i].clone(),
            Factor::X(i, true) => family.x[i].inverse(),
            Factor::Gen(g) => Word::from(vec![g]),
            Factor::Alt(a, b, k) => alternating_word(a, b, k).expect("distinct generators"),
        }
    }

    fn generators(&self) -> Vec<Generator> {
        match *self {
            Factor::X(..) => Vec::new(),
            Factor::Gen(g) => vec![g],
            Factor::Alt(a, b, k) => [a, b].into_iter().take(k.min(2)).collect(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, CoxeterError> {
        let bad = || CoxeterError::Parse(format!("bad witness factor {text:?}"));
        let gen = |s: &str| -> Result<Generator, CoxeterError> {
            let i: usize = s.trim().strip_prefix('s').ok_or_else(bad)?.parse().map_err(|_| bad())?;
            (1..=RANK).contains(&i).then_some(i - 1).ok_or_else(bad)
        };
        if let Some(body) = text.strip_prefix("alt(").and_then(|r| r.strip_suffix(')')) {
            let parts: Vec<&str> = body.split(',').collect();
            if parts.len() != 3 {
                return Err(bad());
            }
            let (a, b) = (gen(parts[0])?, gen(parts[1])?);
            if a == b {
                return Err(bad());
            }
            return Ok(Factor::Alt(a, b, parts[2].trim().parse().map_err(|_| bad())?));
        }
        if let Some(rest) = text.strip_prefix('x') {
            let (num, inverse) = match rest.strip_suffix("^-1") {
                Some(n) => (n, true),
                None => (rest, false),
            };
            let i: usize = num.parse().map_err(|_| bad())?;
            return (1..=4).contains(&i).then_some(Factor::X(i - 1, inverse)).ok_or_else(bad);
        }
        Ok(Factor::Gen(gen(text)?))
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Factor::X(i, false) => write!(f, "x{}", i + 1),
            Factor::X(i, true) => write!(f, "x{}^-1", i + 1),
            Factor::Gen(g) => write!(f, "s{}", g + 1),
            Factor::Alt(a, b, k) => write!(f, "alt(s{},s{},{k})", a + 1, b + 1),
        }
    }
}

/// `target = product of factors`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub target: Generator,
    pub factors: Vec<Factor>,
}

impl Witness {
    /// The product as a word over `S`, with certified generators kept as
    /// single letters.
    pub fn word(&self, family: &ExampleFamily) -> Word {
        self.factors.iter().fold(Word::empty(), |w, f| w.concat(&f.word(family)))
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{} =", self.target + 1)?;
        for x in &self.factors {
            write!(f, " {x}")?;
        }
        Ok(())
    }
}

/// On-disk witness list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessFile {
    pub q: u32,
    pub witnesses: Vec<WitnessRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub target: String,
    pub factors: Vec<String>,
}

impl WitnessFile {
    pub fn new(q: u32, witnesses: &[Witness]) -> Self {
        WitnessFile {
            q,
            witnesses: witnesses
                .iter()
                .map(|w| WitnessRecord {
                    target: format!("s{}", w.target + 1),
                    factors: w.factors.iter().map(Factor::to_string).collect(),
                })
                .collect(),
        }
    }

    pub fn witnesses(&self) -> Result<Vec<Witness>, CoxeterError> {
        self.witnesses
            .iter()
            .map(|r| {
                let target = match Factor::parse(&r.target)? {
                    Factor::Gen(g) => g,
                    _ => return Err(CoxeterError::Parse(format!("bad witness target {:?}", r.target))),
                };
                let factors = r.factors.iter().map(|f| Factor::parse(f)).collect::<Result<_, _>>()?;
                Ok(Witness { target, factors })
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("witnesses serialize");
        s.push('\n');
        s
    }
}

/// The witnesses valid for every odd `q`, in certification order
/// `s2, s3, s4, s5, s1`.
pub fn closed_form_witnesses(family: &ExampleFamily) -> Vec<Witness> {
    use Factor::{Alt, X};
    let k = 2 * family.h();
    vec![
        Witness { target: 1, factors: vec![X(0, false)] },
        Witness { target: 2, factors: vec![X(1, true), X(0, false), X(1, false)] },
        Witness { target: 3, factors: vec![X(2, true), X(1, false), Alt(1, 2, k), X(2, false)] },
        Witness { target: 4, factors: vec![X(3, true), X(2, false), Alt(1, 3, k), X(3, false)] },
        Witness { target: 0, factors: vec![X(3, false), Alt(1, 4, k)] },
    ]
}

/// Finds witnesses by meet-in-the-middle over products of at most four
/// pool elements. The pool starts as `X ∪ X⁻¹` and grows by each newly
/// certified generator and the alternating words in certified pairs.
pub fn search_witnesses(family: &ExampleFamily, budget: usize) -> Result<Vec<Witness>, CoxeterError> {
    let m = &family.matrix;
    let mut pool: Vec<Vec<Factor>> = Vec::new();
    for i in 0..family.x.len() {
        pool.push(vec![Factor::X(i, false)]);
        if i > 0 {
            pool.push(vec![Factor::X(i, true)]);
        }
    }
    let word_of = |fs: &[Factor]| fs.iter().fold(Word::empty(), |w, f| w.concat(&f.word(family)));
    let mut found: Vec<Witness> = Vec::new();
    while found.len() < RANK {
        // products of one or two pool elements, first spelling wins
        let mut half: Vec<(Word, Vec<Factor>)> = vec![(Word::empty(), Vec::new())];
        let mut index: HashMap<Word, usize> = HashMap::from([(Word::empty(), 0)]);
        let mut add = |fs: Vec<Factor>, half: &mut Vec<(Word, Vec<Factor>)>| -> Result<(), CoxeterError> {
            let r = reduce_with(&word_of(&fs), m, budget)?;
            if !index.contains_key(&r) {
                index.insert(r.clone(), half.len());
                half.push((r, fs));
            }
            Ok(())
        };
        for p in &pool {
            add(p.clone(), &mut half)?;
        }
        for a in &pool {
            for b in &pool {
                add([a.as_slice(), b.as_slice()].concat(), &mut half)?;
            }
        }
        let lookup: HashMap<&Word, usize> = half.iter().enumerate().map(|(i, (w, _))| (w, i)).collect();
        let mut progress = false;
        for g in 0..RANK {
            if found.iter().any(|w| w.target == g) {
                continue;
            }
            for (left, names) in &half {
                let need = reduce_with(&left.inverse().concat(&Word::from(vec![g])), m, budget)?;
                if let Some(&j) = lookup.get(&need) {
                    let factors = [names.as_slice(), half[j].1.as_slice()].concat();
                    found.push(Witness { target: g, factors });
                    progress = true;
                    break;
                }
            }
        }
        if !progress {
            return Err(CoxeterError::InvalidArguments(format!(
                "search stalled with {} of {RANK} generators",
                found.len()
            )));
        }
        let certified: Vec<Generator> = found.iter().map(|w| w.target).collect();
        for &g in &certified {
            let entry = vec![Factor::Gen(g)];
            if !pool.contains(&entry) {
                pool.push(entry);
            }
        }
        for &a in &certified {
            for &b in &certified {
                if let (true, Order::Finite(mab)) = (a < b, m.entry(a, b)) {
                    for (x, y) in [(a, b), (b, a)] {
                        for k in 2..2 * mab as usize {
                            let entry = vec![Factor::Alt(x, y, k)];
                            if !pool.contains(&entry) {
                                pool.push(entry);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(found)
}

/// A checked witness.
#[derive(Clone, Debug)]
pub struct Certified {
    pub witness: Witness,
    /// Length of the checked word over `S`.
    pub word_length: usize,
    /// Number of `x`-letters once every earlier generator is expanded.
    pub x_letters: u128,
}

/// Checks the witnesses in order. Each may use only generators certified
/// before it. Returns `Ok(None)` if some equation fails.
pub fn certify(
    family: &ExampleFamily,
    witnesses: &[Witness],
    budget: usize,
) -> Result<Option<Vec<Certified>>, CoxeterError> {
    let mut done: Vec<Certified> = Vec::new();
    let mut cost: HashMap<Generator, u128> = HashMap::new();
    for w in witnesses {
        let available = w.factors.iter().flat_map(Factor::generators).all(|g| cost.contains_key(&g) && g != w.target);
        if !available || cost.contains_key(&w.target) {
            return Ok(None);
        }
        let word = w.word(family);
        let target = Word::from(vec![w.target]);
        let diff = word.concat(&target);
        if !reduce_with(&diff, &family.matrix, budget)?.is_empty() {
            return Ok(None);
        }
        let x_letters = w
            .factors
            .iter()
            .map(|f| match *f {
                Factor::X(..) => 1u128,
                Factor::Gen(g) => cost[&g],
                Factor::Alt(a, b, k) => {
                    let (ca, cb) = (cost[&a], cost[&b]);
                    let k = k as u128;
                    ca.saturating_mul(k.div_ceil(2)).saturating_add(cb.saturating_mul(k / 2))
                }
            })
            .fold(0u128, u128::saturating_add);
        cost.insert(w.target, x_letters);
        done.push(Certified { witness: w.clone(), word_length: word.len(), x_letters });
    }
    Ok((cost.len() == RANK).then_some(done))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::DEFAULT_BUDGET;

    #[test]
    fn words_for_q_101() {
        let f = ExampleFamily::new(101).unwrap();
        assert_eq!(f.h(), 50);
        assert_eq!(f.x[1].len(), 7 + 100);
        assert_eq!(f.x[2].len(), 3 + 100);
        assert_eq!(f.x[3].len(), 1 + 100);
        assert_eq!(f.matrix.format_word(&f.x[3].factor(0, 3)), "s1 s5 s2");
    }

    #[test]
    fn even_or_small_q_rejected() {
        assert!(ExampleFamily::new(4).is_err());
        assert!(ExampleFamily::new(1).is_err());
    }

    #[test]
    fn closed_form_certifies_for_small_q() {
        for q in [3, 5, 7, 9] {
            let f = ExampleFamily::new(q).unwrap();
            let done = certify(&f, &closed_form_witnesses(&f), DEFAULT_BUDGET).unwrap();
            assert!(done.is_some(), "q = {q}");
        }
    }

    #[test]
    fn out_of_order_use_is_refused() {
        let f = ExampleFamily::new(7).unwrap();
        let mut w = closed_form_witnesses(&f);
        w.swap(1, 2);
        assert!(certify(&f, &w, DEFAULT_BUDGET).unwrap().is_none());
    }

    #[test]
    fn wrong_witness_is_refused() {
        let f = ExampleFamily::new(7).unwrap();
        let mut w = closed_form_witnesses(&f);
        w[1].factors.push(Factor::X(0, false));
        assert!(certify(&f, &w, DEFAULT_BUDGET).unwrap().is_none());
    }

    #[test]
    fn factor_text_round_trip() {
        for f in [Factor::X(0, false), Factor::X(3, true), Factor::Gen(4), Factor::Alt(1, 2, 6)] {
            assert_eq!(Factor::parse(&f.to_string()).unwrap(), f);
        }
        assert!(Factor::parse("x5").is_err());
        assert!(Factor::parse("alt(s1,s1,3)").is_err());
    }
}
