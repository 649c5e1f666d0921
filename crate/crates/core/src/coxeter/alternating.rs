use super::{CoxeterError, CoxeterMatrix, Generator, Word};

/// `γ_st(k)`: the alternating word `stst…` of length `k`.
pub fn alternating_word(s: Generator, t: Generator, k: usize) -> Result<Word, CoxeterError> {
    if s == t {
        return Err(CoxeterError::InvalidArguments("alternating word needs two distinct generators".into()));
    }
    Ok((0..k).map(|i| if i % 2 == 0 { s } else { t }).collect())
}

/// Positions `i` with `w[i] = w[i+1]`.
pub fn cancellation_sites(w: &Word) -> Vec<usize> {
    (0..w.len().saturating_sub(1)).filter(|&i| w[i] == w[i + 1]).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HomotopySite {
    pub position: usize,
    pub s: Generator,
    pub t: Generator,
}

/// Length of the longest alternating factor starting at each position.
fn alternating_runs(w: &[Generator]) -> Vec<usize> {
    let n = w.len();
    let mut run = vec![1; n];
    for i in (0..n.saturating_sub(1)).rev() {
        if w[i] != w[i + 1] {
            run[i] = if i + 2 < n && w[i + 2] == w[i] { run[i + 1] + 1 } else { 2 };
        }
    }
    run
}

/// Every occurrence of a factor `γ_st(m_st)` with `m_st` finite.
pub fn homotopy_sites(w: &Word, matrix: &CoxeterMatrix) -> Vec<HomotopySite> {
    let run = alternating_runs(w);
    let mut out = Vec::new();
    for i in 0..w.len().saturating_sub(1) {
        let (s, t) = (w[i], w[i + 1]);
        if s == t {
            continue;
        }
        if let Some(m) = matrix.entry(s, t).finite() {
            if run[i] >= m as usize {
                out.push(HomotopySite { position: i, s, t });
            }
        }
    }
    out
}

/// A maximal alternating factor `w[start..end]`. `pair` is `None` only for
/// length-one segments.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Segment {
    pub start: usize,
    pub end: usize,
    pub pair: Option<(Generator, Generator)>,
}

impl Segment {
    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.end == self.start
    }
}

fn sorted_pair(a: Generator, b: Generator) -> (Generator, Generator) {
    (a.min(b), a.max(b))
}

/// All maximal alternating factors, ordered by start. In a freely reduced
/// word consecutive segments overlap in exactly one letter.
pub fn alternating_segments(w: &Word) -> Vec<Segment> {
    let run = alternating_runs(w);
    let n = w.len();
    let mut out = Vec::new();
    for i in 0..n {
        // maximal unless the run one step to the left already contains it
        if i > 0 && run[i - 1] > run[i] {
            continue;
        }
        let pair = (run[i] >= 2).then(|| sorted_pair(w[i], w[i + 1]));
        out.push(Segment { start: i, end: i + run[i], pair });
    }
    out
}

/// Minimal number of maximal alternating factors covering `w`. Defined for
/// freely reduced words only.
pub fn kappa(w: &Word, _matrix: &CoxeterMatrix) -> Result<usize, CoxeterError> {
    if !w.is_freely_reduced() {
        return Err(CoxeterError::NotReduced);
    }
    let segments = alternating_segments(w);
    let mut covered = 0;
    let mut count = 0;
    let mut idx = 0;
    while covered < w.len() {
        let mut reach = covered;
        while idx < segments.len() && segments[idx].start <= covered {
            reach = reach.max(segments[idx].end);
            idx += 1;
        }
        debug_assert!(reach > covered, "segments cover every letter");
        covered = reach;
        count += 1;
    }
    Ok(count)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AlmostRelator {
    pub start: usize,
    pub end: usize,
    pub pair: (Generator, Generator),
}

/// Leftmost maximal alternating factor of type `{s,t}` with `m_st` finite
/// and length at least `2 m_st - 3`.
pub fn find_almost_relator(w: &Word, matrix: &CoxeterMatrix) -> Option<AlmostRelator> {
    alternating_segments(w).into_iter().find_map(|seg| {
        let (s, t) = seg.pair?;
        let m = matrix.entry(s, t).finite()? as usize;
        (seg.len() + 3 >= 2 * m).then_some(AlmostRelator { start: seg.start, end: seg.end, pair: (s, t) })
    })
}
