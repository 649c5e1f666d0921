use std::collections::{BTreeSet, HashSet, VecDeque};

use super::alternating::{alternating_word, homotopy_sites};
use super::{CoxeterError, CoxeterMatrix, Word};

/// Default cap on the number of distinct words a single query may explore.
pub const DEFAULT_BUDGET: usize = 2_000_000;

/// Breadth-first closure of a word under cancellations and homotopies.
#[derive(Clone, Debug)]
pub struct TitsClosure {
    pub origin: Word,
    pub members: BTreeSet<Word>,
    pub budget_exhausted: bool,
}

impl TitsClosure {
    pub fn contains_identity(&self) -> bool {
        self.members.contains(&Word::empty())
    }

    /// Shortest members, lexicographically first.
    pub fn shortest(&self) -> Option<&Word> {
        self.members.iter().min_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)))
    }
}

fn apply_homotopy(w: &[usize], pos: usize, s: usize, t: usize, m: usize) -> Vec<usize> {
    let mut out = w.to_vec();
    out[pos..pos + m].copy_from_slice(alternating_word(t, s, m).expect("s != t").letters());
    out
}

fn homotopy_neighbours(w: &[usize], matrix: &CoxeterMatrix) -> Vec<Vec<usize>> {
    homotopy_sites(&Word::from(w), matrix)
        .into_iter()
        .map(|site| {
            let m = matrix.entry(site.s, site.t).finite().expect("finite site") as usize;
            apply_homotopy(w, site.position, site.s, site.t, m)
        })
        .collect()
}

/// Full closure as in Tits' theorem. `budget` bounds the member count; when
/// it is reached the frontier is dropped and `budget_exhausted` is set.
pub fn tits_closure(w: &Word, matrix: &CoxeterMatrix, budget: usize) -> TitsClosure {
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut queue = VecDeque::new();
    let mut exhausted = false;
    seen.insert(w.letters().to_vec());
    queue.push_back(w.letters().to_vec());
    'bfs: while let Some(cur) = queue.pop_front() {
        let cancels = (0..cur.len().saturating_sub(1)).filter(|&i| cur[i] == cur[i + 1]).map(|i| {
            let mut next = cur.clone();
            next.drain(i..i + 2);
            next
        });
        let next: Vec<Vec<usize>> = cancels.chain(homotopy_neighbours(&cur, matrix)).collect();
        for n in next {
            if seen.contains(&n) {
                continue;
            }
            if seen.len() >= budget {
                exhausted = true;
                break 'bfs;
            }
            seen.insert(n.clone());
            queue.push_back(n);
        }
    }
    TitsClosure { origin: w.clone(), members: seen.into_iter().map(Word::from).collect(), budget_exhausted: exhausted }
}

/// Explores the homotopy class of `start`. Returns a member containing a
/// cancellation if one exists, otherwise the lexicographically least member.
fn explore_class(
    start: Vec<usize>,
    matrix: &CoxeterMatrix,
    budget: usize,
    used: &mut usize,
) -> Result<(Vec<usize>, bool), CoxeterError> {
    let has_cancel = |w: &[usize]| w.windows(2).any(|p| p[0] == p[1]);
    if has_cancel(&start) {
        return Ok((start, true));
    }
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut queue = VecDeque::new();
    let mut best = start.clone();
    seen.insert(start.clone());
    queue.push_back(start);
    *used += 1;
    while let Some(cur) = queue.pop_front() {
        for n in homotopy_neighbours(&cur, matrix) {
            if seen.contains(&n) {
                continue;
            }
            if has_cancel(&n) {
                return Ok((n, true));
            }
            *used += 1;
            if *used > budget {
                return Err(CoxeterError::Indeterminate { budget });
            }
            if n < best {
                best = n.clone();
            }
            seen.insert(n.clone());
            queue.push_back(n);
        }
    }
    Ok((best, false))
}

fn free_reduce(w: Vec<usize>) -> Vec<usize> {
    Word::from(w).freely_reduced().into_letters()
}

/// Shortest word equal to `w` in `W(M)`, lexicographically least among the
/// shortest under the generator order of `matrix`.
pub fn reduce_with(w: &Word, matrix: &CoxeterMatrix, budget: usize) -> Result<Word, CoxeterError> {
    let mut used = 0usize;
    let mut cur = free_reduce(w.letters().to_vec());
    loop {
        let (found, cancels) = explore_class(cur, matrix, budget, &mut used)?;
        if !cancels {
            return Ok(Word::from(found));
        }
        cur = free_reduce(found);
    }
}

pub fn reduce(w: &Word, matrix: &CoxeterMatrix) -> Result<Word, CoxeterError> {
    reduce_with(w, matrix, DEFAULT_BUDGET)
}

/// Geodesic test: no sequence of moves shortens `w`.
pub fn is_reduced(w: &Word, matrix: &CoxeterMatrix) -> Result<bool, CoxeterError> {
    Ok(reduce(w, matrix)?.len() == w.len())
}

pub fn is_identity_with(w: &Word, matrix: &CoxeterMatrix, budget: usize) -> Result<bool, CoxeterError> {
    Ok(reduce_with(w, matrix, budget)?.is_empty())
}

pub fn is_identity(w: &Word, matrix: &CoxeterMatrix) -> Result<bool, CoxeterError> {
    is_identity_with(w, matrix, DEFAULT_BUDGET)
}

pub fn equal_in_group_with(a: &Word, b: &Word, matrix: &CoxeterMatrix, budget: usize) -> Result<bool, CoxeterError> {
    is_identity_with(&a.concat(&b.inverse()), matrix, budget)
}

pub fn equal_in_group(a: &Word, b: &Word, matrix: &CoxeterMatrix) -> Result<bool, CoxeterError> {
    equal_in_group_with(a, b, matrix, DEFAULT_BUDGET)
}
