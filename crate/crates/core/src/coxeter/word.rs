use std::ops::Deref;

/// Index of a generator in its [`CoxeterMatrix`](super::CoxeterMatrix).
pub type Generator = usize;

/// A finite word over the generators. Every generator is an involution, so
/// the inverse of a word is its reversal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Generator>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Generator> {
        self.0
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&mut self, g: Generator) {
        self.0.push(g);
    }

    pub fn pow(&self, k: usize) -> Word {
        Word(self.0.repeat(k))
    }

    /// No two adjacent letters are equal.
    pub fn is_freely_reduced(&self) -> bool {
        self.0.windows(2).all(|p| p[0] != p[1])
    }

    /// Cancels adjacent equal pairs until none remain.
    pub fn freely_reduced(&self) -> Word {
        let mut out: Vec<Generator> = Vec::with_capacity(self.len());
        for &g in &self.0 {
            if out.last() == Some(&g) {
                out.pop();
            } else {
                out.push(g);
            }
        }
        Word(out)
    }

    pub fn factor(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }
}

impl Deref for Word {
    type Target = [Generator];

    fn deref(&self) -> &[Generator] {
        &self.0
    }
}

impl From<Vec<Generator>> for Word {
    fn from(v: Vec<Generator>) -> Self {
        Word(v)
    }
}

impl From<&[Generator]> for Word {
    fn from(v: &[Generator]) -> Self {
        Word(v.to_vec())
    }
}

impl FromIterator<Generator> for Word {
    fn from_iter<I: IntoIterator<Item = Generator>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_reduction_cascades() {
        let w = Word::from(vec![0, 1, 2, 2, 1, 3]);
        assert_eq!(w.freely_reduced().letters(), &[0, 3]);
        assert!(!w.is_freely_reduced());
        assert!(w.freely_reduced().is_freely_reduced());
    }

    #[test]
    fn inverse_is_reversal() {
        let w = Word::from(vec![0, 1, 2]);
        assert_eq!(w.inverse().letters(), &[2, 1, 0]);
        assert_eq!(w.concat(&w.inverse()).freely_reduced(), Word::empty());
    }
}
