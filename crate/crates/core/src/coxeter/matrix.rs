use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::word::{Generator, Word};
use super::CoxeterError;

/// Order of the product `st` of two generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Order {
    Finite(u32),
    Infinite,
}

impl Order {
    pub fn finite(self) -> Option<u32> {
        match self {
            Order::Finite(m) => Some(m),
            Order::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Order::Infinite)
    }

    /// `self >= bound`, with infinity above every integer.
    pub fn at_least(self, bound: u128) -> bool {
        match self {
            Order::Finite(m) => u128::from(m) >= bound,
            Order::Infinite => true,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(m) => write!(f, "{m}"),
            Order::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Order {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") || s == "∞" {
            return Ok(Order::Infinite);
        }
        s.parse::<u32>().map(Order::Finite).map_err(|_| format!("invalid Coxeter entry {s:?}"))
    }
}

impl Serialize for Order {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Order::Finite(m) => serializer.serialize_u32(*m),
            Order::Infinite => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Order {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u32),
            Text(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Num(m) => Ok(Order::Finite(m)),
            Raw::Text(t) => t.parse().map_err(serde::de::Error::custom),
        }
    }
}

/// A Coxeter matrix `M = (m_st)` over an ordered set of named generators.
///
/// The generator order fixes the lexicographic order on words used for
/// tie-breaking in [`reduce`](super::reduce).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterMatrix {
    names: Vec<String>,
    entries: Vec<Order>,
}

/// JSON mirror of the text format: generator names plus upper-triangular rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub generators: Vec<String>,
    pub upper: Vec<Vec<Order>>,
}

impl CoxeterMatrix {
    /// Builds a matrix from the off-diagonal upper triangle: `upper[i][k]` is
    /// the entry for generators `i` and `i + 1 + k`.
    pub fn from_upper(names: Vec<String>, upper: &[Vec<Order>]) -> Result<Self, CoxeterError> {
        let n = names.len();
        if n == 0 {
            return Err(CoxeterError::Parse("matrix needs at least one generator".into()));
        }
        for (i, a) in names.iter().enumerate() {
            if a.is_empty() || a.chars().any(char::is_whitespace) {
                return Err(CoxeterError::Parse(format!("invalid generator name {a:?}")));
            }
            if names[..i].contains(a) {
                return Err(CoxeterError::Parse(format!("duplicate generator name {a:?}")));
            }
        }
        if upper.len() != n - 1 {
            return Err(CoxeterError::Parse(format!(
                "expected {} upper-triangular rows, found {}",
                n - 1,
                upper.len()
            )));
        }
        let mut entries = vec![Order::Finite(1); n * n];
        for (i, row) in upper.iter().enumerate() {
            if row.len() != n - 1 - i {
                return Err(CoxeterError::Parse(format!(
                    "row {} must have {} entries, found {}",
                    i + 1,
                    n - 1 - i,
                    row.len()
                )));
            }
            for (k, &m) in row.iter().enumerate() {
                if let Order::Finite(v) = m {
                    if v < 2 {
                        return Err(CoxeterError::Parse(format!(
                            "off-diagonal entry m({},{}) = {v} must be at least 2",
                            names[i],
                            names[i + 1 + k]
                        )));
                    }
                }
                let j = i + 1 + k;
                entries[i * n + j] = m;
                entries[j * n + i] = m;
            }
        }
        Ok(Self { names, entries })
    }

    /// Matrix with every off-diagonal entry equal to `m`.
    pub fn uniform(names: &[&str], m: Order) -> Result<Self, CoxeterError> {
        let n = names.len();
        let upper: Vec<Vec<Order>> = (0..n.saturating_sub(1)).map(|i| vec![m; n - 1 - i]).collect();
        Self::from_upper(names.iter().map(|s| s.to_string()).collect(), &upper)
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, g: Generator) -> &str {
        &self.names[g]
    }

    pub fn generator(&self, name: &str) -> Option<Generator> {
        self.names.iter().position(|n| n == name)
    }

    pub fn entry(&self, s: Generator, t: Generator) -> Order {
        self.entries[s * self.rank() + t]
    }

    /// Returns a copy with the `{s,t}` entry replaced.
    pub fn with_entry(&self, s: Generator, t: Generator, m: Order) -> Self {
        let n = self.rank();
        let mut out = self.clone();
        out.entries[s * n + t] = m;
        out.entries[t * n + s] = m;
        out
    }

    /// Iterator over unordered pairs `s < t` with their entry.
    pub fn pairs(&self) -> impl Iterator<Item = (Generator, Generator, Order)> + '_ {
        let n = self.rank();
        (0..n).flat_map(move |s| ((s + 1)..n).map(move |t| (s, t, self.entry(s, t))))
    }

    /// All off-diagonal entries are at least 3.
    pub fn is_skew_angled(&self) -> bool {
        self.pairs().all(|(_, _, m)| m.at_least(3))
    }

    pub fn min_off_diagonal(&self) -> Option<Order> {
        self.pairs().map(|(_, _, m)| m).min()
    }

    pub fn parse_text(text: &str) -> Result<Self, CoxeterError> {
        let mut lines = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| CoxeterError::Parse("empty matrix file".into()))?;
        let names: Vec<String> = header.split_whitespace().map(str::to_owned).collect();
        let mut upper = Vec::new();
        for line in lines {
            let row = line
                .split_whitespace()
                .map(|tok| tok.parse::<Order>().map_err(CoxeterError::Parse))
                .collect::<Result<Vec<_>, _>>()?;
            upper.push(row);
        }
        Self::from_upper(names, &upper)
    }

    pub fn to_text(&self) -> String {
        let mut out = self.names.join(" ");
        out.push('\n');
        for row in self.upper() {
            let cells: Vec<String> = row.iter().map(Order::to_string).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }

    fn upper(&self) -> Vec<Vec<Order>> {
        let n = self.rank();
        (0..n.saturating_sub(1)).map(|i| ((i + 1)..n).map(|j| self.entry(i, j)).collect()).collect()
    }

    pub fn to_file(&self) -> MatrixFile {
        MatrixFile { generators: self.names.clone(), upper: self.upper() }
    }

    pub fn from_file(file: &MatrixFile) -> Result<Self, CoxeterError> {
        Self::from_upper(file.generators.clone(), &file.upper)
    }

    pub fn parse_json(text: &str) -> Result<Self, CoxeterError> {
        let file: MatrixFile = serde_json::from_str(text).map_err(|e| CoxeterError::Parse(e.to_string()))?;
        Self::from_file(&file)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("matrix serializes")
    }

    /// Parses either format, choosing JSON when the text starts with `{`.
    pub fn parse_any(text: &str) -> Result<Self, CoxeterError> {
        if text.trim_start().starts_with('{') {
            Self::parse_json(text)
        } else {
            Self::parse_text(text)
        }
    }

    /// Parses a word. Whitespace-separated tokens are generator names; a
    /// token without whitespace is split greedily by longest matching name,
    /// so `"sts"` and `"s1s2s1"` both work. `""` and `"1"`/`"e"` (when not
    /// generator names) denote the empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word, CoxeterError> {
        let text = text.trim();
        if text.is_empty() || ((text == "1" || text == "e") && self.generator(text).is_none()) {
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let mut rest = token;
            while !rest.is_empty() {
                let best = self
                    .names
                    .iter()
                    .enumerate()
                    .filter(|(_, n)| rest.starts_with(n.as_str()))
                    .max_by_key(|(_, n)| n.len())
                    .ok_or_else(|| CoxeterError::UnknownGenerator(rest.to_string()))?;
                letters.push(best.0);
                rest = &rest[best.1.len()..];
            }
        }
        Ok(Word::from(letters))
    }

    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        w.iter().map(|&g| self.name(g)).collect::<Vec<_>>().join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip_with_infinity() {
        let text = "a b c\n3 inf\n2\n";
        let m = CoxeterMatrix::parse_text(text).unwrap();
        assert_eq!(m.entry(0, 1), Order::Finite(3));
        assert_eq!(m.entry(2, 0), Order::Infinite);
        assert_eq!(m.entry(1, 1), Order::Finite(1));
        assert_eq!(m.to_text(), text);
        assert_eq!(CoxeterMatrix::parse_json(&m.to_json()).unwrap(), m);
    }

    #[test]
    fn rejects_small_entries_and_bad_shapes() {
        assert!(CoxeterMatrix::parse_text("a b\n1\n").is_err());
        assert!(CoxeterMatrix::parse_text("a b c\n3\n2\n").is_err());
        assert!(CoxeterMatrix::parse_text("a a\n3\n").is_err());
        assert!(CoxeterMatrix::parse_text("").is_err());
    }

    #[test]
    fn skew_angled_flag() {
        let m = CoxeterMatrix::uniform(&["a", "b", "c"], Order::Finite(3)).unwrap();
        assert!(m.is_skew_angled());
        let m = m.with_entry(0, 2, Order::Finite(2));
        assert!(!m.is_skew_angled());
    }

    #[test]
    fn word_parsing() {
        let m = CoxeterMatrix::parse_text("s1 s2 s10\n3 3\n3\n").unwrap();
        assert_eq!(m.parse_word("s1s10s2").unwrap().letters(), &[0, 2, 1]);
        assert_eq!(m.parse_word("s1 s2").unwrap().letters(), &[0, 1]);
        assert!(m.parse_word("").unwrap().is_empty());
        assert!(m.parse_word("x").is_err());
        assert_eq!(m.format_word(&m.parse_word("s2 s1").unwrap()), "s2 s1");
    }
}
