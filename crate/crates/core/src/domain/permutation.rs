use std::fmt;
use std::str::FromStr;

use crate::error::{PpmError, Result};

/// A permutation of `[n]` in one-line notation.
///
/// Positions and values are 1-based at every public boundary; `value(i)` is
/// `σ(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    values: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its one-line notation, checking that every
    /// value of `1..=n` occurs exactly once.
    pub fn new(values: Vec<usize>) -> Result<Self> {
        if values.is_empty() {
            return Err(PpmError::EmptyInput);
        }
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for (idx, &v) in values.iter().enumerate() {
            if v == 0 || v > n {
                return Err(PpmError::NotAPermutation(format!(
                    "value {v} at position {} is outside 1..={n}",
                    idx + 1
                )));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(PpmError::NotAPermutation(format!("value {v} repeated")));
            }
        }
        Ok(Permutation { values })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "permutations have length at least 1");
        Permutation {
            values: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Always false; kept for API symmetry with slices.
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `σ(position)`, with `position` in `1..=n`.
    pub fn value(&self, position: usize) -> usize {
        self.values[position - 1]
    }

    /// One-line notation.
    pub fn as_slice(&self) -> &[usize] {
        &self.values
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (pos, &v) in self.values.iter().enumerate() {
            inv[v - 1] = pos + 1;
        }
        Permutation { values: inv }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_permutation(self))
    }
}

impl FromStr for Permutation {
    type Err = PpmError;

    fn from_str(s: &str) -> Result<Self> {
        parse_permutation(s)
    }
}

/// Parses whitespace- or comma-separated decimals in one-line notation.
pub fn parse_permutation(text: &str) -> Result<Permutation> {
    let values = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            if !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(PpmError::MalformedToken(t.to_string()));
            }
            t.parse::<usize>()
                .map_err(|_| PpmError::MalformedToken(t.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    Permutation::new(values)
}

/// Space-separated decimals, no brackets, no trailing newline.
pub fn format_permutation(p: &Permutation) -> String {
    let mut out = String::with_capacity(p.len() * 3);
    for (i, v) in p.values.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        out.push_str(&v.to_string());
    }
    out
}

/// The relative order of `values`: entry `i` of the result is the rank of
/// `values[i]` among all entries, smallest first.
///
/// Any distinct integers are accepted, not only `1..=m`.
pub fn pattern_of<T: Ord + Copy + fmt::Display>(values: &[T]) -> Result<Permutation> {
    if values.is_empty() {
        return Err(PpmError::EmptyInput);
    }
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_unstable_by_key(|&i| values[i]);
    let mut ranks = vec![0; values.len()];
    for (rank, w) in order.iter().enumerate() {
        if rank > 0 && values[order[rank - 1]] == values[*w] {
            return Err(PpmError::DuplicateValues(values[*w].to_string()));
        }
        ranks[*w] = rank + 1;
    }
    Ok(Permutation { values: ranks })
}
