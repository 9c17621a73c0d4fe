use num_integer::binomial;

use crate::error::{PpmError, Result};

/// Increasing assignment of the even pattern positions `2, 4, …, 2⌊k/2⌋` to
/// even text positions, stored as `g(2), g(4), …`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EvenGuess {
    values: Vec<usize>,
}

impl EvenGuess {
    /// Validates evenness, range `[2, 2⌊n/2⌋]`, strict increase and length
    /// `⌊k/2⌋`.
    pub fn new(values: Vec<usize>, n: usize, k: usize) -> Result<Self> {
        if values.len() != k / 2 {
            return Err(PpmError::LengthMismatch {
                expected: k / 2,
                found: values.len(),
            });
        }
        for (i, &v) in values.iter().enumerate() {
            if v % 2 != 0 || v < 2 || v > 2 * (n / 2) {
                return Err(PpmError::OutOfRange {
                    index: 2 * (i + 1),
                    value: v,
                    n,
                });
            }
        }
        if let Some(i) = values.windows(2).position(|w| w[0] >= w[1]) {
            return Err(PpmError::NotIncreasing(2 * (i + 2)));
        }
        Ok(EvenGuess { values })
    }

    pub(crate) fn from_raw(values: Vec<usize>) -> Self {
        EvenGuess { values }
    }

    /// `g(2i)` for `i` in `1..=⌊k/2⌋`.
    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Lexicographic stream of increasing maps `[t] → {step, 2·step, …, m·step}`.
///
/// Holds only the current combination, so memory is `O(t)` regardless of how
/// many items remain.
#[derive(Clone, Debug)]
pub struct Combinations {
    m: usize,
    step: usize,
    // 1-based indices into [m]; None once exhausted.
    current: Option<Vec<usize>>,
    remaining: Option<u128>,
    started: bool,
}

impl Combinations {
    pub(crate) fn new(m: usize, t: usize, step: usize) -> Self {
        let current = (t <= m).then(|| (1..=t).collect());
        let remaining = checked_binomial(m, t);
        Combinations {
            m,
            step,
            current,
            remaining,
            started: false,
        }
    }

    /// Starts at the combination of lexicographic rank `rank` (0-based) and
    /// yields at most `limit` items.
    pub(crate) fn block(m: usize, t: usize, step: usize, rank: u128, limit: u128) -> Self {
        let total = checked_binomial(m, t).unwrap_or(u128::MAX);
        let current = if t <= m && rank < total {
            Some(unrank(m, t, rank))
        } else {
            None
        };
        Combinations {
            m,
            step,
            current,
            remaining: Some(limit.min(total.saturating_sub(rank))),
            started: false,
        }
    }

    /// Moves to the next combination without allocating; values are
    /// 1-based indices into `[m]`, not yet scaled by `step`.
    pub(crate) fn step_raw(&mut self) -> Option<&[usize]> {
        if let Some(r) = self.remaining.as_mut() {
            if *r == 0 {
                return None;
            }
            *r -= 1;
        }
        if self.started {
            self.advance();
        }
        self.started = true;
        self.current.as_deref()
    }

    pub(crate) fn scale(&self) -> usize {
        self.step
    }

    /// Advances `current` in place to its lexicographic successor.
    fn advance(&mut self) {
        let Some(cur) = self.current.as_mut() else {
            return;
        };
        let t = cur.len();
        let m = self.m;
        // Rightmost index that can still grow.
        let Some(i) = (0..t).rev().find(|&i| cur[i] < m - (t - 1 - i)) else {
            self.current = None;
            return;
        };
        cur[i] += 1;
        for j in i + 1..t {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let step = self.step;
        self.step_raw()
            .map(|c| c.iter().map(|&i| i * step).collect())
    }
}

/// Lexicographic stream of all [`EvenGuess`]es for `(n, k)`.
#[derive(Clone, Debug)]
pub struct Guesses(pub(crate) Combinations);

impl Iterator for Guesses {
    type Item = EvenGuess;

    fn next(&mut self) -> Option<EvenGuess> {
        self.0.next().map(EvenGuess::from_raw)
    }
}

/// Every increasing map from the even pattern positions to the even text
/// positions, exactly once, in lexicographic order of `(g(2), g(4), …)`.
///
/// The stream has `binom(⌊n/2⌋, ⌊k/2⌋)` items.
pub fn enumerate_guesses(n: usize, k: usize) -> Result<Guesses> {
    check_sizes(n, k)?;
    Ok(Guesses(Combinations::new(n / 2, k / 2, 2)))
}

/// A contiguous block `[start, start + len)` of [`enumerate_guesses`] by
/// lexicographic rank.
pub fn enumerate_guesses_block(n: usize, k: usize, start: u128, len: u128) -> Result<Guesses> {
    check_sizes(n, k)?;
    Ok(Guesses(Combinations::block(n / 2, k / 2, 2, start, len)))
}

/// `binom(⌊n/2⌋, ⌊k/2⌋)`, or `None` past `u128`.
pub fn family_size(n: usize, k: usize) -> Option<u128> {
    checked_binomial(n / 2, k / 2)
}

fn check_sizes(n: usize, k: usize) -> Result<()> {
    if k == 0 || n == 0 {
        return Err(PpmError::InstanceTooSmall(format!(
            "n = {n}, k = {k}: both must be positive"
        )));
    }
    if k > n {
        return Err(PpmError::InstanceTooSmall(format!(
            "text length {n} is below pattern length {k}"
        )));
    }
    Ok(())
}

pub(crate) fn checked_binomial(m: usize, t: usize) -> Option<u128> {
    if t > m {
        return Some(0);
    }
    let t = t.min(m - t);
    let mut acc: u128 = 1;
    for i in 0..t {
        // acc * (m - i) / (i + 1) stays integral at every step.
        acc = acc.checked_mul((m - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

/// Combination of `[m]` of size `t` at lexicographic `rank`.
fn unrank(m: usize, t: usize, mut rank: u128) -> Vec<usize> {
    let mut out = Vec::with_capacity(t);
    let mut next = 1;
    for slot in 0..t {
        loop {
            // Combinations with `next` in this slot.
            let below = binomial((m - next) as u128, (t - slot - 1) as u128);
            if rank < below {
                break;
            }
            rank -= below;
            next += 1;
        }
        out.push(next);
        next += 1;
    }
    out
}
