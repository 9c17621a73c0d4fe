use crate::domain::permutation::{pattern_of, Permutation};
use crate::error::{PpmError, Result};

/// A text permutation `σ` of length `n` and a pattern `π` of length `k ≤ n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PpmInstance {
    sigma: Permutation,
    pattern: Permutation,
    // 1-based inverses, index 0 unused.
    sigma_inv: Vec<usize>,
    pattern_inv: Vec<usize>,
}

impl PpmInstance {
    pub fn new(sigma: Permutation, pattern: Permutation) -> Result<Self> {
        let (n, k) = (sigma.len(), pattern.len());
        if k > n {
            return Err(PpmError::PatternLongerThanText { n, k });
        }
        let mut sigma_inv = vec![0; n + 1];
        sigma_inv[1..].copy_from_slice(sigma.inverse().as_slice());
        let mut pattern_inv = vec![0; k + 1];
        pattern_inv[1..].copy_from_slice(pattern.inverse().as_slice());
        Ok(PpmInstance {
            sigma,
            pattern,
            sigma_inv,
            pattern_inv,
        })
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn pattern(&self) -> &Permutation {
        &self.pattern
    }

    /// Text length.
    pub fn n(&self) -> usize {
        self.sigma.len()
    }

    /// Pattern length.
    pub fn k(&self) -> usize {
        self.pattern.len()
    }

    /// Position in `σ` holding `value`.
    pub fn sigma_position_of(&self, value: usize) -> usize {
        self.sigma_inv[value]
    }

    /// Pattern position holding `value`, i.e. `π⁻¹(value)`.
    pub fn pattern_position_of(&self, value: usize) -> usize {
        self.pattern_inv[value]
    }
}

/// A strictly increasing map `f: [k] → [n]`, stored as `f(1), …, f(k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Embedding {
    values: Vec<usize>,
}

impl Embedding {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        if values.is_empty() {
            return Err(PpmError::EmptyInput);
        }
        if values[0] == 0 {
            return Err(PpmError::NotIncreasing(1));
        }
        if let Some(i) = values.windows(2).position(|w| w[0] >= w[1]) {
            return Err(PpmError::NotIncreasing(i + 2));
        }
        Ok(Embedding { values })
    }

    pub(crate) fn from_increasing(values: Vec<usize>) -> Self {
        debug_assert!(values.windows(2).all(|w| w[0] < w[1]));
        Embedding { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `f(i)` for `i` in `1..=k`.
    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.values
    }
}

/// Whether `f` is an occurrence of the pattern in the text.
///
/// Checks the position constraints `f(i) < f(i+1)` and the value constraints
/// `σ(f(π⁻¹(i))) < σ(f(π⁻¹(i+1)))`.
pub fn is_solution(instance: &PpmInstance, f: &Embedding) -> Result<bool> {
    let (n, k) = (instance.n(), instance.k());
    if f.len() != k {
        return Err(PpmError::LengthMismatch {
            expected: k,
            found: f.len(),
        });
    }
    if let Some(i) = f.values.iter().position(|&v| v > n) {
        return Err(PpmError::OutOfRange {
            index: i + 1,
            value: f.values[i],
            n,
        });
    }
    let positions_ok = f.values.windows(2).all(|w| w[0] < w[1]);
    let values_ok = (1..k).all(|i| {
        let lo = f.at(instance.pattern_position_of(i));
        let hi = f.at(instance.pattern_position_of(i + 1));
        instance.sigma().value(lo) < instance.sigma().value(hi)
    });
    Ok(positions_ok && values_ok)
}

/// Second evaluation route for [`is_solution`]: read `σ` along `f` and
/// compare its relative order with `π`.
pub fn is_solution_by_pattern(instance: &PpmInstance, f: &Embedding) -> Result<bool> {
    if f.len() != instance.k() {
        return Err(PpmError::LengthMismatch {
            expected: instance.k(),
            found: f.len(),
        });
    }
    let image: Vec<usize> = f
        .values
        .iter()
        .map(|&p| instance.sigma().value(p))
        .collect();
    Ok(&pattern_of(&image)? == instance.pattern())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::parse_permutation;

    fn inst(s: &str, p: &str) -> PpmInstance {
        PpmInstance::new(parse_permutation(s).unwrap(), parse_permutation(p).unwrap()).unwrap()
    }

    #[test]
    fn rejects_pattern_longer_than_text() {
        let r = PpmInstance::new(
            parse_permutation("2 1").unwrap(),
            parse_permutation("1 2 3").unwrap(),
        );
        assert_eq!(r, Err(PpmError::PatternLongerThanText { n: 2, k: 3 }));
    }

    #[test]
    fn embedding_must_increase() {
        assert!(Embedding::new(vec![1, 3, 5]).is_ok());
        assert_eq!(Embedding::new(vec![2, 2]), Err(PpmError::NotIncreasing(2)));
        assert_eq!(Embedding::new(vec![0, 2]), Err(PpmError::NotIncreasing(1)));
        assert_eq!(Embedding::new(vec![]), Err(PpmError::EmptyInput));
    }

    #[test]
    fn solution_examples() {
        let i = inst("8 1 3 9 5 4 2 7 6", "5 2 3 1 4");
        let f = Embedding::new(vec![1, 3, 5, 7, 9]).unwrap();
        assert!(is_solution(&i, &f).unwrap());
        assert!(is_solution_by_pattern(&i, &f).unwrap());

        let i = inst("1 2 3", "1 2 3");
        assert!(is_solution(&i, &Embedding::new(vec![1, 2, 3]).unwrap()).unwrap());

        let i = inst("3 2 5 4 1", "1 3 2");
        let f = Embedding::new(vec![1, 2, 3]).unwrap();
        assert!(!is_solution(&i, &f).unwrap());
        assert!(!is_solution_by_pattern(&i, &f).unwrap());
    }

    #[test]
    fn solution_errors() {
        let i = inst("3 2 5 4 1", "1 3 2");
        assert_eq!(
            is_solution(&i, &Embedding::new(vec![1, 2]).unwrap()),
            Err(PpmError::LengthMismatch {
                expected: 3,
                found: 2
            })
        );
        assert!(matches!(
            is_solution(&i, &Embedding::new(vec![1, 2, 6]).unwrap()),
            Err(PpmError::OutOfRange { index: 3, .. })
        ));
    }
}
