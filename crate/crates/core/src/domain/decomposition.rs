use std::fmt;

use crate::domain::instance::Embedding;
use crate::error::{PpmError, Result};

/// `k` closed intervals `[ℓ_i, r_i]` over `[n]`, one per pattern position,
/// with `r_i ≤ ℓ_{i+1}`: consecutive segments share at most one position.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SegmentDecomposition {
    n: usize,
    segments: Vec<(usize, usize)>,
}

impl SegmentDecomposition {
    pub fn new(n: usize, segments: Vec<(usize, usize)>) -> Result<Self> {
        validate_decomposition(n, &segments)?;
        Ok(SegmentDecomposition { n, segments })
    }

    /// Skips validation; callers construct provably valid segments.
    pub(crate) fn new_unchecked(n: usize, segments: Vec<(usize, usize)>) -> Self {
        debug_assert_eq!(validate_decomposition(n, &segments), Ok(()));
        SegmentDecomposition { n, segments }
    }

    /// Empty buffer to be filled through [`Self::segments_mut`].
    pub(crate) fn buffer(n: usize, k: usize) -> Self {
        SegmentDecomposition {
            n,
            segments: Vec::with_capacity(k),
        }
    }

    /// Storage for in-place refills in hot loops.
    pub(crate) fn segments_mut(&mut self) -> &mut Vec<(usize, usize)> {
        &mut self.segments
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of segments, which is the pattern length `k`.
    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    /// `(ℓ_i, r_i)` for `i` in `1..=k`.
    pub fn segment(&self, i: usize) -> (usize, usize) {
        self.segments[i - 1]
    }

    pub fn segments(&self) -> &[(usize, usize)] {
        &self.segments
    }
}

impl fmt::Display for SegmentDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (l, r)) in self.segments.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "[{l}, {r}]")?;
        }
        Ok(())
    }
}

/// Checks `ℓ_i ≤ r_i`, `[ℓ_i, r_i] ⊆ [n]` and `r_i ≤ ℓ_{i+1}`.
pub fn validate_decomposition(n: usize, segments: &[(usize, usize)]) -> Result<()> {
    if segments.is_empty() {
        return Err(PpmError::EmptyInput);
    }
    for (idx, &(l, r)) in segments.iter().enumerate() {
        let index = idx + 1;
        if l > r {
            return Err(PpmError::EmptySegment {
                index,
                left: l,
                right: r,
            });
        }
        if l < 1 {
            return Err(PpmError::OutOfRange { index, value: l, n });
        }
        if r > n {
            return Err(PpmError::OutOfRange { index, value: r, n });
        }
    }
    if let Some(idx) = segments.windows(2).position(|w| w[0].1 > w[1].0) {
        return Err(PpmError::OrderViolation {
            index: idx + 1,
            next: idx + 2,
            right: segments[idx].1,
            left: segments[idx + 1].0,
        });
    }
    Ok(())
}

/// Whether `ℓ_i ≤ f(i) ≤ r_i` for every `i`.
pub fn respects(f: &Embedding, d: &SegmentDecomposition) -> Result<bool> {
    if f.len() != d.len() {
        return Err(PpmError::LengthMismatch {
            expected: d.len(),
            found: f.len(),
        });
    }
    Ok(f.as_slice()
        .iter()
        .zip(&d.segments)
        .all(|(&v, &(l, r))| l <= v && v <= r))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn emb(v: &[usize]) -> Embedding {
        Embedding::new(v.to_vec()).unwrap()
    }

    #[test]
    fn validates_nine_point_decomposition() {
        let segs = vec![(1, 2), (2, 3), (4, 7), (7, 8)];
        assert_eq!(validate_decomposition(8, &segs), Ok(()));
        assert_eq!(validate_decomposition(1, &[(1, 1)]), Ok(()));
    }

    #[test]
    fn validation_errors() {
        assert!(matches!(
            validate_decomposition(5, &[(1, 5), (1, 5)]),
            Err(PpmError::OrderViolation {
                index: 1,
                next: 2,
                ..
            })
        ));
        assert!(matches!(
            validate_decomposition(5, &[(3, 2)]),
            Err(PpmError::EmptySegment { index: 1, .. })
        ));
        assert!(matches!(
            validate_decomposition(5, &[(1, 2), (2, 6)]),
            Err(PpmError::OutOfRange {
                index: 2,
                value: 6,
                ..
            })
        ));
        assert!(matches!(
            validate_decomposition(5, &[(0, 2)]),
            Err(PpmError::OutOfRange {
                index: 1,
                value: 0,
                ..
            })
        ));
        assert_eq!(validate_decomposition(5, &[]), Err(PpmError::EmptyInput));
    }

    #[test]
    fn respects_examples() {
        let d = SegmentDecomposition::new(9, vec![(1, 2), (2, 3), (3, 6), (6, 7), (7, 9)]).unwrap();
        assert!(respects(&emb(&[1, 3, 5, 7, 9]), &d).unwrap());

        let d = SegmentDecomposition::new(2, vec![(1, 1), (2, 2)]).unwrap();
        assert!(respects(&emb(&[1, 2]), &d).unwrap());

        let d = SegmentDecomposition::new(9, vec![(1, 1), (2, 9)]).unwrap();
        assert!(!respects(&emb(&[2, 3]), &d).unwrap());

        assert!(matches!(
            respects(&emb(&[1]), &d),
            Err(PpmError::LengthMismatch {
                expected: 2,
                found: 1
            })
        ));
    }

    #[test]
    fn display() {
        let d = SegmentDecomposition::new(8, vec![(1, 2), (2, 3), (4, 7), (7, 8)]).unwrap();
        assert_eq!(d.to_string(), "[1, 2], [2, 3], [4, 7], [7, 8]");
    }
}
