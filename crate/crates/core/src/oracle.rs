//! Reference algorithms for cross-validation.
//!
//! * Brute force: depth-first extension of increasing partial maps, pruned as
//!   soon as the partial image stops matching the pattern's relative order.
//! * Even-position exact guessing: fix `f(2), f(4), …` to exact text
//!   positions, which leaves point segments at even pattern positions and gap
//!   segments between them, then count each with the same linear DP the main
//!   solver uses. `binom(n, ⌊k/2⌋)` guesses, about `1.618^n` in the worst case.

use crate::count::Count;
use crate::domain::{Embedding, PpmInstance, SegmentDecomposition};
use crate::dp::{LinearDp, RespectCounter};
use crate::error::{PpmError, Result};
use crate::solver::Combinations;

/// Default bound on `n` for the brute-force oracle.
pub const DEFAULT_MAX_N: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub count: Count,
    /// Present only when requested; then `count == solutions.len()`.
    pub solutions: Option<Vec<Embedding>>,
}

/// Exhaustive search with an explicit `n` cap.
pub fn brute_force(
    instance: &PpmInstance,
    materialize: bool,
    max_n: usize,
) -> Result<OracleReport> {
    if instance.n() > max_n {
        return Err(PpmError::InstanceTooLarge {
            n: instance.n(),
            cap: max_n,
        });
    }
    let mut search = Search {
        sigma: instance.sigma().as_slice(),
        pattern: instance.pattern().as_slice(),
        chosen: Vec::with_capacity(instance.k()),
        count: 0,
        solutions: materialize.then(Vec::new),
    };
    search.extend(0);
    Ok(OracleReport {
        count: Count::from(search.count),
        solutions: search.solutions,
    })
}

/// All occurrences, lexicographically sorted.
pub fn brute_force_enumerate(instance: &PpmInstance) -> Result<Vec<Embedding>> {
    Ok(brute_force(instance, true, DEFAULT_MAX_N)?
        .solutions
        .unwrap_or_default())
}

/// Number of occurrences, without materializing them.
pub fn brute_force_count(instance: &PpmInstance) -> Result<Count> {
    Ok(brute_force(instance, false, DEFAULT_MAX_N)?.count)
}

struct Search<'a> {
    sigma: &'a [usize],
    pattern: &'a [usize],
    // 1-based text positions
    chosen: Vec<usize>,
    count: u64,
    solutions: Option<Vec<Embedding>>,
}

impl Search<'_> {
    fn extend(&mut self, start: usize) {
        let k = self.pattern.len();
        let t = self.chosen.len();
        if t == k {
            self.count += 1;
            if let Some(sols) = self.solutions.as_mut() {
                sols.push(Embedding::from_increasing(self.chosen.clone()));
            }
            return;
        }
        let n = self.sigma.len();
        // Leave room for the k - t - 1 later pattern positions.
        for q in start + 1..=n - (k - t - 1) {
            let value = self.sigma[q - 1];
            let consistent = self.chosen.iter().enumerate().all(|(s, &pos)| {
                (self.pattern[s] < self.pattern[t]) == (self.sigma[pos - 1] < value)
            });
            if consistent {
                self.chosen.push(q);
                self.extend(q);
                self.chosen.pop();
            }
        }
    }
}

/// Result of the exact-guessing baseline.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BkmReport {
    pub count: Count,
    /// Guesses whose segments were all nonempty and went through the DP.
    pub decompositions: u128,
}

/// Segments for the exact guess `v = (f(2), f(4), …)`, or `None` when some
/// gap segment is empty.
fn bkm_segments(v: &[usize], n: usize, k: usize, out: &mut Vec<(usize, usize)>) -> bool {
    out.clear();
    for pos in 1..=k {
        if pos % 2 == 0 {
            let p = v[pos / 2 - 1];
            out.push((p, p));
        } else {
            let left = if pos == 1 { 1 } else { v[pos / 2 - 1] + 1 };
            let right = if pos == k {
                n
            } else {
                v[pos.div_ceil(2) - 1] - 1
            };
            if left > right {
                return false;
            }
            out.push((left, right));
        }
    }
    true
}

/// Visits the decomposition of every exact guess with no empty segment.
fn walk_bkm(n: usize, k: usize, mut visit: impl FnMut(&SegmentDecomposition)) {
    let mut combos = Combinations::new(n, k / 2, 1);
    let mut d = SegmentDecomposition::buffer(n, k);
    while let Some(v) = combos.step_raw() {
        if bkm_segments(v, n, k, d.segments_mut()) {
            visit(&d);
        }
    }
}

/// The exact-guessing decompositions for `(n, k)` that survive the
/// empty-segment filter.
pub fn bkm_decompositions(n: usize, k: usize) -> Result<Vec<SegmentDecomposition>> {
    if k == 0 || k > n {
        return Err(PpmError::InstanceTooSmall(format!("n = {n}, k = {k}")));
    }
    let mut out = Vec::new();
    walk_bkm(n, k, |d| out.push(d.clone()));
    Ok(out)
}

pub fn bkm_report<C: RespectCounter>(instance: &PpmInstance, counter: &mut C) -> BkmReport {
    let mut count = Count::ZERO;
    let mut decompositions = 0;
    walk_bkm(instance.n(), instance.k(), |d| {
        decompositions += 1;
        count += counter.count_respecting(instance, d);
    });
    BkmReport {
        count,
        decompositions,
    }
}

/// Occurrence count via exact guessing of the even pattern positions.
pub fn bkm_count(instance: &PpmInstance) -> Count {
    bkm_report(instance, &mut LinearDp::new()).count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::parse_permutation;

    fn inst(s: &str, p: &str) -> PpmInstance {
        PpmInstance::new(parse_permutation(s).unwrap(), parse_permutation(p).unwrap()).unwrap()
    }

    fn positions(v: Vec<Embedding>) -> Vec<Vec<usize>> {
        v.into_iter().map(|e| e.as_slice().to_vec()).collect()
    }

    #[test]
    fn enumerates_occurrences() {
        let i = inst("3 2 5 4 1", "1 3 2");
        assert_eq!(
            positions(brute_force_enumerate(&i).unwrap()),
            vec![vec![1, 3, 4], vec![2, 3, 4]]
        );
        assert!(brute_force_enumerate(&inst("2 1", "1 2"))
            .unwrap()
            .is_empty());
        assert_eq!(
            positions(brute_force_enumerate(&inst("1 2 3", "1 2")).unwrap()),
            vec![vec![1, 2], vec![1, 3], vec![2, 3]]
        );
    }

    #[test]
    fn counts() {
        assert_eq!(brute_force_count(&inst("3 2 5 4 1", "1 3 2")).unwrap(), 2);
        assert_eq!(brute_force_count(&inst("4 2 3 1", "4 2 3 1")).unwrap(), 1);
        assert_eq!(brute_force_count(&inst("1 2 3 4 5 6", "1 2")).unwrap(), 15);
    }

    #[test]
    fn cap_is_enforced() {
        let big = PpmInstance::new(
            crate::domain::Permutation::identity(30),
            crate::domain::Permutation::identity(2),
        )
        .unwrap();
        assert_eq!(
            brute_force_count(&big),
            Err(PpmError::InstanceTooLarge { n: 30, cap: 24 })
        );
        assert_eq!(brute_force(&big, false, 30).unwrap().count, 435);
    }

    #[test]
    fn report_materializes_consistently() {
        let i = inst("8 1 3 9 5 4 2 7 6", "5 2 3 1 4");
        let r = brute_force(&i, true, DEFAULT_MAX_N).unwrap();
        assert_eq!(r.count, r.solutions.as_ref().unwrap().len() as u64);
    }

    #[test]
    fn bkm_examples() {
        assert_eq!(bkm_count(&inst("3 2 5 4 1", "1 3 2")), 2);
        assert_eq!(bkm_count(&inst("1", "1")), 1);
        let i = inst("8 1 3 9 5 4 2 7 6", "5 2 3 1 4");
        assert_eq!(bkm_count(&i), brute_force_count(&i).unwrap());
    }

    #[test]
    fn bkm_segments_skip_empty_gaps() {
        let mut out = Vec::new();
        // f(2) = 1 leaves no room for f(1).
        assert!(!bkm_segments(&[1], 4, 3, &mut out));
        // f(2) = 2, f(4) = 3 leaves no room for f(3).
        assert!(!bkm_segments(&[2, 3], 5, 4, &mut out));
        assert!(bkm_segments(&[2, 4], 5, 5, &mut out));
        assert_eq!(out, vec![(1, 1), (2, 2), (3, 3), (4, 4), (5, 5)]);
        assert!(bkm_segments(&[3], 6, 3, &mut out));
        assert_eq!(out, vec![(1, 2), (3, 3), (4, 6)]);
    }
}
