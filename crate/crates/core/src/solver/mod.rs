//! The `O(n · 2^{⌊n/2⌋})` solver.
//!
//! Every increasing map `g` from even pattern positions to even text
//! positions defines a segment decomposition `S_g`:
//!
//! ```text
//! ℓ_1 = 1
//! ℓ_2i = g(2i),      r_2i = min(n, g(2i) + 1)
//! ℓ_2i+1 = r_2i,     r_2i+1 = ℓ_2i+2     (r_k = n when k is odd)
//! ```
//!
//! A solution `f` respects exactly one `S_g`, the one with
//! `g(2i) = 2⌊f(2i)/2⌋`, so summing the per-decomposition DP over the whole
//! family counts every solution once.

mod guesses;

use std::sync::atomic::{AtomicBool, Ordering};

pub(crate) use guesses::checked_binomial;
pub use guesses::{
    enumerate_guesses, enumerate_guesses_block, family_size, Combinations, EvenGuess, Guesses,
};

use crate::count::Count;
use crate::domain::{Embedding, PpmInstance, SegmentDecomposition};
use crate::dp::{LinearDp, RespectCounter};
use crate::error::{PpmError, Result};

/// `2⌊i/2⌋`; satisfies `c_floor(i) ≤ i ≤ c_floor(i) + 1`.
pub fn c_floor(i: usize) -> usize {
    2 * (i / 2)
}

/// Writes `S_g` into `out`, where `g` lists `g(2), g(4), …`.
fn fill_segments(g: &[usize], n: usize, k: usize, out: &mut Vec<(usize, usize)>) {
    out.clear();
    for pos in 1..=k {
        if pos % 2 == 0 {
            let v = g[pos / 2 - 1];
            out.push((v, n.min(v + 1)));
        } else {
            let left = if pos == 1 { 1 } else { out[pos - 2].1 };
            let right = if pos == k { n } else { g[pos.div_ceil(2) - 1] };
            out.push((left, right));
        }
    }
}

/// `S_g` for the guess `g` on an instance of size `(n, k)`.
pub fn decomposition_of_guess(g: &EvenGuess, n: usize, k: usize) -> Result<SegmentDecomposition> {
    if g.len() != k / 2 {
        return Err(PpmError::LengthMismatch {
            expected: k / 2,
            found: g.len(),
        });
    }
    EvenGuess::new(g.as_slice().to_vec(), n, k)?;
    if k > n {
        return Err(PpmError::PatternLongerThanText { n, k });
    }
    let mut segs = Vec::with_capacity(k);
    fill_segments(g.as_slice(), n, k, &mut segs);
    Ok(SegmentDecomposition::new_unchecked(n, segs))
}

/// The guess `g(2i) = c_floor(f(2i))` of a solution `f`.
pub fn canonical_guess(f: &Embedding) -> EvenGuess {
    EvenGuess::from_raw((1..=f.len() / 2).map(|i| c_floor(f.at(2 * i))).collect())
}

/// The unique member of the family respected by `f`.
pub fn canonical_decomposition(f: &Embedding, n: usize) -> Result<SegmentDecomposition> {
    if let Some(i) = f.as_slice().iter().position(|&v| v > n) {
        return Err(PpmError::OutOfRange {
            index: i + 1,
            value: f.as_slice()[i],
            n,
        });
    }
    let g = canonical_guess(f);
    let mut segs = Vec::with_capacity(f.len());
    fill_segments(g.as_slice(), n, f.len(), &mut segs);
    Ok(SegmentDecomposition::new_unchecked(n, segs))
}

/// Walks the decompositions of one block of guesses, reusing a single
/// buffer. `visit` returns false to stop early.
fn walk_block(
    instance: &PpmInstance,
    mut combos: Combinations,
    mut visit: impl FnMut(&SegmentDecomposition) -> bool,
) {
    let (n, k) = (instance.n(), instance.k());
    let mut d = SegmentDecomposition::buffer(n, k);
    let mut g = Vec::with_capacity(k / 2);
    let scale = combos.scale();
    while let Some(raw) = combos.step_raw() {
        g.clear();
        g.extend(raw.iter().map(|&i| i * scale));
        fill_segments(&g, n, k, d.segments_mut());
        if !visit(&d) {
            return;
        }
    }
}

fn full_family(instance: &PpmInstance) -> Combinations {
    Combinations::new(instance.n() / 2, instance.k() / 2, 2)
}

#[cfg(feature = "equal-length-shortcut")]
fn equal_length(instance: &PpmInstance) -> Option<bool> {
    (instance.n() == instance.k()).then(|| instance.sigma() == instance.pattern())
}

#[cfg(not(feature = "equal-length-shortcut"))]
fn equal_length(_: &PpmInstance) -> Option<bool> {
    None
}

/// Total number of occurrences of the pattern in the text.
pub fn count_ppm(instance: &PpmInstance) -> Count {
    if let Some(eq) = equal_length(instance) {
        return Count::from(eq as u64);
    }
    count_ppm_with(instance, &mut LinearDp::new())
}

/// [`count_ppm`] with a caller-supplied per-decomposition counter.
pub fn count_ppm_with<C: RespectCounter>(instance: &PpmInstance, counter: &mut C) -> Count {
    let mut total = Count::ZERO;
    walk_block(instance, full_family(instance), |d| {
        total += counter.count_respecting(instance, d);
        true
    });
    total
}

/// Contiguous `[start, len)` rank ranges covering the family, one per worker.
fn partition(total: u128, threads: usize) -> Vec<(u128, u128)> {
    let threads = threads.max(1) as u128;
    let len = total.div_ceil(threads).max(1);
    let mut out = Vec::new();
    let mut start = 0;
    while start < total {
        out.push((start, len.min(total - start)));
        start += len;
    }
    out
}

/// [`count_ppm`] over `threads` workers.
///
/// The family is cut into contiguous lexicographic blocks; partial counts are
/// added in block order, so the result is identical to the sequential one.
pub fn count_ppm_parallel(instance: &PpmInstance, threads: usize) -> Count {
    if let Some(eq) = equal_length(instance) {
        return Count::from(eq as u64);
    }
    count_ppm_parallel_with(instance, threads, LinearDp::new)
}

pub fn count_ppm_parallel_with<C, F>(
    instance: &PpmInstance,
    threads: usize,
    make_counter: F,
) -> Count
where
    C: RespectCounter,
    F: Fn() -> C + Sync,
{
    let total = match family_size(instance.n(), instance.k()) {
        Some(t) if threads > 1 => t,
        _ => return count_ppm_with(instance, &mut make_counter()),
    };
    let (m, t) = (instance.n() / 2, instance.k() / 2);
    let blocks = partition(total, threads);
    let partials: Vec<Count> = std::thread::scope(|scope| {
        let handles: Vec<_> = blocks
            .iter()
            .map(|&(start, len)| {
                let make_counter = &make_counter;
                scope.spawn(move || {
                    let mut counter = make_counter();
                    let mut sum = Count::ZERO;
                    walk_block(instance, Combinations::block(m, t, 2, start, len), |d| {
                        sum += counter.count_respecting(instance, d);
                        true
                    });
                    sum
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("solver worker panicked"))
            .collect()
    });
    partials.iter().sum()
}

/// Outcome of a detection run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DetectReport {
    pub found: bool,
    /// Decompositions processed, the successful one included.
    pub decompositions_examined: u128,
}

/// Whether the pattern occurs in the text. Stops at the first decomposition
/// with a nonzero count.
pub fn detect_ppm(instance: &PpmInstance) -> bool {
    if let Some(eq) = equal_length(instance) {
        return eq;
    }
    detect_ppm_report(instance, &mut LinearDp::new()).found
}

pub fn detect_ppm_report<C: RespectCounter>(
    instance: &PpmInstance,
    counter: &mut C,
) -> DetectReport {
    let mut report = DetectReport {
        found: false,
        decompositions_examined: 0,
    };
    walk_block(instance, full_family(instance), |d| {
        report.decompositions_examined += 1;
        report.found = !counter.count_respecting(instance, d).is_zero();
        !report.found
    });
    report
}

/// [`detect_ppm`] over `threads` workers; any worker finding an occurrence
/// stops the others.
pub fn detect_ppm_parallel(instance: &PpmInstance, threads: usize) -> bool {
    if let Some(eq) = equal_length(instance) {
        return eq;
    }
    let total = match family_size(instance.n(), instance.k()) {
        Some(t) if threads > 1 => t,
        _ => return detect_ppm(instance),
    };
    let (m, t) = (instance.n() / 2, instance.k() / 2);
    let found = AtomicBool::new(false);
    std::thread::scope(|scope| {
        for (start, len) in partition(total, threads) {
            let found = &found;
            scope.spawn(move || {
                let mut dp = LinearDp::new();
                walk_block(instance, Combinations::block(m, t, 2, start, len), |d| {
                    if found.load(Ordering::Relaxed) {
                        return false;
                    }
                    if !dp.count(instance, d).is_zero() {
                        found.store(true, Ordering::Relaxed);
                        return false;
                    }
                    true
                });
            });
        }
    });
    found.into_inner()
}

/// Every member of the family for `(n, k)`, in enumeration order.
pub fn decomposition_family(
    n: usize,
    k: usize,
) -> Result<impl Iterator<Item = SegmentDecomposition>> {
    let guesses = enumerate_guesses(n, k)?;
    Ok(guesses.map(move |g| {
        let mut segs = Vec::with_capacity(k);
        fill_segments(g.as_slice(), n, k, &mut segs);
        SegmentDecomposition::new_unchecked(n, segs)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::{parse_permutation, respects, validate_decomposition};

    fn inst(s: &str, p: &str) -> PpmInstance {
        PpmInstance::new(parse_permutation(s).unwrap(), parse_permutation(p).unwrap()).unwrap()
    }

    fn emb(v: &[usize]) -> Embedding {
        Embedding::new(v.to_vec()).unwrap()
    }

    #[test]
    fn c_floor_values() {
        assert_eq!(c_floor(5), 4);
        assert_eq!(c_floor(4), 4);
        assert_eq!(c_floor(1), 0);
        for i in 1..100 {
            assert!(c_floor(i) <= i && i <= c_floor(i) + 1);
        }
    }

    #[test]
    fn guess_decompositions() {
        let g = EvenGuess::new(vec![2, 6], 9, 5).unwrap();
        let d = decomposition_of_guess(&g, 9, 5).unwrap();
        assert_eq!(d.segments(), &[(1, 2), (2, 3), (3, 6), (6, 7), (7, 9)]);

        let g = EvenGuess::new(vec![], 2, 1).unwrap();
        assert_eq!(
            decomposition_of_guess(&g, 2, 1).unwrap().segments(),
            &[(1, 2)]
        );

        let g = EvenGuess::new(vec![2], 4, 2).unwrap();
        let d = decomposition_of_guess(&g, 4, 2).unwrap();
        assert_eq!(d.segments(), &[(1, 2), (2, 3)]);
        assert_eq!(validate_decomposition(4, d.segments()), Ok(()));

        let g = EvenGuess::new(vec![2], 4, 2).unwrap();
        assert!(decomposition_of_guess(&g, 4, 4).is_err());
        assert!(decomposition_of_guess(&g, 1, 2).is_err());
    }

    #[test]
    fn canonical_examples() {
        let d = canonical_decomposition(&emb(&[1, 3, 5, 7, 9]), 9).unwrap();
        assert_eq!(d.segments(), &[(1, 2), (2, 3), (3, 6), (6, 7), (7, 9)]);
        assert!(respects(&emb(&[1, 3, 5, 7, 9]), &d).unwrap());

        let d = canonical_decomposition(&emb(&[1, 2]), 2).unwrap();
        assert_eq!(d.segments(), &[(1, 2), (2, 2)]);

        let d = canonical_decomposition(&emb(&[1]), 5).unwrap();
        assert_eq!(d.segments(), &[(1, 5)]);

        assert!(canonical_decomposition(&emb(&[1, 7]), 5).is_err());
    }

    #[test]
    fn counts_and_detects() {
        let i = inst("3 2 5 4 1", "1 3 2");
        assert_eq!(count_ppm(&i), 2);
        assert!(detect_ppm(&i));

        let i = inst("2 1", "1 2");
        assert_eq!(count_ppm(&i), 0);
        assert!(!detect_ppm(&i));

        let i = inst("1", "1");
        assert_eq!(count_ppm(&i), 1);

        assert!(detect_ppm(&inst("1 2 3 4", "1 2 3 4")));
    }

    #[test]
    fn parallel_matches_sequential() {
        let i = inst("8 1 3 9 5 4 2 7 6 12 10 11", "2 1 3 4");
        let seq = count_ppm(&i);
        for threads in [1, 2, 3, 8, 64] {
            assert_eq!(count_ppm_parallel(&i, threads), seq);
            assert_eq!(detect_ppm_parallel(&i, threads), !seq.is_zero());
        }
    }

    #[test]
    fn detection_short_circuits() {
        // Identity in identity: the very first decomposition already has an
        // occurrence.
        let i = inst("1 2 3 4 5 6 7 8 9 10", "1 2 3 4");
        let r = detect_ppm_report(&i, &mut LinearDp::new());
        assert!(r.found);
        assert_eq!(r.decompositions_examined, 1);
    }

    #[test]
    fn partition_covers_range() {
        assert_eq!(partition(10, 3), vec![(0, 4), (4, 4), (8, 2)]);
        assert_eq!(partition(2, 8), vec![(0, 1), (1, 1)]);
        assert_eq!(partition(1, 1), vec![(0, 1)]);
    }
}
