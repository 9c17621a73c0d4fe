#![allow(dead_code)]

use ppm::rng::SplitMix64;
use ppm::{Embedding, PpmInstance, SegmentDecomposition};

/// Sorting 2k draws from [n] gives ℓ_1 ≤ r_1 ≤ ℓ_2 ≤ … ≤ r_k, a valid
/// decomposition. With `points`, roughly half the segments collapse to
/// `[ℓ_i, ℓ_i]`.
pub fn random_decomposition(
    rng: &mut SplitMix64,
    n: usize,
    k: usize,
    points: bool,
) -> SegmentDecomposition {
    let mut ends: Vec<usize> = (0..2 * k)
        .map(|_| 1 + rng.below(n as u64) as usize)
        .collect();
    ends.sort_unstable();
    let segs = ends
        .chunks(2)
        .map(|c| {
            if points && rng.below(2) == 0 {
                (c[0], c[0])
            } else {
                (c[0], c[1])
            }
        })
        .collect();
    SegmentDecomposition::new(n, segs).expect("sorted endpoints form a decomposition")
}

/// Independent reference: every k-subset of positions, kept when σ read
/// along it has the pattern's relative order.
pub fn naive_solutions(instance: &PpmInstance) -> Vec<Embedding> {
    use itertools::Itertools;
    let sigma = instance.sigma().as_slice();
    let pattern = instance.pattern().as_slice();
    (1..=instance.n())
        .combinations(instance.k())
        .filter(|pos| {
            (0..pos.len()).all(|a| {
                (0..pos.len())
                    .all(|b| (pattern[a] < pattern[b]) == (sigma[pos[a] - 1] < sigma[pos[b] - 1]))
            })
        })
        .map(|pos| Embedding::new(pos).unwrap())
        .collect()
}
