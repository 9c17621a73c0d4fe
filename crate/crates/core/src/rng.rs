//! Seeded permutation generation, bit-exact across implementations.
//!
//! The generator is SplitMix64. Bounded draws reject the `2^64 mod bound`
//! smallest outputs and reduce the rest modulo `bound`. Shuffles are
//! Fisher–Yates from the back of `1..=n`. The full recipe is in
//! `docs/FORMAT.md`.

use crate::domain::{pattern_of, Permutation, PpmInstance};

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `0..bound`.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        let reject_under = bound.wrapping_neg() % bound;
        loop {
            let x = self.next_u64();
            if x >= reject_under {
                return x % bound;
            }
        }
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }

    pub fn permutation(&mut self, n: usize) -> Permutation {
        assert!(n >= 1, "permutations have length at least 1");
        let mut values: Vec<usize> = (1..=n).collect();
        self.shuffle(&mut values);
        Permutation::new(values).expect("a shuffle of 1..=n is a permutation")
    }

    /// A uniformly random `k`-subset of `1..=n`, sorted.
    pub fn subset(&mut self, n: usize, k: usize) -> Vec<usize> {
        assert!(k <= n);
        let mut pool: Vec<usize> = (1..=n).collect();
        // Partial Fisher–Yates: the last k slots end up uniformly chosen.
        for i in (n - k..n).rev() {
            let j = self.below(i as u64 + 1) as usize;
            pool.swap(i, j);
        }
        let mut out = pool.split_off(n - k);
        out.sort_unstable();
        out
    }
}

/// The permutation printed by `ppm gen` for `(n, seed)`.
pub fn random_permutation(n: usize, seed: u64) -> Permutation {
    SplitMix64::new(seed).permutation(n)
}

/// Text and pattern drawn independently from one stream.
pub fn random_instance(n: usize, k: usize, seed: u64) -> PpmInstance {
    let mut rng = SplitMix64::new(seed);
    let sigma = rng.permutation(n);
    let pattern = rng.permutation(k);
    PpmInstance::new(sigma, pattern).expect("k <= n")
}

/// A random text whose pattern is read off a random `k`-subsequence of it,
/// so at least one occurrence exists.
pub fn planted_instance(n: usize, k: usize, seed: u64) -> PpmInstance {
    let mut rng = SplitMix64::new(seed);
    let sigma = rng.permutation(n);
    let positions = rng.subset(n, k);
    let image: Vec<usize> = positions.iter().map(|&p| sigma.value(p)).collect();
    let pattern = pattern_of(&image).expect("σ values are distinct");
    PpmInstance::new(sigma, pattern).expect("k <= n")
}
