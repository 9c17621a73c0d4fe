//! Exact permutation pattern matching.
//!
//! Given a text permutation `σ` of length `n` and a pattern `π` of length
//! `k`, count (or detect) the increasing maps `f: [k] → [n]` along which `σ`
//! has the same relative order as `π`. The main solver runs in
//! `O(n · 2^{⌊n/2⌋})` time and `O(n)` space by summing a linear-time DP over a
//! family of `binom(⌊n/2⌋, ⌊k/2⌋)` segment decompositions.
//!
//! ```
//! use ppm::{count_ppm, parse_permutation, PpmInstance};
//!
//! let sigma = parse_permutation("3 2 5 4 1").unwrap();
//! let pattern = parse_permutation("1 3 2").unwrap();
//! let instance = PpmInstance::new(sigma, pattern).unwrap();
//! assert_eq!(count_ppm(&instance), 2);
//! ```

pub mod cli;
pub mod count;
pub mod domain;
pub mod dp;
pub mod error;
pub mod oracle;
pub mod rng;
pub mod selftest;
pub mod solver;

pub use count::Count;
pub use domain::{
    format_permutation, is_solution, parse_permutation, pattern_of, respects,
    validate_decomposition, Embedding, Permutation, PpmInstance, SegmentDecomposition,
};
pub use dp::{count_respecting, segment_values, LinearDp, RespectCounter};
pub use error::{PpmError, Result};
pub use oracle::{bkm_count, brute_force_count, brute_force_enumerate};
pub use solver::{
    canonical_decomposition, count_ppm, count_ppm_parallel, decomposition_of_guess, detect_ppm,
    detect_ppm_parallel, enumerate_guesses,
};
