//! Permutations, instances, embeddings and segment decompositions, together
//! with the definitional predicates every algorithm is checked against.

mod decomposition;
mod instance;
mod permutation;

pub use decomposition::{respects, validate_decomposition, SegmentDecomposition};
pub use instance::{is_solution, is_solution_by_pattern, Embedding, PpmInstance};
pub use permutation::{format_permutation, parse_permutation, pattern_of, Permutation};
