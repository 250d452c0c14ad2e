//! Shared fixtures for the enumeration benchmarks.

use mindist_core::enumeration::{build_saved_store, SavedAdditionsStore};
use mindist_core::random::random_full_rank;
use mindist_core::BitMatrix;

/// Full-rank k x n matrix used as a Γ in every benchmark.
pub fn gamma(k: usize, n: usize, seed: u64) -> BitMatrix {
    random_full_rank(k, n, seed)
}

pub fn store(gamma: &BitMatrix, s: usize) -> SavedAdditionsStore<u32> {
    build_saved_store(gamma, s, 1 << 30).expect("fits in 1 GiB")
}
