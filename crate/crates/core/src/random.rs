//! Seeded random generator matrices.
//!
//! Bits come from `ChaCha8Rng::seed_from_u64`, one `next_u32` per 32 columns,
//! low bit first. Both the stream and the seeding are fixed by `rand_chacha`,
//! so a seed reproduces the same matrix on every platform.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, Word};

fn fill_row<W: Word>(
    m: &mut BitMatrix<W>,
    r: usize,
    cols: std::ops::Range<usize>,
    rng: &mut ChaCha8Rng,
) {
    let mut word = 0u32;
    for (i, c) in cols.enumerate() {
        if i % 32 == 0 {
            word = rng.next_u32();
        }
        if word >> (i % 32) & 1 == 1 {
            m.set(r, c, true);
        }
    }
}

/// Systematic generator `(I_k | A)` with `A` uniform.
pub fn random_systematic<W: Word>(k: usize, n: usize, seed: u64) -> Result<BitMatrix<W>> {
    if k == 0 || k >= n {
        return Err(Error::InvalidDimensions { k, n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = BitMatrix::zeros(k, n);
    for r in 0..k {
        m.set(r, r, true);
        fill_row(&mut m, r, k..n, &mut rng);
    }
    Ok(m)
}

/// Uniform full-rank k x n matrix (rejection sampling, not systematic).
pub fn random_full_rank<W: Word>(k: usize, n: usize, seed: u64) -> BitMatrix<W> {
    assert!(0 < k && k <= n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut m = BitMatrix::zeros(k, n);
        for r in 0..k {
            fill_row(&mut m, r, 0..n, &mut rng);
        }
        if m.rank() == k {
            return m;
        }
    }
}
