use super::{reduce_on_columns, BitMatrix, Word};
use crate::error::{Error, Result};

/// One systematic re-encoding of the generator matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gamma<W: Word = u32> {
    /// k x n, same row space as the input generator.
    pub matrix: BitMatrix<W>,
    /// Columns carrying the identity; row `i` holds the one of `pivots[i]`.
    pub pivots: Vec<usize>,
}

impl<W: Word> Gamma<W> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_full_rank(&self) -> bool {
        self.pivots.len() == self.matrix.num_rows()
    }
}

/// The Γ matrices of a generator, built from pairwise disjoint information sets.
///
/// The first `full_rank_count()` entries have rank k. An optional last entry
/// is the remainder matrix, reduced on whatever columns were left over and
/// with rank `0 < k_m < k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaSet<W: Word = u32> {
    pub gammas: Vec<Gamma<W>>,
    k: usize,
    n: usize,
}

impl<W: Word> GammaSet<W> {
    /// Number of Γ matrices, remainder included.
    pub fn m(&self) -> usize {
        self.gammas.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn full_rank_count(&self) -> usize {
        self.gammas.iter().filter(|g| g.is_full_rank()).count()
    }

    pub fn has_remainder(&self) -> bool {
        self.gammas.last().is_some_and(|g| !g.is_full_rank())
    }

    /// Rank k_m of the remainder matrix, 0 when there is none.
    pub fn remainder_rank(&self) -> usize {
        match self.gammas.last() {
            Some(g) if !g.is_full_rank() => g.rank(),
            _ => 0,
        }
    }

    pub fn pivot_sets(&self) -> impl Iterator<Item = &[usize]> {
        self.gammas.iter().map(|g| g.pivots.as_slice())
    }

    /// Keeps only the first `count` full-rank matrices and drops the remainder.
    pub fn restrict_full_rank(&mut self, count: usize) {
        self.gammas.retain(|g| g.is_full_rank());
        self.gammas.truncate(count.max(1));
    }
}

/// Greedily peels disjoint information sets off `g`.
///
/// Each pass reduces the generator on the columns not used so far, leftmost
/// pivot first. A pass of rank k yields a full-rank Γ and claims its pivots;
/// the first pass of lower (nonzero) rank yields the remainder and stops.
pub fn build_gamma_set<W: Word>(g: &BitMatrix<W>) -> Result<GammaSet<W>> {
    let (k, n) = (g.num_rows(), g.num_cols());
    if k == 0 || k > n {
        return Err(Error::InvalidDimensions { k, n });
    }
    let mut used = vec![false; n];
    let mut gammas = Vec::new();
    loop {
        let free: Vec<usize> = (0..n).filter(|&c| !used[c]).collect();
        if free.is_empty() {
            break;
        }
        let red = reduce_on_columns(g, &free);
        if gammas.is_empty() && red.rank < k {
            return Err(Error::RankDeficient { rank: red.rank, k });
        }
        let full = red.rank == k;
        if red.rank > 0 {
            for &p in &red.pivots {
                used[p] = true;
            }
            gammas.push(Gamma {
                matrix: red.matrix,
                pivots: red.pivots,
            });
        }
        if !full {
            break;
        }
    }
    Ok(GammaSet { gammas, k, n })
}
