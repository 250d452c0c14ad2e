//! Row-index combinations: lexicographic and unrolled orders, ranking, and the
//! binomial arithmetic behind the saved-additions index formulas.
//!
//! All indices are 0-based. Counts that can exceed 64 bits use [`BigCount`].

use crate::error::{Error, Result};

/// Exact count type for binomials and enumeration counters.
pub type BigCount = u128;

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Exact C(p, q); zero when q > p.
pub fn binomial(p: u64, q: u64) -> Result<BigCount> {
    if q > p {
        return Ok(0);
    }
    let q = q.min(p - q);
    let mut acc: u128 = 1;
    for i in 0..q {
        // acc * (p - i) is divisible by (i + 1); cancel before multiplying.
        let num = (p - i) as u128;
        let den = (i + 1) as u128;
        let g = gcd(acc, den);
        let (acc_r, den_r) = (acc / g, den / g);
        acc = acc_r
            .checked_mul(num / den_r)
            .ok_or(Error::Overflow { p, q })?;
    }
    Ok(acc)
}

/// C(p, q) for small arguments that are known to fit.
///
/// Panics on overflow; used where p is a row count and q at most the
/// generator count.
pub(crate) fn choose(p: usize, q: usize) -> BigCount {
    binomial(p as u64, q as u64).expect("binomial overflow")
}

/// Pascal table of `usize` values for hot index computations.
///
/// Entries saturate at `usize::MAX`; callers only read entries that address
/// rows of an in-memory store.
#[derive(Debug, Clone)]
pub struct BinomialTable {
    max_q: usize,
    cells: Vec<usize>,
}

impl BinomialTable {
    pub fn new(max_p: usize, max_q: usize) -> Self {
        let w = max_q + 1;
        let mut cells = vec![0usize; (max_p + 1) * w];
        for p in 0..=max_p {
            cells[p * w] = 1;
            for q in 1..=max_q.min(p) {
                let above = cells[(p - 1) * w + q];
                let diag = cells[(p - 1) * w + q - 1];
                cells[p * w + q] = above.saturating_add(diag);
            }
        }
        Self { max_q, cells }
    }

    #[inline]
    pub fn get(&self, p: usize, q: usize) -> usize {
        if q > p {
            0
        } else {
            self.cells[p * (self.max_q + 1) + q]
        }
    }

    /// [`index_of`] on the table.
    #[inline]
    pub fn index_of(&self, p: usize, q: usize, r: Option<usize>) -> usize {
        match r {
            None => 0,
            Some(r) => self.get(p, q) - self.get(p - r - 1, q),
        }
    }
}

/// Strictly increasing tuple of row indices drawn from `0..universe`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Combination {
    indices: Vec<usize>,
    universe: usize,
}

impl Combination {
    pub fn new(indices: Vec<usize>, universe: usize) -> Result<Self> {
        let ok = !indices.is_empty()
            && indices.windows(2).all(|w| w[0] < w[1])
            && indices.last().is_some_and(|&l| l < universe);
        if !ok {
            return Err(Error::InvalidCombination { indices, universe });
        }
        Ok(Self { indices, universe })
    }

    /// Lexicographic minimum `(0, 1, .., g-1)`.
    pub fn first(k: usize, g: usize) -> Result<Self> {
        if g == 0 || g > k {
            return Err(Error::InvalidArity {
                g,
                k,
                what: "need 1 <= g <= k",
            });
        }
        Ok(Self {
            indices: (0..g).collect(),
            universe: k,
        })
    }

    #[inline]
    pub fn as_slice(&self) -> &[usize] {
        &self.indices
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn first_element(&self) -> usize {
        self.indices[0]
    }

    #[inline]
    pub fn last_element(&self) -> usize {
        self.indices[self.indices.len() - 1]
    }

    /// Steps to the lexicographic successor in place.
    ///
    /// Returns the leftmost position that changed, or `None` (leaving `self`
    /// untouched) when this is the lexicographic maximum.
    pub fn advance_lex(&mut self) -> Option<usize> {
        let g = self.indices.len();
        let k = self.universe;
        let pos = (0..g).rev().find(|&i| self.indices[i] < k - g + i)?;
        self.indices[pos] += 1;
        for i in pos + 1..g {
            self.indices[i] = self.indices[i - 1] + 1;
        }
        Some(pos)
    }

    /// Steps to the successor in the unrolled order, in place.
    ///
    /// The order sorts by first element, then last element, then the middle
    /// part lexicographically, e.g. for k = 5, g = 3:
    /// (0,1,2) (0,1,3) (0,2,3) (0,1,4) (0,2,4) (0,3,4) (1,2,3) ...
    /// Returns `false` at the end of the order.
    pub fn advance_unrolled(&mut self) -> bool {
        let g = self.indices.len();
        let k = self.universe;
        let c = &mut self.indices;
        if g >= 3 {
            // middle part: a (g-2)-combination of c[0]+1 .. c[g-1]-1
            let hi = c[g - 1];
            if let Some(pos) = (1..g - 1).rev().find(|&i| c[i] < hi - (g - 1 - i)) {
                c[pos] += 1;
                for i in pos + 1..g - 1 {
                    c[i] = c[i - 1] + 1;
                }
                return true;
            }
        }
        if g >= 2 && c[g - 1] + 1 < k {
            c[g - 1] += 1;
            for i in 1..g - 1 {
                c[i] = c[0] + i;
            }
            return true;
        }
        if c[0] + g < k {
            c[0] += 1;
            for i in 1..g {
                c[i] = c[0] + i;
            }
            return true;
        }
        false
    }

    /// Position of this combination in lexicographic order.
    pub fn rank_lex(&self) -> BigCount {
        let (k, g) = (self.universe, self.indices.len());
        let tail: BigCount = self
            .indices
            .iter()
            .enumerate()
            .map(|(i, &c)| choose(k - 1 - c, g - i))
            .sum();
        choose(k, g) - 1 - tail
    }

    /// Inverse of [`Combination::rank_lex`].
    pub fn unrank_lex(k: usize, g: usize, rank: BigCount) -> Result<Self> {
        let total = binomial(k as u64, g as u64)?;
        if g == 0 || g > k || rank >= total {
            return Err(Error::OutOfRange { k, g, rank });
        }
        let mut indices = Vec::with_capacity(g);
        let mut r = rank;
        let mut next = 0;
        for i in 0..g {
            let remaining = g - i - 1;
            let mut v = next;
            loop {
                // combinations with this prefix and element v at position i
                let block = choose(k - 1 - v, remaining);
                if r < block {
                    break;
                }
                r -= block;
                v += 1;
            }
            indices.push(v);
            next = v + 1;
        }
        Ok(Self {
            indices,
            universe: k,
        })
    }
}

/// `(0, .., g-1)`.
pub fn first_combination(k: usize, g: usize) -> Result<Combination> {
    Combination::first(k, g)
}

/// Lexicographic successor and the leftmost changed position, or `None` at
/// the lexicographic maximum.
pub fn next_combination_lex(c: &Combination) -> Option<(Combination, usize)> {
    let mut next = c.clone();
    let reset = next.advance_lex()?;
    Some((next, reset))
}

/// Successor in the unrolled order, or `None` at its end.
pub fn next_combination_unrolled_order(c: &Combination) -> Option<Combination> {
    let mut next = c.clone();
    next.advance_unrolled().then_some(next)
}

pub fn rank_lex(c: &Combination) -> BigCount {
    c.rank_lex()
}

pub fn unrank_lex(k: usize, g: usize, rank: BigCount) -> Result<Combination> {
    Combination::unrank_lex(k, g, rank)
}

/// `C(p, q) - C(p - r - 1, q)`: the number of q-combinations of `0..p` whose
/// first element is at most `r`, which is also the lex rank of the first
/// combination starting above `r`. `None` stands for an empty prefix and
/// yields 0.
pub fn index_of(p: usize, q: usize, r: Option<usize>) -> BigCount {
    match r {
        None => 0,
        Some(r) => {
            assert!(r < p, "index_of: r = {r} must be below p = {p}");
            choose(p, q) - choose(p - r - 1, q)
        }
    }
}

/// `C(k, a) - C(g - 1, a)`: lex index of the first stored a-combination that
/// cannot start a g-combination.
pub fn left_cutoff(k: usize, a: usize, g: usize) -> BigCount {
    assert!(a <= g && g <= k && g >= 1);
    choose(k, a) - choose(g - 1, a)
}

/// Whether `sum_{j=1}^{g-1} C(k, j) < C(k, g)`.
pub fn binomial_growth_check(k: usize, g: usize) -> Result<bool> {
    let mut below: BigCount = 0;
    for j in 1..g {
        below = below
            .checked_add(binomial(k as u64, j as u64)?)
            .ok_or(Error::Overflow {
                p: k as u64,
                q: j as u64,
            })?;
    }
    Ok(below < binomial(k as u64, g as u64)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Every g-subset of 0..k, sorted lexicographically (bitmask oracle).
    fn all_lex(k: usize, g: usize) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = (0u32..1 << k)
            .filter(|m| m.count_ones() as usize == g)
            .map(|m| (0..k).filter(|&i| m >> i & 1 == 1).collect())
            .collect();
        out.sort();
        out
    }

    fn c(idx: &[usize], k: usize) -> Combination {
        Combination::new(idx.to_vec(), k).unwrap()
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(5, 2).unwrap(), 10);
        assert_eq!(binomial(4, 5).unwrap(), 0);
        assert_eq!(binomial(50, 3).unwrap(), 19600);
        assert_eq!(binomial(0, 0).unwrap(), 1);
        // past 64 bits
        assert_eq!(binomial(256, 16).unwrap(), 10078751602022313874633200_u128);
        assert!(matches!(binomial(1000, 500), Err(Error::Overflow { .. })));
        // C(131, 65) < 2^128 < C(132, 66)
        assert!(binomial(131, 65).is_ok());
        assert!(matches!(binomial(132, 66), Err(Error::Overflow { .. })));
    }

    #[test]
    fn binomial_matches_pascal() {
        let t = BinomialTable::new(60, 60);
        for p in 0..=60u64 {
            for q in 0..=p + 1 {
                let expect = if q > p {
                    0
                } else {
                    t.get(p as usize, q as usize) as u128
                };
                assert_eq!(binomial(p, q).unwrap(), expect, "C({p},{q})");
            }
        }
    }

    #[test]
    fn first_examples() {
        assert_eq!(first_combination(5, 3).unwrap().as_slice(), &[0, 1, 2]);
        assert_eq!(first_combination(1, 1).unwrap().as_slice(), &[0]);
        assert_eq!(
            first_combination(7, 7).unwrap().as_slice(),
            &[0, 1, 2, 3, 4, 5, 6]
        );
        assert!(matches!(
            first_combination(3, 4),
            Err(Error::InvalidArity { .. })
        ));
        assert!(first_combination(3, 0).is_err());
    }

    #[test]
    fn lex_successor_examples() {
        let (n, reset) = next_combination_lex(&c(&[0, 1, 49], 50)).unwrap();
        assert_eq!((n.as_slice(), reset), (&[0, 2, 3][..], 1));
        let (n, reset) = next_combination_lex(&c(&[0, 1, 2], 50)).unwrap();
        assert_eq!((n.as_slice(), reset), (&[0, 1, 3][..], 2));
        assert!(next_combination_lex(&c(&[47, 48, 49], 50)).is_none());
    }

    #[test]
    fn unrolled_successor_examples() {
        let step = |idx: &[usize]| next_combination_unrolled_order(&c(idx, 5)).unwrap();
        assert_eq!(step(&[0, 1, 2]).as_slice(), &[0, 1, 3]);
        assert_eq!(step(&[0, 1, 3]).as_slice(), &[0, 2, 3]);
        assert_eq!(step(&[0, 2, 3]).as_slice(), &[0, 1, 4]);
        assert_eq!(step(&[0, 3, 4]).as_slice(), &[1, 2, 3]);
        assert!(next_combination_unrolled_order(&c(&[2, 3, 4], 5)).is_none());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank_lex(&c(&[0, 1, 2], 5)), 0);
        assert_eq!(rank_lex(&c(&[2, 3, 4], 5)), 9);
        // lex order: 012 013 014 023 024 ...
        assert_eq!(unrank_lex(5, 3, 3).unwrap().as_slice(), &[0, 2, 3]);
        assert_eq!(unrank_lex(5, 3, 4).unwrap().as_slice(), &[0, 2, 4]);
        assert!(matches!(
            unrank_lex(5, 3, 10),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn index_of_examples() {
        assert_eq!(index_of(5, 2, Some(0)), 4);
        assert_eq!(index_of(7, 3, Some(6)), choose(7, 3));
        assert_eq!(index_of(50, 3, Some(46)), 19599);
        assert_eq!(index_of(50, 3, None), 0);
        let t = BinomialTable::new(50, 5);
        assert_eq!(t.index_of(50, 3, Some(46)), 19599);
        assert_eq!(t.index_of(5, 2, None), 0);
    }

    #[test]
    fn left_cutoff_examples() {
        assert_eq!(left_cutoff(50, 3, 5), 19596);
        // the four discarded tail combinations start at 46
        let tail = unrank_lex(50, 3, 19596).unwrap();
        assert_eq!(tail.as_slice(), &[46, 47, 48]);
        assert_eq!(left_cutoff(6, 6, 6), 1);
        assert_eq!(left_cutoff(5, 2, 2), 10);
    }

    #[test]
    fn binomial_growth_examples() {
        assert!(binomial_growth_check(30, 10).unwrap());
        assert!(binomial_growth_check(6, 2).unwrap());
        assert!(!binomial_growth_check(4, 4).unwrap());
    }

    #[test]
    fn binomial_growth_holds_up_to_sixty() {
        for k in 3..=60 {
            for g in 1..=k / 3 {
                assert!(binomial_growth_check(k, g).unwrap(), "k={k} g={g}");
            }
        }
    }

    #[test]
    fn lex_enumeration_is_exhaustive() {
        for k in 1..=12 {
            for g in 1..=k {
                let oracle = all_lex(k, g);
                let mut cur = first_combination(k, g).unwrap();
                let mut seen = vec![cur.as_slice().to_vec()];
                let mut prev_rank = cur.rank_lex();
                assert_eq!(prev_rank, 0);
                while let Some(reset) = cur.advance_lex() {
                    let prev = seen.last().unwrap();
                    assert!(prev[..reset] == cur.as_slice()[..reset]);
                    assert_ne!(prev[reset], cur.as_slice()[reset]);
                    let r = cur.rank_lex();
                    assert_eq!(r, prev_rank + 1);
                    prev_rank = r;
                    seen.push(cur.as_slice().to_vec());
                }
                assert_eq!(seen, oracle, "k={k} g={g}");
                assert_eq!(seen.len() as u128, choose(k, g));
            }
        }
    }

    #[test]
    fn unrolled_enumeration_is_exhaustive() {
        for k in 1..=12 {
            for g in 1..=k {
                let mut cur = first_combination(k, g).unwrap();
                let mut seen = vec![cur.as_slice().to_vec()];
                while cur.advance_unrolled() {
                    seen.push(cur.as_slice().to_vec());
                }
                // sort-key oracle: (first, last, middle)
                let mut oracle = all_lex(k, g);
                oracle.sort_by(|a, b| (a[0], a[g - 1], &a[..]).cmp(&(b[0], b[g - 1], &b[..])));
                assert_eq!(seen, oracle, "k={k} g={g}");
                assert!(seen.windows(2).all(|w| w[0][0] <= w[1][0]));
            }
        }
    }

    #[test]
    fn rank_unrank_round_trip() {
        for k in 1..=12 {
            for g in 1..=k {
                for (r, idx) in all_lex(k, g).into_iter().enumerate() {
                    let comb = unrank_lex(k, g, r as u128).unwrap();
                    assert_eq!(comb.as_slice(), &idx[..]);
                    assert_eq!(comb.rank_lex(), r as u128);
                }
            }
        }
    }

    #[test]
    fn index_of_counts_prefixes() {
        for p in 1..=12 {
            for q in 1..=p {
                let all = all_lex(p, q);
                for r in 0..p {
                    let count = all.iter().filter(|c| c[0] <= r).count() as u128;
                    assert_eq!(index_of(p, q, Some(r)), count);
                    if count < all.len() as u128 {
                        assert!(all[count as usize][0] > r);
                    }
                }
            }
        }
    }
}
