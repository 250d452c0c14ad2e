//! Polynomials over F2 and the quotient ring F2[x]/(x^m - 1).

use std::fmt;

/// Polynomial over F2; bit i of the packed coefficients is the coefficient
/// of x^i. Words above the degree are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BinaryPolynomial {
    words: Vec<u64>,
}

impl BinaryPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    pub fn monomial(e: usize) -> Self {
        let mut p = Self::zero();
        p.flip(e);
        p
    }

    /// Sum of `x^e` over the exponents; a repeated exponent cancels.
    pub fn from_exponents(exponents: &[usize]) -> Self {
        let mut p = Self::zero();
        for &e in exponents {
            p.flip(e);
        }
        p
    }

    /// `x^m - 1`, which is `x^m + 1` over F2.
    pub fn x_m_minus_one(m: usize) -> Self {
        Self::from_exponents(&[m, 0])
    }

    pub fn from_coefficients(bits: &[bool]) -> Self {
        let exps: Vec<usize> = (0..bits.len()).filter(|&i| bits[i]).collect();
        Self::from_exponents(&exps)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - last.leading_zeros() as usize)
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words == [1]
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .is_some_and(|w| w >> (i % 64) & 1 == 1)
    }

    /// Exponents with coefficient one, descending.
    pub fn exponents(&self) -> Vec<usize> {
        let top = self.degree().map_or(0, |d| d + 1);
        (0..top).rev().filter(|&i| self.coeff(i)).collect()
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn flip(&mut self, e: usize) {
        let w = e / 64;
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] ^= 1 << (e % 64);
        self.trim();
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (a, b) in words.iter_mut().zip(&short.words) {
            *a ^= b;
        }
        let mut p = Self { words };
        p.trim();
        p
    }

    /// `self * x^e`.
    pub fn shl(&self, e: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let (ws, bs) = (e / 64, e % 64);
        let mut words = vec![0u64; self.words.len() + ws + 1];
        for (i, &w) in self.words.iter().enumerate() {
            words[i + ws] ^= w << bs;
            if bs > 0 {
                words[i + ws + 1] ^= w >> (64 - bs);
            }
        }
        let mut p = Self { words };
        p.trim();
        p
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut acc = Self::zero();
        for e in other.exponents() {
            acc = acc.add(&self.shl(e));
        }
        acc
    }

    /// Quotient and remainder. Panics on division by zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(r) = rem.degree() {
            if r < d {
                break;
            }
            quot.flip(r - d);
            rem = rem.add(&divisor.shl(r - d));
        }
        (quot, rem)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a
    }

    pub fn divides(&self, other: &Self) -> bool {
        !self.is_zero() && other.div_rem(self).1.is_zero()
    }

    /// Coefficient vector of length `len` (low degree first). Panics if the
    /// degree does not fit.
    pub fn to_coefficients(&self, len: usize) -> Vec<bool> {
        assert!(
            self.degree().map_or(true, |d| d < len),
            "degree exceeds length"
        );
        (0..len).map(|i| self.coeff(i)).collect()
    }
}

impl fmt::Debug for BinaryPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BinaryPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .exponents()
            .into_iter()
            .map(|e| match e {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{e}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

/// The ring F2[x]/(x^m - 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModulusRing {
    m: usize,
}

impl ModulusRing {
    /// Panics if `m == 0`.
    pub fn new(m: usize) -> Self {
        assert!(m >= 1, "ring length must be positive");
        Self { m }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn modulus(&self) -> BinaryPolynomial {
        BinaryPolynomial::x_m_minus_one(self.m)
    }

    /// Folds exponents modulo m.
    pub fn reduce(&self, p: &BinaryPolynomial) -> BinaryPolynomial {
        let exps: Vec<usize> = p.exponents().into_iter().map(|e| e % self.m).collect();
        BinaryPolynomial::from_exponents(&exps)
    }
}

pub fn poly_mul_mod(
    a: &BinaryPolynomial,
    b: &BinaryPolynomial,
    ring: ModulusRing,
) -> BinaryPolynomial {
    ring.reduce(&a.mul(b))
}

/// True iff `gcd(p, x^m - 1) = 1`.
pub fn is_unit(p: &BinaryPolynomial, ring: ModulusRing) -> bool {
    ring.reduce(p).gcd(&ring.modulus()).is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(e: &[usize]) -> BinaryPolynomial {
        BinaryPolynomial::from_exponents(e)
    }

    #[test]
    fn degree_and_display() {
        assert_eq!(BinaryPolynomial::zero().degree(), None);
        assert_eq!(poly(&[0]).degree(), Some(0));
        assert_eq!(poly(&[130, 3]).degree(), Some(130));
        assert_eq!(poly(&[5, 5]), BinaryPolynomial::zero());
        assert_eq!(poly(&[3, 1, 0]).to_string(), "x^3 + x + 1");
    }

    #[test]
    fn ring_multiplication_examples() {
        let r5 = ModulusRing::new(5);
        assert!(poly_mul_mod(&poly(&[1]), &poly(&[4]), r5).is_one());
        let r3 = ModulusRing::new(3);
        assert_eq!(
            poly_mul_mod(&poly(&[0, 1]), &poly(&[0, 1]), r3),
            poly(&[0, 2])
        );
        assert!(poly_mul_mod(&BinaryPolynomial::zero(), &poly(&[2, 0]), r3).is_zero());
    }

    #[test]
    fn unit_examples() {
        assert!(is_unit(&BinaryPolynomial::one(), ModulusRing::new(9)));
        assert!(!is_unit(&poly(&[0, 1]), ModulusRing::new(3)));
        for m in 1..20 {
            assert!(is_unit(&poly(&[1]), ModulusRing::new(m)));
        }
    }

    #[test]
    fn division_example() {
        let (q, r) = BinaryPolynomial::x_m_minus_one(3).div_rem(&poly(&[1, 0]));
        assert_eq!(q, poly(&[2, 1, 0]));
        assert!(r.is_zero());
    }

    fn arb_poly() -> impl Strategy<Value = BinaryPolynomial> {
        proptest::collection::vec(0usize..150, 0..20).prop_map(|e| poly(&e))
    }

    proptest! {
        #[test]
        fn div_rem_reconstructs(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b);
            prop_assert_eq!(q.mul(&b).add(&r), a);
            prop_assert!(r.degree() < b.degree());
        }

        #[test]
        fn gcd_divides_both(a in arb_poly(), b in arb_poly()) {
            let g = a.gcd(&b);
            prop_assume!(!g.is_zero());
            prop_assert!(g.divides(&a) || a.is_zero());
            prop_assert!(g.divides(&b) || b.is_zero());
        }

        #[test]
        fn units_have_inverses(a in arb_poly(), m in 1usize..10) {
            let ring = ModulusRing::new(m);
            let has_inverse = (0u32..1 << m).any(|bits| {
                let inv = BinaryPolynomial::from_exponents(
                    &(0..m).filter(|i| bits >> i & 1 == 1).collect::<Vec<_>>(),
                );
                poly_mul_mod(&a, &inv, ring).is_one()
            });
            prop_assert_eq!(is_unit(&a, ring), has_inverse);
        }

        #[test]
        fn multiplication_commutes_mod(a in arb_poly(), b in arb_poly(), m in 1usize..40) {
            let ring = ModulusRing::new(m);
            prop_assert_eq!(poly_mul_mod(&a, &b, ring), poly_mul_mod(&b, &a, ring));
        }
    }
}
