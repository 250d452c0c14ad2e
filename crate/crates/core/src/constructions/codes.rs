//! Cyclic, matrix-product, extended and punctured codes.
//!
//! Polynomials of length m map to rows with the coefficient of x^i in
//! column i.

use super::polynomial::{is_unit, poly_mul_mod, BinaryPolynomial, ModulusRing};
use crate::error::{Error, Result};
use crate::gf2::{reduce_on_columns, BitMatrix, Word};

fn poly_row<W: Word>(m: &mut BitMatrix<W>, r: usize, p: &BinaryPolynomial, offset: usize) {
    for e in p.exponents() {
        m.set(r, offset + e, true);
    }
}

fn row_poly<W: Word>(m: &BitMatrix<W>, r: usize, from: usize, len: usize) -> BinaryPolynomial {
    let exps: Vec<usize> = (0..len).filter(|&i| m.get(r, from + i)).collect();
    BinaryPolynomial::from_exponents(&exps)
}

/// Generator of the cyclic code (f) of length m: row i is `x^i f`.
pub fn cyclic_code_generator<W: Word>(
    f: &BinaryPolynomial,
    ring: ModulusRing,
) -> Result<BitMatrix<W>> {
    let m = ring.m();
    if !f.divides(&ring.modulus()) {
        return Err(Error::NotADivisor { m });
    }
    let deg = f.degree().expect("a divisor is nonzero");
    if deg == m {
        // f = x^m - 1 generates the zero code
        return Err(Error::InvalidDimensions { k: 0, n: m });
    }
    let k = m - deg;
    let mut g = BitMatrix::zeros(k, m);
    for i in 0..k {
        poly_row(&mut g, i, &f.shl(i), 0);
    }
    Ok(g)
}

/// Generator polynomial `(x^m - 1) / h` of the cyclic code with check
/// polynomial h.
pub fn cofactor(h: &BinaryPolynomial, ring: ModulusRing) -> Result<BinaryPolynomial> {
    if !h.divides(&ring.modulus()) {
        return Err(Error::NotADivisor { m: ring.m() });
    }
    Ok(ring.modulus().div_rem(h).0)
}

/// True iff every row of `a` lies in the row space of `b`.
pub fn is_subcode<W: Word>(a: &BitMatrix<W>, b: &BitMatrix<W>) -> Result<bool> {
    if a.num_cols() != b.num_cols() {
        return Err(Error::LengthMismatch {
            left: a.num_cols(),
            right: b.num_cols(),
        });
    }
    Ok(b.stacked(a)?.rank() == b.rank())
}

/// Generator of `{(u | u p + v) : u in C1, v in C2}`.
///
/// Rows of `g1` become `(u | u p mod x^m - 1)`, rows of `g2` become `(0 | v)`.
pub fn matrix_product_code<W: Word>(
    g1: &BitMatrix<W>,
    g2: &BitMatrix<W>,
    p: &BinaryPolynomial,
    ring: ModulusRing,
) -> Result<BitMatrix<W>> {
    let m = ring.m();
    for g in [g1, g2] {
        if g.num_cols() != m {
            return Err(Error::LengthMismatch {
                left: g.num_cols(),
                right: m,
            });
        }
    }
    if !is_unit(p, ring) {
        return Err(Error::NotAUnit { m });
    }
    let (k1, k2) = (g1.num_rows(), g2.num_rows());
    let mut out = BitMatrix::zeros(k1 + k2, 2 * m);
    for r in 0..k1 {
        let u = row_poly(g1, r, 0, m);
        poly_row(&mut out, r, &u, 0);
        poly_row(&mut out, r, &poly_mul_mod(&u, p, ring), m);
    }
    for r in 0..k2 {
        poly_row(&mut out, k1 + r, &row_poly(g2, r, 0, m), m);
    }
    Ok(out)
}

/// Appends an overall parity column.
pub fn extend_code<W: Word>(g: &BitMatrix<W>) -> BitMatrix<W> {
    let n = g.num_cols();
    let mut out = BitMatrix::zeros(g.num_rows(), n + 1);
    for r in 0..g.num_rows() {
        for c in 0..n {
            if g.get(r, c) {
                out.set(r, c, true);
            }
        }
        out.set(r, n, g.row_weight(r) % 2 == 1);
    }
    out
}

/// Deletes the given 0-based columns and returns a full-rank generator of
/// the punctured code.
pub fn puncture_code<W: Word>(g: &BitMatrix<W>, positions: &[usize]) -> Result<BitMatrix<W>> {
    let n = g.num_cols();
    if let Some(&column) = positions.iter().find(|&&c| c >= n) {
        return Err(Error::InvalidColumn { column, n });
    }
    let keep: Vec<usize> = (0..n).filter(|c| !positions.contains(c)).collect();
    if keep.is_empty() {
        return Err(Error::InvalidDimensions { k: 0, n: 0 });
    }
    let cut = g.select_columns(&keep)?;
    let all: Vec<usize> = (0..cut.num_cols()).collect();
    let red = reduce_on_columns(&cut, &all);
    let mut out = red.matrix;
    out.truncate_rows(red.rank);
    if red.rank == 0 {
        return Err(Error::InvalidDimensions {
            k: 0,
            n: keep.len(),
        });
    }
    Ok(out)
}
