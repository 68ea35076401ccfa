//! Smith normal form over Euclidean rings.

use super::{add_col_multiple, add_row_multiple, scale_row};
use crate::error::{Error, Result};
use crate::matrix::{self, Matrix};
use crate::ring::Euclidean;

/// `left · A · right = diag(diagonal)` with `left`, `right` invertible and
/// `diagonal[i] | diagonal[i + 1]` for `i + 1 < rank`.
#[derive(Clone, Debug)]
pub struct Smith<E> {
    pub left: Matrix<E>,
    pub right: Matrix<E>,
    pub diagonal: Vec<E>,
    pub rank: usize,
}

impl<E: Clone> Smith<E> {
    /// The nonzero invariant factors, normalized.
    pub fn divisors(&self) -> &[E] {
        &self.diagonal[..self.rank]
    }

    /// Surjective as a map of free modules iff every row carries a unit
    /// divisor.
    pub fn is_surjective<R: Euclidean<Elem = E>>(&self, ring: &R) -> bool {
        self.rank == self.left.rows() && self.divisors().iter().all(|d| ring.is_unit(d))
    }

    pub fn diagonal_matrix<R: Euclidean<Elem = E>>(&self, ring: &R) -> Matrix<E> {
        let (m, n) = (self.left.rows(), self.right.rows());
        Matrix::from_fn(m, n, |i, j| if i == j && i < self.rank { self.diagonal[i].clone() } else { ring.zero() })
    }
}

pub fn smith<R: Euclidean>(ring: &R, a: &Matrix<R::Elem>) -> Smith<R::Elem> {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = matrix::identity(ring, m);
    let mut v = matrix::identity(ring, n);
    let mut t = 0;
    while t < m.min(n) {
        let Some((pi, pj)) = min_norm_entry(ring, &d, t) else { break };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if ring.is_zero(d.get(i, t)) {
                    continue;
                }
                let (q, r) = ring.div_rem(d.get(i, t), d.get(t, t));
                let nq = ring.neg(&q);
                add_row_multiple(ring, &mut d, i, t, &nq);
                add_row_multiple(ring, &mut u, i, t, &nq);
                if !ring.is_zero(&r) {
                    d.swap_rows(i, t);
                    u.swap_rows(i, t);
                    dirty = true;
                }
            }
            for j in t + 1..n {
                if ring.is_zero(d.get(t, j)) {
                    continue;
                }
                let (q, r) = ring.div_rem(d.get(t, j), d.get(t, t));
                let nq = ring.neg(&q);
                add_col_multiple(ring, &mut d, j, t, &nq);
                add_col_multiple(ring, &mut v, j, t, &nq);
                if !ring.is_zero(&r) {
                    d.swap_cols(j, t);
                    v.swap_cols(j, t);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // Divisibility: fold an offending row into the pivot row.
            let piv = d.get(t, t).clone();
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !ring.divides(&piv, d.get(i, j))));
            match bad {
                Some(i) => {
                    let one = ring.one();
                    add_row_multiple(ring, &mut d, t, i, &one);
                    add_row_multiple(ring, &mut u, t, i, &one);
                }
                None => break,
            }
        }
        let unit = ring.normalizing_unit(d.get(t, t));
        scale_row(ring, &mut d, t, &unit);
        scale_row(ring, &mut u, t, &unit);
        t += 1;
    }
    let diagonal = (0..m.min(n)).map(|i| d.get(i, i).clone()).collect();
    Smith { left: u, right: v, diagonal, rank: t }
}

fn min_norm_entry<R: Euclidean>(ring: &R, d: &Matrix<R::Elem>, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let x = d.get(i, j);
            if ring.is_zero(x) {
                continue;
            }
            let nx = ring.norm(x);
            if best.is_none_or(|b| nx < b.2) {
                best = Some((i, j, nx));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

pub fn solve<R: Euclidean>(ring: &R, a: &Matrix<R::Elem>, b: &[R::Elem]) -> Result<Option<Vec<R::Elem>>> {
    if a.rows() != b.len() {
        return Err(Error::DimensionMismatch(format!("system has {} equations but right-hand side has length {}", a.rows(), b.len())));
    }
    let s = smith(ring, a);
    let c = matrix::mul_vec(ring, &s.left, b);
    let mut y = matrix::zero_vector(ring, a.cols());
    for (i, ci) in c.iter().enumerate() {
        if i < s.rank {
            let (q, r) = ring.div_rem(ci, &s.diagonal[i]);
            if !ring.is_zero(&r) || ring.mul(&q, &s.diagonal[i]) != *ci {
                return Ok(None);
            }
            y[i] = q;
        } else if !ring.is_zero(ci) {
            return Ok(None);
        }
    }
    Ok(Some(matrix::mul_vec(ring, &s.right, &y)))
}

/// Generators of the kernel as columns. Over a domain these form a basis of
/// a saturated submodule.
pub fn kernel<R: Euclidean>(ring: &R, a: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    let s = smith(ring, a);
    let n = a.cols();
    let mut cols: Vec<Vec<R::Elem>> = Vec::new();
    for i in 0..s.rank {
        if let Some(g) = ring.annihilator(&s.diagonal[i]) {
            cols.push(matrix::vec_scale(ring, &g, &s.right.col(i)));
        }
    }
    for j in s.rank..n {
        cols.push(s.right.col(j));
    }
    Matrix::from_columns(n, &cols)
}

pub fn invert<R: Euclidean>(ring: &R, a: &Matrix<R::Elem>) -> Option<Matrix<R::Elem>> {
    if !a.is_square() {
        return None;
    }
    let s = smith(ring, a);
    if s.rank < a.rows() {
        return None;
    }
    let inv: Option<Vec<R::Elem>> = s.divisors().iter().map(|d| ring.unit_inverse(d)).collect();
    let dinv = matrix::diagonal(ring, &inv?);
    Some(matrix::mul(ring, &matrix::mul(ring, &s.right, &dinv), &s.left))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{LaurentRing, PolyRing, Rationals, Ring};

    fn check<R: Euclidean>(ring: &R, a: &Matrix<R::Elem>, s: &Smith<R::Elem>) {
        let prod = matrix::mul(ring, &matrix::mul(ring, &s.left, a), &s.right);
        assert_eq!(prod, s.diagonal_matrix(ring));
        assert!(ring.is_unit(&matrix::det(ring, &s.left)));
        assert!(ring.is_unit(&matrix::det(ring, &s.right)));
    }

    #[test]
    fn laurent_monomials_are_unit_divisors() {
        let r = LaurentRing::new(Rationals);
        let a = matrix::diagonal(&r, &[r.one(), r.variable()]);
        let s = smith(&r, &a);
        check(&r, &a, &s);
        assert_eq!(s.divisors(), &[r.one(), r.one()]);
        assert!(s.is_surjective(&r));
    }

    #[test]
    fn polynomial_divisors() {
        let r = PolyRing::new(Rationals);
        let a = matrix::diagonal(&r, &[r.one(), r.variable()]);
        let s = smith(&r, &a);
        check(&r, &a, &s);
        assert_eq!(s.divisors(), &[r.one(), r.variable()]);
        assert!(!s.is_surjective(&r));

        let p = r.parse("q - 1").unwrap();
        let b = matrix::diagonal(&r, &[p.clone(), p.clone()]);
        let s = smith(&r, &b);
        check(&r, &b, &s);
        assert_eq!(s.divisors(), &[p.clone(), p]);
    }

    #[test]
    fn divisibility_is_enforced() {
        let r = PolyRing::new(Rationals);
        let a = matrix::diagonal(&r, &[r.parse("q").unwrap(), r.parse("q + 1").unwrap()]);
        let s = smith(&r, &a);
        check(&r, &a, &s);
        assert_eq!(s.divisors(), &[r.one(), r.parse("q^2 + q").unwrap()]);
    }
}
