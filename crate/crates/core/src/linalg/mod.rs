//! Elimination with unit pivots: complete over fields, and used by the
//! default linear-algebra hooks of [`Ring`].

pub mod snf;

use crate::error::{Error, Result};
use crate::matrix::{self, Matrix};
use crate::ring::Ring;

/// Reduced row echelon form `R = T·A` with the pivot column of each nonzero row.
#[derive(Clone, Debug)]
pub struct Echelon<E> {
    pub reduced: Matrix<E>,
    pub transform: Matrix<E>,
    pub pivots: Vec<usize>,
}

pub fn echelon<R: Ring>(ring: &R, a: &Matrix<R::Elem>) -> Result<Echelon<R::Elem>> {
    let (m, n) = (a.rows(), a.cols());
    let mut r = a.clone();
    let mut t = matrix::identity(ring, m);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        if row == m {
            break;
        }
        let mut found = None;
        let mut stuck = false;
        for i in row..m {
            let x = r.get(i, col);
            if ring.is_zero(x) {
                continue;
            }
            match ring.unit_inverse(x) {
                Some(inv) => {
                    found = Some((i, inv));
                    break;
                }
                None => stuck = true,
            }
        }
        let Some((p, inv)) = found else {
            if stuck {
                return Err(Error::Unsupported("elimination needs a unit pivot".into()));
            }
            continue;
        };
        r.swap_rows(p, row);
        t.swap_rows(p, row);
        scale_row(ring, &mut r, row, &inv);
        scale_row(ring, &mut t, row, &inv);
        for i in 0..m {
            if i == row {
                continue;
            }
            let f = r.get(i, col).clone();
            if ring.is_zero(&f) {
                continue;
            }
            add_row_multiple(ring, &mut r, i, row, &ring.neg(&f));
            add_row_multiple(ring, &mut t, i, row, &ring.neg(&f));
        }
        pivots.push(col);
        row += 1;
    }
    Ok(Echelon { reduced: r, transform: t, pivots })
}

pub(crate) fn scale_row<R: Ring>(ring: &R, a: &mut Matrix<R::Elem>, i: usize, c: &R::Elem) {
    for j in 0..a.cols() {
        let v = ring.mul(c, a.get(i, j));
        a.set(i, j, v);
    }
}

/// `row_dst += c · row_src`.
pub(crate) fn add_row_multiple<R: Ring>(ring: &R, a: &mut Matrix<R::Elem>, dst: usize, src: usize, c: &R::Elem) {
    for j in 0..a.cols() {
        let s = a.get(src, j);
        if ring.is_zero(s) {
            continue;
        }
        let v = ring.add(a.get(dst, j), &ring.mul(c, s));
        a.set(dst, j, v);
    }
}

/// `col_dst += c · col_src`.
pub(crate) fn add_col_multiple<R: Ring>(ring: &R, a: &mut Matrix<R::Elem>, dst: usize, src: usize, c: &R::Elem) {
    for i in 0..a.rows() {
        let s = a.get(i, src);
        if ring.is_zero(s) {
            continue;
        }
        let v = ring.add(a.get(i, dst), &ring.mul(c, s));
        a.set(i, dst, v);
    }
}

fn check_rhs<E>(a: &Matrix<E>, b: &[E]) -> Result<()> {
    if a.rows() != b.len() {
        return Err(Error::DimensionMismatch(format!("system has {} equations but right-hand side has length {}", a.rows(), b.len())));
    }
    Ok(())
}

pub fn solve_by_elimination<R: Ring>(ring: &R, a: &Matrix<R::Elem>, b: &[R::Elem]) -> Result<Option<Vec<R::Elem>>> {
    check_rhs(a, b)?;
    let e = echelon(ring, a)?;
    let c = matrix::mul_vec(ring, &e.transform, b);
    if c[e.pivots.len()..].iter().any(|x| !ring.is_zero(x)) {
        return Ok(None);
    }
    let mut x = matrix::zero_vector(ring, a.cols());
    for (k, &p) in e.pivots.iter().enumerate() {
        x[p] = c[k].clone();
    }
    Ok(Some(x))
}

pub fn kernel_by_elimination<R: Ring>(ring: &R, a: &Matrix<R::Elem>) -> Result<Matrix<R::Elem>> {
    let e = echelon(ring, a)?;
    let n = a.cols();
    let free: Vec<usize> = (0..n).filter(|j| !e.pivots.contains(j)).collect();
    let cols: Vec<Vec<R::Elem>> = free
        .iter()
        .map(|&f| {
            let mut v = matrix::zero_vector(ring, n);
            v[f] = ring.one();
            for (k, &p) in e.pivots.iter().enumerate() {
                v[p] = ring.neg(e.reduced.get(k, f));
            }
            v
        })
        .collect();
    Ok(Matrix::from_columns(n, &cols))
}

pub fn rank_by_elimination<R: Ring>(ring: &R, a: &Matrix<R::Elem>) -> Result<usize> {
    Ok(echelon(ring, a)?.pivots.len())
}

pub fn invert_by_elimination<R: Ring>(ring: &R, a: &Matrix<R::Elem>) -> Result<Option<Matrix<R::Elem>>> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
    }
    let e = echelon(ring, a)?;
    Ok((e.pivots.len() == a.rows()).then_some(e.transform))
}

/// Indices of a maximal independent subset of the columns, chosen greedily
/// from the left.
pub fn independent_columns<R: Ring>(ring: &R, a: &Matrix<R::Elem>) -> Result<Vec<usize>> {
    Ok(echelon(ring, a)?.pivots)
}

/// Extends independent columns `basis` of an ambient space of dimension
/// `n` by standard unit vectors; returns the indices of the unit vectors used.
pub fn complement_units<R: Ring>(ring: &R, basis: &Matrix<R::Elem>) -> Result<Vec<usize>> {
    let n = basis.rows();
    let full = basis.hstack(&matrix::identity(ring, n))?;
    let piv = independent_columns(ring, &full)?;
    Ok(piv.into_iter().filter(|&j| j >= basis.cols()).map(|j| j - basis.cols()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{FracField, Rationals};

    #[test]
    fn identity_system() {
        let q = Rationals;
        let a = matrix::identity(&q, 2);
        let b = vec![q.from_i64(1), q.from_i64(2)];
        assert_eq!(q.solve(&a, &b).unwrap(), Some(b.clone()));
    }

    #[test]
    fn inconsistent_system() {
        let q = Rationals;
        let a = matrix::from_i64(&q, &[&[1, 1], &[1, 1]]);
        assert_eq!(q.solve(&a, &[q.from_i64(1), q.from_i64(0)]).unwrap(), None);
        assert!(matches!(q.solve(&a, &[q.one()]), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn diagonal_system_over_rational_functions() {
        let k = FracField::new(Rationals);
        let qv = k.variable();
        let a = matrix::diagonal(&k, &[qv.clone(), k.one()]);
        let x = k.solve(&a, &[k.one(), k.one()]).unwrap().unwrap();
        assert_eq!(x, vec![k.parse("q^-1").unwrap(), k.one()]);
    }

    #[test]
    fn kernel_rank_inverse() {
        let q = Rationals;
        let z = matrix::zeros(&q, 2, 2);
        assert_eq!(q.kernel(&z).unwrap().cols(), 2);
        assert_eq!(q.rank(&z).unwrap(), 0);
        let i3 = matrix::identity(&q, 3);
        assert_eq!(q.kernel(&i3).unwrap().cols(), 0);
        assert_eq!(q.invert_matrix(&i3).unwrap(), Some(i3.clone()));
        let a = matrix::from_i64(&q, &[&[1, 1], &[2, 2]]);
        assert_eq!(q.rank(&a).unwrap(), 1);
        assert_eq!(q.kernel(&a).unwrap().col(0), vec![q.from_i64(-1), q.from_i64(1)]);
        assert_eq!(q.invert_matrix(&a).unwrap(), None);
    }
}
