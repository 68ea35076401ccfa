//! Finite-rank associative unital algebras given by structure constants.

use crate::error::{Error, Result};
use crate::linalg;
use crate::matrix::{self, Matrix};
use crate::ring::Ring;

/// A free module with basis `e_0..e_{d-1}` and product
/// `e_i·e_j = Σ_k mult[(i·d + j)·d + k] e_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct FinAlgebra<R: Ring> {
    ring: R,
    dim: usize,
    mult: Vec<R::Elem>,
    unit: Vec<R::Elem>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraReport {
    pub associative: bool,
    pub unital: bool,
    pub commutative: bool,
    /// First basis triple `(i, j, k)` with `(e_i e_j) e_k ≠ e_i (e_j e_k)`.
    pub failing_triple: Option<(usize, usize, usize)>,
    /// First basis index where the unit fails to act as identity.
    pub unit_failure: Option<usize>,
}

impl AlgebraReport {
    pub fn passed(&self) -> bool {
        self.associative && self.unital
    }
}

/// A submodule of `R^n` spanned by the columns of `basis`.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<E> {
    pub ambient: usize,
    pub basis: Matrix<E>,
}

impl<E: Clone> Subspace<E> {
    pub fn new(ambient: usize, vectors: &[Vec<E>]) -> Self {
        Subspace { ambient, basis: Matrix::from_columns(ambient, vectors) }
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn vectors(&self) -> Vec<Vec<E>> {
        self.basis.columns()
    }
}

impl<E: Clone + PartialEq> Subspace<E> {
    /// Coordinates of `v` in the basis, if `v` lies in the span.
    pub fn coords<R: Ring<Elem = E>>(&self, ring: &R, v: &[E]) -> Result<Option<Vec<E>>> {
        ring.solve(&self.basis, v)
    }

    pub fn contains<R: Ring<Elem = E>>(&self, ring: &R, v: &[E]) -> Result<bool> {
        Ok(self.coords(ring, v)?.is_some())
    }

    pub fn contains_all<R: Ring<Elem = E>>(&self, ring: &R, other: &Subspace<E>) -> Result<bool> {
        for v in other.vectors() {
            if !self.contains(ring, &v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn same_as<R: Ring<Elem = E>>(&self, ring: &R, other: &Subspace<E>) -> Result<bool> {
        Ok(self.ambient == other.ambient && self.contains_all(ring, other)? && other.contains_all(ring, self)?)
    }
}

impl<R: Ring> FinAlgebra<R> {
    pub fn new(ring: R, dim: usize, mult: Vec<R::Elem>, unit: Vec<R::Elem>) -> Result<Self> {
        if mult.len() != dim * dim * dim || unit.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "algebra of dimension {dim} needs {} structure constants and a unit of length {dim}",
                dim * dim * dim
            )));
        }
        Ok(FinAlgebra { ring, dim, mult, unit })
    }

    /// Builds the algebra from the products `e_i·e_j` as coordinate vectors.
    pub fn from_products(ring: R, dim: usize, unit: Vec<R::Elem>, mut f: impl FnMut(usize, usize) -> Vec<R::Elem>) -> Result<Self> {
        let mut mult = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                if v.len() != dim {
                    return Err(Error::DimensionMismatch("product vector has wrong length".into()));
                }
                mult.extend(v);
            }
        }
        FinAlgebra::new(ring, dim, mult, unit)
    }

    /// The full matrix algebra `M_n` with basis `E_ab ↦ a·n + b`.
    pub fn matrix_algebra(ring: R, n: usize) -> Self {
        let d = n * n;
        let unit = (0..d).map(|k| if k / n == k % n { ring.one() } else { ring.zero() }).collect();
        FinAlgebra::from_products(ring.clone(), d, unit, |i, j| {
            let (a, b) = (i / n, i % n);
            let (c, e) = (j / n, j % n);
            let mut v = matrix::zero_vector(&ring, d);
            if b == c {
                v[a * n + e] = ring.one();
            }
            v
        })
        .expect("matrix algebra dimensions")
    }

    /// `F[x]/(x^n)` with basis `1, x, .., x^{n-1}`.
    pub fn truncated_polynomials(ring: R, n: usize) -> Self {
        FinAlgebra::from_products(ring.clone(), n, matrix::unit_vector(&ring, n, 0), |i, j| {
            let mut v = matrix::zero_vector(&ring, n);
            if i + j < n {
                v[i + j] = ring.one();
            }
            v
        })
        .expect("truncated polynomial dimensions")
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[R::Elem] {
        &self.unit
    }

    pub fn structure_constants(&self) -> &[R::Elem] {
        &self.mult
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &R::Elem {
        &self.mult[(i * self.dim + j) * self.dim + k]
    }

    pub fn basis(&self, i: usize) -> Vec<R::Elem> {
        matrix::unit_vector(&self.ring, self.dim, i)
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vec<R::Elem> {
        let s = (i * self.dim + j) * self.dim;
        self.mult[s..s + self.dim].to_vec()
    }

    pub fn zero_element(&self) -> Vec<R::Elem> {
        matrix::zero_vector(&self.ring, self.dim)
    }

    pub fn mul(&self, x: &[R::Elem], y: &[R::Elem]) -> Vec<R::Elem> {
        let r = &self.ring;
        let d = self.dim;
        let mut out = self.zero_element();
        for (i, xi) in x.iter().enumerate() {
            if r.is_zero(xi) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if r.is_zero(yj) {
                    continue;
                }
                let c = r.mul(xi, yj);
                let s = (i * d + j) * d;
                for k in 0..d {
                    let m = &self.mult[s + k];
                    if !r.is_zero(m) {
                        out[k] = r.add(&out[k], &r.mul(&c, m));
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, x: &[R::Elem], n: usize) -> Vec<R::Elem> {
        let mut acc = self.unit.clone();
        for _ in 0..n {
            acc = self.mul(&acc, x);
        }
        acc
    }

    pub fn add(&self, x: &[R::Elem], y: &[R::Elem]) -> Vec<R::Elem> {
        matrix::vec_add(&self.ring, x, y)
    }

    pub fn sub(&self, x: &[R::Elem], y: &[R::Elem]) -> Vec<R::Elem> {
        matrix::vec_sub(&self.ring, x, y)
    }

    pub fn scale(&self, c: &R::Elem, x: &[R::Elem]) -> Vec<R::Elem> {
        matrix::vec_scale(&self.ring, c, x)
    }

    /// Matrix of `y ↦ x·y`.
    pub fn left_mul_matrix(&self, x: &[R::Elem]) -> Matrix<R::Elem> {
        let cols: Vec<_> = (0..self.dim).map(|j| self.mul(x, &self.basis(j))).collect();
        Matrix::from_columns(self.dim, &cols)
    }

    /// Matrix of `y ↦ y·x`.
    pub fn right_mul_matrix(&self, x: &[R::Elem]) -> Matrix<R::Elem> {
        let cols: Vec<_> = (0..self.dim).map(|j| self.mul(&self.basis(j), x)).collect();
        Matrix::from_columns(self.dim, &cols)
    }

    /// Matrix of the multiplication map `A⊗A → A`.
    pub fn mult_matrix(&self) -> Matrix<R::Elem> {
        let d = self.dim;
        Matrix::from_fn(d, d * d, |k, ij| self.mult[ij * d + k].clone())
    }

    pub fn verify(&self) -> AlgebraReport {
        let d = self.dim;
        let mut failing_triple = None;
        'outer: for i in 0..d {
            for j in 0..d {
                let ij = self.basis_product(i, j);
                for k in 0..d {
                    let left = self.mul(&ij, &self.basis(k));
                    let right = self.mul(&self.basis(i), &self.basis_product(j, k));
                    if left != right {
                        failing_triple = Some((i, j, k));
                        break 'outer;
                    }
                }
            }
        }
        let unit_failure = (0..d).find(|&i| {
            let e = self.basis(i);
            self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e
        });
        AlgebraReport {
            associative: failing_triple.is_none(),
            unital: unit_failure.is_none(),
            commutative: self.is_commutative(),
            failing_triple,
            unit_failure,
        }
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (i + 1..self.dim).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// Base change along a ring map applied to every structure constant.
    pub fn map_ring<S: Ring>(&self, target: S, f: impl Fn(&R::Elem) -> Result<S::Elem>) -> Result<FinAlgebra<S>> {
        let mult = self.mult.iter().map(&f).collect::<Result<Vec<_>>>()?;
        let unit = self.unit.iter().map(&f).collect::<Result<Vec<_>>>()?;
        FinAlgebra::new(target, self.dim, mult, unit)
    }

    /// `A⊗B` with basis index `i·dim_B + j`.
    pub fn tensor(&self, other: &FinAlgebra<R>) -> FinAlgebra<R> {
        let r = &self.ring;
        let (da, db) = (self.dim, other.dim);
        let unit = matrix::kron_vec(r, &self.unit, &other.unit);
        FinAlgebra::from_products(r.clone(), da * db, unit, |x, y| {
            let a = self.basis_product(x / db, y / db);
            let b = other.basis_product(x % db, y % db);
            matrix::kron_vec(r, &a, &b)
        })
        .expect("tensor dimensions")
    }

    /// Direct product `A × B` with basis `e_0.., f_0..`.
    pub fn product(&self, other: &FinAlgebra<R>) -> FinAlgebra<R> {
        let r = &self.ring;
        let (da, db) = (self.dim, other.dim);
        let mut unit = self.unit.clone();
        unit.extend(other.unit.iter().cloned());
        FinAlgebra::from_products(r.clone(), da + db, unit, |i, j| {
            let mut v = matrix::zero_vector(r, da + db);
            if i < da && j < da {
                v[..da].clone_from_slice(&self.basis_product(i, j));
            } else if i >= da && j >= da {
                v[da..].clone_from_slice(&other.basis_product(i - da, j - da));
            }
            v
        })
        .expect("product dimensions")
    }

    pub fn opposite(&self) -> FinAlgebra<R> {
        FinAlgebra::from_products(self.ring.clone(), self.dim, self.unit.clone(), |i, j| self.basis_product(j, i))
            .expect("opposite dimensions")
    }

    /// `{z : z e_i = e_i z for all i}`.
    pub fn center(&self) -> Result<Subspace<R::Elem>> {
        let d = self.dim;
        let mut stacked: Option<Matrix<R::Elem>> = None;
        for i in 0..d {
            let e = self.basis(i);
            let block = matrix::sub(&self.ring, &self.right_mul_matrix(&e), &self.left_mul_matrix(&e));
            stacked = Some(match stacked {
                None => block,
                Some(s) => s.vstack(&block)?,
            });
        }
        let basis = match stacked {
            None => Matrix::from_fn(0, 0, |_, _| self.ring.zero()),
            Some(s) => self.ring.kernel(&s)?,
        };
        Ok(Subspace { ambient: d, basis })
    }

    /// Two-sided inverse of `u`, when it exists.
    pub fn element_inverse(&self, u: &[R::Elem]) -> Result<Option<Vec<R::Elem>>> {
        let Some(v) = self.ring.solve(&self.left_mul_matrix(u), &self.unit)? else {
            return Ok(None);
        };
        Ok((self.mul(&v, u) == self.unit).then_some(v))
    }

    /// Whether the columns of `basis` span a subalgebra containing 1.
    pub fn is_subalgebra(&self, sub: &Subspace<R::Elem>) -> Result<bool> {
        if !sub.contains(&self.ring, &self.unit)? {
            return Ok(false);
        }
        let vs = sub.vectors();
        for x in &vs {
            for y in &vs {
                if !sub.contains(&self.ring, &self.mul(x, y))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The subalgebra spanned by the columns of `sub`, in that basis.
    pub fn restrict(&self, sub: &Subspace<R::Elem>) -> Result<FinAlgebra<R>> {
        let vs = sub.vectors();
        let coords = |v: &[R::Elem]| -> Result<Vec<R::Elem>> {
            sub.coords(&self.ring, v)?.ok_or_else(|| Error::InvalidInput("subspace is not closed under multiplication".into()))
        };
        let unit = coords(&self.unit)?;
        let mut mult = Vec::new();
        for x in &vs {
            for y in &vs {
                mult.extend(coords(&self.mul(x, y))?);
            }
        }
        FinAlgebra::new(self.ring.clone(), vs.len(), mult, unit)
    }

    /// Whether `m` (columns = images of basis vectors) is a unital algebra map
    /// from `self` to `target`.
    pub fn is_algebra_map(&self, target: &FinAlgebra<R>, m: &Matrix<R::Elem>) -> bool {
        if m.rows() != target.dim || m.cols() != self.dim {
            return false;
        }
        let r = &self.ring;
        if matrix::mul_vec(r, m, &self.unit) != target.unit {
            return false;
        }
        let imgs = m.columns();
        (0..self.dim).all(|i| (0..self.dim).all(|j| matrix::mul_vec(r, m, &self.basis_product(i, j)) == target.mul(&imgs[i], &imgs[j])))
    }
}

/// A quotient `k^n / W` realized on standard-basis representatives.
#[derive(Clone, Debug)]
pub struct Quotient<E> {
    pub ambient: usize,
    /// Ambient indices whose unit vectors form a basis of the quotient.
    pub reps: Vec<usize>,
    /// `reps.len() × ambient` matrix sending a vector to quotient coordinates.
    pub projection: Matrix<E>,
}

impl<E: Clone + PartialEq + std::fmt::Debug> Quotient<E> {
    pub fn new<R: Ring<Elem = E>>(ring: &R, ambient: usize, relations: &[Vec<E>]) -> Result<Self> {
        let rel = Matrix::from_columns(ambient, relations);
        let indep = linalg::independent_columns(ring, &rel)?;
        let w = rel.select_columns(&indep);
        let reps = linalg::complement_units(ring, &w)?;
        let mut basis = w.clone();
        for &r in &reps {
            basis = basis.hstack(&Matrix::from_columns(ambient, &[matrix::unit_vector(ring, ambient, r)]))?;
        }
        let inv = ring.invert_matrix(&basis)?.ok_or_else(|| Error::Unsupported("quotient basis is not invertible".into()))?;
        let projection = inv.submatrix(w.cols()..ambient, 0..ambient);
        Ok(Quotient { ambient, reps, projection })
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn project<R: Ring<Elem = E>>(&self, ring: &R, v: &[E]) -> Vec<E> {
        matrix::mul_vec(ring, &self.projection, v)
    }

    /// The representative in the ambient space of quotient coordinates `c`.
    pub fn lift<R: Ring<Elem = E>>(&self, ring: &R, c: &[E]) -> Vec<E> {
        let mut v = matrix::zero_vector(ring, self.ambient);
        for (k, &r) in self.reps.iter().enumerate() {
            v[r] = c[k].clone();
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Rationals;

    #[test]
    fn matrix_algebra_has_scalar_center() {
        let a = FinAlgebra::matrix_algebra(Rationals, 2);
        assert!(a.verify().passed());
        assert!(!a.verify().commutative);
        assert_eq!(a.center().unwrap().dim(), 1);
    }

    #[test]
    fn nilpotent_has_no_inverse() {
        let q = Rationals;
        let a = FinAlgebra::truncated_polynomials(q, 2);
        assert_eq!(a.element_inverse(&a.basis(1)).unwrap(), None);
        assert_eq!(a.element_inverse(a.unit()).unwrap(), Some(a.unit().to_vec()));
    }

    #[test]
    fn quotient_projection_kills_relations() {
        let q = Rationals;
        let rel = vec![vec![q.from_i64(1), q.from_i64(-1), q.zero()]];
        let quo = Quotient::new(&q, 3, &rel).unwrap();
        assert_eq!(quo.dim(), 2);
        assert!(matrix::vec_is_zero(&q, &quo.project(&q, &rel[0])));
        let v = vec![q.from_i64(2), q.zero(), q.from_i64(5)];
        let back = quo.lift(&q, &quo.project(&q, &v));
        assert!(matrix::vec_is_zero(&q, &quo.project(&q, &matrix::vec_sub(&q, &v, &back))));
    }
}
