//! Low-degree Hochschild cohomology of a bimodule, the endomorphism
//! bimodule of a right module, and order-by-order trivialization of
//! deformations of a module structure over `F[t]/(t^N)`.

use crate::algebra::{FinAlgebra, Quotient, Subspace};
use crate::error::{Error, Result};
use crate::matrix::{self, Matrix};
use crate::mu::{MuAction, RightModule};
use crate::ring::{Field, Ring};

pub const DEFAULT_ORDER: usize = 8;

/// An `A`-bimodule on `F^m`: `left[i]` is `v ↦ e_i·v`, `right[i]` is `v ↦ v·e_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct Bimodule<F: Field> {
    pub algebra: FinAlgebra<F>,
    pub dim: usize,
    pub left: Vec<Matrix<F::Elem>>,
    pub right: Vec<Matrix<F::Elem>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleReport {
    pub left_associative: bool,
    pub right_associative: bool,
    pub unital: bool,
    pub commute: bool,
}

impl BimoduleReport {
    pub fn passed(&self) -> bool {
        self.left_associative && self.right_associative && self.unital && self.commute
    }
}

fn span<F: Field>(f: &F, ms: &[Matrix<F::Elem>], x: &[F::Elem], n: usize) -> Matrix<F::Elem> {
    let mut acc = matrix::zeros(f, n, n);
    for (m, c) in ms.iter().zip(x) {
        if !f.is_zero(c) {
            acc = matrix::add(f, &acc, &matrix::scale(f, c, m));
        }
    }
    acc
}

impl<F: Field> Bimodule<F> {
    pub fn new(algebra: FinAlgebra<F>, left: Vec<Matrix<F::Elem>>, right: Vec<Matrix<F::Elem>>) -> Result<Self> {
        let a = algebra.dim();
        if left.len() != a || right.len() != a {
            return Err(Error::DimensionMismatch("one action matrix per basis element".into()));
        }
        let dim = left.first().map_or(0, |m| m.rows());
        if left.iter().chain(&right).any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::DimensionMismatch("action matrices must be square of equal size".into()));
        }
        Ok(Bimodule { algebra, dim, left, right })
    }

    /// `A` as a bimodule over itself.
    pub fn regular(algebra: FinAlgebra<F>) -> Self {
        let d = algebra.dim();
        let left = (0..d).map(|i| algebra.left_mul_matrix(&algebra.basis(i))).collect();
        let right = (0..d).map(|i| algebra.right_mul_matrix(&algebra.basis(i))).collect();
        Bimodule { algebra, dim: d, left, right }
    }

    /// Both sides acting through a character `χ` of `A`.
    pub fn through_character(algebra: FinAlgebra<F>, chi: &[F::Elem], dim: usize) -> Self {
        let f = algebra.ring().clone();
        let acts: Vec<_> = chi.iter().map(|c| matrix::scale(&f, c, &matrix::identity(&f, dim))).collect();
        Bimodule { algebra, dim, left: acts.clone(), right: acts }
    }

    /// `End(M)` for a right module `M` with action matrices `R_h`, where
    /// `(hφh′)(u) = φ(u←h)←h′`, i.e. `hφh′ = R_{h′}·φ·R_h`. Endomorphisms
    /// are flattened row-major.
    pub fn endomorphisms(algebra: FinAlgebra<F>, action: &[Matrix<F::Elem>]) -> Self {
        let f = algebra.ring().clone();
        let m = action.first().map_or(0, |a| a.rows());
        let id = matrix::identity(&f, m);
        let left = action.iter().map(|r| matrix::kronecker(&f, &id, &r.transpose())).collect();
        let right = action.iter().map(|r| matrix::kronecker(&f, r, &id)).collect();
        Bimodule { algebra, dim: m * m, left, right }
    }

    pub fn verify(&self) -> BimoduleReport {
        let f = self.algebra.ring();
        let a = self.algebra.dim();
        let n = self.dim;
        let mut rep = BimoduleReport { left_associative: true, right_associative: true, unital: true, commute: true };
        for i in 0..a {
            for j in 0..a {
                let ij = self.algebra.basis_product(i, j);
                rep.left_associative &= span(f, &self.left, &ij, n) == matrix::mul(f, &self.left[i], &self.left[j]);
                rep.right_associative &= span(f, &self.right, &ij, n) == matrix::mul(f, &self.right[j], &self.right[i]);
                rep.commute &= matrix::mul(f, &self.left[i], &self.right[j]) == matrix::mul(f, &self.right[j], &self.left[i]);
            }
        }
        let one = self.algebra.unit();
        rep.unital = matrix::is_identity(f, &span(f, &self.left, one, n)) && matrix::is_identity(f, &span(f, &self.right, one, n));
        rep
    }

    /// `d⁰(v)(e_i) = e_i·v − v·e_i`, landing in `Hom(A, M)` indexed `i·m + r`.
    pub fn d0(&self) -> Matrix<F::Elem> {
        let f = self.algebra.ring();
        let (a, m) = (self.algebra.dim(), self.dim);
        let mut out = matrix::zeros(f, a * m, m);
        for i in 0..a {
            let block = matrix::sub(f, &self.left[i], &self.right[i]);
            for r in 0..m {
                for c in 0..m {
                    out.set(i * m + r, c, block.get(r, c).clone());
                }
            }
        }
        out
    }

    /// `d¹(φ)(e_i, e_j) = e_i·φ(e_j) − φ(e_i e_j) + φ(e_i)·e_j`, indexed `(i·a + j)·m + r`.
    pub fn d1(&self) -> Matrix<F::Elem> {
        let f = self.algebra.ring();
        let (a, m) = (self.algebra.dim(), self.dim);
        let mut out = matrix::zeros(f, a * a * m, a * m);
        let mut bump = |row: usize, col: usize, v: &F::Elem| {
            if !f.is_zero(v) {
                let s = f.add(out.get(row, col), v);
                out.set(row, col, s);
            }
        };
        for i in 0..a {
            for j in 0..a {
                let base = (i * a + j) * m;
                for r in 0..m {
                    for c in 0..m {
                        bump(base + r, j * m + c, self.left[i].get(r, c));
                        bump(base + r, i * m + c, self.right[j].get(r, c));
                    }
                    for k in 0..a {
                        bump(base + r, k * m + r, &f.neg(self.algebra.constant(i, j, k)));
                    }
                }
            }
        }
        out
    }

    /// The cochain in `Hom(A, M)` given by `φ(e_i) = maps[i]`.
    pub fn cochain(maps: &[Vec<F::Elem>]) -> Vec<F::Elem> {
        maps.concat()
    }
}

#[derive(Clone, Debug)]
pub struct HH1<E> {
    pub dim: usize,
    pub cocycles: Subspace<E>,
    pub coboundaries: Subspace<E>,
    /// Cocycles whose classes form a basis of `HH¹`.
    pub generators: Vec<Vec<E>>,
    /// `d¹∘d⁰ = 0`.
    pub complex: bool,
    /// `Hom(A, M) / im d⁰`, used for class coordinates.
    pub quotient: Quotient<E>,
}

impl<E: Clone + PartialEq + std::fmt::Debug> HH1<E> {
    /// Coordinates of a cochain modulo coboundaries.
    pub fn class<R: Ring<Elem = E>>(&self, ring: &R, cochain: &[E]) -> Vec<E> {
        self.quotient.project(ring, cochain)
    }
}

pub fn hh1<F: Field>(m: &Bimodule<F>) -> Result<HH1<F::Elem>> {
    let f = m.algebra.ring();
    let d0 = m.d0();
    let d1 = m.d1();
    let complex = matrix::is_zero(f, &matrix::mul(f, &d1, &d0));
    let ambient = m.algebra.dim() * m.dim;
    let cocycles = Subspace { ambient, basis: f.kernel(&d1)? };
    let cols: Vec<_> = d0.columns();
    let coboundaries = Subspace::new(ambient, &cols);
    let quotient = Quotient::new(f, ambient, &cols)?;
    let mut generators = Vec::new();
    let mut images: Vec<Vec<F::Elem>> = Vec::new();
    for z in cocycles.vectors() {
        let c = quotient.project(f, &z);
        let mut trial = images.clone();
        trial.push(c.clone());
        if f.rank(&Matrix::from_columns(quotient.dim(), &trial))? == trial.len() {
            images = trial;
            generators.push(z);
        }
    }
    Ok(HH1 { dim: generators.len(), cocycles, coboundaries, generators, complex, quotient })
}

/// The endomorphism bimodule of `U` under its Miyashita-Ulbrich action.
pub fn e_chi_bimodule<F: Field>(hopf_algebra: &FinAlgebra<F>, action: &MuAction<F::Elem>) -> Bimodule<F> {
    Bimodule::endomorphisms(hopf_algebra.clone(), &action.matrices)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfinitesimalReport {
    pub normalized: bool,
    pub cocycle: bool,
    /// `(a, h, h′)` with `μ(a, hh′) ≠ μ(a,h)←h′ + μ(a←h, h′)`.
    pub witness: Option<(usize, usize, usize)>,
}

impl InfinitesimalReport {
    pub fn passed(&self) -> bool {
        self.normalized && self.cocycle
    }
}

/// Checks `μ(a, hh′) = μ(a,h)←h′ + μ(a←h, h′)` and `μ(a, 1) = 0` on basis
/// elements, where `μ(a, h_i) = mu[i]·a` and `a←h_i = action[i]·a`.
pub fn infinitesimal_check<F: Field>(algebra: &FinAlgebra<F>, action: &[Matrix<F::Elem>], mu: &[Matrix<F::Elem>]) -> InfinitesimalReport {
    let f = algebra.ring();
    let n = action.first().map_or(0, |m| m.rows());
    let normalized = matrix::is_zero(f, &span(f, mu, algebra.unit(), n));
    let mut witness = None;
    'outer: for p in 0..algebra.dim() {
        for q in 0..algebra.dim() {
            let lhs = span(f, mu, &algebra.basis_product(p, q), n);
            let rhs = matrix::add(f, &matrix::mul(f, &action[q], &mu[p]), &matrix::mul(f, &mu[q], &action[p]));
            if lhs != rhs {
                let diff = matrix::sub(f, &lhs, &rhs);
                let a = (0..n).find(|&c| !matrix::vec_is_zero(f, &diff.col(c))).unwrap_or(0);
                witness = Some((a, p, q));
                break 'outer;
            }
        }
    }
    InfinitesimalReport { normalized, cocycle: witness.is_none(), witness }
}

/// A matrix over `F[t]/(t^N)` as its coefficient matrices.
pub type Series<E> = Vec<Matrix<E>>;

pub fn series_mul<F: Field>(f: &F, a: &[Matrix<F::Elem>], b: &[Matrix<F::Elem>], order: usize) -> Series<F::Elem> {
    let n = a[0].rows();
    let mut out = vec![matrix::zeros(f, n, b[0].cols()); order];
    for (i, ai) in a.iter().enumerate().take(order) {
        if matrix::is_zero(f, ai) {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(order - i) {
            out[i + j] = matrix::add(f, &out[i + j], &matrix::mul(f, ai, bj));
        }
    }
    out
}

/// Inverse of a series whose constant term is the identity.
pub fn series_inverse<F: Field>(f: &F, a: &[Matrix<F::Elem>], order: usize) -> Result<Series<F::Elem>> {
    let n = a[0].rows();
    if !matrix::is_identity(f, &a[0]) {
        return Err(Error::InvalidInput("series inverse needs a unipotent constant term".into()));
    }
    let mut out = vec![matrix::identity(f, n)];
    for k in 1..order {
        let mut acc = matrix::zeros(f, n, n);
        for j in 1..=k {
            if let Some(aj) = a.get(j) {
                acc = matrix::sub(f, &acc, &matrix::mul(f, aj, &out[k - j]));
            }
        }
        out.push(acc);
    }
    Ok(out)
}

fn series_identity<F: Field>(f: &F, n: usize, order: usize) -> Series<F::Elem> {
    let mut s = vec![matrix::zeros(f, n, n); order];
    s[0] = matrix::identity(f, n);
    s
}

fn series_span<F: Field>(f: &F, family: &[Series<F::Elem>], x: &[F::Elem], n: usize, order: usize) -> Series<F::Elem> {
    (0..order)
        .map(|k| {
            let ms: Vec<_> = family.iter().map(|s| s[k].clone()).collect();
            span(f, &ms, x, n)
        })
        .collect()
}

/// A right-module structure on `F^m` over `F[t]/(t^N)`: `action[h][k]` is
/// the `t^k` coefficient of the action of `h_h`.
#[derive(Clone, Debug, PartialEq)]
pub struct DeformationFamily<F: Field> {
    pub algebra: FinAlgebra<F>,
    pub dim: usize,
    pub order: usize,
    pub action: Vec<Series<F::Elem>>,
}

impl<F: Field> DeformationFamily<F> {
    pub fn new(algebra: FinAlgebra<F>, order: usize, mut action: Vec<Series<F::Elem>>) -> Result<Self> {
        let f = algebra.ring().clone();
        if order == 0 {
            return Err(Error::InvalidFamily("order must be positive".into()));
        }
        if action.len() != algebra.dim() || action.iter().any(|s| s.is_empty()) {
            return Err(Error::InvalidFamily("one series per basis element".into()));
        }
        let dim = action[0][0].rows();
        for s in &mut action {
            if s.iter().any(|m| m.rows() != dim || m.cols() != dim) {
                return Err(Error::InvalidFamily("coefficients must be square of equal size".into()));
            }
            s.truncate(order);
            s.resize(order, matrix::zeros(&f, dim, dim));
        }
        let fam = DeformationFamily { algebra, dim, order, action };
        if let Some((p, q)) = fam.axiom_failure() {
            return Err(Error::InvalidFamily(format!("action axiom fails for basis pair ({p}, {q})")));
        }
        if fam.series(fam.algebra.unit()) != series_identity(&f, dim, order) {
            return Err(Error::InvalidFamily("the unit does not act as the identity".into()));
        }
        Ok(fam)
    }

    /// The family `F·ρ(h)·F⁻¹` for a constant right module `ρ`.
    pub fn conjugated(algebra: FinAlgebra<F>, action: &[Matrix<F::Elem>], conj: &[Matrix<F::Elem>], order: usize) -> Result<Self> {
        let f = algebra.ring().clone();
        let inv = series_inverse(&f, conj, order)?;
        let fam = action.iter().map(|r| series_mul(&f, &series_mul(&f, conj, &[r.clone()], order), &inv, order)).collect();
        Self::new(algebra, order, fam)
    }

    pub fn constant(&self) -> Vec<Matrix<F::Elem>> {
        self.action.iter().map(|s| s[0].clone()).collect()
    }

    fn series(&self, x: &[F::Elem]) -> Series<F::Elem> {
        series_span(self.algebra.ring(), &self.action, x, self.dim, self.order)
    }

    fn axiom_failure(&self) -> Option<(usize, usize)> {
        let f = self.algebra.ring();
        for p in 0..self.algebra.dim() {
            for q in 0..self.algebra.dim() {
                let lhs = self.series(&self.algebra.basis_product(p, q));
                let rhs = series_mul(f, &self.action[q], &self.action[p], self.order);
                if lhs != rhs {
                    return Some((p, q));
                }
            }
        }
        None
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Trivialization<E> {
    /// `F ≡ id mod t` with `F⁻¹·ρ_t(h)·F = ρ_0(h)`.
    Trivialized(Series<E>),
    /// The residual at `order` is a cocycle with nonzero class.
    Obstruction { order: usize, class: Vec<E> },
}

pub fn trivialize_deformation<F: Field>(d: &DeformationFamily<F>) -> Result<Trivialization<F::Elem>> {
    let f = d.algebra.ring();
    let (n, order) = (d.dim, d.order);
    let base = d.constant();
    let bimodule = Bimodule::endomorphisms(d.algebra.clone(), &base);
    let cohomology = hh1(&bimodule)?;
    let d0 = bimodule.d0();
    let d1 = bimodule.d1();
    let mut current = d.action.clone();
    let mut g = series_identity(f, n, order);
    for m in 1..order {
        let residual: Vec<F::Elem> = current.iter().flat_map(|s| s[m].entries().to_vec()).collect();
        if !matrix::vec_is_zero(f, &matrix::mul_vec(f, &d1, &residual)) {
            return Err(Error::InvalidFamily(format!("the residual at order {m} is not a cocycle")));
        }
        if matrix::vec_is_zero(f, &residual) {
            continue;
        }
        let target: Vec<_> = residual.iter().map(|x| f.neg(x)).collect();
        let Some(theta) = f.solve(&d0, &target)? else {
            return Ok(Trivialization::Obstruction { order: m, class: cohomology.class(f, &residual) });
        };
        let mut step = series_identity(f, n, order);
        step[m] = Matrix::from_vec(n, n, theta);
        let step_inv = series_inverse(f, &step, order)?;
        current = current.iter().map(|s| series_mul(f, &series_mul(f, &step, s, order), &step_inv, order)).collect();
        g = series_mul(f, &step, &g, order);
    }
    let conj = series_inverse(f, &g, order)?;
    let ginv = g;
    for (s, r) in d.action.iter().zip(&base) {
        let back = series_mul(f, &series_mul(f, &ginv, s, order), &conj, order);
        let mut expect = vec![matrix::zeros(f, n, n); order];
        expect[0] = r.clone();
        if back != expect {
            return Err(Error::InvalidFamily("the trivialization does not conjugate back".into()));
        }
    }
    Ok(Trivialization::Trivialized(conj))
}

impl<F: Field> RightModule<F> {
    /// The constant family at this module.
    pub fn constant_family(&self, order: usize) -> Result<DeformationFamily<F>> {
        let f = self.hopf.field();
        let action = self
            .action
            .iter()
            .map(|m| {
                let mut s = vec![matrix::zeros(f, m.rows(), m.rows()); order];
                s[0] = m.clone();
                s
            })
            .collect();
        DeformationFamily::new(self.hopf.algebra().clone(), order, action)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Rationals;

    fn dual_numbers() -> FinAlgebra<Rationals> {
        FinAlgebra::truncated_polynomials(Rationals, 2)
    }

    #[test]
    fn dual_numbers_have_one_outer_derivation() {
        let h = hh1(&Bimodule::regular(dual_numbers())).unwrap();
        assert!(h.complex);
        assert_eq!(h.dim, 1);
    }

    #[test]
    fn matrix_algebra_is_separable() {
        let b = Bimodule::regular(FinAlgebra::matrix_algebra(Rationals, 2));
        assert!(b.verify().passed());
        assert_eq!(hh1(&b).unwrap().dim, 0);
    }

    #[test]
    fn nontrivial_extension_is_obstructed() {
        let q = Rationals;
        let a = dual_numbers();
        let zero = matrix::zeros(&q, 2, 2);
        let e12 = matrix::from_i64(&q, &[&[0, 1], &[0, 0]]);
        let action = vec![vec![matrix::identity(&q, 2)], vec![zero.clone(), e12]];
        let fam = DeformationFamily::new(a, DEFAULT_ORDER, action).unwrap();
        match trivialize_deformation(&fam).unwrap() {
            Trivialization::Obstruction { order, class } => {
                assert_eq!(order, 1);
                assert!(!matrix::vec_is_zero(&q, &class));
            }
            other => panic!("expected an obstruction, got {other:?}"),
        }
    }
}
