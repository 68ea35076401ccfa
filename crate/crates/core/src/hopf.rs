//! Finite-dimensional Hopf algebras over a field, by structure constants.

use crate::algebra::{AlgebraReport, FinAlgebra, Subspace};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::matrix::{self, Matrix};
use crate::ring::{Algebra, Field, Ring};

/// `Δ(e_i) = Σ comult[(i·d + j)·d + k] e_j⊗e_k`, counit `ε(e_i) = counit[i]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Coalgebra<F: Field> {
    field: F,
    dim: usize,
    comult: Vec<F::Elem>,
    counit: Vec<F::Elem>,
}

impl<F: Field> Coalgebra<F> {
    pub fn new(field: F, dim: usize, comult: Vec<F::Elem>, counit: Vec<F::Elem>) -> Result<Self> {
        if comult.len() != dim * dim * dim || counit.len() != dim {
            return Err(Error::DimensionMismatch(format!("coalgebra of dimension {dim}")));
        }
        Ok(Coalgebra { field, dim, comult, counit })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn counit(&self) -> &[F::Elem] {
        &self.counit
    }

    pub fn structure_constants(&self) -> &[F::Elem] {
        &self.comult
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &F::Elem {
        &self.comult[(i * self.dim + j) * self.dim + k]
    }

    /// `Δ(e_i)` in `C⊗C` coordinates.
    pub fn comult_basis(&self, i: usize) -> Vec<F::Elem> {
        let d2 = self.dim * self.dim;
        self.comult[i * d2..(i + 1) * d2].to_vec()
    }

    pub fn comult(&self, x: &[F::Elem]) -> Vec<F::Elem> {
        matrix::mul_vec(&self.field, &self.comult_matrix(), x)
    }

    /// Matrix of `Δ: C → C⊗C`.
    pub fn comult_matrix(&self) -> Matrix<F::Elem> {
        let d = self.dim;
        Matrix::from_fn(d * d, d, |jk, i| self.comult[i * d * d + jk].clone())
    }

    pub fn apply_counit(&self, x: &[F::Elem]) -> F::Elem {
        dot(&self.field, &self.counit, x)
    }

    /// `C⊗D` with `Δ(c⊗d) = (c₁⊗d₁)⊗(c₂⊗d₂)`.
    pub fn tensor(&self, other: &Coalgebra<F>) -> Coalgebra<F> {
        let f = &self.field;
        let (dc, dd) = (self.dim, other.dim);
        let n = dc * dd;
        let mut comult = vec![f.zero(); n * n * n];
        for i in 0..dc {
            for a in 0..dd {
                for j in 0..dc {
                    for k in 0..dc {
                        let c = self.constant(i, j, k);
                        if f.is_zero(c) {
                            continue;
                        }
                        for b in 0..dd {
                            for e in 0..dd {
                                let w = other.constant(a, b, e);
                                if f.is_zero(w) {
                                    continue;
                                }
                                let idx = ((i * dd + a) * n + (j * dd + b)) * n + (k * dd + e);
                                comult[idx] = f.add(&comult[idx], &f.mul(c, w));
                            }
                        }
                    }
                }
            }
        }
        let counit = matrix::kron_vec(f, &self.counit, &other.counit);
        Coalgebra { field: f.clone(), dim: n, comult, counit }
    }

    pub fn is_coassociative(&self) -> bool {
        let f = &self.field;
        let d = self.dim;
        let delta = self.comult_matrix();
        let id = matrix::identity(f, d);
        let left = matrix::mul(f, &matrix::kronecker(f, &delta, &id), &delta);
        let right = matrix::mul(f, &matrix::kronecker(f, &id, &delta), &delta);
        left == right
    }

    pub fn is_counital(&self) -> bool {
        let f = &self.field;
        let d = self.dim;
        let delta = self.comult_matrix();
        let eps = Matrix::from_vec(1, d, self.counit.clone());
        let id = matrix::identity(f, d);
        let l = matrix::mul(f, &matrix::kronecker(f, &eps, &id), &delta);
        let r = matrix::mul(f, &matrix::kronecker(f, &id, &eps), &delta);
        l == id && r == id
    }
}

pub(crate) fn dot<R: Ring>(r: &R, a: &[R::Elem], b: &[R::Elem]) -> R::Elem {
    a.iter().zip(b).fold(r.zero(), |acc, (x, y)| if r.is_zero(x) || r.is_zero(y) { acc } else { r.add(&acc, &r.mul(x, y)) })
}

#[derive(Clone, Debug, PartialEq)]
pub struct HopfAlgebra<F: Field> {
    algebra: FinAlgebra<F>,
    coalgebra: Coalgebra<F>,
    antipode: Matrix<F::Elem>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfReport {
    pub algebra: AlgebraReport,
    pub coassociative: bool,
    pub counital: bool,
    pub comult_multiplicative: bool,
    pub counit_multiplicative: bool,
    pub antipode: bool,
    pub failures: Vec<String>,
}

impl HopfReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct IntegralReport<E> {
    pub left: Subspace<E>,
    pub right: Subspace<E>,
    pub left_dual: Subspace<E>,
    pub right_dual: Subspace<E>,
    pub unimodular: bool,
    /// `None` when the order exceeds `4·dim²`.
    pub antipode_order: Option<usize>,
    pub cosemisimple: bool,
    /// The normalized left integral `Λ` of `H*`.
    pub lambda: Vec<E>,
}

impl<F: Field> HopfAlgebra<F> {
    pub fn new(algebra: FinAlgebra<F>, coalgebra: Coalgebra<F>, antipode: Matrix<F::Elem>) -> Result<Self> {
        let d = algebra.dim();
        if coalgebra.dim() != d || antipode.rows() != d || antipode.cols() != d {
            return Err(Error::DimensionMismatch("algebra, coalgebra and antipode dimensions differ".into()));
        }
        if algebra.ring() != coalgebra.field() {
            return Err(Error::DimensionMismatch("algebra and coalgebra over different fields".into()));
        }
        Ok(HopfAlgebra { algebra, coalgebra, antipode })
    }

    pub fn field(&self) -> &F {
        self.algebra.ring()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn algebra(&self) -> &FinAlgebra<F> {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &Coalgebra<F> {
        &self.coalgebra
    }

    pub fn antipode(&self) -> &Matrix<F::Elem> {
        &self.antipode
    }

    pub fn counit(&self) -> &[F::Elem] {
        self.coalgebra.counit()
    }

    pub fn unit(&self) -> &[F::Elem] {
        self.algebra.unit()
    }

    pub fn mul(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        self.algebra.mul(x, y)
    }

    pub fn comult(&self, x: &[F::Elem]) -> Vec<F::Elem> {
        self.coalgebra.comult(x)
    }

    pub fn apply_antipode(&self, x: &[F::Elem]) -> Vec<F::Elem> {
        matrix::mul_vec(self.field(), &self.antipode, x)
    }

    pub fn basis(&self, i: usize) -> Vec<F::Elem> {
        self.algebra.basis(i)
    }

    /// The group algebra `F[G]` with basis the group elements.
    pub fn group_algebra(field: F, g: &Group) -> Result<Self> {
        let n = g.order();
        let f = &field;
        let unit = matrix::unit_vector(f, n, g.identity());
        let algebra = FinAlgebra::from_products(field.clone(), n, unit, |a, b| matrix::unit_vector(f, n, g.mul(a, b)))?;
        let mut comult = vec![f.zero(); n * n * n];
        for a in 0..n {
            comult[(a * n + a) * n + a] = f.one();
        }
        let coalgebra = Coalgebra::new(field.clone(), n, comult, vec![f.one(); n])?;
        let antipode = Matrix::from_fn(n, n, |i, j| if i == g.inv(j) { f.one() } else { f.zero() });
        HopfAlgebra::new(algebra, coalgebra, antipode)
    }

    /// The function algebra `F^G` with basis `δ_g`.
    pub fn dual_group_algebra(field: F, g: &Group) -> Result<Self> {
        Ok(HopfAlgebra::group_algebra(field, g)?.dual())
    }

    /// Sweedler's four-dimensional Hopf algebra with basis `1, g, x, gx`:
    /// `g² = 1`, `x² = 0`, `xg = −gx`, `Δg = g⊗g`, `Δx = x⊗1 + g⊗x`.
    pub fn sweedler(field: F) -> Result<Self> {
        let f = &field;
        let idx = |a: usize, b: usize| a + 2 * b;
        let unit = matrix::unit_vector(f, 4, 0);
        let algebra = FinAlgebra::from_products(field.clone(), 4, unit, |i, j| {
            let (a, b) = (i % 2, i / 2);
            let (c, d) = (j % 2, j / 2);
            let mut v = matrix::zero_vector(f, 4);
            if b + d < 2 {
                let sign = if b * c == 1 { f.from_i64(-1) } else { f.one() };
                v[idx((a + c) % 2, b + d)] = sign;
            }
            v
        })?;
        let mut comult = vec![f.zero(); 64];
        let mut put = |i: usize, j: usize, k: usize, c: i64| comult[(i * 4 + j) * 4 + k] = f.from_i64(c);
        put(0, 0, 0, 1);
        put(1, 1, 1, 1);
        put(2, 2, 0, 1);
        put(2, 1, 2, 1);
        put(3, 3, 1, 1);
        put(3, 0, 3, 1);
        let counit = vec![f.one(), f.one(), f.zero(), f.zero()];
        let coalgebra = Coalgebra::new(field.clone(), 4, comult, counit)?;
        let antipode = matrix::from_i64(f, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]]);
        HopfAlgebra::new(algebra, coalgebra, antipode)
    }

    /// `H*` in the dual basis: multiplication is the transpose of `Δ`,
    /// comultiplication the transpose of the product, `S* = Sᵀ`.
    pub fn dual(&self) -> HopfAlgebra<F> {
        let f = self.field().clone();
        let d = self.dim();
        let mut mult = Vec::with_capacity(d * d * d);
        let mut comult = Vec::with_capacity(d * d * d);
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    mult.push(self.coalgebra.constant(c, a, b).clone());
                    comult.push(self.algebra.constant(b, c, a).clone());
                }
            }
        }
        let algebra = FinAlgebra::new(f.clone(), d, mult, self.counit().to_vec()).expect("dual dimensions");
        let coalgebra = Coalgebra::new(f, d, comult, self.unit().to_vec()).expect("dual dimensions");
        HopfAlgebra { algebra, coalgebra, antipode: self.antipode.transpose() }
    }

    /// Extension of scalars along a field embedding.
    pub fn extend_scalars<G: Field>(&self, target: G, f: impl Fn(&F::Elem) -> G::Elem) -> Result<HopfAlgebra<G>> {
        let algebra = self.algebra.map_ring(target.clone(), |c| Ok(f(c)))?;
        let co = &self.coalgebra;
        let coalgebra = Coalgebra::new(target, co.dim, co.comult.iter().map(&f).collect(), co.counit.iter().map(&f).collect())?;
        HopfAlgebra::new(algebra, coalgebra, self.antipode.map(&f))
    }

    pub fn verify(&self) -> HopfReport {
        let f = self.field();
        let d = self.dim();
        let mut failures = Vec::new();
        let algebra = self.algebra.verify();
        if let Some(t) = algebra.failing_triple {
            failures.push(format!("multiplication not associative at basis triple {t:?}"));
        }
        if let Some(i) = algebra.unit_failure {
            failures.push(format!("unit does not act as identity on e_{i}"));
        }
        let coassociative = self.coalgebra.is_coassociative();
        if !coassociative {
            failures.push("comultiplication not coassociative".into());
        }
        let counital = self.coalgebra.is_counital();
        if !counital {
            failures.push("counit law fails".into());
        }
        let hh = self.algebra.tensor(&self.algebra);
        let mut comult_multiplicative = self.comult(self.unit()) == matrix::kron_vec(f, self.unit(), self.unit());
        let mut counit_multiplicative = f.is_one(&self.coalgebra.apply_counit(self.unit()));
        for i in 0..d {
            for j in 0..d {
                let p = self.algebra.basis_product(i, j);
                let lhs = self.comult(&p);
                let rhs = hh.mul(&self.coalgebra.comult_basis(i), &self.coalgebra.comult_basis(j));
                if lhs != rhs && comult_multiplicative {
                    comult_multiplicative = false;
                    failures.push(format!("Δ(e_{i}·e_{j}) ≠ Δ(e_{i})Δ(e_{j})"));
                }
                let e = self.coalgebra.apply_counit(&p);
                if e != f.mul(&self.counit()[i], &self.counit()[j]) && counit_multiplicative {
                    counit_multiplicative = false;
                    failures.push(format!("ε(e_{i}·e_{j}) ≠ ε(e_{i})ε(e_{j})"));
                }
            }
        }
        if !comult_multiplicative && !failures.iter().any(|s| s.starts_with('Δ')) {
            failures.push("Δ(1) ≠ 1⊗1".into());
        }
        if !counit_multiplicative && !failures.iter().any(|s| s.starts_with('ε')) {
            failures.push("ε(1) ≠ 1".into());
        }
        let mut antipode = true;
        let sid = matrix::kronecker(f, &self.antipode, &matrix::identity(f, d));
        let ids = matrix::kronecker(f, &matrix::identity(f, d), &self.antipode);
        let m = self.algebra.mult_matrix();
        let delta = self.coalgebra.comult_matrix();
        let ueps = Matrix::from_fn(d, d, |k, i| f.mul(&self.unit()[k], &self.counit()[i]));
        for (name, side) in [("m(S⊗id)Δ", &sid), ("m(id⊗S)Δ", &ids)] {
            let lhs = matrix::mul(f, &matrix::mul(f, &m, side), &delta);
            if lhs != ueps {
                antipode = false;
                failures.push(format!("{name} ≠ uε"));
            }
        }
        HopfReport { algebra, coassociative, counital, comult_multiplicative, counit_multiplicative, antipode, failures }
    }

    /// `{Λ : h·Λ = ε(h)Λ for all h}`.
    pub fn left_integrals(&self) -> Result<Subspace<F::Elem>> {
        self.integrals(true)
    }

    /// `{Λ : Λ·h = ε(h)Λ for all h}`.
    pub fn right_integrals(&self) -> Result<Subspace<F::Elem>> {
        self.integrals(false)
    }

    fn integrals(&self, left: bool) -> Result<Subspace<F::Elem>> {
        let f = self.field();
        let d = self.dim();
        let mut stacked: Option<Matrix<F::Elem>> = None;
        for i in 0..d {
            let e = self.basis(i);
            let act = if left { self.algebra.left_mul_matrix(&e) } else { self.algebra.right_mul_matrix(&e) };
            let shift = matrix::scale(f, &self.counit()[i], &matrix::identity(f, d));
            let block = matrix::sub(f, &act, &shift);
            stacked = Some(match stacked {
                None => block,
                Some(s) => s.vstack(&block)?,
            });
        }
        let k = f.kernel(&stacked.expect("nonzero dimension"))?;
        let vectors: Vec<Vec<F::Elem>> = k.columns().into_iter().map(|v| normalize_first(f, v)).collect();
        Ok(Subspace::new(d, &vectors))
    }

    /// Smallest `k ≥ 1` with `S^k = id`, or `None` beyond `4·dim²`.
    pub fn antipode_order(&self) -> Option<usize> {
        let f = self.field();
        let d = self.dim();
        let id = matrix::identity(f, d);
        let mut p = self.antipode.clone();
        for k in 1..=4 * d * d {
            if p == id {
                return Some(k);
            }
            p = matrix::mul(f, &p, &self.antipode);
        }
        None
    }

    pub fn is_unimodular(&self) -> Result<bool> {
        self.left_integrals()?.same_as(self.field(), &self.right_integrals()?)
    }

    /// The left integral `Λ` of `H*`, normalized so that its first nonzero
    /// coordinate is 1, or `Λ(1) = 1` in characteristic 0 when `Λ(1) ≠ 0`.
    pub fn normalized_lambda(&self) -> Result<Vec<F::Elem>> {
        let f = self.field();
        let space = self.dual().left_integrals()?;
        let lambda = space.vectors().into_iter().next().ok_or_else(|| Error::Unsupported("no nonzero integral".into()))?;
        let at_one = dot(f, &lambda, self.unit());
        if f.characteristic() == 0 && !f.is_zero(&at_one) {
            return Ok(matrix::vec_scale(f, &f.inv(&at_one), &lambda));
        }
        Ok(lambda)
    }

    pub fn integral_report(&self) -> Result<IntegralReport<F::Elem>> {
        let f = self.field();
        let dual = self.dual();
        let left = self.left_integrals()?;
        let right = self.right_integrals()?;
        let left_dual = dual.left_integrals()?;
        let right_dual = dual.right_integrals()?;
        let unimodular = left.same_as(f, &right)?;
        let lambda = self.normalized_lambda()?;
        let cosemisimple = !f.is_zero(&dot(f, &lambda, self.unit()));
        Ok(IntegralReport { left, right, left_dual, right_dual, unimodular, antipode_order: self.antipode_order(), cosemisimple, lambda })
    }

    /// Whether `S(ab) = S(b)S(a)` on all basis pairs.
    pub fn antipode_is_antimultiplicative(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| {
            (0..d).all(|j| {
                let lhs = self.apply_antipode(&self.algebra.basis_product(i, j));
                let rhs = self.mul(&self.apply_antipode(&self.basis(j)), &self.apply_antipode(&self.basis(i)));
                lhs == rhs
            })
        })
    }

    /// Whether `m` (columns = images of basis vectors) is a Hopf algebra map
    /// into `target`.
    pub fn is_hopf_map(&self, target: &HopfAlgebra<F>, m: &Matrix<F::Elem>) -> bool {
        let f = self.field();
        if !self.algebra.is_algebra_map(&target.algebra, m) {
            return false;
        }
        let mm = matrix::kronecker(f, m, m);
        let lhs = matrix::mul(f, &target.coalgebra.comult_matrix(), m);
        let rhs = matrix::mul(f, &mm, &self.coalgebra.comult_matrix());
        let eps = Matrix::from_vec(1, target.dim(), target.counit().to_vec());
        lhs == rhs
            && matrix::mul(f, &eps, m).entries() == self.counit()
            && matrix::mul(f, &target.antipode, m) == matrix::mul(f, m, &self.antipode)
    }
}

fn normalize_first<F: Field>(f: &F, v: Vec<F::Elem>) -> Vec<F::Elem> {
    match v.iter().find(|x| !f.is_zero(x)) {
        Some(c) => {
            let inv = f.inv(c);
            matrix::vec_scale(f, &inv, &v)
        }
        None => v,
    }
}

/// The convolution algebra `Hom(C, A)`: the map sending `e_c` to `Σ_x
/// f[c·dim A + x] a_x`, with `(f⋆g)(c) = f(c₁)g(c₂)` and unit `uε`.
pub fn convolution_algebra<F: Field, R: Algebra<F>>(c: &Coalgebra<F>, a: &FinAlgebra<R>) -> FinAlgebra<R> {
    let r = a.ring();
    let (dc, da) = (c.dim(), a.dim());
    let n = dc * da;
    let unit: Vec<R::Elem> = (0..n).map(|i| r.mul(&r.scalar(&c.counit()[i / da]), &a.unit()[i % da])).collect();
    let fld = c.field();
    FinAlgebra::from_products(r.clone(), n, unit, |p, q| {
        let (ca, x) = (p / da, p % da);
        let (cb, y) = (q / da, q % da);
        let xy = a.basis_product(x, y);
        let mut v = matrix::zero_vector(r, n);
        for cc in 0..dc {
            let w = c.constant(cc, ca, cb);
            if fld.is_zero(w) {
                continue;
            }
            let w = r.scalar(w);
            for (z, m) in xy.iter().enumerate() {
                if !r.is_zero(m) {
                    v[cc * da + z] = r.add(&v[cc * da + z], &r.mul(&w, m));
                }
            }
        }
        v
    })
    .expect("convolution algebra dimensions")
}

/// The convolution inverse of `f: C → A` in the coordinates of
/// [`convolution_algebra`].
pub fn convolution_inverse<F: Field, R: Algebra<F>>(c: &Coalgebra<F>, a: &FinAlgebra<R>, f: &[R::Elem]) -> Result<Option<Vec<R::Elem>>> {
    convolution_algebra(c, a).element_inverse(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{PrimeField, Rationals};

    #[test]
    fn sweedler_integrals_and_antipode() {
        let h = HopfAlgebra::sweedler(Rationals).unwrap();
        assert!(h.verify().passed(), "{:?}", h.verify().failures);
        let rep = h.integral_report().unwrap();
        let q = Rationals;
        assert_eq!(rep.left.vectors(), vec![vec![q.zero(), q.zero(), q.one(), q.one()]]);
        assert_eq!(rep.right.vectors(), vec![vec![q.zero(), q.zero(), q.one(), q.from_i64(-1)]]);
        assert!(!rep.unimodular);
        assert_eq!(rep.antipode_order, Some(4));
        assert!(!rep.cosemisimple);
    }

    #[test]
    fn function_algebra_in_characteristic_p_is_not_cosemisimple() {
        let f = PrimeField::new(3).unwrap();
        let g = Group::cyclic(3).unwrap();
        let h = HopfAlgebra::dual_group_algebra(f, &g).unwrap();
        assert!(h.verify().passed());
        assert!(!h.integral_report().unwrap().cosemisimple);
    }

    #[test]
    fn group_algebra_lambda_is_delta_e() {
        let q = Rationals;
        let h = HopfAlgebra::group_algebra(q, &Group::cyclic(4).unwrap()).unwrap();
        let rep = h.integral_report().unwrap();
        assert_eq!(rep.lambda, matrix::unit_vector(&q, 4, 0));
        assert!(rep.cosemisimple && rep.unimodular);
        assert_eq!(rep.antipode_order, Some(2));
    }
}
