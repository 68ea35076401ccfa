//! Two-cochains, twisted products and cleaving maps.

use crate::algebra::FinAlgebra;
use crate::comodule::ComoduleAlgebra;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::hopf::{convolution_inverse, HopfAlgebra};
use crate::matrix::{self, Matrix};
use crate::ring::{Algebra, Field};
use crate::search::{self, GridOutcome};

/// `σ(h_i⊗h_j) = sigma[i][j]` with values in the base ring.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoCochain<R: Algebra<F>, F: Field> {
    ring: R,
    hopf: HopfAlgebra<F>,
    sigma: Matrix<R::Elem>,
}

/// Multiplication rule for `R⊗H`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Convention {
    /// `(a⊗g)(b⊗h) = ab σ(h₁,g₁) ⊗ h₂g₂`.
    #[default]
    Reversed,
    /// `(a⊗g)(b⊗h) = ab σ(g₁,h₁) ⊗ g₂h₂`.
    Standard,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CocycleReport<E> {
    pub identities: bool,
    pub normalized: bool,
    pub convolution_invertible: bool,
    /// First basis triple `(h, g, t)` violating the cocycle identity.
    pub failing_triple: Option<(usize, usize, usize)>,
    pub inverse: Option<Vec<E>>,
}

impl<E> CocycleReport<E> {
    pub fn passed(&self) -> bool {
        self.identities && self.normalized && self.convolution_invertible
    }
}

/// A convolution-invertible comodule map `γ: H → U` in convolution
/// coordinates (index `c·dim U + x`).
#[derive(Clone, Debug, PartialEq)]
pub struct CleavingMap<E> {
    pub gamma: Vec<E>,
    pub inverse: Vec<E>,
}

impl<R: Algebra<F>, F: Field> TwoCochain<R, F> {
    pub fn new(ring: R, hopf: HopfAlgebra<F>, sigma: Matrix<R::Elem>) -> Result<Self> {
        let d = hopf.dim();
        if sigma.rows() != d || sigma.cols() != d {
            return Err(Error::DimensionMismatch(format!("σ must be {d}×{d}")));
        }
        Ok(TwoCochain { ring, hopf, sigma })
    }

    /// `σ = ε⊗ε`.
    pub fn trivial(ring: R, hopf: HopfAlgebra<F>) -> Self {
        let d = hopf.dim();
        let eps = hopf.counit().to_vec();
        let sigma = Matrix::from_fn(d, d, |i, j| ring.scalar(&hopf.field().mul(&eps[i], &eps[j])));
        TwoCochain { ring, hopf, sigma }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn hopf(&self) -> &HopfAlgebra<F> {
        &self.hopf
    }

    pub fn matrix(&self) -> &Matrix<R::Elem> {
        &self.sigma
    }

    pub fn get(&self, i: usize, j: usize) -> &R::Elem {
        self.sigma.get(i, j)
    }

    /// `σ(x⊗y)` for `x, y ∈ H` given in field coordinates.
    fn eval(&self, x: &[F::Elem], y: &[F::Elem]) -> R::Elem {
        let (r, f) = (&self.ring, self.hopf.field());
        let mut acc = r.zero();
        for (i, a) in x.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if f.is_zero(b) || r.is_zero(self.sigma.get(i, j)) {
                    continue;
                }
                acc = r.add(&acc, &r.mul(&r.scalar(&f.mul(a, b)), self.sigma.get(i, j)));
            }
        }
        acc
    }

    fn delta(&self, i: usize) -> Vec<(usize, usize, F::Elem)> {
        let d = self.hopf.dim();
        let co = self.hopf.coalgebra();
        let f = self.hopf.field();
        let mut out = Vec::new();
        for a in 0..d {
            for b in 0..d {
                let c = co.constant(i, a, b);
                if !f.is_zero(c) {
                    out.push((a, b, c.clone()));
                }
            }
        }
        out
    }

    /// `σ(h₁⊗g₁)σ(h₂g₂⊗t)` and `σ(g₁⊗t₁)σ(h⊗g₂t₂)` on a basis triple.
    fn identity_sides(&self, h: usize, g: usize, t: usize) -> (R::Elem, R::Elem) {
        let (r, f) = (&self.ring, self.hopf.field());
        let alg = self.hopf.algebra();
        let d = self.hopf.dim();
        let e = |i: usize| matrix::unit_vector(f, d, i);
        let mut lhs = r.zero();
        for (h1, h2, ch) in self.delta(h) {
            for (g1, g2, cg) in self.delta(g) {
                let w = r.scalar(&f.mul(&ch, &cg));
                let term = r.mul(self.sigma.get(h1, g1), &self.eval(&alg.basis_product(h2, g2), &e(t)));
                lhs = r.add(&lhs, &r.mul(&w, &term));
            }
        }
        let mut rhs = r.zero();
        for (g1, g2, cg) in self.delta(g) {
            for (t1, t2, ct) in self.delta(t) {
                let w = r.scalar(&f.mul(&cg, &ct));
                let term = r.mul(self.sigma.get(g1, t1), &self.eval(&e(h), &alg.basis_product(g2, t2)));
                rhs = r.add(&rhs, &r.mul(&w, &term));
            }
        }
        (lhs, rhs)
    }

    pub fn is_cocycle(&self) -> Result<CocycleReport<R::Elem>> {
        let r = &self.ring;
        let d = self.hopf.dim();
        let mut failing_triple = None;
        'outer: for h in 0..d {
            for g in 0..d {
                for t in 0..d {
                    let (l, rr) = self.identity_sides(h, g, t);
                    if l != rr {
                        failing_triple = Some((h, g, t));
                        break 'outer;
                    }
                }
            }
        }
        let f = self.hopf.field();
        let one = self.hopf.unit();
        let normalized = (0..d).all(|h| {
            let eh = matrix::unit_vector(f, d, h);
            let eps = r.scalar(&self.hopf.counit()[h]);
            self.eval(&eh, one) == eps && self.eval(one, &eh) == eps
        });
        let inverse = self.convolution_inverse()?;
        Ok(CocycleReport {
            identities: failing_triple.is_none(),
            normalized,
            convolution_invertible: inverse.is_some(),
            failing_triple,
            inverse,
        })
    }

    /// The inverse of `σ` in `Hom(H⊗H, R)`, index `i·dim H + j`.
    pub fn convolution_inverse(&self) -> Result<Option<Vec<R::Elem>>> {
        let r = &self.ring;
        let co = self.hopf.coalgebra().tensor(self.hopf.coalgebra());
        let base = FinAlgebra::new(r.clone(), 1, vec![r.one()], vec![r.one()])?;
        convolution_inverse(&co, &base, self.sigma.entries())
    }

    /// Entrywise base change of the values.
    pub fn map_ring<S: Algebra<F>>(&self, target: S, f: impl Fn(&R::Elem) -> Result<S::Elem>) -> Result<TwoCochain<S, F>> {
        let entries = self.sigma.entries().iter().map(f).collect::<Result<Vec<_>>>()?;
        let d = self.hopf.dim();
        TwoCochain::new(target, self.hopf.clone(), Matrix::from_vec(d, d, entries))
    }
}

/// The twisted product `R_σ[H]` with coaction `id⊗Δ`.
pub fn twisted_product<R: Algebra<F>, F: Field>(sigma: &TwoCochain<R, F>) -> Result<ComoduleAlgebra<R, F>> {
    twisted_product_with(sigma, Convention::Reversed)
}

pub fn twisted_product_with<R: Algebra<F>, F: Field>(sigma: &TwoCochain<R, F>, convention: Convention) -> Result<ComoduleAlgebra<R, F>> {
    let report = sigma.is_cocycle()?;
    if let Some(t) = report.failing_triple {
        return Err(Error::AssociativityFailure(format!("cocycle identity fails on basis triple {t:?}")));
    }
    if !report.normalized {
        return Err(Error::AssociativityFailure("σ is not normalized, so 1⊗1 is not a unit".into()));
    }
    let r = sigma.ring();
    let h = sigma.hopf();
    let (f, d) = (h.field(), h.dim());
    let alg = h.algebra();
    let unit: Vec<R::Elem> = h.unit().iter().map(|c| r.scalar(c)).collect();
    let algebra = FinAlgebra::from_products(r.clone(), d, unit, |i, j| {
        let mut out = matrix::zero_vector(r, d);
        for (a, b, ci) in sigma.delta(i) {
            for (c, e, cj) in sigma.delta(j) {
                let (s, prod) = match convention {
                    Convention::Reversed => (sigma.get(c, a), alg.basis_product(e, b)),
                    Convention::Standard => (sigma.get(a, c), alg.basis_product(b, e)),
                };
                if r.is_zero(s) {
                    continue;
                }
                let w = r.mul(&r.scalar(&f.mul(&ci, &cj)), s);
                for (z, p) in prod.iter().enumerate() {
                    if !f.is_zero(p) {
                        out[z] = r.add(&out[z], &r.mul(&w, &r.scalar(p)));
                    }
                }
            }
        }
        out
    })?;
    let co = h.coalgebra();
    let coaction = Matrix::from_fn(d * d, d, |row, col| r.scalar(co.constant(col, row / d, row % d)));
    ComoduleAlgebra::new(algebra, h.clone(), coaction)
}

/// `σ(t^k⊗t^m) = 1` if `k + m < n`, else `q`, on `F[Z_n]`.
pub fn qzn<R: Algebra<F>, F: Field>(ring: R, n: usize, q: R::Elem) -> Result<TwoCochain<R, F>> {
    let field = ring.ground().clone();
    let hopf = HopfAlgebra::group_algebra(field, &Group::cyclic(n)?)?;
    let sigma = Matrix::from_fn(n, n, |k, m| if k + m < n { ring.one() } else { q.clone() });
    TwoCochain::new(ring, hopf, sigma)
}

/// A sign cocycle on `F[Z_2×Z_2]` (basis `e, a, b, c`) whose twisted
/// product is the quaternion algebra: `e_a² = e_b² = −1`, `e_a e_b = e_c = −e_b e_a`.
pub fn klein_quaternion<R: Algebra<F>, F: Field>(ring: R) -> Result<TwoCochain<R, F>> {
    let field = ring.ground().clone();
    let hopf = HopfAlgebra::group_algebra(field, &Group::klein()?)?;
    let signs: [[i64; 4]; 4] = [[1, 1, 1, 1], [1, -1, -1, 1], [1, 1, -1, -1], [1, -1, 1, -1]];
    let sigma = Matrix::from_fn(4, 4, |i, j| ring.from_i64(signs[i][j]));
    TwoCochain::new(ring, hopf, sigma)
}

/// Whether `γ` is a comodule map with the given two-sided convolution inverse.
pub fn verify_cleaving<R: Algebra<F>, F: Field>(u: &ComoduleAlgebra<R, F>, map: &CleavingMap<R::Elem>) -> bool {
    let conv = u.convolution_algebra();
    u.is_comodule_map(&map.gamma)
        && conv.mul(&map.gamma, &map.inverse) == *conv.unit()
        && conv.mul(&map.inverse, &map.gamma) == *conv.unit()
}

/// Searches the comodule maps `H → U` for a convolution-invertible one.
/// `Ok(None)` means absence is proved: the space is zero or every element
/// has identically vanishing convolution determinant.
pub fn cleftness_witness<R: Algebra<F>, F: Field>(u: &ComoduleAlgebra<R, F>, seed: u64) -> Result<Option<CleavingMap<R::Elem>>> {
    let r = u.ring();
    let gens = u.comodule_maps()?.vectors();
    if gens.is_empty() {
        return Ok(None);
    }
    let conv = u.convolution_algebra();
    let len = conv.dim();
    let found = search::random_search(r, &gens, len, search::DEFAULT_ATTEMPTS, seed, |v| conv.element_inverse(v))?;
    if let Some((gamma, inverse)) = found {
        return Ok(Some(CleavingMap { gamma, inverse }));
    }
    let characteristic = u.hopf().field().characteristic();
    match search::determinant_grid(r, &gens, len, len, characteristic, |v| conv.left_mul_matrix(v)) {
        GridOutcome::IdenticallyZero => Ok(None),
        GridOutcome::Witness(gamma) => {
            let inverse = conv.element_inverse(&gamma)?.ok_or(Error::RetryBudgetExhausted)?;
            Ok(Some(CleavingMap { gamma, inverse }))
        }
        GridOutcome::Inconclusive => Err(Error::RetryBudgetExhausted),
    }
}

/// `γ(x)` for `x ∈ H` in field coordinates.
pub fn apply_map<R: Algebra<F>, F: Field>(u: &ComoduleAlgebra<R, F>, gamma: &[R::Elem], x: &[F::Elem]) -> Vec<R::Elem> {
    let r = u.ring();
    let du = u.dim();
    let mut out = matrix::zero_vector(r, du);
    for (c, a) in x.iter().enumerate() {
        if u.hopf().field().is_zero(a) {
            continue;
        }
        let s = r.scalar(a);
        for k in 0..du {
            out[k] = r.add(&out[k], &r.mul(&s, &gamma[c * du + k]));
        }
    }
    out
}

/// Whether `U` is free of rank one over `O⊗H*` on the vector `γ(Λ_H)` for a
/// nonzero left or right integral `Λ_H` of `H`.
pub fn rank_one_freeness<R: Algebra<F>, F: Field>(u: &ComoduleAlgebra<R, F>, gamma: &[R::Elem]) -> Result<bool> {
    let r = u.ring();
    let h = u.hopf();
    let (du, dh) = (u.dim(), h.dim());
    let invariants = u.invariants()?.vectors();
    if invariants.len() * dh != du {
        return Ok(false);
    }
    let mut candidates = h.left_integrals()?.vectors();
    candidates.extend(h.right_integrals()?.vectors());
    for lam in candidates {
        let v = apply_map(u, gamma, &lam);
        let mut cols = Vec::with_capacity(du);
        for o in &invariants {
            for fi in 0..dh {
                let fv = u.hstar_action(&matrix::unit_vector(h.field(), dh, fi), &v);
                cols.push(u.algebra().mul(o, &fv));
            }
        }
        if r.invert_matrix(&Matrix::from_columns(du, &cols))?.is_some() {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;
    use crate::ring::{LaurentRing, Rationals};

    #[test]
    fn qzn_two_squares_to_q() {
        let r = LaurentRing::new(Rationals);
        let s = qzn(r.clone(), 2, r.variable()).unwrap();
        assert!(s.is_cocycle().unwrap().passed());
        let u = twisted_product(&s).unwrap();
        assert_eq!(u.algebra().basis_product(1, 1), vec![r.variable(), r.zero()]);
        assert!(u.verify().unwrap().passed());
    }

    #[test]
    fn zero_parameter_is_not_invertible() {
        let q = Rationals;
        let s = qzn(q, 2, q.zero()).unwrap();
        let rep = s.is_cocycle().unwrap();
        assert!(rep.identities && rep.normalized && !rep.convolution_invertible);
    }

    #[test]
    fn quaternion_relations() {
        let q = Rationals;
        let u = twisted_product(&klein_quaternion(q).unwrap()).unwrap();
        let a = u.algebra();
        let m1 = vec![q.from_i64(-1), q.zero(), q.zero(), q.zero()];
        assert_eq!(a.basis_product(1, 1), m1);
        assert_eq!(a.basis_product(2, 2), m1);
        assert_eq!(a.basis_product(1, 2), a.basis(3));
        assert_eq!(a.basis_product(2, 1), matrix::vec_scale(&q, &q.from_i64(-1), &a.basis(3)));
        assert_eq!(a.center().unwrap().dim(), 1);
    }
}
