//! The Miyashita-Ulbrich action `c←h = Σ a_i c b_i` with
//! `Σ a_i⊗b_i = can⁻¹(1⊗h)`, and right `H`-modules over a field.

use crate::algebra::Subspace;
use crate::comodule::{intertwiner_system, ComoduleAlgebra, GaloisCertificate};
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::matrix::{self, Matrix};
use crate::ring::{Algebra, Field};
use crate::search::{self, GridOutcome};

#[derive(Clone, Debug, PartialEq)]
pub struct MuAction<E> {
    /// `matrices[h]` sends `c` to `c←h_h`.
    pub matrices: Vec<Matrix<E>>,
    pub right_action: bool,
    pub unital: bool,
    /// `c·b = b₀(c←b₁)` on all basis pairs.
    pub exchange: bool,
    pub exchange_failure: Option<(usize, usize)>,
}

impl<E> MuAction<E> {
    pub fn passed(&self) -> bool {
        self.right_action && self.unital && self.exchange
    }
}

fn combine_over_field<F: Field>(f: &F, ms: &[Matrix<F::Elem>], x: &[F::Elem]) -> Matrix<F::Elem> {
    let n = ms[0].rows();
    let mut acc = matrix::zeros(f, n, n);
    for (m, c) in ms.iter().zip(x) {
        if !f.is_zero(c) {
            acc = matrix::add(f, &acc, &matrix::scale(f, c, m));
        }
    }
    acc
}

/// `Σ_h x_h M_h` for `x ∈ H` in field coordinates.
fn combine<R: Algebra<F>, F: Field>(r: &R, f: &F, ms: &[Matrix<R::Elem>], x: &[F::Elem]) -> Matrix<R::Elem> {
    let n = ms[0].rows();
    let mut acc = matrix::zeros(r, n, n);
    for (m, c) in ms.iter().zip(x) {
        if !f.is_zero(c) {
            acc = matrix::add(r, &acc, &matrix::scale(r, &r.scalar(c), m));
        }
    }
    acc
}

pub fn mu_action<R: Algebra<F>, F: Field>(u: &ComoduleAlgebra<R, F>) -> Result<MuAction<R::Elem>> {
    let out = u.is_galois()?;
    let cert = out.certificate().ok_or(Error::NoCertificate)?;
    mu_action_with(u, cert)
}

pub fn mu_action_with<R: Algebra<F>, F: Field>(u: &ComoduleAlgebra<R, F>, cert: &GaloisCertificate<R::Elem>) -> Result<MuAction<R::Elem>> {
    if !u.check_certificate(cert) {
        return Err(Error::NoCertificate);
    }
    let r = u.ring();
    let a = u.algebra();
    let h = u.hopf();
    let f = h.field();
    let (du, dh) = (u.dim(), h.dim());
    let mut matrices = Vec::with_capacity(dh);
    for row in &cert.rows {
        let mut m = matrix::zeros(r, du, du);
        for x in 0..du {
            for y in 0..du {
                let w = &row[x * du + y];
                if r.is_zero(w) {
                    continue;
                }
                for c in 0..du {
                    let v = a.mul(&a.basis_product(x, c), &a.basis(y));
                    for (i, vi) in v.iter().enumerate() {
                        if !r.is_zero(vi) {
                            let s = r.add(m.get(i, c), &r.mul(w, vi));
                            m.set(i, c, s);
                        }
                    }
                }
            }
        }
        matrices.push(m);
    }

    let mut right_action = true;
    for p in 0..dh {
        for q in 0..dh {
            let lhs = combine(r, f, &matrices, &h.algebra().basis_product(p, q));
            let rhs = matrix::mul(r, &matrices[q], &matrices[p]);
            right_action &= lhs == rhs;
        }
    }
    let unital = matrix::is_identity(r, &combine(r, f, &matrices, h.unit()));

    let mut exchange_failure = None;
    'outer: for c in 0..du {
        for b in 0..du {
            let lhs = a.basis_product(c, b);
            let mut rhs = matrix::zero_vector(r, du);
            for k in 0..du {
                for hh in 0..dh {
                    let w = u.coaction().get(k * dh + hh, b);
                    if r.is_zero(w) {
                        continue;
                    }
                    let term = a.mul(&a.basis(k), &matrices[hh].col(c));
                    rhs = matrix::vec_add(r, &rhs, &matrix::vec_scale(r, w, &term));
                }
            }
            if lhs != rhs {
                exchange_failure = Some((c, b));
                break 'outer;
            }
        }
    }
    Ok(MuAction { matrices, right_action, unital, exchange: exchange_failure.is_none(), exchange_failure })
}

/// The left action `h▷c = c←S(h)`.
pub fn left_action_matrix<R: Algebra<F>, F: Field>(u: &ComoduleAlgebra<R, F>, action: &MuAction<R::Elem>, h: usize) -> Matrix<R::Elem> {
    let s = u.hopf().antipode().col(h);
    combine(u.ring(), u.hopf().field(), &action.matrices, &s)
}

#[derive(Clone, Debug, PartialEq)]
pub struct MuInvariantsReport<E> {
    pub invariants: Subspace<E>,
    pub center: Subspace<E>,
    pub equal: bool,
    /// A basis vector of one side missing from the other.
    pub witness: Option<Vec<E>>,
}

/// `{c : c←h = ε(h)c}` compared with the center of `U`.
pub fn mu_invariants_check<R: Algebra<F>, F: Field>(
    u: &ComoduleAlgebra<R, F>,
    action: &MuAction<R::Elem>,
) -> Result<MuInvariantsReport<R::Elem>> {
    let r = u.ring();
    let d = u.dim();
    let mut stacked = matrix::zeros(r, 0, d);
    for (m, e) in action.matrices.iter().zip(u.hopf().counit()) {
        let block = matrix::sub(r, m, &matrix::scale(r, &r.scalar(e), &matrix::identity(r, d)));
        stacked = stacked.vstack(&block)?;
    }
    let invariants = Subspace { ambient: d, basis: r.kernel(&stacked)? };
    let center = u.algebra().center()?;
    let mut witness = None;
    for v in invariants.vectors() {
        if !center.contains(r, &v)? {
            witness = Some(v);
            break;
        }
    }
    if witness.is_none() {
        for v in center.vectors() {
            if !invariants.contains(r, &v)? {
                witness = Some(v);
                break;
            }
        }
    }
    Ok(MuInvariantsReport { invariants, center, equal: witness.is_none(), witness })
}

/// A right `H`-module on `F^n`: `m←h_i = action[i]·m`.
#[derive(Clone, Debug, PartialEq)]
pub struct RightModule<F: Field> {
    pub hopf: HopfAlgebra<F>,
    pub action: Vec<Matrix<F::Elem>>,
}

impl<F: Field> RightModule<F> {
    pub fn new(hopf: HopfAlgebra<F>, action: Vec<Matrix<F::Elem>>) -> Result<Self> {
        if action.len() != hopf.dim() {
            return Err(Error::DimensionMismatch("one matrix per basis element of H".into()));
        }
        let n = action.first().map_or(0, |m| m.rows());
        if action.iter().any(|m| m.rows() != n || m.cols() != n) {
            return Err(Error::DimensionMismatch("action matrices must be square of equal size".into()));
        }
        Ok(RightModule { hopf, action })
    }

    pub fn dim(&self) -> usize {
        self.action.first().map_or(0, |m| m.rows())
    }

    /// `m←h = ε(h)m`.
    pub fn trivial(hopf: HopfAlgebra<F>, n: usize) -> Self {
        let f = hopf.field().clone();
        let action = hopf.counit().iter().map(|e| matrix::scale(&f, e, &matrix::identity(&f, n))).collect();
        RightModule { hopf, action }
    }

    /// `H` acting on itself by right multiplication.
    pub fn regular(hopf: HopfAlgebra<F>) -> Self {
        let action = (0..hopf.dim()).map(|i| hopf.algebra().right_mul_matrix(&hopf.basis(i))).collect();
        RightModule { hopf, action }
    }

    /// `(m←h)←h' = m←hh'` and `m←1 = m`.
    pub fn is_module(&self) -> bool {
        let f = self.hopf.field();
        let d = self.hopf.dim();
        let ok = (0..d).all(|p| {
            (0..d).all(|q| {
                combine_over_field(f, &self.action, &self.hopf.algebra().basis_product(p, q))
                    == matrix::mul(f, &self.action[q], &self.action[p])
            })
        });
        ok && matrix::is_identity(f, &combine_over_field(f, &self.action, self.hopf.unit()))
    }

    /// Intertwiners `T` with `T(m←h) = T(m)←h`, as row-major matrices.
    pub fn intertwiners(&self, other: &RightModule<F>) -> Result<Subspace<F::Elem>> {
        let f = self.hopf.field();
        let n = self.dim();
        let mut stacked = matrix::zeros(f, 0, n * n);
        for (a, b) in self.action.iter().zip(&other.action) {
            stacked = stacked.vstack(&intertwiner_system(f, a, b))?;
        }
        Ok(Subspace { ambient: n * n, basis: f.kernel(&stacked)? })
    }
}

impl<F: Field + Algebra<F>> RightModule<F> {
    pub fn from_mu(u: &ComoduleAlgebra<F, F>, action: &MuAction<F::Elem>) -> Self {
        RightModule { hopf: u.hopf().clone(), action: action.matrices.clone() }
    }
}

/// An invertible intertwiner, `Ok(None)` when none exists, or
/// `RetryBudgetExhausted` when the search is inconclusive.
pub fn module_isomorphic<F: Field>(m1: &RightModule<F>, m2: &RightModule<F>, seed: u64) -> Result<Option<Matrix<F::Elem>>> {
    let n = m1.dim();
    if n != m2.dim() {
        return Err(Error::DimensionMismatch(format!("modules of dimension {n} and {}", m2.dim())));
    }
    let f = m1.hopf.field();
    let gens = m1.intertwiners(m2)?.vectors();
    if gens.is_empty() {
        return Ok(None);
    }
    let as_matrix = |v: &[F::Elem]| Matrix::from_vec(n, n, v.to_vec());
    let found =
        search::random_search(f, &gens, n * n, search::DEFAULT_ATTEMPTS, seed, |v| Ok(f.invert_matrix(&as_matrix(v))?.map(|_| ())))?;
    if let Some((v, ())) = found {
        return Ok(Some(as_matrix(&v)));
    }
    match search::determinant_grid(f, &gens, n * n, n, f.characteristic(), as_matrix) {
        GridOutcome::IdenticallyZero => Ok(None),
        GridOutcome::Witness(v) => Ok(Some(as_matrix(&v))),
        GridOutcome::Inconclusive => Err(Error::RetryBudgetExhausted),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Group;
    use crate::ring::Rationals;
    use crate::ring::Ring;
    use crate::twisted::{klein_quaternion, twisted_product};

    #[test]
    fn quaternion_action_is_conjugation() {
        let q = Rationals;
        let u = twisted_product(&klein_quaternion(q).unwrap()).unwrap();
        let act = mu_action(&u).unwrap();
        assert!(act.passed());
        // i←(b-grading) = −i
        assert_eq!(act.matrices[2].col(1), matrix::vec_scale(&q, &q.from_i64(-1), &u.algebra().basis(1)));
        let rep = mu_invariants_check(&u, &act).unwrap();
        assert!(rep.equal);
        assert_eq!(rep.invariants.dim(), 1);
    }

    #[test]
    fn trivial_and_regular_modules_differ() {
        let q = Rationals;
        let h = HopfAlgebra::group_algebra(q, &Group::cyclic(2).unwrap()).unwrap();
        let t = RightModule::trivial(h.clone(), 2);
        let r = RightModule::regular(h);
        assert!(t.is_module() && r.is_module());
        assert_eq!(module_isomorphic(&t, &r, 0).unwrap(), None);
        assert!(module_isomorphic(&r, &r, 0).unwrap().is_some());
    }
}
