//! Connections on a free comodule algebra over a base with one derivation
//! `d/dq`. A connection is stored by its matrix `A`:
//! `∇_{d/dq}(Σ f_i e_i) = Σ f_i′ e_i + Σ_j f_i A[j][i] e_j`.

use crate::comodule::ComoduleAlgebra;
use crate::error::{Error, Result};
use crate::frobenius;
use crate::matrix::{self, Matrix};
use crate::ring::{Algebra, Differential, Field, Ring};

#[derive(Clone, Debug, PartialEq)]
pub struct Connection<E> {
    pub matrix: Matrix<E>,
}

impl<E: Clone> Connection<E> {
    pub fn new(matrix: Matrix<E>) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch("connection matrix must be square".into()));
        }
        Ok(Connection { matrix })
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }
}

pub fn derivative_matrix<R: Differential>(r: &R, m: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    m.map(|x| r.derivative(x))
}

fn derivative_vec<R: Differential>(r: &R, v: &[R::Elem]) -> Vec<R::Elem> {
    v.iter().map(|x| r.derivative(x)).collect()
}

/// `A = 0`.
pub fn trivial_connection<R: Ring>(r: &R, dim: usize) -> Connection<R::Elem> {
    Connection { matrix: matrix::zeros(r, dim, dim) }
}

/// `∇_{g·d/dq} u = g·(u′ + A u)`.
pub fn apply<R: Differential>(r: &R, nabla: &Connection<R::Elem>, g: &R::Elem, u: &[R::Elem]) -> Vec<R::Elem> {
    let v = matrix::vec_add(r, &derivative_vec(r, u), &matrix::mul_vec(r, &nabla.matrix, u));
    matrix::vec_scale(r, g, &v)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub frobenius: bool,
    pub multiplicative: bool,
    pub equivariant: bool,
    pub nakayama: bool,
}

/// `dG/dq = AᵀG + GA`.
pub fn is_frobenius<R, F>(u: &ComoduleAlgebra<R, F>, nabla: &Connection<R::Elem>, lambda: &[F::Elem]) -> Result<bool>
where
    R: Algebra<F> + Differential,
    F: Field,
{
    let r = u.ring();
    let g = frobenius::gram(u, lambda)?;
    if r.invert_matrix(&g)?.is_none() {
        return Err(Error::DegenerateForm);
    }
    let a = &nabla.matrix;
    let rhs = matrix::add(r, &matrix::mul(r, &a.transpose(), &g), &matrix::mul(r, &g, a));
    Ok(derivative_matrix(r, &g) == rhs)
}

/// `∇(e_i e_j) = (∇e_i)e_j + e_i(∇e_j)` on all basis pairs.
pub fn is_multiplicative<R, F>(u: &ComoduleAlgebra<R, F>, nabla: &Connection<R::Elem>) -> bool
where
    R: Algebra<F> + Differential,
    F: Field,
{
    let r = u.ring();
    let alg = u.algebra();
    let one = r.one();
    let d = u.dim();
    (0..d).all(|i| {
        (0..d).all(|j| {
            let lhs = apply(r, nabla, &one, &alg.basis_product(i, j));
            let rhs = alg.add(&alg.mul(&nabla.matrix.col(i), &alg.basis(j)), &alg.mul(&alg.basis(i), &nabla.matrix.col(j)));
            lhs == rhs
        })
    })
}

/// `ρ∘∇ = (∇⊗id)∘ρ`, i.e. `ρA = ρ′ + (A⊗I)ρ`.
pub fn is_equivariant<R, F>(u: &ComoduleAlgebra<R, F>, nabla: &Connection<R::Elem>) -> bool
where
    R: Algebra<F> + Differential,
    F: Field,
{
    let r = u.ring();
    let rho = u.coaction();
    let lhs = matrix::mul(r, rho, &nabla.matrix);
    let ax = matrix::kronecker(r, &nabla.matrix, &matrix::identity(r, u.hopf().dim()));
    let rhs = matrix::add(r, &derivative_matrix(r, rho), &matrix::mul(r, &ax, rho));
    lhs == rhs
}

/// `∇∘Nak = Nak∘∇`, i.e. `Nak′ + A·Nak = Nak·A`.
pub fn is_nakayama<R, F>(u: &ComoduleAlgebra<R, F>, nabla: &Connection<R::Elem>, lambda: &[F::Elem]) -> Result<bool>
where
    R: Algebra<F> + Differential,
    F: Field,
{
    let r = u.ring();
    let nak = frobenius::nakayama(u, lambda)?.matrix;
    let a = &nabla.matrix;
    let lhs = matrix::add(r, &derivative_matrix(r, &nak), &matrix::mul(r, a, &nak));
    Ok(lhs == matrix::mul(r, &nak, a))
}

pub fn property_report<R, F>(u: &ComoduleAlgebra<R, F>, nabla: &Connection<R::Elem>, lambda: &[F::Elem]) -> Result<PropertyReport>
where
    R: Algebra<F> + Differential,
    F: Field,
{
    Ok(PropertyReport {
        frobenius: is_frobenius(u, nabla, lambda)?,
        multiplicative: is_multiplicative(u, nabla),
        equivariant: is_equivariant(u, nabla),
        nakayama: is_nakayama(u, nabla, lambda)?,
    })
}

/// The defect `T` with `⟨Tu, v⟩ = X⟨u,v⟩ − ⟨∇u,v⟩ − ⟨u,∇v⟩`:
/// `TᵀG = G′ − AᵀG − GA`.
pub fn frobenius_defect<R, F>(u: &ComoduleAlgebra<R, F>, nabla: &Connection<R::Elem>, lambda: &[F::Elem]) -> Result<Matrix<R::Elem>>
where
    R: Algebra<F> + Differential,
    F: Field,
{
    let r = u.ring();
    let g = frobenius::gram(u, lambda)?;
    let ginv = r.invert_matrix(&g)?.ok_or(Error::DegenerateForm)?;
    let a = &nabla.matrix;
    let d = matrix::sub(r, &derivative_matrix(r, &g), &matrix::add(r, &matrix::mul(r, &a.transpose(), &g), &matrix::mul(r, &g, a)));
    Ok(matrix::mul(r, &d, &ginv).transpose())
}

/// `∇ + T/2` for a Nakayama connection.
pub fn frobeniusize<R, F>(u: &ComoduleAlgebra<R, F>, nabla: &Connection<R::Elem>, lambda: &[F::Elem]) -> Result<Connection<R::Elem>>
where
    R: Algebra<F> + Differential,
    F: Field,
{
    let f = u.hopf().field();
    if f.characteristic() == 2 {
        return Err(Error::CharTwo);
    }
    if !is_nakayama(u, nabla, lambda)? {
        return Err(Error::NotNakayama);
    }
    let r = u.ring();
    let t = frobenius_defect(u, nabla, lambda)?;
    let half = r.scalar(&f.inv(&f.from_i64(2)));
    Ok(Connection { matrix: matrix::add(r, &nabla.matrix, &matrix::scale(r, &half, &t)) })
}

/// `(h·∇)_X u = h₁·∇_X(S(h₂)·u)` for `h ∈ H*` with `h(1) = 1`.
pub fn h_act<R, F>(u: &ComoduleAlgebra<R, F>, h: &[F::Elem], nabla: &Connection<R::Elem>) -> Result<Connection<R::Elem>>
where
    R: Algebra<F> + Differential,
    F: Field,
{
    let hopf = u.hopf();
    let f = hopf.field();
    let r = u.ring();
    let dh = hopf.dim();
    if h.len() != dh {
        return Err(Error::DimensionMismatch(format!("functional of length {} on H of dimension {dh}", h.len())));
    }
    let at_one = h.iter().zip(hopf.unit()).fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b)));
    if !f.is_one(&at_one) {
        return Err(Error::NotNormalized(f.format(&at_one)));
    }
    let n = u.dim();
    let mut lead = matrix::zeros(r, n, n);
    let mut b = matrix::zeros(r, n, n);
    let s = hopf.antipode();
    for i in 0..dh {
        for j in 0..dh {
            // h(e_i e_j) is the e*_i⊗e*_j coefficient of Δ(h)
            let c = (0..dh).fold(f.zero(), |acc, k| f.add(&acc, &f.mul(&h[k], hopf.algebra().constant(i, j, k))));
            if f.is_zero(&c) {
                continue;
            }
            let left = u.hstar_action_matrix(&matrix::unit_vector(f, dh, i));
            let right = u.hstar_action_matrix(&s.row(j));
            let cr = r.scalar(&c);
            let lm = matrix::mul(r, &left, &right);
            lead = matrix::add(r, &lead, &matrix::scale(r, &cr, &lm));
            let term = matrix::add(
                r,
                &matrix::mul(r, &left, &derivative_matrix(r, &right)),
                &matrix::mul(r, &matrix::mul(r, &left, &nabla.matrix), &right),
            );
            b = matrix::add(r, &b, &matrix::scale(r, &cr, &term));
        }
    }
    if !matrix::is_identity(r, &lead) {
        return Err(Error::InvalidInput("h₁S(h₂) does not act as the identity".into()));
    }
    Ok(Connection { matrix: b })
}

/// `Λ·∇` for the normalized integral of a cosemisimple `H`.
pub fn lambda_average<R, F>(u: &ComoduleAlgebra<R, F>, nabla: &Connection<R::Elem>) -> Result<Connection<R::Elem>>
where
    R: Algebra<F> + Differential,
    F: Field,
{
    let hopf = u.hopf();
    if !hopf.integral_report()?.cosemisimple {
        return Err(Error::NotCosemisimple);
    }
    h_act(u, &hopf.normalized_lambda()?, nabla)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Difference<E> {
    pub matrix: Matrix<E>,
    /// Commutes with the coaction, checked when both inputs are equivariant.
    pub comodule_map: Option<bool>,
}

/// `A₁ − A₂`, an `O`-linear endomorphism of `U`.
pub fn difference<R, F>(u: &ComoduleAlgebra<R, F>, n1: &Connection<R::Elem>, n2: &Connection<R::Elem>) -> Result<Difference<R::Elem>>
where
    R: Algebra<F> + Differential,
    F: Field,
{
    if n1.dim() != u.dim() || n2.dim() != u.dim() {
        return Err(Error::ModuleMismatch(format!("connections of size {} and {} on a module of rank {}", n1.dim(), n2.dim(), u.dim())));
    }
    let r = u.ring();
    let d = matrix::sub(r, &n1.matrix, &n2.matrix);
    let comodule_map = (is_equivariant(u, n1) && is_equivariant(u, n2)).then(|| {
        let rho = u.coaction();
        let dx = matrix::kronecker(r, &d, &matrix::identity(r, u.hopf().dim()));
        matrix::mul(r, rho, &d) == matrix::mul(r, &dx, rho)
    });
    Ok(Difference { matrix: d, comodule_map })
}

#[derive(Clone, Debug, PartialEq)]
pub struct NablaC<E> {
    /// Indexed like the `C` tensor, `(i·d + j)·d + k`.
    pub values: Vec<E>,
    pub dim: usize,
    pub witness: Option<(usize, usize, usize)>,
}

impl<E> NablaC<E> {
    pub fn is_zero(&self) -> bool {
        self.witness.is_none()
    }
}

/// `(∇·C)(u⊗v⊗w) = X(C(u⊗v⊗w)) − C(∇u⊗v⊗w) − C(u⊗∇v⊗w) − C(u⊗v⊗∇w)`.
pub fn nabla_dot_c<R, F>(u: &ComoduleAlgebra<R, F>, nabla: &Connection<R::Elem>, lambda: &[F::Elem]) -> Result<NablaC<R::Elem>>
where
    R: Algebra<F> + Differential,
    F: Field,
{
    let r = u.ring();
    let c = frobenius::c_tensor(u, lambda)?;
    let d = u.dim();
    let a = &nabla.matrix;
    let mut values = Vec::with_capacity(d * d * d);
    let mut witness = None;
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let mut v = r.derivative(c.get(i, j, k));
                for l in 0..d {
                    let s = r.add(
                        &r.add(&r.mul(a.get(l, i), c.get(l, j, k)), &r.mul(a.get(l, j), c.get(i, l, k))),
                        &r.mul(a.get(l, k), c.get(i, j, l)),
                    );
                    v = r.sub(&v, &s);
                }
                if witness.is_none() && !r.is_zero(&v) {
                    witness = Some((i, j, k));
                }
                values.push(v);
            }
        }
    }
    Ok(NablaC { values, dim: d, witness })
}

/// A differential operator `u ↦ Σ_k coeffs[k]·u^(k)`.
#[derive(Clone, Debug, PartialEq)]
pub struct DiffOperator<E> {
    pub coeffs: Vec<Matrix<E>>,
}

impl<E: Clone + PartialEq> DiffOperator<E> {
    pub fn is_zero<R: Ring<Elem = E>>(&self, r: &R) -> bool {
        self.coeffs.iter().all(|m| matrix::is_zero(r, m))
    }
}

/// `∇_{g·d/dq} ∘ D`.
fn compose<R: Differential>(r: &R, nabla: &Connection<R::Elem>, g: &R::Elem, d: &DiffOperator<R::Elem>) -> DiffOperator<R::Elem> {
    let n = nabla.dim();
    let mut out = vec![matrix::zeros(r, n, n); d.coeffs.len() + 1];
    for (k, c) in d.coeffs.iter().enumerate() {
        let lower = matrix::add(r, &derivative_matrix(r, c), &matrix::mul(r, &nabla.matrix, c));
        out[k] = matrix::add(r, &out[k], &matrix::scale(r, g, &lower));
        out[k + 1] = matrix::add(r, &out[k + 1], &matrix::scale(r, g, c));
    }
    DiffOperator { coeffs: out }
}

fn op_sub<R: Ring>(r: &R, a: &DiffOperator<R::Elem>, b: &DiffOperator<R::Elem>) -> DiffOperator<R::Elem> {
    let n = a.coeffs.len().max(b.coeffs.len());
    let size = a.coeffs.first().or(b.coeffs.first()).map_or(0, |m| m.rows());
    let z = matrix::zeros(r, size, size);
    let coeffs = (0..n).map(|k| matrix::sub(r, a.coeffs.get(k).unwrap_or(&z), b.coeffs.get(k).unwrap_or(&z))).collect();
    DiffOperator { coeffs }
}

/// `R_{X,Y} = [∇_X, ∇_Y] − ∇_{[X,Y]}` for `X = g·d/dq`, `Y = h·d/dq`.
pub fn curvature<R: Differential>(r: &R, nabla: &Connection<R::Elem>, g: &R::Elem, h: &R::Elem) -> DiffOperator<R::Elem> {
    let id = DiffOperator { coeffs: vec![matrix::identity(r, nabla.dim())] };
    let xy = compose(r, nabla, g, &compose(r, nabla, h, &id));
    let yx = compose(r, nabla, h, &compose(r, nabla, g, &id));
    let bracket = r.sub(&r.mul(g, &r.derivative(h)), &r.mul(h, &r.derivative(g)));
    op_sub(r, &op_sub(r, &xy, &yx), &compose(r, nabla, &bracket, &id))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{LaurentRing, Rationals};
    use crate::twisted::{qzn, twisted_product};

    #[test]
    fn frobeniusize_the_trivial_connection() {
        let r = LaurentRing::new(Rationals);
        let u = twisted_product(&qzn(r.clone(), 2, r.variable()).unwrap()).unwrap();
        let lambda = u.hopf().normalized_lambda().unwrap();
        let triv = trivial_connection(&r, 2);
        let rep = property_report(&u, &triv, &lambda).unwrap();
        assert_eq!(rep, PropertyReport { frobenius: false, multiplicative: false, equivariant: true, nakayama: true });
        let fixed = frobeniusize(&u, &triv, &lambda).unwrap();
        let half_q = r.parse("1/2*q^-1").unwrap();
        assert_eq!(fixed.matrix, matrix::diagonal(&r, &[r.zero(), half_q]));
        let rep = property_report(&u, &fixed, &lambda).unwrap();
        assert!(rep.frobenius && rep.multiplicative && rep.equivariant && rep.nakayama);
        assert!(nabla_dot_c(&u, &fixed, &lambda).unwrap().is_zero());
    }

    #[test]
    fn rank_one_curvature_vanishes() {
        let r = LaurentRing::new(Rationals);
        let a = Connection::new(matrix::from_i64(&r, &[&[1, 2], &[3, 4]])).unwrap();
        let g = r.parse("q^2 + 1").unwrap();
        let h = r.parse("q^-1").unwrap();
        assert!(curvature(&r, &a, &g, &h).is_zero(&r));
    }
}
