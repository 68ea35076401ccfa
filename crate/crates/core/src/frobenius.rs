//! The associative form `⟨x, y⟩ = Λ·(xy)`, its Gram matrix, the Nakayama
//! automorphism and the tensor `C(u⊗v⊗w) = ⟨uv, w⟩`.

use crate::comodule::ComoduleAlgebra;
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::matrix::{self, Matrix};
use crate::ring::{Algebra, Field, Ring};

#[derive(Clone, Debug, PartialEq)]
pub struct FrobeniusReport<E> {
    pub gram: Matrix<E>,
    pub determinant: E,
    pub nondegenerate: bool,
    pub symmetric: bool,
    /// Only over the rationals, and only for symmetric Gram matrices.
    pub positive_definite: Option<bool>,
    pub associative: bool,
    pub unimodular: bool,
    pub antipode_order_2: bool,
    pub cosemisimple: bool,
}

/// `Λ·(e_i e_j)` as a multiple of 1, or an error if the invariants are
/// bigger than the base ring.
fn form_coefficient<R: Algebra<F>, F: Field>(u: &ComoduleAlgebra<R, F>, act: &Matrix<R::Elem>, x: &[R::Elem]) -> Result<R::Elem> {
    let r = u.ring();
    let v = matrix::mul_vec(r, act, x);
    let one = Matrix::from_columns(u.dim(), &[u.algebra().unit().to_vec()]);
    let c = r.solve(&one, &v)?.ok_or_else(|| Error::InvalidInput("Λ·(xy) is not a multiple of 1".into()))?;
    Ok(c[0].clone())
}

fn require_scalar_invariants<R: Algebra<F>, F: Field>(u: &ComoduleAlgebra<R, F>) -> Result<()> {
    if !u.invariants_are_scalars()? {
        return Err(Error::UnsupportedBase("the form is computed when the invariants are the base ring".into()));
    }
    Ok(())
}

/// `G[i][j] = ⟨e_i, e_j⟩`.
pub fn gram<R: Algebra<F>, F: Field>(u: &ComoduleAlgebra<R, F>, lambda: &[F::Elem]) -> Result<Matrix<R::Elem>> {
    require_scalar_invariants(u)?;
    let act = u.hstar_action_matrix(lambda);
    let d = u.dim();
    let mut g = matrix::zeros(u.ring(), d, d);
    for i in 0..d {
        for j in 0..d {
            g.set(i, j, form_coefficient(u, &act, &u.algebra().basis_product(i, j))?);
        }
    }
    Ok(g)
}

pub fn form<R: Algebra<F>, F: Field>(u: &ComoduleAlgebra<R, F>, lambda: &[F::Elem], x: &[R::Elem], y: &[R::Elem]) -> Result<R::Elem> {
    let act = u.hstar_action_matrix(lambda);
    form_coefficient(u, &act, &u.algebra().mul(x, y))
}

/// All leading principal minors positive.
pub fn is_positive_definite<R: Ring>(r: &R, g: &Matrix<R::Elem>) -> Option<bool> {
    let n = g.rows();
    for k in 1..=n {
        let minor = matrix::det(r, &g.submatrix(0..k, 0..k));
        if !r.positivity(&minor)? {
            return Some(false);
        }
    }
    Some(true)
}

/// `Λ(xy) = Λ(yx)` on basis pairs of `H`.
pub fn lambda_is_symmetric<F: Field>(h: &HopfAlgebra<F>, lambda: &[F::Elem]) -> bool {
    let f = h.field();
    let d = h.dim();
    let ev = |v: Vec<F::Elem>| v.iter().zip(lambda).fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b)));
    (0..d).all(|i| (0..d).all(|j| ev(h.algebra().basis_product(i, j)) == ev(h.algebra().basis_product(j, i))))
}

pub fn frobenius_report<R: Algebra<F>, F: Field>(u: &ComoduleAlgebra<R, F>, lambda: &[F::Elem]) -> Result<FrobeniusReport<R::Elem>> {
    let r = u.ring();
    let g = gram(u, lambda)?;
    let determinant = matrix::det(r, &g);
    let nondegenerate = r.is_unit(&determinant);
    let symmetric = g == g.transpose();
    let positive_definite = if symmetric { is_positive_definite(r, &g) } else { None };
    let c = c_tensor(u, lambda)?;
    let h = u.hopf();
    let ints = h.integral_report()?;
    Ok(FrobeniusReport {
        gram: g,
        determinant,
        nondegenerate,
        symmetric,
        positive_definite,
        associative: c.cyclic,
        unimodular: ints.unimodular,
        antipode_order_2: ints.antipode_order.is_some_and(|k| k <= 2),
        cosemisimple: ints.cosemisimple,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct Nakayama<E> {
    /// Column `i` is `Nak(e_i)`.
    pub matrix: Matrix<E>,
    pub identity_holds: bool,
    pub automorphism: bool,
}

/// `Nak` with `⟨u, v⟩ = ⟨v, Nak(u)⟩`, i.e. `Gᵀ = G·Nak`.
pub fn nakayama<R: Algebra<F>, F: Field>(u: &ComoduleAlgebra<R, F>, lambda: &[F::Elem]) -> Result<Nakayama<R::Elem>> {
    let r = u.ring();
    let g = gram(u, lambda)?;
    let ginv = r.invert_matrix(&g)?.ok_or(Error::DegenerateForm)?;
    let nak = matrix::mul(r, &ginv, &g.transpose());
    let d = u.dim();
    let gn = matrix::mul(r, &g, &nak);
    let identity_holds = (0..d).all(|i| (0..d).all(|j| g.get(i, j) == gn.get(j, i)));
    let automorphism = u.algebra().is_algebra_map(u.algebra(), &nak) && r.invert_matrix(&nak)?.is_some();
    Ok(Nakayama { matrix: nak, identity_holds, automorphism })
}

#[derive(Clone, Debug, PartialEq)]
pub struct CTensor<E> {
    /// `C[(i·d + j)·d + k] = ⟨e_i e_j, e_k⟩`.
    pub values: Vec<E>,
    pub dim: usize,
    /// `⟨e_i e_j, e_k⟩ = ⟨e_i, e_j e_k⟩` on all basis triples.
    pub cyclic: bool,
}

impl<E> CTensor<E> {
    pub fn get(&self, i: usize, j: usize, k: usize) -> &E {
        &self.values[(i * self.dim + j) * self.dim + k]
    }
}

pub fn c_tensor<R: Algebra<F>, F: Field>(u: &ComoduleAlgebra<R, F>, lambda: &[F::Elem]) -> Result<CTensor<R::Elem>> {
    require_scalar_invariants(u)?;
    let a = u.algebra();
    let d = u.dim();
    let act = u.hstar_action_matrix(lambda);
    let mut values = Vec::with_capacity(d * d * d);
    let mut cyclic = true;
    for i in 0..d {
        for j in 0..d {
            let ij = a.basis_product(i, j);
            for k in 0..d {
                let lhs = form_coefficient(u, &act, &a.mul(&ij, &a.basis(k)))?;
                let rhs = form_coefficient(u, &act, &a.mul(&a.basis(i), &a.basis_product(j, k)))?;
                cyclic &= lhs == rhs;
                values.push(lhs);
            }
        }
    }
    Ok(CTensor { values, dim: d, cyclic })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{LaurentRing, Rationals};
    use crate::twisted::{qzn, twisted_product};

    #[test]
    fn gram_of_the_quantum_family() {
        let r = LaurentRing::new(Rationals);
        let u = twisted_product(&qzn(r.clone(), 2, r.variable()).unwrap()).unwrap();
        let lambda = u.hopf().normalized_lambda().unwrap();
        let rep = frobenius_report(&u, &lambda).unwrap();
        assert_eq!(rep.gram, matrix::diagonal(&r, &[r.one(), r.variable()]));
        assert!(rep.nondegenerate && rep.symmetric && rep.associative);
        assert_eq!(rep.positive_definite, None);
    }

    #[test]
    fn sweedler_nakayama_is_not_identity() {
        let q = Rationals;
        let h = HopfAlgebra::sweedler(q).unwrap();
        let u = ComoduleAlgebra::regular(q, h.clone()).unwrap();
        let lambda = h.normalized_lambda().unwrap();
        let n = nakayama(&u, &lambda).unwrap();
        assert!(n.identity_holds && n.automorphism);
        assert!(!matrix::is_identity(&q, &n.matrix));
        assert!(!lambda_is_symmetric(&h, &lambda));
    }
}
