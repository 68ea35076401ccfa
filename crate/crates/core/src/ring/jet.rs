//! Jet rings `F[q]/((q − a)^N)`.

use super::poly;
use super::{Algebra, Euclidean, Field, FiniteOver, Ring};
use crate::error::{Error, Result};
use crate::linalg;
use crate::matrix::Matrix;

/// Elements are stored in the local coordinate `s = q − center` as
/// ascending coefficient vectors of length at most `order`, no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct JetRing<F: Field> {
    pub field: F,
    pub var: char,
    pub center: F::Elem,
    pub order: usize,
}

impl<F: Field> JetRing<F> {
    pub fn new(field: F, center: F::Elem, order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidInput("jet order must be at least 1".into()));
        }
        Ok(JetRing { field, var: 'q', center, order })
    }

    pub fn truncate(&self, mut a: Vec<F::Elem>) -> Vec<F::Elem> {
        a.truncate(self.order);
        poly::trim(&self.field, a)
    }

    /// The class of a polynomial in `q`.
    pub fn from_q_polynomial(&self, p: &[F::Elem]) -> Vec<F::Elem> {
        self.truncate(poly::shift(&self.field, p, &self.center))
    }

    /// The representative of degree `< order` as a polynomial in `q`.
    pub fn to_q_polynomial(&self, a: &[F::Elem]) -> Vec<F::Elem> {
        poly::shift(&self.field, a, &self.field.neg(&self.center))
    }

    /// The local parameter `s = q − center`.
    pub fn parameter(&self) -> Vec<F::Elem> {
        self.truncate(vec![self.field.zero(), self.field.one()])
    }

    pub fn valuation(&self, a: &[F::Elem]) -> usize {
        a.iter().position(|c| !self.field.is_zero(c)).unwrap_or(self.order)
    }

    /// Reduction modulo `s`: the value at the center.
    pub fn residue(&self, a: &[F::Elem]) -> F::Elem {
        a.first().cloned().unwrap_or_else(|| self.field.zero())
    }
}

impl<F: Field> Ring for JetRing<F> {
    type Elem = Vec<F::Elem>;

    fn zero(&self) -> Self::Elem {
        Vec::new()
    }
    fn one(&self) -> Self::Elem {
        vec![self.field.one()]
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        poly::add(&self.field, a, b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        poly::neg(&self.field, a)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let f = &self.field;
        let n = (a.len() + b.len() - 1).min(self.order);
        let mut out = vec![f.zero(); n];
        for (i, x) in a.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate().take(n.saturating_sub(i)) {
                out[i + j] = f.add(&out[i + j], &f.mul(x, y));
            }
        }
        poly::trim(f, out)
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_empty()
    }
    fn from_i64(&self, n: i64) -> Self::Elem {
        poly::trim(&self.field, vec![self.field.from_i64(n)])
    }
    fn unit_inverse(&self, a: &Self::Elem) -> Option<Self::Elem> {
        // Power series inversion: b_k = −c0⁻¹ Σ_{i≥1} a_i b_{k−i}.
        let f = &self.field;
        let c0 = f.unit_inverse(a.first()?)?;
        let mut b = vec![f.zero(); self.order];
        b[0] = c0.clone();
        for k in 1..self.order {
            let mut acc = f.zero();
            for i in 1..=k.min(a.len() - 1) {
                acc = f.add(&acc, &f.mul(&a[i], &b[k - i]));
            }
            b[k] = f.neg(&f.mul(&c0, &acc));
        }
        Some(poly::trim(f, b))
    }
    fn format(&self, a: &Self::Elem) -> String {
        poly::format(&self.field, &self.to_q_polynomial(a), self.var)
    }
    fn parse(&self, s: &str) -> Result<Self::Elem> {
        let (low, c) = poly::parse_laurent(&self.field, s)?;
        if low < 0 {
            return Err(Error::Parse(format!("negative exponent in jet {s:?}")));
        }
        let mut p = vec![self.field.zero(); low as usize];
        p.extend(c);
        Ok(self.from_q_polynomial(&p))
    }

    fn solve(&self, a: &Matrix<Self::Elem>, b: &[Self::Elem]) -> Result<Option<Vec<Self::Elem>>> {
        linalg::snf::solve(self, a, b)
    }
    fn kernel(&self, a: &Matrix<Self::Elem>) -> Result<Matrix<Self::Elem>> {
        Ok(linalg::snf::kernel(self, a))
    }
    fn rank(&self, a: &Matrix<Self::Elem>) -> Result<usize> {
        Ok(linalg::snf::smith(self, a).rank)
    }
    fn is_surjective(&self, a: &Matrix<Self::Elem>) -> Result<bool> {
        Ok(linalg::snf::smith(self, a).is_surjective(self))
    }
    fn invert_matrix(&self, a: &Matrix<Self::Elem>) -> Result<Option<Matrix<Self::Elem>>> {
        Ok(linalg::snf::invert(self, a))
    }
}

impl<F: Field> Euclidean for JetRing<F> {
    /// The `s`-adic valuation; every ideal is `(s^k)`.
    fn norm(&self, a: &Self::Elem) -> usize {
        self.valuation(a)
    }

    fn div_rem(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem) {
        let (va, vb) = (self.valuation(a), self.valuation(b));
        if a.is_empty() {
            return (Vec::new(), Vec::new());
        }
        if va < vb {
            return (Vec::new(), a.clone());
        }
        let a_unit = a[va..].to_vec();
        let b_unit = self.unit_inverse(&b[vb..].to_vec()).expect("shifted jet is a unit");
        let mut q = vec![self.field.zero(); va - vb];
        q.extend(self.mul(&a_unit, &b_unit));
        (self.truncate(q), Vec::new())
    }

    fn normalizing_unit(&self, a: &Self::Elem) -> Self::Elem {
        if a.is_empty() {
            return self.one();
        }
        let v = self.valuation(a);
        self.unit_inverse(&a[v..].to_vec()).expect("shifted jet is a unit")
    }

    fn annihilator(&self, a: &Self::Elem) -> Option<Self::Elem> {
        let v = self.valuation(a);
        if a.is_empty() || v == 0 {
            return None;
        }
        let mut g = vec![self.field.zero(); self.order - v];
        g.push(self.field.one());
        Some(g)
    }
}

impl<F: Field> Algebra<F> for JetRing<F> {
    fn ground(&self) -> &F {
        &self.field
    }
    fn scalar(&self, c: &F::Elem) -> Self::Elem {
        poly::trim(&self.field, vec![c.clone()])
    }
}

impl<F: Field> FiniteOver<F> for JetRing<F> {
    fn degree(&self) -> usize {
        self.order
    }
    fn coords(&self, a: &Self::Elem) -> Vec<F::Elem> {
        let mut c = a.clone();
        c.resize(self.order, self.field.zero());
        c
    }
    fn basis_element(&self, i: usize) -> Self::Elem {
        let mut c = vec![self.field.zero(); i];
        c.push(self.field.one());
        self.truncate(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Rationals;

    #[test]
    fn units_are_jets_with_nonzero_residue() {
        let f = Rationals;
        let j = JetRing::new(f, f.from_i64(1), 3).unwrap();
        let q = j.parse("q").unwrap();
        // q = 1 + s is a unit with inverse 1 − s + s².
        let inv = j.unit_inverse(&q).unwrap();
        assert_eq!(j.mul(&q, &inv), j.one());
        let s = j.parameter();
        assert!(j.unit_inverse(&s).is_none());
        assert!(j.is_zero(&j.pow(&s, 3)));
        assert_eq!(j.format(&s), "q - 1");
    }

    #[test]
    fn exact_division_by_lower_valuation() {
        let f = Rationals;
        let j = JetRing::new(f, f.from_i64(0), 4).unwrap();
        let a = j.parse("q^2 + q^3").unwrap();
        let b = j.parse("2*q").unwrap();
        let (q, r) = j.div_rem(&a, &b);
        assert!(r.is_empty());
        assert_eq!(j.mul(&q, &b), a);
    }
}
