//! Laurent polynomials `F[q, q⁻¹]`, a principal ideal domain whose units are
//! the nonzero monomials.

use super::poly;
use super::{Algebra, Differential, Euclidean, Field, Ring};
use crate::error::Result;
use crate::linalg;
use crate::matrix::Matrix;

/// `Σ coeffs[k] q^(low + k)`; the zero element has no coefficients and
/// `low = 0`, otherwise both ends of `coeffs` are nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Laurent<E> {
    pub low: i64,
    pub coeffs: Vec<E>,
}

impl<E> Laurent<E> {
    pub fn high(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LaurentRing<F: Field> {
    pub field: F,
    pub var: char,
}

impl<F: Field> LaurentRing<F> {
    pub fn new(field: F) -> Self {
        LaurentRing { field, var: 'q' }
    }

    /// Canonical form of `q^low · Σ coeffs[k] q^k`.
    pub fn make(&self, mut low: i64, coeffs: Vec<F::Elem>) -> Laurent<F::Elem> {
        let mut c = poly::trim(&self.field, coeffs);
        let lead = c.iter().position(|x| !self.field.is_zero(x));
        match lead {
            None => Laurent { low: 0, coeffs: Vec::new() },
            Some(k) => {
                c.drain(..k);
                low += k as i64;
                Laurent { low, coeffs: c }
            }
        }
    }

    pub fn monomial(&self, c: F::Elem, e: i64) -> Laurent<F::Elem> {
        self.make(e, vec![c])
    }

    pub fn variable(&self) -> Laurent<F::Elem> {
        self.monomial(self.field.one(), 1)
    }

    pub fn coeff(&self, a: &Laurent<F::Elem>, e: i64) -> F::Elem {
        let k = e - a.low;
        if k < 0 || k >= a.coeffs.len() as i64 {
            return self.field.zero();
        }
        a.coeffs[k as usize].clone()
    }

    /// Evaluation at a nonzero point, or at zero when `a` has no negative
    /// powers.
    pub fn eval(&self, a: &Laurent<F::Elem>, x: &F::Elem) -> Option<F::Elem> {
        if a.coeffs.is_empty() {
            return Some(self.field.zero());
        }
        if a.low >= 0 {
            return Some(self.field.mul(&self.field.pow(x, a.low as u64), &poly::eval(&self.field, &a.coeffs, x)));
        }
        let inv = self.field.unit_inverse(x)?;
        let v = poly::eval(&self.field, &a.coeffs, x);
        Some(self.field.mul(&self.field.pow(&inv, (-a.low) as u64), &v))
    }

    /// Coefficients of the polynomial `a` when `a` has no negative powers.
    pub fn as_polynomial(&self, a: &Laurent<F::Elem>) -> Option<Vec<F::Elem>> {
        if a.coeffs.is_empty() {
            return Some(Vec::new());
        }
        if a.low < 0 {
            return None;
        }
        let mut out = vec![self.field.zero(); a.low as usize];
        out.extend(a.coeffs.iter().cloned());
        Some(out)
    }

    pub fn from_polynomial(&self, p: &[F::Elem]) -> Laurent<F::Elem> {
        self.make(0, p.to_vec())
    }

    pub fn is_monomial(&self, a: &Laurent<F::Elem>) -> bool {
        a.coeffs.len() == 1
    }
}

impl<F: Field> Ring for LaurentRing<F> {
    type Elem = Laurent<F::Elem>;

    fn zero(&self) -> Self::Elem {
        Laurent { low: 0, coeffs: Vec::new() }
    }
    fn one(&self) -> Self::Elem {
        Laurent { low: 0, coeffs: vec![self.field.one()] }
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.coeffs.is_empty() {
            return b.clone();
        }
        if b.coeffs.is_empty() {
            return a.clone();
        }
        let low = a.low.min(b.low);
        let high = a.high().max(b.high());
        let c = (low..=high).map(|e| self.field.add(&self.coeff(a, e), &self.coeff(b, e))).collect();
        self.make(low, c)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        Laurent { low: a.low, coeffs: poly::neg(&self.field, &a.coeffs) }
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.coeffs.is_empty() || b.coeffs.is_empty() {
            return self.zero();
        }
        self.make(a.low + b.low, poly::mul(&self.field, &a.coeffs, &b.coeffs))
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.coeffs.is_empty()
    }
    fn from_i64(&self, n: i64) -> Self::Elem {
        self.make(0, vec![self.field.from_i64(n)])
    }
    fn unit_inverse(&self, a: &Self::Elem) -> Option<Self::Elem> {
        self.is_monomial(a).then(|| self.monomial(self.field.inv(&a.coeffs[0]), -a.low))
    }
    fn format(&self, a: &Self::Elem) -> String {
        let terms: Vec<(String, i64)> = a
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !self.field.is_zero(c))
            .map(|(i, c)| (self.field.format(c), a.low + i as i64))
            .collect();
        super::text::format_terms(&terms, self.var)
    }
    fn parse(&self, s: &str) -> Result<Self::Elem> {
        let (low, c) = poly::parse_laurent(&self.field, s)?;
        Ok(self.make(low, c))
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

impl<F: Field> Euclidean for LaurentRing<F> {
    /// Span `high − low`: the degree of the associated polynomial.
    fn norm(&self, a: &Self::Elem) -> usize {
        a.coeffs.len().saturating_sub(1)
    }

    fn div_rem(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem) {
        // a = q^m A, b = q^n B with A(0), B(0) ≠ 0; A = Q·B + R gives
        // a = q^(m−n) Q · b + q^m R and span(R) ≤ deg R < deg B.
        if a.coeffs.is_empty() {
            return (self.zero(), self.zero());
        }
        let (q, r) = poly::div_rem(&self.field, &a.coeffs, &b.coeffs);
        (self.make(a.low - b.low, q), self.make(a.low, r))
    }

    fn normalizing_unit(&self, a: &Self::Elem) -> Self::Elem {
        match a.coeffs.last() {
            None => self.one(),
            Some(l) => self.monomial(self.field.inv(l), -a.low),
        }
    }
}

impl<F: Field> Algebra<F> for LaurentRing<F> {
    fn ground(&self) -> &F {
        &self.field
    }
    fn scalar(&self, c: &F::Elem) -> Self::Elem {
        self.make(0, vec![c.clone()])
    }
}

impl<F: Field> Differential for LaurentRing<F> {
    fn derivative(&self, a: &Self::Elem) -> Self::Elem {
        let c = a.coeffs.iter().enumerate().map(|(i, c)| self.field.mul(&self.field.from_i64(a.low + i as i64), c)).collect();
        self.make(a.low - 1, c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Rationals;

    #[test]
    fn monomials_are_units() {
        let r = LaurentRing::new(Rationals);
        let a = r.parse("3*q^-2").unwrap();
        let inv = r.unit_inverse(&a).unwrap();
        assert_eq!(r.mul(&a, &inv), r.one());
        assert!(r.unit_inverse(&r.parse("q + 1").unwrap()).is_none());
        assert_eq!(r.format(&inv), "1/3*q^2");
    }

    #[test]
    fn euclidean_step_shrinks_span() {
        let r = LaurentRing::new(Rationals);
        let a = r.parse("q^-1 + 2 + q^3").unwrap();
        let b = r.parse("q^2 - 1").unwrap();
        let (q, rem) = r.div_rem(&a, &b);
        assert_eq!(r.add(&r.mul(&q, &b), &rem), a);
        assert!(r.norm(&rem) < r.norm(&b));
    }

    #[test]
    fn derivative_of_inverse_power() {
        let r = LaurentRing::new(Rationals);
        let a = r.parse("q^-1").unwrap();
        assert_eq!(r.derivative(&a), r.parse("-q^-2").unwrap());
    }
}
