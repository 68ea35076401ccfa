//! Dense univariate polynomials over a field, ascending coefficients with no
//! trailing zeros.

use super::{text, Algebra, Differential, Euclidean, Field, Ring};
use crate::error::{Error, Result};
use crate::linalg;
use crate::matrix::Matrix;

pub(crate) fn trim<F: Field>(f: &F, mut a: Vec<F::Elem>) -> Vec<F::Elem> {
    while a.last().is_some_and(|x| f.is_zero(x)) {
        a.pop();
    }
    a
}

pub(crate) fn add<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => f.add(x, y),
            (Some(x), None) | (None, Some(x)) => x.clone(),
            (None, None) => unreachable!(),
        })
        .collect();
    trim(f, out)
}

pub(crate) fn neg<F: Field>(f: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    a.iter().map(|x| f.neg(x)).collect()
}

pub(crate) fn mul<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = f.add(&out[i + j], &f.mul(x, y));
        }
    }
    trim(f, out)
}

pub(crate) fn scale<F: Field>(f: &F, c: &F::Elem, a: &[F::Elem]) -> Vec<F::Elem> {
    trim(f, a.iter().map(|x| f.mul(c, x)).collect())
}

pub(crate) fn div_rem<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> (Vec<F::Elem>, Vec<F::Elem>) {
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut r = a.to_vec();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = f.inv(b.last().unwrap());
    let mut q = vec![f.zero(); r.len() - b.len() + 1];
    for k in (0..q.len()).rev() {
        let c = f.mul(&r[k + b.len() - 1], &lead_inv);
        if !f.is_zero(&c) {
            for (j, y) in b.iter().enumerate() {
                r[k + j] = f.sub(&r[k + j], &f.mul(&c, y));
            }
        }
        q[k] = c;
    }
    (trim(f, q), trim(f, r))
}

pub(crate) fn monic<F: Field>(f: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    match a.last() {
        None => Vec::new(),
        Some(l) => scale(f, &f.inv(l), a),
    }
}

pub(crate) fn gcd<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let (mut x, mut y) = (a.to_vec(), b.to_vec());
    while !y.is_empty() {
        let r = div_rem(f, &x, &y).1;
        x = y;
        y = r;
    }
    monic(f, &x)
}

pub(crate) fn eval<F: Field>(f: &F, a: &[F::Elem], x: &F::Elem) -> F::Elem {
    a.iter().rev().fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
}

pub(crate) fn derivative<F: Field>(f: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    let out = a.iter().enumerate().skip(1).map(|(i, c)| f.mul(&f.from_i64(i as i64), c)).collect();
    trim(f, out)
}

/// Taylor shift: coefficients of `a(x + s)` as a polynomial in `x`.
pub(crate) fn shift<F: Field>(f: &F, a: &[F::Elem], s: &F::Elem) -> Vec<F::Elem> {
    let mut out: Vec<F::Elem> = Vec::new();
    for c in a.iter().rev() {
        // out = out·(x + s) + c
        let mut next = vec![f.zero(); out.len() + 1];
        for (i, y) in out.iter().enumerate() {
            next[i + 1] = f.add(&next[i + 1], y);
            next[i] = f.add(&next[i], &f.mul(y, s));
        }
        next[0] = f.add(&next[0], c);
        out = trim(f, next);
    }
    out
}

pub(crate) fn format<F: Field>(f: &F, a: &[F::Elem], var: char) -> String {
    let terms: Vec<(String, i64)> =
        a.iter().enumerate().rev().filter(|(_, c)| !f.is_zero(c)).map(|(i, c)| (f.format(c), i as i64)).collect();
    text::format_terms(&terms, var)
}

/// Parses into `(lowest exponent, coefficients)`.
pub(crate) fn parse_laurent<F: Field>(f: &F, s: &str) -> Result<(i64, Vec<F::Elem>)> {
    let terms = text::parse_terms(s)?;
    let mut parsed = Vec::with_capacity(terms.len());
    for (c, e) in terms {
        parsed.push((f.parse(&c)?, e));
    }
    let low = parsed.iter().map(|t| t.1).min().unwrap_or(0);
    let high = parsed.iter().map(|t| t.1).max().unwrap_or(0);
    if high - low > 1 << 20 {
        return Err(Error::Parse("exponent range too large".into()));
    }
    let mut coeffs = vec![f.zero(); (high - low + 1) as usize];
    for (c, e) in parsed {
        let k = (e - low) as usize;
        coeffs[k] = f.add(&coeffs[k], &c);
    }
    Ok((low, coeffs))
}

/// The polynomial ring `F[var]`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyRing<F: Field> {
    pub field: F,
    pub var: char,
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F) -> Self {
        PolyRing { field, var: 'q' }
    }

    pub fn with_var(field: F, var: char) -> Self {
        PolyRing { field, var }
    }

    pub fn variable(&self) -> Vec<F::Elem> {
        vec![self.field.zero(), self.field.one()]
    }

    pub fn degree(&self, a: &[F::Elem]) -> Option<usize> {
        a.len().checked_sub(1)
    }

    pub fn eval(&self, a: &[F::Elem], x: &F::Elem) -> F::Elem {
        eval(&self.field, a, x)
    }

    pub fn gcd(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        gcd(&self.field, a, b)
    }
}

impl<F: Field> Ring for PolyRing<F> {
    type Elem = Vec<F::Elem>;

    fn zero(&self) -> Self::Elem {
        Vec::new()
    }
    fn one(&self) -> Self::Elem {
        vec![self.field.one()]
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        add(&self.field, a, b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        neg(&self.field, a)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        mul(&self.field, a, b)
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_empty()
    }
    fn from_i64(&self, n: i64) -> Self::Elem {
        trim(&self.field, vec![self.field.from_i64(n)])
    }
    fn unit_inverse(&self, a: &Self::Elem) -> Option<Self::Elem> {
        (a.len() == 1).then(|| vec![self.field.inv(&a[0])])
    }
    fn format(&self, a: &Self::Elem) -> String {
        format(&self.field, a, self.var)
    }
    fn parse(&self, s: &str) -> Result<Self::Elem> {
        let (low, c) = parse_laurent(&self.field, s)?;
        if low < 0 && c.iter().take((-low) as usize).any(|x| !self.field.is_zero(x)) {
            return Err(Error::Parse(format!("negative exponent in polynomial {s:?}")));
        }
        let mut out = vec![self.field.zero(); low.max(0) as usize];
        out.extend(c.into_iter().skip((-low).max(0) as usize));
        Ok(trim(&self.field, out))
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

impl<F: Field> Euclidean for PolyRing<F> {
    fn norm(&self, a: &Self::Elem) -> usize {
        a.len().saturating_sub(1)
    }
    fn div_rem(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem) {
        div_rem(&self.field, a, b)
    }
    fn normalizing_unit(&self, a: &Self::Elem) -> Self::Elem {
        match a.last() {
            None => self.one(),
            Some(l) => vec![self.field.inv(l)],
        }
    }
}

impl<F: Field> Algebra<F> for PolyRing<F> {
    fn ground(&self) -> &F {
        &self.field
    }
    fn scalar(&self, c: &F::Elem) -> Self::Elem {
        trim(&self.field, vec![c.clone()])
    }
}

impl<F: Field> Differential for PolyRing<F> {
    fn derivative(&self, a: &Self::Elem) -> Self::Elem {
        derivative(&self.field, a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Rationals;

    #[test]
    fn division_with_remainder() {
        let r = PolyRing::new(Rationals);
        let a = r.parse("q^3 - 2*q + 1").unwrap();
        let b = r.parse("q - 1").unwrap();
        let (q, rem) = r.div_rem(&a, &b);
        assert_eq!(r.format(&q), "q^2 + q - 1");
        assert!(rem.is_empty());
    }

    #[test]
    fn taylor_shift_round_trip() {
        let f = Rationals;
        let r = PolyRing::new(f);
        let a = r.parse("3*q^3 - q + 5").unwrap();
        let s = shift(&f, &a, &f.from_i64(2));
        assert_eq!(shift(&f, &s, &f.from_i64(-2)), a);
        assert_eq!(s[0], r.eval(&a, &f.from_i64(2)));
    }
}
