//! The rational function field `F(q)`.

use super::poly;
use super::{Field, Ring};
use crate::error::{Error, Result};

/// `num / den` with `den` monic and `gcd(num, den) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc<E> {
    pub num: Vec<E>,
    pub den: Vec<E>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FracField<F: Field> {
    pub field: F,
    pub var: char,
}

impl<F: Field> FracField<F> {
    pub fn new(field: F) -> Self {
        FracField { field, var: 'q' }
    }

    pub fn make(&self, num: Vec<F::Elem>, den: Vec<F::Elem>) -> RatFunc<F::Elem> {
        let f = &self.field;
        let num = poly::trim(f, num);
        let den = poly::trim(f, den);
        assert!(!den.is_empty(), "zero denominator");
        if num.is_empty() {
            return RatFunc { num, den: vec![f.one()] };
        }
        let g = poly::gcd(f, &num, &den);
        let (mut n, _) = poly::div_rem(f, &num, &g);
        let (mut d, _) = poly::div_rem(f, &den, &g);
        let l = f.inv(d.last().unwrap());
        n = poly::scale(f, &l, &n);
        d = poly::scale(f, &l, &d);
        RatFunc { num: n, den: d }
    }

    pub fn from_polynomial(&self, p: &[F::Elem]) -> RatFunc<F::Elem> {
        self.make(p.to_vec(), vec![self.field.one()])
    }

    pub fn variable(&self) -> RatFunc<F::Elem> {
        self.from_polynomial(&[self.field.zero(), self.field.one()])
    }

    fn format_poly(&self, p: &[F::Elem]) -> String {
        poly::format(&self.field, p, self.var)
    }
}

impl<F: Field> Ring for FracField<F> {
    type Elem = RatFunc<F::Elem>;

    fn zero(&self) -> Self::Elem {
        RatFunc { num: Vec::new(), den: vec![self.field.one()] }
    }
    fn one(&self) -> Self::Elem {
        RatFunc { num: vec![self.field.one()], den: vec![self.field.one()] }
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let f = &self.field;
        if a.den == b.den {
            return self.make(poly::add(f, &a.num, &b.num), a.den.clone());
        }
        let n = poly::add(f, &poly::mul(f, &a.num, &b.den), &poly::mul(f, &b.num, &a.den));
        self.make(n, poly::mul(f, &a.den, &b.den))
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        RatFunc { num: poly::neg(&self.field, &a.num), den: a.den.clone() }
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let f = &self.field;
        self.make(poly::mul(f, &a.num, &b.num), poly::mul(f, &a.den, &b.den))
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.num.is_empty()
    }
    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_polynomial(&[self.field.from_i64(n)])
    }
    fn unit_inverse(&self, a: &Self::Elem) -> Option<Self::Elem> {
        (!a.num.is_empty()).then(|| self.make(a.den.clone(), a.num.clone()))
    }
    fn format(&self, a: &Self::Elem) -> String {
        let n = self.format_poly(&a.num);
        if a.den.len() == 1 {
            return n;
        }
        format!("({n})/({})", self.format_poly(&a.den))
    }
    fn parse(&self, s: &str) -> Result<Self::Elem> {
        let s = s.trim();
        let (num, den) = match split_quotient(s) {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        // Laurent-style input such as "q^-1 + 2" is accepted by clearing powers.
        let (low_n, cn) = poly::parse_laurent(&self.field, num)?;
        let (low_d, cd) = poly::parse_laurent(&self.field, den)?;
        let shift = low_n - low_d;
        let (mut n, mut d) = (cn, cd);
        let one = self.field.one();
        if shift > 0 {
            let mut p = vec![self.field.zero(); shift as usize];
            p.push(one);
            n = poly::mul(&self.field, &n, &p);
        } else if shift < 0 {
            let mut p = vec![self.field.zero(); (-shift) as usize];
            p.push(one);
            d = poly::mul(&self.field, &d, &p);
        }
        if poly::trim(&self.field, d.clone()).is_empty() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        Ok(self.make(n, d))
    }
}

/// Splits `"(num)/(den)"`.
fn split_quotient(s: &str) -> Option<(&str, &str)> {
    if !s.starts_with('(') {
        return None;
    }
    let mut depth = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    let rest = s[i + 1..].trim_start().strip_prefix('/')?.trim();
                    let den = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(rest);
                    return Some((&s[1..i], den));
                }
            }
            _ => {}
        }
    }
    None
}

impl<F: Field> Field for FracField<F> {
    fn characteristic(&self) -> u64 {
        self.field.characteristic()
    }

    fn roots(&self, _coeffs: &[Self::Elem]) -> Option<Vec<Self::Elem>> {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Rationals;

    #[test]
    fn reduces_to_lowest_terms() {
        let k = FracField::new(Rationals);
        let a = k.parse("(q^2 - 1)/(2*q - 2)").unwrap();
        assert_eq!(k.format(&a), "1/2*q + 1/2");
        let b = k.parse("q^-1").unwrap();
        assert_eq!(k.format(&b), "(1)/(q)");
        assert_eq!(k.mul(&b, &k.variable()), k.one());
    }
}
