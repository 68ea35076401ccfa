use num::bigint::BigInt;
use num::integer::Integer;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

use super::{Field, Ring};
use crate::error::{Error, Result};

pub type Q = BigRational;

/// The field of rational numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = Q;

    fn zero(&self) -> Q {
        Q::zero()
    }
    fn one(&self) -> Q {
        Q::one()
    }
    fn add(&self, a: &Q, b: &Q) -> Q {
        a + b
    }
    fn neg(&self, a: &Q) -> Q {
        -a
    }
    fn mul(&self, a: &Q, b: &Q) -> Q {
        a * b
    }
    fn sub(&self, a: &Q, b: &Q) -> Q {
        a - b
    }
    fn is_zero(&self, a: &Q) -> bool {
        a.is_zero()
    }
    fn from_i64(&self, n: i64) -> Q {
        Q::from_integer(BigInt::from(n))
    }
    fn unit_inverse(&self, a: &Q) -> Option<Q> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn format(&self, a: &Q) -> String {
        a.to_string()
    }
    fn parse(&self, s: &str) -> Result<Q> {
        let s = s.trim();
        let s = s.strip_prefix('+').unwrap_or(s);
        s.parse::<Q>().map_err(|_| Error::Parse(format!("not a rational number: {s:?}")))
    }
    fn positivity(&self, a: &Q) -> Option<bool> {
        Some(a.is_positive())
    }
}

const ROOT_SEARCH_LIMIT: i128 = 1_000_000_000_000;

impl Field for Rationals {
    fn characteristic(&self) -> u64 {
        0
    }

    fn roots(&self, coeffs: &[Q]) -> Option<Vec<Q>> {
        let mut c: Vec<Q> = coeffs.to_vec();
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        if c.len() <= 1 {
            return Some(Vec::new());
        }
        let mut roots = Vec::new();
        let shift = c.iter().position(|x| !x.is_zero()).unwrap_or(0);
        if shift > 0 {
            roots.push(Q::zero());
            c.drain(..shift);
        }
        if c.len() == 1 {
            return Some(roots);
        }
        // Clear denominators, then the rational root test.
        let lcm = c.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = c.iter().map(|x| (x * Q::from_integer(lcm.clone())).to_integer()).collect();
        let a0 = ints[0].abs().to_i128()?;
        let an = ints.last().unwrap().abs().to_i128()?;
        if a0 > ROOT_SEARCH_LIMIT || an > ROOT_SEARCH_LIMIT {
            return None;
        }
        let eval = |x: &Q| c.iter().rev().fold(Q::zero(), |acc, k| acc * x + k);
        for p in divisors(a0) {
            for q in divisors(an) {
                if p.gcd(&q) != 1 {
                    continue;
                }
                for sign in [1i128, -1] {
                    let r = Q::new(BigInt::from(sign * p), BigInt::from(q));
                    if eval(&r).is_zero() && !roots.contains(&r) {
                        roots.push(r);
                    }
                }
            }
        }
        roots.sort();
        Some(roots)
    }
}

fn divisors(n: i128) -> Vec<i128> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_roots_of_split_cubic() {
        let q = Rationals;
        // (2x - 1)(x + 3)x = 2x^3 + 5x^2 - 3x
        let c: Vec<Q> = [0, -3, 5, 2].iter().map(|&n| q.from_i64(n)).collect();
        let r = q.roots(&c).unwrap();
        assert_eq!(r, vec![q.from_i64(-3), q.zero(), q.parse("1/2").unwrap()]);
    }

    #[test]
    fn irreducible_quadratic_has_no_roots() {
        let q = Rationals;
        let c = vec![q.one(), q.zero(), q.one()];
        assert!(q.roots(&c).unwrap().is_empty());
    }
}
