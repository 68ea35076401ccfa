use super::{Field, Ring};
use crate::error::{Error, Result};

/// The prime field `F_p`, elements stored as reduced residues.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p < 2 || p >= 1 << 31 || (2..).take_while(|d| d * d <= p).any(|d| p % d == 0) {
            return Err(Error::InvalidInput(format!("{p} is not a prime below 2^31")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

impl Ring for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
    fn unit_inverse(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        Some(self.pow(a, self.p - 2))
    }
    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
    fn parse(&self, s: &str) -> Result<u64> {
        let s = s.trim();
        if let Some((n, d)) = s.split_once('/') {
            let n = self.parse(n)?;
            let d = self.parse(d)?;
            let inv = self.unit_inverse(&d).ok_or_else(|| Error::Parse(format!("division by zero in {s:?}")))?;
            return Ok(self.mul(&n, &inv));
        }
        let s = s.strip_prefix('+').unwrap_or(s);
        s.parse::<i64>().map(|n| self.from_i64(n)).map_err(|_| Error::Parse(format!("not an integer mod {}: {s:?}", self.p)))
    }
}

impl Field for PrimeField {
    fn characteristic(&self) -> u64 {
        self.p
    }

    fn roots(&self, coeffs: &[u64]) -> Option<Vec<u64>> {
        if self.p > 1_000_000 {
            return None;
        }
        if coeffs.iter().all(|c| *c == 0) {
            return Some(Vec::new());
        }
        let roots = (0..self.p).filter(|x| coeffs.iter().rev().fold(0, |acc, c| (acc * x + c) % self.p) == 0).collect();
        Some(roots)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses_mod_seven() {
        let f = PrimeField::new(7).unwrap();
        for a in 1..7 {
            assert_eq!(f.mul(&a, &f.inv(&a)), 1);
        }
        assert_eq!(f.parse("-1").unwrap(), 6);
        assert_eq!(f.parse("1/2").unwrap(), 4);
        assert!(PrimeField::new(9).is_err());
    }
}
