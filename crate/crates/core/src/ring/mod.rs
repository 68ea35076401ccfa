//! Exact coefficient rings.
//!
//! Rings are described by small descriptor values (`Rationals`,
//! `PrimeField { p }`, `LaurentRing { .. }`, ...) that carry whatever context
//! their elements need; elements are plain data. Every ring here is an
//! algebra over a ground field `F`, exposed through [`Algebra`].

mod jet;
mod laurent;
mod poly;
mod prime;
mod ratfunc;
mod rational;
pub(crate) mod text;

pub use jet::JetRing;
pub use laurent::{Laurent, LaurentRing};
pub use poly::PolyRing;
pub use prime::PrimeField;
pub use ratfunc::{FracField, RatFunc};
pub use rational::{Rationals, Q};

use std::fmt::Debug;

use crate::error::Result;
use crate::linalg;
use crate::matrix::Matrix;

pub trait Ring: Clone + Debug + PartialEq {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn from_i64(&self, n: i64) -> Self::Elem;
    /// The inverse of `a` when `a` is a unit.
    fn unit_inverse(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn format(&self, a: &Self::Elem) -> String;
    fn parse(&self, s: &str) -> Result<Self::Elem>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn is_unit(&self, a: &Self::Elem) -> bool {
        self.unit_inverse(a).is_some()
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// `Some(a > 0)` for ordered fields, `None` otherwise.
    fn positivity(&self, _a: &Self::Elem) -> Option<bool> {
        None
    }

    // Linear algebra over the ring. The defaults eliminate with unit pivots,
    // which is complete over fields; principal ideal rings override them with
    // Smith-form routines.

    /// Some `x` with `a·x = b`, or `None` when the system is inconsistent.
    fn solve(&self, a: &Matrix<Self::Elem>, b: &[Self::Elem]) -> Result<Option<Vec<Self::Elem>>> {
        linalg::solve_by_elimination(self, a, b)
    }

    /// Basis (as columns) of the kernel; saturated over principal ideal rings.
    fn kernel(&self, a: &Matrix<Self::Elem>) -> Result<Matrix<Self::Elem>> {
        linalg::kernel_by_elimination(self, a)
    }

    fn rank(&self, a: &Matrix<Self::Elem>) -> Result<usize> {
        linalg::rank_by_elimination(self, a)
    }

    /// Whether `a`, viewed as a map of free modules, is onto.
    fn is_surjective(&self, a: &Matrix<Self::Elem>) -> Result<bool> {
        Ok(self.rank(a)? == a.rows())
    }

    fn invert_matrix(&self, a: &Matrix<Self::Elem>) -> Result<Option<Matrix<Self::Elem>>> {
        linalg::invert_by_elimination(self, a)
    }
}

pub trait Field: Ring {
    fn characteristic(&self) -> u64;

    fn inv(&self, a: &Self::Elem) -> Self::Elem {
        self.unit_inverse(a).expect("inverse of zero in a field")
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }

    /// All distinct roots in the field of the polynomial with ascending
    /// coefficients `coeffs`, or `None` when root finding is unavailable.
    fn roots(&self, coeffs: &[Self::Elem]) -> Option<Vec<Self::Elem>>;
}

/// A ring together with a unital embedding of the ground field `F`.
pub trait Algebra<F: Field>: Ring {
    fn ground(&self) -> &F;
    fn scalar(&self, c: &F::Elem) -> Self::Elem;
}

/// A Euclidean ring: `div_rem(a, b) = (q, r)` with `a = q·b + r` and either
/// `r = 0` or `norm(r) < norm(b)`.
pub trait Euclidean: Ring {
    fn norm(&self, a: &Self::Elem) -> usize;
    fn div_rem(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem);
    /// A unit `u` such that `u·a` is the preferred associate of `a`.
    fn normalizing_unit(&self, a: &Self::Elem) -> Self::Elem;

    /// A generator of `Ann(a)` when it is nonzero; `None` for domains.
    fn annihilator(&self, _a: &Self::Elem) -> Option<Self::Elem> {
        None
    }

    fn divides(&self, b: &Self::Elem, a: &Self::Elem) -> bool {
        if self.is_zero(b) {
            return self.is_zero(a);
        }
        self.is_zero(&self.div_rem(a, b).1)
    }
}

/// A ring that is finite-dimensional over its ground field, with a fixed
/// basis used for restriction of scalars.
pub trait FiniteOver<F: Field>: Algebra<F> {
    fn degree(&self) -> usize;
    fn coords(&self, a: &Self::Elem) -> Vec<F::Elem>;
    fn basis_element(&self, i: usize) -> Self::Elem;
}

/// Rings with a derivation `d/dq` (univariate polynomial-type rings).
pub trait Differential: Ring {
    fn derivative(&self, a: &Self::Elem) -> Self::Elem;
}

macro_rules! field_is_algebra_over_itself {
    ($t:ty) => {
        impl Algebra<$t> for $t {
            fn ground(&self) -> &$t {
                self
            }
            fn scalar(&self, c: &<$t as Ring>::Elem) -> <$t as Ring>::Elem {
                c.clone()
            }
        }
        impl FiniteOver<$t> for $t {
            fn degree(&self) -> usize {
                1
            }
            fn coords(&self, a: &<$t as Ring>::Elem) -> Vec<<$t as Ring>::Elem> {
                vec![a.clone()]
            }
            fn basis_element(&self, _i: usize) -> <$t as Ring>::Elem {
                self.one()
            }
        }
    };
}

field_is_algebra_over_itself!(Rationals);
field_is_algebra_over_itself!(PrimeField);

impl<F: Field> Algebra<FracField<F>> for FracField<F> {
    fn ground(&self) -> &FracField<F> {
        self
    }
    fn scalar(&self, c: &RatFunc<F::Elem>) -> RatFunc<F::Elem> {
        c.clone()
    }
}

/// A ring homomorphism between two coefficient rings.
pub trait RingHom {
    type Source: Ring;
    type Target: Ring;
    fn source(&self) -> &Self::Source;
    fn target(&self) -> &Self::Target;
    fn apply(&self, a: &<Self::Source as Ring>::Elem) -> Result<<Self::Target as Ring>::Elem>;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix;

    #[test]
    fn berkowitz_determinant_matches_cofactor_expansion() {
        let q = Rationals;
        let a = matrix::from_i64(&q, &[&[2, -1, 3], &[0, 4, 1], &[5, 2, -2]]);
        // 2(4·-2 - 1·2) - (-1)(0·-2 - 1·5) + 3(0·2 - 4·5) = -20 - 5 - 60
        assert_eq!(matrix::det(&q, &a), q.from_i64(-85));
        let cp = matrix::charpoly(&q, &matrix::identity(&q, 2));
        assert_eq!(cp, vec![q.from_i64(1), q.from_i64(-2), q.from_i64(1)]);
    }
}
