//! Searches for "generic" elements of a parametrized family: random small
//! combinations first, then an exact grid test of a determinant.

use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::matrix::{self, Matrix};
use crate::ring::Ring;

pub const DEFAULT_ATTEMPTS: usize = 64;
pub const COEFF_RANGE: i64 = 2;
/// Largest grid the exact fallback will evaluate.
pub const GRID_LIMIT: usize = 20_000;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_coefficients<R: Ring>(ring: &R, rng: &mut ChaCha8Rng, k: usize) -> Vec<R::Elem> {
    (0..k).map(|_| ring.from_i64(rng.gen_range(-COEFF_RANGE..=COEFF_RANGE))).collect()
}

/// Tries random combinations of `generators` until `accept` returns a value.
pub fn random_search<R: Ring, T>(
    ring: &R,
    generators: &[Vec<R::Elem>],
    len: usize,
    attempts: usize,
    seed: u64,
    mut accept: impl FnMut(&[R::Elem]) -> Result<Option<T>>,
) -> Result<Option<(Vec<R::Elem>, T)>> {
    if generators.is_empty() {
        return Ok(None);
    }
    let mut rng = rng(seed);
    for _ in 0..attempts {
        let c = random_coefficients(ring, &mut rng, generators.len());
        let v = matrix::combination(ring, &c, generators, len);
        if let Some(t) = accept(&v)? {
            return Ok(Some((v, t)));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq)]
pub enum GridOutcome<E> {
    /// The determinant polynomial is identically zero.
    IdenticallyZero,
    /// A combination whose determinant is a unit.
    Witness(Vec<E>),
    /// Nonzero somewhere but no unit found, or the grid is too large.
    Inconclusive,
}

/// Decides whether `c ↦ det(build(Σ c_i g_i))` vanishes identically, where the
/// determinant has degree at most `degree` in each `c_i`. Evaluates on the
/// grid `{0..=degree}^k`, which needs `degree` distinct field values.
pub fn determinant_grid<R: Ring>(
    ring: &R,
    generators: &[Vec<R::Elem>],
    len: usize,
    degree: usize,
    characteristic: u64,
    build: impl Fn(&[R::Elem]) -> Matrix<R::Elem>,
) -> GridOutcome<R::Elem> {
    let k = generators.len();
    if k == 0 {
        return GridOutcome::IdenticallyZero;
    }
    if characteristic != 0 && characteristic <= degree as u64 {
        return GridOutcome::Inconclusive;
    }
    let side = degree + 1;
    let Some(total) = side.checked_pow(k as u32).filter(|&t| t <= GRID_LIMIT) else {
        return GridOutcome::Inconclusive;
    };
    let mut nonzero = false;
    for idx in 0..total {
        let mut rest = idx;
        let c: Vec<R::Elem> = (0..k)
            .map(|_| {
                let d = rest % side;
                rest /= side;
                ring.from_i64(d as i64)
            })
            .collect();
        let v = matrix::combination(ring, &c, generators, len);
        let det = matrix::det(ring, &build(&v));
        if ring.is_unit(&det) {
            return GridOutcome::Witness(v);
        }
        nonzero |= !ring.is_zero(&det);
    }
    if nonzero {
        GridOutcome::Inconclusive
    } else {
        GridOutcome::IdenticallyZero
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Rationals;

    #[test]
    fn grid_detects_identically_singular_families() {
        let q = Rationals;
        // x·[[1,1],[1,1]] is always singular
        let g = vec![vec![q.one(); 4]];
        let out = determinant_grid(&q, &g, 4, 2, 0, |v| Matrix::from_vec(2, 2, v.to_vec()));
        assert_eq!(out, GridOutcome::IdenticallyZero);
        let g = vec![vec![q.one(), q.zero(), q.zero(), q.zero()], vec![q.zero(), q.zero(), q.zero(), q.one()]];
        let out = determinant_grid(&q, &g, 4, 2, 0, |v| Matrix::from_vec(2, 2, v.to_vec()));
        assert!(matches!(out, GridOutcome::Witness(_)));
    }

    #[test]
    fn random_search_is_deterministic() {
        let q = Rationals;
        let g = vec![vec![q.one(), q.zero()], vec![q.zero(), q.one()]];
        let a = random_search(&q, &g, 2, 8, 7, |v| Ok(Some(v.to_vec()))).unwrap();
        let b = random_search(&q, &g, 2, 8, 7, |v| Ok(Some(v.to_vec()))).unwrap();
        assert_eq!(a, b);
    }
}
