//! Dense matrices with entries in an arbitrary commutative ring.
//!
//! Linear maps act on column vectors: column `j` holds the image of the
//! `j`-th basis vector. Tensor products of free modules use the row-major
//! index convention `(i, j) ↦ i·dim_B + j` everywhere in the crate.

use crate::error::{Error, Result};
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E> Matrix<E> {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[E] {
        &self.data
    }
}

impl<E: Clone> Matrix<E> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<E>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data has wrong length");
        Matrix { rows, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(height: usize, cols: &[Vec<E>]) -> Self {
        Matrix::from_fn(height, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn row(&self, i: usize) -> Vec<E> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<E>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<T: Clone>(&self, f: impl Fn(&E) -> T) -> Matrix<T> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        let c0 = cols.start;
        let r0 = rows.start;
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self.get(r0 + i, c0 + j).clone())
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        Matrix::from_fn(self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!("hstack of {} and {} rows", self.rows, other.rows)));
        }
        Ok(Matrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        }))
    }

    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!("vstack of {} and {} columns", self.cols, other.cols)));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix { rows: self.rows + other.rows, cols: self.cols, data })
    }
}

pub fn zeros<R: Ring>(ring: &R, rows: usize, cols: usize) -> Matrix<R::Elem> {
    Matrix::from_fn(rows, cols, |_, _| ring.zero())
}

pub fn identity<R: Ring>(ring: &R, n: usize) -> Matrix<R::Elem> {
    Matrix::from_fn(n, n, |i, j| if i == j { ring.one() } else { ring.zero() })
}

pub fn diagonal<R: Ring>(ring: &R, d: &[R::Elem]) -> Matrix<R::Elem> {
    Matrix::from_fn(d.len(), d.len(), |i, j| if i == j { d[i].clone() } else { ring.zero() })
}

pub fn from_i64<R: Ring>(ring: &R, rows: &[&[i64]]) -> Matrix<R::Elem> {
    let r = rows.len();
    let c = rows.first().map_or(0, |x| x.len());
    Matrix::from_fn(r, c, |i, j| ring.from_i64(rows[i][j]))
}

pub fn unit_vector<R: Ring>(ring: &R, n: usize, i: usize) -> Vec<R::Elem> {
    (0..n).map(|k| if k == i { ring.one() } else { ring.zero() }).collect()
}

pub fn zero_vector<R: Ring>(ring: &R, n: usize) -> Vec<R::Elem> {
    vec![ring.zero(); n]
}

pub fn mul<R: Ring>(ring: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    assert_eq!(a.cols, b.rows, "matrix product dimension mismatch");
    let mut out = zeros(ring, a.rows, b.cols);
    for i in 0..a.rows {
        for k in 0..a.cols {
            let aik = a.get(i, k);
            if ring.is_zero(aik) {
                continue;
            }
            for j in 0..b.cols {
                let bkj = b.get(k, j);
                if ring.is_zero(bkj) {
                    continue;
                }
                let v = ring.add(out.get(i, j), &ring.mul(aik, bkj));
                out.set(i, j, v);
            }
        }
    }
    out
}

pub fn try_mul<R: Ring>(ring: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Result<Matrix<R::Elem>> {
    if a.cols != b.rows {
        return Err(Error::DimensionMismatch(format!("{}x{} times {}x{}", a.rows, a.cols, b.rows, b.cols)));
    }
    Ok(mul(ring, a, b))
}

pub fn mul_vec<R: Ring>(ring: &R, a: &Matrix<R::Elem>, v: &[R::Elem]) -> Vec<R::Elem> {
    assert_eq!(a.cols, v.len(), "matrix-vector dimension mismatch");
    let mut out = zero_vector(ring, a.rows);
    for (k, vk) in v.iter().enumerate() {
        if ring.is_zero(vk) {
            continue;
        }
        for (i, o) in out.iter_mut().enumerate() {
            let aik = a.get(i, k);
            if !ring.is_zero(aik) {
                *o = ring.add(o, &ring.mul(aik, vk));
            }
        }
    }
    out
}

pub fn add<R: Ring>(ring: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    assert_eq!((a.rows, a.cols), (b.rows, b.cols), "matrix sum dimension mismatch");
    Matrix::from_fn(a.rows, a.cols, |i, j| ring.add(a.get(i, j), b.get(i, j)))
}

pub fn sub<R: Ring>(ring: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    assert_eq!((a.rows, a.cols), (b.rows, b.cols), "matrix difference dimension mismatch");
    Matrix::from_fn(a.rows, a.cols, |i, j| ring.sub(a.get(i, j), b.get(i, j)))
}

pub fn scale<R: Ring>(ring: &R, c: &R::Elem, a: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    a.map(|x| ring.mul(c, x))
}

pub fn neg<R: Ring>(ring: &R, a: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    a.map(|x| ring.neg(x))
}

pub fn is_zero<R: Ring>(ring: &R, a: &Matrix<R::Elem>) -> bool {
    a.data.iter().all(|x| ring.is_zero(x))
}

pub fn is_identity<R: Ring>(ring: &R, a: &Matrix<R::Elem>) -> bool {
    a.is_square() && *a == identity(ring, a.rows)
}

pub fn vec_add<R: Ring>(ring: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    a.iter().zip(b).map(|(x, y)| ring.add(x, y)).collect()
}

pub fn vec_sub<R: Ring>(ring: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    a.iter().zip(b).map(|(x, y)| ring.sub(x, y)).collect()
}

pub fn vec_scale<R: Ring>(ring: &R, c: &R::Elem, a: &[R::Elem]) -> Vec<R::Elem> {
    a.iter().map(|x| ring.mul(c, x)).collect()
}

pub fn vec_is_zero<R: Ring>(ring: &R, a: &[R::Elem]) -> bool {
    a.iter().all(|x| ring.is_zero(x))
}

/// Linear combination `Σ c_i v_i`.
pub fn combination<R: Ring>(ring: &R, coeffs: &[R::Elem], vecs: &[Vec<R::Elem>], len: usize) -> Vec<R::Elem> {
    let mut out = zero_vector(ring, len);
    for (c, v) in coeffs.iter().zip(vecs) {
        if ring.is_zero(c) {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            if !ring.is_zero(x) {
                *o = ring.add(o, &ring.mul(c, x));
            }
        }
    }
    out
}

/// Kronecker product with the global row-major index convention.
pub fn kronecker<R: Ring>(ring: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    Matrix::from_fn(a.rows * b.rows, a.cols * b.cols, |i, j| {
        let (ai, bi) = (i / b.rows, i % b.rows);
        let (aj, bj) = (j / b.cols, j % b.cols);
        ring.mul(a.get(ai, aj), b.get(bi, bj))
    })
}

pub fn kron_vec<R: Ring>(ring: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(ring.mul(x, y));
        }
    }
    out
}

/// Division-free determinant (Berkowitz), valid over any commutative ring.
pub fn det<R: Ring>(ring: &R, a: &Matrix<R::Elem>) -> R::Elem {
    let cp = charpoly(ring, a);
    if a.rows % 2 == 0 {
        cp[0].clone()
    } else {
        ring.neg(&cp[0])
    }
}

/// Characteristic polynomial `det(x·I − A)` as ascending coefficients.
pub fn charpoly<R: Ring>(ring: &R, a: &Matrix<R::Elem>) -> Vec<R::Elem> {
    // Berkowitz recurrence over leading principal blocks, highest degree first.
    assert!(a.is_square());
    let n = a.rows;
    let mut poly = vec![ring.one()];
    if n == 0 {
        return poly;
    }
    poly.push(ring.neg(a.get(0, 0)));
    for k in 1..n {
        let m = a.submatrix(0..k, 0..k);
        let col: Vec<R::Elem> = (0..k).map(|i| a.get(i, k).clone()).collect();
        let row: Vec<R::Elem> = (0..k).map(|j| a.get(k, j).clone()).collect();
        let mut t = vec![ring.one(), ring.neg(a.get(k, k))];
        let mut v = col;
        for _ in 0..k {
            let rv = row.iter().zip(&v).fold(ring.zero(), |acc, (x, y)| ring.add(&acc, &ring.mul(x, y)));
            t.push(ring.neg(&rv));
            v = mul_vec(ring, &m, &v);
        }
        let mut next = vec![ring.zero(); k + 2];
        for (i, ni) in next.iter_mut().enumerate() {
            let mut acc = ring.zero();
            for (j, pj) in poly.iter().enumerate() {
                if i >= j && i - j < t.len() {
                    acc = ring.add(&acc, &ring.mul(&t[i - j], pj));
                }
            }
            *ni = acc;
        }
        poly = next;
    }
    poly.reverse();
    poly
}

pub fn format_matrix<R: Ring>(ring: &R, a: &Matrix<R::Elem>) -> Vec<Vec<String>> {
    (0..a.rows).map(|i| (0..a.cols).map(|j| ring.format(a.get(i, j))).collect()).collect()
}
