//! Brute-force reference computations, independent of the library's linear
//! algebra and search code.
#![allow(dead_code)]

use std::collections::BTreeSet;

use num::{BigRational, One, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// Rank by plain Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<Q>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = &rows[i][c] / &pivot;
                for k in c..cols {
                    let t = &f * &rows[r][k];
                    rows[i][k] -= t;
                }
            }
        }
        r += 1;
    }
    r
}

/// A finite-dimensional algebra by its structure constants `e_i e_j = Σ c[i][j][k] e_k`.
pub struct Algebra {
    pub c: Vec<Vec<Vec<Q>>>,
}

impl Algebra {
    pub fn dim(&self) -> usize {
        self.c.len()
    }

    pub fn matrices(n: usize) -> Self {
        let d = n * n;
        let c = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        let mut v = vec![q(0); d];
                        if i % n == j / n {
                            v[(i / n) * n + j % n] = q(1);
                        }
                        v
                    })
                    .collect()
            })
            .collect();
        Algebra { c }
    }

    pub fn truncated(n: usize) -> Self {
        let c = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut v = vec![q(0); n];
                        if i + j < n {
                            v[i + j] = q(1);
                        }
                        v
                    })
                    .collect()
            })
            .collect();
        Algebra { c }
    }

    pub fn cyclic_group(n: usize) -> Self {
        let c = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut v = vec![q(0); n];
                        v[(i + j) % n] = q(1);
                        v
                    })
                    .collect()
            })
            .collect();
        Algebra { c }
    }

    /// `x ↦ e_i x` as `m[row][col]`.
    pub fn left(&self, i: usize) -> Vec<Vec<Q>> {
        let d = self.dim();
        (0..d).map(|k| (0..d).map(|j| self.c[i][j][k].clone()).collect()).collect()
    }

    pub fn right(&self, i: usize) -> Vec<Vec<Q>> {
        let d = self.dim();
        (0..d).map(|k| (0..d).map(|j| self.c[j][i][k].clone()).collect()).collect()
    }
}

/// `dim Der(A, M) − dim Inn(A, M)` where `M = k^m` carries left and right
/// actions of the basis elements.
pub fn hh1_dimension(a: &Algebra, left: &[Vec<Vec<Q>>], right: &[Vec<Vec<Q>>]) -> usize {
    let (n, m) = (a.dim(), left[0].len());
    // unknowns D[i][r] at index i*m + r
    let mut eqs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for r in 0..m {
                let mut row = vec![q(0); n * m];
                for k in 0..n {
                    row[k * m + r] += a.c[i][j][k].clone();
                }
                for s in 0..m {
                    row[j * m + s] -= left[i][r][s].clone();
                    row[i * m + s] -= right[j][r][s].clone();
                }
                eqs.push(row);
            }
        }
    }
    let derivations = n * m - rank(eqs);
    // inner derivations: the image of v ↦ (e_i v − v e_i)_i
    let inner: Vec<Vec<Q>> = (0..m)
        .map(|s| {
            let mut col = Vec::new();
            for i in 0..n {
                for r in 0..m {
                    col.push(&left[i][r][s] - &right[i][r][s]);
                }
            }
            col
        })
        .collect();
    derivations - rank(inner)
}

pub fn regular_hh1(a: &Algebra) -> usize {
    let left: Vec<_> = (0..a.dim()).map(|i| a.left(i)).collect();
    let right: Vec<_> = (0..a.dim()).map(|i| a.right(i)).collect();
    hh1_dimension(a, &left, &right)
}

pub fn scalar_matrix(m: usize, x: Q) -> Vec<Vec<Q>> {
    (0..m).map(|r| (0..m).map(|s| if r == s { x.clone() } else { q(0) }).collect()).collect()
}

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&x| a[x]).collect()
}

fn all_permutations(m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_permutations(m - 1) {
        for pos in 0..m {
            let mut q: Vec<usize> = p.clone();
            q.insert(pos, m - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        for mut rest in combinations(&items[i + 1..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

/// Subgroups of `S_m` of order `m` acting transitively and normalized by
/// every permutation in `lambda`, found by testing every subset.
pub fn normalized_regular_subgroups(m: usize, lambda: &[Vec<usize>]) -> Vec<BTreeSet<Vec<usize>>> {
    let perms = all_permutations(m);
    let id: Vec<usize> = (0..m).collect();
    let others: Vec<usize> = (0..perms.len()).filter(|&i| perms[i] != id).collect();
    let mut out = Vec::new();
    for pick in combinations(&others, m - 1) {
        let mut set: BTreeSet<Vec<usize>> = pick.iter().map(|&i| perms[i].clone()).collect();
        set.insert(id.clone());
        let closed = set.iter().all(|a| set.iter().all(|b| set.contains(&compose(a, b))));
        let transitive = set.iter().map(|p| p[0]).collect::<BTreeSet<_>>().len() == m;
        let normalized = lambda.iter().all(|g| {
            let mut gi = vec![0; m];
            for (i, &x) in g.iter().enumerate() {
                gi[x] = i;
            }
            set.iter().all(|p| set.contains(&compose(g, &compose(p, &gi))))
        });
        if closed && transitive && normalized {
            out.push(set);
        }
    }
    out
}

/// The left regular representation of `Z_n` on itself.
pub fn cyclic_regular(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|x| (a + x) % n).collect()).collect()
}

/// `S_3` acting on the cosets `{e,(12)}, {(13),(123)}, {(23),(132)}` of `<(12)>`,
/// generated by `(12)` and `(123)`.
pub fn s3_on_cosets() -> Vec<Vec<usize>> {
    // (12) fixes the first coset and swaps the other two; (123) is a 3-cycle
    let t = vec![0, 2, 1];
    let c = vec![1, 2, 0];
    let mut group: BTreeSet<Vec<usize>> = BTreeSet::new();
    group.insert(vec![0, 1, 2]);
    loop {
        let before = group.len();
        let now: Vec<_> = group.iter().cloned().collect();
        for a in &now {
            group.insert(compose(a, &t));
            group.insert(compose(a, &c));
        }
        if group.len() == before {
            break;
        }
    }
    group.into_iter().collect()
}

pub fn is_one(x: &Q) -> bool {
    x.is_one()
}
