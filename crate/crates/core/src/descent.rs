//! `H`-structures over a finite cover of a finite-dimensional commutative
//! base `O`, their cocycle condition, and gluing through the kernel of the
//! pair `J ⇉ J⊗_O Ō` with `J = Π U_i`.
//!
//! Tensor products over `O` are realized as quotients of tensor products
//! over the field. For charts `U_i` over `O_i`, the overlap spaces are
//! `P_ij = U_i⊗_O O_j` and `Q_ij = U_j⊗_O O_i`, and a transition is a
//! matrix `φ_ij : P_ij → Q_ij` in quotient coordinates.

use std::collections::BTreeMap;

use crate::algebra::{FinAlgebra, Quotient, Subspace};
use crate::comodule::ComoduleAlgebra;
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::matrix::{self, Matrix};
use crate::ring::{Algebra, Field};

/// An `O`-module on `F^n`, given by the action of each basis element of `O`.
type Action<E> = Vec<Matrix<E>>;

/// `V_1⊗_O ⋯ ⊗_O V_r` as a quotient of `V_1⊗_F ⋯ ⊗_F V_r`.
#[derive(Clone, Debug)]
struct OTensor<E> {
    dims: Vec<usize>,
    quotient: Quotient<E>,
}

impl<E: Clone + PartialEq + std::fmt::Debug> OTensor<E> {
    fn new<F: Field<Elem = E>>(f: &F, factors: &[&Action<E>]) -> Result<Self> {
        let dims: Vec<usize> = factors.iter().map(|a| a.first().map_or(0, |m| m.rows())).collect();
        let total: usize = dims.iter().product();
        let mut relations = Vec::new();
        for p in 0..factors.len().saturating_sub(1) {
            for (lb, rb) in factors[p].iter().zip(factors[p + 1].iter()) {
                for idx in 0..total {
                    let digits = split(idx, &dims);
                    let mut v = matrix::zero_vector(f, total);
                    let mut digs = digits.clone();
                    for k in 0..dims[p] {
                        let c = lb.get(k, digits[p]);
                        if !f.is_zero(c) {
                            digs[p] = k;
                            let i = join(&digs, &dims);
                            v[i] = f.add(&v[i], c);
                        }
                    }
                    digs[p] = digits[p];
                    for k in 0..dims[p + 1] {
                        let c = rb.get(k, digits[p + 1]);
                        if !f.is_zero(c) {
                            digs[p + 1] = k;
                            let i = join(&digs, &dims);
                            v[i] = f.sub(&v[i], c);
                        }
                    }
                    if !matrix::vec_is_zero(f, &v) {
                        relations.push(v);
                    }
                }
            }
        }
        Ok(OTensor { dims, quotient: Quotient::new(f, total, &relations)? })
    }

    fn dim(&self) -> usize {
        self.quotient.dim()
    }

    fn total(&self) -> usize {
        self.dims.iter().product()
    }

    fn project<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> Vec<E> {
        self.quotient.project(f, v)
    }

    /// Digits of the representative unit vectors.
    fn reps(&self) -> Vec<Vec<usize>> {
        self.quotient.reps.iter().map(|&r| split(r, &self.dims)).collect()
    }

    /// Matrix (over reps) of a map defined on pure unit tensors.
    fn induced<F: Field<Elem = E>>(
        &self,
        f: &F,
        target: &OTensor<E>,
        mut on_unit: impl FnMut(&[usize]) -> Result<Vec<E>>,
    ) -> Result<Matrix<E>> {
        let mut cols = Vec::with_capacity(self.dim());
        for digits in self.reps() {
            cols.push(target.project(f, &on_unit(&digits)?));
        }
        Ok(Matrix::from_columns(target.dim(), &cols))
    }
}

fn split(mut idx: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for p in (0..dims.len()).rev() {
        out[p] = idx % dims[p];
        idx /= dims[p];
    }
    out
}

fn join(digits: &[usize], dims: &[usize]) -> usize {
    digits.iter().zip(dims).fold(0, |acc, (d, n)| acc * n + d)
}

fn unit_tensor<F: Field>(f: &F, digits: &[usize], dims: &[usize]) -> Vec<F::Elem> {
    matrix::unit_vector(f, dims.iter().product(), join(digits, dims))
}

/// One piece `O → O_i` of a cover.
#[derive(Clone, Debug, PartialEq)]
pub struct CoverPiece<F: Field> {
    pub algebra: FinAlgebra<F>,
    /// Columns are the images of the basis of `O`.
    pub map: Matrix<F::Elem>,
}

/// The cover `O → Ō = Π O_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct Cover<F: Field> {
    pub base: FinAlgebra<F>,
    pub pieces: Vec<CoverPiece<F>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FlatnessReport {
    /// Dimensions of the local factors of `O`.
    pub local_factors: Vec<usize>,
    /// Rank of `Ō` over each local factor, `None` when not free there.
    pub ranks: Vec<Option<usize>>,
}

impl FlatnessReport {
    pub fn faithfully_flat(&self) -> bool {
        self.ranks.iter().all(|r| r.is_some_and(|k| k > 0))
    }
}

/// A local factor `O·e` of a split commutative algebra with its character.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalFactor<E> {
    pub idempotent: Vec<E>,
    pub space: Subspace<E>,
    /// `χ(e_i)` for each basis element of `O`.
    pub character: Vec<E>,
}

/// Decomposition of a commutative algebra into local factors by
/// simultaneous generalized eigenspaces. Requires the multiplication
/// operators to split over the field.
pub fn local_factors<F: Field>(o: &FinAlgebra<F>) -> Result<Vec<LocalFactor<F::Elem>>> {
    let f = o.ring();
    let d = o.dim();
    if !o.is_commutative() {
        return Err(Error::UnsupportedBase("the base must be commutative".into()));
    }
    let mut parts: Vec<(Subspace<F::Elem>, Vec<F::Elem>)> =
        vec![(Subspace::new(d, &(0..d).map(|i| matrix::unit_vector(f, d, i)).collect::<Vec<_>>()), vec![])];
    for b in 0..d {
        let l = o.left_mul_matrix(&o.basis(b));
        let cp = matrix::charpoly(f, &l);
        let mut roots: Vec<F::Elem> = Vec::new();
        for lam in f.roots(&cp).ok_or_else(|| Error::UnsupportedBase("multiplication does not split over the field".into()))? {
            if !roots.contains(&lam) {
                roots.push(lam);
            }
        }
        let mut next = Vec::new();
        for (space, chi) in parts {
            for lam in &roots {
                let shifted = matrix::sub(f, &l, &matrix::scale(f, lam, &matrix::identity(f, d)));
                let mut p = matrix::identity(f, d);
                for _ in 0..d {
                    p = matrix::mul(f, &p, &shifted);
                }
                let gen = f.kernel(&p)?;
                let both = intersect(f, &space, &Subspace { ambient: d, basis: gen })?;
                if both.dim() > 0 {
                    let mut c = chi.clone();
                    c.push(lam.clone());
                    next.push((both, c));
                }
            }
        }
        parts = next;
    }
    let all: Vec<Vec<F::Elem>> = parts.iter().flat_map(|(s, _)| s.vectors()).collect();
    let basis = Matrix::from_columns(d, &all);
    let coords = f.solve(&basis, o.unit())?.ok_or_else(|| Error::UnsupportedBase("generalized eigenspaces do not span".into()))?;
    let mut out = Vec::new();
    let mut offset = 0;
    for (space, character) in parts {
        let k = space.dim();
        let e = matrix::combination(f, &coords[offset..offset + k], &space.vectors(), d);
        offset += k;
        out.push(LocalFactor { idempotent: e, space, character });
    }
    Ok(out)
}

fn intersect<F: Field>(f: &F, a: &Subspace<F::Elem>, b: &Subspace<F::Elem>) -> Result<Subspace<F::Elem>> {
    let stacked = a.basis.hstack(&matrix::neg(f, &b.basis))?;
    let ker = f.kernel(&stacked)?;
    let vs: Vec<Vec<F::Elem>> = ker.columns().iter().map(|c| matrix::mul_vec(f, &a.basis, &c[..a.dim()])).collect();
    let m = Matrix::from_columns(a.ambient, &vs);
    let idx = crate::linalg::independent_columns(f, &m)?;
    Ok(Subspace { ambient: a.ambient, basis: m.select_columns(&idx) })
}

impl<F: Field> Cover<F> {
    pub fn new(base: FinAlgebra<F>, pieces: Vec<CoverPiece<F>>) -> Result<Self> {
        for (i, p) in pieces.iter().enumerate() {
            if !base.is_algebra_map(&p.algebra, &p.map) {
                return Err(Error::StructureInvalid(format!("cover map {i} is not an algebra map")));
            }
        }
        Ok(Cover { base, pieces })
    }

    /// `O` acting on `O_i` through the structure map.
    fn piece_action(&self, i: usize) -> Action<F::Elem> {
        let p = &self.pieces[i];
        (0..self.base.dim()).map(|b| p.algebra.left_mul_matrix(&p.map.col(b))).collect()
    }

    /// Freeness of `Ō` over each local factor `O·e` of `O`.
    pub fn flatness(&self) -> Result<FlatnessReport> {
        let f = self.base.ring();
        let factors = local_factors(&self.base)?;
        let mut ranks = Vec::new();
        let actions: Vec<Action<F::Elem>> = (0..self.pieces.len()).map(|i| self.piece_action(i)).collect();
        let total: usize = self.pieces.iter().map(|p| p.algebra.dim()).sum();
        let act_on_bar = |x: &[F::Elem]| -> Matrix<F::Elem> {
            let mut m = matrix::zeros(f, total, total);
            let mut off = 0;
            for a in &actions {
                let n = a[0].rows();
                let block = a.iter().zip(x).fold(matrix::zeros(f, n, n), |acc, (mb, c)| matrix::add(f, &acc, &matrix::scale(f, c, mb)));
                for r in 0..n {
                    for c in 0..n {
                        m.set(off + r, off + c, block.get(r, c).clone());
                    }
                }
                off += n;
            }
            m
        };
        for lf in &factors {
            let e = act_on_bar(&lf.idempotent);
            let module_dim = f.rank(&e)?;
            // the maximal ideal of O·e is spanned by (e_i − χ(e_i))·e
            let mut images = matrix::zeros(f, total, 0);
            for (b, lam) in lf.character.iter().enumerate() {
                let shifted = self.base.sub(&self.base.basis(b), &self.base.scale(lam, self.base.unit()));
                let x = self.base.mul(&shifted, &lf.idempotent);
                images = images.hstack(&matrix::mul(f, &act_on_bar(&x), &e))?;
            }
            let rank = module_dim - f.rank(&images)?;
            ranks.push((module_dim == rank * lf.space.dim()).then_some(rank));
        }
        Ok(FlatnessReport { local_factors: factors.iter().map(|l| l.space.dim()).collect(), ranks })
    }
}

/// A chart: an `H`-comodule algebra `U_i` with its `O_i`-algebra structure.
#[derive(Clone, Debug, PartialEq)]
pub struct Chart<F: Field + Algebra<F>> {
    pub comodule: ComoduleAlgebra<F, F>,
    /// Algebra map `O_i → U_i`, columns are images of the basis of `O_i`.
    pub structure: Matrix<F::Elem>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HStructure<F: Field + Algebra<F>> {
    pub cover: Cover<F>,
    pub charts: Vec<Chart<F>>,
    /// `φ_ij` for `i < j`; `φ_ji` is its inverse.
    pub transitions: BTreeMap<(usize, usize), Matrix<F::Elem>>,
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct HStructureReport {
    pub faithfully_flat: bool,
    pub flatness_ranks: Vec<Option<usize>>,
    pub charts_galois: Vec<bool>,
    pub transitions_ok: Vec<((usize, usize), bool)>,
    pub cocycle_failure: Option<(usize, usize, usize)>,
    pub failures: Vec<String>,
}

impl HStructureReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl<F: Field + Algebra<F>> HStructure<F> {
    pub fn new(cover: Cover<F>, charts: Vec<Chart<F>>, transitions: BTreeMap<(usize, usize), Matrix<F::Elem>>) -> Result<Self> {
        if charts.len() != cover.pieces.len() {
            return Err(Error::StructureInvalid("one chart per cover piece".into()));
        }
        let s = HStructure { cover, charts, transitions };
        for i in 0..s.charts.len() {
            for j in i + 1..s.charts.len() {
                let (p, q) = (s.p_space(i, j)?, s.p_space(j, i)?);
                match s.transitions.get(&(i, j)) {
                    Some(m) if m.rows() == q.dim() && m.cols() == p.dim() => {}
                    Some(m) => {
                        return Err(Error::StructureInvalid(format!(
                            "transition ({i}, {j}) is {}×{}, expected {}×{}",
                            m.rows(),
                            m.cols(),
                            q.dim(),
                            p.dim()
                        )))
                    }
                    None if p.dim() == 0 && q.dim() == 0 => {}
                    None => return Err(Error::StructureInvalid(format!("missing transition ({i}, {j})"))),
                }
            }
        }
        Ok(s)
    }

    fn field(&self) -> &F {
        self.cover.base.ring()
    }

    pub fn hopf(&self) -> &HopfAlgebra<F> {
        self.charts[0].comodule.hopf()
    }

    /// `O` acting on `U_i` by multiplication with the image of `O → O_i → U_i`.
    fn chart_action(&self, i: usize) -> Action<F::Elem> {
        let f = self.field();
        let c = &self.charts[i];
        let map = matrix::mul(f, &c.structure, &self.cover.pieces[i].map);
        (0..self.cover.base.dim()).map(|b| c.comodule.algebra().left_mul_matrix(&map.col(b))).collect()
    }

    /// `U_i⊗_O O_j`.
    fn p_space(&self, i: usize, j: usize) -> Result<OTensor<F::Elem>> {
        OTensor::new(self.field(), &[&self.chart_action(i), &self.cover.piece_action(j)])
    }

    fn triple(&self, i: usize, j: usize, k: usize) -> Result<OTensor<F::Elem>> {
        OTensor::new(self.field(), &[&self.chart_action(i), &self.cover.piece_action(j), &self.cover.piece_action(k)])
    }

    /// `φ_ij` for any ordered pair of distinct charts.
    pub fn transition(&self, i: usize, j: usize) -> Result<Matrix<F::Elem>> {
        let f = self.field();
        if i < j {
            match self.transitions.get(&(i, j)) {
                Some(m) => Ok(m.clone()),
                None => Ok(matrix::zeros(f, 0, 0)),
            }
        } else {
            let m = self.transition(j, i)?;
            if m.rows() == 0 {
                return Ok(m);
            }
            f.invert_matrix(&m)?.ok_or_else(|| Error::StructureInvalid(format!("transition ({j}, {i}) is not invertible")))
        }
    }

    /// `φ_ij` from a map `U_i⊗_F O_j → U_j⊗_F O_i` on the field-level tensors.
    pub fn transition_from_tensor_map(&self, i: usize, j: usize, m: &Matrix<F::Elem>) -> Result<Matrix<F::Elem>> {
        let f = self.field();
        let (p, q) = (self.p_space(i, j)?, self.p_space(j, i)?);
        p.induced(f, &q, |d| Ok(matrix::mul_vec(f, m, &unit_tensor(f, d, &p.dims))))
    }

    /// `φ_ij(u⊗b) = ψ(u)⊗b` when `O_i` and `O_j` share a basis.
    pub fn transition_from_chart_map(&self, i: usize, j: usize, psi: &Matrix<F::Elem>) -> Result<Matrix<F::Elem>> {
        let f = self.field();
        let m = matrix::kronecker(f, psi, &matrix::identity(f, self.cover.pieces[j].algebra.dim()));
        self.transition_from_tensor_map(i, j, &m)
    }

    /// Multiplication on `U_i⊗_O O_j` in quotient coordinates.
    fn p_product(&self, i: usize, j: usize, p: &OTensor<F::Elem>, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        let f = self.field();
        let alg = self.charts[i].comodule.algebra().tensor(&self.cover.pieces[j].algebra);
        p.project(f, &alg.mul(&p.quotient.lift(f, x), &p.quotient.lift(f, y)))
    }

    /// `ρ⊗id` on `U_i⊗_O O_j`, rows indexed `k·dH + h`.
    fn p_coaction(&self, i: usize, p: &OTensor<F::Elem>) -> Matrix<F::Elem> {
        let f = self.field();
        let dh = self.hopf().dim();
        let rho = self.charts[i].comodule.coaction();
        let mut out = matrix::zeros(f, p.dim() * dh, p.dim());
        for (col, d) in p.reps().iter().enumerate() {
            for h in 0..dh {
                let mut v = matrix::zero_vector(f, p.total());
                for a in 0..p.dims[0] {
                    let c = rho.get(a * dh + h, d[0]);
                    if !f.is_zero(c) {
                        let idx = join(&[a, d[1]], &p.dims);
                        v[idx] = f.add(&v[idx], c);
                    }
                }
                for (k, x) in p.project(f, &v).into_iter().enumerate() {
                    out.set(k * dh + h, col, x);
                }
            }
        }
        out
    }

    fn check_transition(&self, i: usize, j: usize, phi: &Matrix<F::Elem>) -> Result<Vec<String>> {
        let f = self.field();
        let (p, q) = (self.p_space(i, j)?, self.p_space(j, i)?);
        let mut fails = Vec::new();
        if p.dim() != q.dim() || f.invert_matrix(phi)?.is_none() {
            fails.push(format!("φ_{i}{j} is not invertible"));
            return Ok(fails);
        }
        let n = p.dim();
        let basis: Vec<Vec<F::Elem>> = (0..n).map(|k| matrix::unit_vector(f, n, k)).collect();
        'mult: for x in &basis {
            for y in &basis {
                let lhs = matrix::mul_vec(f, phi, &self.p_product(i, j, &p, x, y));
                let rhs = self.p_product(j, i, &q, &matrix::mul_vec(f, phi, x), &matrix::mul_vec(f, phi, y));
                if lhs != rhs {
                    fails.push(format!("φ_{i}{j} is not multiplicative"));
                    break 'mult;
                }
            }
        }
        let dh = self.hopf().dim();
        let lhs = matrix::mul(f, &self.p_coaction(j, &q), phi);
        let rhs = matrix::mul(f, &matrix::kronecker(f, phi, &matrix::identity(f, dh)), &self.p_coaction(i, &p));
        if lhs != rhs {
            fails.push(format!("φ_{i}{j} is not a comodule map"));
        }
        // φ(β_i(a)⊗b) = β_j(b)⊗a
        let (oi, oj) = (&self.cover.pieces[i].algebra, &self.cover.pieces[j].algebra);
        let (bi, bj) = (&self.charts[i].structure, &self.charts[j].structure);
        'overlap: for a in 0..oi.dim() {
            for b in 0..oj.dim() {
                let src = p.project(f, &matrix::kron_vec(f, &bi.col(a), &oj.basis(b)));
                let dst = q.project(f, &matrix::kron_vec(f, &bj.col(b), &oi.basis(a)));
                if matrix::mul_vec(f, phi, &src) != dst {
                    fails.push(format!("φ_{i}{j} is not the identity on the overlap"));
                    break 'overlap;
                }
            }
        }
        Ok(fails)
    }

    /// `φ_ij⊗id_k : U_i⊗O_j⊗O_k → U_j⊗O_i⊗O_k`.
    fn extend(&self, i: usize, j: usize, k: usize) -> Result<Matrix<F::Elem>> {
        let f = self.field();
        let (p, q) = (self.p_space(i, j)?, self.p_space(j, i)?);
        let phi = self.transition(i, j)?;
        let (src, dst) = (self.triple(i, j, k)?, self.triple(j, i, k)?);
        let ok = self.cover.pieces[k].algebra.dim();
        src.induced(f, &dst, |d| {
            let pc = p.project(f, &unit_tensor(f, &d[..2], &p.dims));
            let image = q.quotient.lift(f, &matrix::mul_vec(f, &phi, &pc));
            Ok(matrix::kron_vec(f, &image, &matrix::unit_vector(f, ok, d[2])))
        })
    }

    /// `U_a⊗O_b⊗O_c → U_a⊗O_c⊗O_b`.
    fn swap(&self, a: usize, b: usize, c: usize) -> Result<Matrix<F::Elem>> {
        let f = self.field();
        let (src, dst) = (self.triple(a, b, c)?, self.triple(a, c, b)?);
        src.induced(f, &dst, |d| Ok(unit_tensor(f, &[d[0], d[2], d[1]], &dst.dims)))
    }

    /// `(φ_jk⊗id)∘(φ_ij⊗id) = φ_ik⊗id` on `U_i⊗O_j⊗O_k`.
    fn cocycle_holds(&self, i: usize, j: usize, k: usize) -> Result<bool> {
        let f = self.field();
        if self.triple(i, j, k)?.dim() == 0 {
            return Ok(true);
        }
        let a = self.extend(i, j, k)?;
        let b = matrix::mul(f, &self.extend(j, k, i)?, &self.swap(j, i, k)?);
        let lhs = matrix::mul(f, &b, &a);
        let c = matrix::mul(f, &self.extend(i, k, j)?, &self.swap(i, j, k)?);
        let rhs = matrix::mul(f, &self.swap(k, i, j)?, &c);
        Ok(lhs == rhs)
    }

    pub fn verify(&self) -> Result<HStructureReport> {
        let mut rep = HStructureReport::default();
        let flat = self.cover.flatness()?;
        rep.faithfully_flat = flat.faithfully_flat();
        rep.flatness_ranks = flat.ranks.clone();
        if !rep.faithfully_flat {
            rep.failures.push(format!("the cover is not faithfully flat (ranks {:?})", flat.ranks));
        }
        let f = self.field();
        for (i, c) in self.charts.iter().enumerate() {
            let oi = &self.cover.pieces[i].algebra;
            let u = &c.comodule;
            let mut ok = oi.is_algebra_map(u.algebra(), &c.structure);
            let inv = u.invariants()?;
            let image = Subspace::new(u.dim(), &c.structure.columns());
            ok &= inv.same_as(f, &image)? && u.verify()?.passed() && u.is_galois()?.is_galois();
            if !ok {
                rep.failures.push(format!("chart {i} is not a Galois extension of its cover piece"));
            }
            rep.charts_galois.push(ok);
        }
        let n = self.charts.len();
        for i in 0..n {
            for j in i + 1..n {
                let phi = self.transition(i, j)?;
                let fails = if phi.rows() == 0 { vec![] } else { self.check_transition(i, j, &phi)? };
                rep.transitions_ok.push(((i, j), fails.is_empty()));
                rep.failures.extend(fails);
            }
        }
        'outer: for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if i != j && j != k && i != k && !self.cocycle_holds(i, j, k)? {
                        rep.cocycle_failure = Some((i, j, k));
                        rep.failures.push(format!("cocycle condition fails on ({i}, {j}, {k})"));
                        break 'outer;
                    }
                }
            }
        }
        Ok(rep)
    }

    /// `J = Π U_i` as an algebra with its coaction.
    fn product_chart(&self) -> Result<ComoduleAlgebra<F, F>> {
        let f = self.field();
        let dh = self.hopf().dim();
        let mut alg = self.charts[0].comodule.algebra().clone();
        for c in &self.charts[1..] {
            alg = alg.product(c.comodule.algebra());
        }
        let total = alg.dim();
        let mut rho = matrix::zeros(f, total * dh, total);
        let mut off = 0;
        for c in &self.charts {
            let r = c.comodule.coaction();
            let d = c.comodule.dim();
            for col in 0..d {
                for row in 0..d * dh {
                    let (k, h) = (row / dh, row % dh);
                    rho.set((off + k) * dh + h, off + col, r.get(row, col).clone());
                }
            }
            off += d;
        }
        ComoduleAlgebra::new(alg, self.hopf().clone(), rho)
    }

    fn offsets(&self) -> Vec<usize> {
        let mut out = vec![0];
        for c in &self.charts {
            out.push(out.last().unwrap() + c.comodule.dim());
        }
        out
    }

    /// The glued extension `U = {x ∈ J : φ_ij(x_i⊗1) = x_j⊗1}`.
    pub fn glue(&self) -> Result<Glued<F>> {
        let rep = self.verify()?;
        if !rep.passed() {
            return Err(Error::StructureInvalid(rep.failures.join("; ")));
        }
        let f = self.field();
        let j_alg = self.product_chart()?;
        let total = j_alg.dim();
        let offs = self.offsets();
        let n = self.charts.len();
        let mut eqs = matrix::zeros(f, 0, total);
        for i in 0..n {
            for j in i + 1..n {
                let (p, q) = (self.p_space(i, j)?, self.p_space(j, i)?);
                if p.dim() == 0 {
                    continue;
                }
                let phi = self.transition(i, j)?;
                let one_j = self.cover.pieces[j].algebra.unit().to_vec();
                let one_i = self.cover.pieces[i].algebra.unit().to_vec();
                let mut block = matrix::zeros(f, q.dim(), total);
                for x in 0..self.charts[i].comodule.dim() {
                    let e = matrix::unit_vector(f, self.charts[i].comodule.dim(), x);
                    let v = matrix::mul_vec(f, &phi, &p.project(f, &matrix::kron_vec(f, &e, &one_j)));
                    for (r, c) in v.into_iter().enumerate() {
                        block.set(r, offs[i] + x, c);
                    }
                }
                for y in 0..self.charts[j].comodule.dim() {
                    let e = matrix::unit_vector(f, self.charts[j].comodule.dim(), y);
                    let v = q.project(f, &matrix::kron_vec(f, &e, &one_i));
                    for (r, c) in v.into_iter().enumerate() {
                        let s = f.sub(block.get(r, offs[j] + y), &c);
                        block.set(r, offs[j] + y, s);
                    }
                }
                eqs = eqs.vstack(&block)?;
            }
        }
        let sub = Subspace { ambient: total, basis: f.kernel(&eqs)? };
        let subalgebra = j_alg.algebra().is_subalgebra(&sub)?;
        if !subalgebra {
            return Err(Error::StructureInvalid("the kernel of the pair is not a subalgebra".into()));
        }
        let alg = j_alg.algebra().restrict(&sub)?;
        let dh = self.hopf().dim();
        let mut rho = matrix::zeros(f, sub.dim() * dh, sub.dim());
        for (col, v) in sub.vectors().iter().enumerate() {
            let image = j_alg.rho(v);
            for h in 0..dh {
                let comp: Vec<F::Elem> = (0..total).map(|k| image[k * dh + h].clone()).collect();
                let c =
                    sub.coords(f, &comp)?.ok_or_else(|| Error::StructureInvalid("the kernel of the pair is not a subcomodule".into()))?;
                for (k, x) in c.into_iter().enumerate() {
                    rho.set(k * dh + h, col, x);
                }
            }
        }
        let u = ComoduleAlgebra::new(alg, self.hopf().clone(), rho)?;
        // O → J through every chart, then into U coordinates
        let mut base_cols = Vec::new();
        for b in 0..self.cover.base.dim() {
            let mut v = Vec::with_capacity(total);
            for (i, c) in self.charts.iter().enumerate() {
                let oi = matrix::mul_vec(f, &self.cover.pieces[i].map, &self.cover.base.basis(b));
                v.extend(matrix::mul_vec(f, &c.structure, &oi));
            }
            base_cols.push(sub.coords(f, &v)?.ok_or_else(|| Error::StructureInvalid("O does not map into the glued algebra".into()))?);
        }
        let base_map = Matrix::from_columns(u.dim(), &base_cols);
        let inv = u.invariants()?;
        let invariants_equal_base = inv.same_as(f, &Subspace::new(u.dim(), &base_cols))?;
        let galois = u.is_galois()?.is_galois();
        let mut localizations = Vec::new();
        for i in 0..n {
            localizations.push(self.localization_iso(&u, &sub, &base_map, i)?);
        }
        Ok(Glued { comodule: u, embedding: sub.basis, base_map, subalgebra, invariants_equal_base, galois, localizations })
    }

    /// The map `U⊗_O O_i → U_i, u⊗a ↦ u_i·β_i(a)`, when it is an
    /// isomorphism of comodule algebras.
    fn localization_iso(
        &self,
        u: &ComoduleAlgebra<F, F>,
        sub: &Subspace<F::Elem>,
        base_map: &Matrix<F::Elem>,
        i: usize,
    ) -> Result<Option<Matrix<F::Elem>>> {
        let f = self.field();
        let ua: Action<F::Elem> = (0..self.cover.base.dim()).map(|b| u.algebra().left_mul_matrix(&base_map.col(b))).collect();
        let t = OTensor::new(f, &[&ua, &self.cover.piece_action(i)])?;
        let chart = &self.charts[i].comodule;
        let offs = self.offsets();
        let vs = sub.vectors();
        let mut cols = Vec::with_capacity(t.dim());
        for d in t.reps() {
            let ui: Vec<F::Elem> = vs[d[0]][offs[i]..offs[i + 1]].to_vec();
            let a = self.cover.pieces[i].algebra.basis(d[1]);
            cols.push(chart.algebra().mul(&ui, &matrix::mul_vec(f, &self.charts[i].structure, &a)));
        }
        let m = Matrix::from_columns(chart.dim(), &cols);
        if m.rows() != m.cols() || f.invert_matrix(&m)?.is_none() {
            return Ok(None);
        }
        let prod = u.algebra().tensor(&self.cover.pieces[i].algebra);
        let n = t.dim();
        for x in 0..n {
            for y in 0..n {
                let ex = t.quotient.lift(f, &matrix::unit_vector(f, n, x));
                let ey = t.quotient.lift(f, &matrix::unit_vector(f, n, y));
                let xy = t.project(f, &prod.mul(&ex, &ey));
                let lhs = matrix::mul_vec(f, &m, &xy);
                let rhs = chart.algebra().mul(&m.col(x), &m.col(y));
                if lhs != rhs {
                    return Ok(None);
                }
            }
        }
        let dh = self.hopf().dim();
        let mut src_rho = matrix::zeros(f, n * dh, n);
        for (col, d) in t.reps().iter().enumerate() {
            for h in 0..dh {
                let mut v = matrix::zero_vector(f, t.total());
                for a in 0..t.dims[0] {
                    let c = u.coaction().get(a * dh + h, d[0]);
                    if !f.is_zero(c) {
                        let idx = join(&[a, d[1]], &t.dims);
                        v[idx] = f.add(&v[idx], c);
                    }
                }
                for (k, x) in t.project(f, &v).into_iter().enumerate() {
                    src_rho.set(k * dh + h, col, x);
                }
            }
        }
        let lhs = matrix::mul(f, chart.coaction(), &m);
        let rhs = matrix::mul(f, &matrix::kronecker(f, &m, &matrix::identity(f, dh)), &src_rho);
        Ok((lhs == rhs).then_some(m))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Glued<F: Field + Algebra<F>> {
    pub comodule: ComoduleAlgebra<F, F>,
    /// Columns are the basis of `U` inside `J = Π U_i`.
    pub embedding: Matrix<F::Elem>,
    /// `O → U`.
    pub base_map: Matrix<F::Elem>,
    pub subalgebra: bool,
    pub invariants_equal_base: bool,
    pub galois: bool,
    /// Verified isomorphisms `U⊗_O O_i → U_i`.
    pub localizations: Vec<Option<Matrix<F::Elem>>>,
}

impl<F: Field + Algebra<F>> Glued<F> {
    pub fn passed(&self) -> bool {
        self.subalgebra && self.invariants_equal_base && self.galois && self.localizations.iter().all(Option::is_some)
    }
}

/// `O[t]/(t^n − c)` over a commutative `O`, graded by `Z_n` through
/// `t ↦ t⊗g`, with basis `o_a t^s` indexed `a·n + s`.
pub fn cyclic_chart<F: Field + Algebra<F>>(o: &FinAlgebra<F>, n: usize, c: &[F::Elem]) -> Result<Chart<F>> {
    let f = o.ring().clone();
    let d = o.dim();
    let alg = FinAlgebra::from_products(f.clone(), d * n, matrix::unit_vector(&f, d * n, 0), |x, y| {
        let (a, s) = (x / n, x % n);
        let (b, t) = (y / n, y % n);
        let mut coeff = o.basis_product(a, b);
        if s + t >= n {
            coeff = o.mul(&coeff, c);
        }
        let e = (s + t) % n;
        let mut out = matrix::zero_vector(&f, d * n);
        for (k, v) in coeff.into_iter().enumerate() {
            out[k * n + e] = v;
        }
        out
    })?;
    let g = crate::group::Group::cyclic(n)?;
    let hopf = HopfAlgebra::group_algebra(f.clone(), &g)?;
    let mut rho = matrix::zeros(&f, d * n * n, d * n);
    for x in 0..d * n {
        rho.set(x * n + x % n, x, f.one());
    }
    let comodule = ComoduleAlgebra::new(alg, hopf, rho)?;
    let structure = Matrix::from_fn(d * n, d, |row, a| if row == a * n { f.one() } else { f.zero() });
    Ok(Chart { comodule, structure })
}

/// `O = F×F` covered by its two factors, with one chart on each.
pub fn product_base_example<F: Field + Algebra<F>>(f: F, c1: F::Elem, c2: F::Elem) -> Result<HStructure<F>> {
    let point = FinAlgebra::from_products(f.clone(), 1, vec![f.one()], |_, _| vec![f.one()])?;
    let base = point.product(&point);
    let proj = |k: usize| Matrix::from_fn(1, 2, |_, j| if j == k { f.one() } else { f.zero() });
    let cover =
        Cover::new(base, vec![CoverPiece { algebra: point.clone(), map: proj(0) }, CoverPiece { algebra: point.clone(), map: proj(1) }])?;
    let charts = vec![cyclic_chart(&point, 2, &[c1])?, cyclic_chart(&point, 2, &[c2])?];
    HStructure::new(cover, charts, BTreeMap::new())
}

/// `O = F[ε]/(ε²)` covered by two copies of itself; both charts are
/// `O[t]/(t² − (1 + ε))`, glued by `t ↦ −t`.
pub fn jet_base_example<F: Field + Algebra<F>>(f: F) -> Result<HStructure<F>> {
    let base = FinAlgebra::truncated_polynomials(f.clone(), 2);
    let id = matrix::identity(&f, 2);
    let piece = CoverPiece { algebra: base.clone(), map: id };
    let cover = Cover::new(base.clone(), vec![piece.clone(), piece])?;
    let c = vec![f.one(), f.one()];
    let chart = cyclic_chart(&base, 2, &c)?;
    let sign = matrix::diagonal(&f, &[f.one(), f.neg(&f.one()), f.one(), f.neg(&f.one())]);
    let unglued = HStructure { cover, charts: vec![chart.clone(), chart], transitions: BTreeMap::new() };
    let phi = unglued.transition_from_chart_map(0, 1, &sign)?;
    HStructure::new(unglued.cover, unglued.charts, BTreeMap::from([((0, 1), phi)]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Rationals;
    use crate::ring::Ring;

    #[test]
    fn product_base_glues_to_the_product() {
        let q = Rationals;
        let s = product_base_example(q, q.from_i64(1), q.from_i64(-1)).unwrap();
        assert!(s.verify().unwrap().passed());
        let g = s.glue().unwrap();
        assert!(g.passed());
        assert_eq!(g.comodule.dim(), 4);
    }

    #[test]
    fn jet_base_round_trip() {
        let s = jet_base_example(Rationals).unwrap();
        let rep = s.verify().unwrap();
        assert!(rep.passed(), "{:?}", rep.failures);
        assert_eq!(rep.flatness_ranks, vec![Some(2)]);
        let g = s.glue().unwrap();
        assert!(g.passed());
        assert_eq!(g.comodule.dim(), 4);
    }
}
