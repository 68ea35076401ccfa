//! Comodule algebras with central invariants and the Galois test.

use crate::algebra::{AlgebraReport, FinAlgebra, Quotient, Subspace};
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::matrix::{self, Matrix};
use crate::ring::{Algebra, Field, Ring};

/// A right `H`-comodule algebra `U`, free over the base ring with a fixed
/// basis. Column `j` of `coaction` is `ρ(e_j)` in `U⊗H` coordinates
/// (index `i·dim H + h`).
#[derive(Clone, Debug, PartialEq)]
pub struct ComoduleAlgebra<R: Algebra<F>, F: Field> {
    algebra: FinAlgebra<R>,
    hopf: HopfAlgebra<F>,
    coaction: Matrix<R::Elem>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ComoduleReport {
    pub algebra: AlgebraReport,
    pub counital: bool,
    pub coassociative: bool,
    pub multiplicative: bool,
    pub unit_preserved: bool,
    pub central_invariants: bool,
    pub failures: Vec<String>,
}

impl ComoduleReport {
    pub fn passed(&self) -> bool {
        self.algebra.passed()
            && self.counital
            && self.coassociative
            && self.multiplicative
            && self.unit_preserved
            && self.central_invariants
    }
}

/// `can` on `U⊗_O U`, realized as a quotient of `U⊗U` (index `x·dim U + y`).
#[derive(Clone, Debug)]
pub struct CanonicalMap<E> {
    pub quotient: Quotient<E>,
    /// `dim U·dim H × quotient.dim()` in quotient coordinates.
    pub matrix: Matrix<E>,
    /// `can` on all of `U⊗U`.
    pub full: Matrix<E>,
    pub descends: bool,
}

impl<E> CanonicalMap<E> {
    pub fn source_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn target_dim(&self) -> usize {
        self.matrix.rows()
    }
}

/// Rows `can⁻¹(1⊗h_i)` as representatives in `U⊗U`.
#[derive(Clone, Debug, PartialEq)]
pub struct GaloisCertificate<E> {
    pub rows: Vec<Vec<E>>,
    pub source_dim: usize,
    pub target_dim: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FailureWitness<E> {
    /// An element of `U⊗H` outside the image of `can`.
    pub not_in_image: Option<Vec<E>>,
    /// A nonzero element of the kernel, in `U⊗U` coordinates.
    pub kernel_vector: Option<Vec<E>>,
    pub rank: usize,
    pub source_dim: usize,
    pub target_dim: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub enum GaloisOutcome<E> {
    Galois(GaloisCertificate<E>),
    NotGalois(FailureWitness<E>),
}

impl<E> GaloisOutcome<E> {
    pub fn is_galois(&self) -> bool {
        matches!(self, GaloisOutcome::Galois(_))
    }

    pub fn certificate(&self) -> Option<&GaloisCertificate<E>> {
        match self {
            GaloisOutcome::Galois(c) => Some(c),
            GaloisOutcome::NotGalois(_) => None,
        }
    }
}

impl<R: Algebra<F>, F: Field> ComoduleAlgebra<R, F> {
    pub fn new(algebra: FinAlgebra<R>, hopf: HopfAlgebra<F>, coaction: Matrix<R::Elem>) -> Result<Self> {
        let (du, dh) = (algebra.dim(), hopf.dim());
        if coaction.rows() != du * dh || coaction.cols() != du {
            return Err(Error::DimensionMismatch(format!(
                "coaction must be {}×{du}, got {}×{}",
                du * dh,
                coaction.rows(),
                coaction.cols()
            )));
        }
        Ok(ComoduleAlgebra { algebra, hopf, coaction })
    }

    /// `O⊗H` with `ρ = id⊗Δ`, basis index `o·dim H + h`.
    pub fn trivial_extension(base: &FinAlgebra<R>, hopf: HopfAlgebra<F>) -> Result<Self> {
        let r = base.ring();
        let h_alg = hopf_over(r, &hopf)?;
        let algebra = base.tensor(&h_alg);
        let (dob, dh) = (base.dim(), hopf.dim());
        let du = dob * dh;
        let co = hopf.coalgebra();
        let coaction = Matrix::from_fn(du * dh, du, |row, col| {
            let (i, b) = (row / dh, row % dh);
            let (o, a) = (i / dh, i % dh);
            let (o2, h) = (col / dh, col % dh);
            if o != o2 {
                return r.zero();
            }
            r.scalar(co.constant(h, a, b))
        });
        ComoduleAlgebra::new(algebra, hopf, coaction)
    }

    /// `H` as a comodule algebra over itself, base ring `R`.
    pub fn regular(ring: R, hopf: HopfAlgebra<F>) -> Result<Self> {
        let one = FinAlgebra::new(ring.clone(), 1, vec![ring.one()], vec![ring.one()])?;
        ComoduleAlgebra::trivial_extension(&one, hopf)
    }

    pub fn algebra(&self) -> &FinAlgebra<R> {
        &self.algebra
    }

    pub fn hopf(&self) -> &HopfAlgebra<F> {
        &self.hopf
    }

    pub fn coaction(&self) -> &Matrix<R::Elem> {
        &self.coaction
    }

    pub fn ring(&self) -> &R {
        self.algebra.ring()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn rho(&self, x: &[R::Elem]) -> Vec<R::Elem> {
        matrix::mul_vec(self.ring(), &self.coaction, x)
    }

    /// `H` with its structure constants moved into the base ring.
    pub fn hopf_algebra_over_base(&self) -> Result<FinAlgebra<R>> {
        hopf_over(self.ring(), &self.hopf)
    }

    /// `U⊗H` as an algebra over the base ring.
    pub fn tensor_with_hopf(&self) -> Result<FinAlgebra<R>> {
        Ok(self.algebra.tensor(&self.hopf_algebra_over_base()?))
    }

    /// Entrywise base change along a ring map.
    pub fn map_ring<S: Algebra<F>>(&self, target: S, f: impl Fn(&R::Elem) -> Result<S::Elem>) -> Result<ComoduleAlgebra<S, F>> {
        let algebra = self.algebra.map_ring(target, &f)?;
        let entries = self.coaction.entries().iter().map(&f).collect::<Result<Vec<_>>>()?;
        let coaction = Matrix::from_vec(self.coaction.rows(), self.coaction.cols(), entries);
        ComoduleAlgebra::new(algebra, self.hopf.clone(), coaction)
    }

    pub fn verify(&self) -> Result<ComoduleReport> {
        let r = self.ring();
        let (du, dh) = (self.dim(), self.hopf.dim());
        let mut failures = Vec::new();
        let algebra = self.algebra.verify();
        if !algebra.passed() {
            failures.push(format!("U is not an associative unital algebra: {algebra:?}"));
        }

        let eps: Vec<R::Elem> = self.hopf.counit().iter().map(|c| r.scalar(c)).collect();
        let id_eps = matrix::kronecker(r, &matrix::identity(r, du), &Matrix::from_vec(1, dh, eps));
        let counital = matrix::is_identity(r, &matrix::mul(r, &id_eps, &self.coaction));
        if !counital {
            failures.push("x₀ε(x₁) ≠ x".into());
        }

        let delta = self.hopf.coalgebra().comult_matrix().map(|c| r.scalar(c));
        let lhs = matrix::mul(r, &matrix::kronecker(r, &self.coaction, &matrix::identity(r, dh)), &self.coaction);
        let rhs = matrix::mul(r, &matrix::kronecker(r, &matrix::identity(r, du), &delta), &self.coaction);
        let coassociative = lhs == rhs;
        if !coassociative {
            failures.push("(ρ⊗id)ρ ≠ (id⊗Δ)ρ".into());
        }

        let uh = self.tensor_with_hopf()?;
        let unit_preserved = self.rho(self.algebra.unit()) == *uh.unit();
        if !unit_preserved {
            failures.push("ρ(1) ≠ 1⊗1".into());
        }
        let images = self.coaction.columns();
        let mut multiplicative = true;
        'outer: for i in 0..du {
            for j in 0..du {
                if self.rho(&self.algebra.basis_product(i, j)) != uh.mul(&images[i], &images[j]) {
                    failures.push(format!("ρ(e_{i}e_{j}) ≠ ρ(e_{i})ρ(e_{j})"));
                    multiplicative = false;
                    break 'outer;
                }
            }
        }

        let mut central_invariants = true;
        for z in self.invariants()?.vectors() {
            for i in 0..du {
                let e = self.algebra.basis(i);
                if self.algebra.mul(&z, &e) != self.algebra.mul(&e, &z) {
                    failures.push(format!("invariant {z:?} does not commute with e_{i}"));
                    central_invariants = false;
                }
            }
        }
        Ok(ComoduleReport { algebra, counital, coassociative, multiplicative, unit_preserved, central_invariants, failures })
    }

    /// Matrix of `x ↦ x⊗1`.
    fn tensor_one(&self) -> Matrix<R::Elem> {
        let r = self.ring();
        let one: Vec<R::Elem> = self.hopf.unit().iter().map(|c| r.scalar(c)).collect();
        matrix::kronecker(r, &matrix::identity(r, self.dim()), &Matrix::from_vec(self.hopf.dim(), 1, one))
    }

    /// `U^H = ker(ρ − (·⊗1))`.
    pub fn invariants(&self) -> Result<Subspace<R::Elem>> {
        let r = self.ring();
        let m = matrix::sub(r, &self.coaction, &self.tensor_one());
        Ok(Subspace { ambient: self.dim(), basis: r.kernel(&m)? })
    }

    /// Whether `U^H` is exactly the multiples of 1.
    pub fn invariants_are_scalars(&self) -> Result<bool> {
        let ones = Subspace::new(self.dim(), &[self.algebra.unit().to_vec()]);
        self.invariants()?.same_as(self.ring(), &ones)
    }

    /// Matrix of `u ↦ f·u = u₀f(u₁)` for `f ∈ H*`.
    pub fn hstar_action_matrix(&self, f: &[F::Elem]) -> Matrix<R::Elem> {
        let r = self.ring();
        let fv: Vec<R::Elem> = f.iter().map(|c| r.scalar(c)).collect();
        let ev = matrix::kronecker(r, &matrix::identity(r, self.dim()), &Matrix::from_vec(1, fv.len(), fv));
        matrix::mul(r, &ev, &self.coaction)
    }

    pub fn hstar_action(&self, f: &[F::Elem], u: &[R::Elem]) -> Vec<R::Elem> {
        matrix::mul_vec(self.ring(), &self.hstar_action_matrix(f), u)
    }

    /// `can(e_x⊗e_y) = e_x y₀ ⊗ y₁` on `U⊗U`.
    fn canonical_full(&self) -> Matrix<R::Elem> {
        let r = self.ring();
        let (du, dh) = (self.dim(), self.hopf.dim());
        let mut m = matrix::zeros(r, du * dh, du * du);
        for x in 0..du {
            for y in 0..du {
                let col = x * du + y;
                for k in 0..du {
                    let xk = self.algebra.basis_product(x, k);
                    for h in 0..dh {
                        let c = self.coaction.get(k * dh + h, y);
                        if r.is_zero(c) {
                            continue;
                        }
                        for (i, a) in xk.iter().enumerate() {
                            if r.is_zero(a) {
                                continue;
                            }
                            let row = i * dh + h;
                            let v = r.add(m.get(row, col), &r.mul(a, c));
                            m.set(row, col, v);
                        }
                    }
                }
            }
        }
        m
    }

    /// The canonical map on `U⊗_O U` with `O = U^H`.
    pub fn canonical_map(&self) -> Result<CanonicalMap<R::Elem>> {
        let r = self.ring();
        let du = self.dim();
        let invariants = self.invariants()?.vectors();
        let mut relations = Vec::new();
        for o in &invariants {
            for x in 0..du {
                let xo = self.algebra.mul(&self.algebra.basis(x), o);
                for y in 0..du {
                    let oy = self.algebra.mul(o, &self.algebra.basis(y));
                    let rel = matrix::vec_sub(
                        r,
                        &matrix::kron_vec(r, &xo, &self.algebra.basis(y)),
                        &matrix::kron_vec(r, &self.algebra.basis(x), &oy),
                    );
                    if !matrix::vec_is_zero(r, &rel) {
                        relations.push(rel);
                    }
                }
            }
        }
        let quotient = Quotient::new(r, du * du, &relations).map_err(|e| match e {
            Error::Unsupported(m) => Error::UnsupportedBase(format!("U⊗_O U over this base: {m}")),
            e => e,
        })?;
        let full = self.canonical_full();
        let descends = relations.iter().all(|rel| matrix::vec_is_zero(r, &matrix::mul_vec(r, &full, rel)));
        let matrix = full.select_columns(&quotient.reps);
        Ok(CanonicalMap { quotient, matrix, full, descends })
    }

    /// Decides bijectivity of `can`. Over a PID surjectivity is read off the
    /// Smith form; the kernel comes from the same decomposition.
    pub fn is_galois(&self) -> Result<GaloisOutcome<R::Elem>> {
        let r = self.ring();
        let (du, dh) = (self.dim(), self.hopf.dim());
        let can = self.canonical_map()?;
        let lift = |e: Error| match e {
            Error::Unsupported(m) => Error::UnsupportedBase(m),
            e => e,
        };
        let surjective = r.is_surjective(&can.matrix).map_err(lift)?;
        let kernel = r.kernel(&can.matrix).map_err(lift)?;
        if surjective && kernel.cols() == 0 {
            let mut rows = Vec::with_capacity(dh);
            for h in 0..dh {
                let target = self.one_tensor(h);
                let x = r.solve(&can.matrix, &target).map_err(lift)?.expect("surjective canonical map");
                let rep = can.quotient.lift(r, &x);
                debug_assert_eq!(matrix::mul_vec(r, &can.full, &rep), target);
                rows.push(rep);
            }
            return Ok(GaloisOutcome::Galois(GaloisCertificate { rows, source_dim: can.source_dim(), target_dim: can.target_dim() }));
        }
        let rank = r.rank(&can.matrix).map_err(lift)?;
        let mut not_in_image = None;
        if !surjective {
            let candidates = (0..dh).map(|h| self.one_tensor(h)).chain((0..du * dh).map(|i| matrix::unit_vector(r, du * dh, i)));
            for v in candidates {
                if r.solve(&can.matrix, &v).map_err(lift)?.is_none() {
                    not_in_image = Some(v);
                    break;
                }
            }
        }
        let kernel_vector = kernel.columns().into_iter().next().map(|k| can.quotient.lift(r, &k));
        Ok(GaloisOutcome::NotGalois(FailureWitness {
            not_in_image,
            kernel_vector,
            rank,
            source_dim: can.source_dim(),
            target_dim: can.target_dim(),
        }))
    }

    /// `1⊗h_i` in `U⊗H` coordinates.
    pub fn one_tensor(&self, h: usize) -> Vec<R::Elem> {
        let r = self.ring();
        matrix::kron_vec(r, self.algebra.unit(), &matrix::unit_vector(r, self.hopf.dim(), h))
    }

    /// Whether `can` maps every certificate row to `1⊗h_i`.
    pub fn check_certificate(&self, cert: &GaloisCertificate<R::Elem>) -> bool {
        let full = self.canonical_full();
        cert.rows.len() == self.hopf.dim()
            && cert.rows.iter().enumerate().all(|(h, row)| matrix::mul_vec(self.ring(), &full, row) == self.one_tensor(h))
    }

    /// Some `x` with `Λ·x = 1`.
    pub fn find_lambda_unit(&self, lambda: &[F::Elem]) -> Result<Vec<R::Elem>> {
        let r = self.ring();
        let act = self.hstar_action_matrix(lambda);
        let x = r.solve(&act, self.algebra.unit())?.ok_or(Error::NotFound)?;
        if matrix::mul_vec(r, &act, &x) != self.algebra.unit() {
            return Err(Error::NotFound);
        }
        Ok(x)
    }

    /// The linear system whose kernel is the space of comodule maps
    /// `γ: H → U`, in convolution coordinates (index `c·dim U + x`).
    pub fn comodule_map_system(&self) -> Matrix<R::Elem> {
        let r = self.ring();
        let (du, dh) = (self.dim(), self.hopf.dim());
        let co = self.hopf.coalgebra();
        let mut m = matrix::zeros(r, dh * du * dh, dh * du);
        for h in 0..dh {
            for i in 0..du {
                for b in 0..dh {
                    let row = (h * du + i) * dh + b;
                    for x in 0..du {
                        let c = self.coaction.get(i * dh + b, x);
                        if !r.is_zero(c) {
                            let v = r.add(m.get(row, h * du + x), c);
                            m.set(row, h * du + x, v);
                        }
                    }
                    for a in 0..dh {
                        let d = co.constant(h, a, b);
                        if !self.hopf.field().is_zero(d) {
                            let v = r.sub(m.get(row, a * du + i), &r.scalar(d));
                            m.set(row, a * du + i, v);
                        }
                    }
                }
            }
        }
        m
    }

    /// `{γ : ρ∘γ = (γ⊗id)∘Δ}`.
    pub fn comodule_maps(&self) -> Result<Subspace<R::Elem>> {
        let r = self.ring();
        Ok(Subspace { ambient: self.dim() * self.hopf.dim(), basis: r.kernel(&self.comodule_map_system())? })
    }

    pub fn is_comodule_map(&self, gamma: &[R::Elem]) -> bool {
        matrix::vec_is_zero(self.ring(), &matrix::mul_vec(self.ring(), &self.comodule_map_system(), gamma))
    }

    /// The convolution algebra `Hom(H, U)`.
    pub fn convolution_algebra(&self) -> FinAlgebra<R> {
        crate::hopf::convolution_algebra(self.hopf.coalgebra(), &self.algebra)
    }
}

pub(crate) fn hopf_over<R: Algebra<F>, F: Field>(r: &R, hopf: &HopfAlgebra<F>) -> Result<FinAlgebra<R>> {
    hopf.algebra().map_ring(r.clone(), |c| Ok(r.scalar(c)))
}

#[derive(Clone, Debug, PartialEq)]
pub struct SmashReport {
    pub smash_dim: usize,
    pub endo_dim: usize,
    pub smash_associative: bool,
    pub homomorphism: bool,
    pub injective: bool,
    pub onto_endomorphisms: bool,
    /// A basis pair of `U#H*` where multiplicativity fails.
    pub witness: Option<(usize, usize)>,
}

impl SmashReport {
    pub fn passed(&self) -> bool {
        self.smash_associative && self.homomorphism && self.injective && self.onto_endomorphisms
    }
}

impl<F: Field + Algebra<F>> ComoduleAlgebra<F, F> {
    /// `End_O(U)` as a subspace of row-major `dim U × dim U` matrices.
    pub fn endomorphisms_over_invariants(&self) -> Result<Subspace<F::Elem>> {
        let f = self.ring();
        let n = self.dim();
        let mut stacked = matrix::zeros(f, 0, n * n);
        for o in self.invariants()?.vectors() {
            let l = self.algebra.left_mul_matrix(&o);
            stacked = stacked.vstack(&commutator_system(f, &l))?;
        }
        Ok(Subspace { ambient: n * n, basis: f.kernel(&stacked)? })
    }

    /// `U#H*` with basis index `u·dim H + f` and product
    /// `(u#f)(v#g) = u(f₁·v) # f₂g`.
    pub fn smash_product(&self) -> Result<FinAlgebra<F>> {
        let f = self.ring();
        let (du, dh) = (self.dim(), self.hopf.dim());
        let dual = self.hopf.dual();
        let acts: Vec<Matrix<F::Elem>> = (0..dh).map(|a| self.hstar_action_matrix(&matrix::unit_vector(f, dh, a))).collect();
        let unit = matrix::kron_vec(f, self.algebra.unit(), dual.unit());
        FinAlgebra::from_products(f.clone(), du * dh, unit, |p, q| {
            let (u, fi) = (p / dh, p % dh);
            let (v, g) = (q / dh, q % dh);
            let mut out = matrix::zero_vector(f, du * dh);
            for a in 0..dh {
                for b in 0..dh {
                    let c = dual.coalgebra().constant(fi, a, b);
                    if f.is_zero(c) {
                        continue;
                    }
                    let left = self.algebra.mul(&self.algebra.basis(u), &acts[a].col(v));
                    let right = dual.algebra().basis_product(b, g);
                    let term = matrix::vec_scale(f, c, &matrix::kron_vec(f, &left, &right));
                    out = matrix::vec_add(f, &out, &term);
                }
            }
            out
        })
    }

    /// Checks that `u#f ↦ (v ↦ u(f·v))` is an algebra isomorphism
    /// `U#H* → End_O(U)`.
    pub fn smash_endo_check(&self) -> Result<SmashReport> {
        let f = self.ring();
        let (du, dh) = (self.dim(), self.hopf.dim());
        let smash = self.smash_product()?;
        let endo = self.endomorphisms_over_invariants()?;
        let acts: Vec<Matrix<F::Elem>> = (0..dh).map(|a| self.hstar_action_matrix(&matrix::unit_vector(f, dh, a))).collect();
        let phi_basis: Vec<Matrix<F::Elem>> =
            (0..du * dh).map(|p| matrix::mul(f, &self.algebra.left_mul_matrix(&self.algebra.basis(p / dh)), &acts[p % dh])).collect();
        let phi = Matrix::from_columns(du * du, &phi_basis.iter().map(|m| m.entries().to_vec()).collect::<Vec<_>>());
        let apply = |v: &[F::Elem]| -> Matrix<F::Elem> { Matrix::from_vec(du, du, matrix::mul_vec(f, &phi, v)) };
        let mut witness = None;
        'outer: for p in 0..du * dh {
            for q in 0..du * dh {
                if apply(&smash.basis_product(p, q)) != matrix::mul(f, &phi_basis[p], &phi_basis[q]) {
                    witness = Some((p, q));
                    break 'outer;
                }
            }
        }
        let unital = matrix::is_identity(f, &apply(smash.unit()));
        let injective = f.rank(&phi)? == du * dh;
        let image = Subspace { ambient: du * du, basis: phi };
        let onto_endomorphisms = image.same_as(f, &endo)?;
        Ok(SmashReport {
            smash_dim: du * dh,
            endo_dim: endo.dim(),
            smash_associative: smash.verify().passed(),
            homomorphism: witness.is_none() && unital,
            injective,
            onto_endomorphisms,
            witness,
        })
    }

    /// `End_{O⊗H*}(U)`: maps commuting with `O` and with the `H*`-action.
    pub fn hstar_linear_endomorphisms(&self) -> Result<Subspace<F::Elem>> {
        let f = self.ring();
        let (n, dh) = (self.dim(), self.hopf.dim());
        let mut stacked = matrix::zeros(f, 0, n * n);
        for o in self.invariants()?.vectors() {
            stacked = stacked.vstack(&commutator_system(f, &self.algebra.left_mul_matrix(&o)))?;
        }
        for a in 0..dh {
            let act = self.hstar_action_matrix(&matrix::unit_vector(f, dh, a));
            stacked = stacked.vstack(&commutator_system(f, &act))?;
        }
        Ok(Subspace { ambient: n * n, basis: f.kernel(&stacked)? })
    }
}

/// Rows expressing `T·L − L·T = 0` for row-major `T`.
pub(crate) fn commutator_system<R: Ring>(r: &R, l: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    intertwiner_system(r, l, l)
}

/// Rows expressing `T·A − B·T = 0` for row-major `T`.
pub(crate) fn intertwiner_system<R: Ring>(r: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    let n = a.rows();
    let mut m = matrix::zeros(r, n * n, n * n);
    for i in 0..n {
        for c in 0..n {
            let row = i * n + c;
            for k in 0..n {
                // (T A)[i][c] = Σ_k T[i][k] A[k][c]
                let v = r.add(m.get(row, i * n + k), a.get(k, c));
                m.set(row, i * n + k, v);
                // (B T)[i][c] = Σ_k B[i][k] T[k][c]
                let v = r.sub(m.get(row, k * n + c), b.get(i, k));
                m.set(row, k * n + c, v);
            }
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Group;
    use crate::ring::{LaurentRing, Rationals};

    #[test]
    fn trivial_extension_is_galois() {
        let q = Rationals;
        let h = HopfAlgebra::sweedler(q).unwrap();
        let u = ComoduleAlgebra::regular(q, h).unwrap();
        assert!(u.verify().unwrap().passed());
        assert!(u.invariants_are_scalars().unwrap());
        let out = u.is_galois().unwrap();
        assert!(u.check_certificate(out.certificate().unwrap()));
        assert!(u.smash_endo_check().unwrap().passed());
    }

    #[test]
    fn regular_over_laurent_is_galois() {
        let r = LaurentRing::new(Rationals);
        let h = HopfAlgebra::group_algebra(Rationals, &Group::cyclic(3).unwrap()).unwrap();
        let u = ComoduleAlgebra::regular(r, h).unwrap();
        assert!(u.verify().unwrap().passed());
        assert!(u.is_galois().unwrap().is_galois());
        assert_eq!(u.comodule_maps().unwrap().dim(), 3);
    }
}
