//! Base change along maps out of univariate bases: fibers, jets, the
//! generic fiber, and lifting cleaving maps to jets.

use crate::comodule::ComoduleAlgebra;
use crate::error::{Error, Result};
use crate::matrix;
use crate::ring::{Algebra, Field, FracField, JetRing, Laurent, LaurentRing, PolyRing, Ring, RingHom};
use crate::search;
use crate::twisted::{cleftness_witness, verify_cleaving, CleavingMap};

/// `F[q]` or `F[q, q⁻¹]`.
pub trait UnivariateBase<F: Field>: Algebra<F> {
    fn to_laurent(&self, a: &Self::Elem) -> Laurent<F::Elem>;
}

impl<F: Field> UnivariateBase<F> for LaurentRing<F> {
    fn to_laurent(&self, a: &Laurent<F::Elem>) -> Laurent<F::Elem> {
        a.clone()
    }
}

impl<F: Field> UnivariateBase<F> for PolyRing<F> {
    fn to_laurent(&self, a: &Vec<F::Elem>) -> Laurent<F::Elem> {
        LaurentRing::new(self.field.clone()).from_polynomial(a)
    }
}

/// `q ↦ a`.
#[derive(Clone, Debug)]
pub struct Evaluation<B, F: Field> {
    pub source: B,
    pub target: F,
    pub point: F::Elem,
}

impl<B: UnivariateBase<F>, F: Field> RingHom for Evaluation<B, F> {
    type Source = B;
    type Target = F;
    fn source(&self) -> &B {
        &self.source
    }
    fn target(&self) -> &F {
        &self.target
    }
    fn apply(&self, a: &B::Elem) -> Result<F::Elem> {
        let l = self.source.to_laurent(a);
        LaurentRing::new(self.target.clone())
            .eval(&l, &self.point)
            .ok_or_else(|| Error::NotInDomain(format!("negative powers of q at q = {}", self.target.format(&self.point))))
    }
}

/// Reduction modulo `(q − a)^N`.
#[derive(Clone, Debug)]
pub struct JetReduction<B, F: Field> {
    pub source: B,
    pub target: JetRing<F>,
}

impl<B: UnivariateBase<F>, F: Field> RingHom for JetReduction<B, F> {
    type Source = B;
    type Target = JetRing<F>;
    fn source(&self) -> &B {
        &self.source
    }
    fn target(&self) -> &JetRing<F> {
        &self.target
    }
    fn apply(&self, a: &B::Elem) -> Result<Vec<F::Elem>> {
        let j = &self.target;
        let l = self.source.to_laurent(a);
        let body = j.from_q_polynomial(&l.coeffs);
        let q = j.from_q_polynomial(&[j.field.zero(), j.field.one()]);
        let shift = if l.low >= 0 {
            j.pow(&q, l.low as u64)
        } else {
            let inv = j.unit_inverse(&q).ok_or_else(|| Error::NotInDomain("q is not invertible in jets at 0".into()))?;
            j.pow(&inv, (-l.low) as u64)
        };
        Ok(j.mul(&body, &shift))
    }
}

/// Inclusion into the field of rational functions.
#[derive(Clone, Debug)]
pub struct FractionInclusion<B, F: Field> {
    pub source: B,
    pub target: FracField<F>,
}

impl<B: UnivariateBase<F>, F: Field> RingHom for FractionInclusion<B, F> {
    type Source = B;
    type Target = FracField<F>;
    fn source(&self) -> &B {
        &self.source
    }
    fn target(&self) -> &FracField<F> {
        &self.target
    }
    fn apply(&self, a: &B::Elem) -> Result<<FracField<F> as Ring>::Elem> {
        let f = &self.target.field;
        let l = self.source.to_laurent(a);
        if l.low >= 0 {
            let mut num = vec![f.zero(); l.low as usize];
            num.extend(l.coeffs.iter().cloned());
            return Ok(self.target.from_polynomial(&num));
        }
        let mut den = vec![f.zero(); (-l.low) as usize];
        den.push(f.one());
        Ok(self.target.make(l.coeffs.clone(), den))
    }
}

/// Truncation `F[q]/(q − a)^N → F[q]/(q − a)^M` for `M ≤ N`.
#[derive(Clone, Debug)]
pub struct JetTruncation<F: Field> {
    pub source: JetRing<F>,
    pub target: JetRing<F>,
}

impl<F: Field> JetTruncation<F> {
    pub fn new(source: JetRing<F>, order: usize) -> Result<Self> {
        if order > source.order {
            return Err(Error::InvalidInput(format!("cannot truncate order {} jets to order {order}", source.order)));
        }
        let target = JetRing::new(source.field.clone(), source.center.clone(), order)?;
        Ok(JetTruncation { source, target })
    }
}

impl<F: Field> RingHom for JetTruncation<F> {
    type Source = JetRing<F>;
    type Target = JetRing<F>;
    fn source(&self) -> &JetRing<F> {
        &self.source
    }
    fn target(&self) -> &JetRing<F> {
        &self.target
    }
    fn apply(&self, a: &Vec<F::Elem>) -> Result<Vec<F::Elem>> {
        Ok(self.target.truncate(a.clone()))
    }
}

/// Reduction of jets to the residue field.
#[derive(Clone, Debug)]
pub struct JetResidue<F: Field> {
    pub source: JetRing<F>,
}

impl<F: Field> RingHom for JetResidue<F> {
    type Source = JetRing<F>;
    type Target = F;
    fn source(&self) -> &JetRing<F> {
        &self.source
    }
    fn target(&self) -> &F {
        &self.source.field
    }
    fn apply(&self, a: &Vec<F::Elem>) -> Result<F::Elem> {
        Ok(self.source.residue(a))
    }
}

/// `second ∘ first`.
#[derive(Clone, Debug)]
pub struct Composite<A, B> {
    pub first: A,
    pub second: B,
}

impl<A: RingHom, B: RingHom<Source = A::Target>> RingHom for Composite<A, B> {
    type Source = A::Source;
    type Target = B::Target;
    fn source(&self) -> &A::Source {
        self.first.source()
    }
    fn target(&self) -> &B::Target {
        self.second.target()
    }
    fn apply(&self, a: &<A::Source as Ring>::Elem) -> Result<<B::Target as Ring>::Elem> {
        self.second.apply(&self.first.apply(a)?)
    }
}

/// `U⊗_O R` along `φ: O → R`, entrywise on the structure constants.
pub fn pullback<F, M>(u: &ComoduleAlgebra<M::Source, F>, phi: &M) -> Result<ComoduleAlgebra<M::Target, F>>
where
    F: Field,
    M: RingHom,
    M::Source: Algebra<F>,
    M::Target: Algebra<F>,
{
    u.map_ring(phi.target().clone(), |x| phi.apply(x))
}

/// The image of a cleaving map under `φ`.
pub fn pullback_cleaving<M: RingHom>(
    map: &CleavingMap<<M::Source as Ring>::Elem>,
    phi: &M,
) -> Result<CleavingMap<<M::Target as Ring>::Elem>> {
    let apply = |v: &[<M::Source as Ring>::Elem]| v.iter().map(|x| phi.apply(x)).collect::<Result<Vec<_>>>();
    Ok(CleavingMap { gamma: apply(&map.gamma)?, inverse: apply(&map.inverse)? })
}

pub fn fiber<B: UnivariateBase<F>, F: Field + Algebra<F>>(u: &ComoduleAlgebra<B, F>, a: F::Elem) -> Result<ComoduleAlgebra<F, F>> {
    let phi = Evaluation { source: u.ring().clone(), target: u.hopf().field().clone(), point: a };
    pullback(u, &phi)
}

/// The restriction to the closed point `(q − a)`, which is its fiber.
pub fn restriction<B: UnivariateBase<F>, F: Field + Algebra<F>>(u: &ComoduleAlgebra<B, F>, a: F::Elem) -> Result<ComoduleAlgebra<F, F>> {
    fiber(u, a)
}

pub fn jet<B: UnivariateBase<F>, F: Field>(u: &ComoduleAlgebra<B, F>, a: F::Elem, order: usize) -> Result<ComoduleAlgebra<JetRing<F>, F>> {
    let target = JetRing::new(u.hopf().field().clone(), a, order)?;
    pullback(u, &JetReduction { source: u.ring().clone(), target })
}

/// `U⊗_O F(q)`, with `H` extended to `F(q)` as well.
pub fn generic_fiber<B: UnivariateBase<F>, F: Field>(u: &ComoduleAlgebra<B, F>) -> Result<ComoduleAlgebra<FracField<F>, FracField<F>>> {
    let k = FracField::new(u.hopf().field().clone());
    let phi = FractionInclusion { source: u.ring().clone(), target: k.clone() };
    let hopf = u.hopf().extend_scalars(k.clone(), |c| k.from_polynomial(std::slice::from_ref(c)))?;
    let algebra = u.algebra().map_ring(k.clone(), |x| phi.apply(x))?;
    let coaction = u.coaction().map(|x| phi.apply(x)).entries().iter().cloned().collect::<Result<Vec<_>>>()?;
    let coaction = matrix::Matrix::from_vec(u.coaction().rows(), u.coaction().cols(), coaction);
    ComoduleAlgebra::new(algebra, hopf, coaction)
}

#[derive(Clone, Debug, PartialEq)]
pub enum Target<E> {
    Fiber(E),
    Jet(E, usize),
    Restriction(E),
    Generic,
}

impl<E> Target<E> {
    /// `fiber@a`, `jet@a^N`, `restriction@a` or `generic`.
    pub fn parse<F: Field<Elem = E>>(field: &F, s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "generic" {
            return Ok(Target::Generic);
        }
        let (kind, arg) =
            s.split_once('@').ok_or_else(|| Error::Parse(format!("expected fiber@a, jet@a^N, restriction@a or generic, got {s:?}")))?;
        match kind {
            "fiber" => Ok(Target::Fiber(field.parse(arg)?)),
            "restriction" => Ok(Target::Restriction(field.parse(arg)?)),
            "jet" => {
                let (a, n) = arg.rsplit_once('^').ok_or_else(|| Error::Parse(format!("jet target needs an order: {s:?}")))?;
                let n = n.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad jet order in {s:?}")))?;
                Ok(Target::Jet(field.parse(a)?, n))
            }
            _ => Err(Error::Parse(format!("unknown specialization {kind:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub enum Specialized<F: Field + Algebra<F>> {
    Field(ComoduleAlgebra<F, F>),
    Jet(ComoduleAlgebra<JetRing<F>, F>),
    Generic(ComoduleAlgebra<FracField<F>, FracField<F>>),
}

pub fn specialize<B: UnivariateBase<F>, F: Field + Algebra<F>>(
    u: &ComoduleAlgebra<B, F>,
    target: Target<F::Elem>,
) -> Result<Specialized<F>> {
    Ok(match target {
        Target::Fiber(a) => Specialized::Field(fiber(u, a)?),
        Target::Restriction(a) => Specialized::Field(restriction(u, a)?),
        Target::Jet(a, n) => Specialized::Jet(jet(u, a, n)?),
        Target::Generic => Specialized::Generic(generic_fiber(u)?),
    })
}

/// A cleaving map of the order-`N` jet at `a`, lifted from a cleaving map of
/// the fiber: a convolution map that is a unit modulo `q − a` is a unit.
pub fn jet_cleaving<B: UnivariateBase<F>, F: Field + Algebra<F>>(
    u: &ComoduleAlgebra<B, F>,
    a: F::Elem,
    order: usize,
    seed: u64,
) -> Result<(ComoduleAlgebra<JetRing<F>, F>, CleavingMap<Vec<F::Elem>>)> {
    let fib = fiber(u, a.clone())?;
    if !fib.is_galois()?.is_galois() {
        return Err(Error::FiberNotGalois);
    }
    let uj = jet(u, a, order)?;
    let jr = uj.ring().clone();
    let gens = uj.comodule_maps()?.vectors();
    let residues: Vec<Vec<F::Elem>> = gens.iter().map(|g| g.iter().map(|x| jr.residue(x)).collect()).collect();
    let f = fib.ring();
    let fconv = fib.convolution_algebra();
    let jconv = uj.convolution_algebra();
    let len = jconv.dim();
    if !gens.is_empty() {
        let mut rng = search::rng(seed);
        for _ in 0..search::DEFAULT_ATTEMPTS {
            let c = search::random_coefficients(f, &mut rng, gens.len());
            let v = matrix::combination(f, &c, &residues, len);
            if fconv.element_inverse(&v)?.is_none() {
                continue;
            }
            let cj: Vec<Vec<F::Elem>> = c.iter().map(|x| jr.scalar(x)).collect();
            let gamma = matrix::combination(&jr, &cj, &gens, len);
            if let Some(inverse) = jconv.element_inverse(&gamma)? {
                let map = CleavingMap { gamma, inverse };
                if verify_cleaving(&uj, &map) {
                    return Ok((uj, map));
                }
            }
        }
    }
    // Constant lift of a fiber cleaving map.
    let g0 = cleftness_witness(&fib, seed)?.ok_or(Error::FiberNotGalois)?;
    let gamma: Vec<Vec<F::Elem>> = g0.gamma.iter().map(|x| jr.scalar(x)).collect();
    if uj.is_comodule_map(&gamma) {
        if let Some(inverse) = jconv.element_inverse(&gamma)? {
            let map = CleavingMap { gamma, inverse };
            return Ok((uj, map));
        }
    }
    Err(Error::RetryBudgetExhausted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Rationals;
    use crate::twisted::{qzn, twisted_product};

    #[test]
    fn first_jet_is_the_fiber() {
        let q = Rationals;
        let r = LaurentRing::new(q);
        let u = twisted_product(&qzn(r.clone(), 2, r.variable()).unwrap()).unwrap();
        let j1 = jet(&u, q.from_i64(3), 1).unwrap();
        let res = JetResidue { source: j1.ring().clone() };
        assert_eq!(pullback(&j1, &res).unwrap(), fiber(&u, q.from_i64(3)).unwrap());
    }

    #[test]
    fn laurent_fiber_at_zero_needs_polynomial_entries() {
        let q = Rationals;
        let r = LaurentRing::new(q);
        let u = twisted_product(&qzn(r.clone(), 2, r.parse("q^-1").unwrap()).unwrap()).unwrap();
        assert!(matches!(fiber(&u, q.zero()), Err(Error::NotInDomain(_))));
    }

    #[test]
    fn jet_cleaving_at_one() {
        let q = Rationals;
        let r = LaurentRing::new(q);
        let u = twisted_product(&qzn(r.clone(), 2, r.variable()).unwrap()).unwrap();
        let (uj, map) = jet_cleaving(&u, q.one(), 3, 0).unwrap();
        assert!(verify_cleaving(&uj, &map));
        assert!(matches!(jet_cleaving(&u, q.zero(), 3, 0), Err(Error::FiberNotGalois)));
    }
}
