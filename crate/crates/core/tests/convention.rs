use hopf_galois::group::Group;
use hopf_galois::hopf::HopfAlgebra;
use hopf_galois::ring::Rationals;
use hopf_galois::twisted::{twisted_product_with, Convention, TwoCochain};

fn s3_products(convention: Convention) -> (hopf_galois::comodule::ComoduleAlgebra<Rationals, Rationals>, Group) {
    let g = Group::symmetric(3).unwrap();
    let h = HopfAlgebra::group_algebra(Rationals, &g).unwrap();
    let sigma = TwoCochain::trivial(Rationals, h);
    (twisted_product_with(&sigma, convention).unwrap(), g)
}

fn unit(i: usize) -> Vec<num::BigRational> {
    (0..6).map(|k| num::BigRational::from_integer((k == i).into())).collect()
}

#[test]
fn default_order_multiplies_group_elements_in_reverse() {
    let (u, g) = s3_products(Convention::Reversed);
    let (a, b) = (g.find("(12)").unwrap(), g.find("(123)").unwrap());
    assert_ne!(g.mul(a, b), g.mul(b, a));
    assert_eq!(u.algebra().mul(&unit(a), &unit(b)), unit(g.mul(b, a)));
    let report = u.verify().unwrap();
    assert!(report.algebra.passed());
    // with the trivial cocycle this is H^op, and id⊗Δ is not multiplicative
    assert!(!report.multiplicative);
}

#[test]
fn standard_order_recovers_the_group_algebra() {
    let (u, g) = s3_products(Convention::Standard);
    let (a, b) = (g.find("(12)").unwrap(), g.find("(123)").unwrap());
    assert_eq!(u.algebra().mul(&unit(a), &unit(b)), unit(g.mul(a, b)));
    let report = u.verify().unwrap();
    assert!(report.multiplicative && report.coassociative && report.counital);
    assert!(u.is_galois().unwrap().is_galois());
}

#[test]
fn conventions_agree_on_commutative_groups() {
    let h = HopfAlgebra::group_algebra(Rationals, &Group::cyclic(4).unwrap()).unwrap();
    let sigma = TwoCochain::trivial(Rationals, h);
    let p = twisted_product_with(&sigma, Convention::Reversed).unwrap();
    let s = twisted_product_with(&sigma, Convention::Standard).unwrap();
    assert_eq!(p, s);
}
