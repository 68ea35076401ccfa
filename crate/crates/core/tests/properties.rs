use proptest::prelude::*;

use hopf_galois::base_change;
use hopf_galois::connection::{self, Connection};
use hopf_galois::gallery::quantum_family;
use hopf_galois::group::Group;
use hopf_galois::hochschild::{self, DeformationFamily, Trivialization};
use hopf_galois::hopf::HopfAlgebra;
use hopf_galois::matrix::{self, Matrix};
use hopf_galois::mu::RightModule;
use hopf_galois::ring::{Differential, Laurent, LaurentRing, Rationals, Ring, Q};

fn q(n: i64) -> Q {
    Rationals.from_i64(n)
}

fn laurent() -> impl Strategy<Value = Laurent<Q>> {
    (-2i64..=1, prop::collection::vec(-3i64..=3, 0..4))
        .prop_map(|(low, c)| LaurentRing::new(Rationals).make(low, c.into_iter().map(q).collect()))
}

fn qmatrix(n: usize) -> impl Strategy<Value = Matrix<Q>> {
    prop::collection::vec(-2i64..=2, n * n).prop_map(move |v| Matrix::from_vec(n, n, v.into_iter().map(q).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        let r = LaurentRing::new(Rationals);
        prop_assert_eq!(r.mul(&r.mul(&a, &b), &c), r.mul(&a, &r.mul(&b, &c)));
        prop_assert_eq!(r.mul(&a, &r.add(&b, &c)), r.add(&r.mul(&a, &b), &r.mul(&a, &c)));
        prop_assert_eq!(r.mul(&a, &b), r.mul(&b, &a));
        prop_assert_eq!(r.derivative(&r.mul(&a, &b)), r.add(&r.mul(&r.derivative(&a), &b), &r.mul(&a, &r.derivative(&b))));
    }

    #[test]
    fn laurent_format_round_trips(a in laurent()) {
        let r = LaurentRing::new(Rationals);
        prop_assert_eq!(r.parse(&r.format(&a)).unwrap(), a);
    }

    #[test]
    fn conjugated_families_trivialize(theta in qmatrix(3), theta2 in qmatrix(3)) {
        let rq = Rationals;
        let h = HopfAlgebra::group_algebra(rq, &Group::cyclic(3).unwrap()).unwrap();
        let module = RightModule::regular(h.clone());
        let order = 4;
        let conj = vec![matrix::identity(&rq, 3), theta, theta2];
        let fam = DeformationFamily::conjugated(h.algebra().clone(), &module.action, &conj, order).unwrap();
        let Trivialization::Trivialized(f) = hochschild::trivialize_deformation(&fam).unwrap() else {
            return Err(TestCaseError::fail("conjugated family reported obstructed"));
        };
        let finv = hochschild::series_inverse(&rq, &f, order).unwrap();
        for (series, r0) in fam.action.iter().zip(&module.action) {
            let back = hochschild::series_mul(&rq, &hochschild::series_mul(&rq, &finv, series, order), &f, order);
            prop_assert_eq!(&back[0], r0);
            prop_assert!(back[1..].iter().all(|m| matrix::is_zero(&rq, m)));
        }
    }

    #[test]
    fn nonzero_fibers_are_galois(n in 2usize..=4, a in -6i64..=6) {
        let u = quantum_family(n).unwrap();
        let fib = base_change::fiber(&u, q(a)).unwrap();
        prop_assert_eq!(fib.is_galois().unwrap().is_galois(), a != 0);
    }

    #[test]
    fn frobeniusize_gives_frobenius_connections(entries in prop::collection::vec(laurent(), 4)) {
        let u = quantum_family(2).unwrap();
        let lambda = u.hopf().normalized_lambda().unwrap();
        let nabla = Connection::new(Matrix::from_vec(2, 2, entries)).unwrap();
        let fixed = connection::frobeniusize(&u, &nabla, &lambda).unwrap();
        prop_assert!(connection::is_frobenius(&u, &fixed, &lambda).unwrap());
        // already Frobenius connections are left alone
        prop_assert_eq!(connection::frobeniusize(&u, &fixed, &lambda).unwrap(), fixed);
    }
}
