mod oracle;

use hopf_galois::algebra::FinAlgebra;
use hopf_galois::gp;
use hopf_galois::group::Group;
use hopf_galois::hochschild::{hh1, Bimodule};
use hopf_galois::ring::Rationals;

use oracle::Algebra;

#[test]
fn hh1_matches_brute_force_derivations() {
    for n in 2..=4 {
        let lib = hh1(&Bimodule::regular(FinAlgebra::truncated_polynomials(Rationals, n))).unwrap();
        assert_eq!(lib.dim, oracle::regular_hh1(&Algebra::truncated(n)), "k[x]/(x^{n})");
        assert!(lib.complex);
    }
    for n in 2..=3 {
        let lib = hh1(&Bimodule::regular(FinAlgebra::matrix_algebra(Rationals, n))).unwrap();
        assert_eq!(lib.dim, 0);
        assert_eq!(oracle::regular_hh1(&Algebra::matrices(n)), 0);
    }
}

#[test]
fn truncated_polynomial_derivations() {
    // derivations of k[x]/(x^n) are x ↦ p(x) with n·x^{n-1}·p = 0, none inner
    for n in 2..=5 {
        assert_eq!(oracle::regular_hh1(&Algebra::truncated(n)), n - 1);
    }
}

#[test]
fn regular_subgroup_counts_match_subset_enumeration() {
    for m in 2..=4 {
        let lib = gp::regular_subgroups(m).unwrap().len();
        assert_eq!(lib, oracle::normalized_regular_subgroups(m, &[]).len(), "S{m}");
    }
}

#[test]
fn normalized_structures_match_subset_enumeration() {
    for n in 2..=4 {
        let g = Group::cyclic(n).unwrap();
        let lib = gp::hopf_galois_structures(&g, &[g.identity()]).unwrap();
        let expected = oracle::normalized_regular_subgroups(n, &oracle::cyclic_regular(n));
        assert_eq!(lib.structures.len(), expected.len(), "Z{n}");
        for s in &lib.structures {
            assert!(expected.iter().any(|e| e.iter().eq(s.iter())));
        }
    }
    let k = Group::klein().unwrap();
    let lib = gp::hopf_galois_structures(&k, &[k.identity()]).unwrap();
    let lambda: Vec<Vec<usize>> = lib.action.images.clone();
    assert_eq!(lib.structures.len(), oracle::normalized_regular_subgroups(4, &lambda).len());
}
