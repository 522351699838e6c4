mod common;

use antiprelie::algebra::{AntiPreLieAlgebra, MultTable};
use antiprelie::cohomology::{cohomology_spaces, d1, is_cocycle, Cochain1};
use antiprelie::corpus;
use antiprelie::deformation::{
    apply_isomorphism, check_deformation, infinitesimal, random_isomorphism, rigidity_certificate, sample_deformation,
    trivialize_step, TruncatedDeformation, TruncatedIsomorphism, DEFORM_FIRST,
};
use antiprelie::representation::regular_representation;
use antiprelie::scalar::Rational;
use common::naive;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Q = Rational;

#[test]
fn a2_as_a_deformation_of_the_zero_algebra() {
    let def = TruncatedDeformation::new(AntiPreLieAlgebra::<Q>::zero(2), vec![corpus::a2::<Q>().into_table()]).unwrap();
    assert!(check_deformation(&def).passed());
    let bad = TruncatedDeformation::new(AntiPreLieAlgebra::<Q>::zero(2), vec![MultTable::zero(2), corpus::a2_bar::<Q>()]);
    // over a zero base a term only meets itself, at twice its order
    assert!(check_deformation(&bad.unwrap()).passed());
    let bad = TruncatedDeformation::new(AntiPreLieAlgebra::<Q>::zero(2), vec![corpus::a2_bar::<Q>(), MultTable::zero(2)]).unwrap();
    assert!(check_deformation(&bad).find(DEFORM_FIRST, &[2, 0, 1, 0]).is_some());
}

#[test]
fn identity_isomorphism_changes_nothing() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let def = sample_deformation(&corpus::nil2::<Q>(), 3, 1, &mut rng).unwrap().expect("sample");
    assert_eq!(apply_isomorphism(&def, &TruncatedIsomorphism::identity(2, 3)).unwrap(), def);
}

#[test]
fn coboundary_term_trivializes() {
    let alg = corpus::a2::<Q>();
    let rep = regular_representation(&alg);
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let phi = corpus::random_cochain1(2, 2, 2, &mut rng);
    let w = d1(&alg, &rep, &phi).unwrap().to_table().unwrap();
    let def = TruncatedDeformation::new(alg, vec![w]).unwrap();
    assert!(check_deformation(&def).passed());
    let (_, rest) = trivialize_step(&def, 1).unwrap().expect("coboundary");
    assert!(rest.is_trivial());
}

#[test]
fn rigid_corpus_algebras_trivialize() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for alg in [corpus::idempotent_line::<Q>(), corpus::diagonal2::<Q>()] {
        assert_eq!(cohomology_spaces(&alg, &regular_representation(&alg)).unwrap().dim_h2(), 0);
        let defs: Vec<_> = (0..4).filter_map(|_| sample_deformation(&alg, 3, 2, &mut rng).unwrap()).collect();
        assert!(!defs.is_empty());
        let cert = rigidity_certificate(&alg, &defs, 3).unwrap();
        assert!(cert.rigid() && cert.passed());
    }
}

#[test]
fn zero_algebra_is_not_rigid() {
    let alg = AntiPreLieAlgebra::<Q>::zero(2);
    let cert = rigidity_certificate(&alg, &[], 2).unwrap();
    assert_eq!(cert.h2_dim, 8);
    assert!(!cert.rigid());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn isomorphisms_move_deformations_within_the_class(seed in any::<u64>(), which in 0usize..7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let alg = corpus::algebras::<Q>().swap_remove(which).1;
        let Some(def) = sample_deformation(&alg, 2, 1, &mut rng).unwrap() else { return Ok(()) };
        let reg = regular_representation(&alg);
        let w1 = infinitesimal(&def).unwrap();
        prop_assert!(is_cocycle(&alg, &reg, &w1).unwrap());

        let iso = random_isomorphism::<Q, _>(alg.dim(), 2, 1, &mut rng);
        let moved = apply_isomorphism(&def, &iso).unwrap();
        prop_assert!(check_deformation(&moved).passed());
        let shift = infinitesimal(&moved).unwrap().sub(&w1);
        prop_assert_eq!(shift, d1(&alg, &reg, &Cochain1::new(iso.phi(1))).unwrap());
        prop_assert_eq!(apply_isomorphism(&moved, &iso.inverse()).unwrap(), def);
    }

    #[test]
    fn deformation_check_matches_oracle(seed in any::<u64>(), which in 0usize..7, order in 1usize..=2) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let alg = corpus::algebras::<Q>().swap_remove(which).1;
        let terms = (0..order).map(|_| corpus::random_table(alg.dim(), 1, &mut rng)).collect();
        let def = TruncatedDeformation::new(alg, terms).unwrap();
        prop_assert_eq!(naive::report_entries(&check_deformation(&def)), naive::deformation(&def));
    }
}
