mod common;

use antiprelie::algebra::{
    check_anti_pre_lie, check_lie, check_morphism, sub_adjacent_lie, AntiPreLieAlgebra, LEFT_ANTISYMMETRY,
};
use antiprelie::corpus;
use antiprelie::linalg::Matrix;
use antiprelie::scalar::{Fp, Rational, Scalar};
use common::naive;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Q = Rational;

#[test]
fn corpus_algebras_verify_over_several_fields() {
    fn all<S: Scalar>() {
        for (name, alg) in corpus::algebras::<S>() {
            assert!(check_anti_pre_lie(alg.table()).passed(), "{name}");
            assert!(naive::anti_pre_lie(alg.table()).is_empty(), "{name}");
        }
    }
    all::<Q>();
    all::<Fp<3>>();
    all::<Fp<5>>();
    all::<Fp<7>>();
}

#[test]
fn a2_bar_fails_left_antisymmetry() {
    // e1(e2 e1) - e2(e1 e1) - [e2,e1]e1 = 0 - 0 - e2
    let r = check_anti_pre_lie(&corpus::a2_bar::<Q>());
    let v = r.find(LEFT_ANTISYMMETRY, &[0, 1, 0]).expect("violation at (e1, e2, e1)");
    assert_eq!(v.residual, vec![Q::from_i64(0), Q::from_i64(-1)]);
    assert!(AntiPreLieAlgebra::new(corpus::a2_bar::<Q>()).is_err());
}

#[test]
fn commutator_is_lie_on_corpus() {
    for (name, alg) in corpus::algebras::<Q>() {
        let lie = sub_adjacent_lie(&alg).unwrap();
        assert!(check_lie(&lie).passed(), "{name}");
    }
}

#[test]
fn zero_and_one_dimensional_algebras_always_verify() {
    // On a line every product is a multiple of e and both brackets vanish.
    for c in -3..=3 {
        let t = antiprelie::algebra::MultTable::<Q>::from_entries(1, &[(0, 0, 0, c)]);
        assert!(check_anti_pre_lie(&t).passed());
    }
    assert!(check_anti_pre_lie(&antiprelie::algebra::MultTable::<Q>::zero(3)).passed());
}

fn invertible(n: usize) -> impl Strategy<Value = Matrix<Q>> {
    prop::collection::vec(-2i64..=2, n * n)
        .prop_map(move |v| Matrix::from_vec(n, n, v.into_iter().map(Q::from_i64).collect()).unwrap())
        .prop_filter("invertible", |m| m.invert().unwrap().is_some())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn checks_agree_with_oracle(seed in any::<u64>(), n in 1usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = corpus::random_table::<Q, _>(n, 1, &mut rng);
        prop_assert_eq!(naive::report_entries(&check_anti_pre_lie(&t)), naive::anti_pre_lie(&t));
    }

    #[test]
    fn change_of_basis_preserves_the_axioms(p in invertible(2), which in 0usize..6) {
        let alg = corpus::algebras::<Q>().into_iter().filter(|(_, a)| a.dim() == 2).nth(which % 5).unwrap().1;
        let t = alg.table().change_basis(&p).unwrap();
        prop_assert!(check_anti_pre_lie(&t).passed());
    }

    #[test]
    fn identity_is_an_automorphism(which in 0usize..10) {
        let alg = &corpus::algebras::<Q>()[which].1;
        let id = Matrix::identity(alg.dim());
        prop_assert!(check_morphism(&id, alg.table(), alg.table()).unwrap().passed());
    }

    #[test]
    fn direct_sums_verify(i in 0usize..10, j in 0usize..10) {
        let algs = corpus::algebras::<Q>();
        let sum = algs[i].1.table().direct_sum(algs[j].1.table());
        prop_assert!(check_anti_pre_lie(&sum).passed());
    }
}
