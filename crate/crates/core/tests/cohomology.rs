mod common;

use antiprelie::algebra::AntiPreLieAlgebra;
use antiprelie::cohomology::{cohomologous, cohomology_spaces, d1, d2, is_cocycle, Cochain2};
use antiprelie::corpus;
use antiprelie::representation::Representation;
use antiprelie::scalar::{Fp, Rational};
use common::naive;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Q = Rational;

#[test]
fn zero_algebra_fixture() {
    let s = cohomology_spaces(&AntiPreLieAlgebra::<Q>::zero(2), &Representation::zero(2, 1)).unwrap();
    assert_eq!((s.dim_z2(), s.dim_b2(), s.dim_h2()), (4, 0, 4));
}

#[test]
fn zero_data_gives_all_cochains_as_cocycles() {
    for n in 1..=3 {
        for m in 1..=2 {
            let s = cohomology_spaces(&AntiPreLieAlgebra::<Q>::zero(n), &Representation::zero(n, m)).unwrap();
            assert_eq!((s.dim_z2(), s.dim_b2(), s.dim_h2()), (n * n * m, 0, n * n * m));
        }
    }
}

#[test]
fn representatives_are_cocycles() {
    for (name, alg, rep) in corpus::representation_pairs::<Q>().into_iter().filter(|(_, a, _)| a.dim() <= 3) {
        let s = cohomology_spaces(&alg, &rep).unwrap();
        assert_eq!(s.dim_z2(), s.dim_b2() + s.dim_h2(), "{name}");
        for c in s.h2_representatives.iter().chain(&s.b2_basis) {
            assert!(is_cocycle(&alg, &rep, c).unwrap(), "{name}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn coboundaries_are_cocycles(seed in any::<u64>(), which in 0usize..32) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (_, alg, rep) = corpus::representation_pairs::<Q>().swap_remove(which);
        let f = corpus::random_cochain1(alg.dim(), rep.dim_v(), 4, &mut rng);
        prop_assert!(d2(&alg, &rep, &d1(&alg, &rep, &f).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn coboundaries_are_cocycles_over_f5(seed in any::<u64>(), which in 0usize..32) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (_, alg, rep) = corpus::representation_pairs::<Fp<5>>().swap_remove(which);
        let f = corpus::random_cochain1(alg.dim(), rep.dim_v(), 4, &mut rng);
        prop_assert!(d2(&alg, &rep, &d1(&alg, &rep, &f).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn coboundary_operators_match_oracle(seed in any::<u64>(), which in 0usize..32) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (_, alg, rep) = corpus::representation_pairs::<Q>().swap_remove(which);
        let (n, m) = (alg.dim(), rep.dim_v());
        let f = corpus::random_cochain1(n, m, 2, &mut rng);
        prop_assert_eq!(d1(&alg, &rep, &f).unwrap().values.to_nested(), naive::d1(alg.table(), &rep, &f));
        let g = corpus::random_cochain2(n, m, 2, &mut rng);
        let (a, b) = naive::d2(alg.table(), &rep, &g);
        prop_assert_eq!(d2(&alg, &rep, &g).unwrap().to_vector(), [a, b].concat());
    }

    #[test]
    fn shifting_by_a_coboundary_stays_in_the_class(seed in any::<u64>(), which in 0usize..32) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (_, alg, rep) = corpus::representation_pairs::<Q>().swap_remove(which);
        let (n, m) = (alg.dim(), rep.dim_v());
        let f: Cochain2<Q> = corpus::random_cochain2(n, m, 2, &mut rng);
        let g = f.add(&d1(&alg, &rep, &corpus::random_cochain1(n, m, 2, &mut rng)).unwrap());
        let phi = cohomologous(&alg, &rep, &f, &g).unwrap().expect("same class");
        prop_assert_eq!(f.sub(&g), d1(&alg, &rep, &phi).unwrap());
    }
}
