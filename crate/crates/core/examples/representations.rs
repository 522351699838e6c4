//! Regular and dual representations, semidirect products and the three
//! special conditions.

use antiprelie::algebra::check_anti_pre_lie;
use antiprelie::corpus;
use antiprelie::representation::{
    check_representation, dual_representation, regular_representation, semidirect_product, special_condition_report,
};
use antiprelie::scalar::Rational;

fn main() {
    for (name, alg) in corpus::algebras::<Rational>().into_iter().take(7) {
        let reg = regular_representation(&alg);
        let dual = dual_representation(&reg);
        assert!(check_representation(&alg, &dual).unwrap().passed());
        assert_eq!(dual_representation(&dual), reg);

        let sd = semidirect_product(&alg, &dual).unwrap();
        let flags = special_condition_report(&alg, &reg).unwrap();
        println!(
            "{name:<16} A ⋉ A* has dim {} ({}), special conditions {:?}",
            sd.dim(),
            if check_anti_pre_lie(sd.table()).passed() { "ok" } else { "FAILS" },
            flags
        );
    }
}
