//! Verifies a few small algebras and prints the first violation of one that fails.
//!
//! ```text
//! cargo run --example verify_algebra
//! ```

use antiprelie::algebra::{check_anti_pre_lie, sub_adjacent_lie, AntiPreLieAlgebra, MultTable};
use antiprelie::corpus;
use antiprelie::scalar::Rational;

fn main() {
    for (name, alg) in corpus::algebras::<Rational>() {
        let lie = sub_adjacent_lie(&alg).expect("commutator of an anti-pre-Lie algebra is Lie");
        println!("{name:<24} dim {}  abelian commutator: {}", alg.dim(), lie.is_abelian());
    }

    // e2·e1 = e2 breaks the first identity
    let bad: MultTable<Rational> = MultTable::from_entries(2, &[(1, 0, 1, 1)]);
    let report = check_anti_pre_lie(&bad);
    println!("\n{}", report.summary());
    for v in report.violations.iter().take(3) {
        let r: Vec<String> = v.residual.iter().map(ToString::to_string).collect();
        println!("  {} at {:?}: ({})", v.identity, v.indices, r.join(", "));
    }
    assert!(AntiPreLieAlgebra::new(bad).is_err());
}
