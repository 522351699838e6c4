//! Abelian extensions: build from a cocycle, read the cocycle back, compare classes.

use antiprelie::algebra::AntiPreLieAlgebra;
use antiprelie::cohomology::d1;
use antiprelie::corpus;
use antiprelie::extension::{are_isomorphic, build_extension, classify_extensions, extract_cocycle};
use antiprelie::representation::Representation;
use antiprelie::scalar::Rational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let alg = AntiPreLieAlgebra::<Rational>::zero(2);
    let rep = Representation::zero(2, 1);
    let c = classify_extensions(&alg, &rep).unwrap();
    println!("zero algebra of dim 2 by a line: {} nontrivial classes", c.classes.len());

    let theta = &c.classes[0].representative;
    let ext = build_extension(&alg, &rep, theta).unwrap();
    let back = extract_cocycle(&ext, &ext.canonical_section()).unwrap();
    assert_eq!(&back.theta, theta);

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let a2 = corpus::a2::<Rational>();
    let reg = antiprelie::representation::regular_representation(&a2);
    let c = classify_extensions(&a2, &reg).unwrap();
    let theta = &c.classes[0].representative;
    let phi = corpus::random_cochain1(2, 2, 3, &mut rng);
    let shifted = theta.add(&d1(&a2, &reg, &phi).unwrap());
    let e1 = build_extension(&a2, &reg, theta).unwrap();
    let e2 = build_extension(&a2, &reg, &shifted).unwrap();
    let zeta = are_isomorphic(&e1, &e2).unwrap().expect("same class");
    println!("A2 by its regular module: {} classes; a shifted cocycle is isomorphic via", c.classes.len());
    for row in zeta.to_rows() {
        println!("  {}", row.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "));
    }
    assert!(are_isomorphic(&e1, &c.trivial).unwrap().is_none());
}
