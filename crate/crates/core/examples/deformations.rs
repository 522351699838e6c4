//! Random truncated deformations, formal isomorphisms and rigidity.

use antiprelie::cohomology::{cohomology_spaces, is_cocycle};
use antiprelie::corpus;
use antiprelie::deformation::{
    apply_isomorphism, check_deformation, infinitesimal, random_isomorphism, rigidity_certificate, sample_deformation,
};
use antiprelie::representation::regular_representation;
use antiprelie::scalar::Rational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);

    let alg = corpus::nil2::<Rational>();
    let reg = regular_representation(&alg);
    let def = sample_deformation(&alg, 3, 1, &mut rng).unwrap().expect("sample");
    assert!(check_deformation(&def).passed());
    assert!(is_cocycle(&alg, &reg, &infinitesimal(&def).unwrap()).unwrap());

    let iso = random_isomorphism(alg.dim(), 3, 1, &mut rng);
    let moved = apply_isomorphism(&def, &iso).unwrap();
    assert!(check_deformation(&moved).passed());
    assert_eq!(apply_isomorphism(&moved, &iso.inverse()).unwrap(), def);
    println!("nil2: order-3 deformation survives a random isomorphism and its inverse");

    for (name, alg) in corpus::algebras::<Rational>().into_iter().filter(|(_, a)| a.dim() <= 2) {
        let h2 = cohomology_spaces(&alg, &regular_representation(&alg)).unwrap().dim_h2();
        let samples: Vec<_> = (0..3).filter_map(|_| sample_deformation(&alg, 3, 2, &mut rng).unwrap()).collect();
        let cert = rigidity_certificate(&alg, &samples, 3).unwrap();
        let done = cert.samples.iter().filter(|s| s.trivialized).count();
        println!("{name:<16} H2(A;A) = {h2}, trivialized {done}/{} samples", cert.samples.len());
    }
}
