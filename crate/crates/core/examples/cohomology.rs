//! Second cohomology of every corpus pair, plus a spot check that coboundaries are closed.

use antiprelie::cohomology::{cohomology_spaces, d1, d2};
use antiprelie::corpus;
use antiprelie::scalar::Rational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    println!("{:<34} {:>3} {:>3} {:>3}", "pair", "Z2", "B2", "H2");
    for (name, alg, rep) in corpus::representation_pairs::<Rational>() {
        if alg.dim() > 3 {
            continue;
        }
        let s = cohomology_spaces(&alg, &rep).unwrap();
        println!("{name:<34} {:>3} {:>3} {:>3}", s.dim_z2(), s.dim_b2(), s.dim_h2());

        let f = corpus::random_cochain1(alg.dim(), rep.dim_v(), 5, &mut rng);
        assert!(d2(&alg, &rep, &d1(&alg, &rep, &f).unwrap()).unwrap().is_zero());
    }
}
