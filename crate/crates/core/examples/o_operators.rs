//! Every O-operator on the two-dimensional corpus instances over F3, the
//! anti-L-dendriform structure each induces, and the compatible structure on the
//! algebra when the operator is invertible.

use antiprelie::corpus;
use antiprelie::dendriform::{
    check_anti_l_dendriform, check_induced_morphism, compatible_from_invertible_o, induced_dendriform,
};
use antiprelie::scalar::Fp;
use antiprelie::search::{search_o_operators, SearchSpec};

type F = Fp<3>;

fn main() {
    for (name, alg, rep) in corpus::representation_pairs::<F>() {
        if alg.dim() != 2 {
            continue;
        }
        let ops = search_o_operators(&alg, &rep, &SearchSpec::field()).unwrap();
        let mut invertible = 0;
        for t in &ops {
            let d = induced_dendriform(&alg, &rep, t).unwrap();
            assert!(check_anti_l_dendriform(&d).passed());
            assert!(check_induced_morphism(&alg, &rep, t).unwrap().passed());
            if t.is_square() && t.invert().unwrap().is_some() {
                invertible += 1;
                let c = compatible_from_invertible_o(&alg, &rep, t).unwrap();
                assert_eq!(&c.associated_table(), alg.table());
            }
        }
        println!("{name:<20} {:>3} O-operators, {invertible:>3} invertible", ops.len());
    }
}
