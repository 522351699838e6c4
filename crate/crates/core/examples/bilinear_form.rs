//! Skew-symmetric invariant forms and the compatible anti-L-dendriform structures they produce.

use antiprelie::corpus;
use antiprelie::dendriform::{
    check_anti_l_dendriform, check_o_operator, coregular_representation, dendriform_from_bilinear_form,
};
use antiprelie::scalar::Rational;
use antiprelie::search::{search_bilinear_forms, SearchSpec};

fn main() {
    for (name, alg) in corpus::algebras::<Rational>() {
        if alg.dim() % 2 == 1 {
            continue;
        }
        let forms = search_bilinear_forms(&alg, &SearchSpec::bounded(1), true).unwrap();
        println!("{name}: {} skew invariant forms with entries in {{-1, 0, 1}}", forms.len());
        for form in forms.iter().take(2) {
            let d = dendriform_from_bilinear_form(&alg, form).unwrap();
            assert!(check_anti_l_dendriform(&d).passed());
            assert_eq!(&d.associated_table(), alg.table());
            let t = form.sharp_inverse();
            assert!(check_o_operator(&alg, &coregular_representation(&alg), &t).unwrap().passed());
            println!("  B = {:?}", form.matrix().to_rows().iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>());
        }
    }
}
