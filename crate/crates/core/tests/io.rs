use antiprelie::algebra::{AntiPreLieAlgebra, MultTable};
use antiprelie::cohomology::Cochain2;
use antiprelie::corpus;
use antiprelie::deformation::{random_isomorphism, sample_deformation, TruncatedDeformation, TruncatedIsomorphism};
use antiprelie::dendriform::AntiLDendriform;
use antiprelie::extension::build_extension;
use antiprelie::io::{from_document, parse, print, to_document, BilinearFormDoc, Document, ExtensionDoc, OOperatorDoc};
use antiprelie::linalg::Matrix;
use antiprelie::representation::Representation;
use antiprelie::scalar::{Fp, Rational, Scalar};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn round_trip<D: Document + PartialEq + std::fmt::Debug>(d: &D) {
    let text = print(&to_document(d));
    let back: D = from_document(&parse(&text).unwrap()).unwrap();
    assert_eq!(&back, d);
}

fn all_documents<S: Scalar>() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for (_, alg, rep) in corpus::representation_pairs::<S>() {
        round_trip(&alg);
        round_trip(alg.table());
        round_trip(&rep);
        round_trip(&corpus::random_cochain2::<S, _>(alg.dim(), rep.dim_v(), 3, &mut rng));
        round_trip(&OOperatorDoc(corpus::random_matrix::<S, _>(alg.dim(), rep.dim_v(), 3, &mut rng)));
    }
    round_trip(&corpus::a2_right_dendriform::<S>());
    round_trip(&AntiLDendriform::<S>::zero(3));
    round_trip(&BilinearFormDoc(Matrix::<S>::from_i64_rows(&[&[0, 1], &[-1, 0]])));
    let alg = corpus::nil2::<S>();
    let def = sample_deformation(&alg, 2, 1, &mut rng).unwrap().unwrap_or_else(|| TruncatedDeformation::trivial(alg, 2));
    round_trip(&def);
    round_trip(&random_isomorphism::<S, _>(2, 3, 2, &mut rng));
    round_trip(&TruncatedIsomorphism::<S>::identity(2, 0));
    let ext = build_extension(&corpus::a2::<S>(), &Representation::zero(2, 1), &Cochain2::zero(2, 1)).unwrap();
    round_trip(&ExtensionDoc::from_extension(&ext));
}

#[test]
fn documents_round_trip_over_q() {
    all_documents::<Rational>();
}

#[test]
fn documents_round_trip_over_f5() {
    all_documents::<Fp<5>>();
}

#[test]
fn rationals_keep_exact_fractions() {
    let m = Matrix::from_rows(vec![vec![Rational::new(1.into(), 3.into()), Rational::new((-7).into(), 2.into())]]).unwrap();
    round_trip(&OOperatorDoc(m));
}

#[test]
fn algebra_documents_are_verified_on_load() {
    let doc = to_document(&corpus::a2_bar::<Rational>());
    assert!(from_document::<MultTable<Rational>>(&doc).is_ok());
    assert!(from_document::<AntiPreLieAlgebra<Rational>>(&doc).is_err());
}

#[test]
fn wrong_field_or_kind_is_rejected() {
    let doc = to_document(&corpus::a2::<Rational>());
    assert!(from_document::<AntiPreLieAlgebra<Fp<5>>>(&doc).is_err());
    assert!(from_document::<Representation<Rational>>(&doc).is_err());
    assert!(parse("{not json").is_err());
}
