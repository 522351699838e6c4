//! Named small instances and seeded random generators.
//!
//! The instances are defined over any field of characteristic other than 2.

use rand::Rng;

use crate::algebra::{AntiPreLieAlgebra, MultTable};
use crate::cohomology::{Cochain1, Cochain2};
use crate::dendriform::AntiLDendriform;
use crate::linalg::{Matrix, Tensor3};
use crate::representation::{dual_representation, regular_representation, semidirect_product, Representation};
use crate::scalar::Scalar;

fn algebra<S: Scalar>(n: usize, entries: &[(usize, usize, usize, i64)]) -> AntiPreLieAlgebra<S> {
    AntiPreLieAlgebra::new(MultTable::from_entries(n, entries)).expect("corpus algebra")
}

/// `e₁·e₂ = e₂`.
pub fn a2<S: Scalar>() -> AntiPreLieAlgebra<S> {
    algebra(2, &[(0, 1, 1, 1)])
}

/// `e₂·e₁ = e₂`. Not anti-pre-Lie.
pub fn a2_bar<S: Scalar>() -> MultTable<S> {
    MultTable::from_entries(2, &[(1, 0, 1, 1)])
}

/// `e₁·e₁ = e₂`.
pub fn nil2<S: Scalar>() -> AntiPreLieAlgebra<S> {
    algebra(2, &[(0, 0, 1, 1)])
}

/// `e·e = e`.
pub fn idempotent_line<S: Scalar>() -> AntiPreLieAlgebra<S> {
    algebra(1, &[(0, 0, 0, 1)])
}

/// `k ⊕ k` with orthogonal idempotents.
pub fn diagonal2<S: Scalar>() -> AntiPreLieAlgebra<S> {
    algebra(2, &[(0, 0, 0, 1), (1, 1, 1, 1)])
}

/// `k[x]/(x³)` on the basis `1, x, x²`.
pub fn truncated_polynomial3<S: Scalar>() -> AntiPreLieAlgebra<S> {
    let mut e = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i + j < 3 {
                e.push((i, j, i + j, 1));
            }
        }
    }
    algebra(3, &e)
}

/// `A₂ ⊕ k` with `k` spanned by an idempotent.
pub fn a2_plus_line<S: Scalar>() -> AntiPreLieAlgebra<S> {
    AntiPreLieAlgebra::new(a2::<S>().table().direct_sum(idempotent_line::<S>().table())).expect("direct sum")
}

/// `A₂` in the basis `f₁ = e₁ + e₂`, `f₂ = e₁ − e₂`; a dense table.
pub fn a2_skewed<S: Scalar>() -> AntiPreLieAlgebra<S> {
    let p = Matrix::from_i64_rows(&[&[1, 1], &[1, -1]]);
    AntiPreLieAlgebra::new(a2::<S>().table().change_basis(&p).expect("invertible")).expect("isomorphic copy")
}

/// `A₂ ⋉ A₂` along the regular representation.
pub fn a2_semidirect<S: Scalar>() -> AntiPreLieAlgebra<S> {
    let a = a2::<S>();
    semidirect_product(&a, &regular_representation(&a)).expect("valid representation")
}

pub fn algebras<S: Scalar>() -> Vec<(&'static str, AntiPreLieAlgebra<S>)> {
    vec![
        ("zero1", AntiPreLieAlgebra::zero(1)),
        ("zero2", AntiPreLieAlgebra::zero(2)),
        ("idempotent_line", idempotent_line()),
        ("a2", a2()),
        ("nil2", nil2()),
        ("diagonal2", diagonal2()),
        ("a2_skewed", a2_skewed()),
        ("truncated_polynomial3", truncated_polynomial3()),
        ("a2_plus_line", a2_plus_line()),
        ("a2_semidirect", a2_semidirect()),
    ]
}

/// `(L, 0)` on `A₂`.
pub fn a2_left_only<S: Scalar>() -> Representation<S> {
    let a = a2::<S>();
    Representation::new(2, a.table().left_matrices(), vec![Matrix::zeros(2, 2); 2]).expect("shape")
}

/// Regular, coregular and a trivial one-dimensional representation of every
/// corpus algebra, plus a few extra pairs.
pub fn representation_pairs<S: Scalar>() -> Vec<(String, AntiPreLieAlgebra<S>, Representation<S>)> {
    let mut out = Vec::new();
    for (name, alg) in algebras::<S>() {
        let reg = regular_representation(&alg);
        out.push((format!("{name}/regular"), alg.clone(), reg.clone()));
        out.push((format!("{name}/coregular"), alg.clone(), dual_representation(&reg)));
        out.push((format!("{name}/zero1"), alg.clone(), Representation::zero(alg.dim(), 1)));
    }
    out.push(("zero2/zero2".into(), AntiPreLieAlgebra::zero(2), Representation::zero(2, 2)));
    out.push(("a2/left_only".into(), a2(), a2_left_only()));
    out
}

/// `▷` = product of `A₂`, `◁ = 0`.
pub fn a2_right_dendriform<S: Scalar>() -> AntiLDendriform<S> {
    AntiLDendriform::new(a2::<S>().into_table(), MultTable::zero(2)).expect("shape")
}

fn random_entries<S: Scalar, R: Rng>(len: usize, bound: i64, rng: &mut R) -> Vec<S> {
    (0..len).map(|_| S::from_i64(rng.gen_range(-bound..=bound))).collect()
}

pub fn random_matrix<S: Scalar, R: Rng>(rows: usize, cols: usize, bound: i64, rng: &mut R) -> Matrix<S> {
    Matrix::from_vec(rows, cols, random_entries(rows * cols, bound, rng)).expect("shape")
}

pub fn random_table<S: Scalar, R: Rng>(n: usize, bound: i64, rng: &mut R) -> MultTable<S> {
    MultTable::new(Tensor3::from_vec((n, n, n), random_entries(n * n * n, bound, rng)).expect("shape")).expect("shape")
}

pub fn random_cochain1<S: Scalar, R: Rng>(dim_a: usize, dim_v: usize, bound: i64, rng: &mut R) -> Cochain1<S> {
    Cochain1::new(random_matrix(dim_v, dim_a, bound, rng))
}

pub fn random_cochain2<S: Scalar, R: Rng>(dim_a: usize, dim_v: usize, bound: i64, rng: &mut R) -> Cochain2<S> {
    Cochain2::new(Tensor3::from_vec((dim_a, dim_a, dim_v), random_entries(dim_a * dim_a * dim_v, bound, rng)).expect("shape"))
        .expect("shape")
}

/// A representation with random entries (usually not valid).
pub fn random_representation<S: Scalar, R: Rng>(dim_a: usize, dim_v: usize, bound: i64, rng: &mut R) -> Representation<S> {
    let mut mats = || (0..dim_a).map(|_| random_matrix(dim_v, dim_v, bound, rng)).collect::<Vec<_>>();
    let rho = mats();
    let mu = mats();
    Representation::new(dim_v, rho, mu).expect("shape")
}
