//! Truncated one-parameter formal deformations `ω_t = ω + ω₁t + … + ω_N t^N`
//! and formal isomorphisms `Φ_t = Id + φ₁t + … + φ_N t^N`.

use rand::Rng;

use crate::algebra::{AntiPreLieAlgebra, MultTable};
use crate::cohomology::{cohomology_spaces, d1_matrix, d2_matrix, is_cocycle, Cochain1, Cochain2, Cochain3Pair};
use crate::error::{Error, Result};
use crate::linalg::{add_vec, axpy, scale_vec, sub_vec, unit_vec, zero_vec, Matrix, Vector};
use crate::report::Report;
use crate::representation::regular_representation;
use crate::scalar::Scalar;

pub const DEFORM_FIRST: &str = "deformation equation (left antisymmetry)";
pub const DEFORM_CYCLIC: &str = "deformation equation (cyclic)";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedDeformation<S> {
    base: AntiPreLieAlgebra<S>,
    terms: Vec<MultTable<S>>,
}

impl<S: Scalar> TruncatedDeformation<S> {
    pub fn new(base: AntiPreLieAlgebra<S>, terms: Vec<MultTable<S>>) -> Result<Self> {
        if let Some(t) = terms.iter().find(|t| t.dim() != base.dim()) {
            return Err(Error::Dimension(format!(
                "deformation term of dimension {} over a base of dimension {}",
                t.dim(),
                base.dim()
            )));
        }
        Ok(TruncatedDeformation { base, terms })
    }

    /// The undeformed algebra truncated at order `order`.
    pub fn trivial(base: AntiPreLieAlgebra<S>, order: usize) -> Self {
        let n = base.dim();
        TruncatedDeformation { base, terms: vec![MultTable::zero(n); order] }
    }

    pub fn base(&self) -> &AntiPreLieAlgebra<S> {
        &self.base
    }

    pub fn terms(&self) -> &[MultTable<S>] {
        &self.terms
    }

    pub fn order(&self) -> usize {
        self.terms.len()
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    /// `ω_k`, with `ω₀` the base product.
    pub fn term(&self, k: usize) -> &MultTable<S> {
        if k == 0 {
            self.base.table()
        } else {
            &self.terms[k - 1]
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.terms.iter().all(MultTable::is_zero)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedIsomorphism<S> {
    dim: usize,
    phis: Vec<Matrix<S>>,
}

impl<S: Scalar> TruncatedIsomorphism<S> {
    pub fn new(dim: usize, phis: Vec<Matrix<S>>) -> Result<Self> {
        if phis.iter().any(|p| p.rows() != dim || p.cols() != dim) {
            return Err(Error::Dimension(format!("isomorphism terms must be {dim}x{dim}")));
        }
        Ok(TruncatedIsomorphism { dim, phis })
    }

    pub fn identity(dim: usize, order: usize) -> Self {
        TruncatedIsomorphism { dim, phis: vec![Matrix::zeros(dim, dim); order] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.phis.len()
    }

    pub fn phis(&self) -> &[Matrix<S>] {
        &self.phis
    }

    /// `φ_k`, with `φ₀ = Id`.
    pub fn phi(&self, k: usize) -> Matrix<S> {
        if k == 0 {
            Matrix::identity(self.dim)
        } else {
            self.phis[k - 1].clone()
        }
    }

    /// `ψ₀ … ψ_N` with `(Σ φ_k t^k)(Σ ψ_k t^k) = Id` mod `t^{N+1}`.
    fn inverse_series(&self) -> Vec<Matrix<S>> {
        let mut psi = vec![Matrix::identity(self.dim)];
        for k in 1..=self.order() {
            let mut acc = Matrix::zeros(self.dim, self.dim);
            for i in 1..=k {
                acc = acc.sub(&self.phis[i - 1].mul(&psi[k - i]));
            }
            psi.push(acc);
        }
        psi
    }

    /// The truncated inverse `Φ_t⁻¹`.
    pub fn inverse(&self) -> Self {
        TruncatedIsomorphism { dim: self.dim, phis: self.inverse_series().split_off(1) }
    }
}

/// Sum over `i + j = n` of both deformation expressions on every basis triple;
/// `middle` restricts to `0 < i, j < n`.
fn order_sum<S: Scalar>(def: &TruncatedDeformation<S>, n: usize, middle: bool) -> Cochain3Pair<S> {
    let d = def.dim();
    let range = if middle { 1..n } else { 0..n + 1 };
    let mut out = Cochain3Pair::zero(d, d);
    for x in 0..d {
        for y in 0..d {
            for z in 0..d {
                let mut first = zero_vec(d);
                let mut second = zero_vec(d);
                for i in range.clone() {
                    let (wi, wj) = (def.term(i), def.term(n - i));
                    let e = |k| unit_vec(d, k);
                    let br = |a: usize, b: usize| sub_vec(wj.basis_product(a, b), wj.basis_product(b, a));
                    first = add_vec(&first, &wi.product(&e(x), wj.basis_product(y, z)));
                    first = sub_vec(&first, &wi.product(&e(y), wj.basis_product(x, z)));
                    first = sub_vec(&first, &wi.product(wj.basis_product(y, x), &e(z)));
                    first = add_vec(&first, &wi.product(wj.basis_product(x, y), &e(z)));
                    second = add_vec(&second, &wi.product(&br(x, y), &e(z)));
                    second = add_vec(&second, &wi.product(&br(y, z), &e(x)));
                    second = add_vec(&second, &wi.product(&br(z, x), &e(y)));
                }
                out.set(x, y, z, &first, &second);
            }
        }
    }
    out
}

/// Residuals of the deformation equations for orders `1..=N`; indices are `[n, x, y, z]`.
pub fn check_deformation<S: Scalar>(def: &TruncatedDeformation<S>) -> Report<S> {
    let d = def.dim();
    let mut report = Report::new();
    for n in 1..=def.order() {
        let sums = order_sum(def, n, false);
        for x in 0..d {
            for y in 0..d {
                for z in 0..d {
                    report.record(DEFORM_FIRST, &[n, x, y, z], sums.first(x, y, z).to_vec());
                    report.record(DEFORM_CYCLIC, &[n, x, y, z], sums.second(x, y, z).to_vec());
                }
            }
        }
    }
    report
}

/// `ω₁` as a 2-cochain with values in the regular representation. It must be a cocycle.
pub fn infinitesimal<S: Scalar>(def: &TruncatedDeformation<S>) -> Result<Cochain2<S>> {
    let n = def.dim();
    let Some(w1) = def.terms.first() else {
        return Ok(Cochain2::zero(n, n));
    };
    let f = Cochain2::from_table(w1);
    if !is_cocycle(&def.base, &regular_representation(&def.base), &f)? {
        return Err(Error::NotCocycle("infinitesimal of the deformation".into()));
    }
    Ok(f)
}

/// `ω'_t = Φ_t⁻¹ ∘ ω_t ∘ (Φ_t ⊗ Φ_t)` truncated at the order of `def`.
///
/// The isomorphism is truncated or padded with zero terms to match.
pub fn apply_isomorphism<S: Scalar>(
    def: &TruncatedDeformation<S>,
    iso: &TruncatedIsomorphism<S>,
) -> Result<TruncatedDeformation<S>> {
    let (d, order) = (def.dim(), def.order());
    if iso.dim() != d {
        return Err(Error::Dimension(format!("isomorphism of dimension {} on a deformation of dimension {d}", iso.dim())));
    }
    let mut phis = iso.phis.clone();
    phis.resize(order, Matrix::zeros(d, d));
    let iso = TruncatedIsomorphism { dim: d, phis };
    let psi = iso.inverse_series();
    let phi_cols: Vec<Vec<Vector<S>>> = (0..=order).map(|c| (0..d).map(|x| iso.phi(c).column(x)).collect()).collect();

    let mut terms = vec![MultTable::<S>::zero(d); order];
    for x in 0..d {
        for y in 0..d {
            // inner[s] = Σ_{b+c+e=s} ω_b(φ_c x, φ_e y)
            let mut inner = vec![zero_vec(d); order + 1];
            for b in 0..=order {
                for c in 0..=order - b {
                    for e in 0..=order - b - c {
                        let v = def.term(b).product(&phi_cols[c][x], &phi_cols[e][y]);
                        inner[b + c + e] = add_vec(&inner[b + c + e], &v);
                    }
                }
            }
            for (k, term) in terms.iter_mut().enumerate() {
                let n = k + 1;
                let mut acc = zero_vec(d);
                for a in 0..=n {
                    acc = add_vec(&acc, &psi[a].mul_vec(&inner[n - a]));
                }
                let mut c = std::mem::replace(term, MultTable::zero(d)).into_constants();
                c.set_fiber(x, y, &acc);
                *term = MultTable::new(c)?;
            }
        }
    }
    TruncatedDeformation::new(def.base.clone(), terms)
}

/// One step of the rigidity procedure at order `n`, assuming `ω₁ … ω_{n−1}` vanish.
///
/// Returns `φ_n` and the deformation transformed by `Id + φ_n tⁿ`, whose terms
/// vanish through order `n`, or `None` when `ω_n` is not a coboundary.
pub fn trivialize_step<S: Scalar>(
    def: &TruncatedDeformation<S>,
    n: usize,
) -> Result<Option<(Matrix<S>, TruncatedDeformation<S>)>> {
    if n == 0 || n > def.order() {
        return Err(Error::Precondition(format!("order {n} outside 1..={}", def.order())));
    }
    if def.terms[..n - 1].iter().any(|t| !t.is_zero()) {
        return Err(Error::Precondition(format!("terms below order {n} must vanish")));
    }
    let d = def.dim();
    let rep = regular_representation(&def.base);
    let target = Cochain2::from_table(def.term(n)).to_vector();
    let Some(psi) = d1_matrix(def.base.table(), &rep)?.solve(&target)? else {
        return Ok(None);
    };
    let phi_n = Cochain1::from_vector(d, d, psi)?.neg().map;
    let mut phis = vec![Matrix::zeros(d, d); def.order()];
    phis[n - 1] = phi_n.clone();
    let out = apply_isomorphism(def, &TruncatedIsomorphism { dim: d, phis })?;
    debug_assert!(out.terms[..n].iter().all(MultTable::is_zero));
    Ok(Some((phi_n, out)))
}

/// Outcome of trying to trivialize one sample deformation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleOutcome<S> {
    /// `φ_n` for every order reached.
    pub phis: Vec<Matrix<S>>,
    pub trivialized: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RigidityCertificate<S> {
    pub h2_dim: usize,
    pub order: usize,
    pub samples: Vec<SampleOutcome<S>>,
}

impl<S: Scalar> RigidityCertificate<S> {
    /// `H²(A;A) = 0`.
    pub fn rigid(&self) -> bool {
        self.h2_dim == 0
    }

    /// Every sample was trivialized through the requested order.
    pub fn passed(&self) -> bool {
        self.samples.iter().all(|s| s.trivialized)
    }
}

/// Computes `dim H²(A;A)` and runs repeated [`trivialize_step`] on each sample
/// through order `order` (capped by the sample's own order).
pub fn rigidity_certificate<S: Scalar>(
    alg: &AntiPreLieAlgebra<S>,
    samples: &[TruncatedDeformation<S>],
    order: usize,
) -> Result<RigidityCertificate<S>> {
    let h2_dim = cohomology_spaces(alg, &regular_representation(alg))?.dim_h2();
    let mut outcomes = Vec::new();
    for sample in samples {
        if sample.base != *alg {
            return Err(Error::Precondition("sample deformation has a different base".into()));
        }
        let mut current = sample.clone();
        let mut phis = Vec::new();
        let mut trivialized = true;
        for n in 1..=order.min(sample.order()) {
            match trivialize_step(&current, n)? {
                Some((phi, next)) => {
                    phis.push(phi);
                    current = next;
                }
                None => {
                    trivialized = false;
                    break;
                }
            }
        }
        outcomes.push(SampleOutcome { phis, trivialized });
    }
    Ok(RigidityCertificate { h2_dim, order, samples: outcomes })
}

fn random_scalar<S: Scalar, R: Rng>(rng: &mut R, bound: i64) -> S {
    S::from_i64(rng.gen_range(-bound..=bound))
}

const SAMPLE_ATTEMPTS: usize = 64;

/// Builds a verified deformation order by order: each `ω_n` solves
/// `d²ω_n = −(obstruction)` plus a random element of `Z²(A;A)` with
/// coefficients in `[−bound, bound]`.
///
/// A random choice can run into an obstruction that is not a coboundary; the
/// construction then restarts, and `None` is returned after a fixed number of
/// failed attempts.
pub fn sample_deformation<S: Scalar, R: Rng>(
    alg: &AntiPreLieAlgebra<S>,
    order: usize,
    bound: i64,
    rng: &mut R,
) -> Result<Option<TruncatedDeformation<S>>> {
    let rep = regular_representation(alg);
    let d2m = d2_matrix(alg.table(), &rep)?;
    let z2 = d2m.kernel_basis();
    for _ in 0..SAMPLE_ATTEMPTS {
        if let Some(def) = sample_once(alg, order, bound, &d2m, &z2, rng)? {
            debug_assert!(check_deformation(&def).passed());
            return Ok(Some(def));
        }
    }
    Ok(None)
}

fn sample_once<S: Scalar, R: Rng>(
    alg: &AntiPreLieAlgebra<S>,
    order: usize,
    bound: i64,
    d2m: &Matrix<S>,
    z2: &[Vector<S>],
    rng: &mut R,
) -> Result<Option<TruncatedDeformation<S>>> {
    let d = alg.dim();
    let mut def = TruncatedDeformation::new(alg.clone(), Vec::new())?;
    for n in 1..=order {
        def.terms.push(MultTable::zero(d));
        let obstruction = order_sum(&def, n, true).to_vector();
        let Some(mut w) = d2m.solve(&scale_vec(&S::from_i64(-1), &obstruction))? else {
            return Ok(None);
        };
        for z in z2 {
            axpy(&mut w, &random_scalar(rng, bound), z);
        }
        def.terms[n - 1] = Cochain2::from_vector(d, d, w)?.to_table()?;
    }
    Ok(Some(def))
}

/// Random `Φ_t` with entries of each `φ_k` in `[−bound, bound]`.
pub fn random_isomorphism<S: Scalar, R: Rng>(dim: usize, order: usize, bound: i64, rng: &mut R) -> TruncatedIsomorphism<S> {
    let phis = (0..order)
        .map(|_| Matrix::from_vec(dim, dim, (0..dim * dim).map(|_| random_scalar(rng, bound)).collect()).expect("shape"))
        .collect();
    TruncatedIsomorphism { dim, phis }
}
