//! Anti-L-dendriform algebras, O-operators, and the constructions linking
//! them to anti-pre-Lie algebras.
//!
//! An anti-L-dendriform algebra carries two products `▷` (`right`) and `◁`
//! (`left`); its associated anti-pre-Lie product is `x·y = x▷y − y◁x`. Its three
//! identities are evaluated through the left-multiplication operators
//! `L▷(x)`, `L◁(x)`:
//!
//! ```text
//! L▷(x)L▷(y) − L▷(y)L▷(x) − L▷([y,x])                                  = 0
//! L▷(x)L◁(y) − L◁(x·y) + L◁(y)L◁(x) + L◁(y)L▷(x)                        = 0
//! L◁(y)L◁(x) + L◁(y)L▷(x) + L▷([x,y]) − L◁(x)L▷(y) − L◁(x)L◁(y)         = 0
//! ```

use crate::algebra::{check_morphism, AntiPreLieAlgebra, MultTable};
use crate::error::{Error, Result};
use crate::linalg::{sub_vec, Matrix, Vector};
use crate::report::Report;
use crate::representation::{dual_representation, regular_representation, Representation};
use crate::scalar::Scalar;

pub const DEND_FIRST: &str = "dendriform identity 1";
pub const DEND_SECOND: &str = "dendriform identity 2";
pub const DEND_THIRD: &str = "dendriform identity 3";
pub const O_OPERATOR: &str = "T(u)T(v) = T(rho(Tu)v + mu(Tv)u)";
pub const FORM_INVARIANCE: &str = "B(x,yz) - B(y,xz) = B([y,x],z)";

/// Pair of products `▷` and `◁` on one space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntiLDendriform<S> {
    right: MultTable<S>,
    left: MultTable<S>,
}

impl<S: Scalar> AntiLDendriform<S> {
    pub fn new(right: MultTable<S>, left: MultTable<S>) -> Result<Self> {
        if right.dim() != left.dim() {
            return Err(Error::Dimension(format!(
                "products of dimension {} and {}",
                right.dim(),
                left.dim()
            )));
        }
        Ok(AntiLDendriform { right, left })
    }

    pub fn zero(n: usize) -> Self {
        AntiLDendriform { right: MultTable::zero(n), left: MultTable::zero(n) }
    }

    pub fn dim(&self) -> usize {
        self.right.dim()
    }

    /// The product `▷`.
    pub fn right(&self) -> &MultTable<S> {
        &self.right
    }

    /// The product `◁`.
    pub fn left(&self) -> &MultTable<S> {
        &self.left
    }

    /// `x·y = x▷y − y◁x` as a table, without any validity check.
    pub fn associated_table(&self) -> MultTable<S> {
        self.right.sub(&self.left.opposite())
    }
}

pub fn check_anti_l_dendriform<S: Scalar>(d: &AntiLDendriform<S>) -> Report<S> {
    let n = d.dim();
    let assoc = d.associated_table();
    let lr = d.right.left_matrices();
    let ll = d.left.left_matrices();
    let lr_of = |v: &[S]| Matrix::combination(v, &lr, n, n);
    let ll_of = |v: &[S]| Matrix::combination(v, &ll, n, n);
    let mut report = Report::new();
    for x in 0..n {
        for y in 0..n {
            let first = lr[x].commutator(&lr[y]).sub(&lr_of(&assoc.basis_commutator(y, x)));
            let second = lr[x]
                .mul(&ll[y])
                .sub(&ll_of(assoc.basis_product(x, y)))
                .add(&ll[y].mul(&ll[x]))
                .add(&ll[y].mul(&lr[x]));
            let third = ll[y]
                .mul(&ll[x])
                .add(&ll[y].mul(&lr[x]))
                .add(&lr_of(&assoc.basis_commutator(x, y)))
                .sub(&ll[x].mul(&lr[y]))
                .sub(&ll[x].mul(&ll[y]));
            for z in 0..n {
                report.record(DEND_FIRST, &[x, y, z], first.column(z));
                report.record(DEND_SECOND, &[x, y, z], second.column(z));
                report.record(DEND_THIRD, &[x, y, z], third.column(z));
            }
        }
    }
    report
}

fn require_dendriform<S: Scalar>(d: &AntiLDendriform<S>) -> Result<()> {
    let r = check_anti_l_dendriform(d);
    if !r.passed() {
        return Err(Error::NotDendriform(r.summary()));
    }
    Ok(())
}

/// The associated anti-pre-Lie algebra `x·y = x▷y − y◁x`.
pub fn associated_anti_pre_lie<S: Scalar>(d: &AntiLDendriform<S>) -> Result<AntiPreLieAlgebra<S>> {
    require_dendriform(d)?;
    AntiPreLieAlgebra::new(d.associated_table())
}

/// `(A, L▷, −L◁)`.
pub fn left_mult_representation<S: Scalar>(d: &AntiLDendriform<S>) -> Representation<S> {
    let rho = d.right.left_matrices();
    let mu = d.left.left_matrices().iter().map(Matrix::neg).collect();
    Representation::new(d.dim(), rho, mu).expect("square matrices of matching size")
}

fn check_operator_shape<S: Scalar>(alg: &AntiPreLieAlgebra<S>, rep: &Representation<S>, t: &Matrix<S>) -> Result<()> {
    if rep.dim_a() != alg.dim() || t.rows() != alg.dim() || t.cols() != rep.dim_v() {
        return Err(Error::Dimension(format!(
            "O-operator must be {}x{}, got {}x{}",
            alg.dim(),
            rep.dim_v(),
            t.rows(),
            t.cols()
        )));
    }
    Ok(())
}

/// Checks `T(u)·T(v) = T(ρ(T(u))v + μ(T(v))u)` on all basis pairs of `V`.
pub fn check_o_operator<S: Scalar>(
    alg: &AntiPreLieAlgebra<S>,
    rep: &Representation<S>,
    t: &Matrix<S>,
) -> Result<Report<S>> {
    check_operator_shape(alg, rep, t)?;
    let m = rep.dim_v();
    let images: Vec<Vector<S>> = (0..m).map(|u| t.column(u)).collect();
    let rho_t: Vec<Matrix<S>> = images.iter().map(|x| rep.rho_of(x)).collect();
    let mu_t: Vec<Matrix<S>> = images.iter().map(|x| rep.mu_of(x)).collect();
    let mut report = Report::new();
    for u in 0..m {
        for v in 0..m {
            let lhs = alg.table().product(&images[u], &images[v]);
            let inner = crate::linalg::add_vec(&rho_t[u].column(v), &mu_t[v].column(u));
            report.record(O_OPERATOR, &[u, v], sub_vec(&lhs, &t.mul_vec(&inner)));
        }
    }
    Ok(report)
}

fn require_o_operator<S: Scalar>(alg: &AntiPreLieAlgebra<S>, rep: &Representation<S>, t: &Matrix<S>) -> Result<()> {
    let r = check_o_operator(alg, rep, t)?;
    if !r.passed() {
        return Err(Error::NotOOperator(r.summary()));
    }
    Ok(())
}

/// Dendriform structure on `V`: `u ▷ v = ρ(T(u))v`, `u ◁ v = −μ(T(u))v`.
pub fn induced_dendriform<S: Scalar>(
    alg: &AntiPreLieAlgebra<S>,
    rep: &Representation<S>,
    t: &Matrix<S>,
) -> Result<AntiLDendriform<S>> {
    require_o_operator(alg, rep, t)?;
    let m = rep.dim_v();
    let right: Vec<Matrix<S>> = (0..m).map(|u| rep.rho_of(&t.column(u))).collect();
    let left: Vec<Matrix<S>> = (0..m).map(|u| rep.mu_of(&t.column(u)).neg()).collect();
    AntiLDendriform::new(MultTable::from_left_matrices(&right), MultTable::from_left_matrices(&left))
}

/// Whether the column space of `t` is closed under the product of `alg`.
pub fn image_is_subalgebra<S: Scalar>(alg: &AntiPreLieAlgebra<S>, t: &Matrix<S>) -> bool {
    let basis = t.column_space_basis();
    let rank = basis.len();
    basis.iter().all(|x| {
        basis.iter().all(|y| {
            let mut cols = basis.clone();
            cols.push(alg.table().product(x, y));
            Matrix::from_columns(alg.dim(), &cols).map(|m| m.rank() == rank).unwrap_or(false)
        })
    })
}

/// `T` is a morphism from the associated algebra of the induced structure on `V` into `alg`.
pub fn check_induced_morphism<S: Scalar>(
    alg: &AntiPreLieAlgebra<S>,
    rep: &Representation<S>,
    t: &Matrix<S>,
) -> Result<Report<S>> {
    let d = induced_dendriform(alg, rep, t)?;
    check_morphism(t, &d.associated_table(), alg.table())
}

/// Compatible structure on `A` from an invertible O-operator `T: V → A`:
/// `x ▷ y = T(ρ(x)T⁻¹y)`, `y ◁ x = −T(μ(y)T⁻¹x)`.
pub fn compatible_from_invertible_o<S: Scalar>(
    alg: &AntiPreLieAlgebra<S>,
    rep: &Representation<S>,
    t: &Matrix<S>,
) -> Result<AntiLDendriform<S>> {
    check_operator_shape(alg, rep, t)?;
    let t_inv = t.invert()?.ok_or(Error::Singular)?;
    require_o_operator(alg, rep, t)?;
    let n = alg.dim();
    let right: Vec<Matrix<S>> = (0..n).map(|i| t.mul(&rep.rho()[i]).mul(&t_inv)).collect();
    let left: Vec<Matrix<S>> = (0..n).map(|i| t.mul(&rep.mu()[i]).mul(&t_inv).neg()).collect();
    let d = AntiLDendriform::new(MultTable::from_left_matrices(&right), MultTable::from_left_matrices(&left))?;
    debug_assert_eq!(d.associated_table(), *alg.table());
    Ok(d)
}

/// Nondegenerate bilinear form `B(x, y) = xᵀ B y` satisfying
/// `B(x, y·z) − B(y, x·z) = B([y,x], z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantBilinearForm<S> {
    matrix: Matrix<S>,
}

/// Invariance residuals on all basis triples. The form may be degenerate.
pub fn check_form_invariance<S: Scalar>(alg: &AntiPreLieAlgebra<S>, b: &Matrix<S>) -> Result<Report<S>> {
    let n = alg.dim();
    if b.rows() != n || b.cols() != n {
        return Err(Error::Dimension(format!("bilinear form must be {n}x{n}")));
    }
    let t = alg.table();
    let form = |x: &[S], y: &[S]| crate::scalar::sum(x.iter().zip(b.mul_vec(y)).map(|(a, c)| a.clone() * c));
    let mut report = Report::new();
    for x in 0..n {
        for y in 0..n {
            let br = t.basis_commutator(y, x);
            for z in 0..n {
                let ez = crate::linalg::unit_vec(n, z);
                let ex = crate::linalg::unit_vec(n, x);
                let ey = crate::linalg::unit_vec(n, y);
                let r = form(&ex, t.basis_product(y, z)) - form(&ey, t.basis_product(x, z)) - form(&br, &ez);
                report.record(FORM_INVARIANCE, &[x, y, z], vec![r]);
            }
        }
    }
    Ok(report)
}

impl<S: Scalar> InvariantBilinearForm<S> {
    /// Validates nondegeneracy and invariance; with `strict_skew`, also `Bᵀ = −B`.
    pub fn new(alg: &AntiPreLieAlgebra<S>, matrix: Matrix<S>, strict_skew: bool) -> Result<Self> {
        let report = check_form_invariance(alg, &matrix)?;
        if matrix.rank() < alg.dim() {
            return Err(Error::DegenerateForm);
        }
        if !report.passed() {
            return Err(Error::NotInvariant(report.summary()));
        }
        if strict_skew && matrix.transpose() != matrix.neg() {
            return Err(Error::NotSkew);
        }
        Ok(InvariantBilinearForm { matrix })
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.matrix
    }

    pub fn is_skew(&self) -> bool {
        self.matrix.transpose() == self.matrix.neg()
    }

    /// Matrix of `B♯: A → A*`, `⟨B♯(x), y⟩ = B(x, y)`, in the dual basis.
    pub fn sharp(&self) -> Matrix<S> {
        self.matrix.transpose()
    }

    /// `(B♯)⁻¹: A* → A`.
    pub fn sharp_inverse(&self) -> Matrix<S> {
        self.sharp().invert().expect("square").expect("nondegenerate form")
    }
}

/// The representation `(A*, R* − L*, R*)` dual to the regular one.
pub fn coregular_representation<S: Scalar>(alg: &AntiPreLieAlgebra<S>) -> Representation<S> {
    dual_representation(&regular_representation(alg))
}

/// Structure defined by `B(x▷y, z) = −B(y, [z,x])` and `B(x◁y, z) = B(y, z·x)`,
/// solved through the nondegenerate system `Bᵀ w = r`.
///
/// The result is verified (identities and `x▷y − y◁x = x·y`). Skew forms always
/// pass; a non-skew invariant form usually does not, and is then refused with
/// [`Error::NotSkew`].
pub fn dendriform_from_bilinear_form<S: Scalar>(
    alg: &AntiPreLieAlgebra<S>,
    form: &InvariantBilinearForm<S>,
) -> Result<AntiLDendriform<S>> {
    let d = dendriform_from_form_unchecked(alg, form)?;
    if d.associated_table() != *alg.table() || !check_anti_l_dendriform(&d).passed() {
        return Err(if form.is_skew() {
            Error::NotDendriform("structure from a skew form failed verification".into())
        } else {
            Error::NotSkew
        });
    }
    Ok(d)
}

/// The two defining linear solves, without the compatibility check.
pub fn dendriform_from_form_unchecked<S: Scalar>(
    alg: &AntiPreLieAlgebra<S>,
    form: &InvariantBilinearForm<S>,
) -> Result<AntiLDendriform<S>> {
    let n = alg.dim();
    let t = alg.table();
    let b = &form.matrix;
    let bt_inv = form.sharp_inverse();
    let mut right = MultTable::zero(n);
    let mut left = MultTable::zero(n);
    let mut rhs_r = vec![S::zero(); n];
    let mut rhs_l = vec![S::zero(); n];
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                // B(y, w) = Σ_a B[y][a] w_a
                let dot = |w: &[S]| crate::scalar::sum(b.row(y).iter().zip(w).map(|(p, q)| p.clone() * q.clone()));
                rhs_r[z] = -dot(&t.basis_commutator(z, x));
                rhs_l[z] = dot(t.basis_product(z, x));
            }
            let mut c = right.clone().into_constants();
            c.set_fiber(x, y, &bt_inv.mul_vec(&rhs_r));
            right = MultTable::new(c)?;
            let mut c = left.clone().into_constants();
            c.set_fiber(x, y, &bt_inv.mul_vec(&rhs_l));
            left = MultTable::new(c)?;
        }
    }
    AntiLDendriform::new(right, left)
}
