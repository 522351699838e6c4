//! Representations `(V, ρ, μ)` of an anti-pre-Lie algebra.
//!
//! The three defining identities, checked on basis pairs `(e_i, e_j)`:
//!
//! ```text
//! ρ(x)ρ(y) − ρ(y)ρ(x) = ρ([y,x])
//! μ(x·y) − ρ(x)μ(y) = μ(y)ρ(x) − μ(y)μ(x)
//! μ(y)μ(x) − μ(x)μ(y) + ρ([x,y]) = μ(y)ρ(x) − μ(x)ρ(y)
//! ```
//!
//! Dual spaces use the dual basis, so `ρ*(x)` is the matrix `−ρ(x)ᵀ`.

use crate::algebra::{check_anti_pre_lie, AntiPreLieAlgebra, LieTable, MultTable};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Tensor3};
use crate::report::Report;
use crate::scalar::Scalar;

pub const REP_COMMUTATOR: &str = "rho(x)rho(y) - rho(y)rho(x) = rho[y,x]";
pub const REP_MIXED: &str = "mu(xy) - rho(x)mu(y) = mu(y)rho(x) - mu(y)mu(x)";
pub const REP_BRACKET: &str = "mu(y)mu(x) - mu(x)mu(y) + rho[x,y] = mu(y)rho(x) - mu(x)rho(y)";
pub const LIE_REP: &str = "[a(x),a(y)] = a([x,y])";

/// Pair of actions `ρ, μ: A → gl(V)`, one `m x m` matrix per basis vector of `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation<S> {
    dim_v: usize,
    rho: Vec<Matrix<S>>,
    mu: Vec<Matrix<S>>,
}

impl<S: Scalar> Representation<S> {
    pub fn new(dim_v: usize, rho: Vec<Matrix<S>>, mu: Vec<Matrix<S>>) -> Result<Self> {
        if rho.len() != mu.len() {
            return Err(Error::Dimension(format!(
                "rho has {} matrices but mu has {}",
                rho.len(),
                mu.len()
            )));
        }
        for m in rho.iter().chain(&mu) {
            if m.rows() != dim_v || m.cols() != dim_v {
                return Err(Error::Dimension(format!(
                    "action matrix is {}x{}, expected {dim_v}x{dim_v}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(Representation { dim_v, rho, mu })
    }

    /// `ρ = μ = 0` on an `m`-dimensional space.
    pub fn zero(dim_a: usize, dim_v: usize) -> Self {
        Representation {
            dim_v,
            rho: vec![Matrix::zeros(dim_v, dim_v); dim_a],
            mu: vec![Matrix::zeros(dim_v, dim_v); dim_a],
        }
    }

    pub fn dim_a(&self) -> usize {
        self.rho.len()
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn rho(&self) -> &[Matrix<S>] {
        &self.rho
    }

    pub fn mu(&self) -> &[Matrix<S>] {
        &self.mu
    }

    pub fn rho_of(&self, x: &[S]) -> Matrix<S> {
        Matrix::combination(x, &self.rho, self.dim_v, self.dim_v)
    }

    pub fn mu_of(&self, x: &[S]) -> Matrix<S> {
        Matrix::combination(x, &self.mu, self.dim_v, self.dim_v)
    }

    fn check_dims(&self, alg: &MultTable<S>) -> Result<()> {
        if self.dim_a() != alg.dim() {
            return Err(Error::Dimension(format!(
                "representation is for a {}-dimensional algebra, algebra has dimension {}",
                self.dim_a(),
                alg.dim()
            )));
        }
        Ok(())
    }
}

/// Evaluates the three representation identities on all basis pairs.
pub fn check_representation<S: Scalar>(
    alg: &AntiPreLieAlgebra<S>,
    rep: &Representation<S>,
) -> Result<Report<S>> {
    check_representation_table(alg.table(), rep)
}

/// Same as [`check_representation`] for a table that has not been verified.
pub fn check_representation_table<S: Scalar>(
    table: &MultTable<S>,
    rep: &Representation<S>,
) -> Result<Report<S>> {
    rep.check_dims(table)?;
    let n = table.dim();
    let (rho, mu) = (&rep.rho, &rep.mu);
    let mut report = Report::new();
    for i in 0..n {
        for j in 0..n {
            let br_ji = rep.rho_of(&table.basis_commutator(j, i));
            let r1 = rho[i].commutator(&rho[j]).sub(&br_ji);
            report.record(REP_COMMUTATOR, &[i, j], r1.entries().to_vec());

            let mu_xy = rep.mu_of(table.basis_product(i, j));
            let r2 = mu_xy
                .sub(&rho[i].mul(&mu[j]))
                .sub(&mu[j].mul(&rho[i]))
                .add(&mu[j].mul(&mu[i]));
            report.record(REP_MIXED, &[i, j], r2.entries().to_vec());

            let rho_br_ij = rep.rho_of(&table.basis_commutator(i, j));
            let r3 = mu[j]
                .mul(&mu[i])
                .sub(&mu[i].mul(&mu[j]))
                .add(&rho_br_ij)
                .sub(&mu[j].mul(&rho[i]))
                .add(&mu[i].mul(&rho[j]));
            report.record(REP_BRACKET, &[i, j], r3.entries().to_vec());
        }
    }
    Ok(report)
}

fn require_valid<S: Scalar>(alg: &AntiPreLieAlgebra<S>, rep: &Representation<S>) -> Result<()> {
    let report = check_representation(alg, rep)?;
    if !report.passed() {
        return Err(Error::InvalidRepresentation(report.summary()));
    }
    Ok(())
}

/// `(A, L, R)` with `L(x)y = x·y` and `R(x)y = y·x`.
pub fn regular_representation<S: Scalar>(alg: &AntiPreLieAlgebra<S>) -> Representation<S> {
    let t = alg.table();
    Representation { dim_v: t.dim(), rho: t.left_matrices(), mu: t.right_matrices() }
}

/// Product table of `A ⊕ V`: `(x+u)(y+v) = x·y + ρ(x)v + μ(y)u`, no validity check.
pub fn semidirect_table<S: Scalar>(table: &MultTable<S>, rep: &Representation<S>) -> Result<MultTable<S>> {
    rep.check_dims(table)?;
    let (n, m) = (table.dim(), rep.dim_v());
    let mut c = Tensor3::zeros(n + m, n + m, n + m);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                c.set(i, j, k, table.constants().get(i, j, k).clone());
            }
        }
    }
    for i in 0..n {
        for a in 0..m {
            for b in 0..m {
                // e_i · v_a = ρ(e_i)v_a, v_a · e_i = μ(e_i)v_a
                c.set(i, n + a, n + b, rep.rho[i].get(b, a).clone());
                c.set(n + a, i, n + b, rep.mu[i].get(b, a).clone());
            }
        }
    }
    MultTable::new(c)
}

/// The semidirect product `A ⋉ V`. Refuses an invalid representation.
pub fn semidirect_product<S: Scalar>(
    alg: &AntiPreLieAlgebra<S>,
    rep: &Representation<S>,
) -> Result<AntiPreLieAlgebra<S>> {
    require_valid(alg, rep)?;
    AntiPreLieAlgebra::new(semidirect_table(alg.table(), rep)?)
}

/// Representation `ρ − μ` of the sub-adjacent Lie algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieRepresentation<S> {
    pub dim_v: usize,
    pub action: Vec<Matrix<S>>,
}

pub fn sub_adjacent_representation<S: Scalar>(rep: &Representation<S>) -> LieRepresentation<S> {
    LieRepresentation {
        dim_v: rep.dim_v,
        action: rep.rho.iter().zip(&rep.mu).map(|(r, m)| r.sub(m)).collect(),
    }
}

/// `[a(e_i), a(e_j)] = a([e_i, e_j])` on all basis pairs.
pub fn check_lie_representation<S: Scalar>(
    lie: &LieTable<S>,
    rep: &LieRepresentation<S>,
) -> Result<Report<S>> {
    let n = lie.dim();
    if rep.action.len() != n {
        return Err(Error::Dimension("Lie representation has the wrong number of matrices".into()));
    }
    let mut report = Report::new();
    for i in 0..n {
        for j in 0..n {
            let rhs = Matrix::combination(lie.basis_bracket(i, j), &rep.action, rep.dim_v, rep.dim_v);
            let r = rep.action[i].commutator(&rep.action[j]).sub(&rhs);
            report.record(LIE_REP, &[i, j], r.entries().to_vec());
        }
    }
    Ok(report)
}

/// `(V*, μ* − ρ*, μ*)`: matrices `−μᵀ + ρᵀ` and `−μᵀ`.
pub fn dual_representation<S: Scalar>(rep: &Representation<S>) -> Representation<S> {
    let rho = rep.rho.iter().zip(&rep.mu).map(|(r, m)| r.transpose().sub(&m.transpose())).collect();
    let mu = rep.mu.iter().map(|m| m.transpose().neg()).collect();
    Representation { dim_v: rep.dim_v, rho, mu }
}

/// The three conditions that are equivalent for any representation, each
/// evaluated on its own:
/// 1. `(V, μ − ρ, μ)` is a representation,
/// 2. `(V*, ρ*, μ*)` is a representation,
/// 3. `μ(x·y) + μ(y·x) = 0` on all basis pairs.
pub fn special_condition_report<S: Scalar>(
    alg: &AntiPreLieAlgebra<S>,
    rep: &Representation<S>,
) -> Result<[bool; 3]> {
    rep.check_dims(alg.table())?;
    let shifted = Representation {
        dim_v: rep.dim_v,
        rho: rep.mu.iter().zip(&rep.rho).map(|(m, r)| m.sub(r)).collect(),
        mu: rep.mu.clone(),
    };
    let first = check_representation(alg, &shifted)?.passed();

    let star = Representation {
        dim_v: rep.dim_v,
        rho: rep.rho.iter().map(|r| r.transpose().neg()).collect(),
        mu: rep.mu.iter().map(|m| m.transpose().neg()).collect(),
    };
    let second = check_representation(alg, &star)?.passed();

    let t = alg.table();
    let n = t.dim();
    let third = (0..n).all(|i| {
        (0..n).all(|j| {
            rep.mu_of(t.basis_product(i, j)).add(&rep.mu_of(t.basis_product(j, i))).is_zero()
        })
    });
    Ok([first, second, third])
}

/// True when `rep` passes and the semidirect table passes the algebra check;
/// used as a cross-check of the two verification paths.
pub fn semidirect_consistent<S: Scalar>(alg: &AntiPreLieAlgebra<S>, rep: &Representation<S>) -> Result<bool> {
    let rep_ok = check_representation(alg, rep)?.passed();
    let table_ok = check_anti_pre_lie(&semidirect_table(alg.table(), rep)?).passed();
    Ok(rep_ok == table_ok)
}
