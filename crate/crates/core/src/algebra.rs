//! Anti-pre-Lie algebras given by structure constants.
//!
//! A [`MultTable`] stores `c[i][j][k]`, the coefficient of `e_k` in `e_i · e_j`.
//! The same carrier is reused for every bilinear product in the crate (the two
//! dendriform products, deformation terms, extension products).
//!
//! An anti-pre-Lie algebra satisfies, for all `x, y, z`:
//!
//! ```text
//! x·(y·z) − y·(x·z) = [y,x]·z
//! [x,y]·z + [y,z]·x + [z,x]·y = 0          where [x,y] = x·y − y·x
//! ```
//!
//! Checks evaluate both identities through left-multiplication matrices on all
//! `n³` ordered basis triples.

use crate::error::{Error, Result};
use crate::linalg::{axpy, sub_vec, zero_vec, Matrix, Tensor3, Vector};
use crate::report::Report;
use crate::scalar::Scalar;

pub const LEFT_ANTISYMMETRY: &str = "x(yz) - y(xz) = [y,x]z";
pub const CYCLIC: &str = "[x,y]z + [y,z]x + [z,x]y = 0";
pub const LIE_ANTISYMMETRY: &str = "[x,y] = -[y,x]";
pub const JACOBI: &str = "jacobi";
pub const MORPHISM: &str = "f(xy) = f(x)f(y)";

/// Structure constants of a bilinear product on an `n`-dimensional space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultTable<S> {
    c: Tensor3<S>,
}

impl<S: Scalar> MultTable<S> {
    pub fn new(c: Tensor3<S>) -> Result<Self> {
        let (a, b, d) = c.dims();
        if a != b || b != d {
            return Err(Error::Dimension(format!(
                "structure constants must be n x n x n, got {a}x{b}x{d}"
            )));
        }
        Ok(MultTable { c })
    }

    pub fn zero(n: usize) -> Self {
        MultTable { c: Tensor3::zeros(n, n, n) }
    }

    /// Table with the listed nonzero products `(i, j, k, coeff)`: `e_i · e_j ∋ coeff·e_k`.
    pub fn from_entries(n: usize, entries: &[(usize, usize, usize, i64)]) -> Self {
        let mut t = Self::zero(n);
        for &(i, j, k, v) in entries {
            let cur = t.c.get(i, j, k).clone();
            t.c.set(i, j, k, cur + S::from_i64(v));
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.c.dims().0
    }

    pub fn constants(&self) -> &Tensor3<S> {
        &self.c
    }

    pub fn into_constants(self) -> Tensor3<S> {
        self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_zero()
    }

    /// `e_i · e_j` as a coordinate vector.
    pub fn basis_product(&self, i: usize, j: usize) -> &[S] {
        self.c.fiber(i, j)
    }

    pub fn multiply(&self, x: &[S], y: &[S]) -> Result<Vector<S>> {
        let n = self.dim();
        if x.len() != n || y.len() != n {
            return Err(Error::Dimension(format!(
                "vectors of length {} and {} for a {n}-dimensional product",
                x.len(),
                y.len()
            )));
        }
        Ok(self.product(x, y))
    }

    pub(crate) fn product(&self, x: &[S], y: &[S]) -> Vector<S> {
        let n = self.dim();
        let mut out = zero_vec(n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                axpy(&mut out, &(xi.clone() * yj.clone()), self.c.fiber(i, j));
            }
        }
        out
    }

    pub fn commutator(&self, x: &[S], y: &[S]) -> Result<Vector<S>> {
        Ok(sub_vec(&self.multiply(x, y)?, &self.multiply(y, x)?))
    }

    /// `[e_i, e_j]`.
    pub fn basis_commutator(&self, i: usize, j: usize) -> Vector<S> {
        sub_vec(self.c.fiber(i, j), self.c.fiber(j, i))
    }

    /// Matrix of `L(e_i): y ↦ e_i · y`.
    pub fn left_matrix(&self, i: usize) -> Matrix<S> {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            for k in 0..n {
                m.set(k, j, self.c.get(i, j, k).clone());
            }
        }
        m
    }

    /// Matrix of `R(e_i): y ↦ y · e_i`.
    pub fn right_matrix(&self, i: usize) -> Matrix<S> {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            for k in 0..n {
                m.set(k, j, self.c.get(j, i, k).clone());
            }
        }
        m
    }

    pub fn left_matrices(&self) -> Vec<Matrix<S>> {
        (0..self.dim()).map(|i| self.left_matrix(i)).collect()
    }

    pub fn right_matrices(&self) -> Vec<Matrix<S>> {
        (0..self.dim()).map(|i| self.right_matrix(i)).collect()
    }

    /// Rebuilds a table from left-multiplication matrices `L(e_i)`.
    pub fn from_left_matrices(left: &[Matrix<S>]) -> Self {
        let n = left.len();
        let mut t = Self::zero(n);
        for (i, m) in left.iter().enumerate() {
            for j in 0..n {
                for k in 0..n {
                    t.c.set(i, j, k, m.get(k, j).clone());
                }
            }
        }
        t
    }

    /// Table transposed in its two arguments: `x ∘ y = y · x`.
    pub fn opposite(&self) -> Self {
        let n = self.dim();
        let mut t = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                t.c.set_fiber(i, j, self.c.fiber(j, i));
            }
        }
        t
    }

    pub fn add(&self, other: &Self) -> Self {
        MultTable { c: self.c.add(&other.c) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        MultTable { c: self.c.sub(&other.c) }
    }

    pub fn scale(&self, s: &S) -> Self {
        MultTable { c: self.c.scale(s) }
    }

    /// Structure constants in the basis `f_a = Σ_b P[b][a] e_b` (columns of `P`).
    pub fn change_basis(&self, p: &Matrix<S>) -> Result<Self> {
        let n = self.dim();
        if p.rows() != n || p.cols() != n {
            return Err(Error::Dimension("basis change must be n x n".into()));
        }
        let p_inv = p.invert()?.ok_or(Error::Singular)?;
        let cols: Vec<Vector<S>> = (0..n).map(|a| p.column(a)).collect();
        let mut t = Self::zero(n);
        for a in 0..n {
            for b in 0..n {
                let prod = self.product(&cols[a], &cols[b]);
                t.c.set_fiber(a, b, &p_inv.mul_vec(&prod));
            }
        }
        Ok(t)
    }

    /// Product on `A ⊕ B` with `A·B = B·A = 0`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let (n, m) = (self.dim(), other.dim());
        let mut t = Self::zero(n + m);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    t.c.set(i, j, k, self.c.get(i, j, k).clone());
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    t.c.set(n + i, n + j, n + k, other.c.get(i, j, k).clone());
                }
            }
        }
        t
    }
}

/// Evaluates both anti-pre-Lie identities on every ordered basis triple.
///
/// Violations are listed in lexicographic triple order; within a triple the
/// left-antisymmetry identity comes before the cyclic one.
pub fn check_anti_pre_lie<S: Scalar>(table: &MultTable<S>) -> Report<S> {
    let n = table.dim();
    let left = table.left_matrices();
    let left_of = |v: &[S]| Matrix::combination(v, &left, n, n);
    // L([e_i, e_j]) for all pairs.
    let bracket_left: Vec<Vec<Matrix<S>>> = (0..n)
        .map(|i| (0..n).map(|j| left_of(&table.basis_commutator(i, j))).collect())
        .collect();
    let mut report = Report::new();
    for i in 0..n {
        for j in 0..n {
            // L(e_i)L(e_j) − L(e_j)L(e_i) − L([e_j,e_i]); column k is the residual at (i,j,k).
            let first = left[i].commutator(&left[j]).sub(&bracket_left[j][i]);
            for k in 0..n {
                report.record(LEFT_ANTISYMMETRY, &[i, j, k], first.column(k));
                let mut cyc = bracket_left[i][j].column(k);
                crate::linalg::axpy(&mut cyc, &S::one(), &bracket_left[j][k].column(i));
                crate::linalg::axpy(&mut cyc, &S::one(), &bracket_left[k][i].column(j));
                report.record(CYCLIC, &[i, j, k], cyc);
            }
        }
    }
    report
}

/// A multiplication table that has passed [`check_anti_pre_lie`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntiPreLieAlgebra<S> {
    table: MultTable<S>,
}

impl<S: Scalar> AntiPreLieAlgebra<S> {
    pub fn new(table: MultTable<S>) -> Result<Self> {
        let report = check_anti_pre_lie(&table);
        if !report.passed() {
            return Err(Error::NotAntiPreLie(report.summary()));
        }
        Ok(AntiPreLieAlgebra { table })
    }

    pub fn zero(n: usize) -> Self {
        AntiPreLieAlgebra { table: MultTable::zero(n) }
    }

    pub fn table(&self) -> &MultTable<S> {
        &self.table
    }

    pub fn into_table(self) -> MultTable<S> {
        self.table
    }

    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    pub fn multiply(&self, x: &[S], y: &[S]) -> Result<Vector<S>> {
        self.table.multiply(x, y)
    }
}

/// Lie bracket given by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieTable<S> {
    bracket: Tensor3<S>,
}

impl<S: Scalar> LieTable<S> {
    /// Wraps raw structure constants without checking the Lie axioms.
    pub fn new(bracket: Tensor3<S>) -> Result<Self> {
        let (a, b, c) = bracket.dims();
        if a != b || b != c {
            return Err(Error::Dimension(format!("bracket constants of shape {a}x{b}x{c} are not cubic")));
        }
        Ok(LieTable { bracket })
    }

    pub fn dim(&self) -> usize {
        self.bracket.dims().0
    }

    pub fn constants(&self) -> &Tensor3<S> {
        &self.bracket
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &[S] {
        self.bracket.fiber(i, j)
    }

    pub fn bracket(&self, x: &[S], y: &[S]) -> Vector<S> {
        MultTable { c: self.bracket.clone() }.product(x, y)
    }

    pub fn is_abelian(&self) -> bool {
        self.bracket.is_zero()
    }
}

/// Antisymmetry and Jacobi on all basis pairs and triples.
pub fn check_lie<S: Scalar>(lie: &LieTable<S>) -> Report<S> {
    let n = lie.dim();
    let as_table = MultTable { c: lie.bracket.clone() };
    let mut report = Report::new();
    for i in 0..n {
        for j in 0..n {
            let sum = crate::linalg::add_vec(lie.basis_bracket(i, j), lie.basis_bracket(j, i));
            report.record(LIE_ANTISYMMETRY, &[i, j], sum);
        }
    }
    let left = as_table.left_matrices();
    for i in 0..n {
        for j in 0..n {
            // ad_i ad_j − ad_j ad_i − ad_[i,j]
            let ad_ij = Matrix::combination(lie.basis_bracket(i, j), &left, n, n);
            let m = left[i].commutator(&left[j]).sub(&ad_ij);
            for k in 0..n {
                report.record(JACOBI, &[i, j, k], m.column(k));
            }
        }
    }
    report
}

/// The commutator Lie algebra `[x, y] = x·y − y·x`.
pub fn sub_adjacent_lie<S: Scalar>(alg: &AntiPreLieAlgebra<S>) -> Result<LieTable<S>> {
    let t = alg.table();
    let n = t.dim();
    let mut bracket = Tensor3::zeros(n, n, n);
    for i in 0..n {
        for j in 0..n {
            bracket.set_fiber(i, j, &t.basis_commutator(i, j));
        }
    }
    let lie = LieTable { bracket };
    let report = check_lie(&lie);
    if !report.passed() {
        return Err(Error::NotLie(report.summary()));
    }
    Ok(lie)
}

/// Checks `f(e_i · e_j) = f(e_i) ·' f(e_j)` on all basis pairs. `f` is `dst.dim() x src.dim()`.
pub fn check_morphism<S: Scalar>(
    f: &Matrix<S>,
    src: &MultTable<S>,
    dst: &MultTable<S>,
) -> Result<Report<S>> {
    let (n, m) = (src.dim(), dst.dim());
    if f.rows() != m || f.cols() != n {
        return Err(Error::Dimension(format!(
            "morphism must be {m}x{n}, got {}x{}",
            f.rows(),
            f.cols()
        )));
    }
    let images: Vec<Vector<S>> = (0..n).map(|i| f.column(i)).collect();
    let mut report = Report::new();
    for i in 0..n {
        for j in 0..n {
            let lhs = f.mul_vec(src.basis_product(i, j));
            let rhs = dst.product(&images[i], &images[j]);
            report.record(MORPHISM, &[i, j], sub_vec(&lhs, &rhs));
        }
    }
    Ok(report)
}
