//! Low-degree cohomology of an anti-pre-Lie algebra with coefficients in a
//! representation `(V, ρ, μ)`.
//!
//! `C¹ = Hom(A, V)` and `C²` is the space of all bilinear maps `A ⊗ A → V`
//! (no alternation is imposed). The coboundaries are
//!
//! ```text
//! d¹f(x,y)    = ρ(x)f(y) + μ(y)f(x) − f(x·y)
//! d²₁f(x,y,z) = ρ(x)f(y,z) − ρ(y)f(x,z) − μ(z)f(y,x) + μ(z)f(x,y)
//!               − f(y,x·z) + f(x,y·z) + f([x,y],z)
//! d²₂f(x,y,z) = μ(x)(f(y,z) − f(z,y)) + μ(y)(f(z,x) − f(x,z)) + μ(z)(f(x,y) − f(y,x))
//!               + f([x,y],z) + f([y,z],x) + f([z,x],y)
//! ```
//!
//! `Z²` is the common kernel of `d²₁, d²₂`, `B²` the image of `d¹`. Both are
//! computed from explicit coefficient matrices assembled term by term.
//!
//! Coordinates: a 1-cochain is the `m x n` matrix of `f`, flattened row-major
//! (`f(e_a)_k` at `k·n + a`); a 2-cochain is flattened in `[i][j][k]` order.

use crate::algebra::{AntiPreLieAlgebra, MultTable};
use crate::error::{Error, Result};
use crate::linalg::{axpy, sub_vec, zero_vec, Matrix, Tensor3, Vector};
use crate::representation::Representation;
use crate::scalar::Scalar;

/// Linear map `f: A → V` as an `m x n` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain1<S> {
    pub map: Matrix<S>,
}

impl<S: Scalar> Cochain1<S> {
    pub fn new(map: Matrix<S>) -> Self {
        Cochain1 { map }
    }

    pub fn zero(dim_a: usize, dim_v: usize) -> Self {
        Cochain1 { map: Matrix::zeros(dim_v, dim_a) }
    }

    pub fn dim_a(&self) -> usize {
        self.map.cols()
    }

    pub fn dim_v(&self) -> usize {
        self.map.rows()
    }

    pub fn apply(&self, x: &[S]) -> Vector<S> {
        self.map.mul_vec(x)
    }

    pub fn to_vector(&self) -> Vector<S> {
        self.map.entries().to_vec()
    }

    pub fn from_vector(dim_a: usize, dim_v: usize, v: Vector<S>) -> Result<Self> {
        Ok(Cochain1 { map: Matrix::from_vec(dim_v, dim_a, v)? })
    }

    pub fn neg(&self) -> Self {
        Cochain1 { map: self.map.neg() }
    }
}

/// Bilinear map `f: A ⊗ A → V`, `values[i][j][k]` = coefficient of `v_k` in `f(e_i, e_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain2<S> {
    pub values: Tensor3<S>,
}

impl<S: Scalar> Cochain2<S> {
    pub fn new(values: Tensor3<S>) -> Result<Self> {
        let (a, b, _) = values.dims();
        if a != b {
            return Err(Error::Dimension(format!("2-cochain must be n x n x m, got {a}x{b}")));
        }
        Ok(Cochain2 { values })
    }

    pub fn zero(dim_a: usize, dim_v: usize) -> Self {
        Cochain2 { values: Tensor3::zeros(dim_a, dim_a, dim_v) }
    }

    /// A bilinear product viewed as a 2-cochain with values in `A` itself.
    pub fn from_table(t: &MultTable<S>) -> Self {
        Cochain2 { values: t.constants().clone() }
    }

    pub fn to_table(&self) -> Result<MultTable<S>> {
        MultTable::new(self.values.clone())
    }

    pub fn dim_a(&self) -> usize {
        self.values.dims().0
    }

    pub fn dim_v(&self) -> usize {
        self.values.dims().2
    }

    pub fn at(&self, i: usize, j: usize) -> &[S] {
        self.values.fiber(i, j)
    }

    /// `f(x, y)` by bilinearity.
    pub fn apply(&self, x: &[S], y: &[S]) -> Vector<S> {
        let mut out = zero_vec(self.dim_v());
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                axpy(&mut out, &(xi.clone() * yj.clone()), self.at(i, j));
            }
        }
        out
    }

    /// `f(x, e_k)` where only the first argument is a general vector.
    fn apply_left(&self, x: &[S], k: usize) -> Vector<S> {
        let mut out = zero_vec(self.dim_v());
        for (i, xi) in x.iter().enumerate() {
            axpy(&mut out, xi, self.at(i, k));
        }
        out
    }

    fn apply_right(&self, k: usize, y: &[S]) -> Vector<S> {
        let mut out = zero_vec(self.dim_v());
        for (j, yj) in y.iter().enumerate() {
            axpy(&mut out, yj, self.at(k, j));
        }
        out
    }

    pub fn to_vector(&self) -> Vector<S> {
        self.values.entries().to_vec()
    }

    pub fn from_vector(dim_a: usize, dim_v: usize, v: Vector<S>) -> Result<Self> {
        Ok(Cochain2 { values: Tensor3::from_vec((dim_a, dim_a, dim_v), v)? })
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        Cochain2 { values: self.values.add(&other.values) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Cochain2 { values: self.values.sub(&other.values) }
    }

    pub fn scale(&self, c: &S) -> Self {
        Cochain2 { values: self.values.scale(c) }
    }
}

/// Values of `(d²₁f, d²₂f)` on all basis triples, each an `n x n x n x m` array.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain3Pair<S> {
    dim_a: usize,
    dim_v: usize,
    first: Vec<S>,
    second: Vec<S>,
}

impl<S: Scalar> Cochain3Pair<S> {
    pub fn zero(dim_a: usize, dim_v: usize) -> Self {
        let len = dim_a * dim_a * dim_a * dim_v;
        Cochain3Pair { dim_a, dim_v, first: zero_vec(len), second: zero_vec(len) }
    }

    fn offset(&self, i: usize, j: usize, k: usize) -> usize {
        ((i * self.dim_a + j) * self.dim_a + k) * self.dim_v
    }

    pub fn first(&self, i: usize, j: usize, k: usize) -> &[S] {
        let o = self.offset(i, j, k);
        &self.first[o..o + self.dim_v]
    }

    pub fn second(&self, i: usize, j: usize, k: usize) -> &[S] {
        let o = self.offset(i, j, k);
        &self.second[o..o + self.dim_v]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, k: usize, first: &[S], second: &[S]) {
        let o = self.offset(i, j, k);
        self.first[o..o + self.dim_v].clone_from_slice(first);
        self.second[o..o + self.dim_v].clone_from_slice(second);
    }

    pub fn is_zero(&self) -> bool {
        self.first.iter().chain(&self.second).all(Scalar::is_zero)
    }

    /// Both components stacked, matching the row order of [`d2_matrix`].
    pub fn to_vector(&self) -> Vector<S> {
        self.first.iter().chain(&self.second).cloned().collect()
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.dim_a, self.dim_v)
    }

    pub fn add(&self, other: &Self) -> Self {
        Cochain3Pair {
            dim_a: self.dim_a,
            dim_v: self.dim_v,
            first: crate::linalg::add_vec(&self.first, &other.first),
            second: crate::linalg::add_vec(&self.second, &other.second),
        }
    }

    /// First component antisymmetric in its first two slots, second component alternating.
    pub fn has_expected_symmetry(&self) -> bool {
        let n = self.dim_a;
        let neg_eq = |a: &[S], b: &[S]| a.iter().zip(b).all(|(x, y)| (x.clone() + y.clone()).is_zero());
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if !neg_eq(self.first(i, j, k), self.first(j, i, k))
                        || !neg_eq(self.second(i, j, k), self.second(j, i, k))
                        || !neg_eq(self.second(i, j, k), self.second(i, k, j))
                    {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn check_shapes<S: Scalar>(table: &MultTable<S>, rep: &Representation<S>, dim_a: usize, dim_v: usize) -> Result<()> {
    if rep.dim_a() != table.dim() || dim_a != table.dim() || dim_v != rep.dim_v() {
        return Err(Error::Dimension(format!(
            "cochain of shape A^{dim_a} -> V^{dim_v} against algebra of dimension {} and module of dimension {}",
            table.dim(),
            rep.dim_v()
        )));
    }
    Ok(())
}

/// `d¹f(e_i, e_j) = ρ(e_i)f(e_j) + μ(e_j)f(e_i) − f(e_i·e_j)`.
pub fn d1<S: Scalar>(alg: &AntiPreLieAlgebra<S>, rep: &Representation<S>, f: &Cochain1<S>) -> Result<Cochain2<S>> {
    d1_table(alg.table(), rep, f)
}

pub(crate) fn d1_table<S: Scalar>(t: &MultTable<S>, rep: &Representation<S>, f: &Cochain1<S>) -> Result<Cochain2<S>> {
    check_shapes(t, rep, f.dim_a(), f.dim_v())?;
    let (n, m) = (t.dim(), rep.dim_v());
    let images: Vec<Vector<S>> = (0..n).map(|i| f.map.column(i)).collect();
    let mut out = Cochain2::zero(n, m);
    for i in 0..n {
        for j in 0..n {
            let mut v = rep.rho()[i].mul_vec(&images[j]);
            axpy(&mut v, &S::one(), &rep.mu()[j].mul_vec(&images[i]));
            let v = sub_vec(&v, &f.apply(t.basis_product(i, j)));
            out.values.set_fiber(i, j, &v);
        }
    }
    Ok(out)
}

/// Evaluates `(d²₁f, d²₂f)` on every basis triple.
pub fn d2<S: Scalar>(alg: &AntiPreLieAlgebra<S>, rep: &Representation<S>, f: &Cochain2<S>) -> Result<Cochain3Pair<S>> {
    d2_table(alg.table(), rep, f)
}

pub(crate) fn d2_table<S: Scalar>(t: &MultTable<S>, rep: &Representation<S>, f: &Cochain2<S>) -> Result<Cochain3Pair<S>> {
    check_shapes(t, rep, f.dim_a(), f.dim_v())?;
    let (n, m) = (t.dim(), rep.dim_v());
    let (rho, mu) = (rep.rho(), rep.mu());
    let one = S::one();
    let br = |a: usize, b: usize| t.basis_commutator(a, b);
    let mut out = Cochain3Pair::zero(n, m);
    for x in 0..n {
        for y in 0..n {
            let br_xy = br(x, y);
            for z in 0..n {
                let mut first = rho[x].mul_vec(f.at(y, z));
                axpy(&mut first, &-one.clone(), &rho[y].mul_vec(f.at(x, z)));
                axpy(&mut first, &one, &mu[z].mul_vec(&sub_vec(f.at(x, y), f.at(y, x))));
                axpy(&mut first, &-one.clone(), &f.apply_right(y, t.basis_product(x, z)));
                axpy(&mut first, &one, &f.apply_right(x, t.basis_product(y, z)));
                axpy(&mut first, &one, &f.apply_left(&br_xy, z));

                let mut second = mu[x].mul_vec(&sub_vec(f.at(y, z), f.at(z, y)));
                axpy(&mut second, &one, &mu[y].mul_vec(&sub_vec(f.at(z, x), f.at(x, z))));
                axpy(&mut second, &one, &mu[z].mul_vec(&sub_vec(f.at(x, y), f.at(y, x))));
                axpy(&mut second, &one, &f.apply_left(&br_xy, z));
                axpy(&mut second, &one, &f.apply_left(&br(y, z), x));
                axpy(&mut second, &one, &f.apply_left(&br(z, x), y));

                out.set(x, y, z, &first, &second);
            }
        }
    }
    assert!(out.has_expected_symmetry(), "d2 output lost its (anti)symmetry");
    Ok(out)
}

/// Coefficient matrix of `d¹`, shape `(n²m) x (mn)`.
pub fn d1_matrix<S: Scalar>(t: &MultTable<S>, rep: &Representation<S>) -> Result<Matrix<S>> {
    check_shapes(t, rep, t.dim(), rep.dim_v())?;
    let (n, m) = (t.dim(), rep.dim_v());
    let row = |i: usize, j: usize, r: usize| (i * n + j) * m + r;
    let col = |k: usize, a: usize| k * n + a;
    let mut d = Matrix::zeros(n * n * m, m * n);
    let add = |d: &mut Matrix<S>, r: usize, c: usize, v: S| {
        if !v.is_zero() {
            let cur = d.get(r, c).clone();
            d.set(r, c, cur + v);
        }
    };
    for i in 0..n {
        for j in 0..n {
            for r in 0..m {
                for k in 0..m {
                    // ρ(e_i) f(e_j) and μ(e_j) f(e_i)
                    add(&mut d, row(i, j, r), col(k, j), rep.rho()[i].get(r, k).clone());
                    add(&mut d, row(i, j, r), col(k, i), rep.mu()[j].get(r, k).clone());
                }
                for a in 0..n {
                    add(&mut d, row(i, j, r), col(r, a), -t.constants().get(i, j, a).clone());
                }
            }
        }
    }
    Ok(d)
}

/// Coefficient matrix of `(d²₁, d²₂)`, shape `(2n³m) x (n²m)`; the `d²₁` rows come first.
pub fn d2_matrix<S: Scalar>(t: &MultTable<S>, rep: &Representation<S>) -> Result<Matrix<S>> {
    check_shapes(t, rep, t.dim(), rep.dim_v())?;
    let (n, m) = (t.dim(), rep.dim_v());
    let block = n * n * n * m;
    let row = |x: usize, y: usize, z: usize, r: usize| ((x * n + y) * n + z) * m + r;
    let col = |a: usize, b: usize, s: usize| (a * n + b) * m + s;
    let c = t.constants();
    let (rho, mu) = (rep.rho(), rep.mu());
    let mut d: Matrix<S> = Matrix::zeros(2 * block, n * n * m);
    let mut add = |r: usize, cl: usize, v: S| {
        if !v.is_zero() {
            let cur = d.get(r, cl).clone();
            d.set(r, cl, cur + v);
        }
    };
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for r in 0..m {
                    let r1 = row(x, y, z, r);
                    let r2 = block + r1;
                    for s in 0..m {
                        // first component: action terms
                        add(r1, col(y, z, s), rho[x].get(r, s).clone());
                        add(r1, col(x, z, s), -rho[y].get(r, s).clone());
                        add(r1, col(y, x, s), -mu[z].get(r, s).clone());
                        add(r1, col(x, y, s), mu[z].get(r, s).clone());
                        // second component: μ(x)(f(y,z) − f(z,y)) and cyclic
                        add(r2, col(y, z, s), mu[x].get(r, s).clone());
                        add(r2, col(z, y, s), -mu[x].get(r, s).clone());
                        add(r2, col(z, x, s), mu[y].get(r, s).clone());
                        add(r2, col(x, z, s), -mu[y].get(r, s).clone());
                        add(r2, col(x, y, s), mu[z].get(r, s).clone());
                        add(r2, col(y, x, s), -mu[z].get(r, s).clone());
                    }
                    for a in 0..n {
                        // −f(y, x·z) + f(x, y·z)
                        add(r1, col(y, a, r), -c.get(x, z, a).clone());
                        add(r1, col(x, a, r), c.get(y, z, a).clone());
                        let bxy = c.get(x, y, a).clone() - c.get(y, x, a).clone();
                        let byz = c.get(y, z, a).clone() - c.get(z, y, a).clone();
                        let bzx = c.get(z, x, a).clone() - c.get(x, z, a).clone();
                        add(r1, col(a, z, r), bxy.clone());
                        add(r2, col(a, z, r), bxy);
                        add(r2, col(a, x, r), byz);
                        add(r2, col(a, y, r), bzx);
                    }
                }
            }
        }
    }
    Ok(d)
}

/// Bases of `Z²` and `B²` with a chosen set of `H²` representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologySpaces<S> {
    pub z2_basis: Vec<Cochain2<S>>,
    pub b2_basis: Vec<Cochain2<S>>,
    pub h2_representatives: Vec<Cochain2<S>>,
}

impl<S: Scalar> CohomologySpaces<S> {
    pub fn dim_z2(&self) -> usize {
        self.z2_basis.len()
    }

    pub fn dim_b2(&self) -> usize {
        self.b2_basis.len()
    }

    pub fn dim_h2(&self) -> usize {
        self.h2_representatives.len()
    }
}

/// Computes `Z²`, `B²` and representatives of `H² = Z²/B²`.
///
/// `Z²` is the kernel basis of the `d²` matrix, `B²` the pivot columns of the
/// `d¹` matrix. Representatives come from extending the `B²` basis greedily by
/// `Z²` basis vectors in order, keeping each one that raises the rank.
pub fn cohomology_spaces<S: Scalar>(alg: &AntiPreLieAlgebra<S>, rep: &Representation<S>) -> Result<CohomologySpaces<S>> {
    let t = alg.table();
    let (n, m) = (t.dim(), rep.dim_v());
    let z2 = d2_matrix(t, rep)?.kernel_basis();
    let b2 = d1_matrix(t, rep)?.column_space_basis();

    let mut span = b2.clone();
    let mut reps = Vec::new();
    let mut rank = span.len();
    for z in &z2 {
        span.push(z.clone());
        let r = Matrix::from_columns(n * n * m, &span)?.rank();
        if r > rank {
            rank = r;
            reps.push(z.clone());
        } else {
            span.pop();
        }
    }
    debug_assert_eq!(rank, z2.len(), "B2 must lie inside Z2");

    let wrap = |vs: Vec<Vector<S>>| -> Result<Vec<Cochain2<S>>> {
        vs.into_iter().map(|v| Cochain2::from_vector(n, m, v)).collect()
    };
    Ok(CohomologySpaces { z2_basis: wrap(z2)?, b2_basis: wrap(b2)?, h2_representatives: wrap(reps)? })
}

pub fn is_cocycle<S: Scalar>(alg: &AntiPreLieAlgebra<S>, rep: &Representation<S>, f: &Cochain2<S>) -> Result<bool> {
    Ok(d2(alg, rep, f)?.is_zero())
}

/// Some `φ` with `f − g = d¹φ`, or `None` when `f` and `g` are not cohomologous.
pub fn cohomologous<S: Scalar>(
    alg: &AntiPreLieAlgebra<S>,
    rep: &Representation<S>,
    f: &Cochain2<S>,
    g: &Cochain2<S>,
) -> Result<Option<Cochain1<S>>> {
    cohomologous_table(alg.table(), rep, f, g)
}

pub(crate) fn cohomologous_table<S: Scalar>(
    t: &MultTable<S>,
    rep: &Representation<S>,
    f: &Cochain2<S>,
    g: &Cochain2<S>,
) -> Result<Option<Cochain1<S>>> {
    check_shapes(t, rep, f.dim_a(), f.dim_v())?;
    check_shapes(t, rep, g.dim_a(), g.dim_v())?;
    let (n, m) = (t.dim(), rep.dim_v());
    let target = f.sub(g).to_vector();
    match d1_matrix(t, rep)?.solve(&target)? {
        Some(phi) => Ok(Some(Cochain1::from_vector(n, m, phi)?)),
        None => Ok(None),
    }
}
