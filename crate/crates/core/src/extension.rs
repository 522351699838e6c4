//! Abelian extensions `0 → V → Â → A → 0` in standard coordinates `Â = A ⊕ V`,
//! with basis `(e₁…e_n, v₁…v_m)`.

use crate::algebra::{check_morphism, AntiPreLieAlgebra, MultTable};
use crate::cohomology::{cohomologous_table, cohomology_spaces, d2_table, Cochain1, Cochain2};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Tensor3};
use crate::representation::{check_representation, semidirect_table, Representation};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianExtension<S> {
    base: AntiPreLieAlgebra<S>,
    fiber: usize,
    total: AntiPreLieAlgebra<S>,
}

impl<S: Scalar> AbelianExtension<S> {
    /// Validates an algebra on `A ⊕ V` (with `dim A = n`) as an abelian extension:
    /// `V` squares to zero and is an ideal, so that `p` is a morphism.
    pub fn from_total(total: AntiPreLieAlgebra<S>, n: usize) -> Result<Self> {
        let size = total.dim();
        if n > size {
            return Err(Error::Dimension(format!("base dimension {n} exceeds total dimension {size}")));
        }
        let t = total.table();
        for i in 0..size {
            for j in 0..size {
                let prod = t.basis_product(i, j);
                if i >= n && j >= n && prod.iter().any(|x| !x.is_zero()) {
                    return Err(Error::InvalidExtension(format!("v{} v{} is nonzero", i - n + 1, j - n + 1)));
                }
                if (i >= n || j >= n) && prod[..n].iter().any(|x| !x.is_zero()) {
                    return Err(Error::InvalidExtension(format!("product of basis {i} and {j} leaves the kernel")));
                }
            }
        }
        let mut c = Tensor3::zeros(n, n, n);
        for i in 0..n {
            for j in 0..n {
                c.set_fiber(i, j, &t.basis_product(i, j)[..n]);
            }
        }
        let base = AntiPreLieAlgebra::new(MultTable::new(c)?)?;
        Ok(AbelianExtension { base, fiber: size - n, total })
    }

    /// Normalizes an extension given by arbitrary `ι: V → Â` and `p: Â → A`
    /// through the basis `[s | ι]` for a section `s` of `p`.
    pub fn from_coordinates(
        total: AntiPreLieAlgebra<S>,
        iota: &Matrix<S>,
        p: &Matrix<S>,
        section: &Matrix<S>,
    ) -> Result<Self> {
        let size = total.dim();
        let (n, m) = (p.rows(), iota.cols());
        if iota.rows() != size || p.cols() != size || n + m != size {
            return Err(Error::Dimension(format!(
                "iota {}x{} and p {}x{} do not fit a total space of dimension {size}",
                iota.rows(),
                iota.cols(),
                p.rows(),
                p.cols()
            )));
        }
        if section.rows() != size || section.cols() != n {
            return Err(Error::Dimension(format!("section must be {size}x{n}")));
        }
        if !p.mul(iota).is_zero() || iota.rank() != m || p.rank() != n {
            return Err(Error::InvalidExtension("sequence is not exact".into()));
        }
        if p.mul(section) != Matrix::identity(n) {
            return Err(Error::InvalidSection("p∘s is not the identity".into()));
        }
        let mut cols: Vec<_> = (0..n).map(|a| section.column(a)).collect();
        cols.extend((0..m).map(|a| iota.column(a)));
        let q = Matrix::from_columns(size, &cols)?;
        let table = total.table().change_basis(&q)?;
        Self::from_total(AntiPreLieAlgebra::new(table)?, n)
    }

    pub fn base(&self) -> &AntiPreLieAlgebra<S> {
        &self.base
    }

    pub fn total(&self) -> &AntiPreLieAlgebra<S> {
        &self.total
    }

    pub fn base_dim(&self) -> usize {
        self.base.dim()
    }

    pub fn fiber_dim(&self) -> usize {
        self.fiber
    }

    /// `ι = [0; I_m]`.
    pub fn inclusion(&self) -> Matrix<S> {
        let (n, m) = (self.base_dim(), self.fiber);
        Matrix::from_columns(n + m, &(0..m).map(|a| crate::linalg::unit_vec(n + m, n + a)).collect::<Vec<_>>())
            .expect("shape")
    }

    /// `p = [I_n 0]`.
    pub fn projection(&self) -> Matrix<S> {
        self.inclusion_free_block().transpose()
    }

    /// `s = [I_n; 0]`.
    pub fn canonical_section(&self) -> Matrix<S> {
        self.inclusion_free_block()
    }

    fn inclusion_free_block(&self) -> Matrix<S> {
        let (n, m) = (self.base_dim(), self.fiber);
        Matrix::from_columns(n + m, &(0..n).map(|a| crate::linalg::unit_vec(n + m, a)).collect::<Vec<_>>())
            .expect("shape")
    }

    /// The section `x ↦ x + φ(x)`.
    pub fn section_from(&self, phi: &Cochain1<S>) -> Result<Matrix<S>> {
        let (n, m) = (self.base_dim(), self.fiber);
        if phi.dim_a() != n || phi.dim_v() != m {
            return Err(Error::Dimension(format!("section offset must map {n} to {m} dimensions")));
        }
        let mut s = self.canonical_section();
        for k in 0..m {
            for a in 0..n {
                s.set(n + k, a, phi.map.get(k, a).clone());
            }
        }
        Ok(s)
    }
}

/// Product `(x+u)⋄(y+v) = x·y + θ(x,y) + ρ(x)v + μ(y)u`, without checks.
pub fn extension_table<S: Scalar>(
    table: &MultTable<S>,
    rep: &Representation<S>,
    theta: &Cochain2<S>,
) -> Result<MultTable<S>> {
    let (n, m) = (table.dim(), rep.dim_v());
    if theta.dim_a() != n || theta.dim_v() != m {
        return Err(Error::Dimension(format!("theta must map {n}x{n} to {m} dimensions")));
    }
    let mut c = semidirect_table(table, rep)?.into_constants();
    for i in 0..n {
        for j in 0..n {
            let mut fiber = c.fiber(i, j).to_vec();
            for (k, x) in theta.at(i, j).iter().enumerate() {
                fiber[n + k] = fiber[n + k].clone() + x.clone();
            }
            c.set_fiber(i, j, &fiber);
        }
    }
    MultTable::new(c)
}

pub fn build_extension<S: Scalar>(
    alg: &AntiPreLieAlgebra<S>,
    rep: &Representation<S>,
    theta: &Cochain2<S>,
) -> Result<AbelianExtension<S>> {
    let table = extension_table(alg.table(), rep, theta)?;
    if !d2_table(alg.table(), rep, theta)?.is_zero() {
        return Err(Error::NotCocycle("extension cocycle".into()));
    }
    let total = AntiPreLieAlgebra::new(table)?;
    Ok(AbelianExtension { base: alg.clone(), fiber: rep.dim_v(), total })
}

/// Data recovered from an extension and a section.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extracted<S> {
    pub theta: Cochain2<S>,
    pub rep: Representation<S>,
}

/// `θ(x,y) = s(x)⋄s(y) − s(x·y)`, `ρ(x)u = s(x)⋄u`, `μ(x)u = u⋄s(x)`.
pub fn extract_cocycle<S: Scalar>(ext: &AbelianExtension<S>, section: &Matrix<S>) -> Result<Extracted<S>> {
    let (n, m) = (ext.base_dim(), ext.fiber);
    if section.rows() != n + m || section.cols() != n || ext.projection().mul(section) != Matrix::identity(n) {
        return Err(Error::InvalidSection(format!("expected a {}x{n} matrix with p∘s = Id", n + m)));
    }
    let t = ext.total.table();
    let s: Vec<_> = (0..n).map(|a| section.column(a)).collect();
    let mut theta = Tensor3::zeros(n, n, m);
    for i in 0..n {
        for j in 0..n {
            let lhs = t.product(&s[i], &s[j]);
            let rhs = section.mul_vec(ext.base.table().basis_product(i, j));
            let diff = crate::linalg::sub_vec(&lhs, &rhs);
            debug_assert!(diff[..n].iter().all(Scalar::is_zero));
            theta.set_fiber(i, j, &diff[n..]);
        }
    }
    let inc = ext.inclusion();
    let mut rho = Vec::with_capacity(n);
    let mut mu = Vec::with_capacity(n);
    for x in &s {
        let act = |left: bool| -> Result<Matrix<S>> {
            let cols: Vec<_> = (0..m)
                .map(|a| {
                    let u = inc.column(a);
                    let prod = if left { t.product(x, &u) } else { t.product(&u, x) };
                    prod[n..].to_vec()
                })
                .collect();
            Matrix::from_columns(m, &cols)
        };
        rho.push(act(true)?);
        mu.push(act(false)?);
    }
    let rep = Representation::new(m, rho, mu)?;
    if !check_representation(&ext.base, &rep)?.passed() {
        return Err(Error::InvalidExtension("induced actions are not a representation".into()));
    }
    Ok(Extracted { theta: Cochain2::new(theta)?, rep })
}

/// `ζ(x+u) = x + u + φ(x)` mapping `ext1` to `ext2`, when the cocycles are cohomologous.
pub fn are_isomorphic<S: Scalar>(ext1: &AbelianExtension<S>, ext2: &AbelianExtension<S>) -> Result<Option<Matrix<S>>> {
    let a = extract_cocycle(ext1, &ext1.canonical_section())?;
    let b = extract_cocycle(ext2, &ext2.canonical_section())?;
    if ext1.base != ext2.base || a.rep != b.rep {
        return Err(Error::MismatchedExtensions("base algebras or representations differ".into()));
    }
    let Some(phi) = cohomologous_table(ext1.base.table(), &a.rep, &a.theta, &b.theta)? else {
        return Ok(None);
    };
    let (n, m) = (ext1.base_dim(), ext1.fiber);
    let mut zeta = Matrix::identity(n + m);
    for k in 0..m {
        for x in 0..n {
            zeta.set(n + k, x, phi.map.get(k, x).clone());
        }
    }
    let report = check_morphism(&zeta, ext1.total.table(), ext2.total.table())?;
    if !report.passed() {
        return Err(Error::InvalidExtension(format!("constructed isomorphism failed: {}", report.summary())));
    }
    Ok(Some(zeta))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionClass<S> {
    pub representative: Cochain2<S>,
    pub extension: AbelianExtension<S>,
}

/// The semidirect product (the zero class) and one extension per basis vector of `H²(A;V)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification<S> {
    pub trivial: AbelianExtension<S>,
    pub classes: Vec<ExtensionClass<S>>,
}

pub fn classify_extensions<S: Scalar>(alg: &AntiPreLieAlgebra<S>, rep: &Representation<S>) -> Result<Classification<S>> {
    let spaces = cohomology_spaces(alg, rep)?;
    let trivial = build_extension(alg, rep, &Cochain2::zero(alg.dim(), rep.dim_v()))?;
    let classes = spaces
        .h2_representatives
        .into_iter()
        .map(|theta| {
            let extension = build_extension(alg, rep, &theta)?;
            Ok(ExtensionClass { representative: theta, extension })
        })
        .collect::<Result<_>>()?;
    Ok(Classification { trivial, classes })
}
