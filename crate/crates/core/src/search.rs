//! Brute-force enumeration of small structures over a finite set of entries.
//!
//! Candidates are enumerated in lexicographic order of their flattened entry
//! vectors (entries taken in the order of the supplied list, last coordinate
//! fastest), so results are deterministic.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{check_anti_pre_lie, AntiPreLieAlgebra, MultTable};
use crate::dendriform::{check_o_operator, InvariantBilinearForm};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Tensor3};
use crate::representation::{check_representation, Representation};
use crate::scalar::{FiniteField, Scalar};

pub const DEFAULT_MAX_SPACE: u128 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    Exhaustive,
    /// `samples` uniformly random candidates drawn with a seeded generator.
    Random { samples: usize, seed: u64 },
}

/// Entry set and enumeration strategy shared by all searches.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchSpec<S> {
    pub entries: Vec<S>,
    pub mode: SearchMode,
    pub max_space: u128,
}

impl<S: Scalar> SearchSpec<S> {
    /// Every element of a finite field, exhaustive.
    pub fn field() -> Self
    where
        S: FiniteField,
    {
        SearchSpec { entries: S::elements(), mode: SearchMode::Exhaustive, max_space: DEFAULT_MAX_SPACE }
    }

    /// Integers in `[−bound, bound]`, ordered `0, 1, −1, 2, −2, …`, exhaustive.
    pub fn bounded(bound: i64) -> Self {
        let mut entries = vec![S::zero()];
        for k in 1..=bound {
            entries.push(S::from_i64(k));
            entries.push(S::from_i64(-k));
        }
        SearchSpec { entries, mode: SearchMode::Exhaustive, max_space: DEFAULT_MAX_SPACE }
    }

    pub fn random(mut self, samples: usize, seed: u64) -> Self {
        self.mode = SearchMode::Random { samples, seed };
        self
    }

    pub fn with_max_space(mut self, max_space: u128) -> Self {
        self.max_space = max_space;
        self
    }

    /// `|entries|^slots`, saturating.
    pub fn space_size(&self, slots: usize) -> u128 {
        let base = self.entries.len() as u128;
        (0..slots).try_fold(1u128, |acc, _| acc.checked_mul(base)).unwrap_or(u128::MAX)
    }

    /// Calls `visit` on every candidate vector of length `slots`.
    fn enumerate(&self, slots: usize, mut visit: impl FnMut(&[S])) -> Result<()> {
        match self.mode {
            SearchMode::Exhaustive => {
                let size = self.space_size(slots);
                if size > self.max_space {
                    return Err(Error::SpaceTooLarge { size, limit: self.max_space });
                }
                if self.entries.is_empty() && slots > 0 {
                    return Ok(());
                }
                let k = self.entries.len();
                let mut idx = vec![0usize; slots];
                let mut cand: Vec<S> = vec![self.entries.first().cloned().unwrap_or_else(S::zero); slots];
                loop {
                    visit(&cand);
                    let mut pos = slots;
                    loop {
                        if pos == 0 {
                            return Ok(());
                        }
                        pos -= 1;
                        idx[pos] += 1;
                        if idx[pos] < k {
                            cand[pos] = self.entries[idx[pos]].clone();
                            break;
                        }
                        idx[pos] = 0;
                        cand[pos] = self.entries[0].clone();
                    }
                }
            }
            SearchMode::Random { samples, seed } => {
                if self.entries.is_empty() {
                    return Ok(());
                }
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                for _ in 0..samples {
                    let cand: Vec<S> =
                        (0..slots).map(|_| self.entries[rng.gen_range(0..self.entries.len())].clone()).collect();
                    visit(&cand);
                }
                Ok(())
            }
        }
    }
}

/// All anti-pre-Lie tables of dimension `n` with entries drawn from `spec`.
pub fn search_algebras<S: Scalar>(n: usize, spec: &SearchSpec<S>) -> Result<Vec<AntiPreLieAlgebra<S>>> {
    let mut out = Vec::new();
    spec.enumerate(n * n * n, |c| {
        let t = MultTable::new(Tensor3::from_vec((n, n, n), c.to_vec()).expect("shape")).expect("shape");
        if check_anti_pre_lie(&t).passed() {
            out.push(AntiPreLieAlgebra::new(t).expect("checked"));
        }
    })?;
    Ok(out)
}

/// All O-operators `T: V → A` for a fixed representation.
pub fn search_o_operators<S: Scalar>(
    alg: &AntiPreLieAlgebra<S>,
    rep: &Representation<S>,
    spec: &SearchSpec<S>,
) -> Result<Vec<Matrix<S>>> {
    let (n, m) = (alg.dim(), rep.dim_v());
    let mut out = Vec::new();
    let mut failure = None;
    spec.enumerate(n * m, |c| {
        let t = Matrix::from_vec(n, m, c.to_vec()).expect("shape");
        match check_o_operator(alg, rep, &t) {
            Ok(r) if r.passed() => out.push(t),
            Ok(_) => {}
            Err(e) => failure = Some(e),
        }
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// Nondegenerate invariant forms. With `skew_only`, only the strictly upper
/// triangle is enumerated and the matrix is completed skew-symmetrically.
pub fn search_bilinear_forms<S: Scalar>(
    alg: &AntiPreLieAlgebra<S>,
    spec: &SearchSpec<S>,
    skew_only: bool,
) -> Result<Vec<InvariantBilinearForm<S>>> {
    let n = alg.dim();
    let mut out = Vec::new();
    let slots = if skew_only { n * n.saturating_sub(1) / 2 } else { n * n };
    spec.enumerate(slots, |c| {
        let b = if skew_only {
            let mut b = Matrix::zeros(n, n);
            let mut it = c.iter();
            for i in 0..n {
                for j in i + 1..n {
                    let x = it.next().expect("slot").clone();
                    b.set(i, j, x.clone());
                    b.set(j, i, -x);
                }
            }
            b
        } else {
            Matrix::from_vec(n, n, c.to_vec()).expect("shape")
        };
        if let Ok(f) = InvariantBilinearForm::new(alg, b, skew_only) {
            out.push(f);
        }
    })?;
    Ok(out)
}

/// Representations of `alg` on an `m`-dimensional space.
pub fn search_representations<S: Scalar>(
    alg: &AntiPreLieAlgebra<S>,
    m: usize,
    spec: &SearchSpec<S>,
) -> Result<Vec<Representation<S>>> {
    let n = alg.dim();
    let block = m * m;
    let mut out = Vec::new();
    spec.enumerate(2 * n * block, |c| {
        let mats: Vec<Matrix<S>> = c
            .chunks(block)
            .map(|ch| Matrix::from_vec(m, m, ch.to_vec()).expect("shape"))
            .collect();
        let (rho, mu) = mats.split_at(n);
        let rep = Representation::new(m, rho.to_vec(), mu.to_vec()).expect("shape");
        if check_representation(alg, &rep).map(|r| r.passed()).unwrap_or(false) {
            out.push(rep);
        }
    })?;
    Ok(out)
}
