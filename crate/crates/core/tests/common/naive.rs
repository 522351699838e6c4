//! Nested-loop evaluation of every identity straight from its definition.
//!
//! Nothing here calls the library's evaluators; structures are read out as
//! plain nested vectors and all products are expanded by hand. Each function
//! returns the nonzero residuals as `(identity, indices, residual)` in the
//! same order as the corresponding library report.

#![allow(dead_code, clippy::needless_range_loop)]

use antiprelie::algebra::{MultTable, CYCLIC, JACOBI, LEFT_ANTISYMMETRY, LIE_ANTISYMMETRY, MORPHISM};
use antiprelie::cohomology::{Cochain1, Cochain2};
use antiprelie::deformation::{TruncatedDeformation, DEFORM_CYCLIC, DEFORM_FIRST};
use antiprelie::dendriform::{AntiLDendriform, DEND_FIRST, DEND_SECOND, DEND_THIRD, FORM_INVARIANCE, O_OPERATOR};
use antiprelie::linalg::Matrix;
use antiprelie::report::Report;
use antiprelie::representation::{Representation, REP_BRACKET, REP_COMMUTATOR, REP_MIXED};
use antiprelie::scalar::Scalar;

pub type Entry<S> = (&'static str, Vec<usize>, Vec<S>);
pub type Table<S> = Vec<Vec<Vec<S>>>;
pub type Mat<S> = Vec<Vec<S>>;

pub fn report_entries<S: Scalar>(r: &Report<S>) -> Vec<Entry<S>> {
    r.violations.iter().map(|v| (v.identity, v.indices.clone(), v.residual.clone())).collect()
}

fn zero<S: Scalar>(n: usize) -> Vec<S> {
    vec![S::zero(); n]
}

fn e<S: Scalar>(n: usize, i: usize) -> Vec<S> {
    let mut v = zero(n);
    v[i] = S::one();
    v
}

fn add<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

fn sub<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

fn nonzero<S: Scalar>(v: &[S]) -> bool {
    v.iter().any(|x| !x.is_zero())
}

fn push<S: Scalar>(out: &mut Vec<Entry<S>>, id: &'static str, idx: &[usize], r: Vec<S>) {
    if nonzero(&r) {
        out.push((id, idx.to_vec(), r));
    }
}

pub fn table<S: Scalar>(t: &MultTable<S>) -> Table<S> {
    t.constants().to_nested()
}

/// `x·y = Σ x_i y_j c[i][j][k] e_k`.
pub fn prod<S: Scalar>(c: &Table<S>, x: &[S], y: &[S]) -> Vec<S> {
    let n = x.len();
    let out_dim = c.first().and_then(|r| r.first()).map_or(0, Vec::len);
    let mut out = zero::<S>(out_dim);
    for i in 0..n {
        for j in 0..y.len() {
            for k in 0..out_dim {
                out[k] = out[k].clone() + x[i].clone() * y[j].clone() * c[i][j][k].clone();
            }
        }
    }
    out
}

fn br<S: Scalar>(c: &Table<S>, x: &[S], y: &[S]) -> Vec<S> {
    sub(&prod(c, x, y), &prod(c, y, x))
}

pub fn mat_vec<S: Scalar>(m: &Mat<S>, v: &[S]) -> Vec<S> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone()))
        .collect()
}

fn mat_mul<S: Scalar>(a: &Mat<S>, b: &Mat<S>) -> Mat<S> {
    let (r, k, c) = (a.len(), b.len(), b.first().map_or(0, Vec::len));
    (0..r)
        .map(|i| (0..c).map(|j| (0..k).fold(S::zero(), |acc, t| acc + a[i][t].clone() * b[t][j].clone())).collect())
        .collect()
}

fn mat_lin<S: Scalar>(mats: &[Mat<S>], x: &[S], dim: usize) -> Mat<S> {
    let mut out = vec![zero::<S>(dim); dim];
    for (m, c) in mats.iter().zip(x) {
        for i in 0..dim {
            for j in 0..dim {
                out[i][j] = out[i][j].clone() + c.clone() * m[i][j].clone();
            }
        }
    }
    out
}

fn mat_add<S: Scalar>(a: &Mat<S>, b: &Mat<S>) -> Mat<S> {
    a.iter().zip(b).map(|(x, y)| add(x, y)).collect()
}

fn mat_sub<S: Scalar>(a: &Mat<S>, b: &Mat<S>) -> Mat<S> {
    a.iter().zip(b).map(|(x, y)| sub(x, y)).collect()
}

fn flat<S: Scalar>(m: &Mat<S>) -> Vec<S> {
    m.concat()
}

pub fn anti_pre_lie<S: Scalar>(t: &MultTable<S>) -> Vec<Entry<S>> {
    let c = table(t);
    let n = t.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (e(n, i), e(n, j), e(n, k));
                let lhs = sub(&prod(&c, &x, &prod(&c, &y, &z)), &prod(&c, &y, &prod(&c, &x, &z)));
                let r1 = sub(&lhs, &prod(&c, &br(&c, &y, &x), &z));
                push(&mut out, LEFT_ANTISYMMETRY, &[i, j, k], r1);
                let r2 = add(
                    &add(&prod(&c, &br(&c, &x, &y), &z), &prod(&c, &br(&c, &y, &z), &x)),
                    &prod(&c, &br(&c, &z, &x), &y),
                );
                push(&mut out, CYCLIC, &[i, j, k], r2);
            }
        }
    }
    out
}

pub fn lie<S: Scalar>(bracket: &Table<S>) -> Vec<Entry<S>> {
    let n = bracket.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            push(&mut out, LIE_ANTISYMMETRY, &[i, j], add(&bracket[i][j], &bracket[j][i]));
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (e(n, i), e(n, j), e(n, k));
                let a = prod(bracket, &x, &prod(bracket, &y, &z));
                let b = prod(bracket, &y, &prod(bracket, &x, &z));
                let c = prod(bracket, &prod(bracket, &x, &y), &z);
                push(&mut out, JACOBI, &[i, j, k], sub(&sub(&a, &b), &c));
            }
        }
    }
    out
}

pub fn morphism<S: Scalar>(f: &Matrix<S>, src: &MultTable<S>, dst: &MultTable<S>) -> Vec<Entry<S>> {
    let (cs, cd) = (table(src), table(dst));
    let fm = f.to_rows();
    let n = src.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (e(n, i), e(n, j));
            let lhs = mat_vec(&fm, &prod(&cs, &x, &y));
            let rhs = prod(&cd, &mat_vec(&fm, &x), &mat_vec(&fm, &y));
            push(&mut out, MORPHISM, &[i, j], sub(&lhs, &rhs));
        }
    }
    out
}

pub fn representation<S: Scalar>(t: &MultTable<S>, rep: &Representation<S>) -> Vec<Entry<S>> {
    let c = table(t);
    let n = t.dim();
    let m = rep.dim_v();
    let rho: Vec<Mat<S>> = rep.rho().iter().map(Matrix::to_rows).collect();
    let mu: Vec<Mat<S>> = rep.mu().iter().map(Matrix::to_rows).collect();
    let r = |x: &[S]| mat_lin(&rho, x, m);
    let u = |x: &[S]| mat_lin(&mu, x, m);
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (e(n, i), e(n, j));
            // ρ(x)ρ(y) − ρ(y)ρ(x) = ρ([y,x])
            let r1 = mat_sub(&mat_sub(&mat_mul(&r(&x), &r(&y)), &mat_mul(&r(&y), &r(&x))), &r(&br(&c, &y, &x)));
            push(&mut out, REP_COMMUTATOR, &[i, j], flat(&r1));
            // μ(xy) − ρ(x)μ(y) = μ(y)ρ(x) − μ(y)μ(x)
            let lhs = mat_sub(&u(&prod(&c, &x, &y)), &mat_mul(&r(&x), &u(&y)));
            let rhs = mat_sub(&mat_mul(&u(&y), &r(&x)), &mat_mul(&u(&y), &u(&x)));
            push(&mut out, REP_MIXED, &[i, j], flat(&mat_sub(&lhs, &rhs)));
            // μ(y)μ(x) − μ(x)μ(y) + ρ([x,y]) = μ(y)ρ(x) − μ(x)ρ(y)
            let lhs = mat_add(&mat_sub(&mat_mul(&u(&y), &u(&x)), &mat_mul(&u(&x), &u(&y))), &r(&br(&c, &x, &y)));
            let rhs = mat_sub(&mat_mul(&u(&y), &r(&x)), &mat_mul(&u(&x), &r(&y)));
            push(&mut out, REP_BRACKET, &[i, j], flat(&mat_sub(&lhs, &rhs)));
        }
    }
    out
}

pub fn dendriform<S: Scalar>(d: &AntiLDendriform<S>) -> Vec<Entry<S>> {
    let (rt, lt) = (table(d.right()), table(d.left()));
    let n = d.dim();
    let r = |a: &[S], b: &[S]| prod(&rt, a, b);
    let l = |a: &[S], b: &[S]| prod(&lt, a, b);
    let dot = |a: &[S], b: &[S]| sub(&r(a, b), &l(b, a));
    let bracket = |a: &[S], b: &[S]| sub(&dot(a, b), &dot(b, a));
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (e(n, i), e(n, j), e(n, k));
                let r1 = sub(&sub(&r(&x, &r(&y, &z)), &r(&y, &r(&x, &z))), &r(&bracket(&y, &x), &z));
                let r2 = add(
                    &add(&sub(&r(&x, &l(&y, &z)), &l(&dot(&x, &y), &z)), &l(&y, &l(&x, &z))),
                    &l(&y, &r(&x, &z)),
                );
                let r3 = sub(
                    &sub(&add(&add(&l(&y, &l(&x, &z)), &l(&y, &r(&x, &z))), &r(&bracket(&x, &y), &z)), &l(&x, &r(&y, &z))),
                    &l(&x, &l(&y, &z)),
                );
                push(&mut out, DEND_FIRST, &[i, j, k], r1);
                push(&mut out, DEND_SECOND, &[i, j, k], r2);
                push(&mut out, DEND_THIRD, &[i, j, k], r3);
            }
        }
    }
    out
}

pub fn o_operator<S: Scalar>(t: &MultTable<S>, rep: &Representation<S>, op: &Matrix<S>) -> Vec<Entry<S>> {
    let c = table(t);
    let m = rep.dim_v();
    let tm = op.to_rows();
    let rho: Vec<Mat<S>> = rep.rho().iter().map(Matrix::to_rows).collect();
    let mu: Vec<Mat<S>> = rep.mu().iter().map(Matrix::to_rows).collect();
    let mut out = Vec::new();
    for a in 0..m {
        for b in 0..m {
            let (u, v) = (e(m, a), e(m, b));
            let (tu, tv) = (mat_vec(&tm, &u), mat_vec(&tm, &v));
            let inner = add(&mat_vec(&mat_lin(&rho, &tu, m), &v), &mat_vec(&mat_lin(&mu, &tv, m), &u));
            push(&mut out, O_OPERATOR, &[a, b], sub(&prod(&c, &tu, &tv), &mat_vec(&tm, &inner)));
        }
    }
    out
}

/// `B(x, y·z) − B(y, x·z) − B([y,x], z)` on basis triples.
pub fn form_invariance<S: Scalar>(t: &MultTable<S>, b: &Matrix<S>) -> Vec<Entry<S>> {
    let c = table(t);
    let bm = b.to_rows();
    let n = t.dim();
    let form = |x: &[S], y: &[S]| {
        let by = mat_vec(&bm, y);
        x.iter().zip(&by).fold(S::zero(), |acc, (p, q)| acc + p.clone() * q.clone())
    };
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (e(n, i), e(n, j), e(n, k));
                let r = form(&x, &prod(&c, &y, &z)) - form(&y, &prod(&c, &x, &z)) - form(&br(&c, &y, &x), &z);
                push(&mut out, FORM_INVARIANCE, &[i, j, k], vec![r]);
            }
        }
    }
    out
}

fn rep_mats<S: Scalar>(rep: &Representation<S>) -> (Vec<Mat<S>>, Vec<Mat<S>>) {
    (rep.rho().iter().map(Matrix::to_rows).collect(), rep.mu().iter().map(Matrix::to_rows).collect())
}

/// `d¹f(e_i, e_j)` as a nested `[i][j][k]` array.
pub fn d1<S: Scalar>(t: &MultTable<S>, rep: &Representation<S>, f: &Cochain1<S>) -> Table<S> {
    let c = table(t);
    let n = t.dim();
    let m = rep.dim_v();
    let (rho, mu) = rep_mats(rep);
    let fm = f.map.to_rows();
    let fa = |x: &[S]| mat_vec(&fm, x);
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let (x, y) = (e(n, i), e(n, j));
                    let a = mat_vec(&mat_lin(&rho, &x, m), &fa(&y));
                    let b = mat_vec(&mat_lin(&mu, &y, m), &fa(&x));
                    sub(&add(&a, &b), &fa(&prod(&c, &x, &y)))
                })
                .collect()
        })
        .collect()
}

/// `(d²₁f, d²₂f)` on every basis triple, as two flat `[x][y][z][k]` vectors.
pub fn d2<S: Scalar>(t: &MultTable<S>, rep: &Representation<S>, f: &Cochain2<S>) -> (Vec<S>, Vec<S>) {
    let c = table(t);
    let n = t.dim();
    let m = rep.dim_v();
    let (rho, mu) = rep_mats(rep);
    let fv = f.values.to_nested();
    // f(u, e_b) and f(e_a, u) for an arbitrary u.
    let f_left = |u: &[S], b: usize| (0..n).fold(zero::<S>(m), |acc, a| add(&acc, &scaled(&u[a], &fv[a][b])));
    let f_right = |a: usize, u: &[S]| (0..n).fold(zero::<S>(m), |acc, b| add(&acc, &scaled(&u[b], &fv[a][b])));
    let bracket = |a: usize, b: usize| sub(&c[a][b], &c[b][a]);
    let (mut first, mut second) = (Vec::new(), Vec::new());
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let mut a = mat_vec(&rho[x], &fv[y][z]);
                a = sub(&a, &mat_vec(&rho[y], &fv[x][z]));
                a = sub(&a, &mat_vec(&mu[z], &fv[y][x]));
                a = add(&a, &mat_vec(&mu[z], &fv[x][y]));
                a = sub(&a, &f_right(y, &c[x][z]));
                a = add(&a, &f_right(x, &c[y][z]));
                a = add(&a, &f_left(&bracket(x, y), z));
                first.extend(a);

                let mut b = mat_vec(&mu[x], &sub(&fv[y][z], &fv[z][y]));
                b = add(&b, &mat_vec(&mu[y], &sub(&fv[z][x], &fv[x][z])));
                b = add(&b, &mat_vec(&mu[z], &sub(&fv[x][y], &fv[y][x])));
                b = add(&b, &f_left(&bracket(x, y), z));
                b = add(&b, &f_left(&bracket(y, z), x));
                b = add(&b, &f_left(&bracket(z, x), y));
                second.extend(b);
            }
        }
    }
    (first, second)
}

fn scaled<S: Scalar>(c: &S, v: &[S]) -> Vec<S> {
    v.iter().map(|x| c.clone() * x.clone()).collect()
}

pub fn deformation<S: Scalar>(def: &TruncatedDeformation<S>) -> Vec<Entry<S>> {
    let d = def.dim();
    let w: Vec<Table<S>> = (0..=def.order()).map(|k| table(def.term(k))).collect();
    let mut out = Vec::new();
    for n in 1..=def.order() {
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    let (x, y, z) = (e(d, a), e(d, b), e(d, c));
                    let (mut first, mut second) = (zero(d), zero(d));
                    for i in 0..=n {
                        let (wi, wj) = (&w[i], &w[n - i]);
                        first = add(&first, &prod(wi, &x, &prod(wj, &y, &z)));
                        first = sub(&first, &prod(wi, &y, &prod(wj, &x, &z)));
                        first = sub(&first, &prod(wi, &prod(wj, &y, &x), &z));
                        first = add(&first, &prod(wi, &prod(wj, &x, &y), &z));
                        second = add(&second, &prod(wi, &sub(&prod(wj, &x, &y), &prod(wj, &y, &x)), &z));
                        second = add(&second, &prod(wi, &sub(&prod(wj, &y, &z), &prod(wj, &z, &y)), &x));
                        second = add(&second, &prod(wi, &sub(&prod(wj, &z, &x), &prod(wj, &x, &z)), &y));
                    }
                    push(&mut out, DEFORM_FIRST, &[n, a, b, c], first);
                    push(&mut out, DEFORM_CYCLIC, &[n, a, b, c], second);
                }
            }
        }
    }
    out
}
