//! Rank over ℚ by fraction-free (Bareiss) elimination on an integer matrix.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use antiprelie::scalar::Rational;

/// Clears denominators row by row.
fn integer_rows(rows: &[Vec<Rational>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| {
            let l = r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            r.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect()
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut a = integer_rows(rows);
    let (m, n) = (a.len(), a.first().map_or(0, Vec::len));
    let mut prev = BigInt::one();
    let mut r = 0;
    for col in 0..n {
        let Some(p) = (r..m).find(|&i| !a[i][col].is_zero()) else { continue };
        a.swap(r, p);
        for i in r + 1..m {
            for j in col + 1..n {
                let v = &a[r][col] * &a[i][j] - &a[i][col] * &a[r][j];
                a[i][j] = v / &prev;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[r][col].clone();
        r += 1;
        if r == m {
            break;
        }
    }
    r
}

/// `cols − rank`.
pub fn nullity(rows: &[Vec<Rational>], cols: usize) -> usize {
    cols - rank(rows)
}

/// Matrix whose columns are the given vectors, as rows.
pub fn from_columns(cols: &[Vec<Rational>], len: usize) -> Vec<Vec<Rational>> {
    (0..len).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect()
}
