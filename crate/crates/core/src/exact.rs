//! Exact integer linear algebra on small dense matrices.
//!
//! Everything here works over arbitrary-precision integers so that
//! determinant and base-membership tests are exact. Matrices are row-major
//! `Vec<Vec<BigInt>>` and tiny (rank <= 8 in practice), so the cubic
//! fraction-free elimination below is more than fast enough.

use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};

pub type Int = BigInt;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn det(m: &[Vec<Int>]) -> Int {
    let n = m.len();
    if n == 0 {
        return Int::one();
    }
    debug_assert!(m.iter().all(|row| row.len() == n));
    let mut a: Vec<Vec<Int>> = m.to_vec();
    let mut sign = 1i64;
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Int::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev; // exact by Bareiss
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

fn minor(m: &[Vec<Int>], skip_row: usize, skip_col: usize) -> Vec<Vec<Int>> {
    let n = m.len();
    let mut out = Vec::with_capacity(n - 1);
    for (r, row) in m.iter().enumerate() {
        if r == skip_row {
            continue;
        }
        let mut new_row = Vec::with_capacity(n - 1);
        for (c, v) in row.iter().enumerate() {
            if c == skip_col {
                continue;
            }
            new_row.push(v.clone());
        }
        out.push(new_row);
    }
    out
}

/// Inverse of a unimodular integer matrix (det = ±1), or `None` otherwise.
///
/// Computed as the adjugate divided by the determinant; since det is ±1 the
/// inverse is again integral.
pub fn inverse_unimodular(m: &[Vec<Int>]) -> Option<Vec<Vec<Int>>> {
    let n = m.len();
    let d = det(m);
    if !d.abs().is_one() {
        return None;
    }
    if n == 1 {
        return Some(vec![vec![d]]);
    }
    let mut inv = vec![vec![Int::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            // adj[i][j] = cofactor(j, i)
            let cof = det(&minor(m, j, i));
            let signed = if (i + j) % 2 == 0 { cof } else { -cof };
            inv[i][j] = &signed * &d; // divide by det = multiply, det = ±1
        }
    }
    Some(inv)
}

pub fn mat_vec(m: &[Vec<Int>], v: &[Int]) -> Vec<Int> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

pub fn mat_mul(a: &[Vec<Int>], b: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let n = a.len();
    let p = b[0].len();
    let mut out = vec![vec![Int::zero(); p]; n];
    for i in 0..n {
        for (k, aik) in a[i].iter().enumerate() {
            if aik.is_zero() {
                continue;
            }
            for j in 0..p {
                out[i][j] += aik * &b[k][j];
            }
        }
    }
    out
}

pub fn identity(n: usize) -> Vec<Vec<Int>> {
    let mut m = vec![vec![Int::zero(); n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Int::one();
    }
    m
}
