//! Small exact integer linear algebra used by the geometry layer.
//!
//! Matrices here are tiny (dimension at most a handful), so everything is
//! done over `BigInt` with fraction-free elimination and cofactor expansion.

#![allow(clippy::needless_range_loop)]

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) fn to_big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect()
}

/// Determinant by Bareiss elimination.
pub(crate) fn det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Rank of an integer matrix (rows may have any common length).
pub(crate) fn rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            if m[i][c].is_zero() {
                continue;
            }
            let a = m[r][c].clone();
            let b = m[i][c].clone();
            for j in c..cols {
                let v = &m[i][j] * &a - &m[r][j] * &b;
                m[i][j] = v;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Affine dimension of a point set (-1 encoded as `None` for the empty set).
pub(crate) fn affine_dim(points: &[&[i64]]) -> Option<usize> {
    let (first, rest) = points.split_first()?;
    let diffs: Vec<Vec<BigInt>> = rest
        .iter()
        .map(|p| {
            p.iter()
                .zip(first.iter())
                .map(|(&a, &b)| BigInt::from(a) - BigInt::from(b))
                .collect()
        })
        .collect();
    Some(rank(diffs))
}

fn minor(m: &[Vec<BigInt>], skip_row: usize, skip_col: usize) -> Vec<Vec<BigInt>> {
    m.iter()
        .enumerate()
        .filter(|(i, _)| *i != skip_row)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|(j, _)| *j != skip_col)
                .map(|(_, v)| v.clone())
                .collect()
        })
        .collect()
}

/// Returns `(det, adj)` with `adj * m = det * I`.
pub(crate) fn adjugate(m: &[Vec<BigInt>]) -> (BigInt, Vec<Vec<BigInt>>) {
    let n = m.len();
    let d = det(m.to_vec());
    if n == 1 {
        return (d, alloc::vec![alloc::vec![BigInt::one()]]);
    }
    let mut adj = alloc::vec![alloc::vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let c = det(minor(m, i, j));
            adj[j][i] = if (i + j) % 2 == 0 { c } else { -c };
        }
    }
    (d, adj)
}

/// Primitive affine hyperplane `<g, x> = c` through `n` points of `Z^n`.
///
/// `None` when the points are affinely dependent.
pub(crate) fn hyperplane_through(points: &[&[i64]]) -> Option<(Vec<BigInt>, BigInt)> {
    let n = points.len();
    // Rows [p | -1]; the kernel of this n x (n+1) matrix is (g, c).
    let rows: Vec<Vec<BigInt>> = points
        .iter()
        .map(|p| {
            let mut r: Vec<BigInt> = p.iter().map(|&v| BigInt::from(v)).collect();
            r.push(-BigInt::one());
            r
        })
        .collect();
    let mut kernel = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let sub: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != k)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let d = det(sub);
        kernel.push(if k % 2 == 0 { d } else { -d });
    }
    let c = kernel.pop()?;
    if kernel.iter().all(Zero::is_zero) {
        return None;
    }
    let g = kernel
        .iter()
        .fold(BigInt::zero(), |acc, v| acc.gcd(v))
        .abs();
    let normal = kernel.iter().map(|v| v / &g).collect();
    Some((normal, c / g))
}
