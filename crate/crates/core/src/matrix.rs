//! Small exact integer matrices.

#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

/// A symmetric integer matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymmetricIntMatrix {
    rows: Vec<Vec<i64>>,
}

impl SymmetricIntMatrix {
    /// Returns `None` unless `rows` is square and symmetric.
    pub fn new(rows: Vec<Vec<i64>>) -> Option<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return None;
        }
        for i in 0..n {
            for j in 0..i {
                if rows[i][j] != rows[j][i] {
                    return None;
                }
            }
        }
        Some(SymmetricIntMatrix { rows })
    }

    pub fn zeros(n: usize) -> Self {
        SymmetricIntMatrix { rows: vec![vec![0; n]; n] }
    }

    /// `M + M^T` for an arbitrary square matrix.
    pub fn symmetrize(m: &[Vec<i64>]) -> Option<Self> {
        let n = m.len();
        if m.iter().any(|r| r.len() != n) {
            return None;
        }
        let rows = (0..n).map(|i| (0..n).map(|j| m[i][j] + m[j][i]).collect()).collect();
        Some(SymmetricIntMatrix { rows })
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Adds `v` at `(i, j)` and `(j, i)` (once on the diagonal).
    pub(crate) fn add_sym(&mut self, i: usize, j: usize, v: i64) {
        self.rows[i][j] += v;
        if i != j {
            self.rows[j][i] += v;
        }
    }

    /// Deletes row and column `k`.
    pub fn minor(&self, k: usize) -> Self {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != k)
            .map(|(_, r)| r.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, &v)| v).collect())
            .collect();
        SymmetricIntMatrix { rows }
    }

    /// Inertia `(positive, negative, zero)` by exact congruence
    /// diagonalization over the rationals.
    pub fn inertia(&self) -> (usize, usize, usize) {
        let n = self.size();
        let mut a: Vec<Vec<BigRational>> =
            self.rows.iter().map(|r| r.iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect()).collect();
        let (mut pos, mut neg, mut zero) = (0, 0, 0);
        let mut k = 0;
        while k < n {
            // Bring a nonzero pivot to (k, k).
            if a[k][k].is_zero() {
                if let Some(p) = (k + 1..n).find(|&p| !a[p][p].is_zero()) {
                    a.swap(k, p);
                    for row in a.iter_mut() {
                        row.swap(k, p);
                    }
                } else if let Some(p) = (k + 1..n).find(|&p| !a[k][p].is_zero()) {
                    // Row/column k += row/column p makes the diagonal 2 a[k][p].
                    for j in 0..n {
                        let v = a[p][j].clone();
                        a[k][j] += v;
                    }
                    for i in 0..n {
                        let v = a[i][p].clone();
                        a[i][k] += v;
                    }
                } else {
                    zero += 1;
                    k += 1;
                    continue;
                }
            }
            let pivot = a[k][k].clone();
            if pivot.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            for i in k + 1..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let f = &a[i][k] / &pivot;
                for j in k..n {
                    let v = &f * &a[k][j];
                    a[i][j] -= v;
                }
                for j in k..n {
                    let v = &f * &a[j][k];
                    a[j][i] -= v;
                }
            }
            k += 1;
        }
        (pos, neg, zero)
    }

    pub fn signature(&self) -> i64 {
        let (p, n, _) = self.inertia();
        p as i64 - n as i64
    }

    /// Determinant by fraction-free elimination.
    pub fn determinant(&self) -> BigInt {
        bareiss(&self.rows)
    }
}

/// Determinant of a square integer matrix (Bareiss).
pub fn bareiss(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&p| !a[p][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// `|det|` as an `i64`, saturating on absurdly large values.
pub(crate) fn abs_det_i64(d: &BigInt) -> i64 {
    d.abs().to_i64().unwrap_or(i64::MAX)
}
