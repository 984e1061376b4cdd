//! Small dense matrices over the rationals.

use crate::field::rat;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;
pub type Matrix = Vec<Vec<Q>>;

pub fn zeros(n: usize) -> Matrix {
    vec![vec![Q::zero(); n]; n]
}

pub fn identity(n: usize) -> Matrix {
    let mut m = zeros(n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Q::one();
    }
    m
}

pub fn elementary(n: usize, i: usize, j: usize) -> Matrix {
    let mut m = zeros(n);
    m[i][j] = Q::one();
    m
}

pub fn mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    let mut out = vec![vec![Q::zero(); m]; n];
    for i in 0..n {
        for (k, x) in a[i].iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[k][j].is_zero() {
                    out[i][j] += x * &b[k][j];
                }
            }
        }
    }
    out
}

pub fn add(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect())
        .collect()
}

pub fn sub(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect())
        .collect()
}

pub fn scale(a: &Matrix, c: &Q) -> Matrix {
    a.iter().map(|r| r.iter().map(|x| x * c).collect()).collect()
}

pub fn commutator(a: &Matrix, b: &Matrix) -> Matrix {
    sub(&mul(a, b), &mul(b, a))
}

pub fn transpose(a: &Matrix) -> Matrix {
    let n = a.len();
    let m = a.first().map_or(0, |r| r.len());
    (0..m).map(|j| (0..n).map(|i| a[i][j].clone()).collect()).collect()
}

pub fn is_zero(a: &Matrix) -> bool {
    a.iter().all(|r| r.iter().all(|x| x.is_zero()))
}

pub fn trace(a: &Matrix) -> Q {
    a.iter().enumerate().map(|(i, r)| r[i].clone()).sum()
}

/// Block-diagonal sum.
pub fn block_diag(blocks: &[Matrix]) -> Matrix {
    let n: usize = blocks.iter().map(|b| b.len()).sum();
    let mut m = zeros(n);
    let mut off = 0;
    for b in blocks {
        for (i, row) in b.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                m[off + i][off + j] = x.clone();
            }
        }
        off += b.len();
    }
    m
}

/// Kronecker product `a ⊗ b`.
pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let (n, m) = (a.len(), b.len());
    let mut out = zeros(n * m);
    for i in 0..n {
        for j in 0..n {
            if a[i][j].is_zero() {
                continue;
            }
            for k in 0..m {
                for l in 0..m {
                    if !b[k][l].is_zero() {
                        out[i * m + k][j * m + l] = &a[i][j] * &b[k][l];
                    }
                }
            }
        }
    }
    out
}

pub fn from_i64(rows: &[Vec<i64>]) -> Matrix {
    rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
}

pub fn flatten(a: &Matrix) -> Vec<Q> {
    a.iter().flat_map(|r| r.iter().cloned()).collect()
}
