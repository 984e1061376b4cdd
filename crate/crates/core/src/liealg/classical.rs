//! Defining matrix realizations of the classical algebras.
//!
//! Orthogonal and symplectic algebras preserve an antidiagonal form `J`:
//! `J[i][n-1-i] = 1` for `so_n`, and for `sp_2r` the entries are `1` above
//! the middle and `-1` below it. With these forms the upper triangular
//! matrices of the algebra form a Borel subalgebra and the diagonal ones a
//! Cartan subalgebra.

use super::matrix::{self, Matrix};
use crate::field::{rat, ratio};
use crate::rootsys::{Family, SimpleType};
use num_traits::Zero;

/// The invariant form, or `None` for `sl_n`.
pub fn invariant_form(t: SimpleType) -> Option<Matrix> {
    let n = t.defining_dim()?;
    match t.family {
        Family::A => None,
        Family::B | Family::D => {
            let mut j = matrix::zeros(n);
            for i in 0..n {
                j[i][n - 1 - i] = rat(1);
            }
            Some(j)
        }
        Family::C => {
            let mut j = matrix::zeros(n);
            for i in 0..n {
                j[i][n - 1 - i] = if i < n / 2 { rat(1) } else { rat(-1) };
            }
            Some(j)
        }
        _ => None,
    }
}

/// Is `x` in the algebra preserving `j` (i.e. `x^T j + j x = 0`)?
pub fn preserves_form(x: &Matrix, j: &Matrix) -> bool {
    let a = matrix::mul(&matrix::transpose(x), j);
    let b = matrix::mul(j, x);
    matrix::is_zero(&matrix::add(&a, &b))
}

/// Projection of `x` onto the algebra preserving `j`: `(x - j^{-1} x^T j) / 2`.
fn project(x: &Matrix, j: &Matrix, j_inv: &Matrix) -> Matrix {
    let t = matrix::mul(&matrix::mul(j_inv, &matrix::transpose(x)), j);
    matrix::scale(&matrix::sub(x, &t), &ratio(1, 2))
}

/// Chevalley generators `(e_i, f_i)` of the defining representation, in
/// Bourbaki order, with `[[e_i, f_i], e_i] = 2 e_i`.
pub fn chevalley_generators(t: SimpleType) -> Option<(Vec<Matrix>, Vec<Matrix>)> {
    let n = t.defining_dim()?;
    let r = t.rank;
    let positions: Vec<(usize, usize)> = (0..r)
        .map(|i| {
            if i + 1 < r || t.family == Family::A {
                (i, i + 1)
            } else {
                match t.family {
                    Family::B | Family::C => (r - 1, r),
                    Family::D => (r - 2, r),
                    _ => unreachable!(),
                }
            }
        })
        .collect();
    let form = invariant_form(t);
    let proj = |x: Matrix| match &form {
        None => x,
        Some(j) => {
            let j_inv = if t.family == Family::C { matrix::scale(j, &rat(-1)) } else { j.clone() };
            project(&x, j, &j_inv)
        }
    };
    let mut es = Vec::new();
    let mut fs = Vec::new();
    for &(a, b) in &positions {
        let e = proj(matrix::elementary(n, a, b));
        let f0 = proj(matrix::elementary(n, b, a));
        let h0 = matrix::commutator(&e, &f0);
        let he = matrix::commutator(&h0, &e);
        // he = lambda * e
        let (p, q) = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .find(|&(i, j)| !e[i][j].is_zero())
            .expect("nonzero generator");
        let lambda = &he[p][q] / &e[p][q];
        let f = matrix::scale(&f0, &(rat(2) / lambda));
        es.push(e);
        fs.push(f);
    }
    Some((es, fs))
}

pub fn is_trace_zero(x: &Matrix) -> bool {
    matrix::trace(x).is_zero()
}
