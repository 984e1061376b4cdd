//! Dense linear algebra over a [`Field`]: echelon forms, rank, kernels,
//! linear solves, and fraction-free (Bareiss) rank over the integers.

use crate::field::{Field, Rationals};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Vector<F> = Vec<<F as Field>::Elem>;

/// A reduced row echelon form with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    pub rows: Vec<Vector<F>>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl<F: Field> Echelon<F> {
    pub fn empty(ncols: usize) -> Self {
        Echelon { rows: Vec::new(), pivots: Vec::new(), ncols }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the stored rows; the residual is zero iff `v` lies in the span.
    pub fn reduce(&self, f: &F, v: &mut Vector<F>) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if f.is_zero(&v[p]) {
                continue;
            }
            let c = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !f.is_zero(r) {
                    let t = f.mul(&c, r);
                    *x = f.sub(x, &t);
                }
            }
        }
    }

    pub fn contains(&self, f: &F, v: &[F::Elem]) -> bool {
        let mut w = v.to_vec();
        self.reduce(f, &mut w);
        w.iter().all(|x| f.is_zero(x))
    }

    /// Insert a vector, keeping the form fully reduced. Returns `true` if the rank grew.
    pub fn insert(&mut self, f: &F, v: Vector<F>) -> bool {
        let mut w = v;
        self.reduce(f, &mut w);
        let Some(p) = w.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&w[p]);
        for x in w.iter_mut() {
            if !f.is_zero(x) {
                *x = f.mul(x, &inv);
            }
        }
        for row in self.rows.iter_mut() {
            if f.is_zero(&row[p]) {
                continue;
            }
            let c = row[p].clone();
            for (x, y) in row.iter_mut().zip(&w) {
                if !f.is_zero(y) {
                    let t = f.mul(&c, y);
                    *x = f.sub(x, &t);
                }
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(pos, p);
        self.rows.insert(pos, w);
        true
    }
}

/// Fully reduced row echelon form of the given rows.
pub fn echelon<F: Field>(f: &F, rows: Vec<Vector<F>>, ncols: usize) -> Echelon<F> {
    let mut m = rows;
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(piv) = (r..m.len()).find(|&i| !f.is_zero(&m[i][c])) else {
            continue;
        };
        m.swap(r, piv);
        let inv = f.inv(&m[r][c]);
        for x in m[r].iter_mut().skip(c) {
            if !f.is_zero(x) {
                *x = f.mul(x, &inv);
            }
        }
        let pivot_row = m[r].clone();
        let nz: Vec<usize> = (c..ncols).filter(|&j| !f.is_zero(&pivot_row[j])).collect();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || f.is_zero(&row[c]) {
                continue;
            }
            let k = row[c].clone();
            for &j in &nz {
                let t = f.mul(&k, &pivot_row[j]);
                row[j] = f.sub(&row[j], &t);
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    Echelon { rows: m, pivots, ncols }
}

/// Rank by forward elimination only (no back substitution).
pub fn rank<F: Field>(f: &F, rows: Vec<Vector<F>>, ncols: usize) -> usize {
    let mut m = rows;
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(piv) = (r..m.len()).find(|&i| !f.is_zero(&m[i][c])) else {
            continue;
        };
        m.swap(r, piv);
        let inv = f.inv(&m[r][c]);
        let (top, bottom) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let nz: Vec<usize> = (c + 1..ncols).filter(|&j| !f.is_zero(&pivot_row[j])).collect();
        for row in bottom.iter_mut() {
            if f.is_zero(&row[c]) {
                continue;
            }
            let k = f.mul(&row[c], &inv);
            row[c] = f.zero();
            for &j in &nz {
                let t = f.mul(&k, &pivot_row[j]);
                row[j] = f.sub(&row[j], &t);
            }
        }
        r += 1;
    }
    r
}

/// Basis of `{x : M x = 0}` where `M` is given by its rows, each of length `ncols`.
pub fn nullspace<F: Field>(f: &F, rows: Vec<Vector<F>>, ncols: usize) -> Vec<Vector<F>> {
    let e = echelon(f, rows, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &e.pivots {
        is_pivot[p] = true;
    }
    let mut out = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut x = vec![f.zero(); ncols];
        x[free] = f.one();
        for (row, &p) in e.rows.iter().zip(&e.pivots) {
            if !f.is_zero(&row[free]) {
                x[p] = f.neg(&row[free]);
            }
        }
        out.push(x);
    }
    out
}

/// Find `c` with `sum_i c_i * vectors[i] = target`, if one exists.
pub fn solve_combination<F: Field>(
    f: &F,
    vectors: &[Vector<F>],
    target: &[F::Elem],
) -> Option<Vector<F>> {
    let k = vectors.len();
    let n = target.len();
    // Unknowns c_0..c_{k-1}, plus a homogenising coordinate for -target.
    let rows: Vec<Vector<F>> = (0..n)
        .map(|j| {
            let mut r: Vector<F> = vectors.iter().map(|v| v[j].clone()).collect();
            r.push(f.neg(&target[j]));
            r
        })
        .collect();
    let e = echelon(f, rows, k + 1);
    if e.pivots.last() == Some(&k) {
        return None;
    }
    let mut c = vec![f.zero(); k];
    for (row, &p) in e.rows.iter().zip(&e.pivots) {
        c[p] = f.neg(&row[k]);
    }
    Some(c)
}

/// Solve `M X = B` column by column, for square invertible `M` given by rows.
pub fn inverse<F: Field>(f: &F, m: &[Vector<F>]) -> Option<Vec<Vector<F>>> {
    let n = m.len();
    let rows: Vec<Vector<F>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { f.one() } else { f.zero() }));
            row
        })
        .collect();
    let e = echelon(f, rows, 2 * n);
    if e.rank() < n || e.pivots[n - 1] != n - 1 {
        return None;
    }
    Some(e.rows.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_mul<F: Field>(f: &F, a: &[Vector<F>], b: &[Vector<F>]) -> Vec<Vector<F>> {
    let m = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            let mut out = vec![f.zero(); m];
            for (k, x) in row.iter().enumerate() {
                if f.is_zero(x) {
                    continue;
                }
                for (o, y) in out.iter_mut().zip(&b[k]) {
                    if !f.is_zero(y) {
                        f.add_mul(o, x, y);
                    }
                }
            }
            out
        })
        .collect()
}

pub fn transpose<F: Field>(a: &[Vector<F>]) -> Vec<Vector<F>> {
    let m = a.first().map_or(0, |r| r.len());
    (0..m).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

/// Rank of an integer matrix by fraction-free Bareiss elimination.
pub fn bareiss_rank(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(piv) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, piv);
        let pivot = m[r][c].clone();
        for i in r + 1..m.len() {
            let factor = m[i][c].clone();
            for j in c + 1..ncols {
                let v = &m[i][j] * &pivot - &factor * &m[r][j];
                m[i][j] = v.div_floor(&prev);
            }
            m[i][c] = BigInt::zero();
        }
        prev = pivot;
        r += 1;
    }
    r
}

/// Clear denominators row by row, producing an integer matrix of the same rank.
pub fn integer_rows(rows: &[Vec<BigRational>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|row| {
            let l = row
                .iter()
                .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            row.iter()
                .map(|q| (q * BigRational::from_integer(l.clone())).to_integer())
                .collect()
        })
        .collect()
}

/// Exact rank of a rational matrix via Bareiss.
pub fn exact_rank(rows: &[Vec<BigRational>]) -> usize {
    bareiss_rank(&integer_rows(rows))
}

/// Convert a rational matrix into another field, failing on a vanishing denominator.
pub fn convert_rows<F: Field>(f: &F, rows: &[Vec<BigRational>]) -> Option<Vec<Vector<F>>> {
    rows.iter()
        .map(|r| r.iter().map(|q| f.from_rational(q)).collect::<Option<Vec<_>>>())
        .collect()
}

pub fn convert_vec<F: Field>(f: &F, v: &[BigRational]) -> Option<Vector<F>> {
    v.iter().map(|q| f.from_rational(q)).collect()
}

/// Rational RREF convenience.
pub fn rational_echelon(rows: Vec<Vec<BigRational>>, ncols: usize) -> Echelon<Rationals> {
    echelon(&Rationals, rows, ncols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, PrimeField};

    fn q(rows: &[&[i64]]) -> Vec<Vec<BigRational>> {
        rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    #[test]
    fn rank_and_kernel() {
        let m = q(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&Rationals, m.clone(), 3), 2);
        assert_eq!(exact_rank(&m), 2);
        let k = nullspace(&Rationals, m.clone(), 3);
        assert_eq!(k.len(), 1);
        for row in &m {
            let s: BigRational = row.iter().zip(&k[0]).map(|(a, b)| a * b).sum();
            assert!(s.is_zero());
        }
    }

    #[test]
    fn modular_rank_is_lower_bound() {
        // det = 7: singular mod 7 only
        let m = q(&[&[1, 2], &[3, 13]]);
        let f7 = PrimeField::new(7);
        let f11 = PrimeField::new(11);
        assert_eq!(rank(&f7, convert_rows(&f7, &m).unwrap(), 2), 1);
        assert_eq!(rank(&f11, convert_rows(&f11, &m).unwrap(), 2), 2);
        assert_eq!(exact_rank(&m), 2);
    }

    #[test]
    fn solve_and_inverse() {
        let vs = q(&[&[1, 0, 1], &[0, 1, 1]]);
        let c = solve_combination(&Rationals, &vs, &[rat(2), rat(3), rat(5)]).unwrap();
        assert_eq!(c, vec![rat(2), rat(3)]);
        assert!(solve_combination(&Rationals, &vs, &[rat(1), rat(1), rat(1)]).is_none());
        let m = q(&[&[2, 1], &[1, 1]]);
        let inv = inverse(&Rationals, &m).unwrap();
        assert_eq!(mat_mul(&Rationals, &m, &inv), q(&[&[1, 0], &[0, 1]]));
    }

    #[test]
    fn incremental_insert_matches_batch() {
        let rows = q(&[&[0, 1, 2], &[1, 1, 1], &[1, 2, 3], &[2, 0, 5]]);
        let mut inc = Echelon::<Rationals>::empty(3);
        for r in rows.clone() {
            inc.insert(&Rationals, r);
        }
        let batch = echelon(&Rationals, rows, 3);
        assert_eq!(inc.rows, batch.rows);
    }
}
