//! Subspaces of a model, stored as exact reduced echelon bases.

use super::LieAlgebraModel;
use crate::field::{Field, Rationals};
use crate::linalg::{self, Echelon};
use num_rational::BigRational;
use num_traits::{One, Zero};

type Q = BigRational;

/// A subspace of `k^n` with a reduced echelon basis over `Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    n: usize,
    rows: Vec<Vec<Q>>,
    pivots: Vec<usize>,
}

impl SubspaceBasis {
    pub fn zero(n: usize) -> Self {
        SubspaceBasis { n, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_vectors(n: usize, vectors: Vec<Vec<Q>>) -> Self {
        let e = linalg::echelon(&Rationals, vectors, n);
        SubspaceBasis { n, rows: e.rows, pivots: e.pivots }
    }

    /// Span of coordinate vectors.
    pub fn from_indices(n: usize, idx: &[usize]) -> Self {
        let mut idx = idx.to_vec();
        idx.sort_unstable();
        idx.dedup();
        let rows = idx
            .iter()
            .map(|&i| {
                let mut v = vec![Q::zero(); n];
                v[i] = Q::one();
                v
            })
            .collect();
        SubspaceBasis { n, rows, pivots: idx }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }
    pub fn ambient_dim(&self) -> usize {
        self.n
    }
    pub fn vectors(&self) -> &[Vec<Q>] {
        &self.rows
    }

    fn echelon(&self) -> Echelon<Rationals> {
        Echelon { rows: self.rows.clone(), pivots: self.pivots.clone(), ncols: self.n }
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.echelon().contains(&Rationals, v)
    }

    pub fn contains_space(&self, other: &SubspaceBasis) -> bool {
        let e = self.echelon();
        other.rows.iter().all(|v| e.contains(&Rationals, v))
    }

    pub fn sum(&self, other: &SubspaceBasis) -> SubspaceBasis {
        let mut e = self.echelon();
        for v in &other.rows {
            e.insert(&Rationals, v.clone());
        }
        SubspaceBasis { n: self.n, rows: e.rows, pivots: e.pivots }
    }

    /// Closed under the bracket of `model`.
    pub fn is_subalgebra(&self, model: &LieAlgebraModel) -> bool {
        let e = self.echelon();
        for (i, x) in self.rows.iter().enumerate() {
            for y in &self.rows[i + 1..] {
                if !e.contains(&Rationals, &model.bracket(&Rationals, x, y)) {
                    return false;
                }
            }
        }
        true
    }

    /// Rows converted into another field; `None` if a denominator vanishes.
    pub fn rows_in<F: Field>(&self, f: &F) -> Option<Vec<Vec<F::Elem>>> {
        linalg::convert_rows(f, &self.rows)
    }

    /// Orthogonal complement for the invariant form of `model`.
    pub fn orthogonal_complement(&self, model: &LieAlgebraModel) -> SubspaceBasis {
        let rows: Vec<Vec<Q>> = self.rows.iter().map(|v| model.form_apply(&Rationals, v)).collect();
        let ns = linalg::nullspace(&Rationals, rows, self.n);
        SubspaceBasis::from_vectors(self.n, ns)
    }

    /// Subalgebra generated by the given vectors.
    pub fn generated(model: &LieAlgebraModel, gens: Vec<Vec<Q>>) -> SubspaceBasis {
        let n = model.dim();
        let mut e = Echelon::<Rationals>::empty(n);
        let mut basis: Vec<Vec<Q>> = Vec::new();
        let mut frontier = Vec::new();
        for g in gens {
            if e.insert(&Rationals, g.clone()) {
                basis.push(g.clone());
                frontier.push(g);
            }
        }
        while let Some(x) = frontier.pop() {
            let current = basis.clone();
            for y in &current {
                let z = model.bracket(&Rationals, &x, y);
                if e.insert(&Rationals, z.clone()) {
                    basis.push(z.clone());
                    frontier.push(z);
                }
            }
        }
        SubspaceBasis { n, rows: e.rows, pivots: e.pivots }
    }
}

/// Dimension of the span of `vectors` in `F^n`.
pub fn span_dim<F: Field>(f: &F, vectors: Vec<Vec<F::Elem>>, n: usize) -> usize {
    linalg::rank(f, vectors, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;
    use crate::rootsys::SimpleType;

    #[test]
    fn generated_by_simple_generators_is_everything() {
        let m = LieAlgebraModel::simple(SimpleType::b(2));
        let rs = m.root_system(0).unwrap();
        let mut gens = Vec::new();
        for i in 0..2 {
            let mut v = vec![0i64; 2];
            v[i] = 1;
            for s in [1, -1] {
                let w: Vec<i64> = v.iter().map(|x| x * s).collect();
                let mut x = vec![rat(0); m.dim()];
                x[m.root_index(0, rs.index_of(&w).unwrap())] = rat(1);
                gens.push(x);
            }
        }
        assert_eq!(SubspaceBasis::generated(&m, gens).dim(), 10);
    }

    #[test]
    fn borel_complement_is_nilradical() {
        let m = LieAlgebraModel::simple(SimpleType::a(2));
        let b = m.borel_basis();
        assert!(b.is_subalgebra(&m));
        let perp = b.orthogonal_complement(&m);
        assert_eq!(perp.dim(), 3);
        assert!(b.contains_space(&perp));
    }
}
