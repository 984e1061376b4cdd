//! Extension of Chevalley-generator images to Lie algebra homomorphisms.

use super::matrix::{self, Matrix, Q};
use super::LieAlgebraModel;
use crate::error::{Error, Result};
use crate::field::{rat, Rationals};
use num_traits::Zero;

/// Somewhere a simple algebra can be mapped into.
pub trait LieTarget {
    type Elem: Clone;
    fn bracket(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, a: &Self::Elem, c: &Q) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn zero_like(&self, a: &Self::Elem) -> Self::Elem;
    fn equal(&self, a: &Self::Elem, b: &Self::Elem) -> bool;
    fn is_zero(&self, a: &Self::Elem) -> bool;
}

pub struct MatrixTarget;

impl LieTarget for MatrixTarget {
    type Elem = Matrix;
    fn bracket(&self, a: &Matrix, b: &Matrix) -> Matrix {
        matrix::commutator(a, b)
    }
    fn scale(&self, a: &Matrix, c: &Q) -> Matrix {
        matrix::scale(a, c)
    }
    fn add(&self, a: &Matrix, b: &Matrix) -> Matrix {
        matrix::add(a, b)
    }
    fn zero_like(&self, a: &Matrix) -> Matrix {
        matrix::zeros(a.len())
    }
    fn equal(&self, a: &Matrix, b: &Matrix) -> bool {
        a == b
    }
    fn is_zero(&self, a: &Matrix) -> bool {
        matrix::is_zero(a)
    }
}

/// Coordinate vectors in a structure-constant model.
pub struct ModelTarget<'a>(pub &'a LieAlgebraModel);

impl LieTarget for ModelTarget<'_> {
    type Elem = Vec<Q>;
    fn bracket(&self, a: &Vec<Q>, b: &Vec<Q>) -> Vec<Q> {
        self.0.bracket(&Rationals, a, b)
    }
    fn scale(&self, a: &Vec<Q>, c: &Q) -> Vec<Q> {
        a.iter().map(|x| x * c).collect()
    }
    fn add(&self, a: &Vec<Q>, b: &Vec<Q>) -> Vec<Q> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }
    fn zero_like(&self, a: &Vec<Q>) -> Vec<Q> {
        vec![Q::zero(); a.len()]
    }
    fn equal(&self, a: &Vec<Q>, b: &Vec<Q>) -> bool {
        a == b
    }
    fn is_zero(&self, a: &Vec<Q>) -> bool {
        a.iter().all(|x| x.is_zero())
    }
}

/// Images of the whole Chevalley basis of the simple algebra `src` (a
/// single-component model) under the homomorphism sending `e_i -> e[i]` and
/// `f_i -> f[i]`. The result is verified to respect brackets.
pub fn extend_hom<T: LieTarget>(
    src: &LieAlgebraModel,
    e: &[T::Elem],
    f: &[T::Elem],
    target: &T,
) -> Result<Vec<T::Elem>> {
    let rs = src.root_system(0).ok_or_else(|| {
        Error::Unsupported("homomorphisms are extended from simple algebras only".into())
    })?;
    let r = rs.rank();
    if e.len() != r || f.len() != r {
        return Err(Error::Internal("generator count differs from rank".into()));
    }
    let n_pos = rs.n_pos();
    let mut img: Vec<Option<T::Elem>> = vec![None; src.dim()];
    let simple_idx = |i: usize| {
        let mut v = vec![0; r];
        v[i] = 1;
        rs.index_of(&v).unwrap()
    };
    for i in 0..r {
        img[i] = Some(target.bracket(&e[i], &f[i]));
        img[r + simple_idx(i)] = Some(e[i].clone());
        img[r + rs.neg_index(simple_idx(i))] = Some(f[i].clone());
    }
    for b in 0..n_pos {
        if img[r + b].is_some() {
            continue;
        }
        let root = &rs.all_roots[b];
        let (i, g) = (0..r)
            .find_map(|i| {
                let mut d = root.clone();
                d[i] -= 1;
                rs.index_of(&d).map(|g| (i, g))
            })
            .expect("non-simple positive root");
        let a = simple_idx(i);
        for (x, y) in [(a, g), (rs.neg_index(a), rs.neg_index(g))] {
            let n = rs.structure_constant(x, y);
            let s = rs.sum_index(x, y).unwrap();
            let br = target.bracket(img[r + x].as_ref().unwrap(), img[r + y].as_ref().unwrap());
            img[r + s] = Some(target.scale(&br, &crate::field::ratio(1, n)));
        }
    }
    let img: Vec<T::Elem> = img.into_iter().map(|x| x.unwrap()).collect();
    if target.is_zero(&img[r]) {
        return Err(Error::Degenerate("homomorphism image is zero".into()));
    }
    // A linear map respecting brackets with a generating set is a homomorphism.
    let gens: Vec<usize> = (0..r)
        .flat_map(|i| [r + simple_idx(i), r + rs.neg_index(simple_idx(i))])
        .collect();
    for &g in &gens {
        for x in 0..src.dim() {
            let br = src.bracket_basis(g, x);
            let mut lhs = target.zero_like(&img[0]);
            for (k, c) in br {
                lhs = target.add(&lhs, &target.scale(&img[k], &rat(c)));
            }
            let rhs = target.bracket(&img[g], &img[x]);
            if !target.equal(&lhs, &rhs) {
                return Err(Error::Internal(format!(
                    "generator images violate the relations of {}",
                    rs.components[0]
                )));
            }
        }
    }
    Ok(img)
}

/// Apply a linear map given on basis images to a coordinate vector.
pub fn apply<T: LieTarget>(target: &T, images: &[T::Elem], x: &[Q]) -> T::Elem {
    let mut out = target.zero_like(&images[0]);
    for (c, im) in x.iter().zip(images) {
        if !c.is_zero() {
            out = target.add(&out, &target.scale(im, c));
        }
    }
    out
}
