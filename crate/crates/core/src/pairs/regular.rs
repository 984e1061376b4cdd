//! Subalgebras of a simple algebra described through its roots: regular
//! subalgebras (from bases of closed subsystems), subalgebras generated by
//! sums of simple root vectors (foldings), central coweights of Levi
//! subalgebras, and fixed points of an outer involution.

use super::modules::CompImage;
use crate::error::{Error, Result};
use crate::field::{rat, Rationals};
use crate::liealg::matrix::Q;
use crate::liealg::{hom, Component, LieAlgebraModel, SubspaceBasis};
use crate::linalg;
use crate::rootsys::{cartan_matrix, match_cartan, Root, RootSystem, SimpleType};
use num_traits::Zero;

/// A produced component together with its realization.
pub type Produced = (Component, CompImage);

fn root_vector(m: &LieAlgebraModel, rs: &RootSystem, root: &[i64]) -> Result<Vec<Q>> {
    let a = rs
        .index_of(root)
        .ok_or_else(|| Error::Inadmissible(format!("{root:?} is not a root")))?;
    let mut v = vec![Q::zero(); m.dim()];
    v[m.root_index(0, a)] = rat(1);
    Ok(v)
}

/// Homomorphism from `t` determined by generator images in any order; the
/// order is recovered from the Cartan integers of the images.
pub fn hom_from_generators(
    m: &LieAlgebraModel,
    t: SimpleType,
    e: Vec<Vec<Q>>,
    f: Vec<Vec<Q>>,
) -> Result<Vec<Vec<Q>>> {
    let r = e.len();
    let h: Vec<Vec<Q>> = e.iter().zip(&f).map(|(x, y)| m.bracket(&Rationals, x, y)).collect();
    let mut cartan = vec![vec![0i64; r]; r];
    for i in 0..r {
        for j in 0..r {
            let br = m.bracket(&Rationals, &h[i], &e[j]);
            let k = e[j].iter().position(|x| !x.is_zero()).unwrap();
            let c = &br[k] / &e[j][k];
            if !c.is_integer() || br.iter().zip(&e[j]).any(|(b, x)| *b != &c * x) {
                return Err(Error::Degenerate("generator images are not weight vectors".into()));
            }
            cartan[i][j] = c.to_integer().try_into().unwrap();
        }
    }
    let perm = match_cartan(&cartan, &cartan_matrix(t))
        .ok_or_else(|| Error::Inadmissible(format!("generator images do not span a copy of {t}")))?;
    let e: Vec<Vec<Q>> = perm.iter().map(|&p| e[p].clone()).collect();
    let f: Vec<Vec<Q>> = perm.iter().map(|&p| f[p].clone()).collect();
    hom::extend_hom(&LieAlgebraModel::simple(t), &e, &f, &hom::ModelTarget(m))
}

/// Split a base into connected components, keeping first-appearance order.
fn components_of(rs: &RootSystem, base: &[Root]) -> Vec<Vec<Root>> {
    let k = base.len();
    let mut comp = vec![usize::MAX; k];
    let mut out: Vec<Vec<Root>> = Vec::new();
    for s in 0..k {
        if comp[s] != usize::MAX {
            continue;
        }
        let c = out.len();
        let mut stack = vec![s];
        comp[s] = c;
        let mut members = Vec::new();
        while let Some(i) = stack.pop() {
            members.push(i);
            for j in 0..k {
                if comp[j] == usize::MAX && rs.inner(&base[i], &base[j]) != 0 {
                    comp[j] = c;
                    stack.push(j);
                }
            }
        }
        members.sort_unstable();
        out.push(members.into_iter().map(|i| base[i].clone()).collect());
    }
    out
}

/// Regular subalgebra with the given base, one produced component per
/// connected component of the base.
pub fn regular(t: SimpleType, base: &[Root]) -> Result<Vec<Produced>> {
    let m = LieAlgebraModel::simple(t);
    let rs = m.root_system(0).unwrap();
    let sub = rs.subsystem(base)?;
    let _ = sub;
    let mut out = Vec::new();
    for comp in components_of(rs, base) {
        let st = rs.subsystem(&comp)?.components[0];
        let e = comp.iter().map(|r| root_vector(&m, rs, r)).collect::<Result<Vec<_>>>()?;
        let f = comp
            .iter()
            .map(|r| root_vector(&m, rs, &r.iter().map(|x| -x).collect::<Vec<_>>()))
            .collect::<Result<Vec<_>>>()?;
        let images = hom_from_generators(&m, st, e, f)?;
        out.push((Component::Simple(st), CompImage::Hom(images)));
    }
    Ok(out)
}

fn simple_root(r: usize, i: usize) -> Root {
    let mut v = vec![0; r];
    v[i] = 1;
    v
}

fn node(t: SimpleType, k: usize) -> Result<usize> {
    if k == 0 || k > t.rank {
        return Err(Error::Inadmissible(format!("{t} has no node {k}")));
    }
    Ok(k - 1)
}

/// Base of the extended diagram with node `k` (1-based) removed.
pub fn extended_base(t: SimpleType, k: usize) -> Result<Vec<Root>> {
    let k = node(t, k)?;
    let rs = LieAlgebraModel::simple(t).root_system(0).unwrap().clone();
    let mut base: Vec<Root> = (0..t.rank).filter(|&i| i != k).map(|i| simple_root(t.rank, i)).collect();
    base.push(rs.highest_root().iter().map(|x| -x).collect());
    Ok(base)
}

/// Base of the Levi subalgebra on the listed nodes (1-based).
pub fn node_base(t: SimpleType, nodes: &[usize]) -> Result<Vec<Root>> {
    nodes.iter().map(|&k| Ok(simple_root(t.rank, node(t, k)?))).collect()
}

pub fn long_base(t: SimpleType) -> Vec<Root> {
    LieAlgebraModel::simple(t).root_system(0).unwrap().long_root_base()
}

/// Simple component generated by `e_S = sum_{i in S} e_i` over the given node
/// sets (1-based), one generator per set.
pub fn folded(t: SimpleType, target: SimpleType, sets: &[Vec<usize>]) -> Result<Produced> {
    let m = LieAlgebraModel::simple(t);
    let rs = m.root_system(0).unwrap();
    let mut e = Vec::new();
    let mut f = Vec::new();
    for s in sets {
        let mut x = vec![Q::zero(); m.dim()];
        let mut y = vec![Q::zero(); m.dim()];
        for &k in s {
            let i = node(t, k)?;
            let r = simple_root(t.rank, i);
            let a = rs.index_of(&r).unwrap();
            x[m.root_index(0, a)] += rat(1);
            y[m.root_index(0, rs.neg_index(a))] += rat(1);
        }
        e.push(x);
        f.push(y);
    }
    let images = hom_from_generators(&m, target, e, f)?;
    Ok((Component::Simple(target), CompImage::Hom(images)))
}

/// The fundamental coweight of node `k` (1-based), as a Cartan element.
pub fn coweight(t: SimpleType, k: usize) -> Result<Produced> {
    let k = node(t, k)?;
    let m = LieAlgebraModel::simple(t);
    let c = cartan_matrix(t);
    // sum_i x_i cartan[i][j] = delta_jk
    let rows: Vec<Vec<Q>> = (0..t.rank)
        .map(|j| (0..t.rank).map(|i| rat(c[i][j])).collect())
        .collect();
    let inv = linalg::inverse(&Rationals, &rows).unwrap();
    let mut v = vec![Q::zero(); m.dim()];
    for i in 0..t.rank {
        v[m.cartan_index(0, i)] = inv[i][k].clone();
    }
    Ok((Component::Center, CompImage::Center(v)))
}

/// The fixed points of an outer involution of `E_6` that are of type `C_4`:
/// a diagram automorphism composed with the inner involution given by the
/// parity of one coefficient.
pub fn e6_c4() -> Result<Produced> {
    let t = SimpleType::e(6);
    let m = LieAlgebraModel::simple(t);
    let rs = m.root_system(0).unwrap();
    let sigma = [5usize, 1, 4, 3, 2, 0];
    let mut e = Vec::new();
    let mut f = Vec::new();
    for i in 0..6 {
        let r = simple_root(6, sigma[i]);
        let a = rs.index_of(&r).unwrap();
        let mut x = vec![Q::zero(); m.dim()];
        x[m.root_index(0, a)] = rat(1);
        let mut y = vec![Q::zero(); m.dim()];
        y[m.root_index(0, rs.neg_index(a))] = rat(1);
        e.push(x);
        f.push(y);
    }
    let images = hom::extend_hom(&m, &e, &f, &hom::ModelTarget(&m))?;
    let n = m.dim();
    for k in [1usize, 3] {
        // A - I where A = theta o sigma
        let rows: Vec<Vec<Q>> = (0..n)
            .map(|row| {
                (0..n)
                    .map(|col| {
                        let mut v = images[col][row].clone();
                        if let (_, crate::liealg::Label::Root(a)) = m.label(row) {
                            if rs.all_roots[a][k] % 2 != 0 {
                                v = -v;
                            }
                        }
                        if row == col {
                            v -= rat(1);
                        }
                        v
                    })
                    .collect()
            })
            .collect();
        let fixed = linalg::nullspace(&Rationals, rows, n);
        if fixed.len() == 36 {
            let s = SubspaceBasis::from_vectors(n, fixed);
            if !s.is_subalgebra(&m) {
                return Err(Error::Internal("fixed points are not a subalgebra".into()));
            }
            return Ok((
                Component::Simple(SimpleType::c(4)),
                CompImage::Span(s.vectors().to_vec()),
            ));
        }
    }
    Err(Error::Internal("no involution with 36-dimensional fixed points".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dim(p: &[Produced]) -> usize {
        p.iter()
            .map(|(c, _)| c.dim())
            .sum()
    }

    #[test]
    fn maximal_rank_subalgebras() {
        let so9 = regular(SimpleType::f4(), &extended_base(SimpleType::f4(), 4).unwrap()).unwrap();
        assert_eq!(so9[0].0, Component::Simple(SimpleType::b(4)));
        let c3a1 = regular(SimpleType::f4(), &extended_base(SimpleType::f4(), 1).unwrap()).unwrap();
        assert_eq!(dim(&c3a1), 21 + 3);
        let a5a1 = regular(SimpleType::e(6), &extended_base(SimpleType::e(6), 2).unwrap()).unwrap();
        assert_eq!(dim(&a5a1), 38);
        let g2 = regular(SimpleType::g2(), &extended_base(SimpleType::g2(), 2).unwrap()).unwrap();
        assert_eq!(g2.len(), 2);
        let a2 = regular(SimpleType::g2(), &long_base(SimpleType::g2())).unwrap();
        assert_eq!(a2[0].0, Component::Simple(SimpleType::a(2)));
    }

    #[test]
    fn f4_inside_e6_by_folding() {
        let sets = vec![vec![2], vec![4], vec![3, 5], vec![1, 6]];
        let (c, _) = folded(SimpleType::e(6), SimpleType::f4(), &sets).unwrap();
        assert_eq!(c.dim(), 52);
    }

    #[test]
    fn c4_inside_e6() {
        let (c, im) = e6_c4().unwrap();
        assert_eq!(c.dim(), 36);
        assert!(matches!(im, CompImage::Span(v) if v.len() == 36));
    }
}
