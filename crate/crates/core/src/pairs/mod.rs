//! Pairs `(g, h)`: pieces, couplings, the embedding catalogue and the registry.
//!
//! A pair is a list of pieces, each a simple ambient algebra with a completely
//! decomposable subalgebra, together with couplings: groups of isomorphic
//! simple parts in different pieces that are identified, so that the
//! corresponding component of `h` embeds diagonally.

pub mod expr;
pub mod modules;
pub mod parse;
pub mod piece;
pub mod registry;
pub mod regular;

use crate::error::{Error, Result};
use crate::field::{Field, PrimeField, Rationals};
use crate::liealg::matrix::Q;
use crate::liealg::{Component, LieAlgebraModel, SubspaceBasis};
use crate::liealg::hom::{extend_hom, ModelTarget};
use crate::linalg::{self, Echelon};
use crate::rootsys::{cartan_relabelings, SimpleType};
use num_traits::Zero;
use modules::CompImage;
pub use piece::{PartName, Piece};
use std::collections::BTreeSet;
use std::fmt;

/// A slot is a part of a piece: `(piece index, part index)`.
pub type Slot = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairSpec {
    pub pieces: Vec<Piece>,
    /// Groups of identified slots, each with at least two members in
    /// distinct pieces. Slots in no group are uncoupled.
    pub couplings: Vec<Vec<Slot>>,
}

/// A component of `h` with the slots it occupies.
#[derive(Clone, Debug)]
pub struct HPart {
    pub slots: Vec<Slot>,
    pub name: PartName,
    pub components: Vec<Component>,
    /// Basis of each component in global coordinates (Chevalley order for
    /// simple components).
    pub vectors: Vec<Vec<Vec<Q>>>,
    /// Indices into `vectors[c]` of Chevalley generators `e_i, f_i`.
    pub generators: Vec<Vec<usize>>,
}

/// An instantiated pair.
#[derive(Clone, Debug)]
pub struct Instance {
    pub spec: PairSpec,
    pub model: LieAlgebraModel,
    pub h: SubspaceBasis,
    pub parts: Vec<HPart>,
}

impl Instance {
    /// Basis of `h` adapted to the parts (not echelonized).
    pub fn h_vectors(&self) -> Vec<Vec<Q>> {
        self.parts
            .iter()
            .flat_map(|p| p.vectors.iter().flatten().cloned())
            .collect()
    }
}

impl PairSpec {
    pub fn single(piece: Piece) -> PairSpec {
        PairSpec { pieces: vec![piece], couplings: vec![] }
    }

    pub fn ambient(&self) -> Vec<Component> {
        self.pieces.iter().map(|p| Component::Simple(p.ambient)).collect()
    }

    pub fn group_of(&self, slot: Slot) -> Option<usize> {
        self.couplings.iter().position(|g| g.contains(&slot))
    }

    /// Parts of `h`: coupling groups first, then uncoupled slots in order.
    pub fn h_parts(&self) -> Vec<Vec<Slot>> {
        let mut out: Vec<Vec<Slot>> = self.couplings.clone();
        for (pi, p) in self.pieces.iter().enumerate() {
            for j in 0..p.parts.len() {
                if self.group_of((pi, j)).is_none() {
                    out.push(vec![(pi, j)]);
                }
            }
        }
        out
    }

    pub fn h_dim(&self) -> usize {
        self.h_parts()
            .iter()
            .map(|g| self.pieces[g[0].0].parts[g[0].1].dim())
            .sum()
    }

    pub fn g_dim(&self) -> usize {
        self.pieces.iter().map(|p| p.ambient.dim()).sum()
    }

    /// Check coupling invariants: members in distinct pieces, isomorphic
    /// noncommutative parts, every slot in at most one group.
    pub fn validate(&self) -> Result<()> {
        let mut seen = BTreeSet::new();
        for g in &self.couplings {
            if g.len() < 2 {
                return Err(Error::Inadmissible("a coupling needs two members".into()));
            }
            let pieces: BTreeSet<usize> = g.iter().map(|s| s.0).collect();
            if pieces.len() != g.len() {
                return Err(Error::Inadmissible("coupled parts must lie in distinct pieces".into()));
            }
            let mut kind: Option<Vec<Component>> = None;
            for &(pi, j) in g {
                if !seen.insert((pi, j)) {
                    return Err(Error::Inadmissible(format!("slot {pi}.{j} coupled twice")));
                }
                let part = self
                    .pieces
                    .get(pi)
                    .and_then(|p| p.parts.get(j))
                    .ok_or_else(|| Error::Inadmissible(format!("no slot {pi}.{j}")))?;
                let comps = canonical_components(&part.components()?);
                if comps.is_empty() || comps.iter().any(|c| *c == Component::Center) {
                    return Err(Error::Inadmissible(format!(
                        "part {part} is not a noncommutative simple or semisimple part"
                    )));
                }
                match &kind {
                    None => kind = Some(comps),
                    Some(k) if *k != comps => {
                        return Err(Error::Inadmissible(format!(
                            "coupled parts are not isomorphic ({part})"
                        )))
                    }
                    _ => {}
                }
            }
        }
        Ok(())
    }

    /// Disjoint union: the direct sum of the two pairs, without couplings
    /// between them.
    pub fn union(&self, other: &PairSpec) -> PairSpec {
        let shift = self.pieces.len();
        let mut pieces = self.pieces.clone();
        pieces.extend(other.pieces.iter().cloned());
        let mut couplings = self.couplings.clone();
        couplings.extend(
            other.couplings.iter().map(|g| g.iter().map(|&(p, q)| (p + shift, q)).collect()),
        );
        PairSpec { pieces, couplings }
    }

    /// Couple slot `i` of `self` with slot `j` of `other` (disjoint union).
    pub fn couple(&self, other: &PairSpec, i: Slot, j: Slot) -> Result<PairSpec> {
        let shift = self.pieces.len();
        self.union(other).link(i, (j.0 + shift, j.1))
    }

    /// Identify two slots of the same spec, merging their groups.
    pub fn link(&self, a: Slot, b: Slot) -> Result<PairSpec> {
        let mut couplings = self.couplings.clone();
        let ga = couplings.iter().position(|g| g.contains(&a));
        let gb = couplings.iter().position(|g| g.contains(&b));
        match (ga, gb) {
            (Some(x), Some(y)) if x == y => {
                return Err(Error::Inadmissible("slots already coupled".into()))
            }
            (Some(x), Some(y)) => {
                let moved = couplings[y].clone();
                couplings[x].extend(moved);
                couplings.remove(y);
            }
            (Some(x), None) => couplings[x].push(b),
            (None, Some(y)) => couplings[y].push(a),
            (None, None) => couplings.push(vec![a, b]),
        }
        for g in couplings.iter_mut() {
            g.sort_unstable();
        }
        let spec = PairSpec { pieces: self.pieces.clone(), couplings };
        spec.validate()?;
        Ok(spec)
    }

    /// Finest decomposition along connected components of the coupling graph.
    pub fn decompose(&self) -> Vec<PairSpec> {
        let n = self.pieces.len();
        let mut comp: Vec<usize> = (0..n).collect();
        fn find(c: &mut Vec<usize>, x: usize) -> usize {
            if c[x] != x {
                let r = find(c, c[x]);
                c[x] = r;
            }
            c[x]
        }
        for g in &self.couplings {
            for w in g.windows(2) {
                let (a, b) = (find(&mut comp, w[0].0), find(&mut comp, w[1].0));
                comp[a] = b;
            }
        }
        let mut roots: Vec<usize> = Vec::new();
        for i in 0..n {
            let r = find(&mut comp, i);
            if !roots.contains(&r) {
                roots.push(r);
            }
        }
        roots
            .iter()
            .map(|&r| {
                let members: Vec<usize> = (0..n).filter(|&i| find(&mut comp.clone(), i) == r).collect();
                let pos = |p: usize| members.iter().position(|&m| m == p).unwrap();
                PairSpec {
                    pieces: members.iter().map(|&i| self.pieces[i].clone()).collect(),
                    couplings: self
                        .couplings
                        .iter()
                        .filter(|g| members.contains(&g[0].0))
                        .map(|g| g.iter().map(|&(p, q)| (pos(p), q)).collect())
                        .collect(),
                }
            })
            .collect()
    }

    pub fn is_indecomposable(&self) -> bool {
        self.decompose().len() == 1
    }

    /// Replace every central part by its completely decomposable hull.
    pub fn saturate(&self) -> Result<PairSpec> {
        let mut out = self.clone();
        for (pi, p) in self.pieces.iter().enumerate() {
            let sat = p.saturate()?;
            if sat.parts.len() != p.parts.len() {
                // central parts are never coupled, and noncentral parts keep their indices
                for g in out.couplings.iter() {
                    for &(q, j) in g {
                        if q == pi && j >= sat.parts.len() {
                            return Err(Error::Internal("coupled slot moved by saturation".into()));
                        }
                    }
                }
            }
            out.pieces[pi] = sat;
        }
        Ok(out)
    }

    pub fn is_saturated(&self) -> Result<bool> {
        Ok(self.saturate()? == *self)
    }

    /// Build the ambient model and the subalgebra.
    pub fn instantiate(&self) -> Result<Instance> {
        self.validate()?;
        let model = LieAlgebraModel::standard(&self.ambient())?;
        let realized: Vec<Vec<piece::RealizedPart>> =
            self.pieces.iter().map(|p| p.realize()).collect::<Result<_>>()?;
        let n = model.dim();
        let mut parts = Vec::new();
        for slots in self.h_parts() {
            let (p0, j0) = slots[0];
            let comps = realized[p0][j0].components.clone();
            let mut vectors: Vec<Vec<Vec<Q>>> = Vec::new();
            let mut generators = Vec::new();
            for (ci, c) in comps.iter().enumerate() {
                let size = match &realized[p0][j0].images[ci] {
                    CompImage::Hom(v) => v.len(),
                    CompImage::Center(_) => 1,
                    CompImage::Span(v) => {
                        if slots.len() > 1 {
                            return Err(Error::Unsupported("coupling of a part given only by its span".into()));
                        }
                        v.len()
                    }
                };
                let mut vs = vec![vec![Q::from_integer(0.into()); n]; size];
                for &(pi, j) in &slots {
                    let off = model.offset(pi);
                    let img = &realized[pi][j].images[ci];
                    let mut rows: Vec<Vec<Q>> = match img {
                        CompImage::Hom(v) | CompImage::Span(v) => v.clone(),
                        CompImage::Center(v) => vec![v.clone()],
                    };
                    // Isomorphic types with different labels are identified
                    // through a relabeling of the simple roots.
                    if let (Component::Simple(t0), Component::Simple(t), CompImage::Hom(_)) =
                        (c, realized[pi][j].components[ci], img)
                    {
                        if *t0 != t {
                            rows = relabel_rows(*t0, t, &rows)?;
                        }
                    }
                    if rows.len() != size {
                        return Err(Error::Internal("coupled images differ in size".into()));
                    }
                    for (dst, src) in vs.iter_mut().zip(rows) {
                        for (k, x) in src.iter().enumerate() {
                            dst[off + k] += x;
                        }
                    }
                }
                generators.push(match (c, &realized[p0][j0].images[ci]) {
                    (Component::Simple(t), CompImage::Hom(_)) => chevalley_generator_indices(*t),
                    _ => (0..size).collect(),
                });
                vectors.push(vs);
            }
            parts.push(HPart {
                name: self.pieces[p0].parts[j0].clone(),
                slots,
                components: comps,
                vectors,
                generators,
            });
        }
        let all: Vec<Vec<Q>> = parts.iter().flat_map(|p| p.vectors.iter().flatten().cloned()).collect();
        let h = SubspaceBasis::from_vectors(n, all.clone());
        if h.dim() != all.len() || h.dim() != self.h_dim() {
            return Err(Error::Internal(format!(
                "h has dimension {} but its parts add up to {}",
                h.dim(),
                self.h_dim()
            )));
        }
        let inst = Instance { spec: self.clone(), model, h, parts };
        check_subalgebra(&inst)?;
        Ok(inst)
    }
}

/// Images of the Chevalley basis of `t0` given the images `rows` of the
/// Chevalley basis of an isomorphic type `t`.
fn relabel_rows(t0: SimpleType, t: SimpleType, rows: &[Vec<Q>]) -> Result<Vec<Vec<Q>>> {
    let s = cartan_relabelings(t, t0)
        .into_iter()
        .next()
        .ok_or_else(|| Error::Inadmissible(format!("{t0} and {t} are not isomorphic")))?;
    let (src, dst) = (LieAlgebraModel::simple(t0), LieAlgebraModel::simple(t));
    let gens = chevalley_generator_indices(t);
    let unit = |k: usize| {
        let mut v = vec![Q::from_integer(0.into()); dst.dim()];
        v[k] = Q::from_integer(1.into());
        v
    };
    let e: Vec<Vec<Q>> = s.iter().map(|&i| unit(gens[2 * i])).collect();
    let f: Vec<Vec<Q>> = s.iter().map(|&i| unit(gens[2 * i + 1])).collect();
    let phi = extend_hom(&src, &e, &f, &ModelTarget(&dst))?;
    Ok(phi
        .iter()
        .map(|x| {
            let mut out = vec![Q::from_integer(0.into()); rows[0].len()];
            for (c, row) in x.iter().zip(rows) {
                if !c.is_zero() {
                    for (o, y) in out.iter_mut().zip(row) {
                        *o += c * y;
                    }
                }
            }
            out
        })
        .collect())
}

fn canonical_components(c: &[Component]) -> Vec<Component> {
    c.iter()
        .map(|x| match x {
            Component::Simple(t) => Component::Simple(t.canonical()),
            Component::Center => Component::Center,
        })
        .collect()
}

/// Positions of `e_i` and `f_i` in the Chevalley basis of `t`.
pub fn chevalley_generator_indices(t: crate::rootsys::SimpleType) -> Vec<usize> {
    let m = LieAlgebraModel::simple(t);
    let rs = m.root_system(0).unwrap();
    let r = t.rank;
    (0..r)
        .flat_map(|i| {
            let mut v = vec![0i64; r];
            v[i] = 1;
            let a = rs.index_of(&v).unwrap();
            [r + a, r + rs.neg_index(a)]
        })
        .collect()
}

const CHECK_PRIME: u64 = 2_305_843_009_213_693_951;

/// `h` is closed under brackets with its generators, and the invariant form
/// of `g` restricts nondegenerately to it. Checked modulo a large prime;
/// failures are confirmed exactly before they are reported.
fn check_subalgebra(inst: &Instance) -> Result<()> {
    let f = PrimeField::new(CHECK_PRIME);
    match check_in(&f, inst) {
        Ok(()) => Ok(()),
        Err(_) => check_in(&Rationals, inst),
    }
}

fn check_in<F: Field>(f: &F, inst: &Instance) -> Result<()> {
    let n = inst.model.dim();
    let basis: Vec<Vec<F::Elem>> = inst
        .h
        .rows_in(f)
        .ok_or_else(|| Error::Internal("h does not reduce modulo the check prime".into()))?;
    let ech: Echelon<F> = linalg::echelon(f, basis.clone(), n);
    for p in &inst.parts {
        for (vs, gens) in p.vectors.iter().zip(&p.generators) {
            for &g in gens {
                let x = linalg::convert_vec(f, &vs[g]).unwrap();
                for y in &basis {
                    if !ech.contains(f, &inst.model.bracket(f, &x, y)) {
                        return Err(Error::Internal(format!(
                            "h is not closed under brackets (part {})",
                            p.name
                        )));
                    }
                }
            }
        }
    }
    let gram: Vec<Vec<F::Elem>> = basis
        .iter()
        .map(|x| {
            let fx = inst.model.form_apply(f, x);
            basis
                .iter()
                .map(|y| {
                    let mut acc = f.zero();
                    for (a, b) in fx.iter().zip(y) {
                        f.add_mul(&mut acc, a, b);
                    }
                    acc
                })
                .collect()
        })
        .collect();
    if linalg::rank(f, gram, basis.len()) != basis.len() {
        return Err(Error::Degenerate("invariant form degenerates on h".into()));
    }
    Ok(())
}

impl fmt::Display for PairSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pieces: Vec<String> = self.pieces.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", pieces.join(" + "))?;
        if !self.couplings.is_empty() {
            let groups: Vec<String> = self
                .couplings
                .iter()
                .map(|g| g.iter().map(|(p, q)| format!("{p}.{q}")).collect::<Vec<_>>().join("~"))
                .collect();
            write!(f, " | {}", groups.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isomorphic_types_with_different_labels_couple() {
        let so5 = Piece::identity(SimpleType::b(2));
        let sp4 = Piece::identity(SimpleType::c(2));
        let spec = PairSpec::single(so5).couple(&PairSpec::single(sp4), (0, 0), (0, 0)).unwrap();
        let inst = spec.instantiate().unwrap();
        assert_eq!(inst.h.dim(), 10);
        assert!(inst.h.is_subalgebra(&inst.model));
    }
    use crate::rootsys::SimpleType;

    fn piece(a: &str, parts: &str, recipe: &str) -> Piece {
        Piece::new(
            piece::parse_ambient(a).unwrap(),
            parts.split(',').map(|x| PartName::new(x).unwrap()).collect(),
            recipe,
        )
    }

    #[test]
    fn diagonal_sl2() {
        let a = PairSpec::single(Piece::identity(SimpleType::a(1)));
        let spec = a.couple(&a, (0, 0), (0, 0)).unwrap();
        let inst = spec.instantiate().unwrap();
        assert_eq!(inst.model.dim(), 6);
        assert_eq!(inst.h.dim(), 3);
        assert!(inst.h.is_subalgebra(&inst.model));
    }

    #[test]
    fn coupled_through_different_modules() {
        let a = PairSpec::single(piece("sp4", "sp2,sp2", "V0 + V1"));
        let b = PairSpec::single(piece("sl3", "so3", "V0"));
        let spec = a.couple(&b, (0, 1), (0, 0)).unwrap();
        let inst = spec.instantiate().unwrap();
        assert_eq!(inst.h.dim(), 6);
        assert_eq!(spec.decompose().len(), 1);
        assert!(spec.is_saturated().unwrap());
    }

    #[test]
    fn coupling_rejects_non_isomorphic() {
        let a = PairSpec::single(piece("sp4", "sp2,sp2", "V0 + V1"));
        let b = PairSpec::single(Piece::identity(SimpleType::a(2)));
        assert!(a.couple(&b, (0, 0), (0, 0)).is_err());
        let c = PairSpec::single(piece("sl3", "sl2,c", "V0 e1 + 1 e1^-2"));
        assert!(c.couple(&c, (0, 1), (0, 1)).is_err());
    }

    #[test]
    fn decompose_disjoint_union() {
        let a = PairSpec::single(piece("sl3", "so3", "V0"));
        let b = PairSpec::single(piece("sl4", "sp4", "V0"));
        let mut u = a.clone();
        u.pieces.extend(b.pieces.clone());
        assert_eq!(u.decompose(), vec![a, b]);
    }
}
