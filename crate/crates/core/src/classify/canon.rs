//! Canonical keys of pairs up to permutation of pieces, relabeling of parts
//! and conjugacy of embeddings.
//!
//! A piece is fingerprinted by the multiset of weights of the ambient roots
//! restricted to the Cartan subalgebra of `h`: coroots of each simple part
//! and the generator of each central part. The multiset is invariant under
//! the Weyl group of `h`, so only diagram automorphisms of the parts, the
//! scale and sign of central generators and the order of isomorphic parts
//! need to be minimized over. Linearly equivalent but non-conjugate
//! embeddings share a fingerprint.

use crate::error::{Error, Result};
use crate::field::Rationals;
use crate::liealg::matrix::Q;
use crate::liealg::{Component, Label, LieAlgebraModel};
use crate::pairs::{PairSpec, Piece, Slot};
use crate::rootsys::{cartan_relabelings, SimpleType};
use num_integer::Integer;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

/// Fingerprint of one piece, with parts in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PiecePrint {
    pub ambient: SimpleType,
    /// Canonical type of each nonzero part.
    pub parts: Vec<Component>,
    /// Sorted weights of the ambient roots, one coordinate per coroot or
    /// central generator of the parts.
    pub weights: Vec<Vec<Q>>,
}

#[derive(Clone, Debug)]
pub struct PieceCanon {
    pub print: PiecePrint,
    /// Every part order attaining the minimum: position `k` holds the
    /// original index of the part placed `k`-th. Zero parts are absent.
    pub orders: Vec<Vec<usize>>,
}

/// Canonical key of a spec.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpecKey {
    pub pieces: Vec<PiecePrint>,
    pub couplings: Vec<Vec<Slot>>,
}

fn canonical_type(t: SimpleType) -> SimpleType {
    t.canonical()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn go(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            go(k + 1, p, out);
            p.swap(k, i);
        }
    }
    go(0, &mut p, &mut out);
    out
}

/// Relabelings of the coroots of type `t` onto its canonical type, one per
/// diagram automorphism: new coordinate `i` is old coordinate `s[i]`.
fn relabelings(t: SimpleType) -> Arc<Vec<Vec<usize>>> {
    static CACHE: OnceLock<Mutex<HashMap<SimpleType, Arc<Vec<Vec<usize>>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = cache.lock().unwrap().get(&t) {
        return v.clone();
    }
    let v = Arc::new(cartan_relabelings(t, canonical_type(t)));
    cache.lock().unwrap().insert(t, v.clone());
    v
}

/// `alpha_a(h_j)` in the standard model of `t`, for root `a` and coroot `j`.
fn root_value(model: &LieAlgebraModel, comp: usize, j: usize, a: usize) -> i64 {
    let i = model.root_index(comp, a);
    model
        .bracket_basis(model.cartan_index(comp, j), i)
        .into_iter()
        .find(|&(k, _)| k == i)
        .map_or(0, |(_, c)| c)
}

fn is_multiple(x: &[Q], y: &[Q], c: &Q) -> bool {
    x.iter().zip(y).all(|(a, b)| *a == b * c)
}

/// One transformation per choice, acting on a block of coordinates.
enum Block {
    Simple { start: usize, maps: Arc<Vec<Vec<usize>>> },
    Center { start: usize, scale: Q },
}

impl Block {
    fn choices(&self) -> usize {
        match self {
            Block::Simple { maps, .. } => maps.len(),
            Block::Center { .. } => 2,
        }
    }

    fn apply(&self, choice: usize, w: &[Q], out: &mut Vec<Q>) {
        match self {
            Block::Simple { start, maps } => out.extend(maps[choice].iter().map(|&k| w[start + k].clone())),
            Block::Center { start, scale } => {
                let v = &w[*start] * scale;
                out.push(if choice == 0 { v } else { -v });
            }
        }
    }
}

fn primitive_scale(values: impl Iterator<Item = Q>) -> Q {
    let mut num = num_bigint::BigInt::zero();
    let mut den = num_bigint::BigInt::one();
    for v in values {
        num = num.gcd(v.numer());
        den = den.lcm(v.denom());
    }
    if num.is_zero() {
        return Q::one();
    }
    Q::new(den, num)
}

fn compute_piece(piece: &Piece) -> Result<PieceCanon> {
    let inst = PairSpec::single(piece.clone()).instantiate()?;
    let model = &inst.model;
    let n_roots = model.dim() - model.rank();
    // Parts with their original index, canonical type and Cartan generators.
    let mut parts: Vec<(usize, Component, Vec<Vec<Q>>)> = Vec::new();
    for hp in &inst.parts {
        if hp.components.is_empty() {
            continue;
        }
        if hp.components.len() != 1 {
            return Err(Error::Unsupported(format!("part {} has several components", hp.name)));
        }
        let j = hp.slots[0].1;
        match hp.components[0] {
            Component::Center => parts.push((j, Component::Center, vec![hp.vectors[0][0].clone()])),
            Component::Simple(t) => {
                let r = t.rank;
                let vs = &hp.vectors[0];
                let part_model = LieAlgebraModel::simple(t);
                let hs: Vec<Vec<Q>> = vs[..r].to_vec();
                // The images must form a Chevalley basis: [h_j, e_a] = alpha_a(h_j) e_a.
                for (a, e) in vs[r..].iter().enumerate() {
                    for (k, h) in hs.iter().enumerate() {
                        let c = Q::from_integer(root_value(&part_model, 0, k, a).into());
                        if !is_multiple(&model.bracket(&Rationals, h, e), e, &c) {
                            return Err(Error::Unsupported(format!(
                                "part {} is not given by a Chevalley basis image",
                                hp.name
                            )));
                        }
                    }
                }
                parts.push((j, Component::Simple(canonical_type(t)), hs));
            }
        }
        let hs = &parts.last().unwrap().2;
        for h in hs {
            let off_cartan = h
                .iter()
                .enumerate()
                .any(|(i, x)| !x.is_zero() && !matches!(model.label(i).1, Label::Cartan(_)));
            if off_cartan {
                return Err(Error::Unsupported(format!(
                    "Cartan subalgebra of part {} is not in the standard Cartan subalgebra",
                    hp.name
                )));
            }
        }
    }
    // Raw weights: for each ambient root, the values of every generator in
    // part order, blocks recorded with their original types.
    let amb = model.components()[0]
        .simple()
        .ok_or_else(|| Error::Internal("piece ambient is not simple".into()))?;
    let mut raw: Vec<Vec<Q>> = vec![Vec::new(); n_roots];
    let mut starts = Vec::new();
    for (_, _, hs) in &parts {
        starts.push(raw[0].len());
        for h in hs {
            for (a, w) in raw.iter_mut().enumerate() {
                let mut v = Q::zero();
                for j in 0..amb.rank {
                    if !h[j].is_zero() {
                        v += &h[j] * Q::from_integer(root_value(model, 0, j, a).into());
                    }
                }
                w.push(v);
            }
        }
    }
    let blocks: Vec<Block> = inst
        .parts
        .iter()
        .filter(|hp| !hp.components.is_empty())
        .zip(&starts)
        .map(|(hp, &start)| match hp.components[0] {
            Component::Simple(t) => Block::Simple { start, maps: relabelings(t) },
            Component::Center => Block::Center { start, scale: primitive_scale(raw.iter().map(|w| w[start].clone())) },
        })
        .collect();
    // Candidate part orders: sorted by canonical type, ties permuted.
    let mut idx: Vec<usize> = (0..parts.len()).collect();
    idx.sort_by(|&a, &b| parts[a].1.cmp(&parts[b].1));
    let mut orders: Vec<Vec<usize>> = vec![Vec::new()];
    let mut k = 0;
    while k < idx.len() {
        let mut e = k + 1;
        while e < idx.len() && parts[idx[e]].1 == parts[idx[k]].1 {
            e += 1;
        }
        let tie = &idx[k..e];
        let mut next = Vec::new();
        for o in &orders {
            for p in permutations(tie.len()) {
                let mut o = o.clone();
                o.extend(p.iter().map(|&q| tie[q]));
                next.push(o);
            }
        }
        orders = next;
        k = e;
    }
    let choice_counts: Vec<usize> = blocks.iter().map(|b| b.choices()).collect();
    let mut best: Option<Vec<Vec<Q>>> = None;
    let mut best_orders: Vec<Vec<usize>> = Vec::new();
    for o in &orders {
        let mut choice = vec![0usize; blocks.len()];
        let mut local: Option<Vec<Vec<Q>>> = None;
        loop {
            let mut ws: Vec<Vec<Q>> = raw
                .iter()
                .map(|w| {
                    let mut out = Vec::with_capacity(w.len());
                    for &p in o {
                        blocks[p].apply(choice[p], w, &mut out);
                    }
                    out
                })
                .collect();
            ws.sort();
            if local.as_ref().is_none_or(|l| ws < *l) {
                local = Some(ws);
            }
            // Next choice vector.
            let mut i = 0;
            while i < choice.len() {
                choice[i] += 1;
                if choice[i] < choice_counts[i] {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
            if i == choice.len() {
                break;
            }
        }
        let local = local.unwrap();
        match &best {
            Some(b) if local > *b => {}
            Some(b) if local == *b => best_orders.push(o.clone()),
            _ => {
                best = Some(local);
                best_orders = vec![o.clone()];
            }
        }
    }
    let print = PiecePrint {
        ambient: canonical_type(amb),
        parts: idx.iter().map(|&p| parts[p].1).collect(),
        weights: best.unwrap_or_default(),
    };
    let orders = best_orders.into_iter().map(|o| o.into_iter().map(|p| parts[p].0).collect()).collect();
    Ok(PieceCanon { print, orders })
}

/// Memoized piece fingerprints, shareable across threads.
#[derive(Default)]
pub struct Canonicalizer {
    cache: Mutex<HashMap<Piece, Arc<PieceCanon>>>,
}

impl Canonicalizer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn piece(&self, piece: &Piece) -> Result<Arc<PieceCanon>> {
        if let Some(c) = self.cache.lock().unwrap().get(piece) {
            return Ok(c.clone());
        }
        let c = Arc::new(compute_piece(piece)?);
        self.cache.lock().unwrap().insert(piece.clone(), c.clone());
        Ok(c)
    }

    /// Minimum over permutations of equal pieces and over the part orders of
    /// each piece of the relabeled coupling groups.
    pub fn spec(&self, spec: &PairSpec) -> Result<SpecKey> {
        let canons: Vec<Arc<PieceCanon>> = spec.pieces.iter().map(|p| self.piece(p)).collect::<Result<_>>()?;
        let mut idx: Vec<usize> = (0..canons.len()).collect();
        idx.sort_by(|&a, &b| canons[a].print.cmp(&canons[b].print));
        // Piece orders: ties permuted.
        let mut piece_orders: Vec<Vec<usize>> = vec![Vec::new()];
        let mut k = 0;
        while k < idx.len() {
            let mut e = k + 1;
            while e < idx.len() && canons[idx[e]].print == canons[idx[k]].print {
                e += 1;
            }
            let tie = &idx[k..e];
            let mut next = Vec::new();
            for o in &piece_orders {
                for p in permutations(tie.len()) {
                    let mut o = o.clone();
                    o.extend(p.iter().map(|&q| tie[q]));
                    next.push(o);
                }
            }
            piece_orders = next;
            k = e;
        }
        let mut best: Option<Vec<Vec<Slot>>> = None;
        for po in &piece_orders {
            let mut pos = vec![0usize; po.len()];
            for (k, &p) in po.iter().enumerate() {
                pos[p] = k;
            }
            let counts: Vec<usize> = canons.iter().map(|c| c.orders.len()).collect();
            let mut choice = vec![0usize; canons.len()];
            loop {
                let part_pos: Vec<BTreeMap<usize, usize>> = canons
                    .iter()
                    .zip(&choice)
                    .map(|(c, &ch)| c.orders[ch].iter().enumerate().map(|(k, &j)| (j, k)).collect())
                    .collect();
                let mut groups: Vec<Vec<Slot>> = spec
                    .couplings
                    .iter()
                    .map(|g| {
                        let mut g: Vec<Slot> = g.iter().map(|&(p, j)| (pos[p], part_pos[p][&j])).collect();
                        g.sort_unstable();
                        g
                    })
                    .collect();
                groups.sort();
                if best.as_ref().is_none_or(|b| groups < *b) {
                    best = Some(groups);
                }
                let mut i = 0;
                while i < choice.len() {
                    choice[i] += 1;
                    if choice[i] < counts[i] {
                        break;
                    }
                    choice[i] = 0;
                    i += 1;
                }
                if i == choice.len() {
                    break;
                }
            }
        }
        Ok(SpecKey {
            pieces: idx.iter().map(|&p| canons[p].print.clone()).collect(),
            couplings: best.unwrap_or_default(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pairs::registry::{Registry, Table};
    use crate::pairs::expr::Indices;

    fn spec(t: Table, item: u32, vals: &[(char, i64)]) -> PairSpec {
        let reg = Registry::builtin().unwrap();
        let e = reg.get(t, item).unwrap();
        let idx = e.index_tuples(6).into_iter().find(|i: &Indices| vals.iter().all(|&(c, v)| i.get(c) == Some(v))).unwrap();
        e.spec(&idx).unwrap()
    }

    #[test]
    fn isomorphic_forms_share_a_key() {
        let c = Canonicalizer::new();
        // so6 and sl4 forms of the same pair.
        let a = c.spec(&spec(Table::T1, 8, &[('n', 1)])).unwrap();
        let b = c.spec(&spec(Table::T1, 3, &[('n', 3), ('m', 1)])).unwrap();
        assert_eq!(a, b);
        // The Levi subalgebras of sp4 = so5: the Siegel gl2 is so3 + so2 and
        // sp2 + c is the gl2 of an isotropic plane.
        let a = c.spec(&spec(Table::T1, 15, &[('n', 2)])).unwrap();
        let b = c.spec(&spec(Table::T1, 10, &[('n', 3), ('m', 2)])).unwrap();
        assert_eq!(a, b);
        let a = c.spec(&spec(Table::T1, 17, &[('n', 2)])).unwrap();
        let b = c.spec(&spec(Table::T1, 9, &[('n', 2)])).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn the_two_gl2_of_sp4_differ() {
        let c = Canonicalizer::new();
        let a = c.spec(&spec(Table::T1, 15, &[('n', 2)])).unwrap();
        let b = c.spec(&spec(Table::T1, 17, &[('n', 2)])).unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn piece_order_does_not_matter() {
        let c = Canonicalizer::new();
        let s = spec(Table::T4, 8, &[('n', 1), ('m', 2)]);
        let swapped = PairSpec {
            pieces: vec![s.pieces[1].clone(), s.pieces[0].clone()],
            couplings: s.couplings.iter().map(|g| g.iter().map(|&(p, j)| (1 - p, j)).collect()).collect(),
        };
        assert_eq!(c.spec(&s).unwrap(), c.spec(&swapped).unwrap());
    }
}
