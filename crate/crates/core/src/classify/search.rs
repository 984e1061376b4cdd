//! Enumeration of indecomposable couplings of complexity one.
//!
//! Pieces come from Tables 1 and 2 and from identity pairs `(g, g)`. A
//! coupling only lowers `h`, so its complexity is at least that of any
//! sub-coupling, and every connected coupling is reached from a smaller
//! one of complexity at most one by attaching one piece along a spanning
//! tree of its coupling graph and then linking the remaining slots. States
//! are pruned by `N(g) - dim h`, by the sum of the complexities of the
//! pieces and by the bound for `sl2` couplings, and are compared by
//! canonical keys.

use super::canon::{Canonicalizer, PiecePrint, SpecKey};
use super::{complexity_with_fallback, coupling_complexity_bound, part_ranges, Bound, ProjectionClass};
use crate::complexity::{complexity_oracle, formula_from_ssgp, isotropy_ssgp_adapted, ComplexityReport, Options};
use crate::error::{Error, Result};
use crate::liealg::Component;
use crate::pairs::piece::is_classical_family;
use crate::pairs::registry::{Registry, Table, TableEntry};
use crate::pairs::{PairSpec, Piece, Slot};
use crate::rootsys::SimpleType;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SearchBounds {
    /// Maximum of every index of a Table 4 row.
    pub index_max: i64,
    /// Largest number of simple components explored.
    pub max_pieces: usize,
}

impl SearchBounds {
    pub fn new(index_max: i64) -> Self {
        SearchBounds { index_max, max_pieces: 6 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FoundSpec {
    pub spec: String,
    #[serde(skip)]
    pub pair: PairSpec,
    pub report: ComplexityReport,
    pub oracle: Option<ComplexityReport>,
    /// Table 4 instantiations with the same canonical key.
    pub matches: Vec<String>,
    /// Some match has every index within the bounds.
    pub within_bounds: bool,
}

impl FoundSpec {
    pub fn oracle_agrees(&self) -> bool {
        self.oracle.as_ref().is_none_or(|o| o.complexity == self.report.complexity)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub bounds: SearchBounds,
    /// Largest classical rank among Table 4 instantiations within bounds;
    /// classical pieces of larger rank are not explored.
    pub max_classical_rank: usize,
    pub universe: Vec<String>,
    /// Pieces left out, with the reason.
    pub excluded: Vec<String>,
    pub states: usize,
    pub found: Vec<FoundSpec>,
    /// Table 4 instantiations within bounds that were not found.
    pub missing: Vec<String>,
    /// Unexplored states of complexity at most one at the piece budget.
    pub frontier: Vec<String>,
}

impl SearchReport {
    pub fn extra(&self) -> impl Iterator<Item = &FoundSpec> {
        self.found.iter().filter(|f| f.matches.is_empty())
    }

    pub fn within_bounds(&self) -> impl Iterator<Item = &FoundSpec> {
        self.found.iter().filter(|f| f.within_bounds)
    }

    pub fn exact(&self) -> bool {
        self.missing.is_empty()
            && self.extra().next().is_none()
            && self.frontier.is_empty()
            && self.found.iter().all(|f| f.oracle_agrees())
    }
}

/// A universe piece with its complexity and the class of the stabilizer
/// projection on each `sl2` part.
struct Unit {
    piece: Piece,
    complexity: usize,
    classes: BTreeMap<usize, ProjectionClass>,
    /// Noncommutative parts with their canonical components.
    slots: Vec<(usize, Vec<Component>)>,
}

struct State {
    spec: PairSpec,
    complexity: usize,
    /// Projection class of every `sl2` slot, when the stabilizer was usable.
    classes: HashMap<Slot, ProjectionClass>,
}

fn class_of(dim: usize) -> Option<ProjectionClass> {
    match dim {
        0 => Some(ProjectionClass::Zero),
        1 => Some(ProjectionClass::OneDimensional),
        3 => Some(ProjectionClass::Surjective),
        _ => None,
    }
}

fn canonical_components(piece: &Piece, part: usize) -> Result<Vec<Component>> {
    Ok(piece.parts[part]
        .components()?
        .into_iter()
        .map(|c| match c {
            Component::Simple(t) => Component::Simple(t.canonical()),
            Component::Center => Component::Center,
        })
        .collect())
}

fn is_sl2(c: &[Component]) -> bool {
    c == [Component::Simple(SimpleType::a(1))]
}

/// Complexity of a spec and the classes of its `sl2` slots.
fn evaluate(spec: &PairSpec, opts: &Options) -> Result<(ComplexityReport, HashMap<Slot, ProjectionClass>)> {
    let inst = spec.instantiate()?;
    let ranges = part_ranges(&inst);
    let fallback = || Ok((complexity_with_fallback(&inst.model, &inst.h, opts)?, HashMap::new()));
    let s = match isotropy_ssgp_adapted(&inst.model, &inst.h_vectors(), opts, &ranges) {
        Ok(s) => s,
        Err(Error::Internal(_)) | Err(Error::Degenerate(_)) => return fallback(),
        Err(e) => return Err(e),
    };
    let report = match formula_from_ssgp(inst.model.n_pos(), inst.model.rank(), inst.h.dim(), &s, opts) {
        Ok(r) => r,
        Err(Error::Internal(_)) | Err(Error::Degenerate(_)) => return fallback(),
        Err(e) => return Err(e),
    };
    let mut classes = HashMap::new();
    for (k, p) in inst.parts.iter().enumerate() {
        if p.components.len() == 1 && p.components[0].simple().map(|t| t.canonical()) == Some(SimpleType::a(1)) {
            if let Some(c) = class_of(s.coefficient_dims[k]) {
                for &slot in &p.slots {
                    classes.insert(slot, c);
                }
            }
        }
    }
    Ok((report, classes))
}

fn classical_rank(spec: &PairSpec) -> usize {
    spec.pieces
        .iter()
        .filter(|p| is_classical_family(p.ambient))
        .map(|p| p.ambient.rank)
        .max()
        .unwrap_or(0)
}

fn within(idx: &crate::pairs::expr::Indices, bound: i64) -> bool {
    idx.values.values().all(|&v| v <= bound)
}

/// Tuples of a row up to a sweep bound whose classical ambients have rank
/// at most `rank`.
fn tuples_up_to_rank(e: &TableEntry, sweep: i64, rank: usize) -> Vec<(crate::pairs::expr::Indices, PairSpec)> {
    e.index_tuples(sweep)
        .into_iter()
        .filter_map(|idx| {
            let spec = e.spec(&idx).ok()?;
            (classical_rank(&spec) <= rank).then_some((idx, spec))
        })
        .collect()
}

fn build_universe(
    reg: &Registry,
    rank: usize,
    sweep: i64,
    canon: &Canonicalizer,
    opts: &Options,
) -> Result<(Vec<Unit>, Vec<String>)> {
    let mut excluded = Vec::new();
    let mut candidates: Vec<(String, Piece)> = Vec::new();
    let mut part_types = BTreeSet::new();
    for e in reg.table(Table::T1).chain(reg.table(Table::T2)) {
        if e.table == Table::T2 && e.item == 3 {
            excluded.push(format!("{}: center is not completely decomposable", e.id()));
            continue;
        }
        for (idx, spec) in tuples_up_to_rank(e, sweep, rank) {
            let piece = spec.pieces[0].clone();
            for j in 0..piece.parts.len() {
                for c in piece.parts[j].components()? {
                    if let Component::Simple(t) = c {
                        part_types.insert(t);
                    }
                }
            }
            candidates.push((format!("{} ({idx})", e.id()), piece));
        }
    }
    for t in part_types {
        candidates.push((format!("id {}", t.classical_name()), Piece::identity(t)));
    }
    let results: Vec<(String, Result<Option<Unit>>)> = candidates
        .into_par_iter()
        .map(|(name, piece)| {
            let r = (|| {
                canon.piece(&piece)?;
                let mut slots = Vec::new();
                for j in 0..piece.parts.len() {
                    let c = canonical_components(&piece, j)?;
                    if !c.is_empty() && !c.contains(&Component::Center) {
                        slots.push((j, c));
                    }
                }
                if slots.is_empty() {
                    return Ok(None);
                }
                let spec = PairSpec::single(piece.clone());
                let (report, classes) = evaluate(&spec, opts)?;
                let classes = classes.into_iter().map(|((_, j), c)| (j, c)).collect();
                Ok(Some(Unit { piece, complexity: report.complexity, classes, slots }))
            })();
            (name, r)
        })
        .collect();
    let mut units = Vec::new();
    let mut seen: HashSet<PiecePrint> = HashSet::new();
    for (name, r) in results {
        match r {
            Ok(Some(u)) => {
                if u.complexity <= 1 && seen.insert(canon.piece(&u.piece)?.print.clone()) {
                    units.push(u);
                }
            }
            Ok(None) => {}
            Err(Error::Unsupported(msg)) => excluded.push(format!("{name}: {msg}")),
            Err(e) => return Err(Error::Internal(format!("{name}: {e}"))),
        }
    }
    Ok((units, excluded))
}

/// Cheap lower bounds: `N(g) - dim h` and the sum over pieces.
fn cheap_bound(spec: &PairSpec, piece_c: &HashMap<PiecePrint, usize>, canon: &Canonicalizer) -> Result<i64> {
    let n: i64 = spec.pieces.iter().map(|p| p.ambient.n_pos() as i64).sum();
    let by_dims = n - spec.h_dim() as i64;
    let mut sum = 0i64;
    for p in &spec.pieces {
        sum += *piece_c.get(&canon.piece(p)?.print).unwrap_or(&0) as i64;
    }
    Ok(by_dims.max(sum))
}

pub fn enumerate_complexity_one(reg: &Registry, bounds: SearchBounds, opts: &Options) -> Result<SearchReport> {
    let canon = Canonicalizer::new();
    // Table 4 within bounds fixes the classical rank explored.
    let t4: Vec<&TableEntry> = reg.table(Table::T4).collect();
    let mut rank = 0;
    for e in &t4 {
        for idx in e.index_tuples(bounds.index_max) {
            rank = rank.max(classical_rank(&e.spec(&idx)?));
        }
    }
    let sweep = 2 * rank as i64 + 1;
    let (units, excluded) = build_universe(reg, rank, sweep, &canon, opts)?;
    let universe_prints: HashSet<PiecePrint> =
        units.iter().map(|u| canon.piece(&u.piece).map(|c| c.print.clone())).collect::<Result<_>>()?;
    let piece_c: HashMap<PiecePrint, usize> = units
        .iter()
        .map(|u| Ok((canon.piece(&u.piece)?.print.clone(), u.complexity)))
        .collect::<Result<_>>()?;

    // Keys of Table 4 instantiations built from universe pieces.
    let mut t4_keys: HashMap<SpecKey, Vec<(String, bool)>> = HashMap::new();
    let mut in_bounds: BTreeMap<SpecKey, String> = BTreeMap::new();
    for e in &t4 {
        for (idx, spec) in tuples_up_to_rank(e, sweep, rank) {
            let key = match canon.spec(&spec) {
                Ok(k) => k,
                Err(Error::Unsupported(_)) => continue,
                Err(err) => return Err(err),
            };
            if !key.pieces.iter().all(|p| universe_prints.contains(p)) {
                continue;
            }
            let w = within(&idx, bounds.index_max);
            let label = format!("{} ({idx})", e.id());
            if w {
                in_bounds.entry(key.clone()).or_insert_with(|| label.clone());
            }
            t4_keys.entry(key).or_default().push((label, w));
        }
    }
    // Identity pieces and every Table 4 row within bounds must be in the universe.
    for e in &t4 {
        for idx in e.index_tuples(bounds.index_max) {
            let spec = e.spec(&idx)?;
            let key = canon.spec(&spec)?;
            if !key.pieces.iter().all(|p| universe_prints.contains(p)) {
                return Err(Error::Internal(format!("{} ({idx}) has a piece outside the search universe", e.id())));
            }
        }
    }

    let mut visited: HashSet<SpecKey> = HashSet::new();
    let mut found: Vec<(SpecKey, PairSpec, ComplexityReport)> = Vec::new();
    let mut frontier = Vec::new();
    let mut states = 0usize;
    let mut level: Vec<State> = units
        .iter()
        .map(|u| State {
            spec: PairSpec::single(u.piece.clone()),
            complexity: u.complexity,
            classes: u.classes.iter().map(|(&j, &c)| ((0, j), c)).collect(),
        })
        .collect();
    // Each round expands every state of the previous one by one piece or
    // one link; keys already seen are dropped.
    while !level.is_empty() {
        let mut children: Vec<(SpecKey, PairSpec)> = Vec::new();
        for st in &level {
            let mut slot_types: Vec<(Slot, Vec<Component>)> = Vec::new();
            for (pi, p) in st.spec.pieces.iter().enumerate() {
                for j in 0..p.parts.len() {
                    let c = canonical_components(p, j)?;
                    if !c.is_empty() && !c.contains(&Component::Center) {
                        slot_types.push(((pi, j), c));
                    }
                }
            }
            let mut push = |spec: PairSpec| -> Result<()> {
                if cheap_bound(&spec, &piece_c, &canon)? > 1 {
                    return Ok(());
                }
                let key = canon.spec(&spec)?;
                if !visited.insert(key.clone()) {
                    return Ok(());
                }
                if spec.pieces.len() > bounds.max_pieces {
                    frontier.push(spec.to_string());
                } else {
                    children.push((key, spec));
                }
                Ok(())
            };
            for (slot, ty) in &slot_types {
                for u in &units {
                    for (q, qty) in &u.slots {
                        if qty != ty {
                            continue;
                        }
                        if is_sl2(ty) {
                            if let (Some(&a), Some(&b)) = (st.classes.get(slot), u.classes.get(q)) {
                                let lowest = match coupling_complexity_bound(st.complexity, u.complexity, a, b) {
                                    Bound::Exact(x) | Bound::AtLeast(x) => x,
                                };
                                if lowest > 1 {
                                    continue;
                                }
                            }
                        }
                        push(st.spec.couple(&PairSpec::single(u.piece.clone()), *slot, (0, *q))?)?;
                    }
                }
            }
            for (x, (a, ta)) in slot_types.iter().enumerate() {
                for (b, tb) in &slot_types[x + 1..] {
                    if ta == tb && a.0 != b.0 {
                        if let Ok(spec) = st.spec.link(*a, *b) {
                            push(spec)?;
                        }
                    }
                }
            }
        }
        states += children.len();
        let evaluated: Vec<Result<Option<(SpecKey, State, ComplexityReport)>>> = children
            .into_par_iter()
            .map(|(key, spec)| {
                let (report, classes) = evaluate(&spec, opts)?;
                if report.complexity > 1 {
                    return Ok(None);
                }
                let complexity = report.complexity;
                Ok(Some((key, State { spec, complexity, classes }, report)))
            })
            .collect();
        level = Vec::new();
        for r in evaluated {
            let Some((key, st, report)) = r? else { continue };
            if st.complexity == 1 && st.spec.is_saturated()? {
                found.push((key, st.spec.clone(), report));
            }
            level.push(st);
        }
    }

    found.sort_by(|a, b| a.0.cmp(&b.0));
    let verified: Vec<Result<FoundSpec>> = found
        .into_par_iter()
        .map(|(key, spec, report)| {
            let inst = spec.instantiate()?;
            let oracle = complexity_oracle(&inst.model, &inst.h, opts)?;
            let m = t4_keys.get(&key).cloned().unwrap_or_default();
            Ok(FoundSpec {
                spec: spec.to_string(),
                pair: spec,
                report,
                oracle: Some(oracle),
                within_bounds: m.iter().any(|x| x.1),
                matches: m.into_iter().map(|x| x.0).collect(),
            })
        })
        .collect();
    let found: Vec<FoundSpec> = verified.into_iter().collect::<Result<_>>()?;
    let found_keys: HashSet<SpecKey> =
        found.iter().map(|f| canon.spec(&f.pair)).collect::<Result<_>>()?;
    let missing = in_bounds
        .into_iter()
        .filter(|(k, _)| !found_keys.contains(k))
        .map(|(_, label)| label)
        .collect();
    Ok(SearchReport {
        bounds,
        max_classical_rank: rank,
        universe: units.iter().map(|u| u.piece.to_string()).collect(),
        excluded,
        states,
        found,
        missing,
        frontier,
    })
}
