//! Classification of complexity-one pairs: valency of components, the
//! projection of the generic stabilizer on `sl2` components, the coupling
//! bound for `sl2` couplings, the enumeration of couplings, and the
//! verification of the registry tables.
//!
//! A component `h_i` of `(g, h)` is valent (1-valent) when the elementary
//! coupling `(g + h_i, h + h_i)`, with `h_i` embedded diagonally, has
//! complexity 0 (1).

pub mod canon;
pub mod search;
pub mod step1;
pub mod verify;

use crate::complexity::{complexity_formula, complexity_oracle, isotropy_ssgp_adapted, ComplexityReport, Options};
use crate::error::{Error, Result};
use crate::liealg::matrix::Q;
use crate::liealg::{Component, LieAlgebraModel, SubspaceBasis};
use crate::pairs::expr::Indices;
use crate::pairs::registry::{Registry, Table, TableEntry};
use crate::pairs::{Instance, PairSpec};
use crate::rootsys::SimpleType;
use serde::Serialize;
use std::fmt;
use std::ops::Range;

pub use search::{enumerate_complexity_one, SearchBounds, SearchReport};
pub use step1::{necessary_valency_filter, reproduce_step1, step1_families, Candidate, ShapeKey, Step1Report};
pub use verify::{verify_tables, TableReport, VerifyRecord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Valent,
    OneValent,
    Neither,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Valent => "valent",
            Verdict::OneValent => "1-valent",
            Verdict::Neither => "neither",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ValencyVerdict {
    /// Registry id such as `T1:2`.
    pub pair: String,
    pub indices: String,
    /// Index of the part in the single piece of the entry.
    pub component: usize,
    pub verdict: Verdict,
    /// `N(g) + N(h_i) - dim h`.
    pub necessary_check: i64,
    pub coupled_complexity: usize,
    pub report: ComplexityReport,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProjectionClass {
    Zero,
    OneDimensional,
    Surjective,
}

impl fmt::Display for ProjectionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProjectionClass::Zero => "zero",
            ProjectionClass::OneDimensional => "one-dimensional",
            ProjectionClass::Surjective => "surjective",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    Exact(usize),
    AtLeast(usize),
}

impl Bound {
    pub fn admits(self, c: usize) -> bool {
        match self {
            Bound::Exact(b) => c == b,
            Bound::AtLeast(b) => c >= b,
        }
    }
}

/// Complexity of the coupling of two `sl2` components from pairs of
/// complexity `c1`, `c2` whose stabilizers project as `class1`, `class2`.
pub fn coupling_complexity_bound(c1: usize, c2: usize, class1: ProjectionClass, class2: ProjectionClass) -> Bound {
    use ProjectionClass::*;
    let c = c1 + c2;
    match (class1, class2) {
        (Surjective, OneDimensional | Surjective) | (OneDimensional, Surjective) => Bound::Exact(c),
        (Surjective, Zero) | (Zero, Surjective) | (OneDimensional, OneDimensional) => Bound::Exact(c + 1),
        _ => Bound::AtLeast(c + 2),
    }
}

/// `N` of a list of components.
pub fn n_pos(components: &[Component]) -> usize {
    components.iter().map(|c| c.n_pos()).sum()
}

/// Components of the part, if it is semisimple and nonzero.
pub(crate) fn semisimple_part(spec: &PairSpec, piece: usize, part: usize) -> Result<Option<Vec<Component>>> {
    let p = spec
        .pieces
        .get(piece)
        .and_then(|p| p.parts.get(part))
        .ok_or_else(|| Error::Inadmissible(format!("no part {piece}.{part}")))?;
    let comps = p.components()?;
    if comps.is_empty() || comps.contains(&Component::Center) {
        return Ok(None);
    }
    Ok(Some(comps))
}

fn single_piece_spec(entry: &TableEntry, idx: &Indices) -> Result<PairSpec> {
    let spec = entry.spec(idx)?;
    if spec.pieces.len() != 1 {
        return Err(Error::Inadmissible(format!("{} has more than one simple component", entry.id())));
    }
    Ok(spec)
}

/// `N(g) + N(h_i) - dim h` for part `component` of a one-piece spec.
pub fn necessary_value(spec: &PairSpec, component: usize) -> Result<Option<i64>> {
    let Some(comps) = semisimple_part(spec, 0, component)? else {
        return Ok(None);
    };
    Ok(Some(spec.pieces[0].ambient.n_pos() as i64 + n_pos(&comps) as i64 - spec.h_dim() as i64))
}

/// The elementary coupling of `part`: `g` is extended by a copy of each
/// simple component of the part and the part embeds diagonally.
pub fn elementary_coupling(inst: &Instance, part: usize) -> Result<(LieAlgebraModel, SubspaceBasis)> {
    let hp = inst
        .parts
        .get(part)
        .ok_or_else(|| Error::Inadmissible(format!("no part {part}")))?;
    if hp.components.is_empty() || hp.components.contains(&Component::Center) {
        return Err(Error::Inadmissible(format!("part {} is not semisimple", hp.name)));
    }
    let mut comps = inst.model.components().to_vec();
    let first = comps.len();
    comps.extend(hp.components.iter().copied());
    let model = LieAlgebraModel::standard(&comps)?;
    let n = model.dim();
    let old = inst.model.dim();
    let mut vectors: Vec<Vec<Q>> = Vec::new();
    for (pi, p) in inst.parts.iter().enumerate() {
        for (ci, vs) in p.vectors.iter().enumerate() {
            for (k, v) in vs.iter().enumerate() {
                let mut w = v.clone();
                w.resize(n, Q::from_integer(0.into()));
                if pi == part {
                    w[model.offset(first + ci) + k] = Q::from_integer(1.into());
                }
                vectors.push(w);
            }
        }
    }
    debug_assert_eq!(model.offset(first), old);
    let h = SubspaceBasis::from_vectors(n, vectors);
    if !h.is_subalgebra(&model) {
        return Err(Error::Unsupported(format!(
            "part {} is not given by a Chevalley basis image, so it cannot be coupled",
            hp.name
        )));
    }
    Ok((model, h))
}

/// Complexity by the formula, falling back to the oracle when the
/// stabilizer is not usable.
pub fn complexity_with_fallback(model: &LieAlgebraModel, h: &SubspaceBasis, opts: &Options) -> Result<ComplexityReport> {
    match complexity_formula(model, h, opts) {
        Ok(r) => Ok(r),
        Err(Error::Internal(_)) | Err(Error::Degenerate(_)) => complexity_oracle(model, h, opts),
        Err(e) => Err(e),
    }
}

pub fn component_valency(entry: &TableEntry, component: usize, idx: &Indices, opts: &Options) -> Result<ValencyVerdict> {
    let spec = single_piece_spec(entry, idx)?;
    let value = necessary_value(&spec, component)?
        .ok_or_else(|| Error::Inadmissible(format!("part {component} of {} is not semisimple", entry.id())))?;
    let inst = spec.instantiate()?;
    let (model, h) = elementary_coupling(&inst, component)?;
    let report = complexity_with_fallback(&model, &h, opts)?;
    let verdict = match report.complexity {
        0 => Verdict::Valent,
        1 => Verdict::OneValent,
        _ => Verdict::Neither,
    };
    let bound = match verdict {
        Verdict::Valent => 0,
        Verdict::OneValent => 1,
        Verdict::Neither => i64::MAX,
    };
    if value > bound {
        return Err(Error::Internal(format!(
            "{} part {component}: coupled complexity {} but N(g) + N(h_i) - dim h = {value}",
            entry.id(),
            report.complexity
        )));
    }
    Ok(ValencyVerdict {
        pair: entry.id(),
        indices: idx.to_string(),
        component,
        verdict,
        necessary_check: value,
        coupled_complexity: report.complexity,
        report,
    })
}

/// Ranges of the parts in the adapted basis `Instance::h_vectors`.
pub fn part_ranges(inst: &Instance) -> Vec<Range<usize>> {
    let mut start = 0;
    inst.parts
        .iter()
        .map(|p| {
            let d: usize = p.vectors.iter().map(|v| v.len()).sum();
            start += d;
            start - d..start
        })
        .collect()
}

/// Class of the projection of `s` on the `sl2` part `part` of `inst`.
pub fn projection_class_of(inst: &Instance, part: usize, opts: &Options) -> Result<ProjectionClass> {
    let hp = inst
        .parts
        .get(part)
        .ok_or_else(|| Error::Inadmissible(format!("no part {part}")))?;
    if hp.components.len() != 1 || hp.components[0].simple().map(|t| t.canonical()) != Some(SimpleType::a(1)) {
        return Err(Error::Inadmissible(format!("part {} is not sl2", hp.name)));
    }
    let ranges = part_ranges(inst);
    let s = isotropy_ssgp_adapted(&inst.model, &inst.h_vectors(), opts, &ranges[part..=part])?;
    match s.coefficient_dims[0] {
        0 => Ok(ProjectionClass::Zero),
        1 => Ok(ProjectionClass::OneDimensional),
        3 => Ok(ProjectionClass::Surjective),
        d => Err(Error::Internal(format!("projection of the stabilizer on sl2 has dimension {d}"))),
    }
}

pub fn sl2_projection_class(
    entry: &TableEntry,
    sl2_component: usize,
    idx: &Indices,
    opts: &Options,
) -> Result<ProjectionClass> {
    let inst = entry.spec(idx)?.instantiate()?;
    let part = inst
        .parts
        .iter()
        .position(|p| p.slots.contains(&(0, sl2_component)))
        .ok_or_else(|| Error::Inadmissible(format!("no part {sl2_component}")))?;
    projection_class_of(&inst, part, opts)
}

/// The non-elementary coupling along `sp4` of Table 1 item 16 at
/// `(n, m) = (n1, 2)` and Table 3 item 3 at `(n, m) = (n2, 2)`: the `sp4`
/// part of the first is identified with the `sp4` part of the second piece
/// of the other.
pub fn joint_sp4_coupling(reg: &Registry, n1: i64, n2: i64) -> Result<PairSpec> {
    let get = |t, item| reg.get(t, item).ok_or_else(|| Error::Inadmissible(format!("no {t} item {item}")));
    let a = get(Table::T1, 16)?.spec(&Indices::default().with('n', n1).with('m', 2))?;
    let b = get(Table::T3, 3)?.spec(&Indices::default().with('n', n2).with('m', 2))?;
    let j = a.pieces[0].parts.iter().position(|p| p.0 == "sp4").ok_or_else(|| Error::Inadmissible("no sp4 part".into()))?;
    let k = b.pieces[1].parts.iter().position(|p| p.0 == "sp4").ok_or_else(|| Error::Inadmissible("no sp4 part".into()))?;
    a.couple(&b, (0, j), (1, k))
}

#[cfg(test)]
mod tests;
