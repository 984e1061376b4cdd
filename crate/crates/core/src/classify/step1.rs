//! Candidates for valency among the components of pairs with simple `g`:
//! parts with `N(g) + N(h_i) - dim h <= 1`, swept over bounded indices and
//! compared, up to shape, with the published list of candidate families.

use super::{necessary_value, semisimple_part};
use crate::error::Result;
use crate::liealg::Component;
use crate::pairs::expr::Indices;
use crate::pairs::registry::{Registry, Table, TableEntry};
use crate::pairs::PairSpec;
use crate::rootsys::SimpleType;
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt;

/// Isomorphism data of a candidate: the ambient, the components of `h` and
/// those of the candidate part, all in canonical types. The embedding is
/// not recorded, so non-conjugate subalgebras of the same shape collide.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShapeKey {
    pub ambient: SimpleType,
    pub h: Vec<Component>,
    pub part: Vec<Component>,
}

fn canonical(c: &Component) -> Component {
    match c {
        Component::Simple(t) => Component::Simple(t.canonical()),
        Component::Center => Component::Center,
    }
}

fn join(c: &[Component]) -> String {
    if c.is_empty() {
        return "0".into();
    }
    c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("+")
}

impl ShapeKey {
    pub fn of(spec: &PairSpec, part: usize) -> Result<ShapeKey> {
        let mut h = Vec::new();
        for p in &spec.pieces[0].parts {
            h.extend(p.components()?.iter().map(canonical));
        }
        h.sort();
        let mut part: Vec<Component> = spec.pieces[0].parts[part].components()?.iter().map(canonical).collect();
        part.sort();
        Ok(ShapeKey { ambient: spec.pieces[0].ambient.canonical(), h, part })
    }
}

impl fmt::Display for ShapeKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {} : {})", self.ambient, join(&self.h), join(&self.part))
    }
}

impl Serialize for ShapeKey {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Candidate {
    pub pair: String,
    pub indices: String,
    #[serde(skip)]
    pub index_values: Indices,
    pub component: usize,
    /// `N(g) + N(h_i) - dim h`.
    pub value: i64,
    pub key: ShapeKey,
}

/// All semisimple parts of one-piece entries with `N(g) + N(h_i) - dim h <= 1`,
/// over the admissible index tuples with every index at most `bound`.
pub fn necessary_valency_filter<'a>(
    entries: impl IntoIterator<Item = &'a TableEntry>,
    bound: i64,
) -> Result<Vec<Candidate>> {
    let mut out = Vec::new();
    for e in entries {
        for idx in e.index_tuples(bound) {
            let spec = e.spec(&idx)?;
            if spec.pieces.len() != 1 {
                continue;
            }
            for j in 0..spec.pieces[0].parts.len() {
                if let Some(value) = necessary_value(&spec, j)? {
                    if value <= 1 {
                        out.push(Candidate {
                            pair: e.id(),
                            indices: idx.to_string(),
                            index_values: idx.clone(),
                            component: j,
                            value,
                            key: ShapeKey::of(&spec, j)?,
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Which instantiations of a published family are listed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Listed {
    /// Exactly these indices.
    At(&'static [(char, i64)]),
    /// Every admissible tuple.
    All,
    /// Unspecified conditions on the indices, to be derived by the sweep.
    Conditional,
}

/// A published candidate family: registry rows with the part underlined.
#[derive(Clone, Debug)]
pub struct Family {
    pub name: &'static str,
    pub members: &'static [(Table, u32, usize)],
    pub listed: Listed,
}

/// The published candidate list. The family of `sl_m + sl_n` in `sl_{n+m}`
/// includes `n = m`, which the registry keeps as a pair of complexity one.
pub fn step1_families() -> Vec<Family> {
    use Listed::*;
    use Table::{T1, T2};
    vec![
        Family { name: "(sl3, so3)", members: &[(T1, 1, 0)], listed: At(&[('n', 3)]) },
        Family { name: "(sl_{n+m}, sl_m + sl_n + c)", members: &[(T1, 2, 1), (T1, 2, 0)], listed: Conditional },
        Family { name: "(sl_{n+m}, sl_m + sl_n)", members: &[(T1, 3, 1), (T1, 3, 0), (T2, 1, 1), (T2, 1, 0)], listed: Conditional },
        Family { name: "(so_{n+m}, so_m + so_n)", members: &[(T1, 10, 1), (T1, 10, 0)], listed: Conditional },
        Family { name: "(so7, G2)", members: &[(T1, 12, 0)], listed: All },
        Family { name: "(sp4, sl2 + c)", members: &[(T1, 17, 0)], listed: At(&[('n', 2)]) },
        Family { name: "(sp_{2(n+m)}, sp_2m + sp_2n)", members: &[(T1, 16, 1), (T1, 16, 0)], listed: Conditional },
        Family { name: "(G2, sl3)", members: &[(T1, 18, 0)], listed: All },
        Family { name: "(G2, sl2 + sl2)", members: &[(T1, 19, 0)], listed: All },
        Family { name: "(F4, sl2 + sp6)", members: &[(T1, 21, 1)], listed: All },
        Family { name: "(E6, sl2 + sl6)", members: &[(T1, 26, 1)], listed: All },
        Family { name: "(E7, sl2 + so12)", members: &[(T1, 29, 1)], listed: All },
        Family { name: "(E8, sl2 + E7)", members: &[(T1, 31, 0)], listed: All },
        Family { name: "(sp_2n, sl2 + sl2 + sp_{2n-4})", members: &[(T2, 13, 1)], listed: All },
    ]
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyCondition {
    pub pair: String,
    pub indices: String,
    pub component: usize,
    pub value: i64,
    pub candidate: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyResult {
    pub name: String,
    pub conditional: bool,
    /// Every swept instantiation with its value; for conditional families
    /// this is the derived condition.
    pub conditions: Vec<FamilyCondition>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Step1Report {
    pub bound: i64,
    pub candidates: Vec<Candidate>,
    pub families: Vec<FamilyResult>,
    /// Listed instantiations that fail the necessary condition.
    pub missing: Vec<FamilyCondition>,
    /// Candidates whose shape is not that of a listed instantiation.
    pub extra: Vec<Candidate>,
}

impl Step1Report {
    pub fn exact(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }
}

fn matches_at(idx: &Indices, at: &[(char, i64)]) -> bool {
    at.iter().all(|&(c, v)| idx.get(c) == Some(v))
}

/// Sweep T1 and T2 with indices up to `bound` and compare with the families.
pub fn reproduce_step1(reg: &Registry, bound: i64) -> Result<Step1Report> {
    let entries: Vec<&TableEntry> = reg.table(Table::T1).chain(reg.table(Table::T2)).collect();
    let candidates = necessary_valency_filter(entries, bound)?;
    let mut listed_keys = BTreeSet::new();
    let mut families = Vec::new();
    let mut missing = Vec::new();
    for fam in step1_families() {
        let mut conditions = Vec::new();
        for &(t, item, j) in fam.members {
            let Some(e) = reg.get(t, item) else { continue };
            for idx in e.index_tuples(bound) {
                if let Listed::At(at) = fam.listed {
                    if !matches_at(&idx, at) {
                        continue;
                    }
                }
                let spec = e.spec(&idx)?;
                if semisimple_part(&spec, 0, j)?.is_none() {
                    continue;
                }
                let value = necessary_value(&spec, j)?.unwrap_or(i64::MAX);
                let cond = FamilyCondition {
                    pair: e.id(),
                    indices: idx.to_string(),
                    component: j,
                    value,
                    candidate: value <= 1,
                };
                if cond.candidate {
                    listed_keys.insert(ShapeKey::of(&spec, j)?);
                } else if fam.listed != Listed::Conditional {
                    missing.push(cond.clone());
                }
                conditions.push(cond);
            }
        }
        families.push(FamilyResult {
            name: fam.name.to_string(),
            conditional: fam.listed == Listed::Conditional,
            conditions,
        });
    }
    let extra = candidates.iter().filter(|c| !listed_keys.contains(&c.key)).cloned().collect();
    Ok(Step1Report { bound, candidates, families, missing, extra })
}
