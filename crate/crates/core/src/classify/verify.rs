//! Verification of registry rows: complexity by both engines, the rank
//! column and the generic stabilizer column, per admissible index tuple.

use crate::complexity::{complexity_formula, complexity_oracle, ComplexityReport, Options};
use crate::pairs::expr::Indices;
use crate::pairs::registry::{Registry, Table, TableEntry};
use rayon::prelude::*;
use serde::Serialize;

/// Index tuples to check for each row.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Selection {
    /// Every admissible tuple with all indices at most the bound.
    Bound(i64),
    /// The given number of smallest admissible tuples.
    Smallest(usize),
}

impl Selection {
    pub fn tuples(self, e: &TableEntry) -> Vec<Indices> {
        match self {
            Selection::Bound(b) => e.index_tuples(b),
            Selection::Smallest(n) => e.smallest_tuples(n),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyRecord {
    pub pair: String,
    pub indices: String,
    pub expected_complexity: usize,
    pub expected_rank: Option<i64>,
    /// `(dim, rank)` of the stabilizer column.
    pub expected_ssgp: Option<(usize, usize)>,
    pub oracle: Option<ComplexityReport>,
    pub formula: Option<ComplexityReport>,
    /// `oracle+formula` or `formula`.
    pub evidence: &'static str,
    pub mismatches: Vec<String>,
    pub error: Option<String>,
}

impl VerifyRecord {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.error.is_none()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TableReport {
    pub records: Vec<VerifyRecord>,
}

impl TableReport {
    pub fn failures(&self) -> impl Iterator<Item = &VerifyRecord> {
        self.records.iter().filter(|r| !r.passed())
    }

    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }
}

pub fn verify_entry(e: &TableEntry, idx: &Indices, opts: &Options) -> VerifyRecord {
    let mut rec = VerifyRecord {
        pair: e.id(),
        indices: idx.to_string(),
        expected_complexity: e.expected_complexity as usize,
        expected_rank: None,
        expected_ssgp: None,
        oracle: None,
        formula: None,
        evidence: if e.oracle_capable { "oracle+formula" } else { "formula" },
        mismatches: Vec::new(),
        error: None,
    };
    let mut run = || -> crate::error::Result<()> {
        rec.expected_rank = e.expected_rank_at(idx)?;
        rec.expected_ssgp = e.expected_ssgp_dims(idx)?;
        let inst = e.spec(idx)?.instantiate()?;
        let (o, f) = if e.oracle_capable {
            let (o, f) = rayon::join(
                || complexity_oracle(&inst.model, &inst.h, opts),
                || complexity_formula(&inst.model, &inst.h, opts),
            );
            (Some(o?), f?)
        } else {
            (None, complexity_formula(&inst.model, &inst.h, opts)?)
        };
        let c = rec.expected_complexity;
        if let Some(o) = &o {
            if o.complexity != c {
                rec.mismatches.push(format!("oracle complexity {} != {c}", o.complexity));
            }
        }
        if f.complexity != c {
            rec.mismatches.push(format!("formula complexity {} != {c}", f.complexity));
        }
        if let Some(r) = rec.expected_rank {
            if f.rank.map(|x| x as i64) != Some(r) {
                rec.mismatches.push(format!("rank {:?} != {r}", f.rank));
            }
        }
        if let Some((d, rk)) = rec.expected_ssgp {
            if (f.ssgp_dim, f.ssgp_rank) != (Some(d), Some(rk)) {
                rec.mismatches.push(format!(
                    "stabilizer (dim, rank) ({:?}, {:?}) != ({d}, {rk})",
                    f.ssgp_dim, f.ssgp_rank
                ));
            }
        }
        rec.oracle = o;
        rec.formula = Some(f);
        Ok(())
    };
    if let Err(err) = run() {
        rec.error = Some(err.to_string());
    }
    rec
}

/// Check every row of `tables` at the selected tuples. Records come in
/// registry order whatever the schedule.
pub fn verify_tables(reg: &Registry, tables: &[Table], sel: Selection, opts: &Options) -> TableReport {
    let jobs: Vec<(&TableEntry, Indices)> = tables
        .iter()
        .flat_map(|&t| reg.table(t))
        .flat_map(|e| sel.tuples(e).into_iter().map(move |i| (e, i)))
        .collect();
    let records = jobs.par_iter().map(|(e, i)| verify_entry(e, i, opts)).collect();
    TableReport { records }
}
