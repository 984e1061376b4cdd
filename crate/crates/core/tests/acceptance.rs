//! Acceptance run: one PASS/FAIL line per criterion, then a nonzero exit
//! if any criterion failed. Complexities are exact integers, so every
//! comparison below has zero tolerance; only the runtime budgets are soft
//! numbers, and they are pinned here.

use homspace::classify::search::{enumerate_complexity_one, SearchBounds};
use homspace::classify::verify::Selection;
use homspace::classify::{
    component_valency, coupling_complexity_bound, projection_class_of, reproduce_step1, verify_tables,
    Bound, ProjectionClass, TableReport, Verdict,
};
use homspace::complexity::{complexity_oracle, Options};
use homspace::liealg::{Component, LieAlgebraModel};
use homspace::pairs::expr::Indices;
use homspace::pairs::registry::{Registry, Table};
use homspace::pairs::{PairSpec, Slot};
use homspace::rng::SplitMix64;
use homspace::rootsys::SimpleType;
use std::process::ExitCode;
use std::time::{Duration, Instant};

/// Complexities and dimensions are compared exactly.
const TOLERANCE: usize = 0;
const BUDGET_T1: Duration = Duration::from_secs(5 * 60);
const BUDGET_T2: Duration = Duration::from_secs(5 * 60);
const BUDGET_T34: Duration = Duration::from_secs(15 * 60);
const BUDGET_SEARCH: Duration = Duration::from_secs(30 * 60);
const STEP1_BOUND: i64 = 6;
const VERIFY_BOUND: i64 = 3;
const SEARCH_BOUND: i64 = 2;
const RANDOM_UNIONS: usize = 20;
const STABILITY_SEEDS: [u64; 5] = [1, 2, 3, 5, 8];
const JACOBI_MAX_DIM: usize = 30;

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(failures: &[String], summary: String) -> Outcome {
        let detail = if failures.is_empty() {
            summary
        } else {
            format!("{summary}; failures: {}", failures.join("; "))
        };
        Outcome { pass: failures.is_empty(), detail }
    }
}

fn idx(vals: &[(char, i64)]) -> Indices {
    vals.iter().fold(Indices::default(), |i, &(c, v)| i.with(c, v))
}

fn within(d: Duration, budget: Duration, failures: &mut Vec<String>) {
    if d > budget {
        failures.push(format!("runtime {d:.1?} over budget {budget:?}"));
    }
}

/// Exact agreement of both engines with the table value.
fn table_outcome(rep: &TableReport, expected: usize, elapsed: Duration, budget: Duration) -> Outcome {
    let mut failures = Vec::new();
    let mut both = 0;
    for r in &rep.records {
        let tag = format!("{} ({})", r.pair, r.indices);
        if let Some(e) = &r.error {
            failures.push(format!("{tag}: {e}"));
            continue;
        }
        for m in &r.mismatches {
            failures.push(format!("{tag}: {m}"));
        }
        for c in r.oracle.iter().chain(&r.formula) {
            if c.complexity.abs_diff(expected) > TOLERANCE {
                failures.push(format!("{tag}: {} gives c = {}", c.method, c.complexity));
            }
        }
        if r.oracle.is_some() && r.formula.is_some() {
            both += 1;
        } else if r.formula.is_none() {
            failures.push(format!("{tag}: no formula value"));
        }
    }
    within(elapsed, budget, &mut failures);
    Outcome::new(
        &failures,
        format!("{} instantiations, {both} by both engines, {elapsed:.1?}", rep.records.len()),
    )
}

fn criterion_rank_columns(reg: &Registry) -> Outcome {
    let start = Instant::now();
    let rep = verify_tables(reg, &[Table::T3, Table::T4], Selection::Bound(VERIFY_BOUND), &Options::default());
    let elapsed = start.elapsed();
    let mut failures: Vec<String> = rep
        .failures()
        .map(|r| format!("{} ({}): {}", r.pair, r.indices, r.error.clone().unwrap_or_else(|| r.mismatches.join(", "))))
        .collect();
    let unranked = rep.records.iter().filter(|r| r.expected_rank.is_none()).count();
    if unranked > 0 {
        failures.push(format!("{unranked} instantiations without a rank expression"));
    }
    within(elapsed, BUDGET_T34, &mut failures);
    Outcome::new(&failures, format!("{} instantiations, {elapsed:.1?}", rep.records.len()))
}

/// Valent and 1-valent components as published: `(table, item, part, indices, verdict)`.
fn published_valency() -> Vec<(Table, u32, usize, Indices, Verdict)> {
    use Table::{T1, T2};
    use Verdict::{OneValent as One, Valent};
    vec![
        (T1, 1, 0, idx(&[('n', 3)]), One),
        (T1, 2, 1, idx(&[('n', 1), ('m', 2)]), Valent),
        (T1, 2, 1, idx(&[('n', 3), ('m', 2)]), Valent),
        (T1, 2, 0, idx(&[('n', 3), ('m', 1)]), Valent),
        (T1, 2, 0, idx(&[('n', 4), ('m', 1)]), Valent),
        (T1, 3, 1, idx(&[('n', 3), ('m', 2)]), Valent),
        (T1, 3, 1, idx(&[('n', 4), ('m', 2)]), Valent),
        (T1, 2, 1, idx(&[('n', 2), ('m', 3)]), One),
        (T1, 2, 1, idx(&[('n', 4), ('m', 3)]), One),
        (T1, 3, 1, idx(&[('n', 4), ('m', 3)]), One),
        (T1, 3, 0, idx(&[('n', 2), ('m', 1)]), One),
        (T1, 3, 0, idx(&[('n', 3), ('m', 1)]), One),
        (T2, 1, 0, idx(&[('n', 2)]), One),
        (T1, 10, 0, idx(&[('n', 4), ('m', 1)]), Valent),
        (T1, 10, 0, idx(&[('n', 5), ('m', 1)]), Valent),
        (T1, 10, 0, idx(&[('n', 3), ('m', 2)]), One),
        (T1, 10, 0, idx(&[('n', 3), ('m', 3)]), One),
        (T1, 16, 1, idx(&[('n', 1), ('m', 2)]), Valent),
        (T1, 16, 1, idx(&[('n', 2), ('m', 2)]), Valent),
        (T1, 16, 1, idx(&[('n', 1), ('m', 1)]), Valent),
        (T1, 16, 1, idx(&[('n', 2), ('m', 1)]), Valent),
        (T1, 16, 1, idx(&[('n', 1), ('m', 3)]), One),
        (T1, 12, 0, Indices::default(), One),
        (T1, 17, 0, idx(&[('n', 2)]), One),
        (T1, 18, 0, Indices::default(), One),
        (T1, 19, 0, Indices::default(), One),
        (T1, 21, 1, Indices::default(), One),
        (T1, 26, 1, Indices::default(), One),
        (T1, 29, 1, Indices::default(), One),
        (T1, 31, 0, Indices::default(), One),
        (T2, 13, 1, idx(&[('n', 3)]), One),
        (T2, 13, 1, idx(&[('n', 4)]), One),
    ]
}

fn criterion_step1(reg: &Registry) -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    match reproduce_step1(reg, STEP1_BOUND) {
        Ok(rep) => {
            for m in &rep.missing {
                failures.push(format!("listed {} ({}) part {} fails the filter", m.pair, m.indices, m.component));
            }
            for e in &rep.extra {
                failures.push(format!("unlisted candidate {} ({}) {}", e.pair, e.indices, e.key));
            }
        }
        Err(e) => failures.push(format!("step 1: {e}")),
    }
    let list = published_valency();
    let opts = Options::default();
    for (t, item, part, ix, want) in &list {
        let entry = reg.get(*t, *item).expect("registry row");
        match component_valency(entry, *part, ix, &opts) {
            Ok(v) if v.verdict == *want => {}
            Ok(v) => failures.push(format!("{} ({ix}) part {part}: {} instead of {want}", entry.id(), v.verdict)),
            Err(e) => failures.push(format!("{} ({ix}) part {part}: {e}", entry.id())),
        }
    }
    Outcome::new(
        &failures,
        format!("candidate set at bound {STEP1_BOUND}, {} valency assignments, {:.1?}", list.len(), start.elapsed()),
    )
}

/// An `sl2` slot of a registry row with its published stabilizer projection.
struct Sl2Slot {
    table: Table,
    item: u32,
    idx: Indices,
    part: usize,
    class: ProjectionClass,
}

fn sl2(table: Table, item: u32, idx: Indices, part: usize, class: ProjectionClass) -> Sl2Slot {
    Sl2Slot { table, item, idx, part, class }
}

fn criterion_remark1(reg: &Registry) -> Outcome {
    use ProjectionClass::*;
    use Table::{T1, T2};
    let opts = Options::default();
    // sp6 > sp4 + sp2: the surjective case at n = 2.
    let surj = sl2(T1, 16, idx(&[('n', 2), ('m', 1)]), 1, Surjective);
    let surj_small = sl2(T1, 16, idx(&[('n', 1), ('m', 1)]), 1, Surjective);
    let levi_c = sl2(T1, 2, idx(&[('n', 3), ('m', 2)]), 1, OneDimensional);
    let levi = sl2(T1, 3, idx(&[('n', 3), ('m', 2)]), 1, OneDimensional);
    let g2 = sl2(T1, 19, Indices::default(), 0, Zero);
    let so3 = sl2(T1, 1, idx(&[('n', 3)]), 0, Zero);
    let sp_two = sl2(T2, 13, idx(&[('n', 3)]), 1, OneDimensional);
    let principal = sl2(T2, 14, Indices::default(), 0, Zero);
    let cases: Vec<(&Sl2Slot, &Sl2Slot)> = vec![
        (&surj, &surj_small),
        (&surj, &levi_c),
        (&surj, &levi),
        (&surj, &g2),
        (&surj, &so3),
        (&surj, &sp_two),
        (&surj_small, &principal),
        (&levi_c, &levi),
        (&levi_c, &g2),
        (&g2, &so3),
        (&sp_two, &g2),
    ];
    let mut failures = Vec::new();
    let mut branches = [0usize; 3];
    let single = |s: &Sl2Slot| -> Result<(PairSpec, usize), String> {
        let e = reg.get(s.table, s.item).ok_or("missing row")?;
        let spec = e.spec(&s.idx).map_err(|x| x.to_string())?;
        let inst = spec.instantiate().map_err(|x| x.to_string())?;
        let class = projection_class_of(&inst, s.part, &opts).map_err(|x| x.to_string())?;
        if class != s.class {
            return Err(format!("{} ({}) projects as {class}, published {}", e.id(), s.idx, s.class));
        }
        let c = complexity_oracle(&inst.model, &inst.h, &opts).map_err(|x| x.to_string())?.complexity;
        Ok((spec, c))
    };
    for (a, b) in &cases {
        let tag = format!("{}:{} ({}) ~ {}:{} ({})", a.table, a.item, a.idx, b.table, b.item, b.idx);
        let run = || -> Result<(Bound, usize), String> {
            let (sa, ca) = single(a)?;
            let (sb, cb) = single(b)?;
            let bound = coupling_complexity_bound(ca, cb, a.class, b.class);
            let (i, j): (Slot, Slot) = ((0, a.part), (0, b.part));
            let coupled = sa.couple(&sb, i, j).map_err(|x| x.to_string())?;
            let inst = coupled.instantiate().map_err(|x| x.to_string())?;
            let c = complexity_oracle(&inst.model, &inst.h, &opts).map_err(|x| x.to_string())?.complexity;
            Ok((bound, c))
        };
        match run() {
            Ok((bound, c)) => {
                branches[match bound {
                    Bound::Exact(b) if b == 0 => 0,
                    Bound::Exact(_) => 1,
                    Bound::AtLeast(_) => 2,
                }] += 1;
                if !bound.admits(c) {
                    failures.push(format!("{tag}: c = {c}, bound {bound:?}"));
                }
            }
            Err(e) => failures.push(format!("{tag}: {e}")),
        }
    }
    if branches.iter().any(|&n| n == 0) {
        failures.push(format!("branches not all covered: {branches:?}"));
    }
    Outcome::new(&failures, format!("{} couplings, branch counts {branches:?}", cases.len()))
}

fn criterion_search(reg: &Registry) -> Outcome {
    let start = Instant::now();
    let rep = match enumerate_complexity_one(reg, SearchBounds::new(SEARCH_BOUND), &Options::default()) {
        Ok(r) => r,
        Err(e) => return Outcome::new(&[e.to_string()], "search".into()),
    };
    let elapsed = start.elapsed();
    let mut failures = Vec::new();
    failures.extend(rep.missing.iter().map(|m| format!("missing {m}")));
    failures.extend(rep.extra().map(|f| format!("extra {}", f.spec)));
    failures.extend(rep.frontier.iter().map(|f| format!("unfinished {f}")));
    failures.extend(
        rep.found
            .iter()
            .filter(|f| !f.oracle_agrees())
            .map(|f| format!("engines disagree on {}", f.spec)),
    );
    within(elapsed, BUDGET_SEARCH, &mut failures);
    Outcome::new(
        &failures,
        format!(
            "{} found, {} within bounds, {} states, {elapsed:.1?}",
            rep.found.len(),
            rep.within_bounds().count(),
            rep.states
        ),
    )
}

/// Nested pairs with a shared ambient: `(larger h, its indices, smaller h, its indices)`.
fn nested_pairs() -> Vec<((Table, u32), Indices, (Table, u32), Indices)> {
    use Table::{T1, T2};
    vec![
        ((T1, 6), idx(&[('n', 2)]), (T1, 5), idx(&[('n', 2)])),
        ((T1, 25), Indices::default(), (T1, 24), Indices::default()),
        ((T1, 17), idx(&[('n', 3)]), (T2, 12), idx(&[('n', 3)])),
        ((T1, 14), Indices::default(), (T2, 10), Indices::default()),
        ((T1, 2), idx(&[('n', 3), ('m', 1)]), (T1, 3), idx(&[('n', 3), ('m', 1)])),
        ((T1, 10), idx(&[('n', 4), ('m', 2)]), (T2, 5), idx(&[('n', 6)])),
    ]
}

fn oracle_of(spec: &PairSpec, opts: &Options) -> Result<usize, String> {
    let inst = spec.instantiate().map_err(|e| e.to_string())?;
    Ok(complexity_oracle(&inst.model, &inst.h, opts).map_err(|e| e.to_string())?.complexity)
}

fn criterion_properties(reg: &Registry, t1: &TableReport, t2: &TableReport) -> Outcome {
    let opts = Options::default();
    let mut failures = Vec::new();

    // Oracle and formula agree wherever both ran.
    let mut agreements = 0;
    for r in t1.records.iter().chain(&t2.records) {
        if let (Some(o), Some(f)) = (&r.oracle, &r.formula) {
            agreements += 1;
            if o.complexity != f.complexity {
                failures.push(format!("{} ({}): oracle {} formula {}", r.pair, r.indices, o.complexity, f.complexity));
            }
        }
    }

    // Monotonicity for nested subalgebras.
    for ((ta, ia), ixa, (tb, ib), ixb) in nested_pairs() {
        let big = reg.get(ta, ia).unwrap().spec(&ixa).map_err(|e| e.to_string());
        let small = reg.get(tb, ib).unwrap().spec(&ixb).map_err(|e| e.to_string());
        match (big.and_then(|s| oracle_of(&s, &opts)), small.and_then(|s| oracle_of(&s, &opts))) {
            (Ok(cf), Ok(ch)) if cf <= ch => {}
            (Ok(cf), Ok(ch)) => failures.push(format!("{ta}:{ia} ({ixa}) c = {cf} > {tb}:{ib} ({ixb}) c = {ch}")),
            (Err(e), _) | (_, Err(e)) => failures.push(format!("{ta}:{ia} vs {tb}:{ib}: {e}")),
        }
    }

    // Additivity over random disjoint unions of small rows.
    let small: Vec<PairSpec> = reg
        .table(Table::T1)
        .chain(reg.table(Table::T2))
        .filter_map(|e| e.spec(e.smallest_tuples(1).first()?).ok())
        .filter(|s| s.g_dim() <= 36)
        .collect();
    let mut rng = SplitMix64::new(opts.seed);
    for _ in 0..RANDOM_UNIONS {
        let k = 2 + rng.below(2);
        let parts: Vec<&PairSpec> = (0..k).map(|_| &small[rng.below(small.len())]).collect();
        let union = parts[1..].iter().fold(parts[0].clone(), |u, p| u.union(p));
        let whole = oracle_of(&union, &opts);
        let sum: Result<usize, String> = union.decompose().iter().map(|p| oracle_of(p, &opts)).sum();
        match (whole, sum) {
            (Ok(w), Ok(s)) if w == s && union.decompose().len() == k => {}
            (Ok(w), Ok(s)) => failures.push(format!("union of {k}: c = {w}, sum {s}")),
            (Err(e), _) | (_, Err(e)) => failures.push(format!("union: {e}")),
        }
    }

    // Jacobi on every model of dimension at most 30.
    let mut models = 0;
    let types: Vec<SimpleType> = ["A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2"]
        .iter()
        .map(|s| SimpleType::parse(s).unwrap())
        .collect();
    let mut comps: Vec<Vec<Component>> = types.iter().map(|&t| vec![Component::Simple(t)]).collect();
    comps.push(vec![Component::Simple(types[0]), Component::Simple(types[0]), Component::Center]);
    comps.push(vec![Component::Simple(types[1]), Component::Simple(types[8])]);
    for c in comps {
        let m = LieAlgebraModel::standard(&c).unwrap();
        if m.dim() > JACOBI_MAX_DIM {
            continue;
        }
        models += 1;
        if !m.check_jacobi(None) || !m.check_antisymmetry() {
            failures.push(format!("bracket of {} fails Jacobi", m.name()));
        }
    }

    // Seed stability.
    let stable_rows: [(Table, u32, Indices); 4] = [
        (Table::T1, 19, Indices::default()),
        (Table::T2, 14, Indices::default()),
        (Table::T1, 16, idx(&[('n', 2), ('m', 1)])),
        (Table::T2, 13, idx(&[('n', 3)])),
    ];
    for (t, item, ix) in &stable_rows {
        let spec = reg.get(*t, *item).unwrap().spec(ix).unwrap();
        let values: Vec<Result<usize, String>> =
            STABILITY_SEEDS.iter().map(|&s| oracle_of(&spec, &Options::with_seed(s))).collect();
        if values.windows(2).any(|w| w[0] != w[1]) || values[0].is_err() {
            failures.push(format!("{t}:{item} ({ix}) varies with the seed: {values:?}"));
        }
    }

    Outcome::new(
        &failures,
        format!(
            "{agreements} engine agreements, {} nested pairs, {RANDOM_UNIONS} unions, {models} Jacobi models, {} seeds",
            nested_pairs().len(),
            STABILITY_SEEDS.len()
        ),
    )
}

fn main() -> ExitCode {
    let reg = Registry::builtin().expect("builtin registry");
    let opts = Options::default();
    let mut results = Vec::new();
    let mut report = |n: usize, name: &str, o: Outcome| {
        println!("criterion {n} {}: {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        results.push(o.pass);
    };

    let start = Instant::now();
    let t1 = verify_tables(&reg, &[Table::T1], Selection::Smallest(3), &opts);
    report(1, "Table 1 is spherical", table_outcome(&t1, 0, start.elapsed(), BUDGET_T1));
    let start = Instant::now();
    let t2 = verify_tables(&reg, &[Table::T2], Selection::Smallest(3), &opts);
    report(2, "Table 2 has complexity one", table_outcome(&t2, 1, start.elapsed(), BUDGET_T2));
    report(3, "Tables 3 and 4 rank and stabilizer columns", criterion_rank_columns(&reg));
    report(4, "candidate list and valencies", criterion_step1(&reg));
    report(5, "sl2 coupling trichotomy", criterion_remark1(&reg));
    report(6, "bounded search reproduces Table 4", criterion_search(&reg));
    report(7, "property suite", criterion_properties(&reg, &t1, &t2));

    let failed = results.iter().filter(|&&p| !p).count();
    println!("acceptance: {} of {} criteria pass", results.len() - failed, results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
