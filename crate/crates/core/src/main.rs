//! Command-line front end.
//!
//! Exit status: 0 when everything verified, 1 on a mismatch, 2 on a usage
//! or input error, 3 on an internal-consistency error.

use clap::{Parser, Subcommand, ValueEnum};
use homspace::classify::{enumerate_complexity_one, reproduce_step1, verify_tables, SearchBounds};
use homspace::classify::verify::Selection;
use homspace::complexity::{complexity_formula, complexity_oracle, isotropy_ssgp, ComplexityReport, Options};
use homspace::pairs::parse::parse_pair_spec;
use homspace::pairs::registry::{Registry, Table};
use homspace::pairs::PairSpec;
use homspace::Error;
use serde::Serialize;
use serde_json::{json, Value};
use std::io::Write;
use std::process::ExitCode;

/// Version of the json-lines and csv record layouts.
const SCHEMA: u32 = 1;

#[derive(Parser)]
#[command(name = "homspace", version, about = "Complexity and rank of homogeneous spaces G/H")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Seed of all randomized trials.
    #[arg(long, global = true, default_value_t = Options::default().seed)]
    seed: u64,
    /// Number of randomized trials.
    #[arg(long, global = true, default_value_t = Options::default().trials)]
    trials: usize,
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,
    /// Worker threads; all cores when absent.
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    JsonLines,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Oracle,
    Formula,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Stage {
    Step1,
    Search,
}

#[derive(Subcommand)]
enum Command {
    /// Complexity and rank of one pair.
    Complexity {
        /// Registry reference such as `T4:8[n=1,m=2]`, a shorthand such as
        /// `sl3|h=so3`, or an inline spec.
        #[arg(long)]
        pair: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
    },
    /// Generic stabilizer of the isotropy representation of one pair.
    Ssgp {
        #[arg(long)]
        pair: String,
    },
    /// Check the complexity, rank and stabilizer columns of registry rows.
    VerifyTables {
        /// Tables to check; Tables 3 and 4 when absent.
        #[arg(long = "table")]
        tables: Vec<String>,
        /// Every index at most this value.
        #[arg(long, default_value_t = 4)]
        bounds: i64,
        /// Check this many smallest tuples per row instead of a bound.
        #[arg(long)]
        smallest: Option<usize>,
    },
    /// Valency candidates or the enumeration of complexity-one couplings.
    Classify {
        #[arg(long, value_enum, default_value_t = Stage::Search)]
        stage: Stage,
        #[arg(long, default_value_t = 4)]
        bounds: i64,
        /// Largest number of simple components in the search.
        #[arg(long, default_value_t = 6)]
        max_pieces: usize,
    },
    /// Load the registry, check the row counts and instantiate every row.
    RegistryCheck,
}

enum Failure {
    Mismatch,
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) | Error::Degenerate(_) => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

struct Emitter {
    output: Output,
    csv: Option<csv::Writer<std::io::Stdout>>,
}

impl Emitter {
    fn new(output: Output, header: &[&str]) -> Self {
        let csv = (output == Output::Csv).then(|| {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            let mut h = vec!["schema"];
            h.extend_from_slice(header);
            w.write_record(&h).expect("write to stdout");
            w
        });
        Emitter { output, csv }
    }

    /// One record: `text` for humans, `value` for json-lines, `row` for csv.
    fn record(&mut self, text: &str, value: Value, row: &[String]) {
        match self.output {
            Output::Text => println!("{text}"),
            Output::JsonLines => {
                let mut v = json!({ "schema": SCHEMA });
                if let (Value::Object(m), Value::Object(extra)) = (&mut v, value) {
                    m.extend(extra);
                }
                println!("{v}");
            }
            Output::Csv => {
                let w = self.csv.as_mut().expect("csv writer");
                let mut r = vec![SCHEMA.to_string()];
                r.extend_from_slice(row);
                w.write_record(&r).expect("write to stdout");
            }
        }
    }

    /// Summary line; text output only.
    fn summary(&self, text: &str) {
        if self.output == Output::Text {
            println!("{text}");
        }
    }
}

impl Drop for Emitter {
    fn drop(&mut self) {
        if let Some(w) = self.csv.as_mut() {
            let _ = w.flush();
        }
        let _ = std::io::stdout().flush();
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("records serialize")
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map_or(String::new(), |v| v.to_string())
}

fn report_row(pair: &str, r: &ComplexityReport) -> Vec<String> {
    vec![
        pair.to_string(),
        r.method.to_string(),
        r.complexity.to_string(),
        opt(r.rank),
        opt(r.ssgp_dim),
        opt(r.ssgp_rank),
        r.seeds.first().map_or(String::new(), |s| s.to_string()),
        r.trials.to_string(),
        r.stable.to_string(),
    ]
}

const REPORT_HEADER: &[&str] = &["pair", "method", "complexity", "rank", "ssgp_dim", "ssgp_rank", "seed", "trials", "stable"];

fn report_text(pair: &str, r: &ComplexityReport) -> String {
    let mut s = format!("{pair}: {} c = {}", r.method, r.complexity);
    if let Some(rk) = r.rank {
        s += &format!(", rank = {rk}");
    }
    if let (Some(d), Some(rk)) = (r.ssgp_dim, r.ssgp_rank) {
        s += &format!(", dim s = {d}, rk s = {rk}");
    }
    if !r.stable {
        s += " (unstable across trials)";
    }
    s
}

fn resolve(reg: &Registry, pair: &str) -> Result<PairSpec, Failure> {
    Ok(parse_pair_spec(pair, reg)?)
}

fn run_complexity(reg: &Registry, pair: &str, method: MethodArg, opts: &Options, out: Output) -> Result<(), Failure> {
    let spec = resolve(reg, pair)?;
    let inst = spec.instantiate()?;
    let mut em = Emitter::new(out, REPORT_HEADER);
    let mut reports = Vec::new();
    if method != MethodArg::Formula {
        reports.push(complexity_oracle(&inst.model, &inst.h, opts)?);
    }
    if method != MethodArg::Oracle {
        reports.push(complexity_formula(&inst.model, &inst.h, opts)?);
    }
    let name = spec.to_string();
    for r in &reports {
        let mut v = to_value(r);
        v["pair"] = json!(name);
        em.record(&report_text(&name, r), v, &report_row(&name, r));
    }
    if reports.len() == 2 {
        let agree = reports[0].complexity == reports[1].complexity;
        em.summary(if agree { "methods agree" } else { "methods DISAGREE" });
        if !agree {
            return Err(Failure::Mismatch);
        }
    }
    Ok(())
}

fn run_ssgp(reg: &Registry, pair: &str, opts: &Options, out: Output) -> Result<(), Failure> {
    let spec = resolve(reg, pair)?;
    let inst = spec.instantiate()?;
    let s = isotropy_ssgp(&inst.model, &inst.h, opts)?;
    let name = spec.to_string();
    let mut em = Emitter::new(out, &["pair", "dim", "rank", "m_dim", "stable", "witness_trial"]);
    let v = json!({
        "pair": name, "dim": s.dim, "rank": s.rank, "m_dim": s.m_dim, "stable": s.stable && s.rank_stable,
        "trial_dims": s.trial_dims, "witness_trial": s.witness_trial, "seed": opts.seed, "trials": opts.trials,
    });
    let text = format!(
        "{name}: dim s = {}, rk s = {}, dim m = {}{}",
        s.dim,
        s.rank,
        s.m_dim,
        if s.stable && s.rank_stable { "" } else { " (unstable across trials)" }
    );
    let row = [name.clone(), s.dim.to_string(), s.rank.to_string(), s.m_dim.to_string(), (s.stable && s.rank_stable).to_string(), s.witness_trial.to_string()];
    em.record(&text, v, &row);
    Ok(())
}

fn run_verify(reg: &Registry, tables: &[String], bounds: i64, smallest: Option<usize>, opts: &Options, out: Output) -> Result<(), Failure> {
    let tables: Vec<Table> = if tables.is_empty() {
        vec![Table::T3, Table::T4]
    } else {
        tables.iter().map(|t| Table::parse(t)).collect::<homspace::Result<_>>()?
    };
    let sel = smallest.map_or(Selection::Bound(bounds), Selection::Smallest);
    let report = verify_tables(reg, &tables, sel, opts);
    let mut em = Emitter::new(out, &["pair", "indices", "expected", "oracle", "formula", "rank", "ssgp_dim", "evidence", "status", "detail"]);
    for r in &report.records {
        let status = if r.passed() { "pass" } else if r.error.is_some() { "error" } else { "mismatch" };
        let detail = r.error.clone().unwrap_or_else(|| r.mismatches.join("; "));
        let f = r.formula.as_ref();
        let text = format!(
            "{status:8} {} [{}] c = {} oracle {} formula {} rank {} dim s {} ({}){}",
            r.pair,
            r.indices,
            r.expected_complexity,
            opt(r.oracle.as_ref().map(|o| o.complexity)),
            opt(f.map(|f| f.complexity)),
            opt(f.and_then(|f| f.rank)),
            opt(f.and_then(|f| f.ssgp_dim)),
            r.evidence,
            if detail.is_empty() { String::new() } else { format!(": {detail}") }
        );
        let row = [
            r.pair.clone(),
            r.indices.clone(),
            r.expected_complexity.to_string(),
            opt(r.oracle.as_ref().map(|o| o.complexity)),
            opt(f.map(|f| f.complexity)),
            opt(f.and_then(|f| f.rank)),
            opt(f.and_then(|f| f.ssgp_dim)),
            r.evidence.to_string(),
            status.to_string(),
            detail,
        ];
        let mut v = to_value(r);
        v["status"] = json!(status);
        v["seed"] = json!(opts.seed);
        v["trials"] = json!(opts.trials);
        em.record(&text, v, &row);
    }
    let failed = report.failures().count();
    em.summary(&format!("{} checked, {} passed, {failed} failed", report.records.len(), report.records.len() - failed));
    if report.records.iter().any(|r| r.error.as_deref().is_some_and(|e| e.starts_with("internal"))) {
        return Err(Failure::Internal("internal-consistency error during verification".into()));
    }
    if failed > 0 {
        return Err(Failure::Mismatch);
    }
    Ok(())
}

fn run_step1(reg: &Registry, bounds: i64, out: Output) -> Result<(), Failure> {
    let r = reproduce_step1(reg, bounds)?;
    let mut em = Emitter::new(out, &["kind", "pair", "indices", "component", "value", "shape"]);
    for c in &r.candidates {
        let text = format!("candidate {} [{}] part {} value {} {}", c.pair, c.indices, c.component, c.value, c.key);
        let row = ["candidate".into(), c.pair.clone(), c.indices.clone(), c.component.to_string(), c.value.to_string(), c.key.to_string()];
        let mut v = to_value(c);
        v["kind"] = json!("candidate");
        em.record(&text, v, &row);
    }
    for m in &r.missing {
        let text = format!("missing {} [{}] part {} value {}", m.pair, m.indices, m.component, m.value);
        let row = ["missing".into(), m.pair.clone(), m.indices.clone(), m.component.to_string(), m.value.to_string(), String::new()];
        let mut v = to_value(m);
        v["kind"] = json!("missing");
        em.record(&text, v, &row);
    }
    for c in &r.extra {
        let text = format!("extra {} [{}] part {} value {} {}", c.pair, c.indices, c.component, c.value, c.key);
        let row = ["extra".into(), c.pair.clone(), c.indices.clone(), c.component.to_string(), c.value.to_string(), c.key.to_string()];
        let mut v = to_value(c);
        v["kind"] = json!("extra");
        em.record(&text, v, &row);
    }
    em.summary(&format!(
        "{} candidates, {} listed instantiations missing, {} unlisted candidates",
        r.candidates.len(),
        r.missing.len(),
        r.extra.len()
    ));
    if r.exact() {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn run_search(reg: &Registry, bounds: i64, max_pieces: usize, opts: &Options, out: Output) -> Result<(), Failure> {
    let r = enumerate_complexity_one(reg, SearchBounds { index_max: bounds, max_pieces }, opts)?;
    let mut em = Emitter::new(out, &["kind", "spec", "complexity", "oracle", "matches", "within_bounds"]);
    for f in &r.found {
        let kind = if f.matches.is_empty() { "extra" } else { "found" };
        let oracle = opt(f.oracle.as_ref().map(|o| o.complexity));
        let text = format!(
            "{kind:7} c = {} (oracle {oracle}) {} = {}",
            f.report.complexity,
            f.spec,
            if f.matches.is_empty() { "no Table 4 row".into() } else { f.matches.join(", ") }
        );
        let row = [kind.into(), f.spec.clone(), f.report.complexity.to_string(), oracle, f.matches.join("; "), f.within_bounds.to_string()];
        let mut v = to_value(f);
        v["kind"] = json!(kind);
        em.record(&text, v, &row);
    }
    for m in &r.missing {
        em.record(&format!("missing {m}"), json!({ "kind": "missing", "spec": m }), &["missing".into(), m.clone(), String::new(), String::new(), String::new(), "true".into()]);
    }
    for m in &r.frontier {
        em.record(&format!("frontier {m}"), json!({ "kind": "frontier", "spec": m }), &["frontier".into(), m.clone(), String::new(), String::new(), String::new(), String::new()]);
    }
    em.summary(&format!(
        "{} pieces, {} states, {} found ({} within bounds), {} missing, {} extra, frontier {}",
        r.universe.len(),
        r.states,
        r.found.len(),
        r.within_bounds().count(),
        r.missing.len(),
        r.extra().count(),
        r.frontier.len()
    ));
    if r.found.iter().any(|f| !f.oracle_agrees()) {
        return Err(Failure::Internal("oracle and formula disagree on a found coupling".into()));
    }
    if r.exact() {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn run_registry_check(reg: &Registry, out: Output) -> Result<(), Failure> {
    reg.check_counts()?;
    let mut em = Emitter::new(out, &["pair", "indices", "dim_g", "dim_h", "status", "detail"]);
    let mut bad = 0;
    for e in &reg.entries {
        for idx in e.smallest_tuples(3) {
            let res = e.spec(&idx).and_then(|s| s.instantiate());
            let (status, detail, dims) = match &res {
                Ok(i) => ("ok", String::new(), (i.model.dim(), i.h.dim())),
                Err(err) => ("error", err.to_string(), (0, 0)),
            };
            if res.is_err() {
                bad += 1;
            }
            let text = format!("{status:5} {} [{idx}] dim g = {}, dim h = {}{}", e.id(), dims.0, dims.1, if detail.is_empty() { String::new() } else { format!(": {detail}") });
            let v = json!({ "pair": e.id(), "indices": idx.to_string(), "dim_g": dims.0, "dim_h": dims.1, "status": status, "detail": detail });
            let row = [e.id(), idx.to_string(), dims.0.to_string(), dims.1.to_string(), status.into(), detail];
            em.record(&text, v, &row);
        }
    }
    em.summary(&format!("{} rows, {bad} failed to instantiate", reg.entries.len()));
    if bad > 0 {
        Err(Failure::Mismatch)
    } else {
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let opts = Options { seed: cli.seed, trials: cli.trials, ..Options::default() };
    let res = Registry::builtin().map_err(Failure::from).and_then(|reg| match &cli.command {
        Command::Complexity { pair, method } => run_complexity(&reg, pair, *method, &opts, cli.output),
        Command::Ssgp { pair } => run_ssgp(&reg, pair, &opts, cli.output),
        Command::VerifyTables { tables, bounds, smallest } => run_verify(&reg, tables, *bounds, *smallest, &opts, cli.output),
        Command::Classify { stage: Stage::Step1, bounds, .. } => run_step1(&reg, *bounds, cli.output),
        Command::Classify { stage: Stage::Search, bounds, max_pieces } => run_search(&reg, *bounds, *max_pieces, &opts, cli.output),
        Command::RegistryCheck => run_registry_check(&reg, cli.output),
    });
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}
