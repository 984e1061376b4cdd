//! The table registry: one record per table item, with index-parameterized
//! pieces, couplings and expected invariants.
//!
//! Record fields are separated by ` | `; see `data/registry.txt` for the
//! field list. Templates `{expr}` are evaluated in the indices.

use super::expr::{Constraint, Expr, Indices};
use super::piece::{parse_ambient, split_top, PartName, Piece};
use super::{PairSpec, Slot};
use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

/// The shipped registry text.
pub const BUILTIN: &str = include_str!("../../data/registry.txt");

/// Expected item counts of the four tables.
pub const TABLE_SIZES: [usize; 4] = [31, 17, 9, 30];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Table {
    T1,
    T2,
    T3,
    T4,
}

impl Table {
    pub fn parse(s: &str) -> Result<Table> {
        match s.trim() {
            "T1" => Ok(Table::T1),
            "T2" => Ok(Table::T2),
            "T3" => Ok(Table::T3),
            "T4" => Ok(Table::T4),
            other => Err(Error::Parse { pos: 0, msg: format!("unknown table {other:?}") }),
        }
    }
    pub fn number(self) -> usize {
        self as usize + 1
    }
    pub fn expected_complexity(self) -> u32 {
        match self {
            Table::T1 | Table::T3 => 0,
            Table::T2 | Table::T4 => 1,
        }
    }
    /// Smallest value of an unconstrained index.
    pub fn index_floor(self) -> i64 {
        match self {
            Table::T1 | Table::T2 => 1,
            Table::T3 | Table::T4 => 0,
        }
    }
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{}", self.number())
    }
}

/// A string with `{expr}` holes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Template(pub String);

impl Template {
    pub fn eval(&self, idx: &Indices) -> Result<String> {
        let mut out = String::new();
        let mut rest = self.0.as_str();
        while let Some(open) = rest.find('{') {
            out.push_str(&rest[..open]);
            let close = rest[open..]
                .find('}')
                .ok_or_else(|| Error::Parse { pos: open, msg: "unclosed '{'".into() })?
                + open;
            out.push_str(&Expr::parse(&rest[open + 1..close])?.eval(idx)?.to_string());
            rest = &rest[close + 1..];
        }
        out.push_str(rest);
        if let Some(h) = &idx.type_param {
            out = out.replace("@h", h);
        }
        Ok(out)
    }

    fn vars(&self, out: &mut Vec<char>) -> Result<()> {
        let mut rest = self.0.as_str();
        while let Some(open) = rest.find('{') {
            let close = rest[open..]
                .find('}')
                .ok_or_else(|| Error::Parse { pos: open, msg: "unclosed '{'".into() })?
                + open;
            Expr::parse(&rest[open + 1..close])?.vars(out);
            rest = &rest[close + 1..];
        }
        Ok(())
    }
}

/// One summand of an expected s.s.g.p.: `mult` copies of a named algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SsgpTerm {
    pub mult: i64,
    pub name: Template,
}

/// Expected s.s.g.p. as a sum of classical algebras, `c`, `0` and `cartan`
/// (a Cartan subalgebra of the type parameter).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SsgpExpr(pub Vec<SsgpTerm>);

impl SsgpExpr {
    pub fn parse(s: &str) -> Result<SsgpExpr> {
        let mut terms = Vec::new();
        for t in split_top(s, '+') {
            let (mult, name) = match t.split_once(' ') {
                Some((a, b)) if a.chars().all(|c| c.is_ascii_digit()) => {
                    (a.parse().unwrap(), b.trim().to_string())
                }
                _ => (1, t.clone()),
            };
            if name.is_empty() {
                return Err(Error::Parse { pos: 0, msg: format!("empty term in {s:?}") });
            }
            terms.push(SsgpTerm { mult, name: Template(name) });
        }
        Ok(SsgpExpr(terms))
    }

    /// `(dim, rank)` at the given indices.
    pub fn eval(&self, idx: &Indices) -> Result<(usize, usize)> {
        let (mut dim, mut rank) = (0usize, 0usize);
        for t in &self.0 {
            let name = t.name.eval(idx)?;
            let (d, r) = algebra_dim_rank(&name, idx)?;
            dim += t.mult as usize * d;
            rank += t.mult as usize * r;
        }
        Ok((dim, rank))
    }
}

/// Dimension and rank of a named reductive algebra; nonpositive indices give 0.
pub fn algebra_dim_rank(name: &str, idx: &Indices) -> Result<(usize, usize)> {
    match name {
        "0" => return Ok((0, 0)),
        "c" => return Ok((1, 1)),
        "cartan" => {
            let r = Expr::RankParam.eval(idx)? as usize;
            return Ok((r, r));
        }
        _ => {}
    }
    if let Some(e) = name.strip_prefix("gl") {
        let e: i64 = e.parse().map_err(|_| Error::Parse { pos: 0, msg: format!("bad algebra {name:?}") })?;
        return Ok(if e >= 1 { ((e * e) as usize, e as usize) } else { (0, 0) });
    }
    let part = PartName::new(name)?;
    let comps = part.components()?;
    Ok((comps.iter().map(|c| c.dim()).sum(), comps.iter().map(|c| c.rank()).sum()))
}

#[derive(Clone, Debug)]
pub struct TableEntry {
    pub table: Table,
    pub item: u32,
    pub ambient: Vec<Template>,
    pub parts: Vec<Vec<Template>>,
    pub recipes: Vec<Template>,
    pub couplings: Vec<Vec<Slot>>,
    pub expected_complexity: u32,
    pub expected_rank: Option<Expr>,
    pub expected_ssgp: Option<SsgpExpr>,
    pub constraints: Vec<Constraint>,
    /// Values of the type parameter `h`, when the row has one.
    pub type_params: Vec<String>,
    pub oracle_capable: bool,
    /// Index symbols used by the row, sorted.
    pub vars: Vec<char>,
    pub line: usize,
}

fn field_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Registry { line, msg: msg.into() }
}

impl TableEntry {
    pub fn id(&self) -> String {
        format!("{}:{}", self.table, self.item)
    }

    pub fn parse_line(text: &str, line: usize) -> Result<TableEntry> {
        let f: Vec<&str> = text.split(" | ").map(str::trim).collect();
        if f.len() != 11 {
            return Err(field_err(line, format!("expected 11 fields, found {}", f.len())));
        }
        let wrap = |e: Error| field_err(line, e.to_string());
        let table = Table::parse(f[0]).map_err(wrap)?;
        let item: u32 = f[1].parse().map_err(|_| field_err(line, "bad item number"))?;
        let ambient: Vec<Template> = split_top(f[2], '+').into_iter().map(Template).collect();
        let parts: Vec<Vec<Template>> = split_top(f[3], ';')
            .into_iter()
            .map(|p| p.split(',').map(|x| Template(x.trim().to_string())).collect())
            .collect();
        let recipes: Vec<Template> = split_top(f[4], ';').into_iter().map(Template).collect();
        if parts.len() != ambient.len() || recipes.len() != ambient.len() {
            return Err(field_err(line, "ambient, parts and recipes disagree on the number of pieces"));
        }
        let couplings = if f[5] == "-" { vec![] } else { parse_couplings(f[5]).map_err(wrap)? };
        let expected_complexity: u32 = f[6].parse().map_err(|_| field_err(line, "bad complexity"))?;
        if expected_complexity != table.expected_complexity() {
            return Err(field_err(line, format!("{table} rows have complexity {}", table.expected_complexity())));
        }
        let expected_rank = if f[7] == "-" { None } else { Some(Expr::parse(f[7]).map_err(wrap)?) };
        let expected_ssgp = if f[8] == "-" { None } else { Some(SsgpExpr::parse(f[8]).map_err(wrap)?) };
        let mut constraints = Vec::new();
        let mut type_params = Vec::new();
        if f[9] != "-" {
            for c in f[9].split(',') {
                let c = c.trim();
                if let Some(list) = c.strip_prefix("h=") {
                    type_params = list.split('|').map(|s| s.trim().to_string()).collect();
                } else {
                    constraints.push(Constraint::parse(c).map_err(wrap)?);
                }
            }
        }
        let oracle_capable = match f[10] {
            "yes" => true,
            "no" => false,
            _ => return Err(field_err(line, "oracle field must be yes or no")),
        };
        let mut vars = Vec::new();
        for t in ambient.iter().chain(parts.iter().flatten()).chain(&recipes) {
            t.vars(&mut vars).map_err(wrap)?;
        }
        for e in expected_rank.iter() {
            e.vars(&mut vars);
        }
        for t in expected_ssgp.iter().flat_map(|s| &s.0) {
            t.name.vars(&mut vars).map_err(wrap)?;
        }
        for c in &constraints {
            c.lhs.vars(&mut vars);
            c.rhs.vars(&mut vars);
        }
        vars.sort_unstable();
        let uses_param = ambient.iter().any(|a| a.0.contains("@h"));
        if uses_param != !type_params.is_empty() {
            return Err(field_err(line, "type parameter values and uses of @h must go together"));
        }
        let entry = TableEntry {
            table,
            item,
            ambient,
            parts,
            recipes,
            couplings,
            expected_complexity,
            expected_rank,
            expected_ssgp,
            constraints,
            type_params,
            oracle_capable,
            vars,
            line,
        };
        for g in &entry.couplings {
            for &(p, q) in g {
                if p >= entry.parts.len() || q >= entry.parts[p].len() {
                    return Err(field_err(line, format!("coupling refers to missing slot {p}.{q}")));
                }
            }
        }
        Ok(entry)
    }

    pub fn admissible(&self, idx: &Indices) -> Result<bool> {
        for c in &self.constraints {
            if !c.holds(idx)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The pair at the given indices.
    pub fn spec(&self, idx: &Indices) -> Result<PairSpec> {
        for &v in &self.vars {
            if idx.get(v).is_none() {
                return Err(Error::Inadmissible(format!("{}: index {v} is unbound", self.id())));
            }
        }
        if !self.type_params.is_empty() {
            match &idx.type_param {
                Some(h) if self.type_params.contains(h) => {}
                _ => {
                    return Err(Error::Inadmissible(format!(
                        "{}: h must be one of {}",
                        self.id(),
                        self.type_params.join(", ")
                    )))
                }
            }
        }
        if !self.admissible(idx)? {
            return Err(Error::Inadmissible(format!("{}: indices {idx} violate the constraints", self.id())));
        }
        let mut pieces = Vec::new();
        for ((a, parts), recipe) in self.ambient.iter().zip(&self.parts).zip(&self.recipes) {
            let ambient = parse_ambient(&a.eval(idx)?)?;
            let parts = parts.iter().map(|p| PartName::new(&p.eval(idx)?)).collect::<Result<Vec<_>>>()?;
            pieces.push(Piece::new(ambient, parts, &recipe.eval(idx)?));
        }
        let spec = PairSpec { pieces, couplings: self.couplings.clone() };
        spec.validate()?;
        Ok(spec)
    }

    /// Admissible index tuples with every index at most `bound`, ordered by
    /// index sum and then lexicographically in sorted index order. Tuples
    /// whose ambient algebras are not all simple are skipped.
    pub fn index_tuples(&self, bound: i64) -> Vec<Indices> {
        let params: Vec<Option<String>> = if self.type_params.is_empty() {
            vec![None]
        } else {
            self.type_params.iter().cloned().map(Some).collect()
        };
        let floor = self.table.index_floor();
        let mut out: Vec<(i64, Vec<i64>, Indices)> = Vec::new();
        for param in params {
            let k = self.vars.len();
            let mut vals = vec![floor; k];
            loop {
                let mut idx = Indices { values: BTreeMap::new(), type_param: param.clone() };
                for (c, v) in self.vars.iter().zip(&vals) {
                    idx.values.insert(*c, *v);
                }
                if self.admissible(&idx).unwrap_or(false) && self.ambients_ok(&idx) {
                    out.push((vals.iter().sum(), vals.clone(), idx));
                }
                let mut i = 0;
                while i < k {
                    vals[i] += 1;
                    if vals[i] <= bound {
                        break;
                    }
                    vals[i] = floor;
                    i += 1;
                }
                if i == k {
                    break;
                }
            }
        }
        out.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        out.into_iter().map(|x| x.2).collect()
    }

    fn ambients_ok(&self, idx: &Indices) -> bool {
        self.ambient
            .iter()
            .all(|a| a.eval(idx).ok().and_then(|s| parse_ambient(&s).ok()).is_some())
    }

    /// The `count` smallest admissible index tuples.
    pub fn smallest_tuples(&self, count: usize) -> Vec<Indices> {
        let mut bound = self.table.index_floor() + 2;
        loop {
            let t = self.index_tuples(bound);
            if t.len() >= count || bound > 12 {
                return t.into_iter().take(count).collect();
            }
            bound += 2;
        }
    }

    /// Expected `(dim s, rank s)`.
    pub fn expected_ssgp_dims(&self, idx: &Indices) -> Result<Option<(usize, usize)>> {
        self.expected_ssgp.as_ref().map(|s| s.eval(idx)).transpose()
    }

    pub fn expected_rank_at(&self, idx: &Indices) -> Result<Option<i64>> {
        self.expected_rank.as_ref().map(|e| e.eval(idx)).transpose()
    }
}

fn parse_couplings(s: &str) -> Result<Vec<Vec<Slot>>> {
    s.split(',')
        .map(|g| {
            g.split('~')
                .map(|m| {
                    let (p, q) = m
                        .trim()
                        .split_once('.')
                        .ok_or_else(|| Error::Parse { pos: 0, msg: format!("bad slot {m:?}") })?;
                    let num = |x: &str| {
                        x.parse::<usize>()
                            .map_err(|_| Error::Parse { pos: 0, msg: format!("bad slot {m:?}") })
                    };
                    Ok((num(p)?, num(q)?))
                })
                .collect()
        })
        .collect()
}

#[derive(Clone, Debug, Default)]
pub struct Registry {
    pub entries: Vec<TableEntry>,
}

impl Registry {
    pub fn parse(text: &str) -> Result<Registry> {
        let mut entries: Vec<TableEntry> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let e = TableEntry::parse_line(line, i + 1)?;
            if entries.iter().any(|x| x.table == e.table && x.item == e.item) {
                return Err(field_err(i + 1, format!("duplicate entry {}", e.id())));
            }
            entries.push(e);
        }
        Ok(Registry { entries })
    }

    pub fn load(path: &Path) -> Result<Registry> {
        Registry::parse(&std::fs::read_to_string(path)?)
    }

    /// The shipped registry, with its table sizes checked.
    pub fn builtin() -> Result<Registry> {
        let r = Registry::parse(BUILTIN)?;
        r.check_counts()?;
        Ok(r)
    }

    pub fn check_counts(&self) -> Result<()> {
        for (t, &want) in [Table::T1, Table::T2, Table::T3, Table::T4].iter().zip(&TABLE_SIZES) {
            let items: Vec<u32> = self.table(*t).map(|e| e.item).collect();
            let expect: Vec<u32> = (1..=want as u32).collect();
            let mut sorted = items.clone();
            sorted.sort_unstable();
            if sorted != expect {
                return Err(Error::Registry {
                    line: 0,
                    msg: format!("{t} has items {sorted:?}, expected 1..={want}"),
                });
            }
        }
        Ok(())
    }

    pub fn table(&self, t: Table) -> impl Iterator<Item = &TableEntry> {
        self.entries.iter().filter(move |e| e.table == t)
    }

    pub fn get(&self, t: Table, item: u32) -> Option<&TableEntry> {
        self.entries.iter().find(|e| e.table == t && e.item == item)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(pairs: &[(char, i64)]) -> Indices {
        pairs.iter().fold(Indices::default(), |i, &(c, v)| i.with(c, v))
    }

    #[test]
    fn builtin_counts() {
        let r = Registry::builtin().unwrap();
        assert_eq!(r.entries.len(), 87);
        assert!(Registry::parse("").unwrap().entries.is_empty());
    }

    #[test]
    fn rank_and_ssgp_columns() {
        let r = Registry::builtin().unwrap();
        let e = r.get(Table::T4, 27).unwrap();
        assert_eq!(e.expected_rank_at(&idx(&[('n', 4)])).unwrap(), Some(7));
        assert_eq!(e.expected_ssgp_dims(&idx(&[('n', 4)])).unwrap(), Some((0, 0)));
        let e = r.get(Table::T4, 8).unwrap();
        let i = idx(&[('n', 1), ('m', 1)]);
        assert_eq!(e.expected_rank_at(&i).unwrap(), Some(4));
        assert_eq!(e.expected_ssgp_dims(&i).unwrap(), Some((0, 0)));
        let i = idx(&[('n', 3), ('m', 4)]);
        assert_eq!(e.expected_ssgp_dims(&i).unwrap(), Some((1 + 4, 1 + 2)));
        let e = r.get(Table::T4, 5).unwrap();
        assert_eq!(e.expected_ssgp_dims(&idx(&[('n', 2)])).unwrap(), Some((3 + 9, 1 + 3)));
    }

    #[test]
    fn smallest_tuples_respect_constraints() {
        let r = Registry::builtin().unwrap();
        let t = r.get(Table::T2, 3).unwrap().smallest_tuples(3);
        assert_eq!(t.len(), 3);
        for i in &t {
            assert!(i.get('n').unwrap() >= 5);
            assert_ne!(2 * i.get('k').unwrap(), i.get('n').unwrap() - 2);
        }
        let t = r.get(Table::T1, 10).unwrap().smallest_tuples(3);
        assert!(t.iter().all(|i| i.get('n').unwrap() + i.get('m').unwrap() >= 5));
        assert_eq!(r.get(Table::T1, 30).unwrap().smallest_tuples(3).len(), 1);
        let h: Vec<_> = r.get(Table::T3, 9).unwrap().smallest_tuples(3);
        assert_eq!(h.iter().map(|i| i.type_param.clone().unwrap()).collect::<Vec<_>>(), ["sl2", "sl3", "sp4"]);
    }

    #[test]
    fn line_numbered_errors() {
        let text = "# comment\nT1 | 1 | sl{n} | so{n} | V0 | - | 1 | - | - | - | yes\n";
        match Registry::parse(text) {
            Err(Error::Registry { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        assert!(Registry::parse("T9 | 1 | a | b | c | - | 0 | - | - | - | yes").is_err());
    }

    #[test]
    fn every_row_specifies_at_its_smallest_tuples() {
        let r = Registry::builtin().unwrap();
        for e in &r.entries {
            let tuples = e.smallest_tuples(3);
            assert!(!tuples.is_empty(), "{}", e.id());
            for i in tuples {
                let spec = e.spec(&i).unwrap_or_else(|err| panic!("{} {i}: {err}", e.id()));
                assert!(spec.is_indecomposable(), "{} {i}", e.id());
            }
        }
    }
}
