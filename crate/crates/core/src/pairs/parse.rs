//! Inline pair grammar.
//!
//! ```text
//! input     := registry | shorthand | inline
//! registry  := "T" digit ":" int [ "[" assign ("," assign)* "]" ]
//! assign    := ("n"|"m"|"k"|"l") "=" int | "h=" name
//! shorthand := ambient "|" "h=" part (("," | "+") part)*
//! inline    := piece ("+" piece)* [ "|" group ("," group)* ]
//! piece     := ambient [ "[" parts ":" recipe "]" ]
//! group     := slot ("~" slot)+        slot := int "." int
//! ```
//!
//! A bare ambient is the pair `(g, g)`; `sl2[:]` and `sl2|h=0` are `(g, 0)`.
//! The inline form is what `PairSpec` prints.

use super::expr::Indices;
use super::piece::{parse_ambient, PartName, Piece};
use super::registry::{Registry, Table};
use super::{PairSpec, Slot};
use crate::error::{Error, Result};
use crate::liealg::Component;
use crate::rootsys::SimpleType;

/// Index bound searched when resolving a shorthand.
const SHORTHAND_BOUND: i64 = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairInput {
    Inline(PairSpec),
    Registry { table: Table, item: u32, indices: Indices },
    Shorthand { ambient: SimpleType, parts: Vec<PartName> },
}

struct Cursor<'a> {
    s: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { pos: self.pos, msg: msg.into() }
    }
    fn rest(&self) -> &'a str {
        &self.s[self.pos..]
    }
    fn ws(&mut self) {
        let t = self.rest().trim_start();
        self.pos = self.s.len() - t.len();
    }
    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }
    fn eat(&mut self, c: char) -> bool {
        self.ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }
    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected '{c}'")))
        }
    }
    fn word(&mut self) -> Result<&'a str> {
        self.ws();
        let n = self.rest().find(|c: char| !c.is_ascii_alphanumeric()).unwrap_or(self.rest().len());
        if n == 0 {
            return Err(self.err("expected a name"));
        }
        let w = &self.rest()[..n];
        self.pos += n;
        Ok(w)
    }
    fn int(&mut self) -> Result<i64> {
        self.ws();
        let r = self.rest();
        let n = r
            .char_indices()
            .find(|&(i, c)| !(c.is_ascii_digit() || (i == 0 && c == '-')))
            .map_or(r.len(), |(i, _)| i);
        let v = r[..n].parse().map_err(|_| self.err("expected an integer"))?;
        self.pos += n;
        Ok(v)
    }
    fn done(&mut self) -> Result<()> {
        self.ws();
        if self.pos == self.s.len() {
            Ok(())
        } else {
            Err(self.err("unexpected trailing input"))
        }
    }
}

fn is_registry_ref(s: &str) -> bool {
    let b = s.trim_start().as_bytes();
    b.len() >= 3 && b[0] == b'T' && b[1].is_ascii_digit() && b[2] == b':'
}

pub fn parse_pair_input(text: &str) -> Result<PairInput> {
    let mut c = Cursor { s: text, pos: 0 };
    c.ws();
    if c.pos == text.len() {
        return Err(c.err("empty pair specification"));
    }
    if is_registry_ref(text) {
        return registry_ref(&mut c);
    }
    let start = c.pos;
    let first = c.word()?;
    if c.eat('|') && c.rest().trim_start().starts_with("h") {
        let save = c.pos;
        let key = c.word()?;
        if key == "h" && c.eat('=') {
            let ambient = parse_ambient(first).map_err(|e| at(start, e))?;
            let mut parts = Vec::new();
            loop {
                let p = c.pos;
                let w = c.word()?;
                parts.push(PartName::new(w).map_err(|e| at(p, e))?);
                if !(c.eat(',') || c.eat('+')) {
                    break;
                }
            }
            c.done()?;
            return Ok(PairInput::Shorthand { ambient, parts });
        }
        c.pos = save;
        return Err(c.err("expected 'h=' after '|' in a shorthand"));
    }
    c.pos = start;
    let spec = inline(&mut c)?;
    Ok(PairInput::Inline(spec))
}

/// Attach a position to an error from a sub-parser that has none.
fn at(pos: usize, e: Error) -> Error {
    match e {
        Error::Parse { msg, .. } => Error::Parse { pos, msg },
        other => Error::Parse { pos, msg: other.to_string() },
    }
}

fn registry_ref(c: &mut Cursor) -> Result<PairInput> {
    c.ws();
    let p = c.pos;
    let t = c.word()?;
    let table = Table::parse(t).map_err(|e| at(p, e))?;
    c.expect(':')?;
    let item = c.int()?;
    if item <= 0 {
        return Err(c.err("item numbers start at 1"));
    }
    let mut indices = Indices::default();
    if c.eat('[') && !c.eat(']') {
        loop {
            let p = c.pos;
            let key = c.word()?;
            c.expect('=')?;
            match key {
                "n" | "m" | "k" | "l" => {
                    let k = key.chars().next().unwrap();
                    indices.values.insert(k, c.int()?);
                }
                "h" => indices.type_param = Some(c.word()?.to_string()),
                _ => return Err(Error::Parse { pos: p, msg: format!("unknown index {key:?}") }),
            }
            if c.eat(']') {
                break;
            }
            c.expect(',')?;
        }
    }
    c.done()?;
    Ok(PairInput::Registry { table, item: item as u32, indices })
}

fn inline(c: &mut Cursor) -> Result<PairSpec> {
    let mut pieces = vec![piece(c)?];
    while c.eat('+') {
        pieces.push(piece(c)?);
    }
    let mut couplings = Vec::new();
    if c.eat('|') {
        loop {
            let mut group: Vec<Slot> = vec![slot(c)?];
            while c.eat('~') {
                group.push(slot(c)?);
            }
            if group.len() < 2 {
                return Err(c.err("a coupling needs at least two slots"));
            }
            couplings.push(group);
            if !c.eat(',') {
                break;
            }
        }
    }
    c.done()?;
    let spec = PairSpec { pieces, couplings };
    spec.validate().map_err(|e| at(0, e))?;
    Ok(spec)
}

fn slot(c: &mut Cursor) -> Result<Slot> {
    let a = c.int()?;
    c.expect('.')?;
    let b = c.int()?;
    if a < 0 || b < 0 {
        return Err(c.err("slot indices are nonnegative"));
    }
    Ok((a as usize, b as usize))
}

fn piece(c: &mut Cursor) -> Result<Piece> {
    c.ws();
    let p = c.pos;
    let name = c.word()?;
    let ambient = parse_ambient(name).map_err(|e| at(p, e))?;
    if !c.eat('[') {
        return Ok(Piece::identity(ambient));
    }
    let body_start = c.pos;
    let mut depth = 1;
    let mut end = None;
    for (i, ch) in c.rest().char_indices() {
        match ch {
            '[' | '(' | '{' => depth += 1,
            ']' | ')' | '}' => {
                depth -= 1;
                if depth == 0 {
                    end = Some(i);
                    break;
                }
            }
            _ => {}
        }
    }
    let end = end.ok_or_else(|| c.err("unclosed '['"))?;
    let body = &c.rest()[..end];
    let colon = body.find(':').ok_or_else(|| Error::Parse { pos: body_start, msg: "expected ':' in piece".into() })?;
    let mut parts = Vec::new();
    let parts_text = body[..colon].trim();
    if !parts_text.is_empty() && parts_text != "0" {
        let mut off = body_start;
        for w in body[..colon].split(',') {
            parts.push(PartName::new(w).map_err(|e| at(off, e))?);
            off += w.len() + 1;
        }
    }
    let recipe = body[colon + 1..].trim();
    if parts.is_empty() && !recipe.is_empty() {
        return Err(Error::Parse { pos: body_start + colon + 1, msg: "a zero subalgebra takes no recipe".into() });
    }
    if !parts.is_empty() && recipe.is_empty() {
        return Err(Error::Parse { pos: body_start + colon + 1, msg: "missing recipe".into() });
    }
    c.pos += end + 1;
    Ok(Piece::new(ambient, parts, recipe))
}

fn canonical(parts: &[PartName]) -> Option<Vec<Component>> {
    let mut out = Vec::new();
    for p in parts {
        for x in p.components().ok()? {
            out.push(match x {
                Component::Simple(t) => Component::Simple(t.canonical()),
                c => c,
            });
        }
    }
    out.sort();
    Some(out)
}

impl PairInput {
    /// The pair this input denotes. Registry references must satisfy the
    /// row's constraints; a shorthand resolves to the first Table 1 or 2 row
    /// with that ambient and subalgebra.
    pub fn resolve(&self, reg: &Registry) -> Result<PairSpec> {
        match self {
            PairInput::Inline(s) => Ok(s.clone()),
            PairInput::Registry { table, item, indices } => {
                let e = reg
                    .get(*table, *item)
                    .ok_or_else(|| Error::Inadmissible(format!("no item {item} in table {}", table.number())))?;
                let mut idx = indices.clone();
                if idx.type_param.is_none() && !e.type_params.is_empty() {
                    idx.type_param = Some(e.type_params[0].clone());
                }
                if !e.admissible(&idx)? {
                    return Err(Error::Inadmissible(format!("{} at [{idx}] violates the row constraints", e.id())));
                }
                e.spec(&idx)
            }
            PairInput::Shorthand { ambient, parts } => {
                if parts.iter().all(|p| p.dim() == 0) {
                    return Ok(PairSpec::single(Piece::new(*ambient, vec![], "")));
                }
                if parts.len() == 1 && parts[0].components().ok() == Some(vec![Component::Simple(*ambient)]) {
                    return Ok(PairSpec::single(Piece::identity(*ambient)));
                }
                let want = canonical(parts);
                for t in [Table::T1, Table::T2] {
                    for e in reg.table(t) {
                        for idx in e.index_tuples(SHORTHAND_BOUND) {
                            let Ok(spec) = e.spec(&idx) else { continue };
                            if spec.pieces.len() != 1 || spec.pieces[0].ambient.canonical() != ambient.canonical() {
                                continue;
                            }
                            if canonical(&spec.pieces[0].parts) == want {
                                return Ok(spec);
                            }
                        }
                    }
                }
                Err(Error::Inadmissible(format!(
                    "no Table 1 or 2 row has ambient {} with h = {}",
                    ambient.classical_name(),
                    parts.iter().map(|p| p.0.clone()).collect::<Vec<_>>().join("+")
                )))
            }
        }
    }
}

/// Parse and resolve in one step.
pub fn parse_pair_spec(text: &str, reg: &Registry) -> Result<PairSpec> {
    parse_pair_input(text)?.resolve(reg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reg() -> Registry {
        Registry::builtin().unwrap()
    }

    #[test]
    fn inline_round_trip() {
        for text in [
            "sp4[sp2,sp2: V0 + V1] + sl3[so3: V0] | 0.1~1.0",
            "sl2[:]",
            "sl3",
            "sl4[sl2,sl2: V0 + V1] + sl2 + sl2 | 0.0~1.0, 0.1~2.0",
        ] {
            let s = parse_pair_spec(text, &reg()).unwrap();
            let again = parse_pair_spec(&s.to_string(), &reg()).unwrap();
            assert_eq!(s, again, "{text}");
        }
    }

    #[test]
    fn registry_rows_round_trip() {
        let r = reg();
        for e in &r.entries {
            for idx in e.smallest_tuples(1) {
                let s = e.spec(&idx).unwrap();
                assert_eq!(parse_pair_spec(&s.to_string(), &r).unwrap(), s, "{}", e.id());
            }
        }
    }

    #[test]
    fn registry_references() {
        let r = reg();
        let s = parse_pair_spec("T1:12", &r).unwrap();
        assert_eq!(s.pieces[0].ambient, SimpleType::b(3));
        assert_eq!(s.h_dim(), 14);
        let s = parse_pair_spec("T4:8[n=1,m=2]", &r).unwrap();
        assert_eq!(s.pieces.len(), 2);
        assert!(parse_pair_spec("T4:8[n=0,m=2]", &r).is_err());
        assert!(parse_pair_spec("T3:9[h=sp4]", &r).is_ok());
        assert!(parse_pair_spec("T5:1", &r).is_err());
    }

    #[test]
    fn shorthands() {
        let r = reg();
        let s = parse_pair_spec("sl3|h=so3", &r).unwrap();
        assert_eq!(s, r.get(Table::T1, 1).unwrap().spec(&Indices::default().with('n', 3)).unwrap());
        let z = parse_pair_spec("sl2|h=0", &r).unwrap();
        assert_eq!(z.h_dim(), 0);
        assert_eq!(z.instantiate().unwrap().h.dim(), 0);
    }

    #[test]
    fn errors_carry_positions() {
        let r = reg();
        assert!(matches!(parse_pair_spec("", &r), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(parse_pair_spec("   ", &r), Err(Error::Parse { .. })));
        match parse_pair_spec("sl3[so3: V0] + ", &r) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 15),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_pair_spec("sl3[so3 V0]", &r), Err(Error::Parse { .. })));
        assert!(matches!(parse_pair_spec("sl3 | 0.0", &r), Err(Error::Parse { .. })));
        assert!(matches!(parse_pair_spec("xx7", &r), Err(Error::Parse { pos: 0, .. })));
    }
}
