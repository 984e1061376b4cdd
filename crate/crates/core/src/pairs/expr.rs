//! Integer expressions in the table indices `n, m, k, l`.
//!
//! Grammar: sums and differences of products of atoms; an atom is an integer,
//! an index, a parenthesised expression, `d(a,b)` (1 if `a == b`, else 0) or
//! `rk(h)` (rank of the type parameter). Constraints compare two expressions
//! with one of `>= <= > < == !=`. Juxtaposition multiplies: `2n` is `2*n`.

use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;

/// Index values of one instantiation, plus the rank of the type parameter.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Indices {
    pub values: BTreeMap<char, i64>,
    /// Name of the simple type bound to `h`, when the row has one.
    pub type_param: Option<String>,
}

impl Indices {
    pub fn get(&self, c: char) -> Option<i64> {
        self.values.get(&c).copied()
    }
    pub fn with(mut self, c: char, v: i64) -> Self {
        self.values.insert(c, v);
        self
    }
}

impl fmt::Display for Indices {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.values.iter().map(|(k, v)| format!("{k}={v}")).collect();
        if let Some(h) = &self.type_param {
            parts.push(format!("h={h}"));
        }
        write!(f, "{}", parts.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(i64),
    Var(char),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Delta(Box<Expr>, Box<Expr>),
    RankParam,
}

impl Expr {
    pub fn parse(s: &str) -> Result<Expr> {
        let mut p = Parser { s: s.as_bytes(), pos: 0 };
        let e = p.sum()?;
        p.ws();
        if p.pos != p.s.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(e)
    }

    pub fn eval(&self, idx: &Indices) -> Result<i64> {
        Ok(match self {
            Expr::Num(v) => *v,
            Expr::Var(c) => idx
                .get(*c)
                .ok_or_else(|| Error::Inadmissible(format!("index {c} is unbound")))?,
            Expr::Add(a, b) => a.eval(idx)? + b.eval(idx)?,
            Expr::Sub(a, b) => a.eval(idx)? - b.eval(idx)?,
            Expr::Mul(a, b) => a.eval(idx)? * b.eval(idx)?,
            Expr::Neg(a) => -a.eval(idx)?,
            Expr::Delta(a, b) => (a.eval(idx)? == b.eval(idx)?) as i64,
            Expr::RankParam => {
                let name = idx
                    .type_param
                    .as_deref()
                    .ok_or_else(|| Error::Inadmissible("type parameter h is unbound".into()))?;
                crate::rootsys::SimpleType::parse(name)?.rank as i64
            }
        })
    }

    /// Index symbols occurring in the expression.
    pub fn vars(&self, out: &mut Vec<char>) {
        match self {
            Expr::Var(c) => {
                if !out.contains(c) {
                    out.push(*c)
                }
            }
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Delta(a, b) => {
                a.vars(out);
                b.vars(out);
            }
            Expr::Neg(a) => a.vars(out),
            Expr::Num(_) | Expr::RankParam => {}
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cmp {
    Ge,
    Le,
    Gt,
    Lt,
    Eq,
    Ne,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub lhs: Expr,
    pub cmp: Cmp,
    pub rhs: Expr,
}

impl Constraint {
    pub fn parse(s: &str) -> Result<Constraint> {
        for (tok, cmp) in [
            (">=", Cmp::Ge),
            ("<=", Cmp::Le),
            ("!=", Cmp::Ne),
            ("==", Cmp::Eq),
            (">", Cmp::Gt),
            ("<", Cmp::Lt),
        ] {
            if let Some(i) = s.find(tok) {
                return Ok(Constraint {
                    lhs: Expr::parse(&s[..i])?,
                    cmp,
                    rhs: Expr::parse(&s[i + tok.len()..])?,
                });
            }
        }
        Err(Error::Parse { pos: 0, msg: format!("no comparison in constraint {s:?}") })
    }

    pub fn holds(&self, idx: &Indices) -> Result<bool> {
        let (a, b) = (self.lhs.eval(idx)?, self.rhs.eval(idx)?);
        Ok(match self.cmp {
            Cmp::Ge => a >= b,
            Cmp::Le => a <= b,
            Cmp::Gt => a > b,
            Cmp::Lt => a < b,
            Cmp::Eq => a == b,
            Cmp::Ne => a != b,
        })
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
    }
    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }
    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }
    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }
    fn sum(&mut self) -> Result<Expr> {
        let mut e = self.product()?;
        loop {
            if self.eat(b'+') {
                e = Expr::Add(Box::new(e), Box::new(self.product()?));
            } else if self.eat(b'-') {
                e = Expr::Sub(Box::new(e), Box::new(self.product()?));
            } else {
                return Ok(e);
            }
        }
    }
    fn product(&mut self) -> Result<Expr> {
        let mut e = self.atom()?;
        loop {
            // juxtaposition `2n` and `2(n+1)` multiplies
            let implicit = matches!(self.peek(), Some(b'n' | b'm' | b'k' | b'l' | b'(' | b'd' | b'r'));
            if self.eat(b'*') || implicit {
                e = Expr::Mul(Box::new(e), Box::new(self.atom()?));
            } else {
                return Ok(e);
            }
        }
    }
    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.atom()?)))
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.sum()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
                text.parse().map(Expr::Num).map_err(|_| self.err("integer out of range"))
            }
            Some(b'd') if self.s.get(self.pos + 1) == Some(&b'(') => {
                self.pos += 2;
                let a = self.sum()?;
                if !self.eat(b',') {
                    return Err(self.err("expected ','"));
                }
                let b = self.sum()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(Expr::Delta(Box::new(a), Box::new(b)))
            }
            Some(b'r') if self.s[self.pos..].starts_with(b"rk(h)") => {
                self.pos += 5;
                Ok(Expr::RankParam)
            }
            Some(c @ (b'n' | b'm' | b'k' | b'l')) => {
                self.pos += 1;
                Ok(Expr::Var(c as char))
            }
            _ => Err(self.err("expected a number, index, d(..) or rk(h)")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(n: i64, m: i64) -> Indices {
        Indices::default().with('n', n).with('m', m)
    }

    #[test]
    fn rank_expression_with_deltas() {
        let e = Expr::parse("6 - d(n,1) - d(m,1)").unwrap();
        assert_eq!(e.eval(&idx(1, 1)).unwrap(), 4);
        assert_eq!(e.eval(&idx(2, 1)).unwrap(), 5);
        assert_eq!(Expr::parse("2*n-1").unwrap().eval(&idx(3, 0)).unwrap(), 5);
        assert_eq!(Expr::parse("-(n+m)").unwrap().eval(&idx(3, 2)).unwrap(), -5);
        assert_eq!(Expr::parse("2n+2").unwrap().eval(&idx(3, 0)).unwrap(), 8);
        assert_eq!(Expr::parse("2(n-m)").unwrap().eval(&idx(3, 1)).unwrap(), 4);
    }

    #[test]
    fn constraints() {
        let c = Constraint::parse("n != m").unwrap();
        assert!(!c.holds(&idx(2, 2)).unwrap());
        assert!(Constraint::parse("2*n >= m+1").unwrap().holds(&idx(1, 1)).unwrap());
    }

    #[test]
    fn parse_errors_carry_position() {
        match Expr::parse("n + * 2") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!(Expr::parse("").is_err());
    }

    #[test]
    fn type_parameter_rank() {
        let mut i = Indices::default();
        i.type_param = Some("sp4".into());
        assert_eq!(Expr::parse("rk(h)").unwrap().eval(&i).unwrap(), 2);
    }
}
