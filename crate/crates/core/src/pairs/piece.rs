//! One simple ambient algebra with a completely decomposable subalgebra given
//! by a recipe.
//!
//! Part names: `slN`, `soN`, `spN` (classical, possibly degenerate), `c` (a
//! one-dimensional center), `G2`, `F4`, `E6`, `E7`, `E8`.
//!
//! Module recipes (classical ambients) are sums of summands separated by `+`:
//! `Vi` defining module of part `i`, `Vi*` its dual, `Si^k` the `k`-th
//! symmetric power (an `sl_2` part), `Pi` the spin module (an `so_7` part),
//! `1` a trivial line; each may be followed by characters `ej^d` of central
//! parts. Root recipes (any ambient) are sums of items: `ext(k)` the extended
//! diagram without node `k`, `nodes(a,b,..)` a Levi subalgebra, `long` the long
//! roots, `gens(a;b+c;..)` the subalgebra generated by sums of simple root
//! vectors, `cw(k)` a fundamental coweight, `fixed(C4)` the fixed points of an
//! outer involution of `E_6`. The recipe `id` makes the whole ambient the
//! single part.

use super::modules::{self, Block, CompImage};
use super::regular;
use crate::error::{Error, Result};
use crate::liealg::{Component, LieAlgebraModel};
use crate::rootsys::{Family, SimpleType};
use std::fmt;

/// A part of `h`, by name.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartName(pub String);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Classical {
    Sl,
    So,
    Sp,
}

fn split_classical(s: &str) -> Option<(Classical, i64)> {
    let (kind, rest) = if let Some(r) = s.strip_prefix("sl") {
        (Classical::Sl, r)
    } else if let Some(r) = s.strip_prefix("so") {
        (Classical::So, r)
    } else if let Some(r) = s.strip_prefix("sp") {
        (Classical::Sp, r)
    } else {
        return None;
    };
    rest.parse().ok().map(|n| (kind, n))
}

impl PartName {
    pub fn new(s: &str) -> Result<PartName> {
        let p = PartName(s.trim().to_string());
        p.components()?;
        Ok(p)
    }

    /// Simple and central components; empty for a zero part.
    pub fn components(&self) -> Result<Vec<Component>> {
        let s = self.0.as_str();
        if s == "c" {
            return Ok(vec![Component::Center]);
        }
        if s == "0" {
            return Ok(vec![]);
        }
        if let Some((kind, n)) = split_classical(s) {
            let simple = |t| Ok(vec![Component::Simple(t)]);
            return match kind {
                Classical::Sl if n <= 1 => Ok(vec![]),
                Classical::Sl => simple(SimpleType::a(n as usize - 1)),
                Classical::Sp if n % 2 != 0 => Err(Error::Inadmissible(format!("{s}: odd symplectic"))),
                Classical::Sp if n <= 0 => Ok(vec![]),
                Classical::Sp if n == 2 => simple(SimpleType::a(1)),
                Classical::Sp => simple(SimpleType::c(n as usize / 2)),
                Classical::So if n <= 1 => Ok(vec![]),
                Classical::So => match n {
                    2 => Ok(vec![Component::Center]),
                    3 => simple(SimpleType::a(1)),
                    4 => Ok(vec![Component::Simple(SimpleType::a(1)); 2]),
                    n if n % 2 == 1 => simple(SimpleType::b(n as usize / 2)),
                    n => simple(SimpleType::d(n as usize / 2)),
                },
            };
        }
        let t = SimpleType::parse(s)?;
        Ok(vec![Component::Simple(t)])
    }

    pub fn dim(&self) -> usize {
        self.components().map_or(0, |c| c.iter().map(|x| x.dim()).sum())
    }

    /// Defining module of the part, with components starting at `first`.
    fn defining_block(&self, ncomps: usize, first: usize, tag: &str) -> Result<Option<Block>> {
        let s = self.0.as_str();
        if let Some((kind, n)) = split_classical(s) {
            match (kind, n) {
                (_, n) if n <= 0 => return Ok(None),
                (Classical::Sl | Classical::So, 1) => return Ok(Some(Block::trivial(ncomps, 1))),
                (Classical::So, 2) => return Ok(Some(Block::so2(ncomps, first, tag))),
                (Classical::So, 3) => return Block::sym_power(ncomps, first, 2, tag).map(Some),
                (Classical::So, 4) => return Block::tensor_a1(ncomps, first, first + 1, tag).map(Some),
                _ => {}
            }
        }
        match self.components()?.as_slice() {
            [Component::Simple(t)] => Block::defining(ncomps, first, *t, tag).map(Some),
            _ => Err(Error::Unsupported(format!("no defining module for part {s}"))),
        }
    }
}

impl fmt::Display for PartName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Parse an ambient name into a simple type.
pub fn parse_ambient(s: &str) -> Result<SimpleType> {
    let s = s.trim();
    if let Some((kind, n)) = split_classical(s) {
        let bad = || Error::Unsupported(format!("{s} is not a simple ambient algebra"));
        return match kind {
            Classical::Sl if n >= 2 => Ok(SimpleType::a(n as usize - 1)),
            Classical::Sp if n == 2 => Ok(SimpleType::a(1)),
            Classical::Sp if n >= 4 && n % 2 == 0 => Ok(SimpleType::c(n as usize / 2)),
            Classical::So if n >= 5 && n % 2 == 1 => Ok(SimpleType::b(n as usize / 2)),
            Classical::So if n >= 6 => Ok(SimpleType::d(n as usize / 2)),
            _ => Err(bad()),
        };
    }
    SimpleType::parse(s)
}

/// A simple ambient with a completely decomposable subalgebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Piece {
    pub ambient: SimpleType,
    pub parts: Vec<PartName>,
    pub recipe: String,
}

/// Realized part: its components and their images in the ambient.
#[derive(Clone, Debug)]
pub struct RealizedPart {
    pub components: Vec<Component>,
    pub images: Vec<CompImage>,
}

/// Split at top-level `+` (outside brackets and braces).
pub fn split_top(s: &str, sep: char) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth -= 1,
            _ => {}
        }
        if ch == sep && depth == 0 {
            out.push(cur.trim().to_string());
            cur.clear();
        } else {
            cur.push(ch);
        }
    }
    if !cur.trim().is_empty() || !out.is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}

fn parse_usize(s: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse { pos: 0, msg: format!("expected a number, found {s:?}") })
}

fn parse_i64(s: &str) -> Result<i64> {
    s.trim()
        .trim_start_matches('{')
        .trim_end_matches('}')
        .parse()
        .map_err(|_| Error::Parse { pos: 0, msg: format!("expected an integer, found {s:?}") })
}

fn inner<'a>(item: &'a str, head: &str) -> Option<&'a str> {
    item.strip_prefix(head)?.strip_prefix('(')?.strip_suffix(')')
}

impl Piece {
    pub fn new(ambient: SimpleType, parts: Vec<PartName>, recipe: &str) -> Piece {
        Piece { ambient, parts, recipe: recipe.trim().to_string() }
    }

    /// The trivial piece `(g, g)`.
    pub fn identity(t: SimpleType) -> Piece {
        Piece::new(t, vec![PartName(t.classical_name())], "id")
    }

    pub fn h_dim(&self) -> usize {
        self.parts.iter().map(|p| p.dim()).sum()
    }

    fn is_module_recipe(&self) -> bool {
        let first = split_top(&self.recipe, '+');
        first.iter().all(|s| {
            let head = s.split_whitespace().next().unwrap_or("");
            head == "1" || head.starts_with('V') || head.starts_with('S') || head.starts_with('P')
        }) && !self.recipe.is_empty()
    }

    /// Realize every part inside the ambient's Chevalley coordinates.
    pub fn realize(&self) -> Result<Vec<RealizedPart>> {
        let comps_per_part: Vec<Vec<Component>> =
            self.parts.iter().map(|p| p.components()).collect::<Result<_>>()?;
        let firsts: Vec<usize> = comps_per_part
            .iter()
            .scan(0, |acc, c| {
                let f = *acc;
                *acc += c.len();
                Some(f)
            })
            .collect();
        let comps: Vec<Component> = comps_per_part.iter().flatten().copied().collect();
        let images: Vec<CompImage> = if self.recipe == "id" {
            if self.parts.len() != 1 || comps != [Component::Simple(self.ambient)] {
                return Err(Error::Inadmissible("identity recipe needs the ambient as its only part".into()));
            }
            let m = LieAlgebraModel::simple(self.ambient);
            let n = m.dim();
            let unit = |i: usize| {
                let mut v = vec![crate::field::rat(0); n];
                v[i] = crate::field::rat(1);
                v
            };
            vec![CompImage::Hom((0..n).map(unit).collect())]
        } else if self.recipe.is_empty() {
            if !comps.is_empty() {
                return Err(Error::Inadmissible("nonzero parts need a recipe".into()));
            }
            vec![]
        } else if self.is_module_recipe() {
            let blocks = self.module_blocks(&comps, &firsts)?;
            modules::realize(self.ambient, &comps, &blocks)?
        } else {
            self.root_images(&comps)?
        };
        let mut out = Vec::new();
        let mut it = images.into_iter();
        for c in comps_per_part {
            let imgs: Vec<CompImage> = (0..c.len()).map(|_| it.next().unwrap()).collect();
            out.push(RealizedPart { components: c, images: imgs });
        }
        Ok(out)
    }

    fn module_blocks(&self, comps: &[Component], firsts: &[usize]) -> Result<Vec<Block>> {
        let nc = comps.len();
        let mut blocks = Vec::new();
        for summand in split_top(&self.recipe, '+') {
            let mut toks = summand.split_whitespace();
            let head = toks.next().ok_or_else(|| Error::Parse { pos: 0, msg: "empty summand".into() })?;
            let part_of = |s: &str| -> Result<usize> {
                let i = parse_usize(s)?;
                if i >= self.parts.len() {
                    return Err(Error::Inadmissible(format!("recipe refers to missing part {i}")));
                }
                Ok(i)
            };
            let mut block = if head == "1" {
                Some(Block::trivial(nc, 1))
            } else if let Some(rest) = head.strip_prefix('V') {
                let (num, dual) = match rest.strip_suffix('*') {
                    Some(n) => (n, true),
                    None => (rest, false),
                };
                let i = part_of(num)?;
                let b = self.parts[i].defining_block(nc, firsts[i], &format!("V{i}"))?;
                if dual { b.map(|b| b.dual()) } else { b }
            } else if let Some(rest) = head.strip_prefix('S') {
                let (num, k) = rest
                    .split_once('^')
                    .ok_or_else(|| Error::Parse { pos: 0, msg: format!("{head}: expected Si^k") })?;
                let i = part_of(num)?;
                if comps_of(comps, firsts, i) != [Component::Simple(SimpleType::a(1))] {
                    return Err(Error::Inadmissible(format!("{head}: symmetric powers need an sl2 part")));
                }
                Some(Block::sym_power(nc, firsts[i], parse_usize(k)?, head)?)
            } else if let Some(rest) = head.strip_prefix('P') {
                let i = part_of(rest)?;
                if comps_of(comps, firsts, i) != [Component::Simple(SimpleType::b(3))] {
                    return Err(Error::Inadmissible(format!("{head}: spin module needs an so7 part")));
                }
                Some(Block::spin7(nc, firsts[i], head)?)
            } else {
                return Err(Error::Parse { pos: 0, msg: format!("unknown summand {head:?}") });
            };
            for tok in toks {
                let rest = tok
                    .strip_prefix('e')
                    .ok_or_else(|| Error::Parse { pos: 0, msg: format!("unknown character {tok:?}") })?;
                let (num, d) = match rest.split_once('^') {
                    Some((n, d)) => (n, parse_i64(d)?),
                    None => (rest, 1),
                };
                let i = part_of(num)?;
                if comps_of(comps, firsts, i) != [Component::Center] {
                    return Err(Error::Inadmissible(format!("{tok}: characters need a central part")));
                }
                block = block.map(|b| b.with_char(firsts[i], d));
            }
            if let Some(b) = block {
                blocks.push(b);
            }
        }
        Ok(blocks)
    }

    fn root_images(&self, comps: &[Component]) -> Result<Vec<CompImage>> {
        let t = self.ambient;
        let mut produced: Vec<regular::Produced> = Vec::new();
        for item in split_top(&self.recipe, '+') {
            let item = item.as_str();
            if item == "long" {
                produced.extend(regular::regular(t, &regular::long_base(t))?);
            } else if let Some(k) = inner(item, "ext") {
                produced.extend(regular::regular(t, &regular::extended_base(t, parse_usize(k)?)?)?);
            } else if let Some(list) = inner(item, "nodes") {
                let nodes = list.split(',').map(parse_usize).collect::<Result<Vec<_>>>()?;
                produced.extend(regular::regular(t, &regular::node_base(t, &nodes)?)?);
            } else if let Some(k) = inner(item, "cw") {
                produced.push(regular::coweight(t, parse_usize(k)?)?);
            } else if let Some(list) = inner(item, "gens") {
                let sets = list
                    .split(';')
                    .map(|s| s.split('+').map(parse_usize).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                // the generated type is the first simple part not yet produced
                let target = comps
                    .iter()
                    .filter_map(|c| c.simple())
                    .find(|s| {
                        s.rank == sets.len()
                            && !produced.iter().any(|(p, _)| p.simple() == Some(*s))
                    })
                    .ok_or_else(|| Error::Inadmissible(format!("{item}: no matching part")))?;
                produced.push(regular::folded(t, target, &sets)?);
            } else if item == "fixed(C4)" {
                if t != SimpleType::e(6) {
                    return Err(Error::Unsupported(format!("{item} inside {t}")));
                }
                produced.push(regular::e6_c4()?);
            } else {
                return Err(Error::Parse { pos: 0, msg: format!("unknown recipe item {item:?}") });
            }
        }
        let mut used = vec![false; produced.len()];
        let mut out = Vec::new();
        for c in comps {
            let j = (0..produced.len())
                .find(|&j| !used[j] && same_component(&produced[j].0, c))
                .ok_or_else(|| Error::Inadmissible(format!("recipe produces no component {c}")))?;
            used[j] = true;
            out.push(produced[j].1.clone());
        }
        if used.iter().any(|u| !u) {
            return Err(Error::Inadmissible("recipe produces components not listed as parts".into()));
        }
        Ok(out)
    }
}

/// A module summand split into its head and central characters.
struct Summand {
    head: String,
    chars: Vec<(usize, i64)>,
}

fn parse_summands(recipe: &str) -> Result<Vec<Summand>> {
    split_top(recipe, '+')
        .iter()
        .map(|s| {
            let mut toks = s.split_whitespace();
            let head = toks.next().unwrap_or("").to_string();
            let chars = toks
                .map(|tok| {
                    let rest = tok
                        .strip_prefix('e')
                        .ok_or_else(|| Error::Parse { pos: 0, msg: format!("unknown character {tok:?}") })?;
                    Ok(match rest.split_once('^') {
                        Some((n, d)) => (parse_usize(n)?, parse_i64(d)?),
                        None => (parse_usize(rest)?, 1),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Summand { head, chars })
        })
        .collect()
}

fn head_part(head: &str) -> Option<usize> {
    if !head.starts_with(['V', 'S', 'P']) {
        return None;
    }
    let digits: String = head
        .trim_start_matches(['V', 'S', 'P'])
        .chars()
        .take_while(|c| c.is_ascii_digit())
        .collect();
    digits.parse().ok()
}

fn dual_head(head: &str) -> String {
    match head.strip_suffix('*') {
        Some(h) => h.to_string(),
        None if head.starts_with('V') => format!("{head}*"),
        None => head.to_string(),
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

impl Piece {
    fn summand_dim(&self, head: &str) -> usize {
        if head == "1" {
            return 1;
        }
        let Some(i) = head_part(head) else { return 0 };
        if let Some((_, k)) = head.split_once('^') {
            return k.parse::<usize>().map_or(0, |k| k + 1);
        }
        if head.starts_with('P') {
            return 8;
        }
        let name = &self.parts[i].0;
        match split_classical(name) {
            Some((_, n)) => n.max(0) as usize,
            None => SimpleType::parse(name).ok().and_then(|t| t.defining_dim()).unwrap_or(0),
        }
    }

    /// Replace the central parts of a module recipe by the smallest torus of
    /// the ambient's block-scalar kind containing them: trace-zero scalars on
    /// the blocks they move (special linear ambients), or one scalar per dual
    /// pair of moved blocks (orthogonal and symplectic ambients).
    pub fn saturate(&self) -> Result<Piece> {
        // An so2 part acts through its own summand, a block torus already.
        let centers: Vec<usize> = (0..self.parts.len()).filter(|&i| self.parts[i].0 == "c").collect();
        if centers.is_empty() || !self.is_module_recipe() {
            return Ok(self.clone());
        }
        let summands = parse_summands(&self.recipe)?;
        let support: Vec<usize> = (0..summands.len())
            .filter(|&i| summands[i].chars.iter().any(|&(_, d)| d != 0) && self.summand_dim(&summands[i].head) > 0)
            .collect();
        let linear = self.ambient.family == Family::A;
        let mut new_chars: Vec<Vec<(usize, i64)>> = vec![vec![]; summands.len()];
        let hull_dim;
        if linear {
            hull_dim = support.len().saturating_sub(1);
            for (j, w) in support.windows(2).enumerate() {
                let (a, b) = (self.summand_dim(&summands[w[0]].head) as i64, self.summand_dim(&summands[w[1]].head) as i64);
                let g = gcd(a, b);
                new_chars[w[0]].push((j, b / g));
                new_chars[w[1]].push((j, -a / g));
            }
        } else {
            let mut used = vec![false; summands.len()];
            let mut pairs = Vec::new();
            for &i in &support {
                if used[i] {
                    continue;
                }
                used[i] = true;
                let neg: Vec<(usize, i64)> = summands[i].chars.iter().map(|&(p, d)| (p, -d)).collect();
                let partner = support
                    .iter()
                    .copied()
                    .filter(|&j| !used[j] && summands[j].chars == neg)
                    .find(|&j| summands[j].head == dual_head(&summands[i].head))
                    .or_else(|| {
                        support.iter().copied().find(|&j| {
                            !used[j] && summands[j].chars == neg && summands[j].head == summands[i].head
                        })
                    })
                    .ok_or_else(|| Error::Inadmissible(format!("{self}: summand {} has no dual partner", i)))?;
                used[partner] = true;
                pairs.push((i, partner));
            }
            hull_dim = pairs.len();
            for (j, &(a, b)) in pairs.iter().enumerate() {
                new_chars[a].push((j, 1));
                new_chars[b].push((j, -1));
            }
        }
        if hull_dim == centers.len() {
            return Ok(self.clone());
        }
        if hull_dim < centers.len() {
            return Err(Error::Inadmissible(format!("{self}: central parts are dependent")));
        }
        let kept: Vec<usize> = (0..self.parts.len()).filter(|i| !centers.contains(i)).collect();
        let renum = |i: usize| kept.iter().position(|&k| k == i).unwrap();
        let mut parts: Vec<PartName> = kept.iter().map(|&i| self.parts[i].clone()).collect();
        let base = parts.len();
        parts.extend((0..hull_dim).map(|_| PartName("c".into())));
        let mut texts = Vec::new();
        for (s, chars) in summands.iter().zip(&new_chars) {
            let mut head = s.head.clone();
            if let Some(i) = head_part(&head) {
                let old = i.to_string();
                let pos = head.find(&old).unwrap();
                head.replace_range(pos..pos + old.len(), &renum(i).to_string());
            }
            let mut t = head;
            for &(j, d) in chars {
                if d == 1 {
                    t.push_str(&format!(" e{}", base + j));
                } else {
                    t.push_str(&format!(" e{}^{}", base + j, d));
                }
            }
            texts.push(t);
        }
        Ok(Piece::new(self.ambient, parts, &texts.join(" + ")))
    }
}

fn comps_of(comps: &[Component], firsts: &[usize], i: usize) -> Vec<Component> {
    let end = firsts.get(i + 1).copied().unwrap_or(comps.len());
    comps[firsts[i]..end].to_vec()
}

fn same_component(a: &Component, b: &Component) -> bool {
    match (a, b) {
        (Component::Simple(x), Component::Simple(y)) => x.is_isomorphic(y),
        (Component::Center, Component::Center) => true,
        _ => false,
    }
}

impl fmt::Display for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.0.clone()).collect();
        write!(f, "{}[{}: {}]", self.ambient.classical_name(), parts.join(","), self.recipe)
    }
}

/// Whether an ambient name is one of the classical families' names.
pub fn is_classical_family(t: SimpleType) -> bool {
    matches!(t.family, Family::A | Family::B | Family::C | Family::D)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Vec<PartName> {
        s.split(',').map(|x| PartName::new(x).unwrap()).collect()
    }

    #[test]
    fn part_components() {
        assert_eq!(PartName::new("so4").unwrap().components().unwrap().len(), 2);
        assert_eq!(PartName::new("so2").unwrap().components().unwrap(), vec![Component::Center]);
        assert!(PartName::new("sp0").unwrap().components().unwrap().is_empty());
        assert_eq!(PartName::new("sp2").unwrap().dim(), 3);
        assert!(PartName::new("sp3").is_err());
    }

    #[test]
    fn classical_pieces() {
        let cases = [
            ("sl3", "so3", "V0"),
            ("sl4", "so4", "V0"),
            ("sl5", "sl2,sl3,c", "V0 e2^3 + V1 e2^-2"),
            ("sp4", "sl2", "S0^3"),
            ("so9", "so7", "P0 + 1"),
            ("so7", "G2", "V0"),
            ("so8", "G2", "V0 + 1"),
            ("so11", "sl2,so7", "S0^2 + P1"),
            ("sp6", "sp4,c", "V0 + 1 e1 + 1 e1^-1"),
            ("so7", "so3,so4", "V0 + V1"),
            ("so7", "so5,so2", "V0 + V1"),
            ("sp8", "sl4", "V0 + V0*"),
            ("sl2", "so2", "V0"),
        ];
        for (a, parts, recipe) in cases {
            let piece = Piece::new(parse_ambient(a).unwrap(), p(parts), recipe);
            let r = piece.realize().unwrap_or_else(|e| panic!("{piece}: {e}"));
            assert_eq!(r.len(), piece.parts.len());
        }
    }

    #[test]
    fn exceptional_pieces() {
        let cases = [
            ("G2", "sl3", "long"),
            ("G2", "sl2,sl2", "ext(2)"),
            ("F4", "so9", "ext(4)"),
            ("E6", "so10,c", "nodes(2,3,4,5,6) + cw(1)"),
            ("E6", "so9,c", "gens(6;5;4;2+3) + cw(1)"),
            ("E6", "F4", "gens(2;4;3+5;1+6)"),
            ("E6", "sp8", "fixed(C4)"),
            ("E7", "E6", "nodes(1,2,3,4,5,6)"),
        ];
        for (a, parts, recipe) in cases {
            let piece = Piece::new(parse_ambient(a).unwrap(), p(parts), recipe);
            piece.realize().unwrap_or_else(|e| panic!("{piece}: {e}"));
        }
    }

    #[test]
    fn saturation() {
        let z = Piece::new(SimpleType::a(3), p("sl2,c"), "V0 e1 + 1 e1^-1 + 1 e1^-1");
        let hull = z.saturate().unwrap();
        assert_eq!(hull.parts.len(), 3);
        assert_eq!(hull.recipe, "V0 e1 + 1 e1^-2 e2 + 1 e2^-1");
        hull.realize().unwrap();
        let sat = Piece::new(SimpleType::a(4), p("sl2,sl3,c"), "V0 e2^3 + V1 e2^-2");
        assert_eq!(sat.saturate().unwrap(), sat);
        let so = Piece::new(SimpleType::b(4), p("sl4,c"), "V0 e1 + V0* e1^-1 + 1");
        assert_eq!(so.saturate().unwrap(), so);
    }

    #[test]
    fn bad_recipes() {
        let piece = Piece::new(SimpleType::c(2), p("sl2"), "S0^2");
        assert!(piece.realize().is_err());
        let piece = Piece::new(SimpleType::a(2), p("sl2"), "X0");
        assert!(matches!(piece.realize(), Err(Error::Parse { .. })));
        assert!(parse_ambient("so4").is_err());
    }
}
