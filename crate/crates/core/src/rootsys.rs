//! Root systems of simple types A–G and Chevalley structure constants.
//!
//! Roots are integer vectors in the basis of simple roots. Simple roots follow
//! Bourbaki numbering. The Cartan matrix convention is
//! `cartan[i][j] = <alpha_j, alpha_i^vee>`.
//!
//! Sign convention for the structure constants `N(a, b)` (with
//! `[e_a, e_b] = N(a, b) e_{a+b}`): positive roots are ordered by height, then
//! lexicographically on their coordinates. For every non-simple positive root
//! `x` the extraspecial pair is `(alpha_i, x - alpha_i)` with `i` minimal, and
//! `N` on it is `+(p + 1)`. All other constants follow from the relations
//! `N(a,b) = -N(b,a)`, `N(-a,-b) = -N(a,b)`, the cyclic rule for triples
//! summing to zero and the four-root rule.

use crate::error::{Error, Result};
use num_rational::Ratio;
use std::collections::HashMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// A simple Lie algebra type, e.g. `A2` (= sl_3) or `E8`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    pub family: Family,
    pub rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(SimpleType { family, rank })
        } else {
            Err(Error::Inadmissible(format!(
                "{}{} is not a simple type",
                family.letter(),
                rank
            )))
        }
    }

    pub fn a(rank: usize) -> Self {
        Self::new(Family::A, rank).unwrap()
    }
    pub fn b(rank: usize) -> Self {
        Self::new(Family::B, rank).unwrap()
    }
    pub fn c(rank: usize) -> Self {
        Self::new(Family::C, rank).unwrap()
    }
    pub fn d(rank: usize) -> Self {
        Self::new(Family::D, rank).unwrap()
    }
    pub fn e(rank: usize) -> Self {
        Self::new(Family::E, rank).unwrap()
    }
    pub fn f4() -> Self {
        Self::new(Family::F, 4).unwrap()
    }
    pub fn g2() -> Self {
        Self::new(Family::G, 2).unwrap()
    }

    /// Number of positive roots.
    pub fn n_pos(&self) -> usize {
        let r = self.rank;
        match self.family {
            Family::A => r * (r + 1) / 2,
            Family::B | Family::C => r * r,
            Family::D => r * (r - 1),
            Family::E => [36, 63, 120][r - 6],
            Family::F => 24,
            Family::G => 6,
        }
    }

    pub fn dim(&self) -> usize {
        2 * self.n_pos() + self.rank
    }

    pub fn dual_coxeter(&self) -> i64 {
        let r = self.rank as i64;
        match self.family {
            Family::A => r + 1,
            Family::B => 2 * r - 1,
            Family::C => r + 1,
            Family::D => 2 * r - 2,
            Family::E => [12, 18, 30][self.rank - 6],
            Family::F => 9,
            Family::G => 4,
        }
    }

    /// Representative of the isomorphism class: `D3 -> A3`, `C2 -> B2`.
    pub fn canonical(&self) -> Self {
        match (self.family, self.rank) {
            (Family::D, 3) => SimpleType::a(3),
            (Family::C, 2) => SimpleType::b(2),
            _ => *self,
        }
    }

    pub fn is_isomorphic(&self, other: &SimpleType) -> bool {
        self.canonical() == other.canonical()
    }

    pub fn is_classical(&self) -> bool {
        matches!(self.family, Family::A | Family::B | Family::C | Family::D)
    }

    /// Dimension of the defining representation for classical types.
    pub fn defining_dim(&self) -> Option<usize> {
        let r = self.rank;
        match self.family {
            Family::A => Some(r + 1),
            Family::B => Some(2 * r + 1),
            Family::C | Family::D => Some(2 * r),
            _ => None,
        }
    }

    /// Conventional matrix-algebra name: `sl3`, `so7`, `sp4`, `G2`.
    pub fn classical_name(&self) -> String {
        let r = self.rank;
        match self.family {
            Family::A => format!("sl{}", r + 1),
            Family::B => format!("so{}", 2 * r + 1),
            Family::C => format!("sp{}", 2 * r),
            Family::D => format!("so{}", 2 * r),
            _ => self.to_string(),
        }
    }

    /// Parse `A2`, `sl3`, `so7`, `sp4`, `G2`, ... Small orthogonal and
    /// symplectic names map to their isomorphic simple type
    /// (`so3 = sp2 = A1`, `so5 = B2`); `so6` stays `D3`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse { pos: 0, msg: format!("unknown simple type '{s}'") };
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        if let Some(t) = s.strip_prefix("sl") {
            let n = num(t)?;
            return if n >= 2 { SimpleType::new(Family::A, n - 1) } else { Err(bad()) };
        }
        if let Some(t) = s.strip_prefix("sp") {
            let n = num(t)?;
            if n % 2 != 0 || n < 2 {
                return Err(bad());
            }
            return if n == 2 { Ok(SimpleType::a(1)) } else { SimpleType::new(Family::C, n / 2) };
        }
        if let Some(t) = s.strip_prefix("so") {
            let n = num(t)?;
            return match n {
                3 => Ok(SimpleType::a(1)),
                n if n >= 5 && n % 2 == 1 => SimpleType::new(Family::B, n / 2),
                n if n >= 6 => SimpleType::new(Family::D, n / 2),
                _ => Err(bad()),
            };
        }
        let mut chars = s.chars();
        let fam = match chars.next() {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(bad()),
        };
        SimpleType::new(fam, num(chars.as_str())?)
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// Relabelings of the simple roots of `from` onto those of `to`: every `s`
/// with `cartan(from)[s i][s j] = cartan(to)[i][j]`. Empty unless the types
/// are isomorphic; for `from == to` these are the diagram automorphisms.
pub fn cartan_relabelings(from: SimpleType, to: SimpleType) -> Vec<Vec<usize>> {
    if from.rank != to.rank || from.canonical() != to.canonical() {
        return Vec::new();
    }
    let (a, b) = (cartan_matrix(from), cartan_matrix(to));
    let r = a.len();
    let ok = |s: &[usize]| (0..r).all(|i| (0..r).all(|j| a[s[i]][s[j]] == b[i][j]));
    let mut candidates = Vec::new();
    if r <= 6 {
        let mut p: Vec<usize> = (0..r).collect();
        fn go(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if k == p.len() {
                out.push(p.clone());
                return;
            }
            for i in k..p.len() {
                p.swap(k, i);
                go(k + 1, p, out);
                p.swap(k, i);
            }
        }
        go(0, &mut p, &mut candidates);
    } else {
        // Beyond rank 6 automorphisms are the reversal of type A or a
        // transposition of type D.
        candidates.push((0..r).collect());
        candidates.push((0..r).rev().collect());
        for i in 0..r {
            for j in i + 1..r {
                let mut s: Vec<usize> = (0..r).collect();
                s.swap(i, j);
                candidates.push(s);
            }
        }
    }
    candidates.retain(|s| ok(s));
    candidates.dedup();
    candidates
}

/// Cartan matrix, `cartan[i][j] = <alpha_j, alpha_i^vee>`, Bourbaki numbering.
pub fn cartan_matrix(t: SimpleType) -> Vec<Vec<i64>> {
    let r = t.rank;
    let mut a = vec![vec![0i64; r]; r];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let link = |a: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match t.family {
        Family::A => (0..r - 1).for_each(|i| link(&mut a, i, i + 1)),
        Family::B => {
            (0..r - 1).for_each(|i| link(&mut a, i, i + 1));
            // alpha_r short
            a[r - 1][r - 2] = -2;
        }
        Family::C => {
            (0..r - 1).for_each(|i| link(&mut a, i, i + 1));
            // alpha_r long
            a[r - 2][r - 1] = -2;
        }
        Family::D => {
            (0..r - 2).for_each(|i| link(&mut a, i, i + 1));
            link(&mut a, r - 3, r - 1);
        }
        Family::E => {
            // 1-3-4-5-...; 2 attached to 4
            link(&mut a, 0, 2);
            link(&mut a, 1, 3);
            (2..r - 1).for_each(|i| link(&mut a, i, i + 1));
        }
        Family::F => {
            link(&mut a, 0, 1);
            link(&mut a, 2, 3);
            a[1][2] = -1;
            a[2][1] = -2;
        }
        Family::G => {
            // alpha_1 short, alpha_2 long
            a[0][1] = -3;
            a[1][0] = -1;
        }
    }
    a
}

/// Squared lengths `(alpha_i, alpha_i)` of the simple roots, short roots of length 2.
pub fn simple_root_sq_lengths(t: SimpleType) -> Vec<i64> {
    let r = t.rank;
    match t.family {
        Family::A | Family::D | Family::E => vec![2; r],
        Family::B => (0..r).map(|i| if i == r - 1 { 2 } else { 4 }).collect(),
        Family::C => (0..r).map(|i| if i == r - 1 { 4 } else { 2 }).collect(),
        Family::F => vec![4, 4, 2, 2],
        Family::G => vec![2, 6],
    }
}

pub type Root = Vec<i64>;

/// A (possibly reducible) reduced root system with Chevalley structure constants.
///
/// Own coordinates are in the basis of this system's simple roots. Systems
/// obtained by [`RootSystem::subsystem`] also carry coordinates in the
/// ambient system, and inherit its structure constants.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub components: Vec<SimpleType>,
    pub cartan: Vec<Vec<i64>>,
    pub sq_len: Vec<i64>,
    /// Simple roots in ambient coordinates.
    pub simple_roots: Vec<Root>,
    /// Positive roots then their negatives, own coordinates.
    pub all_roots: Vec<Root>,
    /// Same order as `all_roots`, ambient coordinates.
    pub ambient_roots: Vec<Root>,
    n_pos: usize,
    index: HashMap<Root, usize>,
    structure: HashMap<(usize, usize), i64>,
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn n_pos(&self) -> usize {
        self.n_pos
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.all_roots[..self.n_pos]
    }

    pub fn dim(&self) -> usize {
        self.all_roots.len() + self.rank()
    }

    pub fn simple_type(&self) -> Option<SimpleType> {
        (self.components.len() == 1).then(|| self.components[0])
    }

    pub fn index_of(&self, root: &[i64]) -> Option<usize> {
        self.index.get(root).copied()
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        self.index.contains_key(v)
    }

    /// Index of the negative of root `i`.
    pub fn neg_index(&self, i: usize) -> usize {
        if i < self.n_pos {
            i + self.n_pos
        } else {
            i - self.n_pos
        }
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.n_pos
    }

    pub fn height(root: &[i64]) -> i64 {
        root.iter().sum()
    }

    /// Inner product in own coordinates.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let r = self.rank();
        let mut s = 0;
        for i in 0..r {
            if a[i] == 0 {
                continue;
            }
            for j in 0..r {
                if b[j] != 0 {
                    // (alpha_i, alpha_j) = |alpha_i|^2 / 2 * cartan[i][j]
                    s += a[i] * b[j] * self.sq_len[i] * self.cartan[i][j];
                }
            }
        }
        s / 2
    }

    /// `<a, alpha_i^vee>`.
    pub fn pairing_simple(&self, a: &[i64], i: usize) -> i64 {
        (0..self.rank()).map(|j| a[j] * self.cartan[i][j]).sum()
    }

    /// Coordinates of the coroot `a^vee` in the basis of simple coroots.
    pub fn coroot(&self, a: &[i64]) -> Vec<i64> {
        let len = self.inner(a, a);
        (0..self.rank())
            .map(|i| {
                let v = a[i] * self.sq_len[i];
                debug_assert_eq!(v % len, 0);
                v / len
            })
            .collect()
    }

    /// Structure constant `N(a, b)` by root index; zero if `a + b` is not a root.
    pub fn structure_constant(&self, a: usize, b: usize) -> i64 {
        self.structure.get(&(a, b)).copied().unwrap_or(0)
    }

    /// All nonzero `(a, b, N)` with `a + b` a root.
    pub fn structure_entries(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.structure.iter().map(|(&(a, b), &n)| (a, b, n))
    }

    /// Sum of two roots as an index, if it is a root.
    pub fn sum_index(&self, a: usize, b: usize) -> Option<usize> {
        let s: Root = self.all_roots[a]
            .iter()
            .zip(&self.all_roots[b])
            .map(|(x, y)| x + y)
            .collect();
        self.index_of(&s)
    }

    /// `(dim, rank, number of positive roots)`.
    pub fn numeric_invariants(&self) -> (usize, usize, usize) {
        (self.dim(), self.rank(), self.n_pos)
    }

    /// The highest root (own coordinates), for an irreducible system.
    pub fn highest_root(&self) -> Root {
        self.positive_roots()
            .iter()
            .max_by_key(|r| Self::height(r))
            .cloned()
            .expect("nonempty")
    }

    /// Long roots: those of maximal length within their component.
    pub fn is_long(&self, i: usize) -> bool {
        let r = &self.all_roots[i];
        let l = self.inner(r, r);
        let max = self
            .all_roots
            .iter()
            .filter(|s| self.inner(s, r) != 0 || *s == r)
            .map(|s| self.inner(s, s))
            .max()
            .unwrap_or(l);
        l == max
    }

    /// Build the root system of a simple type.
    pub fn build(t: SimpleType) -> RootSystem {
        let cartan = cartan_matrix(t);
        let sq_len = simple_root_sq_lengths(t);
        let r = t.rank;
        let simple_roots: Vec<Root> = (0..r).map(|i| unit(r, i)).collect();
        let mut rs = Self::from_cartan(vec![t], cartan, sq_len, simple_roots);
        rs.structure = compute_structure_constants(&rs);
        rs
    }

    fn from_cartan(
        components: Vec<SimpleType>,
        cartan: Vec<Vec<i64>>,
        sq_len: Vec<i64>,
        simple_roots: Vec<Root>,
    ) -> RootSystem {
        let r = cartan.len();
        let positive = positive_roots_by_strings(&cartan);
        let n_pos = positive.len();
        let mut all = positive.clone();
        all.extend(positive.iter().map(|p| p.iter().map(|x| -x).collect::<Root>()));
        let index = all.iter().enumerate().map(|(i, a)| (a.clone(), i)).collect();
        let amb_dim = simple_roots.first().map_or(0, |s| s.len());
        let ambient_roots = all
            .iter()
            .map(|a| {
                let mut v = vec![0i64; amb_dim];
                for i in 0..r {
                    for (x, s) in v.iter_mut().zip(&simple_roots[i]) {
                        *x += a[i] * s;
                    }
                }
                v
            })
            .collect();
        RootSystem {
            components,
            cartan,
            sq_len,
            simple_roots,
            all_roots: all,
            ambient_roots,
            n_pos,
            index,
            structure: HashMap::new(),
        }
    }

    /// The closed subsystem with base `chosen` (roots in this system's own
    /// coordinates), with structure constants inherited from `self`.
    pub fn subsystem(&self, chosen: &[Root]) -> Result<RootSystem> {
        let r = self.rank();
        for c in chosen {
            if c.len() != r || !self.is_root(c) {
                return Err(Error::Inadmissible(format!("{c:?} is not a root")));
            }
        }
        let as_rows: Vec<Vec<_>> = chosen
            .iter()
            .map(|c| c.iter().map(|&x| crate::field::rat(x)).collect())
            .collect();
        if crate::linalg::exact_rank(&as_rows) != chosen.len() {
            return Err(Error::Inadmissible("chosen roots are linearly dependent".into()));
        }
        let k = chosen.len();
        let cartan: Vec<Vec<i64>> = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| 2 * self.inner(&chosen[j], &chosen[i]) / self.inner(&chosen[i], &chosen[i]))
                    .collect()
            })
            .collect();
        for i in 0..k {
            for j in 0..k {
                if i != j {
                    let d: Root = chosen[i].iter().zip(&chosen[j]).map(|(a, b)| a - b).collect();
                    if self.is_root(&d) {
                        return Err(Error::Inadmissible(
                            "chosen roots are not a base: a difference is a root".into(),
                        ));
                    }
                }
            }
        }
        let sq_len: Vec<i64> = chosen.iter().map(|c| self.inner(c, c)).collect();
        let components = classify_cartan(&cartan, &sq_len)?;
        let mut sub = Self::from_cartan(components, cartan, sq_len, chosen.to_vec());
        // closedness: a + b root of self  =>  root of sub
        let amb_index: Vec<usize> = sub
            .ambient_roots
            .iter()
            .map(|a| self.index_of(a).expect("subsystem root is a root"))
            .collect();
        let mut structure = HashMap::new();
        for (i, &ai) in amb_index.iter().enumerate() {
            for (j, &aj) in amb_index.iter().enumerate() {
                if let Some(s) = self.sum_index(ai, aj) {
                    if sub.sum_index(i, j).is_none() {
                        return Err(Error::Inadmissible(
                            "generated subsystem is not closed".into(),
                        ));
                    }
                    structure.insert((i, j), self.structure_constant(ai, aj));
                    let _ = s;
                }
            }
        }
        sub.structure = structure;
        Ok(sub)
    }

    /// Base of the subsystem of long roots (for G2 and F4 this gives A2 and D4).
    pub fn long_root_base(&self) -> Vec<Root> {
        let long: Vec<usize> = (0..self.n_pos).filter(|&i| self.is_long(i)).collect();
        long.iter()
            .filter(|&&x| {
                !long.iter().any(|&y| {
                    let d: Root = self.all_roots[x]
                        .iter()
                        .zip(&self.all_roots[y])
                        .map(|(a, b)| a - b)
                        .collect();
                    d.iter().all(|&c| c >= 0)
                        && d.iter().any(|&c| c > 0)
                        && self.index_of(&d).map_or(false, |di| long.contains(&di))
                })
            })
            .map(|&x| self.all_roots[x].clone())
            .collect()
    }

    /// Deterministic text table, one line per nonzero bracket of root vectors.
    pub fn structure_table(&self) -> String {
        let fmt_root = |r: &Root| {
            let parts: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            format!("[{}]", parts.join(","))
        };
        let mut out = String::new();
        for a in 0..self.all_roots.len() {
            for b in 0..self.all_roots.len() {
                let n = self.structure_constant(a, b);
                if n != 0 {
                    let s = self.sum_index(a, b).unwrap();
                    out.push_str(&format!(
                        "{} {} {} {}\n",
                        fmt_root(&self.all_roots[a]),
                        fmt_root(&self.all_roots[b]),
                        n,
                        fmt_root(&self.all_roots[s])
                    ));
                }
            }
        }
        out
    }
}

fn unit(r: usize, i: usize) -> Root {
    let mut v = vec![0; r];
    v[i] = 1;
    v
}

/// Positive roots via root strings, sorted by height then lexicographically.
fn positive_roots_by_strings(cartan: &[Vec<i64>]) -> Vec<Root> {
    let r = cartan.len();
    let mut by_height: Vec<Vec<Root>> = vec![(0..r).map(|i| unit(r, i)).collect()];
    let mut known: std::collections::HashSet<Root> = by_height[0].iter().cloned().collect();
    loop {
        let mut next = Vec::new();
        for beta in by_height.last().unwrap() {
            for i in 0..r {
                let mut q = 0;
                let mut cur = beta.clone();
                loop {
                    cur[i] -= 1;
                    if known.contains(&cur) {
                        q += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..r).map(|j| beta[j] * cartan[i][j]).sum();
                if q - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        by_height.push(next);
    }
    let mut all: Vec<Root> = by_height.into_iter().flatten().collect();
    all.sort_by(|a, b| RootSystem::height(a).cmp(&RootSystem::height(b)).then(a.cmp(b)));
    all
}

type Q = Ratio<i64>;

fn compute_structure_constants(rs: &RootSystem) -> HashMap<(usize, usize), i64> {
    let n_pos = rs.n_pos;
    let roots = &rs.all_roots;
    let r = rs.rank();
    let sq = |i: usize| rs.inner(&roots[i], &roots[i]);
    let diff = |a: usize, b: usize| -> Option<usize> {
        let d: Root = roots[a].iter().zip(&roots[b]).map(|(x, y)| x - y).collect();
        rs.index_of(&d)
    };
    // p: largest integer with beta - p*alpha a root
    let p_of = |alpha: usize, beta: usize| -> i64 {
        let mut p = 0;
        let mut cur = roots[beta].clone();
        loop {
            for (c, a) in cur.iter_mut().zip(&roots[alpha]) {
                *c -= a;
            }
            if rs.is_root(&cur) {
                p += 1;
            } else {
                return p;
            }
        }
    };

    let mut pos: HashMap<(usize, usize), i64> = HashMap::new();

    // N(a, b) for arbitrary roots, given the positive table for lower heights.
    fn general(
        rs: &RootSystem,
        pos: &HashMap<(usize, usize), i64>,
        a: usize,
        b: usize,
    ) -> i64 {
        let n_pos = rs.n_pos;
        let Some(s) = rs.sum_index(a, b) else {
            return 0;
        };
        let pa = a < n_pos;
        let pb = b < n_pos;
        if pa && pb {
            return *pos.get(&(a, b)).expect("positive pair computed");
        }
        if !pa && !pb {
            return -general(rs, pos, rs.neg_index(a), rs.neg_index(b));
        }
        let c = rs.neg_index(s);
        let sq = |i: usize| rs.inner(&rs.all_roots[i], &rs.all_roots[i]);
        let pc = c < n_pos;
        let v = if pc == pb {
            Q::new(sq(c), sq(a)) * Q::from(general(rs, pos, b, c))
        } else {
            Q::new(sq(c), sq(b)) * Q::from(general(rs, pos, c, a))
        };
        assert!(v.is_integer());
        v.to_integer()
    }

    for xi in 0..n_pos {
        if RootSystem::height(&roots[xi]) == 1 {
            continue;
        }
        // extraspecial pair
        let i_min = (0..r)
            .find(|&i| diff(xi, i_index(rs, i)).is_some())
            .expect("non-simple root has a simple predecessor");
        let alpha = i_index(rs, i_min);
        let beta = diff(xi, alpha).unwrap();
        let n_ab = p_of(alpha, beta) + 1;
        pos.insert((alpha, beta), n_ab);
        pos.insert((beta, alpha), -n_ab);
        // remaining special pairs
        for zeta in 0..n_pos {
            let Some(eta) = diff(xi, zeta) else { continue };
            if eta >= n_pos || zeta >= eta || zeta == alpha || zeta == beta {
                continue;
            }
            let m_zeta = rs.neg_index(zeta);
            let m_eta = rs.neg_index(eta);
            let mut acc = Q::from(0);
            if let Some(bz) = rs.sum_index(beta, m_zeta) {
                let t = general(rs, &pos, beta, m_zeta) * general(rs, &pos, alpha, m_eta);
                acc += Q::new(t, sq(bz));
            }
            if let Some(az) = rs.sum_index(alpha, m_zeta) {
                let t = general(rs, &pos, m_zeta, alpha) * general(rs, &pos, beta, m_eta);
                acc += Q::new(t, sq(az));
            }
            let n = acc * Q::from(sq(xi)) / Q::from(n_ab);
            assert!(n.is_integer(), "non-integral structure constant");
            let n = n.to_integer();
            pos.insert((zeta, eta), n);
            pos.insert((eta, zeta), -n);
        }
    }

    let total = roots.len();
    let mut out = HashMap::new();
    for a in 0..total {
        for b in 0..total {
            if rs.sum_index(a, b).is_some() {
                out.insert((a, b), general(rs, &pos, a, b));
            }
        }
    }
    out
}

fn i_index(rs: &RootSystem, i: usize) -> usize {
    rs.index_of(&unit(rs.rank(), i)).unwrap()
}

/// Identify the simple components of a Cartan matrix.
pub fn classify_cartan(cartan: &[Vec<i64>], sq_len: &[i64]) -> Result<Vec<SimpleType>> {
    let k = cartan.len();
    let mut seen = vec![false; k];
    let mut out = Vec::new();
    for start in 0..k {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut idx = 0;
        while idx < comp.len() {
            let i = comp[idx];
            for j in 0..k {
                if !seen[j] && cartan[i][j] != 0 {
                    seen[j] = true;
                    comp.push(j);
                }
            }
            idx += 1;
        }
        let sub: Vec<Vec<i64>> = comp.iter().map(|&i| comp.iter().map(|&j| cartan[i][j]).collect()).collect();
        let lens: Vec<i64> = comp.iter().map(|&i| sq_len[i]).collect();
        out.push(identify_irreducible(&sub, &lens)?);
    }
    out.sort();
    Ok(out)
}

fn identify_irreducible(cartan: &[Vec<i64>], sq_len: &[i64]) -> Result<SimpleType> {
    let r = cartan.len();
    let max = *sq_len.iter().max().unwrap();
    let short = sq_len.iter().filter(|&&l| l < max).count();
    let n = positive_roots_by_strings(cartan).len();
    let candidates: Vec<SimpleType> = [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G]
        .into_iter()
        .filter_map(|f| SimpleType::new(f, r).ok())
        .collect();
    for t in candidates {
        if t.n_pos() != n {
            continue;
        }
        let lens = simple_root_sq_lengths(t);
        let tmax = *lens.iter().max().unwrap();
        let tshort = lens.iter().filter(|&&l| l < tmax).count();
        if tshort == short && (short == 0) == (t.family != Family::B && t.family != Family::C && t.family != Family::F && t.family != Family::G) {
            return Ok(t.canonical());
        }
    }
    Err(Error::Inadmissible("unrecognised Cartan matrix".into()))
}

/// A permutation `perm` with `cartan[perm[i]][perm[j]] == target[i][j]`.
pub fn match_cartan(cartan: &[Vec<i64>], target: &[Vec<i64>]) -> Option<Vec<usize>> {
    let k = target.len();
    if cartan.len() != k {
        return None;
    }
    let mut perm = Vec::with_capacity(k);
    let mut used = vec![false; k];
    fn go(
        cartan: &[Vec<i64>],
        target: &[Vec<i64>],
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let i = perm.len();
        if i == target.len() {
            return true;
        }
        for c in 0..target.len() {
            if used[c] {
                continue;
            }
            let ok = (0..i).all(|j| {
                cartan[c][perm[j]] == target[i][j] && cartan[perm[j]][c] == target[j][i]
            });
            if ok {
                used[c] = true;
                perm.push(c);
                if go(cartan, target, perm, used) {
                    return true;
                }
                perm.pop();
                used[c] = false;
            }
        }
        false
    }
    go(cartan, target, &mut perm, &mut used).then_some(perm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    /// Independent oracle: close the simple roots under simple reflections.
    fn closure_count(t: SimpleType) -> usize {
        let a = cartan_matrix(t);
        let r = t.rank;
        let mut set: HashSet<Root> = (0..r).map(|i| unit(r, i)).collect();
        let mut frontier: Vec<Root> = set.iter().cloned().collect();
        while let Some(b) = frontier.pop() {
            for i in 0..r {
                let p: i64 = (0..r).map(|j| b[j] * a[i][j]).sum();
                let mut c = b.clone();
                c[i] -= p;
                if set.insert(c.clone()) {
                    frontier.push(c);
                }
            }
        }
        set.len()
    }

    #[test]
    fn root_counts_match_reflection_closure() {
        for (t, n) in [
            (SimpleType::a(2), 6),
            (SimpleType::g2(), 12),
            (SimpleType::e(8), 240),
        ] {
            assert_eq!(closure_count(t), n);
            let rs = RootSystem::build(t);
            assert_eq!(rs.all_roots.len(), n);
            assert_eq!(rs.n_pos(), n / 2);
        }
    }

    #[test]
    fn numeric_invariants_examples() {
        assert_eq!(RootSystem::build(SimpleType::a(1)).numeric_invariants(), (3, 1, 1));
        assert_eq!(RootSystem::build(SimpleType::c(2)).numeric_invariants(), (10, 2, 4));
        assert_eq!(RootSystem::build(SimpleType::e(7)).numeric_invariants(), (133, 7, 63));
    }

    #[test]
    fn inadmissible_types_rejected() {
        assert!(SimpleType::new(Family::E, 5).is_err());
        assert!(SimpleType::new(Family::B, 1).is_err());
        assert!(SimpleType::new(Family::D, 2).is_err());
        assert!(SimpleType::new(Family::G, 3).is_err());
        assert!(SimpleType::new(Family::D, 3).is_ok());
    }

    #[test]
    fn names_parse() {
        assert_eq!(SimpleType::parse("sl3").unwrap(), SimpleType::a(2));
        assert_eq!(SimpleType::parse("so7").unwrap(), SimpleType::b(3));
        assert_eq!(SimpleType::parse("so6").unwrap(), SimpleType::d(3));
        assert_eq!(SimpleType::parse("sp2").unwrap(), SimpleType::a(1));
        assert_eq!(SimpleType::parse("E8").unwrap(), SimpleType::e(8));
        assert!(SimpleType::parse("so4").is_err());
    }

    #[test]
    fn subsystem_examples() {
        let e8 = RootSystem::build(SimpleType::e(8));
        let theta = e8.highest_root();
        let low: Root = theta.iter().map(|x| -x).collect();
        // extended diagram minus alpha_1 -> D8
        let mut base: Vec<Root> = (1..8).map(|i| unit(8, i)).collect();
        base.push(low.clone());
        let d8 = e8.subsystem(&base).unwrap();
        assert_eq!(d8.all_roots.len(), 112);
        assert_eq!(d8.components, vec![SimpleType::d(8)]);

        let e6 = RootSystem::build(SimpleType::e(6));
        let low6: Root = e6.highest_root().iter().map(|x| -x).collect();
        let base6 = vec![unit(6, 0), unit(6, 2), unit(6, 3), unit(6, 4), unit(6, 5), low6];
        let sub = e6.subsystem(&base6).unwrap();
        assert_eq!(sub.all_roots.len(), 32);
        assert_eq!(sub.components, vec![SimpleType::a(1), SimpleType::a(5)]);

        let a3 = RootSystem::build(SimpleType::a(3));
        let one = a3.subsystem(&[vec![0, 1, 0]]).unwrap();
        assert_eq!(one.all_roots.len(), 2);

        assert!(a3.subsystem(&[vec![1, 0, 0], vec![1, 1, 0]]).is_err());
    }

    #[test]
    fn long_roots_of_exceptional() {
        let g2 = RootSystem::build(SimpleType::g2());
        let sub = g2.subsystem(&g2.long_root_base()).unwrap();
        assert_eq!(sub.components, vec![SimpleType::a(2)]);
        let f4 = RootSystem::build(SimpleType::f4());
        let sub = f4.subsystem(&f4.long_root_base()).unwrap();
        assert_eq!(sub.components, vec![SimpleType::d(4)]);
    }

    #[test]
    fn structure_constants_have_string_magnitude() {
        for t in [SimpleType::b(3), SimpleType::g2(), SimpleType::f4(), SimpleType::e(6)] {
            let rs = RootSystem::build(t);
            for (a, b, n) in rs.structure_entries() {
                if a == rs.neg_index(b) {
                    continue;
                }
                let mut p = 0;
                let mut cur = rs.all_roots[b].clone();
                loop {
                    for (c, x) in cur.iter_mut().zip(&rs.all_roots[a]) {
                        *c -= x;
                    }
                    if rs.is_root(&cur) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                assert_eq!(n.abs(), p + 1, "{t}: {:?} {:?}", rs.all_roots[a], rs.all_roots[b]);
                assert_eq!(rs.structure_constant(b, a), -n);
                assert_eq!(rs.structure_constant(rs.neg_index(a), rs.neg_index(b)), -n);
            }
        }
    }
}
