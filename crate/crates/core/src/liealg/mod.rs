//! Structure-constant models of reductive Lie algebras.
//!
//! Every simple component uses its Chevalley basis: simple coroots `h_i`
//! first, then root vectors `e_a` in the order of
//! [`RootSystem::all_roots`]. Structure constants are integers. Classical
//! components (and `G2`) may also carry their defining matrix realization,
//! which is how subalgebras given by representations are brought into
//! coordinates.

pub mod classical;
pub mod hom;
pub mod matrix;
pub mod subspace;

use crate::error::{Error, Result};
use crate::field::{Field, Rationals};
use crate::linalg;
use crate::rng::SplitMix64;
use crate::rootsys::{Family, RootSystem, SimpleType};
use matrix::{Matrix, Q};
use num_traits::Zero;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

pub use subspace::SubspaceBasis;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Component {
    Simple(SimpleType),
    /// A one-dimensional center.
    Center,
}

impl Component {
    pub fn dim(&self) -> usize {
        match self {
            Component::Simple(t) => t.dim(),
            Component::Center => 1,
        }
    }
    pub fn rank(&self) -> usize {
        match self {
            Component::Simple(t) => t.rank,
            Component::Center => 1,
        }
    }
    pub fn n_pos(&self) -> usize {
        match self {
            Component::Simple(t) => t.n_pos(),
            Component::Center => 0,
        }
    }
    pub fn simple(&self) -> Option<SimpleType> {
        match self {
            Component::Simple(t) => Some(*t),
            Component::Center => None,
        }
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Component::Simple(t) => write!(f, "{}", t.classical_name()),
            Component::Center => write!(f, "c"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModelKind {
    Defining,
    Adjoint,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Label {
    Cartan(usize),
    Root(usize),
    Center,
}

/// Sparse `ad` table entry `(j, k, c)` of basis element `i`: `[b_i, b_j]` has
/// coefficient `c` on `b_k`.
type AdRow = Vec<(u32, u32, i64)>;

struct SimpleData {
    rs: Arc<RootSystem>,
    ad: Vec<AdRow>,
    killing: Vec<Vec<(u32, i64)>>,
}

fn simple_data(t: SimpleType) -> Arc<SimpleData> {
    static CACHE: OnceLock<Mutex<HashMap<SimpleType, Arc<SimpleData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(d) = cache.lock().unwrap().get(&t) {
        return d.clone();
    }
    let d = Arc::new(build_simple_data(t));
    cache.lock().unwrap().insert(t, d.clone());
    d
}

/// The root system of a simple type, shared.
pub fn root_system(t: SimpleType) -> Arc<RootSystem> {
    simple_data(t).rs.clone()
}

fn build_simple_data(t: SimpleType) -> SimpleData {
    let rs = RootSystem::build(t);
    let r = rs.rank();
    let nroots = rs.all_roots.len();
    let dim = r + nroots;
    let mut ad: Vec<AdRow> = vec![Vec::new(); dim];
    for i in 0..r {
        for a in 0..nroots {
            let p = rs.pairing_simple(&rs.all_roots[a], i);
            if p != 0 {
                ad[i].push(((r + a) as u32, (r + a) as u32, p));
            }
        }
    }
    for a in 0..nroots {
        let row = &mut ad[r + a];
        for j in 0..r {
            let p = rs.pairing_simple(&rs.all_roots[a], j);
            if p != 0 {
                row.push((j as u32, (r + a) as u32, -p));
            }
        }
        let neg = rs.neg_index(a);
        for (i, c) in rs.coroot(&rs.all_roots[a]).into_iter().enumerate() {
            if c != 0 {
                row.push(((r + neg) as u32, i as u32, c));
            }
        }
        for b in 0..nroots {
            let n = rs.structure_constant(a, b);
            if n != 0 {
                let s = rs.sum_index(a, b).unwrap();
                row.push(((r + b) as u32, (r + s) as u32, n));
            }
        }
    }
    // Killing form: trace(ad x ad y); only weight-opposite pairs are nonzero.
    let lookup: Vec<HashMap<(u32, u32), i64>> = ad
        .iter()
        .map(|row| row.iter().map(|&(j, k, c)| ((j, k), c)).collect())
        .collect();
    let trace = |x: usize, y: usize| -> i64 {
        ad[y].iter()
            .map(|&(k, m, c)| c * lookup[x].get(&(m, k)).copied().unwrap_or(0))
            .sum()
    };
    let mut killing = vec![Vec::new(); dim];
    for i in 0..r {
        for j in 0..r {
            let v = trace(i, j);
            if v != 0 {
                killing[i].push((j as u32, v));
            }
        }
    }
    for a in 0..nroots {
        let b = rs.neg_index(a);
        let v = trace(r + a, r + b);
        killing[r + a].push(((r + b) as u32, v));
    }
    SimpleData { rs: Arc::new(rs), ad, killing }
}

/// Defining matrices of one component with a left inverse for coordinates.
#[derive(Debug)]
pub struct Defining {
    pub size: usize,
    /// Images of the component's basis, in component-local order.
    pub matrices: Vec<Matrix>,
    /// Invariant form for orthogonal and symplectic components.
    pub form: Option<Matrix>,
    pivots: Vec<usize>,
    inv: Vec<Vec<Q>>,
}

impl Defining {
    fn new(matrices: Vec<Matrix>, form: Option<Matrix>) -> Result<Defining> {
        let size = matrices[0].len();
        let rows: Vec<Vec<Q>> = matrices.iter().map(matrix::flatten).collect();
        let dim = rows.len();
        let e = linalg::echelon(&Rationals, rows.clone(), size * size);
        if e.rank() != dim {
            return Err(Error::Internal("defining matrices are dependent".into()));
        }
        let pivots = e.pivots.clone();
        let bp_t: Vec<Vec<Q>> = pivots
            .iter()
            .map(|&p| rows.iter().map(|r| r[p].clone()).collect())
            .collect();
        let inv = linalg::inverse(&Rationals, &bp_t).expect("pivot block invertible");
        Ok(Defining { size, matrices, form, pivots, inv })
    }

    /// Coordinates of `m` in the component basis, or `None` if `m` is not in
    /// the algebra.
    pub fn coords(&self, m: &Matrix) -> Option<Vec<Q>> {
        let flat = matrix::flatten(m);
        let mp: Vec<Q> = self.pivots.iter().map(|&p| flat[p].clone()).collect();
        let c: Vec<Q> = self
            .inv
            .iter()
            .map(|row| row.iter().zip(&mp).map(|(a, b)| a * b).sum())
            .collect();
        let mut back = matrix::zeros(self.size);
        for (ci, bm) in c.iter().zip(&self.matrices) {
            if !ci.is_zero() {
                back = matrix::add(&back, &matrix::scale(bm, ci));
            }
        }
        (back == *m).then_some(c)
    }
}

/// A reductive Lie algebra as a direct sum of simple components and
/// one-dimensional centers.
#[derive(Clone)]
pub struct LieAlgebraModel {
    components: Vec<Component>,
    kinds: Vec<ModelKind>,
    offsets: Vec<usize>,
    dim: usize,
    root_systems: Vec<Option<Arc<RootSystem>>>,
    labels: Vec<(usize, Label)>,
    ad: Vec<AdRow>,
    form: Vec<Vec<(u32, i64)>>,
    defining: Vec<Option<Arc<Defining>>>,
}

impl fmt::Debug for LieAlgebraModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebraModel({})", self.name())
    }
}

impl LieAlgebraModel {
    /// Build a model. Defining kinds are available for classical types and
    /// `G2` (its 7-dimensional representation); everything else is adjoint.
    pub fn build(components: &[Component], kinds: &[ModelKind]) -> Result<Self> {
        if components.len() != kinds.len() {
            return Err(Error::Internal("one kind per component expected".into()));
        }
        let mut offsets = Vec::new();
        let mut labels = Vec::new();
        let mut ad: Vec<AdRow> = Vec::new();
        let mut form = Vec::new();
        let mut root_systems = Vec::new();
        let mut defining = Vec::new();
        let mut off = 0usize;
        for (ci, (comp, kind)) in components.iter().zip(kinds).enumerate() {
            offsets.push(off);
            match comp {
                Component::Center => {
                    labels.push((ci, Label::Center));
                    ad.push(Vec::new());
                    form.push(vec![(off as u32, 1)]);
                    root_systems.push(None);
                    defining.push(None);
                }
                Component::Simple(t) => {
                    let d = simple_data(*t);
                    let r = t.rank;
                    for i in 0..r {
                        labels.push((ci, Label::Cartan(i)));
                    }
                    for a in 0..d.rs.all_roots.len() {
                        labels.push((ci, Label::Root(a)));
                    }
                    let o = off as u32;
                    for row in &d.ad {
                        ad.push(row.iter().map(|&(j, k, c)| (j + o, k + o, c)).collect());
                    }
                    for row in &d.killing {
                        form.push(row.iter().map(|&(j, c)| (j + o, c)).collect());
                    }
                    root_systems.push(Some(d.rs.clone()));
                    defining.push(match kind {
                        ModelKind::Adjoint => None,
                        ModelKind::Defining => Some(defining_for(*t)?),
                    });
                }
            }
            off += comp.dim();
        }
        Ok(LieAlgebraModel {
            components: components.to_vec(),
            kinds: kinds.to_vec(),
            offsets,
            dim: off,
            root_systems,
            labels,
            ad,
            form,
            defining,
        })
    }

    /// Classical components and `G2` get defining models, the rest adjoint.
    pub fn standard(components: &[Component]) -> Result<Self> {
        let kinds: Vec<ModelKind> = components
            .iter()
            .map(|c| match c {
                Component::Simple(t) if t.is_classical() || t.family == Family::G => {
                    ModelKind::Defining
                }
                _ => ModelKind::Adjoint,
            })
            .collect();
        Self::build(components, &kinds)
    }

    /// The simple algebra of type `t` with its standard model.
    pub fn simple(t: SimpleType) -> Arc<LieAlgebraModel> {
        static CACHE: OnceLock<Mutex<HashMap<SimpleType, Arc<LieAlgebraModel>>>> =
            OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(m) = cache.lock().unwrap().get(&t) {
            return m.clone();
        }
        let m = Arc::new(Self::standard(&[Component::Simple(t)]).expect("standard model"));
        cache.lock().unwrap().insert(t, m.clone());
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn components(&self) -> &[Component] {
        &self.components
    }
    pub fn kinds(&self) -> &[ModelKind] {
        &self.kinds
    }
    pub fn offset(&self, comp: usize) -> usize {
        self.offsets[comp]
    }
    pub fn component_range(&self, comp: usize) -> std::ops::Range<usize> {
        self.offsets[comp]..self.offsets[comp] + self.components[comp].dim()
    }
    pub fn root_system(&self, comp: usize) -> Option<&RootSystem> {
        self.root_systems[comp].as_deref()
    }
    pub fn label(&self, i: usize) -> (usize, Label) {
        self.labels[i]
    }
    pub fn defining(&self, comp: usize) -> Option<&Defining> {
        self.defining[comp].as_deref()
    }
    /// Number of positive roots.
    pub fn n_pos(&self) -> usize {
        self.components.iter().map(|c| c.n_pos()).sum()
    }
    /// Rank, centers included.
    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.rank()).sum()
    }

    pub fn name(&self) -> String {
        let parts: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        parts.join("+")
    }

    /// Global index of root `a` of component `comp`.
    pub fn root_index(&self, comp: usize, a: usize) -> usize {
        self.offsets[comp] + self.components[comp].rank() + a
    }

    /// Global index of coroot `h_i` of component `comp`.
    pub fn cartan_index(&self, comp: usize, i: usize) -> usize {
        self.offsets[comp] + i
    }

    /// `[b_i, b_j]` as `(k, c)` pairs.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<(usize, i64)> {
        self.ad[i]
            .iter()
            .filter(|&&(jj, _, _)| jj as usize == j)
            .map(|&(_, k, c)| (k as usize, c))
            .collect()
    }

    /// `[b_i, x]`.
    pub fn ad_apply<F: Field>(&self, f: &F, i: usize, x: &[F::Elem]) -> Vec<F::Elem> {
        let mut out = vec![f.zero(); self.dim];
        for &(j, k, c) in &self.ad[i] {
            let xj = &x[j as usize];
            if !f.is_zero(xj) {
                let k = k as usize;
                f.add_mul(&mut out[k], &f.from_i64(c), xj);
            }
        }
        out
    }

    /// `[x, y]`.
    pub fn bracket<F: Field>(&self, f: &F, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        let mut out = vec![f.zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for &(j, k, c) in &self.ad[i] {
                let yj = &y[j as usize];
                if f.is_zero(yj) {
                    continue;
                }
                let t = f.mul(&f.from_i64(c), xi);
                f.add_mul(&mut out[k as usize], &t, yj);
            }
        }
        out
    }

    /// Dense matrix of `ad v`: entry `[k][j]` is the coefficient of `b_k` in `[v, b_j]`.
    pub fn ad_matrix<F: Field>(&self, f: &F, v: &[F::Elem]) -> Vec<Vec<F::Elem>> {
        let mut m = vec![vec![f.zero(); self.dim]; self.dim];
        for (i, vi) in v.iter().enumerate() {
            if f.is_zero(vi) {
                continue;
            }
            for &(j, k, c) in &self.ad[i] {
                let t = f.mul(&f.from_i64(c), vi);
                let cell = &mut m[k as usize][j as usize];
                *cell = f.add(cell, &t);
            }
        }
        m
    }

    /// Invariant form: the Killing form on simple components, the identity
    /// on centers. Positive multiples of the Killing form on every simple
    /// component make it nondegenerate on every reductive subalgebra.
    pub fn form_apply<F: Field>(&self, f: &F, x: &[F::Elem]) -> Vec<F::Elem> {
        let mut out = vec![f.zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for &(j, c) in &self.form[i] {
                f.add_mul(&mut out[j as usize], &f.from_i64(c), xi);
            }
        }
        out
    }

    pub fn form_value<F: Field>(&self, f: &F, x: &[F::Elem], y: &[F::Elem]) -> F::Elem {
        let fx = self.form_apply(f, x);
        let mut acc = f.zero();
        for (a, b) in fx.iter().zip(y) {
            f.add_mul(&mut acc, a, b);
        }
        acc
    }

    /// Killing form entry `tr(ad b_i ad b_j)` for basis elements of simple components.
    pub fn killing_basis(&self, i: usize, j: usize) -> i64 {
        if matches!(self.labels[i].1, Label::Center) {
            return 0;
        }
        self.form[i].iter().find(|&&(k, _)| k as usize == j).map_or(0, |&(_, c)| c)
    }

    /// Basis indices of the standard Borel: Cartan, positive roots, centers.
    pub fn borel_indices(&self) -> Vec<usize> {
        (0..self.dim)
            .filter(|&i| match self.labels[i] {
                (_, Label::Cartan(_)) | (_, Label::Center) => true,
                (c, Label::Root(a)) => self.root_systems[c].as_ref().unwrap().is_positive(a),
            })
            .collect()
    }

    pub fn borel_basis(&self) -> SubspaceBasis {
        SubspaceBasis::from_indices(self.dim, &self.borel_indices())
    }

    /// All root vector indices, both signs.
    pub fn root_indices(&self) -> Vec<usize> {
        (0..self.dim).filter(|&i| matches!(self.labels[i].1, Label::Root(_))).collect()
    }

    /// `exp(t ad b_i) x` for a root vector `b_i` (nilpotent).
    pub fn exp_apply<F: Field>(&self, f: &F, i: usize, t: i64, x: &[F::Elem]) -> Vec<F::Elem> {
        let mut acc = x.to_vec();
        let mut term = x.to_vec();
        let tf = f.from_i64(t);
        for k in 1.. {
            term = self.ad_apply(f, i, &term);
            if term.iter().all(|v| f.is_zero(v)) {
                break;
            }
            let coef = f.div(&tf, &f.from_i64(k));
            for v in term.iter_mut() {
                if !f.is_zero(v) {
                    *v = f.mul(v, &coef);
                }
            }
            for (a, b) in acc.iter_mut().zip(&term) {
                *a = f.add(a, b);
            }
        }
        acc
    }

    /// A random word of root exponentials, `2 N(g)` factors by default,
    /// parameters nonzero in `[-3, 3]`.
    pub fn random_word(&self, rng: &mut SplitMix64, factors: Option<usize>) -> Vec<(usize, i64)> {
        let roots = self.root_indices();
        if roots.is_empty() {
            return Vec::new();
        }
        let n = factors.unwrap_or(2 * self.n_pos());
        (0..n)
            .map(|_| (roots[rng.below(roots.len())], rng.nonzero_i64(3)))
            .collect()
    }

    /// A random point of the lower unipotent group `U^-`: one factor
    /// `exp(t ad e_{-a})` per positive root `a` in a fixed order, `t` nonzero
    /// in `[-bound, bound]`. The product map is an isomorphism onto `U^-`, and
    /// `Ad(g) b = Ad(u) b` for `g = u b'` in the open cell `U^- B`, so these
    /// words reach the generic conjugates of `b`.
    pub fn unipotent_word(&self, rng: &mut SplitMix64, bound: i64) -> Vec<(usize, i64)> {
        self.root_indices()
            .into_iter()
            .filter(|&i| match self.labels[i] {
                (c, Label::Root(a)) => !self.root_systems[c].as_ref().unwrap().is_positive(a),
                _ => false,
            })
            .map(|i| (i, rng.nonzero_i64(bound)))
            .collect()
    }

    /// `Ad(g) x` for `g` the product of the word's exponentials (applied
    /// right to left, i.e. the first factor acts last).
    pub fn apply_word<F: Field>(&self, f: &F, word: &[(usize, i64)], x: &[F::Elem]) -> Vec<F::Elem> {
        let mut v = x.to_vec();
        for &(i, t) in word.iter().rev() {
            v = self.exp_apply(f, i, t, &v);
        }
        v
    }

    /// Jacobi identity on basis triples; exhaustive when `sample` is `None`.
    pub fn check_jacobi(&self, sample: Option<(usize, u64)>) -> bool {
        let f = crate::field::PrimeField::new(1_000_000_007);
        let unit = |i: usize| {
            let mut v = vec![0u64; self.dim];
            v[i] = 1;
            v
        };
        let check = |i: usize, j: usize, k: usize| {
            let (a, b, c) = (unit(i), unit(j), unit(k));
            let t1 = self.bracket(&f, &a, &self.bracket(&f, &b, &c));
            let t2 = self.bracket(&f, &b, &self.bracket(&f, &c, &a));
            let t3 = self.bracket(&f, &c, &self.bracket(&f, &a, &b));
            t1.iter().zip(&t2).zip(&t3).all(|((x, y), z)| f.add(&f.add(x, y), z) == 0)
        };
        match sample {
            None => {
                for i in 0..self.dim {
                    for j in i + 1..self.dim {
                        for k in j + 1..self.dim {
                            if !check(i, j, k) {
                                return false;
                            }
                        }
                    }
                }
                true
            }
            Some((n, seed)) => {
                let mut rng = SplitMix64::new(seed);
                (0..n).all(|_| {
                    check(rng.below(self.dim), rng.below(self.dim), rng.below(self.dim))
                })
            }
        }
    }

    /// Antisymmetry of the bracket table.
    pub fn check_antisymmetry(&self) -> bool {
        (0..self.dim).all(|i| {
            self.ad[i].iter().all(|&(j, k, c)| {
                self.bracket_basis(j as usize, i).contains(&(k as usize, -c))
            })
        })
    }

    /// Deterministic text form: components, then one line per nonzero bracket.
    pub fn to_text(&self) -> String {
        let mut out = format!("model {}\n", self.name());
        for i in 0..self.dim {
            let mut row = self.ad[i].clone();
            row.sort();
            for (j, k, c) in row {
                if (i as u32) < j {
                    out.push_str(&format!("[{i},{j}] {c} {k}\n"));
                }
            }
        }
        out
    }
}

fn defining_for(t: SimpleType) -> Result<Arc<Defining>> {
    static CACHE: OnceLock<Mutex<HashMap<SimpleType, Arc<Defining>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(d) = cache.lock().unwrap().get(&t) {
        return Ok(d.clone());
    }
    let src = Self_::adjoint(t);
    let d = if t.is_classical() {
        let (e, f) = classical::chevalley_generators(t).unwrap();
        let mats = hom::extend_hom(&src, &e, &f, &hom::MatrixTarget)?;
        Defining::new(mats, classical::invariant_form(t))?
    } else if t.family == Family::G {
        // G2 inside so7: e_short -> e_1 + e_3, e_long -> e_2 (B3 Chevalley generators)
        let b3 = SimpleType::b(3);
        let so7 = Self_::adjoint(b3);
        let rs = so7.root_system(0).unwrap();
        let gen = |i: usize, sign: i64| {
            let mut v = vec![0i64; 3];
            v[i] = sign;
            let mut x = vec![Q::zero(); so7.dim()];
            x[so7.root_index(0, rs.index_of(&v).unwrap())] = crate::field::rat(1);
            x
        };
        let add = |a: Vec<Q>, b: Vec<Q>| a.into_iter().zip(b).map(|(x, y)| x + y).collect();
        let e = vec![add(gen(0, 1), gen(2, 1)), gen(1, 1)];
        let f = vec![add(gen(0, -1), gen(2, -1)), gen(1, -1)];
        let coords = hom::extend_hom(&src, &e, &f, &hom::ModelTarget(&so7))?;
        let def_b3 = defining_for(b3)?;
        let mats = coords
            .iter()
            .map(|c| {
                let mut m = matrix::zeros(7);
                for (ci, bm) in c.iter().zip(&def_b3.matrices) {
                    if !ci.is_zero() {
                        m = matrix::add(&m, &matrix::scale(bm, ci));
                    }
                }
                m
            })
            .collect();
        Defining::new(mats, def_b3.form.clone())?
    } else {
        return Err(Error::Unsupported(format!("no defining model for {t}")));
    };
    let d = Arc::new(d);
    cache.lock().unwrap().insert(t, d.clone());
    Ok(d)
}

/// Adjoint-only single-component model, used as the source of homomorphisms.
struct Self_;
impl Self_ {
    fn adjoint(t: SimpleType) -> LieAlgebraModel {
        LieAlgebraModel::build(&[Component::Simple(t)], &[ModelKind::Adjoint]).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    #[test]
    fn jacobi_small_and_exceptional() {
        for t in [SimpleType::a(1), SimpleType::a(2), SimpleType::b(2), SimpleType::g2()] {
            let m = LieAlgebraModel::simple(t);
            assert!(m.check_jacobi(None), "{t}");
            assert!(m.check_antisymmetry(), "{t}");
        }
        for t in [SimpleType::f4(), SimpleType::e(6)] {
            let m = LieAlgebraModel::simple(t);
            assert!(m.check_jacobi(Some((20000, 3))), "{t}");
        }
    }

    #[test]
    fn defining_models() {
        let m = LieAlgebraModel::simple(SimpleType::a(1));
        let d = m.defining(0).unwrap();
        assert_eq!(d.matrices.len(), 3);
        assert!(d.matrices.iter().all(|x| x.len() == 2 && classical::is_trace_zero(x)));
        for t in [SimpleType::b(3), SimpleType::c(3), SimpleType::d(4), SimpleType::g2()] {
            let m = LieAlgebraModel::simple(t);
            let d = m.defining(0).unwrap();
            let j = d.form.as_ref().unwrap();
            assert!(d.matrices.iter().all(|x| classical::preserves_form(x, j)), "{t}");
        }
        let g2 = LieAlgebraModel::simple(SimpleType::g2());
        assert_eq!(g2.defining(0).unwrap().size, 7);
    }

    #[test]
    fn block_model_dimension() {
        let m = LieAlgebraModel::standard(&[
            Component::Simple(SimpleType::c(2)),
            Component::Simple(SimpleType::a(2)),
        ])
        .unwrap();
        assert_eq!(m.dim(), 18);
    }

    #[test]
    fn borel_dimensions() {
        assert_eq!(LieAlgebraModel::simple(SimpleType::a(1)).borel_basis().dim(), 2);
        assert_eq!(LieAlgebraModel::simple(SimpleType::c(2)).borel_basis().dim(), 6);
        assert_eq!(LieAlgebraModel::simple(SimpleType::e(6)).borel_basis().dim(), 42);
    }

    #[test]
    fn conjugation_preserves_brackets() {
        let m = LieAlgebraModel::simple(SimpleType::b(2));
        let mut rng = SplitMix64::new(11);
        let word = m.random_word(&mut rng, None);
        let f = Rationals;
        let x: Vec<Q> = (0..m.dim()).map(|i| rat(i as i64 % 3 - 1)).collect();
        let y: Vec<Q> = (0..m.dim()).map(|i| rat((i as i64 * 7) % 5 - 2)).collect();
        let lhs = m.apply_word(&f, &word, &m.bracket(&f, &x, &y));
        let rhs = m.bracket(&f, &m.apply_word(&f, &word, &x), &m.apply_word(&f, &word, &y));
        assert_eq!(lhs, rhs);
        assert_eq!(m.apply_word(&f, &[], &x), x);
    }

    #[test]
    fn killing_matches_trace_on_sl2() {
        let m = LieAlgebraModel::simple(SimpleType::a(1));
        // h, e, f: K(h,h) = 8, K(e,f) = 4
        assert_eq!(m.killing_basis(0, 0), 8);
        assert_eq!(m.killing_basis(1, 2), 4);
    }
}
