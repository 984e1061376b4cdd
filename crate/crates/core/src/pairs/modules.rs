//! Subalgebras of classical algebras given by a representation of `h` on the
//! defining module.
//!
//! A recipe is a direct sum of blocks. Each block records how every component
//! of `h` acts on it: simple components through their Chevalley generators,
//! centers through a diagonal character. For `so` and `sp` the blocks are
//! given an invariant form of the right symmetry (pairing blocks with their
//! duals where needed), and the module is moved into the basis in which the
//! ambient algebra's form is the standard one. All Cartan generators act
//! diagonally, which is what makes the normalization rational.

use crate::error::{Error, Result};
use crate::field::{rat, Rationals};
use crate::liealg::matrix::{self, Matrix, Q};
use crate::liealg::{hom, Component, LieAlgebraModel};
use crate::linalg;
use crate::rootsys::{Family, SimpleType};
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug)]
pub enum Act {
    None,
    Gens(Vec<Matrix>, Vec<Matrix>),
    Diag(Vec<Q>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Symmetric,
    Alternating,
}

/// One summand of the module.
#[derive(Clone, Debug)]
pub struct Block {
    pub dim: usize,
    pub acts: Vec<Act>,
    /// Invariant form when the block is self-dual.
    pub form: Option<(Matrix, Parity)>,
    pub sig: String,
    pub dual_sig: String,
}

/// Chevalley generator matrices of the defining representation of `t`.
pub fn defining_gens(t: SimpleType) -> Result<(Vec<Matrix>, Vec<Matrix>)> {
    let m = LieAlgebraModel::simple(t);
    let d = m
        .defining(0)
        .ok_or_else(|| Error::Unsupported(format!("no defining module for {t}")))?;
    let rs = m.root_system(0).unwrap();
    let r = t.rank;
    let mut e = Vec::new();
    let mut f = Vec::new();
    for i in 0..r {
        let mut v = vec![0i64; r];
        v[i] = 1;
        let a = rs.index_of(&v).unwrap();
        e.push(d.matrices[r + a].clone());
        f.push(d.matrices[r + rs.neg_index(a)].clone());
    }
    Ok((e, f))
}

fn defining_form(t: SimpleType) -> Option<(Matrix, Parity)> {
    match t.family {
        Family::A if t.rank == 1 => {
            Some((matrix::from_i64(&[vec![0, 1], vec![-1, 0]]), Parity::Alternating))
        }
        Family::A | Family::E | Family::F => None,
        Family::C => Some((crate::liealg::classical::invariant_form(t)?, Parity::Alternating)),
        Family::B | Family::D => {
            Some((crate::liealg::classical::invariant_form(t)?, Parity::Symmetric))
        }
        Family::G => {
            let m = LieAlgebraModel::simple(t);
            Some((m.defining(0)?.form.clone()?, Parity::Symmetric))
        }
    }
}

fn acts_with(ncomps: usize, comp: usize, act: Act) -> Vec<Act> {
    let mut acts = vec![Act::None; ncomps];
    acts[comp] = act;
    acts
}

impl Block {
    pub fn trivial(ncomps: usize, dim: usize) -> Block {
        let form = (dim == 1).then(|| (matrix::identity(1), Parity::Symmetric));
        Block { dim, acts: vec![Act::None; ncomps], form, sig: "1".into(), dual_sig: "1".into() }
    }

    /// Defining representation of the simple component `comp` of type `t`.
    pub fn defining(ncomps: usize, comp: usize, t: SimpleType, tag: &str) -> Result<Block> {
        let (e, f) = defining_gens(t)?;
        let dim = e[0].len();
        let form = defining_form(t);
        let dual_sig = if form.is_some() { tag.to_string() } else { format!("{tag}*") };
        Ok(Block { dim, acts: acts_with(ncomps, comp, Act::Gens(e, f)), form, sig: tag.into(), dual_sig })
    }

    /// `Sym^k` of the defining representation of an `sl_2` component.
    pub fn sym_power(ncomps: usize, comp: usize, k: usize, tag: &str) -> Result<Block> {
        let n = k + 1;
        let mut e = matrix::zeros(n);
        let mut f = matrix::zeros(n);
        for j in 0..n {
            if j > 0 {
                e[j - 1][j] = rat(j as i64);
            }
            if j + 1 < n {
                f[j + 1][j] = rat((k - j) as i64);
            }
        }
        let gens = vec![e.clone(), f.clone()];
        let parity = if k % 2 == 0 { Parity::Symmetric } else { Parity::Alternating };
        let form = unique_form(&gens, parity)?;
        Ok(Block {
            dim: n,
            acts: acts_with(ncomps, comp, Act::Gens(vec![e], vec![f])),
            form: Some((form, parity)),
            sig: tag.into(),
            dual_sig: tag.into(),
        })
    }

    /// The 8-dimensional spin representation of a `so_7` component, on the
    /// exterior algebra of a 3-dimensional space.
    pub fn spin7(ncomps: usize, comp: usize, tag: &str) -> Result<Block> {
        let create = |i: usize| {
            let mut m = matrix::zeros(8);
            for s in 0..8usize {
                if s & (1 << i) == 0 {
                    let sign = if (s & ((1 << i) - 1)).count_ones() % 2 == 0 { 1 } else { -1 };
                    m[s | (1 << i)][s] = rat(sign);
                }
            }
            m
        };
        let ad: Vec<Matrix> = (0..3).map(create).collect();
        let an: Vec<Matrix> = ad.iter().map(matrix::transpose).collect();
        let e = vec![matrix::mul(&ad[0], &an[1]), matrix::mul(&ad[1], &an[2]), ad[2].clone()];
        let f = vec![matrix::mul(&ad[1], &an[0]), matrix::mul(&ad[2], &an[1]), an[2].clone()];
        let mut gens = e.clone();
        gens.extend(f.iter().cloned());
        let form = unique_form(&gens, Parity::Symmetric)?;
        Ok(Block {
            dim: 8,
            acts: acts_with(ncomps, comp, Act::Gens(e, f)),
            form: Some((form, Parity::Symmetric)),
            sig: tag.into(),
            dual_sig: tag.into(),
        })
    }

    /// Outer tensor product of the defining representations of two `sl_2`
    /// components (this is `so_4` on its defining module).
    pub fn tensor_a1(ncomps: usize, a: usize, b: usize, tag: &str) -> Result<Block> {
        let (e, f) = defining_gens(SimpleType::a(1))?;
        let i2 = matrix::identity(2);
        let mut acts = vec![Act::None; ncomps];
        acts[a] = Act::Gens(vec![matrix::kron(&e[0], &i2)], vec![matrix::kron(&f[0], &i2)]);
        acts[b] = Act::Gens(vec![matrix::kron(&i2, &e[0])], vec![matrix::kron(&i2, &f[0])]);
        let j = matrix::from_i64(&[vec![0, 1], vec![-1, 0]]);
        Ok(Block {
            dim: 4,
            acts,
            form: Some((matrix::kron(&j, &j), Parity::Symmetric)),
            sig: tag.into(),
            dual_sig: tag.into(),
        })
    }

    /// `so_2` on its defining module: a center with characters `+1, -1`.
    pub fn so2(ncomps: usize, comp: usize, tag: &str) -> Block {
        Block {
            dim: 2,
            acts: acts_with(ncomps, comp, Act::Diag(vec![rat(1), rat(-1)])),
            form: Some((matrix::from_i64(&[vec![0, 1], vec![1, 0]]), Parity::Symmetric)),
            sig: tag.into(),
            dual_sig: tag.into(),
        }
    }

    pub fn dual(&self) -> Block {
        let acts = self
            .acts
            .iter()
            .map(|a| match a {
                Act::None => Act::None,
                Act::Gens(e, f) => Act::Gens(
                    e.iter().map(|x| matrix::scale(&matrix::transpose(x), &rat(-1))).collect(),
                    f.iter().map(|x| matrix::scale(&matrix::transpose(x), &rat(-1))).collect(),
                ),
                Act::Diag(d) => Act::Diag(d.iter().map(|x| -x).collect()),
            })
            .collect();
        let form = self.form.as_ref().map(|(b, p)| {
            (linalg::inverse(&Rationals, b).expect("nondegenerate block form"), *p)
        });
        Block { dim: self.dim, acts, form, sig: self.dual_sig.clone(), dual_sig: self.sig.clone() }
    }

    /// Twist by the character `eps_comp^d` of a central component.
    pub fn with_char(mut self, comp: usize, d: i64) -> Block {
        if d == 0 {
            return self;
        }
        let add = vec![rat(d); self.dim];
        self.acts[comp] = match std::mem::replace(&mut self.acts[comp], Act::None) {
            Act::None => Act::Diag(add),
            Act::Diag(x) => Act::Diag(x.iter().zip(&add).map(|(a, b)| a + b).collect()),
            Act::Gens(..) => panic!("character on a simple component"),
        };
        self.form = None;
        self.sig = format!("{}e{comp}^{d}", self.sig);
        self.dual_sig = format!("{}e{comp}^{}", self.dual_sig, -d);
        self
    }
}

/// The unique (up to scalar) invariant form of the given parity.
fn unique_form(gens: &[Matrix], parity: Parity) -> Result<Matrix> {
    let n = gens[0].len();
    let var = |i: usize, j: usize| i * n + j;
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for x in gens {
        // (x^T B + B x)_{ab} = sum_c x_{ca} B_{cb} + B_{ac} x_{cb}
        for a in 0..n {
            for b in 0..n {
                let mut row = vec![Q::zero(); n * n];
                for c in 0..n {
                    row[var(c, b)] += &x[c][a];
                    row[var(a, c)] += &x[c][b];
                }
                if row.iter().any(|v| !v.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let s = if parity == Parity::Symmetric { -1 } else { 1 };
    for a in 0..n {
        for b in a..n {
            let mut row = vec![Q::zero(); n * n];
            row[var(a, b)] += Q::one();
            row[var(b, a)] += rat(s);
            if row.iter().any(|v| !v.is_zero()) {
                rows.push(row);
            }
        }
    }
    let ns = linalg::nullspace(&Rationals, rows, n * n);
    if ns.len() != 1 {
        return Err(Error::Degenerate(format!("{} invariant forms on an irreducible block", ns.len())));
    }
    Ok((0..n).map(|i| ns[0][i * n..(i + 1) * n].to_vec()).collect())
}

/// Image of one component of `h` in coordinates of the ambient simple algebra.
#[derive(Clone, Debug)]
pub enum CompImage {
    /// Images of the component's whole Chevalley basis.
    Hom(Vec<Vec<Q>>),
    Center(Vec<Q>),
    /// A basis of the image only, for components that are never coupled.
    Span(Vec<Vec<Q>>),
}

/// Realize the components `comps` acting through `blocks` on the defining
/// module of `ambient`.
pub fn realize(ambient: SimpleType, comps: &[Component], blocks: &[Block]) -> Result<Vec<CompImage>> {
    let n: usize = blocks.iter().map(|b| b.dim).sum();
    let want = ambient
        .defining_dim()
        .ok_or_else(|| Error::Unsupported(format!("{ambient} has no defining module")))?;
    if n != want {
        return Err(Error::Inadmissible(format!(
            "module of dimension {n} for {} (needs {want})",
            ambient.classical_name()
        )));
    }
    // assemble block-diagonal actions
    let mut gens: Vec<Option<(Vec<Matrix>, Vec<Matrix>)>> = Vec::new();
    let mut diags: Vec<Option<Vec<Q>>> = Vec::new();
    for (ci, c) in comps.iter().enumerate() {
        match c {
            Component::Simple(t) => {
                let r = t.rank;
                let mut e = vec![Vec::new(); r];
                let mut f = vec![Vec::new(); r];
                for b in blocks {
                    for i in 0..r {
                        let (be, bf) = match &b.acts[ci] {
                            Act::Gens(be, bf) => (be[i].clone(), bf[i].clone()),
                            Act::None => (matrix::zeros(b.dim), matrix::zeros(b.dim)),
                            Act::Diag(_) => return Err(Error::Internal("diagonal action on a simple component".into())),
                        };
                        e[i].push(be);
                        f[i].push(bf);
                    }
                }
                let e: Vec<Matrix> = e.iter().map(|bl| matrix::block_diag(bl)).collect();
                let f: Vec<Matrix> = f.iter().map(|bl| matrix::block_diag(bl)).collect();
                gens.push(Some((e, f)));
                diags.push(None);
            }
            Component::Center => {
                let mut d = Vec::with_capacity(n);
                for b in blocks {
                    match &b.acts[ci] {
                        Act::Diag(x) => d.extend(x.iter().cloned()),
                        Act::None => d.extend((0..b.dim).map(|_| Q::zero())),
                        Act::Gens(..) => return Err(Error::Internal("generators on a center".into())),
                    }
                }
                gens.push(None);
                diags.push(Some(d));
            }
        }
    }
    // weights of the standard basis vectors under the Cartan of h
    let mut weights: Vec<Vec<Q>> = vec![Vec::new(); n];
    for (g, d) in gens.iter().zip(&diags) {
        if let Some((e, f)) = g {
            for (ei, fi) in e.iter().zip(f) {
                let h = matrix::commutator(ei, fi);
                for a in 0..n {
                    for b in 0..n {
                        if a != b && !h[a][b].is_zero() {
                            return Err(Error::Internal("Cartan of h is not diagonal".into()));
                        }
                    }
                    weights[a].push(h[a][a].clone());
                }
            }
        }
        if let Some(d) = d {
            for a in 0..n {
                weights[a].push(d[a].clone());
            }
        }
    }
    let p = match ambient.family {
        Family::A => None,
        Family::B | Family::D => Some(witt_basis(blocks, &weights, Parity::Symmetric)?),
        Family::C => Some(witt_basis(blocks, &weights, Parity::Alternating)?),
        _ => return Err(Error::Unsupported(format!("module recipe for {ambient}"))),
    };
    let amb = LieAlgebraModel::simple(ambient);
    let def = amb.defining(0).unwrap();
    let pinv = p.as_ref().map(|p| linalg::inverse(&Rationals, p).expect("basis change invertible"));
    let conj = |x: &Matrix| match (&p, &pinv) {
        (Some(p), Some(pi)) => matrix::mul(&matrix::mul(pi, x), p),
        _ => x.clone(),
    };
    let coords = |x: &Matrix| {
        def.coords(x).ok_or_else(|| {
            Error::Internal(format!("module recipe leaves {}", ambient.classical_name()))
        })
    };
    let mut out = Vec::new();
    for ((c, g), d) in comps.iter().zip(&gens).zip(&diags) {
        match c {
            Component::Simple(t) => {
                let (e, f) = g.as_ref().unwrap();
                let e: Vec<Matrix> = e.iter().map(&conj).collect();
                let f: Vec<Matrix> = f.iter().map(&conj).collect();
                let src = LieAlgebraModel::simple(*t);
                let mats = hom::extend_hom(&src, &e, &f, &hom::MatrixTarget)?;
                out.push(CompImage::Hom(mats.iter().map(coords).collect::<Result<_>>()?));
            }
            Component::Center => {
                let d = d.as_ref().unwrap();
                let mut m = matrix::zeros(n);
                for a in 0..n {
                    m[a][a] = d[a].clone();
                }
                if matrix::is_zero(&m) {
                    return Err(Error::Degenerate("central component acts trivially".into()));
                }
                out.push(CompImage::Center(coords(&conj(&m))?));
            }
        }
    }
    Ok(out)
}

/// Columns of a basis change `P` with `P^T B P = J`, the standard form of the
/// ambient, where `B` is assembled from the blocks.
fn witt_basis(blocks: &[Block], weights: &[Vec<Q>], parity: Parity) -> Result<Matrix> {
    let n = weights.len();
    let eps = if parity == Parity::Symmetric { rat(1) } else { rat(-1) };
    let offs: Vec<usize> = blocks
        .iter()
        .scan(0, |acc, b| {
            let o = *acc;
            *acc += b.dim;
            Some(o)
        })
        .collect();
    let is_zero_weight = |a: usize| weights[a].iter().all(|x| x.is_zero());
    let mut b = matrix::zeros(n);
    let mut used = vec![false; blocks.len()];
    let mut sign = 1i64;
    for i in 0..blocks.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let bi = &blocks[i];
        let o = offs[i];
        match &bi.form {
            Some((form, par)) if *par == parity => {
                let mut form = form.clone();
                if parity == Parity::Symmetric {
                    let zeros: Vec<usize> = (0..bi.dim).filter(|&a| is_zero_weight(o + a)).collect();
                    if zeros.len() > 1 {
                        return Err(Error::Unsupported("block with several zero weights".into()));
                    }
                    if let Some(&z) = zeros.first() {
                        let q = form[z][z].clone();
                        if q.is_zero() {
                            return Err(Error::Degenerate("isotropic zero-weight vector".into()));
                        }
                        form = matrix::scale(&form, &(rat(sign) / q));
                        sign = -sign;
                    }
                }
                for a in 0..bi.dim {
                    for c in 0..bi.dim {
                        b[o + a][o + c] = form[a][c].clone();
                    }
                }
            }
            _ => {
                let j = (i + 1..blocks.len())
                    .find(|&j| !used[j] && blocks[j].sig == bi.dual_sig && blocks[j].dim == bi.dim)
                    .ok_or_else(|| {
                        Error::Inadmissible(format!("summand {} has no dual partner", bi.sig))
                    })?;
                used[j] = true;
                let m = match &bi.form {
                    Some((f, _)) if blocks[j].sig == bi.sig => f.clone(),
                    _ => matrix::identity(bi.dim),
                };
                let oj = offs[j];
                for a in 0..bi.dim {
                    for c in 0..bi.dim {
                        b[o + a][oj + c] = m[a][c].clone();
                        b[oj + c][o + a] = &eps * &m[a][c];
                    }
                }
            }
        }
    }
    let bval = |x: &[Q], y: &[Q]| -> Q {
        let mut acc = Q::zero();
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (c, yc) in y.iter().enumerate() {
                if !yc.is_zero() && !b[a][c].is_zero() {
                    acc += xa * &b[a][c] * yc;
                }
            }
        }
        acc
    };
    let unit = |a: usize| {
        let mut v = vec![Q::zero(); n];
        v[a] = Q::one();
        v
    };
    let positive = |w: &[Q]| w.iter().find(|x| !x.is_zero()).map_or(false, |x| x.is_positive());
    let neg = |w: &[Q]| -> Vec<Q> { w.iter().map(|x| -x).collect() };
    let mut pairs: Vec<(Vec<Q>, Vec<Q>)> = Vec::new();
    let mut done = vec![false; n];
    for a in 0..n {
        if done[a] || !positive(&weights[a]) {
            continue;
        }
        let mu = weights[a].clone();
        let us: Vec<usize> = (0..n).filter(|&x| weights[x] == mu).collect();
        let ws: Vec<usize> = (0..n).filter(|&x| weights[x] == neg(&mu)).collect();
        if us.len() != ws.len() {
            return Err(Error::Degenerate("weight multiplicities are not symmetric".into()));
        }
        let g: Vec<Vec<Q>> = us.iter().map(|&u| ws.iter().map(|&w| b[u][w].clone()).collect()).collect();
        let ginv = linalg::inverse(&Rationals, &g)
            .ok_or_else(|| Error::Degenerate("degenerate pairing of weight spaces".into()))?;
        for (ui, &u) in us.iter().enumerate() {
            let mut w = vec![Q::zero(); n];
            for (ci, &wc) in ws.iter().enumerate() {
                w[wc] += &ginv[ci][ui];
            }
            pairs.push((unit(u), w));
            done[u] = true;
        }
        for &w in &ws {
            done[w] = true;
        }
    }
    let zero: Vec<usize> = (0..n).filter(|&a| is_zero_weight(a)).collect();
    let mut middle = None;
    match parity {
        Parity::Symmetric => {
            let (mut plus, mut minus) = (Vec::new(), Vec::new());
            for &z in &zero {
                let q = b[z][z].clone();
                if q == rat(1) {
                    plus.push(z);
                } else if q == rat(-1) {
                    minus.push(z);
                } else {
                    return Err(Error::Degenerate("zero-weight vector not normalized".into()));
                }
            }
            if plus.len() < minus.len() || plus.len() > minus.len() + 1 {
                return Err(Error::Degenerate("zero-weight signature not split".into()));
            }
            for (&x, &y) in plus.iter().zip(&minus) {
                let u: Vec<Q> = (0..n).map(|c| if c == x || c == y { rat(1) } else { Q::zero() }).collect();
                let half = crate::field::ratio(1, 2);
                let w: Vec<Q> = (0..n)
                    .map(|c| if c == x { half.clone() } else if c == y { -half.clone() } else { Q::zero() })
                    .collect();
                pairs.push((u, w));
            }
            if plus.len() > minus.len() {
                middle = Some(unit(*plus.last().unwrap()));
            }
        }
        Parity::Alternating => {
            let mut rest: Vec<Vec<Q>> = zero.iter().map(|&z| unit(z)).collect();
            while let Some(v) = rest.pop() {
                let k = rest
                    .iter()
                    .position(|w| !bval(&v, w).is_zero())
                    .ok_or_else(|| Error::Degenerate("degenerate zero-weight space".into()))?;
                let w0 = rest.remove(k);
                let s = bval(&v, &w0);
                let w: Vec<Q> = w0.iter().map(|x| x / &s).collect();
                for x in rest.iter_mut() {
                    let bv = bval(x, &v);
                    let bw = bval(x, &w);
                    for c in 0..n {
                        x[c] = &x[c] + &bv * &w[c] - &bw * &v[c];
                    }
                }
                pairs.push((v, w));
            }
        }
    }
    if 2 * pairs.len() + middle.is_some() as usize != n {
        return Err(Error::Degenerate("could not complete a Witt basis".into()));
    }
    let mut cols: Vec<Vec<Q>> = vec![Vec::new(); n];
    for (i, (u, w)) in pairs.into_iter().enumerate() {
        cols[i] = u;
        cols[n - 1 - i] = w;
    }
    if let Some(z) = middle {
        cols[n / 2] = z;
    }
    // P has the new basis vectors as columns
    let p: Matrix = (0..n).map(|a| (0..n).map(|c| cols[c][a].clone()).collect()).collect();
    let check = matrix::mul(&matrix::mul(&matrix::transpose(&p), &b), &p);
    let j = standard_form(n, parity);
    if check != j {
        return Err(Error::Internal("Witt normalization failed".into()));
    }
    Ok(p)
}

fn standard_form(n: usize, parity: Parity) -> Matrix {
    let mut j = matrix::zeros(n);
    for i in 0..n {
        j[i][n - 1 - i] = match parity {
            Parity::Symmetric => rat(1),
            Parity::Alternating => rat(if i < n / 2 { 1 } else { -1 }),
        };
    }
    j
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen_count(images: &[CompImage]) -> usize {
        images
            .iter()
            .map(|c| match c {
                CompImage::Hom(v) => v.len(),
                CompImage::Center(_) => 1,
                CompImage::Span(v) => v.len(),
            })
            .sum()
    }

    #[test]
    fn forms_match_classical_models() {
        for t in [SimpleType::b(3), SimpleType::c(2), SimpleType::d(4)] {
            let (j, p) = defining_form(t).unwrap();
            assert_eq!(j, standard_form(t.defining_dim().unwrap(), p), "{t}");
        }
    }

    #[test]
    fn principal_sl2_in_sp4() {
        let comps = [Component::Simple(SimpleType::a(1))];
        let blocks = [Block::sym_power(1, 0, 3, "S0^3").unwrap()];
        let im = realize(SimpleType::c(2), &comps, &blocks).unwrap();
        assert_eq!(gen_count(&im), 3);
    }

    #[test]
    fn g2_and_spin_in_orthogonal() {
        let g2 = [Component::Simple(SimpleType::g2())];
        let b = Block::defining(1, 0, SimpleType::g2(), "V0").unwrap();
        assert!(realize(SimpleType::b(3), &g2, &[b.clone()]).is_ok());
        assert!(realize(SimpleType::d(4), &g2, &[b, Block::trivial(1, 1)]).is_ok());
        let b3 = [Component::Simple(SimpleType::b(3))];
        let spin = Block::spin7(1, 0, "P0").unwrap();
        assert!(realize(SimpleType::b(4), &b3, &[spin, Block::trivial(1, 1)]).is_ok());
    }

    #[test]
    fn gl_in_symplectic_and_orthogonal() {
        let comps = [Component::Simple(SimpleType::a(2)), Component::Center];
        let v = Block::defining(2, 0, SimpleType::a(2), "V0").unwrap();
        let blocks = [v.clone().with_char(1, 1), v.dual().with_char(1, -1)];
        assert!(realize(SimpleType::c(3), &comps, &blocks).is_ok());
        assert!(realize(SimpleType::d(3), &comps, &blocks).is_ok());
        let mut odd = blocks.to_vec();
        odd.push(Block::trivial(2, 1));
        assert!(realize(SimpleType::b(3), &comps, &odd).is_ok());
    }

    #[test]
    fn trivial_pairs_in_symplectic() {
        let comps = [Component::Simple(SimpleType::c(2))];
        let v = Block::defining(1, 0, SimpleType::c(2), "V0").unwrap();
        let blocks = [v, Block::trivial(1, 1), Block::trivial(1, 1)];
        assert!(realize(SimpleType::c(3), &comps, &blocks).is_ok());
    }

    #[test]
    fn wrong_dimension_rejected() {
        let comps = [Component::Simple(SimpleType::a(1))];
        let blocks = [Block::sym_power(1, 0, 2, "S0^2").unwrap()];
        assert!(matches!(realize(SimpleType::c(2), &comps, &blocks), Err(Error::Inadmissible(_))));
    }
}
