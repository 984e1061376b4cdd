//! Complexity and rank of a pair `(g, h)`.
//!
//! Two engines:
//! - the oracle: `c = dim g - max_g dim(h + Ad(g) b)` over random group
//!   elements `g`;
//! - the formula: `c = N(g) - dim h + N(s) + rk s` and `rank = rk g - rk s`,
//!   where `s` is the generic stabilizer of `h` on the form-orthogonal
//!   complement `m`.
//!
//! Non-generic draws can only lower `dim(h + Ad(g) b)` and only raise
//! stabilizer and centralizer dimensions, so the oracle keeps the maximum
//! and the stabilizer computations keep the minimum. A result is flagged
//! stable when at least half of the trials attain the extremum.

pub mod kernel;
pub mod levi;
pub mod torus;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::liealg::matrix::Q;
use crate::liealg::{LieAlgebraModel, SubspaceBasis};
use crate::linalg::{self, convert_rows, Echelon};
use crate::rng::{trial_seed, SplitMix64};
use rayon::prelude::*;
use serde::Serialize;
use std::ops::Range;

pub use kernel::{Certificate, FieldTask, RankKernel, Strategy};
pub use levi::complexity_levi;
pub use torus::{nonsaturated_complexity_one, p_subalgebra, reduce_center, PSubalgebra};

/// Integer coordinates of random points are drawn from `[-COEFF, COEFF]`.
pub const COEFF: i64 = 9;
/// Parameters of group elements are drawn from `[-WORD_BOUND, WORD_BOUND]`.
pub const WORD_BOUND: i64 = 9;
pub const DEFAULT_TRIALS: usize = 5;
pub const DEFAULT_SEED: u64 = 0x0DDB_A11C_0FFE_E5ED;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub seed: u64,
    pub trials: usize,
    pub strategy: Strategy,
}

impl Default for Options {
    fn default() -> Self {
        Options { seed: DEFAULT_SEED, trials: DEFAULT_TRIALS, strategy: Strategy::Modular }
    }
}

impl Options {
    pub fn with_seed(seed: u64) -> Self {
        Options { seed, ..Options::default() }
    }

    pub fn kernel(&self) -> RankKernel {
        RankKernel::new(self.strategy, self.seed)
    }

    pub fn seeds(&self) -> Vec<u64> {
        (0..self.trials).map(|t| trial_seed(self.seed, t)).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Oracle,
    Formula,
    Levi,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::Oracle => "oracle",
            Method::Formula => "formula",
            Method::Levi => "levi",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplexityReport {
    pub complexity: usize,
    pub rank: Option<usize>,
    pub ssgp_dim: Option<usize>,
    pub ssgp_rank: Option<usize>,
    pub method: Method,
    pub trials: usize,
    pub seeds: Vec<u64>,
    pub stable: bool,
    pub certificate: Certificate,
}

/// Number of trials needed for a majority at the extremum.
fn quorum(trials: usize) -> usize {
    trials.div_ceil(2)
}

fn extremum_stable(values: &[usize], best: usize) -> bool {
    values.iter().filter(|&&v| v == best).count() >= quorum(values.len())
}

fn check_trials(trials: usize) -> Result<()> {
    if trials == 0 {
        return Err(Error::Inadmissible("at least one trial is required".into()));
    }
    Ok(())
}

fn random_coeffs(rng: &mut SplitMix64, n: usize) -> Vec<i64> {
    (0..n).map(|_| rng.range_i64(-COEFF, COEFF)).collect()
}

fn combine<F: Field>(f: &F, coeffs: &[i64], basis: &[Vec<F::Elem>], n: usize) -> Vec<F::Elem> {
    let mut v = vec![f.zero(); n];
    for (c, b) in coeffs.iter().zip(basis) {
        if *c == 0 {
            continue;
        }
        let c = f.from_i64(*c);
        for (x, y) in v.iter_mut().zip(b) {
            f.add_mul(x, &c, y);
        }
    }
    v
}

/// Kernel of `x -> [x, v]` on the span of `basis`, as coefficient vectors.
fn bracket_kernel<F: Field>(
    f: &F,
    model: &LieAlgebraModel,
    basis: &[Vec<F::Elem>],
    v: &[F::Elem],
) -> Vec<Vec<F::Elem>> {
    let cols: Vec<Vec<F::Elem>> = basis.iter().map(|x| model.bracket(f, x, v)).collect();
    let rows = linalg::transpose::<F>(&cols);
    linalg::nullspace(f, rows, basis.len())
}

/// Kernel basis of `x -> B(h_i, x)`; canonical, so integer draws against it
/// agree across fields.
/// With `support`, the complement is taken inside the span of those basis
/// vectors.
fn complement_basis<F: Field>(
    f: &F,
    model: &LieAlgebraModel,
    h: &[Vec<F::Elem>],
    support: Option<&[usize]>,
) -> Vec<Vec<F::Elem>> {
    let eqs: Vec<Vec<F::Elem>> = h.iter().map(|x| model.form_apply(f, x)).collect();
    let Some(sup) = support else {
        return linalg::nullspace(f, eqs, model.dim());
    };
    let eqs = eqs.iter().map(|r| sup.iter().map(|&i| r[i].clone()).collect()).collect();
    linalg::nullspace(f, eqs, sup.len())
        .into_iter()
        .map(|k| {
            let mut v = vec![f.zero(); model.dim()];
            for (&i, x) in sup.iter().zip(k) {
                v[i] = x;
            }
            v
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Oracle

struct OracleTask<'a> {
    model: &'a LieAlgebraModel,
    h: &'a [Vec<Q>],
    words: &'a [Vec<(usize, i64)>],
}

impl FieldTask for OracleTask<'_> {
    type Out = Vec<usize>;

    fn run<F: Field>(&self, f: &F) -> Option<Vec<usize>> {
        let n = self.model.dim();
        let h = convert_rows(f, self.h)?;
        let borel = self.model.borel_indices();
        let mut in_b = vec![false; n];
        for &i in &borel {
            in_b[i] = true;
        }
        let outside: Vec<usize> = (0..n).filter(|&i| !in_b[i]).collect();
        let dims = self
            .words
            .par_iter()
            .map(|w| {
                if h.len() <= borel.len() {
                    // dim(h + Ad(g) b) = dim(Ad(g)^-1 h + b); the word is
                    // random, so conjugate h by it instead.
                    let rows: Vec<Vec<F::Elem>> = h
                        .iter()
                        .map(|x| {
                            let y = self.model.apply_word(f, w, x);
                            outside.iter().map(|&i| y[i].clone()).collect()
                        })
                        .collect();
                    borel.len() + linalg::rank(f, rows, outside.len())
                } else {
                    let mut rows = h.clone();
                    for &i in &borel {
                        let mut e = vec![f.zero(); n];
                        e[i] = f.one();
                        rows.push(self.model.apply_word(f, w, &e));
                    }
                    linalg::rank(f, rows, n)
                }
            })
            .collect();
        Some(dims)
    }
}

/// `c = dim g - max_t dim(h + Ad(g_t) b)`.
pub fn complexity_oracle(
    model: &LieAlgebraModel,
    h: &SubspaceBasis,
    opts: &Options,
) -> Result<ComplexityReport> {
    check_trials(opts.trials)?;
    let seeds = opts.seeds();
    let words: Vec<_> = seeds
        .iter()
        .map(|&s| model.unipotent_word(&mut SplitMix64::new(s), WORD_BOUND))
        .collect();
    let task = OracleTask { model, h: h.vectors(), words: &words };
    let (dims, certificate) = opts.kernel().run(&task)?;
    let best = *dims.iter().max().unwrap();
    Ok(ComplexityReport {
        complexity: model.dim() - best,
        rank: None,
        ssgp_dim: None,
        ssgp_rank: None,
        method: Method::Oracle,
        trials: opts.trials,
        seeds,
        stable: extremum_stable(&dims, best),
        certificate,
    })
}

// ---------------------------------------------------------------------------
// Generic stabilizer

/// The generic stabilizer `s` of `h` acting on its complement `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SsgpResult {
    pub dim: usize,
    pub rank: usize,
    pub m_dim: usize,
    /// Kernel dimension in every trial.
    pub trial_dims: Vec<usize>,
    /// Coefficients of the witness `v` in the reduced echelon basis of `m`.
    pub witness: Vec<i64>,
    pub witness_trial: usize,
    /// `s` closed under the bracket.
    pub closed: bool,
    pub stable: bool,
    pub rank_stable: bool,
    /// `dim` of the image of `s` under each requested coordinate projection.
    pub projection_dims: Vec<usize>,
    /// Same, for ranges of coefficients over the given basis of `h`.
    pub coefficient_dims: Vec<usize>,
    pub certificate: Certificate,
    /// Coordinates spanning the ambient of `m` when it is not all of `g`.
    pub support: Option<Vec<usize>>,
}

impl SsgpResult {
    /// `v` in global coordinates.
    pub fn witness_vector(&self, model: &LieAlgebraModel, h: &SubspaceBasis) -> Vec<Q> {
        let m = complement_basis(&crate::field::Rationals, model, h.vectors(), self.support.as_deref());
        combine(&crate::field::Rationals, &self.witness, &m, model.dim())
    }

    /// Exact basis of `s`, recomputed over `Q` at the witness.
    pub fn basis(&self, model: &LieAlgebraModel, h: &SubspaceBasis) -> SubspaceBasis {
        let f = crate::field::Rationals;
        let v = self.witness_vector(model, h);
        let hv = h.vectors();
        let k = bracket_kernel(&f, model, hv, &v);
        let s = k.iter().map(|c| combine_q(c, hv, model.dim())).collect();
        SubspaceBasis::from_vectors(model.dim(), s)
    }
}

fn combine_q(c: &[Q], basis: &[Vec<Q>], n: usize) -> Vec<Q> {
    let f = crate::field::Rationals;
    let mut v = vec![f.zero(); n];
    for (a, b) in c.iter().zip(basis) {
        for (x, y) in v.iter_mut().zip(b) {
            f.add_mul(x, a, y);
        }
    }
    v
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct SsgpOut {
    m_dim: usize,
    trial_dims: Vec<usize>,
    witness: Vec<i64>,
    witness_trial: usize,
    closed: bool,
    rank_dims: Vec<usize>,
    projection_dims: Vec<usize>,
    coefficient_dims: Vec<usize>,
}

struct SsgpTask<'a> {
    model: &'a LieAlgebraModel,
    h: &'a [Vec<Q>],
    seeds: &'a [u64],
    rank_seeds: &'a [u64],
    projections: &'a [Range<usize>],
    coefficient_projections: &'a [Range<usize>],
    support: Option<&'a [usize]>,
}

/// Centralizer dimensions in `s` of random elements, one per seed.
fn centralizer_dims<F: Field>(
    f: &F,
    model: &LieAlgebraModel,
    s: &[Vec<F::Elem>],
    seeds: &[u64],
) -> Vec<usize> {
    seeds
        .par_iter()
        .map(|&seed| {
            let c = random_coeffs(&mut SplitMix64::new(seed), s.len());
            let y = combine(f, &c, s, model.dim());
            bracket_kernel(f, model, s, &y).len()
        })
        .collect()
}

fn combine_field<F: Field>(f: &F, c: &[F::Elem], basis: &[Vec<F::Elem>], n: usize) -> Vec<F::Elem> {
    let mut v = vec![f.zero(); n];
    for (a, b) in c.iter().zip(basis) {
        if f.is_zero(a) {
            continue;
        }
        for (x, y) in v.iter_mut().zip(b) {
            f.add_mul(x, a, y);
        }
    }
    v
}

/// Rank of the invariant form restricted to the span of `s`.
fn gram_rank<F: Field>(f: &F, model: &LieAlgebraModel, s: &[Vec<F::Elem>]) -> usize {
    let rows = s
        .iter()
        .map(|x| {
            let bx = model.form_apply(f, x);
            s.iter()
                .map(|y| bx.iter().zip(y).fold(f.zero(), |mut acc, (a, b)| {
                    f.add_mul(&mut acc, a, b);
                    acc
                }))
                .collect()
        })
        .collect();
    linalg::rank(f, rows, s.len())
}

fn is_closed<F: Field>(f: &F, model: &LieAlgebraModel, s: &[Vec<F::Elem>]) -> bool {
    let mut e = Echelon::empty(model.dim());
    for v in s {
        e.insert(f, v.clone());
    }
    (0..s.len()).all(|a| (a + 1..s.len()).all(|b| e.contains(f, &model.bracket(f, &s[a], &s[b]))))
}

impl FieldTask for SsgpTask<'_> {
    type Out = SsgpOut;

    fn run<F: Field>(&self, f: &F) -> Option<SsgpOut> {
        let n = self.model.dim();
        let h = convert_rows(f, self.h)?;
        let m = complement_basis(f, self.model, &h, self.support);
        let draws: Vec<Vec<i64>> = self
            .seeds
            .iter()
            .map(|&s| random_coeffs(&mut SplitMix64::new(s), m.len()))
            .collect();
        let kernels: Vec<Vec<Vec<F::Elem>>> = draws
            .par_iter()
            .map(|c| bracket_kernel(f, self.model, &h, &combine(f, c, &m, n)))
            .collect();
        let trial_dims: Vec<usize> = kernels.iter().map(|k| k.len()).collect();
        let min = *trial_dims.iter().min()?;
        let span = |k: &Vec<Vec<F::Elem>>| -> Vec<Vec<F::Elem>> {
            k.iter().map(|c| combine_field(f, c, &h, n)).collect()
        };
        // Special orbits can share the generic stabilizer dimension; their
        // stabilizers are not reductive, so prefer a nondegenerate form on s.
        let (witness_trial, s) = (0..kernels.len())
            .filter(|&t| trial_dims[t] == min)
            .map(|t| {
                let s = span(&kernels[t]);
                (gram_rank(f, self.model, &s), t, s)
            })
            .max_by_key(|(r, t, _)| (*r, std::cmp::Reverse(*t)))
            .map(|(_, t, s)| (t, s))?;
        let closed = is_closed(f, self.model, &s);
        let rank_dims = centralizer_dims(f, self.model, &s, self.rank_seeds);
        let projection_dims = self
            .projections
            .iter()
            .map(|r| {
                let rows = s.iter().map(|v| v[r.clone()].to_vec()).collect();
                linalg::rank(f, rows, r.len())
            })
            .collect();
        let kernel = &kernels[witness_trial];
        let coefficient_dims = self
            .coefficient_projections
            .iter()
            .map(|r| {
                let rows = kernel.iter().map(|c| c[r.clone()].to_vec()).collect();
                linalg::rank(f, rows, r.len())
            })
            .collect();
        Some(SsgpOut {
            m_dim: m.len(),
            trial_dims,
            witness: draws[witness_trial].clone(),
            witness_trial,
            closed,
            rank_dims,
            projection_dims,
            coefficient_dims,
        })
    }
}

/// Generic stabilizer of `h` on `m`, with the dimension of its image under
/// each coordinate projection in `projections`. With `support`, `h` must lie
/// in the span of those basis vectors, which replace `g` as the ambient.
pub fn isotropy_ssgp_in(
    model: &LieAlgebraModel,
    h: &SubspaceBasis,
    support: Option<&[usize]>,
    opts: &Options,
    projections: &[Range<usize>],
) -> Result<SsgpResult> {
    ssgp_core(model, h.vectors(), support, opts, projections, &[])
}

/// Generic stabilizer for `h` given by independent vectors, usually a basis
/// adapted to the parts of `h`, with the dimension of the image of `s` under
/// each projection onto a range of coefficients. Only the dimensions and
/// `coefficient_dims` refer to `h_vectors`; `basis` needs the echelon form.
pub fn isotropy_ssgp_adapted(
    model: &LieAlgebraModel,
    h_vectors: &[Vec<Q>],
    opts: &Options,
    coefficient_projections: &[Range<usize>],
) -> Result<SsgpResult> {
    ssgp_core(model, h_vectors, None, opts, &[], coefficient_projections)
}

fn ssgp_core(
    model: &LieAlgebraModel,
    h: &[Vec<Q>],
    support: Option<&[usize]>,
    opts: &Options,
    projections: &[Range<usize>],
    coefficient_projections: &[Range<usize>],
) -> Result<SsgpResult> {
    check_trials(opts.trials)?;
    if coefficient_projections.iter().any(|r| r.end > h.len()) {
        return Err(Error::Inadmissible("coefficient range outside the basis of h".into()));
    }
    let seeds = opts.seeds();
    let rank_seeds: Vec<u64> = (0..opts.trials)
        .map(|t| trial_seed(opts.seed ^ 0x9E37_79B9_7F4A_7C15, t))
        .collect();
    let task = SsgpTask {
        model,
        h,
        seeds: &seeds,
        rank_seeds: &rank_seeds,
        projections,
        coefficient_projections,
        support,
    };
    let (out, certificate) = opts.kernel().run(&task)?;
    let ambient = support.map_or(model.dim(), |s| s.len());
    if out.m_dim + h.len() != ambient {
        return Err(Error::Degenerate(format!(
            "invariant form degenerate on h: dim m = {}, dim h = {}, ambient dim = {ambient}",
            out.m_dim,
            h.len(),
        )));
    }
    let dim = out.trial_dims[out.witness_trial];
    let rank = *out.rank_dims.iter().min().unwrap_or(&0);
    Ok(SsgpResult {
        dim,
        rank,
        m_dim: out.m_dim,
        stable: extremum_stable(&out.trial_dims, dim),
        rank_stable: out.rank_dims.is_empty() || extremum_stable(&out.rank_dims, rank),
        trial_dims: out.trial_dims,
        witness: out.witness,
        witness_trial: out.witness_trial,
        closed: out.closed,
        projection_dims: out.projection_dims,
        coefficient_dims: out.coefficient_dims,
        certificate,
        support: support.map(|s| s.to_vec()),
    })
}

pub fn isotropy_ssgp_projected(
    model: &LieAlgebraModel,
    h: &SubspaceBasis,
    opts: &Options,
    projections: &[Range<usize>],
) -> Result<SsgpResult> {
    isotropy_ssgp_in(model, h, None, opts, projections)
}

pub fn isotropy_ssgp(model: &LieAlgebraModel, h: &SubspaceBasis, opts: &Options) -> Result<SsgpResult> {
    isotropy_ssgp_projected(model, h, opts, &[])
}

// ---------------------------------------------------------------------------
// Rank of a reductive subalgebra

struct RankTask<'a> {
    model: &'a LieAlgebraModel,
    sub: &'a [Vec<Q>],
    seeds: &'a [u64],
}

impl FieldTask for RankTask<'_> {
    type Out = Vec<usize>;
    fn run<F: Field>(&self, f: &F) -> Option<Vec<usize>> {
        let s = convert_rows(f, self.sub)?;
        Some(centralizer_dims(f, self.model, &s, self.seeds))
    }
}

/// `min_t dim z_sub(y_t)` for random `y_t` in `sub`, with the stability flag.
pub fn reductive_rank(
    model: &LieAlgebraModel,
    sub: &SubspaceBasis,
    opts: &Options,
) -> Result<(usize, bool)> {
    check_trials(opts.trials)?;
    if sub.dim() == 0 {
        return Ok((0, true));
    }
    let seeds = opts.seeds();
    let (dims, _) = opts.kernel().run(&RankTask { model, sub: sub.vectors(), seeds: &seeds })?;
    let r = *dims.iter().min().unwrap();
    Ok((r, extremum_stable(&dims, r)))
}

// ---------------------------------------------------------------------------
// Formula

/// `c = N(g) - dim h + N(s) + rk s`, `rank = rk g - rk s`.
pub fn complexity_formula(
    model: &LieAlgebraModel,
    h: &SubspaceBasis,
    opts: &Options,
) -> Result<ComplexityReport> {
    let s = isotropy_ssgp(model, h, opts)?;
    formula_from_ssgp(model.n_pos(), model.rank(), h.dim(), &s, opts)
}

/// Apply the formula for an ambient with `n_pos` positive roots and rank `rk`.
pub(crate) fn formula_from_ssgp(
    n_pos: usize,
    rk: usize,
    h_dim: usize,
    s: &SsgpResult,
    opts: &Options,
) -> Result<ComplexityReport> {
    if !s.closed {
        return Err(Error::Internal("generic stabilizer is not closed under the bracket".into()));
    }
    if s.rank > s.dim || (s.dim - s.rank) % 2 != 0 {
        return Err(Error::Internal(format!(
            "stabilizer dim {} and rank {} are not those of a reductive algebra",
            s.dim, s.rank
        )));
    }
    let n_s = (s.dim - s.rank) / 2;
    let c = (n_pos + n_s + s.rank) as i64 - h_dim as i64;
    if c < 0 || s.rank > rk {
        return Err(Error::Internal(format!(
            "negative complexity or rank (c = {c}, rk s = {}, rk g = {})",
            s.rank, rk
        )));
    }
    Ok(ComplexityReport {
        complexity: c as usize,
        rank: Some(rk - s.rank),
        ssgp_dim: Some(s.dim),
        ssgp_rank: Some(s.rank),
        method: Method::Formula,
        trials: opts.trials,
        seeds: opts.seeds(),
        stable: s.stable && s.rank_stable,
        certificate: s.certificate,
    })
}

/// Both engines; the formula report carries rank and stabilizer data.
pub fn complexity_both(
    model: &LieAlgebraModel,
    h: &SubspaceBasis,
    opts: &Options,
) -> Result<(ComplexityReport, ComplexityReport)> {
    let (a, b) = rayon::join(|| complexity_oracle(model, h, opts), || complexity_formula(model, h, opts));
    Ok((a?, b?))
}

#[cfg(test)]
mod tests;
