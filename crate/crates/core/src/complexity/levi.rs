//! Complexity through a parabolic: for `h` inside a Levi subalgebra `l` of
//! `p = l + p^u`, `c(g, h) = c(l, h) + c_{S1}(p^u)` where `S1` is the generic
//! stabilizer of `h` on `l/h`.
//!
//! The second term needs a Borel subalgebra of `S1`. It is taken as
//! `S1 ∩ b`; this is a Borel subalgebra exactly when its dimension is
//! `(dim S1 + rk S1) / 2`, which is checked. Stabilizers in other positions
//! are rejected as unsupported.

use super::{
    extremum_stable, formula_from_ssgp, isotropy_ssgp_in, random_coeffs, Certificate, ComplexityReport,
    FieldTask, Method, Options,
};
use crate::error::{Error, Result};
use crate::field::{Field, Rationals};
use crate::liealg::matrix::Q;
use crate::liealg::{Label, LieAlgebraModel, SubspaceBasis};
use crate::linalg::{self, convert_rows};
use crate::rng::{trial_seed, SplitMix64};
use std::collections::BTreeSet;

/// Coordinates of `l` and of `p^u` for the simple roots `(component, i)`
/// in `parabolic_simples`.
pub fn levi_coordinates(model: &LieAlgebraModel, parabolic_simples: &[(usize, usize)]) -> (Vec<usize>, Vec<usize>) {
    let chosen: BTreeSet<(usize, usize)> = parabolic_simples.iter().copied().collect();
    let mut l = Vec::new();
    let mut pu = Vec::new();
    for i in 0..model.dim() {
        match model.label(i) {
            (c, Label::Root(a)) => {
                let rs = model.root_system(c).unwrap();
                let root = &rs.all_roots[a];
                let inside = root.iter().enumerate().all(|(j, &x)| x == 0 || chosen.contains(&(c, j)));
                if inside {
                    l.push(i);
                } else if rs.is_positive(a) {
                    pu.push(i);
                }
            }
            _ => l.push(i),
        }
    }
    (l, pu)
}

struct StabTask<'a> {
    model: &'a LieAlgebraModel,
    basis: &'a [Vec<Q>],
    support: &'a [usize],
    seeds: &'a [u64],
}

impl FieldTask for StabTask<'_> {
    type Out = Vec<usize>;
    fn run<F: Field>(&self, f: &F) -> Option<Vec<usize>> {
        let b = convert_rows(f, self.basis)?;
        Some(
            self.seeds
                .iter()
                .map(|&s| {
                    let c = random_coeffs(&mut SplitMix64::new(s), self.support.len());
                    let mut u = vec![f.zero(); self.model.dim()];
                    for (&i, &x) in self.support.iter().zip(&c) {
                        u[i] = f.from_i64(x);
                    }
                    super::bracket_kernel(f, self.model, &b, &u).len()
                })
                .collect(),
        )
    }
}

/// `c(l, h) + c_{S1}(p^u)`.
pub fn complexity_levi(
    model: &LieAlgebraModel,
    h: &SubspaceBasis,
    parabolic_simples: &[(usize, usize)],
    opts: &Options,
) -> Result<ComplexityReport> {
    let n = model.dim();
    let (l, pu) = levi_coordinates(model, parabolic_simples);
    let l_space = SubspaceBasis::from_indices(n, &l);
    if !l_space.contains_space(h) {
        return Err(Error::Inadmissible("h is not contained in the Levi subalgebra".into()));
    }
    let n_pos_l = l.iter().filter(|&&i| matches!(model.label(i).1, Label::Root(_))).count() / 2;
    let s1 = isotropy_ssgp_in(model, h, Some(&l), opts, &[])?;
    let c_l = formula_from_ssgp(n_pos_l, model.rank(), h.dim(), &s1, opts)?;

    // Borel subalgebra of S1 as its intersection with the standard Borel.
    let s1_basis = s1.basis(model, h);
    let borel: BTreeSet<usize> = model.borel_indices().into_iter().collect();
    let outside: Vec<usize> = (0..n).filter(|i| !borel.contains(i)).collect();
    let f = Rationals;
    let eqs: Vec<Vec<Q>> = outside
        .iter()
        .map(|&k| s1_basis.vectors().iter().map(|v| v[k].clone()).collect())
        .collect();
    let coeffs = linalg::nullspace(&f, eqs, s1_basis.dim());
    let b_s1: Vec<Vec<Q>> = coeffs
        .iter()
        .map(|c| {
            let mut v = vec![f.zero(); n];
            for (a, b) in c.iter().zip(s1_basis.vectors()) {
                for (x, y) in v.iter_mut().zip(b) {
                    f.add_mul(x, a, y);
                }
            }
            v
        })
        .collect();
    if 2 * b_s1.len() != s1.dim + s1.rank {
        return Err(Error::Unsupported(format!(
            "generic stabilizer (dim {}, rank {}) meets the standard Borel in dimension {}, not in a Borel subalgebra",
            s1.dim,
            s1.rank,
            b_s1.len()
        )));
    }

    let seeds: Vec<u64> = (0..opts.trials).map(|t| trial_seed(opts.seed ^ 0xB0E1, t)).collect();
    let (b1_dims, cert) = opts.kernel().run(&StabTask { model, basis: &b_s1, support: &pu, seeds: &seeds })?;
    let b1 = *b1_dims.iter().min().unwrap_or(&b_s1.len());
    let orbit = b_s1.len() - b1;
    let c_pu = pu.len().checked_sub(orbit).ok_or_else(|| {
        Error::Internal(format!("orbit of dimension {orbit} in a module of dimension {}", pu.len()))
    })?;
    Ok(ComplexityReport {
        complexity: c_l.complexity + c_pu,
        rank: None,
        ssgp_dim: Some(s1.dim),
        ssgp_rank: Some(s1.rank),
        method: Method::Levi,
        trials: opts.trials,
        seeds: opts.seeds(),
        stable: c_l.stable && (b1_dims.is_empty() || extremum_stable(&b1_dims, b1)),
        certificate: if cert == Certificate::Exact { cert } else { c_l.certificate },
    })
}
