//! Central tori: reduction along the center of `g`, the subalgebra `p` of
//! the center hull that does not change complexity, and the complexity-one
//! test for pairs whose center is not completely decomposable.

use super::{complexity_oracle, WORD_BOUND, ComplexityReport, FieldTask, Options};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::liealg::matrix::Q;
use crate::liealg::{Component, LieAlgebraModel, SubspaceBasis};
use crate::linalg::{self, convert_rows, Echelon};
use crate::pairs::PairSpec;
use crate::rng::SplitMix64;

/// Drop the central components of `g` and project `h` along them.
pub fn reduce_center(model: &LieAlgebraModel, h: &SubspaceBasis) -> Result<(LieAlgebraModel, SubspaceBasis)> {
    let keep: Vec<usize> = (0..model.components().len())
        .filter(|&c| model.components()[c] != Component::Center)
        .collect();
    let comps: Vec<Component> = keep.iter().map(|&c| model.components()[c]).collect();
    let reduced = LieAlgebraModel::standard(&comps)?;
    let coords: Vec<usize> = keep.iter().flat_map(|&c| model.component_range(c)).collect();
    let vectors = h
        .vectors()
        .iter()
        .map(|v| coords.iter().map(|&i| v[i].clone()).collect())
        .collect();
    let h = SubspaceBasis::from_vectors(reduced.dim(), vectors);
    Ok((reduced, h))
}

/// The subalgebra `p` with its evidence.
#[derive(Clone, Debug)]
pub struct PSubalgebra {
    pub basis: SubspaceBasis,
    /// Dimension of the running intersection after each trial.
    pub running_dims: Vec<usize>,
    /// The intersection reached its final dimension within the first half
    /// of the trials.
    pub stable: bool,
    /// `c(g, h^s) = c(g, h^s + p)` by the oracle.
    pub verified: bool,
}

struct PTask<'a> {
    model: &'a LieAlgebraModel,
    hs: &'a [Vec<Q>],
    hull: &'a [Vec<Q>],
    words: &'a [Vec<(usize, i64)>],
}

impl FieldTask for PTask<'_> {
    /// Running dimensions and the lifted coefficient basis over the hull.
    type Out = (Vec<usize>, Vec<Vec<Q>>);

    fn run<F: Field>(&self, f: &F) -> Option<Self::Out> {
        let n = self.model.dim();
        let hs = convert_rows(f, self.hs)?;
        let hull = convert_rows(f, self.hull)?;
        let k = hull.len();
        // rows of `coef` are coordinates over the hull basis
        let mut coef: Vec<Vec<F::Elem>> = (0..k)
            .map(|i| (0..k).map(|j| if i == j { f.one() } else { f.zero() }).collect())
            .collect();
        let mut dims = Vec::new();
        for w in self.words {
            let mut e = Echelon::empty(n);
            for x in &hs {
                e.insert(f, x.clone());
            }
            for i in self.model.borel_indices() {
                let mut u = vec![f.zero(); n];
                u[i] = f.one();
                e.insert(f, self.model.apply_word(f, w, &u));
            }
            let residuals: Vec<Vec<F::Elem>> = coef
                .iter()
                .map(|c| {
                    let mut z = vec![f.zero(); n];
                    for (a, b) in c.iter().zip(&hull) {
                        for (x, y) in z.iter_mut().zip(b) {
                            f.add_mul(x, a, y);
                        }
                    }
                    e.reduce(f, &mut z);
                    z
                })
                .collect();
            let combos = linalg::nullspace(f, linalg::transpose::<F>(&residuals), coef.len());
            let next: Vec<Vec<F::Elem>> = combos
                .iter()
                .map(|a| {
                    let mut v = vec![f.zero(); k];
                    for (ai, c) in a.iter().zip(&coef) {
                        for (x, y) in v.iter_mut().zip(c) {
                            f.add_mul(x, ai, y);
                        }
                    }
                    v
                })
                .collect();
            coef = linalg::echelon(f, next, k).rows;
            dims.push(coef.len());
        }
        let lifted = coef
            .iter()
            .map(|r| r.iter().map(|x| f.lift(x)).collect::<Option<Vec<Q>>>())
            .collect::<Option<Vec<_>>>()?;
        Some((dims, lifted))
    }
}

/// `p = z~ ∩ ⋂_t (h^s + Ad(g_t) b)` over the trials of `opts`.
pub fn p_subalgebra(
    model: &LieAlgebraModel,
    h_semisimple: &SubspaceBasis,
    center_hull: &SubspaceBasis,
    opts: &Options,
) -> Result<PSubalgebra> {
    let words: Vec<_> = opts
        .seeds()
        .iter()
        .map(|&s| model.unipotent_word(&mut SplitMix64::new(s), WORD_BOUND))
        .collect();
    let task = PTask { model, hs: h_semisimple.vectors(), hull: center_hull.vectors(), words: &words };
    let ((dims, coef), _) = opts.kernel().run(&task)?;
    let n = model.dim();
    let vectors: Vec<Vec<Q>> = coef
        .iter()
        .map(|c| {
            let mut v = vec![Q::from_integer(0.into()); n];
            for (a, b) in c.iter().zip(center_hull.vectors()) {
                for (x, y) in v.iter_mut().zip(b) {
                    *x += a * y;
                }
            }
            v
        })
        .collect();
    let basis = SubspaceBasis::from_vectors(n, vectors);
    let last = *dims.last().unwrap_or(&center_hull.dim());
    let half = opts.trials.div_ceil(2);
    let stable = dims.get(half.saturating_sub(1)).is_some_and(|&d| d == last);
    let with_p = h_semisimple.sum(&basis);
    let a = complexity_oracle(model, h_semisimple, opts)?;
    let b = complexity_oracle(model, &with_p, opts)?;
    Ok(PSubalgebra { basis, running_dims: dims, stable, verified: a.complexity == b.complexity })
}

/// Outcome of the complexity-one test for a pair with center `z`.
#[derive(Clone, Debug)]
pub struct NonsaturatedVerdict {
    pub holds: bool,
    pub hull: ComplexityReport,
    pub z_dim: usize,
    pub hull_center_dim: usize,
    pub p_dim: usize,
    /// `dim (z + p) / p`.
    pub image_dim: usize,
}

fn center_vectors(inst: &crate::pairs::Instance, central: bool) -> Vec<Vec<Q>> {
    let mut out = Vec::new();
    for part in &inst.parts {
        for (c, vs) in part.components.iter().zip(&part.vectors) {
            if (*c == Component::Center) == central {
                out.extend(vs.iter().cloned());
            }
        }
    }
    out
}

/// `c(g, h) = 1` iff `c(g, h~) = 1` and `z` maps onto `z~/p`, or
/// `c(g, h~) = 0` and the image of `z` in `z~/p` is a hyperplane.
pub fn nonsaturated_complexity_one(spec: &PairSpec, opts: &Options) -> Result<NonsaturatedVerdict> {
    let inst = spec.instantiate()?;
    let hull_inst = spec.saturate()?.instantiate()?;
    if hull_inst.model.dim() != inst.model.dim() {
        return Err(Error::Internal("saturation changed the ambient".into()));
    }
    let n = inst.model.dim();
    let z = SubspaceBasis::from_vectors(n, center_vectors(&inst, true));
    let zt = SubspaceBasis::from_vectors(n, center_vectors(&hull_inst, true));
    let hs = SubspaceBasis::from_vectors(n, center_vectors(&hull_inst, false));
    if !zt.contains_space(&z) {
        return Err(Error::Internal("center not contained in its hull".into()));
    }
    let hull = complexity_oracle(&hull_inst.model, &hull_inst.h, opts)?;
    let p = p_subalgebra(&hull_inst.model, &hs, &zt, opts)?;
    let image_dim = z.sum(&p.basis).dim() - p.basis.dim();
    let quotient = zt.dim() - p.basis.dim();
    let holds = match hull.complexity {
        1 => image_dim == quotient,
        0 => image_dim + 1 == quotient,
        _ => false,
    };
    Ok(NonsaturatedVerdict {
        holds,
        hull,
        z_dim: z.dim(),
        hull_center_dim: zt.dim(),
        p_dim: p.basis.dim(),
        image_dim,
    })
}
