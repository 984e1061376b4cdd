use super::*;
use crate::field::rat;
use crate::liealg::Component;
use crate::pairs::expr::Indices;
use crate::pairs::registry::{Registry, Table};
use crate::pairs::Instance;
use crate::rootsys::SimpleType;

fn entry(t: Table, item: u32, idx: Indices) -> Instance {
    let reg = Registry::builtin().unwrap();
    reg.get(t, item).unwrap().spec(&idx).unwrap().instantiate().unwrap()
}

fn idx(pairs: &[(char, i64)]) -> Indices {
    pairs.iter().fold(Indices::default(), |i, &(c, v)| i.with(c, v))
}

fn opts() -> Options {
    Options::default()
}

fn simple(t: SimpleType) -> LieAlgebraModel {
    LieAlgebraModel::standard(&[Component::Simple(t)]).unwrap()
}

#[test]
fn whole_algebra_is_spherical() {
    let g = simple(SimpleType::b(2));
    let h = SubspaceBasis::from_indices(g.dim(), &(0..g.dim()).collect::<Vec<_>>());
    let o = complexity_oracle(&g, &h, &opts()).unwrap();
    assert_eq!(o.complexity, 0);
    assert!(o.stable);
    let s = isotropy_ssgp(&g, &h, &opts()).unwrap();
    assert_eq!((s.dim, s.m_dim), (10, 0));
    let f = complexity_formula(&g, &h, &opts()).unwrap();
    assert_eq!((f.complexity, f.rank), (0, Some(0)));
}

#[test]
fn zero_subalgebra_of_sl2() {
    let g = simple(SimpleType::a(1));
    let h = SubspaceBasis::zero(3);
    assert_eq!(complexity_oracle(&g, &h, &opts()).unwrap().complexity, 1);
    let f = complexity_formula(&g, &h, &opts()).unwrap();
    assert_eq!((f.complexity, f.rank, f.ssgp_dim), (1, Some(1), Some(0)));
}

#[test]
fn principal_sl2_in_sp4() {
    let i = entry(Table::T2, 14, Indices::default());
    let (o, f) = complexity_both(&i.model, &i.h, &opts()).unwrap();
    assert_eq!((o.complexity, f.complexity), (1, 1));
    // dim m = 10 - 3
    assert_eq!(isotropy_ssgp(&i.model, &i.h, &opts()).unwrap().m_dim, 7);
}

#[test]
fn stabilizers_of_spherical_pairs() {
    let i = entry(Table::T1, 1, idx(&[('n', 3)]));
    let s = isotropy_ssgp(&i.model, &i.h, &opts()).unwrap();
    assert_eq!((s.dim, s.m_dim), (0, 5));

    let i = entry(Table::T1, 12, Indices::default());
    let s = isotropy_ssgp(&i.model, &i.h, &opts()).unwrap();
    assert!(s.closed && s.stable);
    assert_eq!((s.dim, s.rank), (8, 2));
    let basis = s.basis(&i.model, &i.h);
    assert_eq!(basis.dim(), 8);
    assert!(basis.is_subalgebra(&i.model));
    assert_eq!(reductive_rank(&i.model, &basis, &opts()).unwrap(), (2, true));
}

#[test]
fn reductive_rank_of_small_algebras() {
    let g = simple(SimpleType::a(2));
    let all = SubspaceBasis::from_indices(8, &(0..8).collect::<Vec<_>>());
    assert_eq!(reductive_rank(&g, &all, &opts()).unwrap().0, 2);
    assert_eq!(reductive_rank(&g, &SubspaceBasis::zero(8), &opts()).unwrap().0, 0);
}

#[test]
fn formula_reproduces_rank_columns() {
    let i = entry(Table::T4, 27, idx(&[('n', 2)]));
    let f = complexity_formula(&i.model, &i.h, &opts()).unwrap();
    assert_eq!((f.complexity, f.rank, f.ssgp_dim), (1, Some(3), Some(0)));

    let mut t = Indices::default();
    t.type_param = Some("sl3".into());
    let i = entry(Table::T3, 9, t);
    let f = complexity_formula(&i.model, &i.h, &opts()).unwrap();
    assert_eq!((f.complexity, f.rank), (0, Some(2)));

    let i = entry(Table::T4, 1, idx(&[('n', 0)]));
    let f = complexity_formula(&i.model, &i.h, &opts()).unwrap();
    assert_eq!((f.complexity, f.rank), (1, Some(3)));
}

#[test]
fn borel_dimension_identity() {
    let i = entry(Table::T1, 12, Indices::default());
    let s = isotropy_ssgp(&i.model, &i.h, &opts()).unwrap();
    let f = formula_from_ssgp(i.model.n_pos(), i.model.rank(), i.h.dim(), &s, &opts()).unwrap();
    let dim_b = i.model.n_pos() + i.model.rank();
    let dim_bs = (s.dim + s.rank) / 2;
    assert_eq!(dim_b + dim_bs - i.model.rank() - i.h.dim(), f.complexity);
}

#[test]
fn exact_strategy_agrees() {
    let i = entry(Table::T2, 14, Indices::default());
    let exact = Options { strategy: Strategy::Exact, ..opts() };
    let a = complexity_formula(&i.model, &i.h, &exact).unwrap();
    let b = complexity_formula(&i.model, &i.h, &opts()).unwrap();
    assert_eq!(a.certificate, Certificate::Exact);
    assert_eq!((a.complexity, a.rank), (b.complexity, b.rank));
}

#[test]
fn center_reduction() {
    let g = simple(SimpleType::a(2));
    let h = SubspaceBasis::from_indices(8, &[0, 1]);
    let (g2, h2) = reduce_center(&g, &h).unwrap();
    assert_eq!((g2.dim(), h2.dim()), (8, 2));

    // gl2 = sl2 + c, h everything
    let gl = LieAlgebraModel::standard(&[Component::Simple(SimpleType::a(1)), Component::Center]).unwrap();
    let all = SubspaceBasis::from_indices(4, &[0, 1, 2, 3]);
    let (s, hs) = reduce_center(&gl, &all).unwrap();
    assert_eq!((s.dim(), hs.dim()), (3, 3));

    // diagonal line through the Cartan element and the center
    let mut v = vec![rat(0); 4];
    v[gl.cartan_index(0, 0)] = rat(1);
    v[gl.offset(1)] = rat(1);
    let line = SubspaceBasis::from_vectors(4, vec![v]);
    let (s, l) = reduce_center(&gl, &line).unwrap();
    assert_eq!(l.dim(), 1);
    assert_eq!(complexity_oracle(&gl, &line, &opts()).unwrap().complexity, 0);
    assert_eq!(complexity_oracle(&s, &l, &opts()).unwrap().complexity, 0);
}

#[test]
fn levi_cross_check() {
    // gl3 as the Levi of the (3,1) parabolic in sl4
    let g = simple(SimpleType::a(3));
    let (l, _) = levi::levi_coordinates(&g, &[(0, 0), (0, 1)]);
    let h = SubspaceBasis::from_indices(g.dim(), &l);
    let r = complexity_levi(&g, &h, &[(0, 0), (0, 1)], &opts()).unwrap();
    assert_eq!(r.complexity, 0);
    assert_eq!(complexity_oracle(&g, &h, &opts()).unwrap().complexity, 0);

    // sl3 + sl3 (+ c) in the (3,3) Levi of sl6
    let g = simple(SimpleType::a(5));
    let simples = [(0, 0), (0, 1), (0, 3), (0, 4)];
    let (l, _) = levi::levi_coordinates(&g, &simples);
    let hc = SubspaceBasis::from_indices(g.dim(), &l);
    let no_center: Vec<usize> = l.iter().copied().filter(|&i| i != g.cartan_index(0, 2)).collect();
    let h = SubspaceBasis::from_indices(g.dim(), &no_center);
    for (h, c) in [(&h, 1), (&hc, 0)] {
        assert_eq!(complexity_levi(&g, h, &simples, &opts()).unwrap().complexity, c);
        assert_eq!(complexity_oracle(&g, h, &opts()).unwrap().complexity, c);
    }
}

#[test]
fn levi_rejects_h_outside_l() {
    let g = simple(SimpleType::a(2));
    let all = SubspaceBasis::from_indices(8, &(0..8).collect::<Vec<_>>());
    assert!(complexity_levi(&g, &all, &[(0, 0)], &opts()).is_err());
}

fn split_center(i: &Instance) -> (SubspaceBasis, SubspaceBasis) {
    let n = i.model.dim();
    let (mut z, mut s) = (Vec::new(), Vec::new());
    for p in &i.parts {
        for (c, vs) in p.components.iter().zip(&p.vectors) {
            if *c == Component::Center { z.extend(vs.clone()) } else { s.extend(vs.clone()) }
        }
    }
    (SubspaceBasis::from_vectors(n, s), SubspaceBasis::from_vectors(n, z))
}

#[test]
fn p_subalgebra_examples() {
    let i = entry(Table::T1, 2, idx(&[('n', 2), ('m', 3)]));
    let (hs, z) = split_center(&i);
    let p = p_subalgebra(&i.model, &hs, &z, &opts()).unwrap();
    assert_eq!(p.basis, z);
    assert!(p.stable && p.verified);

    let i = entry(Table::T1, 1, idx(&[('n', 3)]));
    let p = p_subalgebra(&i.model, &i.h, &SubspaceBasis::zero(8), &opts()).unwrap();
    assert_eq!(p.basis.dim(), 0);

    let i = entry(Table::T4, 8, idx(&[('n', 1), ('m', 3)]));
    let (hs, z) = split_center(&i);
    let p = p_subalgebra(&i.model, &hs, &z, &opts()).unwrap();
    assert_eq!((z.dim(), p.basis.dim()), (2, 1));
    assert!(p.verified);
}

#[test]
fn nonsaturated_test_matches_oracle() {
    // weights (-1, -2) on the two lines: k = 1 at n = 5
    let reg = Registry::builtin().unwrap();
    let spec = reg.get(Table::T2, 3).unwrap().spec(&idx(&[('n', 5), ('k', 1)])).unwrap();
    let v = nonsaturated_complexity_one(&spec, &opts()).unwrap();
    let i = spec.instantiate().unwrap();
    let direct = complexity_oracle(&i.model, &i.h, &opts()).unwrap().complexity;
    assert_eq!(direct, 1);
    assert!(v.holds);
    assert_eq!((v.z_dim, v.hull_center_dim), (1, 2));

    // saturated spherical pair: z = z~ = p, image is everything, not a hyperplane
    let spec = reg.get(Table::T1, 2).unwrap().spec(&idx(&[('n', 2), ('m', 3)])).unwrap();
    assert!(!nonsaturated_complexity_one(&spec, &opts()).unwrap().holds);

    // saturated pair of complexity one
    let spec = reg.get(Table::T4, 8).unwrap().spec(&idx(&[('n', 1), ('m', 1)])).unwrap();
    assert!(nonsaturated_complexity_one(&spec, &opts()).unwrap().holds);
}

#[test]
fn stable_reports_do_not_depend_on_seed() {
    let i = entry(Table::T2, 14, Indices::default());
    let base = complexity_formula(&i.model, &i.h, &opts()).unwrap();
    for seed in 1..5 {
        let r = complexity_formula(&i.model, &i.h, &Options::with_seed(seed)).unwrap();
        assert_eq!((r.complexity, r.rank, r.ssgp_dim), (base.complexity, base.rank, base.ssgp_dim));
    }
}
