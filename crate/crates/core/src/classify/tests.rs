use super::verify::{verify_entry, Selection};
use super::*;
use crate::complexity::complexity_oracle;
use crate::pairs::registry::{Registry, Table};

fn reg() -> Registry {
    Registry::builtin().unwrap()
}

fn idx(vals: &[(char, i64)]) -> Indices {
    vals.iter().fold(Indices::default(), |i, &(c, v)| i.with(c, v))
}

fn entry(r: &Registry, t: Table, item: u32) -> &TableEntry {
    r.get(t, item).unwrap()
}

#[test]
fn valency_of_the_sl2_in_a_levi_is_valent() {
    let r = reg();
    // sl5 with sl3 + sl2 + c, component sl2.
    let v = component_valency(entry(&r, Table::T1, 2), 1, &idx(&[('n', 3), ('m', 2)]), &Options::default()).unwrap();
    assert_eq!(v.verdict, Verdict::Valent);
    assert!(v.necessary_check <= 0);
    assert_eq!(v.coupled_complexity, 0);
}

#[test]
fn so3_in_sl3_is_one_valent() {
    let r = reg();
    let v = component_valency(entry(&r, Table::T1, 1), 0, &idx(&[('n', 3)]), &Options::default()).unwrap();
    assert_eq!(v.verdict, Verdict::OneValent);
    assert_eq!(v.necessary_check, 1);
}

#[test]
fn so4_in_so5_is_valent() {
    let r = reg();
    let v = component_valency(entry(&r, Table::T1, 10), 0, &idx(&[('n', 4), ('m', 1)]), &Options::default()).unwrap();
    assert_eq!(v.verdict, Verdict::Valent);
}

#[test]
fn necessary_values() {
    let r = reg();
    let so7 = entry(&r, Table::T1, 12).spec(&Indices::default()).unwrap();
    assert_eq!(necessary_value(&so7, 0).unwrap(), Some(1));
    let e8 = entry(&r, Table::T1, 30).spec(&Indices::default()).unwrap();
    assert_eq!(necessary_value(&e8, 0).unwrap(), Some(56));
    // A central part has no value.
    let gl = entry(&r, Table::T1, 17).spec(&idx(&[('n', 2)])).unwrap();
    assert_eq!(necessary_value(&gl, 1).unwrap(), None);
}

#[test]
fn projection_classes() {
    let r = reg();
    let o = Options::default();
    let sp6 = sl2_projection_class(entry(&r, Table::T1, 16), 1, &idx(&[('n', 2), ('m', 1)]), &o).unwrap();
    assert_eq!(sp6, ProjectionClass::Surjective);
    let levi = sl2_projection_class(entry(&r, Table::T1, 2), 1, &idx(&[('n', 3), ('m', 2)]), &o).unwrap();
    assert_eq!(levi, ProjectionClass::OneDimensional);
    let f4 = sl2_projection_class(entry(&r, Table::T1, 21), 1, &Indices::default(), &o).unwrap();
    assert_eq!(f4, ProjectionClass::Zero);
}

#[test]
fn projection_class_needs_sl2() {
    let r = reg();
    let err = sl2_projection_class(entry(&r, Table::T1, 21), 0, &Indices::default(), &Options::default());
    assert!(matches!(err, Err(Error::Inadmissible(_))));
}

#[test]
fn coupling_bounds() {
    use ProjectionClass::*;
    assert_eq!(coupling_complexity_bound(0, 0, Surjective, OneDimensional), Bound::Exact(0));
    assert_eq!(coupling_complexity_bound(0, 0, OneDimensional, OneDimensional), Bound::Exact(1));
    assert_eq!(coupling_complexity_bound(0, 1, Zero, Zero), Bound::AtLeast(3));
    assert_eq!(coupling_complexity_bound(1, 0, Zero, Surjective), Bound::Exact(2));
    assert_eq!(coupling_complexity_bound(0, 0, OneDimensional, Zero), Bound::AtLeast(2));
    assert!(Bound::AtLeast(2).admits(5));
    assert!(!Bound::Exact(1).admits(2));
}

#[test]
fn elementary_coupling_dimensions() {
    let r = reg();
    let inst = entry(&r, Table::T1, 1).spec(&idx(&[('n', 3)])).unwrap().instantiate().unwrap();
    let (model, h) = elementary_coupling(&inst, 0).unwrap();
    assert_eq!(model.dim(), 8 + 3);
    assert_eq!(h.dim(), 3);
    assert!(h.is_subalgebra(&model));
}

#[test]
fn verify_examples() {
    let r = reg();
    let o = Options::default();
    let t4_8 = verify_entry(entry(&r, Table::T4, 8), &idx(&[('n', 1), ('m', 1)]), &o);
    assert!(t4_8.passed(), "{:?}", t4_8.mismatches);
    let f = t4_8.formula.unwrap();
    assert_eq!((f.complexity, f.rank, f.ssgp_dim), (1, Some(4), Some(0)));
    let t4_23 = verify_entry(entry(&r, Table::T4, 23), &idx(&[('n', 1)]), &o);
    assert!(t4_23.passed());
    assert_eq!(t4_23.formula.unwrap().rank, Some(7));
    let t3_8 = verify_entry(entry(&r, Table::T3, 8), &idx(&[('n', 5)]), &o);
    assert!(t3_8.passed());
    assert_eq!(t3_8.formula.unwrap().rank, Some(5));
}

#[test]
fn verify_tables_keeps_registry_order() {
    let r = reg();
    let rep = verify_tables(&r, &[Table::T3], Selection::Smallest(1), &Options::default());
    let items: Vec<String> = rep.records.iter().map(|x| x.pair.clone()).collect();
    let want: Vec<String> = r.table(Table::T3).map(|e| e.id()).collect();
    assert_eq!(items, want);
    assert!(rep.all_passed());
}

#[test]
fn step1_filter_examples() {
    let r = reg();
    let c = necessary_valency_filter(r.table(Table::T1), 3).unwrap();
    assert!(c.iter().any(|x| x.pair == "T1:1" && x.indices == "n=3" && x.value == 1));
    assert!(c.iter().any(|x| x.pair == "T1:12"));
    assert!(!c.iter().any(|x| x.pair == "T1:30"));
}

#[test]
fn joint_sp4_coupling_exceeds_one() {
    let r = reg();
    let spec = joint_sp4_coupling(&r, 1, 1).unwrap();
    let inst = spec.instantiate().unwrap();
    let c = complexity_oracle(&inst.model, &inst.h, &Options::default()).unwrap();
    assert!(c.complexity > 1, "c = {}", c.complexity);
}
