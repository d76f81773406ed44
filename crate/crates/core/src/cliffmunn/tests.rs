use super::*;
use crate::elements::{
    full_transformation_monoid, symmetric_group, symmetric_inverse_monoid, Monoid, PartialBijection,
    Permutation, Transformation,
};
use crate::green::{green_structure, maximal_subgroup, transversal, Transversal};
use crate::lattice::LatticeKind;
use crate::linrep::{
    is_irreducible, iso_test, mapping_rep, one_dim_invariant_lines, spin, Irreducibility,
    IrreducibilityMode, IsoResult, Representation, SeedOrder, Subspace, q,
};
use crate::specht::{specht_rep, tabloid_module, IntegerPartition};

fn lambda(p: &[usize]) -> IntegerPartition {
    IntegerPartition::new(p).unwrap()
}

#[test]
fn i3_catalog() {
    let cat = cm_catalog(&CatalogMonoid::symmetric_inverse(3)).unwrap();
    assert_eq!(cat.dims(), vec![1, 3, 3, 3, 1, 2, 1]);
    assert_eq!(cat.sum_of_squares(), 34);
    assert!(cat.characters_distinct());
    let labels: Vec<&str> = cat.entries.iter().map(|e| e.label.as_str()).collect();
    assert_eq!(labels, ["()", "(1)", "(2)", "(1,1)", "(3)", "(2,1)", "(1,1,1)"]);
    for i in 0..cat.entries.len() {
        assert!(cm_roundtrip_check(&cat, i).unwrap(), "entry {i}");
    }
}

#[test]
fn trivial_group_catalog() {
    let cat = cm_catalog(&CatalogMonoid::symmetric_inverse(1)).unwrap();
    assert_eq!(cat.dims(), vec![1, 1]);
    let cat = cm_catalog(&CatalogMonoid::symmetric(3)).unwrap();
    assert_eq!(cat.dims(), vec![1, 2, 1]);
}

#[test]
fn sgl_subsets_catalog_matches_i3() {
    let cat = cm_catalog(&CatalogMonoid::sgl(LatticeKind::Subsets, 3).unwrap()).unwrap();
    let mut dims = cat.dims();
    dims.sort_unstable();
    assert_eq!(dims, vec![1, 1, 1, 2, 3, 3, 3]);
    assert_eq!(cat.sum_of_squares(), 34);
    for i in 0..cat.entries.len() {
        assert!(cm_roundtrip_check(&cat, i).unwrap());
    }
}

#[test]
fn permutohedron_three() {
    let r = renner_permutohedron_catalog(3).unwrap();
    assert!(r.poset.matches);
    assert_eq!(r.poset.types.len(), 5);
    assert_eq!(r.catalog.entries.len(), 9);
    let mut dims = r.catalog.dims();
    dims.sort_unstable();
    assert_eq!(dims, vec![1, 1, 1, 2, 3, 3, 3, 3, 6]);
    assert_eq!(r.catalog.sum_of_squares(), 79);
}

#[test]
fn sgl_fast_path_equals_generic() {
    let model = CatalogMonoid::sgl(LatticeKind::OrderedPartitionsZero, 3).unwrap();
    let CatalogMonoid::Sgl(sgl, m) = &model else { unreachable!() };
    let (green, _) = green_structure(m);
    for e in m.idempotents() {
        let young = model.young(&green, e).unwrap();
        let v = Representation::trivial(&young.group);
        let generic = induce_raw(m, &green, e, &young.group, &v).unwrap();
        assert!(annihilator(&generic, &green).is_zero());
        let fast = induce_sgl(sgl, m, m.element(e).a as usize, &young.group, &v).unwrap();
        assert_eq!(fast.matrices(), generic.rep.matrices());
    }
}

#[test]
fn partial_reflection_apex_and_reduction() {
    let i3 = symmetric_inverse_monoid(3);
    let (green, poset) = green_structure(&i3);
    let v = mapping_rep(&i3).unwrap();
    let report = apex(&i3, &v, &green, &poset).unwrap();
    assert_eq!(report.apex, 1);
    assert_eq!(report.support, vec![1, 2, 3]);
    let e = i3.index_of(&PartialBijection::partial_identity(3, &[1, 2]).unwrap()).unwrap();
    let red = reduce(&v, &green, e).unwrap();
    let rep = red.rep.unwrap();
    assert_eq!(rep.dim(), 2);
    let swap = i3.index_of(&PartialBijection::new(3, &[(1, 2), (2, 1)]).unwrap()).unwrap();
    let pos = red.group.index_of(&swap).unwrap();
    assert_eq!(rep.character().0[pos], q(0));
    let triv = Representation::trivial(&i3);
    assert_eq!(apex(&i3, &triv, &green, &poset).unwrap().apex, 0);
}

#[test]
fn hyperplane_of_t3() {
    let t3 = full_transformation_monoid(3);
    let (green, poset) = green_structure(&t3);
    let v = mapping_rep(&t3).unwrap();
    let w = spin(&v, &[vec![q(1), q(-1), q(0)]]);
    let wr = v.restrict(&w).unwrap();
    let report = apex(&t3, &wr, &green, &poset).unwrap();
    let e = *green.j_members[report.apex].iter().find(|&&x| t3.is_idempotent(x)).unwrap();
    assert_eq!(t3.element(e).rank(), 2);
    let top = t3.identity();
    let red = reduce(&wr, &green, top).unwrap();
    assert_eq!(red.rep.unwrap().dim(), 2);
}

#[test]
fn t3_induction_from_constants() {
    let t3 = full_transformation_monoid(3);
    let (green, _) = green_structure(&t3);
    let e = t3.index_of(&Transformation::constant(3, 1).unwrap()).unwrap();
    let g = maximal_subgroup(&t3, &green, e).unwrap();
    let v = Representation::trivial(&g);
    let raw = induce_raw(&t3, &green, e, &g, &v).unwrap();
    assert_eq!(raw.rep.character(), mapping_rep(&t3).unwrap().character());
    let ann = annihilator(&raw, &green);
    assert_eq!(ann.dim(), 2);
    assert!(ann.contains(&[q(1), q(-1), q(0)]));
    let up = quotient_by_annihilator(&raw, &green).unwrap();
    assert_eq!(up.character(), Representation::trivial(&t3).character());
    assert!(one_dim_invariant_lines(&raw.rep).is_empty());
}

#[test]
fn i_n_inductions() {
    let i3 = symmetric_inverse_monoid(3);
    let (green, _) = green_structure(&i3);
    let zero = i3.index_of(&PartialBijection::zero(3)).unwrap();
    let g0 = maximal_subgroup(&i3, &green, zero).unwrap();
    let up = induce(&i3, &green, zero, &g0, &Representation::trivial(&g0)).unwrap();
    assert_eq!(up.character(), Representation::trivial(&i3).character());
    let e1 = i3.index_of(&PartialBijection::partial_identity(3, &[1]).unwrap()).unwrap();
    let g1 = maximal_subgroup(&i3, &green, e1).unwrap();
    let raw = induce_raw(&i3, &green, e1, &g1, &Representation::trivial(&g1)).unwrap();
    assert!(annihilator(&raw, &green).is_zero());
    assert_eq!(raw.rep.character(), mapping_rep(&i3).unwrap().character());
}

#[test]
fn transversal_independence() {
    let i3 = symmetric_inverse_monoid(3);
    let (green, _) = green_structure(&i3);
    let cert = semisimple_predicate(&i3, 0).certificate.unwrap();
    let e = i3.index_of(&PartialBijection::partial_identity(3, &[1, 2]).unwrap()).unwrap();
    let g = maximal_subgroup(&i3, &green, e).unwrap();
    let v = Representation::trivial(&g);
    let t1 = transversal(&i3, &green, e).unwrap();
    let t2 = Transversal {
        e,
        reps: t1
            .hclasses
            .iter()
            .map(|&h| if h == green.hclass[e] { e } else { *green.h_members[h].last().unwrap() })
            .collect(),
        hclasses: t1.hclasses.clone(),
    };
    assert_ne!(t1.reps, t2.reps);
    let a = induce_raw_with(&i3, &green, &t1, &g, &v).unwrap();
    let b = induce_raw_with(&i3, &green, &t2, &g, &v).unwrap();
    assert!(matches!(iso_test(&a.rep, &b.rep, Some(&cert)).unwrap(), IsoResult::Iso(Some(_))));
}

#[test]
fn predicate_cases() {
    assert_eq!(
        semisimple_predicate(&symmetric_inverse_monoid(3), 0).status,
        Semisimplicity::Semisimple
    );
    assert_eq!(semisimple_predicate(&symmetric_group(3), 3).status, Semisimplicity::NotSemisimple);
    assert_eq!(semisimple_predicate(&symmetric_group(3), 5).status, Semisimplicity::Semisimple);
    assert!(semisimple_predicate(&symmetric_group(3), 5).certificate.is_none());
    let t3 = semisimple_predicate(&full_transformation_monoid(3), 0);
    assert_eq!(t3.status, Semisimplicity::Unknown);
    assert!(t3.certificate.is_none());
}

#[test]
fn certificate_is_bound_to_its_monoid() {
    let s3 = symmetric_group(3);
    let i3 = symmetric_inverse_monoid(3);
    let cert = semisimple_predicate(&i3, 0).certificate.unwrap();
    let v = mapping_rep(&s3).unwrap();
    assert!(is_irreducible(&v, IrreducibilityMode::Semisimple(&cert)).is_err());
    let own = semisimple_predicate(&s3, 0).certificate.unwrap();
    assert!(matches!(
        is_irreducible(&v, IrreducibilityMode::Semisimple(&own)).unwrap(),
        Irreducibility::No(_)
    ));
    let w = specht_rep(&lambda(&[3, 1]), &[1, 2, 3, 4]).unwrap().rep;
    let s4 = semisimple_predicate(&w.monoid().clone(), 0).certificate.unwrap();
    assert_eq!(is_irreducible(&w, IrreducibilityMode::Semisimple(&s4)).unwrap(), Irreducibility::Yes);
}

#[test]
fn decomposition_of_mapping_rep() {
    let s4 = symmetric_group(4);
    let cert = semisimple_predicate(&s4, 0).certificate.unwrap();
    let v = mapping_rep(&s4).unwrap();
    let parts = decompose(&v, &cert, SeedOrder::Forward).unwrap();
    let mut dims: Vec<usize> = parts.iter().map(|p| p.dim()).collect();
    dims.sort_unstable();
    assert_eq!(dims, vec![1, 3]);
    let (_, m) = tabloid_module(&lambda(&[3, 1]), &[1, 2, 3, 4]).unwrap();
    let a = character_multiset(&decompose(&m, &cert, SeedOrder::Forward).unwrap());
    let b = character_multiset(&decompose(&m, &cert, SeedOrder::Reverse).unwrap());
    assert_eq!(a, b);
    assert_eq!(a, character_multiset(&parts));
}

#[test]
fn sgl_mapping_rep_verifies() {
    let model = CatalogMonoid::sgl(LatticeKind::Subsets, 2).unwrap();
    let CatalogMonoid::Sgl(sgl, m) = &model else { unreachable!() };
    let v = sgl_mapping_rep(sgl, m).unwrap();
    v.verify_all_pairs().unwrap();
    assert_eq!(v.dim(), 4);
}

#[test]
fn reduction_needs_idempotent() {
    let s3 = symmetric_group(3);
    let (green, _) = green_structure(&s3);
    let v = mapping_rep(&s3).unwrap();
    let t = s3.index_of(&Permutation::transposition(3, 1, 2).unwrap()).unwrap();
    assert!(reduce(&v, &green, t).is_err());
    let full = reduce(&v, &green, s3.identity()).unwrap();
    assert_eq!(full.carrier, Subspace::full(3));
}

