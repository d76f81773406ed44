use proptest::prelude::*;
use regmon::cliffmunn::{
    annihilator, apex, character_multiset, cm_catalog, decompose, induce, induce_raw, induce_raw_with, reduce,
    semisimple_predicate, support, Catalog, CatalogMonoid,
};
use regmon::elements::{full_transformation_monoid, symmetric_group, symmetric_inverse_monoid, Monoid};
use regmon::green::{green_structure, jclass_subgroup_iso, maximal_subgroup, transversal, Transversal};
use regmon::lattice::LatticeKind;
use regmon::linrep::{
    iso_test, mapping_rep, one_dim_invariant_lines, q, spin, IsoResult, Rational, Representation, SeedOrder,
    Subspace,
};
use regmon::specht::{tabloid_module, IntegerPartition};

fn catalogs() -> Vec<Catalog> {
    vec![
        cm_catalog(&CatalogMonoid::symmetric_inverse(3)).unwrap(),
        cm_catalog(&CatalogMonoid::sgl(LatticeKind::OrderedPartitionsZero, 3).unwrap()).unwrap(),
        cm_catalog(&CatalogMonoid::sgl(LatticeKind::SetPartitions, 3).unwrap()).unwrap(),
    ]
}

#[test]
fn support_is_the_up_set_of_the_apex() {
    for catalog in catalogs() {
        let m = &catalog.table;
        for entry in &catalog.entries {
            for f in (0..m.order()).filter(|&f| m.mul(f, f) == f) {
                let nonzero = !entry.rep.matrix(f).is_zero();
                assert_eq!(nonzero, catalog.poset.leq(entry.apex, catalog.green.jclass[f]));
            }
        }
    }
}

#[test]
fn catalogs_are_complete() {
    for n in 1..=4 {
        let c = cm_catalog(&CatalogMonoid::symmetric_inverse(n)).unwrap();
        assert_eq!(c.sum_of_squares(), c.table.order());
        assert!(c.characters_distinct());
    }
    for kind in [LatticeKind::Subsets, LatticeKind::OrderedPartitionsZero] {
        for n in 1..=3 {
            let c = cm_catalog(&CatalogMonoid::sgl(kind, n).unwrap()).unwrap();
            assert_eq!(c.sum_of_squares(), c.table.order(), "{kind:?} n={n}");
        }
    }
    let partitions3 = cm_catalog(&CatalogMonoid::sgl(LatticeKind::SetPartitions, 3).unwrap()).unwrap();
    assert_eq!(partitions3.sum_of_squares(), 16);
}

/// Characters of `reduce(V, e)` and `reduce(V, f)` agree through `g -> s g s*`.
#[test]
fn reduction_does_not_depend_on_the_idempotent() {
    let i3 = symmetric_inverse_monoid(3);
    let mut reps = vec![mapping_rep(&i3).unwrap()];
    reps.extend(catalogs().swap_remove(0).entries.into_iter().map(|e| e.rep));
    let (green, _) = green_structure(&i3);
    let idem: Vec<usize> = (0..i3.len()).filter(|&x| i3.mul(x, x) == x).collect();
    for v in &reps {
        for &e in &idem {
            for &f in idem.iter().filter(|&&f| green.jclass[f] == green.jclass[e]) {
                let (re, rf) = (reduce(v, &green, e).unwrap(), reduce(v, &green, f).unwrap());
                assert_eq!(re.carrier.dim(), rf.carrier.dim());
                let (Some(ve), Some(vf)) = (re.rep, rf.rep) else {
                    continue;
                };
                let s = (0..i3.len())
                    .find(|&x| green.lclass[x] == green.lclass[e] && green.rclass[x] == green.rclass[f])
                    .unwrap();
                let iso = jclass_subgroup_iso(&i3, &green, e, f, s).unwrap();
                let (ce, cf) = (ve.character(), vf.character());
                for (pos, &g) in re.group.elements().iter().enumerate() {
                    let image = rf.group.index_of(&iso.apply(g).unwrap()).unwrap();
                    assert_eq!(ce.0[pos], cf.0[image]);
                }
            }
        }
    }
}

#[test]
fn reduction_of_partial_reflections_permutes_coordinates() {
    let i4 = symmetric_inverse_monoid(4);
    let v = mapping_rep(&i4).unwrap();
    let (green, poset) = green_structure(&i4);
    let report = apex(&i4, &v, &green, &poset).unwrap();
    assert_eq!(report.apex, 1);
    assert_eq!(report.support, [1, 2, 3, 4]);
    for e in (0..i4.len()).filter(|&x| i4.mul(x, x) == x && i4.element(x).rank() > 0) {
        let r = reduce(&v, &green, e).unwrap();
        let chi = r.rep.unwrap().character();
        for (pos, &g) in r.group.elements().iter().enumerate() {
            let fixed = i4.element(g).pairs().iter().filter(|(x, y)| x == y).count() as i64;
            assert_eq!(chi.0[pos], q(fixed));
        }
    }
}

#[test]
fn hyperplane_of_t3_has_apex_two() {
    let t3 = full_transformation_monoid(3);
    let v = mapping_rep(&t3).unwrap();
    let sum_zero = Subspace::kernel(&regmon::linrep::Matrix::from_i64(&[&[1, 1, 1]]));
    let w = v.restrict(&sum_zero).unwrap();
    let (green, poset) = green_structure(&t3);
    let report = apex(&t3, &w, &green, &poset).unwrap();
    let rank = t3.element(green.j_members[report.apex][0]).rank();
    assert_eq!(rank, 2);
    assert_eq!(support(&t3, &w, &green).unwrap().len(), 2);
}

/// A transversal using the greatest member of each H-class other than `e`.
fn other_transversal(t: &Transversal, green: &regmon::green::GreenClasses) -> Transversal {
    let reps = t
        .hclasses
        .iter()
        .zip(&t.reps)
        .map(|(&h, &r)| if r == t.e { r } else { *green.h_members[h].last().unwrap() })
        .collect();
    Transversal {
        e: t.e,
        reps,
        hclasses: t.hclasses.clone(),
    }
}

#[test]
fn induction_is_independent_of_the_transversal() {
    let catalog = cm_catalog(&CatalogMonoid::symmetric_inverse(4)).unwrap();
    let m = &catalog.table;
    for entry in &catalog.entries {
        let e = entry.idempotent;
        let t = transversal(m, &catalog.green, e).unwrap();
        let a = induce_raw_with(m, &catalog.green, &t, &entry.group, &entry.group_rep).unwrap();
        let b = induce_raw_with(m, &catalog.green, &other_transversal(&t, &catalog.green), &entry.group, &entry.group_rep)
            .unwrap();
        assert!(annihilator(&a, &catalog.green).is_zero());
        assert!(annihilator(&b, &catalog.green).is_zero());
        let result = iso_test(&a.rep, &b.rep, Some(&catalog.certificate)).unwrap();
        assert!(matches!(result, IsoResult::Iso(_)), "{}", entry.label);
        let report = apex(m, &a.rep, &catalog.green, &catalog.poset).unwrap();
        assert_eq!(report.apex, entry.apex);
    }
}

#[test]
fn t3_induction_is_reducible_without_a_complement() {
    let t3 = full_transformation_monoid(3);
    let (green, _) = green_structure(&t3);
    let e1 = t3.index_of(&regmon::elements::Transformation::constant(3, 1).unwrap()).unwrap();
    let group = maximal_subgroup(&t3, &green, e1).unwrap();
    let raw = induce_raw(&t3, &green, e1, &group, &Representation::trivial(&group)).unwrap();
    assert_eq!(raw.rep.dim(), 3);
    let ann = annihilator(&raw, &green);
    assert_eq!(ann.dim(), 2);
    assert!(raw.rep.is_invariant(&ann));
    assert!(one_dim_invariant_lines(&raw.rep).is_empty());
    let top = induce(&t3, &green, e1, &group, &Representation::trivial(&group)).unwrap();
    assert_eq!(top.character(), Representation::trivial(&t3).character());
}

fn diagonal_twist(entry: usize, c: i64) -> (Representation, Subspace, Catalog) {
    let catalog = catalogs().swap_remove(0);
    let v = catalog.entries[entry].rep.clone();
    let vv = v.direct_sum(&v).unwrap();
    let e = catalog.entries[entry].idempotent;
    let d = v.dim();
    let ev = Subspace::column_space(v.matrix(e));
    let twisted: Vec<Vec<Rational>> = ev
        .basis_vectors()
        .into_iter()
        .map(|w| {
            let mut x = w.clone();
            x.extend(w.iter().map(|y| y * q(c)));
            x
        })
        .collect();
    (vv, Subspace::span(2 * d, &twisted), catalog)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// `Σ s_i e W` over a transversal is invariant for a `G_e`-submodule `eW`.
    #[test]
    fn transversal_sum_of_a_submodule_is_invariant(entry in 0usize..7, c in -3i64..=3) {
        let (vv, ew, catalog) = diagonal_twist(entry, c);
        let e = catalog.entries[entry].idempotent;
        let group = &catalog.entries[entry].group;
        for &g in group.elements() {
            prop_assert!(ew.basis_vectors().iter().all(|w| ew.contains(&vv.matrix(g).mul_vec(w))));
        }
        let t = transversal(&catalog.table, &catalog.green, e).unwrap();
        let images: Vec<Vec<Rational>> = t
            .reps
            .iter()
            .flat_map(|&s| ew.basis_vectors().into_iter().map(move |w| (s, w)))
            .map(|(s, w)| vv.matrix(s).mul_vec(&vv.matrix(e).mul_vec(&w)))
            .collect();
        let u = Subspace::span(vv.dim(), &images);
        prop_assert!(vv.is_invariant(&u));
        prop_assert_eq!(u, spin(&vv, &ew.basis_vectors()));
    }
}

fn permutation_module(n: usize) -> Representation {
    let mut parts = vec![n - 1];
    if n > 1 {
        parts.push(1);
    }
    tabloid_module(&IntegerPartition::new(&parts).unwrap(), &(1..=n).collect::<Vec<_>>())
        .unwrap()
        .1
}

#[test]
fn jordan_holder_multisets_agree_across_seed_orders() {
    for n in 2..=4 {
        let m = permutation_module(n);
        let cert = semisimple_predicate(&symmetric_group(n), 0).certificate.unwrap();
        for v in [m.clone(), m.direct_sum(&m).unwrap()] {
            let a = decompose(&v, &cert, SeedOrder::Forward).unwrap();
            let b = decompose(&v, &cert, SeedOrder::Reverse).unwrap();
            assert_eq!(character_multiset(&a), character_multiset(&b));
            assert_eq!(a.iter().map(Representation::dim).sum::<usize>(), v.dim());
        }
    }
    let catalog = catalogs().swap_remove(0);
    let i3 = mapping_rep(&symmetric_inverse_monoid(3)).unwrap();
    let v = i3.direct_sum(&catalog.entries[5].rep).unwrap().rebind(&catalog.table).unwrap();
    let a = decompose(&v, &catalog.certificate, SeedOrder::Forward).unwrap();
    let b = decompose(&v, &catalog.certificate, SeedOrder::Reverse).unwrap();
    assert_eq!(character_multiset(&a), character_multiset(&b));
    for factor in &a {
        assert!(catalog.match_character(&factor.character()).is_some());
    }
}

#[test]
#[ignore = "slow in debug builds; run with --release -- --ignored"]
fn renner_catalog_for_four() {
    let report = regmon::cliffmunn::renner_permutohedron_catalog(4).unwrap();
    assert!(report.poset.matches);
    assert_eq!(report.catalog.sum_of_squares(), 1801);
    assert!(report.catalog.characters_distinct());
}
