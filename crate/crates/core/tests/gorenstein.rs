mod common;

use common::*;
use gproj::gorenstein::{
    complete_resolution_check, ext_module, g_class_test, gpd_bounded, GpdVerdict, WindowKind,
};
use gproj::module::{double_dual_map, dual_module, DualityVerdict, FPModule};

#[test]
fn modules_over_the_dual_numbers_are_reflexive_with_reflexive_duals() {
    let mut rng = rng(31);
    let r = dual_numbers();
    for _ in 0..12 {
        let m = random_module(&r, &mut rng, 2, 2);
        let rep = g_class_test(&m, 3).unwrap();
        assert!(rep.verdict.passed());
        assert_eq!(double_dual_map(&m).unwrap().verdict, DualityVerdict::Iso);
        let d = dual_module(&m).unwrap().module;
        assert!(g_class_test(&d, 3).unwrap().verdict.passed());
    }
}

#[test]
fn direct_sums_pass_exactly_when_both_summands_pass() {
    let hyp = ring(gf(2), &["x", "y"], &["x*y"]);
    let cases = [
        (qx(), "x"),
        (hyp.clone(), "x"),
        (hyp, "x + y"),
    ];
    for (r, gen) in cases {
        let m = FPModule::from_rows(r.clone(), &[&[gen]]).unwrap();
        let free = FPModule::free(r.clone(), 1);
        let pm = g_class_test(&m, 4).unwrap().verdict.passed();
        let pf = g_class_test(&free, 4).unwrap().verdict.passed();
        assert!(pf);
        for (a, b, both) in [(&m, &free, pm && pf), (&m, &m, pm), (&free, &free, pf)] {
            let s = a.direct_sum(b).unwrap();
            assert_eq!(g_class_test(&s, 4).unwrap().verdict.passed(), both, "{gen} over {r}");
        }
    }
}

#[test]
fn ext_does_not_depend_on_the_presentation() {
    let r = dual_numbers();
    let a = FPModule::from_rows(r.clone(), &[&["x"]]).unwrap();
    let b = FPModule::from_rows(r.clone(), &[&["x", "0", "x"], &["1", "1", "0"]]).unwrap();
    assert_eq!(cardinality(&a), cardinality(&b));
    let target = FPModule::free(r.clone(), 1);
    for i in 0..4 {
        let ea = ext_module(&a, &target, i).unwrap();
        let eb = ext_module(&b, &target, i).unwrap();
        assert_eq!(cardinality(&ea.module), cardinality(&eb.module), "Ext^{i}");
        let ea = ext_module(&a, &a, i).unwrap();
        let eb = ext_module(&b, &b, i).unwrap();
        assert_eq!(cardinality(&ea.module), cardinality(&eb.module), "Ext^{i} self");
    }
}

#[test]
fn complete_resolution_windows() {
    let r = dual_numbers();
    let free = FPModule::free(r.clone(), 1);
    let w = complete_resolution_check(&free, 4).unwrap();
    assert_eq!(w.kind, WindowKind::Trivial);
    let k = FPModule::from_rows(r, &[&["x"]]).unwrap();
    let w = complete_resolution_check(&k, 4).unwrap();
    assert_eq!(w.kind, WindowKind::Periodic { period: 1 });
    assert!(w.exact_positions > 0 && w.dual_exact_positions > 0);
}

#[test]
fn gpd_of_syzygies() {
    // QQ[x, y]/(x, y) needs two steps before a syzygy is free
    let r = ring(gproj::ring::Field::Rationals, &["x", "y"], &[]);
    let k = FPModule::from_rows(r, &[&["x", "y"]]).unwrap();
    assert!(matches!(gpd_bounded(&k, 3, 3).unwrap(), GpdVerdict::AtMost(2)));
    assert!(matches!(gpd_bounded(&k, 1, 3).unwrap(), GpdVerdict::FailWitness(_)));
}
