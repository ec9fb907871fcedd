mod common;

use common::*;
use gproj::kgroups::{euler_class, g_pi_class, projective_rank, theta_roundtrip, Catalog, KClass, Summand};
use gproj::module::{FPModule, Matrix, ModuleMap, PolynomialExtension};
use gproj::ring::Field;

#[test]
fn classes_are_additive_on_short_exact_sequences() {
    // 0 -> k --x--> R -> k -> 0 and 0 -> R/(x) -> R/(x^3) -> R/(x^2) -> 0
    let r = ring(gf(2), &["x"], &["x^3"]);
    let cat = Catalog::detect(&r).unwrap();
    let cyc = |e: u32| FPModule::cyclic(r.clone(), &[r.base().pow(&r.base().var(0), e)]).unwrap();
    let free = FPModule::free(r.clone(), 1);
    let c = |m: &FPModule| cat.class_decompose(m).unwrap();
    assert!(cat.same_in_group(&c(&free), &c(&cyc(1)).add(&c(&cyc(2)))).unwrap());
    assert!(cat.same_in_group(&c(&free), &c(&cyc(1)).add(&c(&cyc(1))).add(&c(&cyc(1)))).unwrap());
    assert!(!cat.same_in_group(&c(&free), &c(&cyc(1))).unwrap());
}

#[test]
fn g_pi_class_is_independent_of_the_presentation() {
    let bases = [
        ring(Field::Rationals, &[], &[]),
        ring(gf(2), &["t"], &["t^2"]),
        ring(gf(3), &["t"], &[]),
    ];
    let pairs: [(Rows, Rows); 4] = [
        (&[&["x - 1"]], &[&["x - 1", "0"], &["0", "1"]]),
        (&[&["x^2 + 1"]], &[&["x^2 + 1", "x^3 + x"]]),
        (&[&["x + 1", "0"], &["0", "x + 1"]], &[&["x + 1", "0", "x^2 + x"], &["0", "x + 1", "0"]]),
        (&[&["0"]], &[&["x", "1"], &["0", "0"]]),
    ];
    let mut checked = 0;
    for base in &bases {
        let ext = PolynomialExtension::adjoin(base, "x").unwrap();
        let cat = Catalog::detect(base).unwrap();
        for (a, b) in pairs {
            let ma = FPModule::from_rows(ext.ext().clone(), a).unwrap();
            let mb = FPModule::from_rows(ext.ext().clone(), b).unwrap();
            let ga = g_pi_class(&ma, &ext).unwrap();
            let gb = g_pi_class(&mb, &ext).unwrap();
            assert!(cat.same_in_group(&ga, &gb).unwrap(), "{a:?} vs {b:?} over {base}");
            checked += 1;
        }
    }
    assert!(checked >= 10);
}

#[test]
fn euler_map_inverts_the_comparison_on_free_classes() {
    let r = qx();
    let x = r.parse("x").unwrap();
    let free = FPModule::free(r.clone(), 1);
    let k = FPModule::from_rows(r.clone(), &[&["x"]]).unwrap();
    let f = ModuleMap::new(free.clone(), free.clone(), Matrix::scalar(&r, 1, &x)).unwrap();
    let g = ModuleMap::new(free.clone(), k.clone(), Matrix::identity(&r, 1)).unwrap();
    let report = theta_roundtrip(&r, &[("R".into(), free), ("k".into(), k.clone())], &[(f, g)], 4).unwrap();
    assert!(report.free_classes_ok);
    assert!(report.violations.is_empty());
    assert_eq!(report.generators, vec![("R".to_string(), 0), ("k".to_string(), 1)]);
    assert_eq!(euler_class(&k, 4).unwrap(), KClass::zero());
}

#[test]
fn projective_ranks() {
    for r in [qx(), dual_numbers(), ring(gf(2), &["x", "y"], &["x^2", "y^2"])] {
        assert_eq!(projective_rank(&FPModule::free(r.clone(), 3)).unwrap(), 3);
    }
    let k = FPModule::from_rows(qx(), &[&["x"]]).unwrap();
    assert!(projective_rank(&k).is_err());
}

#[test]
fn residue_field_class_of_a_truncated_ring() {
    let r = ring(gf(3), &["x"], &["x^2"]);
    let cat = Catalog::detect(&r).unwrap();
    let g = cat.grothendieck_group().unwrap();
    assert_eq!(g.to_string(), "Z");
    let k = FPModule::from_rows(r.clone(), &[&["x"]]).unwrap();
    let class = cat.class_decompose(&k).unwrap();
    let free = KClass::of(Summand::Free, 1);
    assert!(cat.same_in_group(&class.add(&class), &free).unwrap());
}
