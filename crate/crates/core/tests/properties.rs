mod common;

use common::*;
use gproj::kgroups::smith_normal_form;
use gproj::ring::{groebner_basis, Field, Poly};
use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;
use rand::Rng;

fn polys(seed: u64, count: usize) -> (std::sync::Arc<gproj::ring::QuotRing>, Vec<Poly>) {
    let mut rng = rng(seed);
    let field = if seed.is_multiple_of(2) { gf(3) } else { Field::Rationals };
    let r = ring(field, &["x", "y"], &["x^3 - y^2", "x*y^2"]);
    let ps = (0..count).map(|_| random_poly(r.base(), &mut rng, 4, 4)).collect();
    (r, ps)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_form_is_idempotent_and_a_homomorphism(seed in any::<u64>()) {
        let (r, ps) = polys(seed, 2);
        let (f, g) = (&ps[0], &ps[1]);
        let nf = |h: &Poly| r.normal_form(h).unwrap();
        prop_assert_eq!(nf(&nf(f)), nf(f));
        let p = r.base();
        prop_assert_eq!(nf(&p.add(f, g)), r.add(&nf(f), &nf(g)));
        prop_assert_eq!(nf(&p.mul(f, g)), r.mul(&nf(f), &nf(g)));
    }

    #[test]
    fn ideal_generators_reduce_to_zero(seed in any::<u64>()) {
        let (r, ps) = polys(seed, 3);
        let ideal = r.ideal(ps.clone()).unwrap();
        for g in &ps {
            prop_assert!(r.ideal_membership(g, &ideal).unwrap());
        }
        for g in r.modulus().generators() {
            prop_assert!(r.normal_form(g).unwrap().is_zero());
        }
    }

    #[test]
    fn groebner_basis_is_deterministic_and_order_free(seed in any::<u64>()) {
        let (r, mut ps) = polys(seed, 3);
        let a = groebner_basis(r.base(), &ps).unwrap();
        ps.reverse();
        let b = groebner_basis(r.base(), &ps).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn annihilator_kills_the_element(seed in any::<u64>()) {
        let (r, ps) = polys(seed, 1);
        let a = r.normal_form(&ps[0]).unwrap();
        for g in r.annihilator(&a).unwrap().generators() {
            prop_assert!(r.mul(g, &a).is_zero());
        }
    }

    #[test]
    fn display_round_trips_through_the_parser(seed in any::<u64>()) {
        let (r, ps) = polys(seed, 1);
        let f = r.normal_form(&ps[0]).unwrap();
        prop_assert_eq!(r.parse(&r.display(&f)).unwrap(), f);
    }

    #[test]
    fn smith_form_matches_determinantal_divisors(seed in any::<u64>(), n in 1usize..4, m in 1usize..4) {
        let mut rng = rng(seed);
        let bound = rng.gen_range(1..20);
        let a = random_int_matrix(&mut rng, n, m, bound);
        let s = smith_normal_form(&a, m);
        prop_assert_eq!(int_mul(&int_mul(&s.u, &a, n, m), &s.v, m, m), s.s.clone());
        prop_assert!(det(&s.u).abs() == BigInt::from(1));
        prop_assert!(det(&s.v).abs() == BigInt::from(1));
        prop_assert_eq!(s.diagonal(), invariant_factors(&a, m));
    }
}
