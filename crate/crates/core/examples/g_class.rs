//! The three G-class conditions with certificates and failure witnesses.

use std::sync::Arc;

use gproj::gorenstein::{complete_resolution_check, g_class_test, GVerdict};
use gproj::module::FPModule;
use gproj::ring::{Field, MonomialOrder, PolyRing, QuotRing};

fn describe(name: &str, m: &FPModule, depth: usize) -> gproj::Result<()> {
    let report = g_class_test(m, depth)?;
    match &report.verdict {
        GVerdict::Fail(f) => println!(
            "{name}: fails {} at m = {:?}, witness length {:?}",
            f.condition,
            f.degree,
            f.ext.as_ref().map(|e| e.vector_space_dimension()).transpose()?.flatten()
        ),
        v => println!("{name}: {v:?}"),
    }
    Ok(())
}

pub fn main() -> gproj::Result<()> {
    let p = PolyRing::new(Field::prime(2)?, &["x"], MonomialOrder::Grevlex)?;
    let r = Arc::new(QuotRing::new(p.clone(), vec![p.parse("x^2")?])?);
    let i = FPModule::from_rows(r.clone(), &[&["x"]])?;
    describe("(x) over GF(2)[x]/(x^2)", &i, 5)?;

    let q = PolyRing::new(Field::Rationals, &["x"], MonomialOrder::Grevlex)?;
    let s = Arc::new(QuotRing::polynomial(q));
    describe("QQ[x]/(x)", &FPModule::from_rows(s.clone(), &[&["x"]])?, 3)?;
    describe("QQ[x]^2", &FPModule::free(s, 2), 3)?;

    let f = PolyRing::new(Field::prime(2)?, &["x", "y"], MonomialOrder::Grevlex)?;
    let t = Arc::new(QuotRing::new(f.clone(), vec![f.parse("x*y")?])?);
    let m = FPModule::from_rows(t, &[&["x"]])?;
    describe("R/(x) over GF(2)[x,y]/(xy)", &m, 4)?;
    let w = complete_resolution_check(&m, 4)?;
    println!("  complete resolution window: {}, {} maps, anchor {}", w.kind, w.maps.len(), w.anchor);
    Ok(())
}
