//! `Ext^i(M, N)` from a free resolution of `M` and the Hom complex.

use std::sync::Arc;

use gproj::gorenstein::ext_module;
use gproj::module::FPModule;
use gproj::ring::{Field, MonomialOrder, PolyRing, QuotRing};

pub fn main() -> gproj::Result<()> {
    let q = PolyRing::new(Field::Rationals, &["x", "y"], MonomialOrder::Grevlex)?;
    let s = Arc::new(QuotRing::polynomial(q));
    let k = FPModule::from_rows(s.clone(), &[&["x", "y"]])?;
    let r1 = FPModule::free(s.clone(), 1);
    for i in 0..=3 {
        let e = ext_module(&k, &r1, i)?;
        println!("Ext^{i}(k, R) over QQ[x, y]: zero = {}, length {:?}", e.is_zero, e.dimension()?);
    }

    let p = PolyRing::new(Field::prime(2)?, &["x"], MonomialOrder::Grevlex)?;
    let r = Arc::new(QuotRing::new(p.clone(), vec![p.parse("x^3")?])?);
    let m = FPModule::from_rows(r.clone(), &[&["x"]])?;
    let n = FPModule::from_rows(r.clone(), &[&["x^2"]])?;
    for i in 0..=3 {
        let e = ext_module(&m, &n, i)?;
        println!("Ext^{i}(R/(x), R/(x^2)) over GF(2)[x]/(x^3): length {:?}", e.dimension()?);
    }
    Ok(())
}
