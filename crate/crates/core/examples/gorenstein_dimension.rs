//! Bounded Gorenstein projective dimension, over `R` and over `R[y]`.

use std::sync::Arc;

use gproj::gorenstein::gpd_polynomial_compare;
use gproj::module::FPModule;
use gproj::ring::{Field, MonomialOrder, PolyRing, QuotRing};

pub fn main() -> gproj::Result<()> {
    let q = PolyRing::new(Field::Rationals, &["x"], MonomialOrder::Grevlex)?;
    let s = Arc::new(QuotRing::polynomial(q));
    let p = PolyRing::new(Field::prime(2)?, &["x"], MonomialOrder::Grevlex)?;
    let r = Arc::new(QuotRing::new(p.clone(), vec![p.parse("x^2")?])?);
    let cases = [
        ("QQ[x]/(x)", FPModule::from_rows(s.clone(), &[&["x"]])?),
        ("QQ[x]/(x^2 - 1)", FPModule::from_rows(s, &[&["x^2 - 1"]])?),
        ("(x) over GF(2)[x]/(x^2)", FPModule::from_rows(r, &[&["x"]])?),
    ];
    for (name, m) in &cases {
        let c = gpd_polynomial_compare(m, 2, 3)?;
        println!("{name}: gpd {} / over [{}]: {}", c.base, c.extension_variable, c.extension);
    }
    Ok(())
}
