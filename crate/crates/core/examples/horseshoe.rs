//! Resolving the middle term of a short exact sequence from resolutions of
//! its ends.

use std::sync::Arc;

use gproj::module::{FPModule, Matrix, ModuleMap};
use gproj::resolution::{check_exact, horseshoe_resolution};
use gproj::ring::{Field, MonomialOrder, PolyRing, QuotRing};

pub fn main() -> gproj::Result<()> {
    let p = PolyRing::new(Field::prime(2)?, &["x"], MonomialOrder::Grevlex)?;
    let r = Arc::new(QuotRing::new(p.clone(), vec![p.parse("x^2")?])?);
    let k = FPModule::from_rows(r.clone(), &[&["x"]])?;
    let free = FPModule::free(r.clone(), 1);
    let x = r.parse("x")?;
    // 0 -> k --x--> R -> k -> 0
    let f = ModuleMap::new(k.clone(), free.clone(), Matrix::scalar(&r, 1, &x))?;
    let g = ModuleMap::new(free, k, Matrix::identity(&r, 1))?;
    let c = horseshoe_resolution(&f, &g, 4)?;
    println!("exact at {} positions", check_exact(&c)?);
    for (i, d) in c.maps.iter().enumerate() {
        println!("  d{} = {}", i + 1, d.display(&r));
    }
    Ok(())
}
