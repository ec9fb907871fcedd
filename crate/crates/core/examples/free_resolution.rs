//! Free resolutions by iterated canonical syzygies, with periodicity
//! detection.

use std::sync::Arc;

use gproj::module::FPModule;
use gproj::resolution::{free_resolution, verify};
use gproj::ring::{Field, MonomialOrder, PolyRing, QuotRing};

fn show(name: &str, m: &FPModule, depth: usize) -> gproj::Result<()> {
    let res = free_resolution(m, depth)?;
    let checked = verify(&res)?;
    println!("{name}: {} maps, exact at {checked} positions, periodicity {:?}", res.len(), res.periodicity);
    for (i, d) in res.maps.iter().enumerate() {
        println!("  d{} = {}", i + 1, d.display(res.ring()));
    }
    Ok(())
}

pub fn main() -> gproj::Result<()> {
    let p = PolyRing::new(Field::prime(2)?, &["x", "y"], MonomialOrder::Grevlex)?;
    let r = Arc::new(QuotRing::new(p.clone(), vec![p.parse("x*y")?])?);
    // R/(x) over k[x,y]/(xy) alternates between multiplication by x and y
    show("R/(x)", &FPModule::from_rows(r.clone(), &[&["x"]])?, 4)?;
    show("R/(x, y)", &FPModule::from_rows(r.clone(), &[&["x", "y"]])?, 3)?;

    let q = PolyRing::new(Field::Rationals, &["x", "y"], MonomialOrder::Grevlex)?;
    let s = Arc::new(QuotRing::polynomial(q));
    // the Koszul complex of (x, y) terminates
    show("k over QQ[x, y]", &FPModule::from_rows(s, &[&["x", "y"]])?, 5)?;
    Ok(())
}
