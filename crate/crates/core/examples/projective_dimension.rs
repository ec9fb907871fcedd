//! Projective dimension verdicts, and the shift by one when passing from a
//! quotient `R/(u)` back to `R`.

use std::sync::Arc;

use gproj::module::{restrict_along_quotient, FPModule};
use gproj::resolution::pd_bounded;
use gproj::ring::{Field, MonomialOrder, PolyRing, QuotRing};

pub fn main() -> gproj::Result<()> {
    let p = PolyRing::new(Field::Rationals, &["x", "y"], MonomialOrder::Grevlex)?;
    let r = Arc::new(QuotRing::polynomial(p.clone()));
    for rows in [&[&["x"][..]][..], &[&["x", "y"]], &[&["x^2", "x*y"]]] {
        let m = FPModule::from_rows(r.clone(), rows)?;
        println!("pd of coker {:?} over QQ[x, y]: {}", rows, pd_bounded(&m, 6)?);
    }

    // a module over R/(x) viewed over R has projective dimension one more
    let rx = Arc::new(r.quotient(&[p.parse("x")?])?);
    for rows in [&[&["y"][..]][..], &[&["0"]], &[&["y^2", "0"], &["0", "y"]]] {
        let n = FPModule::from_rows(rx.clone(), rows)?;
        let over_r = restrict_along_quotient(&n, &r)?;
        println!(
            "coker {:?}: pd over R/(x) = {}, over R = {}",
            rows,
            pd_bounded(&n, 6)?,
            pd_bounded(&over_r, 6)?
        );
    }

    let f2 = PolyRing::new(Field::prime(2)?, &["x"], MonomialOrder::Grevlex)?;
    let dual = Arc::new(QuotRing::new(f2.clone(), vec![f2.parse("x^2")?])?);
    let k = FPModule::from_rows(dual, &[&["x"]])?;
    println!("pd of k over GF(2)[x]/(x^2): {}", pd_bounded(&k, 8)?);
    Ok(())
}
