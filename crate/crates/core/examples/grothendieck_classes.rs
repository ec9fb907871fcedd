//! Classes of modules over the catalog rings, the Euler class of a finite
//! resolution and the class map `g` on modules over `R[x]`.

use std::sync::Arc;

use gproj::kgroups::{euler_class, g_pi_class, s0_lambda_class, Catalog};
use gproj::module::FPModule;
use gproj::ring::{Field, MonomialOrder, PolyRing, QuotRing};

pub fn main() -> gproj::Result<()> {
    let p = PolyRing::new(Field::prime(2)?, &["x"], MonomialOrder::Grevlex)?;
    let r = Arc::new(QuotRing::new(p.clone(), vec![p.parse("x^3")?])?);
    let cat = Catalog::detect(&r)?;
    println!("{}: K group {}", cat.family, cat.grothendieck_group()?);
    let m = FPModule::from_rows(r.clone(), &[&["x", "0", "0"], &["0", "x^2", "0"]])?;
    let class = cat.class_decompose(&m)?;
    println!("[coker diag(x, x^2)] = {class}, coordinates {:?}", cat.project(&class));

    let q = PolyRing::new(Field::Rationals, &["x"], MonomialOrder::Grevlex)?;
    let s = Arc::new(QuotRing::polynomial(q));
    for f in ["x", "x^2 - 1"] {
        let m = FPModule::from_rows(s.clone(), &[&[f]])?;
        println!("Euler class of QQ[x]/({f}): {}", euler_class(&m, 4)?);
    }
    let k = FPModule::from_rows(r, &[&["x"]])?;
    println!("Euler class of k over GF(2)[x]/(x^3): {:?}", euler_class(&k, 4).map_err(|e| e.to_string()));

    let f3 = PolyRing::new(Field::prime(3)?, &["t"], MonomialOrder::Grevlex)?;
    let base = Arc::new(QuotRing::polynomial(f3));
    let base_cat = Catalog::detect(&base)?;
    let m = FPModule::from_rows(base, &[&["t^2"]])?;
    let (ext, mx) = s0_lambda_class(&m, "x")?;
    println!(
        "[R/(t^2)] = {}, g([M[x]]) = {}",
        base_cat.class_decompose(&m)?,
        g_pi_class(&mx, &ext)?
    );
    Ok(())
}
