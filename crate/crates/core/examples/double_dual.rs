//! Duals `M* = Hom(M, R)` and the evaluation map `M -> M**`, plus its
//! naturality for a map of modules.

use std::sync::Arc;

use gproj::module::{double_dual_map, dual_map, FPModule, Matrix, ModuleMap};
use gproj::ring::{Field, MonomialOrder, PolyRing, QuotRing};

pub fn main() -> gproj::Result<()> {
    let p = PolyRing::new(Field::prime(2)?, &["x"], MonomialOrder::Grevlex)?;
    let r = Arc::new(QuotRing::new(p.clone(), vec![p.parse("x^2")?])?);
    let q = PolyRing::new(Field::Rationals, &["x"], MonomialOrder::Grevlex)?;
    let s = Arc::new(QuotRing::polynomial(q));

    let cases = [
        ("k over GF(2)[x]/(x^2)", FPModule::from_rows(r.clone(), &[&["x"]])?),
        ("R^2 over GF(2)[x]/(x^2)", FPModule::free(r.clone(), 2)),
        ("k over QQ[x]", FPModule::from_rows(s.clone(), &[&["x"]])?),
        ("(x, 1) graph over QQ[x]", FPModule::from_rows(s, &[&["x"], &["-1"]])?),
    ];
    for (name, m) in &cases {
        let d = double_dual_map(m)?;
        println!(
            "{name}: dual has {} generators, mu = {}, {}",
            d.dual.module.ngens(),
            d.map.matrix().display(m.ring()),
            d.verdict.name()
        );
    }

    // f: k -> R, 1 |-> x, and the square mu_R f = f** mu_k
    let k = cases[0].1.clone();
    let free = FPModule::free(r.clone(), 1);
    let f = ModuleMap::new(k.clone(), free.clone(), Matrix::scalar(&r, 1, &r.parse("x")?))?;
    let dk = double_dual_map(&k)?;
    let dr = double_dual_map(&free)?;
    let fstar = dual_map(&f, &dk.dual, &dr.dual)?;
    let fss = dual_map(&fstar, &dr.double, &dk.double)?;
    let left = f.then(&dr.map)?;
    let right = dk.map.then(&fss)?;
    println!("mu_R f = f** mu_k: {}", left.equals(&right)?);
    Ok(())
}
