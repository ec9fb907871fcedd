//! Polynomial extension, quotients by regular elements and restriction of
//! scalars along a monic polynomial.

use std::sync::Arc;

use gproj::module::{
    polynomial_extension, quotient_by_regular_element, restrict_scalars_monic, FPModule,
    PolynomialExtension,
};
use gproj::ring::{Field, MonomialOrder, PolyRing, QuotRing};

pub fn main() -> gproj::Result<()> {
    let p = PolyRing::new(Field::prime(2)?, &["x"], MonomialOrder::Grevlex)?;
    let r = Arc::new(QuotRing::new(p.clone(), vec![p.parse("x^2")?])?);
    let k = FPModule::from_rows(r.clone(), &[&["x"]])?;
    let (ext, ky) = polynomial_extension(&k, "y")?;
    println!("k[y] over {}: relations {}", ext.ext(), ky.relations().display(ext.ext()));

    let ry = FPModule::free(ext.ext().clone(), 1);
    let y = ext.x();
    let back = quotient_by_regular_element(&ry, &y)?;
    println!("R[y]/(y) presented over {} with relations {}", back.ring(), back.relations().display(back.ring()));
    println!("x on R[y]: {:?}", quotient_by_regular_element(&ry, &ext.ext().parse("x")?).map(|_| ()).map_err(|e| e.to_string()));

    let q = PolyRing::new(Field::Rationals, &[], MonomialOrder::Grevlex)?;
    let base = Arc::new(QuotRing::polynomial(q));
    let qx = PolynomialExtension::adjoin(&base, "x")?;
    let f = qx.ext().parse("x^3 - 8")?;
    let t = Arc::new(qx.ext().quotient(std::slice::from_ref(&f))?);
    let n = FPModule::from_rows(t, &[&["x - 2"]])?;
    let over_base = restrict_scalars_monic(&n, &qx, &f)?;
    println!(
        "QQ[x]/(x - 2) as a module over QQ[x]/(x^3 - 8), restricted to QQ: {} generators, dimension {:?}",
        over_base.ngens(),
        over_base.vector_space_dimension()?
    );
    Ok(())
}
