//! Reduced Groebner bases, normal forms and ideal membership in a quotient
//! ring.

use gproj::ring::{Field, MonomialOrder, PolyRing, QuotRing};

pub fn main() -> gproj::Result<()> {
    let p = PolyRing::new(Field::prime(3)?, &["x", "y"], MonomialOrder::Lex)?;
    let r = QuotRing::new(p.clone(), vec![p.parse("x^2 - y")?, p.parse("y^3")?])?;
    println!("ring: {r}");
    let gb: Vec<String> = r.modulus().groebner_basis().iter().map(|g| p.display(g)).collect();
    println!("groebner basis of the modulus: {}", gb.join(", "));
    println!("k-dimension: {:?}", r.standard_monomials().map(|s| s.len()));

    let f = p.parse("x^7 + 2*x*y + 1")?;
    println!("normal form of x^7 + 2*x*y + 1: {}", r.display(&r.normal_form(&f)?));

    let ideal = r.ideal(vec![r.parse("x*y")?])?;
    for test in ["x^3*y", "x^5", "y^2", "x + y"] {
        let t = r.parse(test)?;
        println!("{test} in (x*y): {}", r.ideal_membership(&t, &ideal)?);
    }
    let a = r.parse("x")?;
    let ann = r.annihilator(&a)?;
    let gens: Vec<String> = ann.generators().iter().map(|g| r.display(g)).collect();
    println!("ann(x) = ({})", gens.join(", "));
    Ok(())
}
