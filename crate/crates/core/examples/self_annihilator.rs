//! An ideal `(a)` equal to its own annihilator has a periodic resolution by
//! multiplication with `a` and infinite projective dimension.

use std::sync::Arc;
use std::time::Instant;

use gproj::resolution::{self_annihilator_certificate, SelfAnnihilatorOutcome};
use gproj::ring::{Field, MonomialOrder, PolyRing, QuotRing};

pub fn main() -> gproj::Result<()> {
    let p = PolyRing::new(Field::prime(2)?, &["x"], MonomialOrder::Grevlex)?;
    let r = Arc::new(QuotRing::new(p.clone(), vec![p.parse("x^2")?])?);
    for a in ["x", "x + 1", "0"] {
        let start = Instant::now();
        match self_annihilator_certificate(&r, &r.parse(a)?, 8)? {
            SelfAnnihilatorOutcome::Accepted(cert) => println!(
                "a = {a}: accepted, pd = {}, periodicity {:?}, {:?}",
                cert.verdict,
                cert.resolution.periodicity,
                start.elapsed()
            ),
            SelfAnnihilatorOutcome::Rejected(failed) => {
                let names: Vec<String> = failed.iter().map(|c| c.to_string()).collect();
                println!("a = {a}: rejected ({})", names.join("; "))
            }
        }
    }

    let q = PolyRing::new(Field::prime(3)?, &["x", "y"], MonomialOrder::Grevlex)?;
    let s = Arc::new(QuotRing::new(q.clone(), vec![q.parse("x^2")?, q.parse("y^2")?])?);
    if let SelfAnnihilatorOutcome::Accepted(cert) = self_annihilator_certificate(&s, &s.parse("x*y")?, 4)? {
        println!("(xy) over GF(3)[x,y]/(x^2, y^2): pd = {}", cert.verdict);
    } else {
        println!("(xy) over GF(3)[x,y]/(x^2, y^2): rejected");
    }
    Ok(())
}
