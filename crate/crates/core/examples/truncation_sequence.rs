//! The sequence `0 -> A[x] -> B[x] -> M -> 0` built from the truncations of
//! a submodule `M` of `F[x]`.

use std::sync::Arc;

use gproj::module::{PolynomialExtension, SubmoduleOfFree};
use gproj::resolution::truncation_sequence;
use gproj::ring::{Field, MonomialOrder, PolyRing, QuotRing};

pub fn main() -> gproj::Result<()> {
    let q = PolyRing::new(Field::Rationals, &[], MonomialOrder::Grevlex)?;
    let base = Arc::new(QuotRing::polynomial(q));
    let ext = PolynomialExtension::adjoin(&base, "x")?;
    let r = ext.ext().clone();
    let cases: [(&str, Vec<Vec<&str>>); 3] = [
        ("R[x](x, 1)", vec![vec!["x", "1"]]),
        ("<(1, 0), (x, x + 1)>", vec![vec!["1", "0"], vec!["x", "x + 1"]]),
        ("<(x^2, 1)>", vec![vec!["x^2", "1"]]),
    ];
    for (name, gens) in cases {
        let cols = gens
            .iter()
            .map(|g| g.iter().map(|e| r.parse(e)).collect::<gproj::Result<Vec<_>>>())
            .collect::<gproj::Result<Vec<_>>>()?;
        let m = SubmoduleOfFree::new(r.clone(), 2, cols)?;
        let seq = truncation_sequence(&m, &ext)?;
        println!(
            "{name}: k = {}, A has {} generators, B has {}, psi = {}",
            seq.k,
            seq.a.generators().len(),
            seq.b.generators().len(),
            seq.psi.matrix().display(&r)
        );
    }
    Ok(())
}
