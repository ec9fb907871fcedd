use std::fmt;
use std::sync::Arc;

use super::free::{free_resolution, pd_from_resolution, FreeResolution, PdVerdict};
use crate::error::Result;
use crate::module::FPModule;
use crate::ring::{Poly, QuotRing};

/// Conditions making `I = (a)` its own annihilator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SelfAnnihilatorCondition {
    NonZero,
    SquareZero,
    AnnihilatorInIdeal,
    IdealInAnnihilator,
}

impl fmt::Display for SelfAnnihilatorCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SelfAnnihilatorCondition::NonZero => "a != 0",
            SelfAnnihilatorCondition::SquareZero => "a^2 = 0",
            SelfAnnihilatorCondition::AnnihilatorInIdeal => "ann(a) in (a)",
            SelfAnnihilatorCondition::IdealInAnnihilator => "(a) in ann(a)",
        })
    }
}

#[derive(Debug, Clone)]
pub struct SelfAnnihilatorCertificate {
    pub element: Poly,
    /// `I = (a) ≅ R/(a)`, presented as a cyclic module.
    pub ideal: FPModule,
    /// `... -> R --a--> R --a--> R -> I -> 0`.
    pub resolution: FreeResolution,
    pub verdict: PdVerdict,
}

#[derive(Debug, Clone)]
pub enum SelfAnnihilatorOutcome {
    Accepted(SelfAnnihilatorCertificate),
    Rejected(Vec<SelfAnnihilatorCondition>),
}

/// Checks `a != 0` and `ann(a) = (a)`; on success the ideal `(a)` has the
/// periodic resolution by multiplication with `a` and infinite projective
/// dimension. The resolution is computed to `depth` maps (at least 2).
pub fn self_annihilator_certificate(
    ring: &Arc<QuotRing>,
    a: &Poly,
    depth: usize,
) -> Result<SelfAnnihilatorOutcome> {
    let a = ring.normal_form(a)?;
    let mut failed = Vec::new();
    if a.is_zero() {
        failed.push(SelfAnnihilatorCondition::NonZero);
    }
    if !ring.mul(&a, &a).is_zero() {
        failed.push(SelfAnnihilatorCondition::SquareZero);
    }
    let ann = ring.annihilator(&a)?;
    let ideal = ring.ideal(vec![a.clone()])?;
    if !ann
        .generators()
        .iter()
        .all(|g| ideal.contains(ring.base(), g))
    {
        failed.push(SelfAnnihilatorCondition::AnnihilatorInIdeal);
    }
    if !ann.contains(ring.base(), &a) {
        failed.push(SelfAnnihilatorCondition::IdealInAnnihilator);
    }
    if !failed.is_empty() {
        return Ok(SelfAnnihilatorOutcome::Rejected(failed));
    }
    let module = FPModule::cyclic(ring.clone(), std::slice::from_ref(&a))?;
    let resolution = free_resolution(&module, depth.max(2))?;
    let verdict = pd_from_resolution(&resolution)?;
    Ok(SelfAnnihilatorOutcome::Accepted(SelfAnnihilatorCertificate {
        element: a,
        ideal: module,
        resolution,
        verdict,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Field, MonomialOrder, PolyRing};

    fn truncated(n: u32) -> Arc<QuotRing> {
        let p = PolyRing::new(Field::prime(2).unwrap(), &["x"], MonomialOrder::Grevlex).unwrap();
        let f = p.pow(&p.var(0), n);
        Arc::new(QuotRing::new(p, vec![f]).unwrap())
    }

    #[test]
    fn dual_numbers_accept() {
        let r = truncated(2);
        let x = r.parse("x").unwrap();
        match self_annihilator_certificate(&r, &x, 4).unwrap() {
            SelfAnnihilatorOutcome::Accepted(c) => {
                assert_eq!(c.verdict, PdVerdict::InfinitePeriodic(0, 1));
                assert_eq!(c.resolution.periodicity, Some((0, 1)));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rejections_name_conditions() {
        let r = truncated(3);
        let x = r.parse("x").unwrap();
        match self_annihilator_certificate(&r, &x, 4).unwrap() {
            SelfAnnihilatorOutcome::Rejected(f) => {
                assert!(f.contains(&SelfAnnihilatorCondition::SquareZero));
            }
            other => panic!("{other:?}"),
        }
        match self_annihilator_certificate(&r, &Poly::zero(), 4).unwrap() {
            SelfAnnihilatorOutcome::Rejected(f) => {
                assert!(f.contains(&SelfAnnihilatorCondition::NonZero));
            }
            other => panic!("{other:?}"),
        }
    }
}
