use std::fmt;

use super::complete::{complete_resolution_check, WindowKind};
use super::ext::{ext_from_resolution, ExtResult};
use crate::error::{Error, Result};
use crate::module::{double_dual_map, dual_module, polynomial_extension, DualityVerdict, FPModule};
use crate::resolution::free_resolution;
use crate::ring::QuotRing;

/// The three conditions: vanishing of `Ext^m(M, R)`, vanishing of
/// `Ext^m(M*, R)`, and bijectivity of `M -> M**`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GCondition {
    ExtOfModule,
    ExtOfDual,
    DoubleDuality,
}

impl fmt::Display for GCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GCondition::ExtOfModule => "cond1",
            GCondition::ExtOfDual => "cond2",
            GCondition::DoubleDuality => "cond3",
        })
    }
}

#[derive(Debug, Clone)]
pub struct GFailure {
    pub condition: GCondition,
    /// Degree `m` of the nonvanishing Ext, for the first two conditions.
    pub degree: Option<usize>,
    pub ext: Option<FPModule>,
    pub duality: Option<DualityVerdict>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertifiedBy {
    SelfInjectiveRing,
    CompleteResolution(WindowKind),
}

#[derive(Debug, Clone)]
pub enum GVerdict {
    PassUpToDepth(usize),
    Certified(CertifiedBy),
    Fail(Box<GFailure>),
}

impl GVerdict {
    pub fn passed(&self) -> bool {
        !matches!(self, GVerdict::Fail(_))
    }
}

#[derive(Debug, Clone)]
pub struct GClassReport {
    pub depth: usize,
    pub cond1: Vec<ExtResult>,
    pub cond2: Vec<ExtResult>,
    pub cond3: Option<DualityVerdict>,
    pub verdict: GVerdict,
}

/// `k[x]/(f)` with `f` nonconstant: quotients of a principal ideal domain
/// by a nonzero proper ideal are self-injective.
pub fn is_catalog_self_injective(ring: &QuotRing) -> bool {
    ring.base().nvars() == 1 && !ring.modulus().is_zero() && !ring.modulus().is_unit()
}

fn ext_list(m: &FPModule, depth: usize) -> Result<Vec<ExtResult>> {
    let res = free_resolution(m, depth + 1)?;
    let r = FPModule::free(m.ring().clone(), 1);
    let mut out = Vec::with_capacity(depth);
    for i in 1..=depth {
        let e = ext_from_resolution(&res, &r, i)?;
        let stop = !e.is_zero;
        out.push(e);
        if stop {
            break;
        }
    }
    Ok(out)
}

fn first_failure(list: &[ExtResult], condition: GCondition) -> Option<GFailure> {
    list.iter().find(|e| !e.is_zero).map(|e| GFailure {
        condition,
        degree: Some(e.degree),
        ext: Some(e.module.clone()),
        duality: None,
    })
}

pub fn g_class_test(m: &FPModule, depth: usize) -> Result<GClassReport> {
    let depth = depth.max(1);
    let cond1 = ext_list(m, depth)?;
    let mut report = GClassReport {
        depth,
        cond1,
        cond2: Vec::new(),
        cond3: None,
        verdict: GVerdict::PassUpToDepth(depth),
    };
    if let Some(f) = first_failure(&report.cond1, GCondition::ExtOfModule) {
        report.verdict = GVerdict::Fail(Box::new(f));
        return Ok(report);
    }
    let dual = dual_module(m)?;
    report.cond2 = ext_list(&dual.module, depth)?;
    if let Some(f) = first_failure(&report.cond2, GCondition::ExtOfDual) {
        report.verdict = GVerdict::Fail(Box::new(f));
        return Ok(report);
    }
    let mu = double_dual_map(m)?.verdict;
    report.cond3 = Some(mu);
    if mu != DualityVerdict::Iso {
        report.verdict = GVerdict::Fail(Box::new(GFailure {
            condition: GCondition::DoubleDuality,
            degree: None,
            ext: None,
            duality: Some(mu),
        }));
        return Ok(report);
    }
    if is_catalog_self_injective(m.ring()) {
        report.verdict = GVerdict::Certified(CertifiedBy::SelfInjectiveRing);
        return Ok(report);
    }
    match complete_resolution_check(m, depth) {
        Ok(w) if w.kind != WindowKind::DualTail => {
            report.verdict = GVerdict::Certified(CertifiedBy::CompleteResolution(w.kind));
        }
        Ok(_) | Err(Error::NotExact(_)) | Err(Error::NoCoresolutionAvailable) => {}
        Err(e) => return Err(e),
    }
    Ok(report)
}

#[derive(Debug, Clone)]
pub enum GpdVerdict {
    AtMost(usize),
    AtLeastDepthInconclusive(usize),
    FailWitness(Box<GClassReport>),
}

impl fmt::Display for GpdVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GpdVerdict::AtMost(n) => write!(f, "AtMost({n})"),
            GpdVerdict::AtLeastDepthInconclusive(d) => write!(f, "AtLeastDepthInconclusive({d})"),
            GpdVerdict::FailWitness(_) => write!(f, "FailWitness"),
        }
    }
}

/// Smallest `m <= n` whose syzygy `Ω_m` passes the G-class test at
/// `depth`. A degree-guard abort makes the verdict inconclusive.
pub fn gpd_bounded(m: &FPModule, n: usize, depth: usize) -> Result<GpdVerdict> {
    match gpd_inner(m, n, depth) {
        Err(Error::DegreeGuard { .. }) => Ok(GpdVerdict::AtLeastDepthInconclusive(depth)),
        other => other,
    }
}

fn gpd_inner(m: &FPModule, n: usize, depth: usize) -> Result<GpdVerdict> {
    let res = free_resolution(m, n + 1)?;
    let mut last = None;
    for i in 0..=n {
        let omega = res.syzygy(i)?;
        let report = g_class_test(&omega, depth)?;
        if report.verdict.passed() {
            return Ok(GpdVerdict::AtMost(i));
        }
        last = Some(report);
    }
    Ok(GpdVerdict::FailWitness(Box::new(last.expect("n >= 0"))))
}

#[derive(Debug, Clone)]
pub struct GpdComparison {
    pub base: GpdVerdict,
    pub extension_variable: String,
    pub extension: GpdVerdict,
}

/// Runs [`gpd_bounded`] on `M` and on `M[y]` for a fresh variable `y`.
pub fn gpd_polynomial_compare(m: &FPModule, n: usize, depth: usize) -> Result<GpdComparison> {
    let vars = m.ring().base().vars();
    let name = std::iter::once("y".to_string())
        .chain((1..).map(|i| format!("y{i}")))
        .find(|c| !vars.contains(c))
        .expect("infinitely many candidates");
    let (_, my) = polynomial_extension(m, &name)?;
    Ok(GpdComparison {
        base: gpd_bounded(m, n, depth)?,
        extension_variable: name,
        extension: gpd_bounded(&my, n, depth)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Field, MonomialOrder, PolyRing};
    use std::sync::Arc;

    fn qx() -> Arc<QuotRing> {
        let p = PolyRing::new(Field::Rationals, &["x"], MonomialOrder::Grevlex).unwrap();
        Arc::new(QuotRing::polynomial(p))
    }

    #[test]
    fn free_is_certified() {
        let r = qx();
        let rep = g_class_test(&FPModule::free(r, 2), 3).unwrap();
        assert!(matches!(
            rep.verdict,
            GVerdict::Certified(CertifiedBy::CompleteResolution(WindowKind::Trivial))
        ));
    }

    #[test]
    fn residue_field_of_qx_fails_first_condition() {
        let r = qx();
        let k = FPModule::from_rows(r, &[&["x"]]).unwrap();
        let rep = g_class_test(&k, 3).unwrap();
        match rep.verdict {
            GVerdict::Fail(f) => {
                assert_eq!(f.condition, GCondition::ExtOfModule);
                assert_eq!(f.degree, Some(1));
                assert_eq!(f.ext.unwrap().vector_space_dimension().unwrap(), Some(1));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(gpd_bounded(&k, 2, 3).unwrap(), GpdVerdict::AtMost(1)));
    }

    #[test]
    fn square_zero_ideal() {
        let p = PolyRing::new(Field::prime(2).unwrap(), &["x"], MonomialOrder::Grevlex).unwrap();
        let r = Arc::new(QuotRing::new(p.clone(), vec![p.parse("x^2").unwrap()]).unwrap());
        let i = FPModule::from_rows(r, &[&["x"]]).unwrap();
        let rep = g_class_test(&i, 5).unwrap();
        assert!(matches!(rep.verdict, GVerdict::Certified(_)));
        let cmp = gpd_polynomial_compare(&i, 2, 3).unwrap();
        assert!(matches!(cmp.base, GpdVerdict::AtMost(0)));
        assert!(matches!(cmp.extension, GpdVerdict::AtMost(0)));
    }
}
