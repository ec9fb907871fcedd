use std::fmt;

use crate::error::{Error, Result};
use crate::module::{dual_module, homology, FPModule, Matrix, ModuleMap};
use crate::resolution::{free_resolution, projective_splitting};
use crate::ring::QuotRing;

/// How the right half of a complete resolution was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WindowKind {
    /// `M` projective: the complex alternates the idempotents `E` and
    /// `I - E` from a splitting, `M = coker E`.
    Trivial,
    /// Periodic resolution with `M` itself repeating.
    Periodic { period: usize },
    /// Right half obtained by dualizing a resolution of `M*`. Only the
    /// checked window is certified.
    DualTail,
}

impl fmt::Display for WindowKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WindowKind::Trivial => write!(f, "trivial"),
            WindowKind::Periodic { period } => write!(f, "periodic({period})"),
            WindowKind::DualTail => write!(f, "dual_tail"),
        }
    }
}

/// A finite window `X_0 -> X_1 -> ... -> X_L` of a complete resolution,
/// maps listed in arrow order. `M` is the cokernel of `maps[anchor - 1]`
/// and embeds in `X_{anchor + 1}` through `maps[anchor]`.
#[derive(Debug, Clone)]
pub struct CompleteResolutionWindow {
    pub kind: WindowKind,
    pub maps: Vec<Matrix>,
    pub anchor: usize,
    /// Interior positions checked exact, before and after `Hom(-, R)`.
    pub exact_positions: usize,
    pub dual_exact_positions: usize,
}

fn free_map(ring: &std::sync::Arc<QuotRing>, m: &Matrix) -> ModuleMap {
    ModuleMap::new(
        FPModule::free(ring.clone(), m.ncols()),
        FPModule::free(ring.clone(), m.nrows()),
        m.clone(),
    )
    .expect("maps between free modules are well defined")
}

/// Checks exactness at every interior object of a sequence of free maps;
/// returns the number of positions checked or the first failing one.
fn exact_positions(ring: &std::sync::Arc<QuotRing>, maps: &[Matrix]) -> Result<std::result::Result<usize, usize>> {
    for j in 0..maps.len().saturating_sub(1) {
        let f = free_map(ring, &maps[j]);
        let g = free_map(ring, &maps[j + 1]);
        if !f.then(&g)?.is_zero()? || !homology(&f, &g)?.is_zero()? {
            return Ok(Err(j + 1));
        }
    }
    Ok(Ok(maps.len().saturating_sub(1)))
}

fn certify(
    ring: &std::sync::Arc<QuotRing>,
    kind: WindowKind,
    maps: Vec<Matrix>,
    anchor: usize,
) -> Result<CompleteResolutionWindow> {
    let exact = match exact_positions(ring, &maps)? {
        Ok(n) => n,
        Err(pos) => {
            return Err(Error::NotExact(format!(
                "complete resolution window at position {}",
                pos as i64 - anchor as i64
            )))
        }
    };
    let duals: Vec<Matrix> = maps.iter().rev().map(Matrix::transpose).collect();
    let dual_exact = match exact_positions(ring, &duals)? {
        Ok(n) => n,
        Err(pos) => {
            return Err(Error::NotExact(format!(
                "dual of the complete resolution window at position {}",
                anchor as i64 - (maps.len() - pos) as i64
            )))
        }
    };
    Ok(CompleteResolutionWindow {
        kind,
        maps,
        anchor,
        exact_positions: exact,
        dual_exact_positions: dual_exact,
    })
}

/// Assembles a two-sided window of `2 * window` maps around `M` and
/// verifies exactness and exactness after `Hom(-, R)`.
pub fn complete_resolution_check(m: &FPModule, window: usize) -> Result<CompleteResolutionWindow> {
    let ring = m.ring().clone();
    let w = window.max(1);
    let n = m.ngens();
    let interreduced = m.interreduced()?;
    if let Some(y) = projective_splitting(&interreduced)? {
        let c = interreduced.relations();
        let e = if c.ncols() == 0 {
            Matrix::zero(n, n)
        } else {
            c.mul(&ring, &y)?
        };
        let id_minus_e = Matrix::identity(&ring, n).sub(&ring, &e)?;
        let maps = (0..2 * w)
            .map(|j| if j % 2 == 0 { e.clone() } else { id_minus_e.clone() })
            .collect();
        return certify(&ring, WindowKind::Trivial, maps, 1);
    }
    let res = free_resolution(m, w.max(2))?;
    if let Some((0, p)) = res.periodicity {
        // ... -> F_1 -> F_0 -> F_{p-1} -> ... -> F_0 -> F_{p-1} -> ...
        let mut maps: Vec<Matrix> = (0..w).rev().map(|j| res.maps[j % p].clone()).collect();
        for j in 0..w {
            maps.push(res.maps[p - 1 - (j % p)].clone());
        }
        return certify(&ring, WindowKind::Periodic { period: p }, maps, w);
    }
    // right half from the dual: F_0 --K^T--> G_0* --e_1^T--> G_1* -> ...
    let dual = dual_module(m)?;
    let dres = match free_resolution(&dual.module, w) {
        Ok(r) => r,
        Err(Error::DegreeGuard { .. }) => return Err(Error::NoCoresolutionAvailable),
        Err(e) => return Err(e),
    };
    let left = res.len().min(w);
    let mut maps: Vec<Matrix> = (0..left).rev().map(|j| res.maps[j].clone()).collect();
    let anchor = maps.len();
    maps.push(dual.evaluation.transpose());
    for j in 0..dres.len().min(w.saturating_sub(1)) {
        maps.push(dres.maps[j].transpose());
    }
    certify(&ring, WindowKind::DualTail, maps, anchor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Field, MonomialOrder, PolyRing};
    use std::sync::Arc;

    #[test]
    fn periodic_window() {
        let p = PolyRing::new(Field::prime(2).unwrap(), &["x"], MonomialOrder::Grevlex).unwrap();
        let r = Arc::new(QuotRing::new(p.clone(), vec![p.parse("x^2").unwrap()]).unwrap());
        let i = FPModule::from_rows(r.clone(), &[&["x"]]).unwrap();
        let w = complete_resolution_check(&i, 3).unwrap();
        assert_eq!(w.kind, WindowKind::Periodic { period: 1 });
        assert_eq!(w.maps.len(), 6);
        assert_eq!(w.exact_positions, 5);
        assert_eq!(w.dual_exact_positions, 5);
    }

    #[test]
    fn free_module_trivial_window() {
        let p = PolyRing::new(Field::Rationals, &["x"], MonomialOrder::Grevlex).unwrap();
        let r = Arc::new(QuotRing::polynomial(p));
        let w = complete_resolution_check(&FPModule::free(r, 2), 2).unwrap();
        assert_eq!(w.kind, WindowKind::Trivial);
    }

    #[test]
    fn torsion_over_domain_fails() {
        let p = PolyRing::new(Field::Rationals, &["x"], MonomialOrder::Grevlex).unwrap();
        let r = Arc::new(QuotRing::polynomial(p));
        let k = FPModule::from_rows(r, &[&["x"]]).unwrap();
        assert!(matches!(complete_resolution_check(&k, 3), Err(Error::NotExact(_))));
    }
}
