use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::module::{homology, FPModule, Matrix, ModuleMap};
use crate::ring::linalg::{self, Lifter};
use crate::ring::{Poly, QuotRing};

pub const DEFAULT_DEPTH: usize = 8;

/// `... -> F_2 -> F_1 -> F_0 -> M -> 0` with `F_0` free on the generators
/// of `M`. `maps[d - 1]` is the matrix of `F_d -> F_{d-1}`.
#[derive(Debug, Clone)]
pub struct FreeResolution {
    pub module: FPModule,
    pub maps: Vec<Matrix>,
    /// Positions `i >= 1` at which homology was checked to vanish.
    pub verified_depth: usize,
    /// `(s, p)` with `maps[s + p] == maps[s]`.
    pub periodicity: Option<(usize, usize)>,
    /// True when the last map is injective, so the resolution is finite.
    pub terminated: bool,
}

impl FreeResolution {
    pub fn ring(&self) -> &Arc<QuotRing> {
        self.module.ring()
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    /// Rank of `F_i`; zero past the end of a terminated resolution.
    pub fn rank(&self, i: usize) -> usize {
        if i == 0 {
            self.module.ngens()
        } else if i <= self.maps.len() {
            self.maps[i - 1].ncols()
        } else {
            0
        }
    }

    /// The `i`-th syzygy `Ω_i = coker(F_{i+1} -> F_i)`; `Ω_0` is `M` on
    /// its interreduced presentation. Needs `i < len()` unless the
    /// resolution terminated.
    pub fn syzygy(&self, i: usize) -> Result<FPModule> {
        let n = self.rank(i);
        let rel = match self.maps.get(i) {
            Some(m) => m.clone(),
            None if self.terminated => Matrix::zero(n, 0),
            None => {
                return Err(Error::Shape(format!(
                    "syzygy {i} needs a resolution with {} maps",
                    i + 1
                )))
            }
        };
        FPModule::new(self.ring().clone(), n, rel)
    }

    /// `F_d -> F_{d-1}` as a map of free modules, `d >= 1`.
    pub fn differential(&self, d: usize) -> ModuleMap {
        let ring = self.ring();
        let m = &self.maps[d - 1];
        ModuleMap::new(
            FPModule::free(ring.clone(), m.ncols()),
            FPModule::free(ring.clone(), m.nrows()),
            m.clone(),
        )
        .expect("maps between free modules are well defined")
    }
}

/// Resolution by iterated canonical syzygies, at most `depth` maps.
pub fn free_resolution(m: &FPModule, depth: usize) -> Result<FreeResolution> {
    let ring = m.ring();
    let n0 = m.ngens();
    let first = linalg::canonical_generators(ring, n0, m.relations().columns())?;
    let mut maps = Vec::new();
    let mut terminated = first.is_empty();
    if !terminated && depth > 0 {
        maps.push(Matrix::from_columns(n0, first)?);
    }
    while !terminated && maps.len() < depth {
        let last = maps.last().expect("nonempty");
        let k = linalg::kernel(ring, last.nrows(), last.columns())?;
        if k.is_empty() {
            terminated = true;
        } else {
            maps.push(Matrix::from_columns(last.ncols(), k)?);
        }
    }
    if !terminated && maps.len() == depth {
        if let Some(last) = maps.last() {
            terminated = linalg::syzygies(ring, last.nrows(), last.columns())?.is_empty();
        }
    }
    let periodicity = detect_periodicity(&maps);
    let mut res = FreeResolution {
        module: m.clone(),
        maps,
        verified_depth: 0,
        periodicity,
        terminated,
    };
    res.verified_depth = verify(&res)?;
    Ok(res)
}

fn detect_periodicity(maps: &[Matrix]) -> Option<(usize, usize)> {
    for t in 1..maps.len() {
        for s in 0..t {
            if maps[s] == maps[t] {
                return Some((s, t - s));
            }
        }
    }
    None
}

/// Independently checks the resolution; returns the number of positions
/// `i >= 1` with vanishing homology. Position 0 (the cokernel is `M`) and
/// `d d = 0` must hold or the resolution is rejected.
pub fn verify(res: &FreeResolution) -> Result<usize> {
    let ring = res.ring();
    if let Some(d1) = res.maps.first() {
        let rel = res.module.relation_span()?;
        let img = linalg::Span::new(ring, d1.nrows(), d1.columns())?;
        let same = d1.columns().iter().all(|c| rel.contains(c))
            && res.module.relations().columns().iter().all(|c| img.contains(c));
        if !same {
            return Err(Error::NotExact("position 0".into()));
        }
    }
    let mut verified = 0;
    for i in 1..res.maps.len() {
        let d = res.differential(i);
        let e = res.differential(i + 1);
        if !e.then(&d)?.is_zero()? {
            return Err(Error::NotExact(format!("d_{} d_{} != 0", i, i + 1)));
        }
        if !homology(&e, &d)?.is_zero()? {
            return Err(Error::NotExact(format!("position {i}")));
        }
        verified += 1;
    }
    if res.terminated {
        let len = res.maps.len();
        if len > 0 {
            if !res.differential(len).is_injective()? {
                return Err(Error::NotExact(format!("position {len}")));
            }
            verified += 1;
        }
    }
    Ok(verified)
}

/// A section certificate for `coker(C)`: a matrix `Y` with `C Y C = C`,
/// which makes `C Y` an idempotent with image `im C`, so `im C` is a
/// direct summand and the cokernel is projective. `None` means no such
/// `Y` exists, which witnesses non-projectivity.
pub fn projective_splitting(m: &FPModule) -> Result<Option<Matrix>> {
    let ring = m.ring();
    let c = m.relations();
    let (n, k) = (c.nrows(), c.ncols());
    if k == 0 {
        return Ok(Some(Matrix::zero(0, n)));
    }
    // unknown y_{ab} (a < k, b < n) contributes C[:, a] * C[b, :]
    let rows = c.rows();
    let mut cols = Vec::with_capacity(k * n);
    for a in 0..k {
        for row_b in rows.iter() {
            let mut v = Vec::with_capacity(n * k);
            for entry in row_b.iter().take(k) {
                for i in 0..n {
                    v.push(ring.mul(c.entry(i, a), entry));
                }
            }
            cols.push(v);
        }
    }
    let target: Vec<Poly> = c.columns().iter().flat_map(|col| col.iter().cloned()).collect();
    let lifter = Lifter::new(ring, n * k, &cols)?;
    Ok(lifter.lift(&target).map(|y| {
        let ycols = (0..n)
            .map(|b| (0..k).map(|a| y[a * n + b].clone()).collect())
            .collect();
        Matrix::from_columns(k, ycols).expect("shape")
    }))
}

pub fn is_projective(m: &FPModule) -> Result<bool> {
    Ok(projective_splitting(m)?.is_some())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PdVerdict {
    Finite(usize),
    AtLeast(usize),
    InfinitePeriodic(usize, usize),
}

impl fmt::Display for PdVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PdVerdict::Finite(n) => write!(f, "Finite({n})"),
            PdVerdict::AtLeast(d) => write!(f, "AtLeast({d})"),
            PdVerdict::InfinitePeriodic(s, p) => write!(f, "InfinitePeriodic({s}, {p})"),
        }
    }
}

/// Verdict from an existing resolution: the first syzygy with a splitting
/// certificate gives the projective dimension.
pub fn pd_from_resolution(res: &FreeResolution) -> Result<PdVerdict> {
    let len = res.len();
    for i in 0..len {
        if is_projective(&res.syzygy(i)?)? {
            return Ok(PdVerdict::Finite(i));
        }
        if let Some((s, p)) = res.periodicity {
            if i + 1 == s + p {
                return Ok(PdVerdict::InfinitePeriodic(s, p));
            }
        }
    }
    if res.terminated {
        return Ok(PdVerdict::Finite(len));
    }
    Ok(PdVerdict::AtLeast(len))
}

pub fn pd_bounded(m: &FPModule, depth: usize) -> Result<PdVerdict> {
    pd_from_resolution(&free_resolution(m, depth)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Field, MonomialOrder, PolyRing};

    fn dual_numbers() -> Arc<QuotRing> {
        let p = PolyRing::new(Field::prime(2).unwrap(), &["x"], MonomialOrder::Grevlex).unwrap();
        Arc::new(QuotRing::new(p.clone(), vec![p.parse("x^2").unwrap()]).unwrap())
    }

    fn qx() -> Arc<QuotRing> {
        let p = PolyRing::new(Field::Rationals, &["x"], MonomialOrder::Grevlex).unwrap();
        Arc::new(QuotRing::polynomial(p))
    }

    #[test]
    fn periodic_resolution_of_square_zero_ideal() {
        let r = dual_numbers();
        let i = FPModule::from_rows(r.clone(), &[&["x"]]).unwrap();
        let res = free_resolution(&i, 5).unwrap();
        assert_eq!(res.len(), 5);
        assert!(res.maps.iter().all(|m| m.display(&r) == "[x]"));
        assert_eq!(res.periodicity, Some((0, 1)));
        assert_eq!(res.verified_depth, 4);
        assert_eq!(pd_bounded(&i, 5).unwrap(), PdVerdict::InfinitePeriodic(0, 1));
    }

    #[test]
    fn finite_resolutions() {
        let r = qx();
        let free = FPModule::free(r.clone(), 2);
        let res = free_resolution(&free, 4).unwrap();
        assert!(res.is_empty() && res.terminated);
        assert_eq!(pd_bounded(&free, 4).unwrap(), PdVerdict::Finite(0));

        let k = FPModule::from_rows(r.clone(), &[&["x"]]).unwrap();
        let res = free_resolution(&k, 4).unwrap();
        assert_eq!(res.len(), 1);
        assert!(res.terminated);
        assert_eq!(res.verified_depth, 1);
        assert_eq!(pd_bounded(&k, 4).unwrap(), PdVerdict::Finite(1));
    }

    #[test]
    fn projective_but_not_free_presentation() {
        // R = Q[x]/(x^2 - x) = Q x Q; R/(x) is projective
        let p = PolyRing::new(Field::Rationals, &["x"], MonomialOrder::Grevlex).unwrap();
        let r = Arc::new(QuotRing::new(p.clone(), vec![p.parse("x^2 - x").unwrap()]).unwrap());
        let m = FPModule::from_rows(r.clone(), &[&["x"]]).unwrap();
        assert!(is_projective(&m).unwrap());
        assert_eq!(pd_bounded(&m, 3).unwrap(), PdVerdict::Finite(0));
        let res = free_resolution(&m, 3).unwrap();
        assert_eq!(res.periodicity, Some((0, 2)));
    }

    #[test]
    fn depth_cap_gives_lower_bound() {
        let r = dual_numbers();
        let i = FPModule::from_rows(r, &[&["x"]]).unwrap();
        assert_eq!(pd_bounded(&i, 1).unwrap(), PdVerdict::AtLeast(1));
    }
}
