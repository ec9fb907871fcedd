use std::sync::Arc;

use super::catalog::{Catalog, KClass, Summand};
use crate::error::{Error, Result};
use crate::module::{polynomial_extension, FPModule, ModuleMap, PolynomialExtension, SubmoduleOfFree};
use crate::resolution::{free_resolution, pd_from_resolution, PdVerdict};
use crate::ring::{Poly, QuotRing};

/// All increasing `k`-subsets of `0..n`.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

fn determinant(ring: &QuotRing, m: &[Vec<Poly>]) -> Poly {
    match m.len() {
        0 => ring.one(),
        1 => m[0][0].clone(),
        n => {
            let mut acc = Poly::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Poly>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, e)| e.clone()).collect())
                    .collect();
                let t = ring.mul(&m[0][j], &determinant(ring, &minor));
                acc = if j % 2 == 0 { ring.add(&acc, &t) } else { ring.sub(&acc, &t) };
            }
            acc
        }
    }
}

/// Generators of the `j`-th Fitting ideal of `coker(C)`, the `(n-j)`-minors.
fn fitting_generators(m: &FPModule, j: usize) -> Vec<Poly> {
    let ring = m.ring();
    let n = m.ngens();
    if j >= n {
        return vec![ring.one()];
    }
    let size = n - j;
    let rows = m.relations().rows();
    let ncols = m.relations().ncols();
    if size > ncols {
        return Vec::new();
    }
    let mut out = Vec::new();
    for rs in combinations(n, size) {
        for cs in combinations(ncols, size) {
            let sub: Vec<Vec<Poly>> = rs.iter().map(|&r| cs.iter().map(|&c| rows[r][c].clone()).collect()).collect();
            let d = determinant(ring, &sub);
            if !d.is_zero() {
                out.push(d);
            }
        }
    }
    out
}

/// Rank of a projective module, read from its Fitting ideals: the `r`
/// with `Fitt_r = R` and `Fitt_{r-1} = 0`.
pub fn projective_rank(m: &FPModule) -> Result<usize> {
    let ring = m.ring();
    for r in 0..=m.ngens() {
        let gens = fitting_generators(m, r);
        if ring.ideal(gens)?.is_unit() {
            if r > 0 && !ring.ideal(fitting_generators(m, r - 1))?.generators().is_empty() {
                return Err(Error::NonConstantRank);
            }
            return Ok(r);
        }
    }
    Err(Error::NonConstantRank)
}

/// `Σ (-1)^i [P_i]` over a finite projective resolution, as a multiple of
/// `[R]`.
pub fn euler_class(m: &FPModule, depth: usize) -> Result<KClass> {
    let res = free_resolution(m, depth)?;
    match pd_from_resolution(&res)? {
        PdVerdict::Finite(n) => {
            let mut total: i64 = 0;
            for i in 0..n {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                total += sign * res.rank(i) as i64;
            }
            let last = res.syzygy(n)?;
            let r = if last.has_free_presentation() {
                last.ngens()
            } else {
                projective_rank(&last)?
            };
            total += if n % 2 == 0 { r as i64 } else { -(r as i64) };
            Ok(KClass::of(Summand::Free, total))
        }
        other => Err(Error::PdInfiniteOrUnresolved(other.to_string())),
    }
}

/// `[P/xP] - [A/xA]` for the presentation `0 -> A -> P -> M -> 0` of a
/// module over `R[x]`, in the catalog of the base ring `R`.
pub fn g_pi_class(m: &FPModule, ext: &PolynomialExtension) -> Result<KClass> {
    m.ring().check_same(ext.ext())?;
    let cat = Catalog::detect(ext.base())?;
    let n = m.ngens();
    let a = SubmoduleOfFree::new(ext.ext().clone(), n, m.relations().columns().to_vec())?
        .interreduced()?
        .as_module()?;
    let p_bar = FPModule::free(ext.base().clone(), n);
    let a_bar = ext.reduce_mod_var(&a)?;
    Ok(cat.class_decompose(&p_bar)?.sub(&cat.class_decompose(&a_bar)?))
}

/// `M[x]`, the representative of the image class under the extension map.
pub fn s0_lambda_class(m: &FPModule, name: &str) -> Result<(PolynomialExtension, FPModule)> {
    polynomial_extension(m, name)
}

#[derive(Debug, Clone)]
pub struct ThetaReport {
    /// `(label, pd)` for each supplied generator.
    pub generators: Vec<(String, usize)>,
    /// `ν([R^n]) = n [R]` for `n = 1..=4`.
    pub free_classes_ok: bool,
    /// Indices of the supplied sequences on which `ν` is not additive.
    pub violations: Vec<usize>,
}

/// Checks that the Euler map inverts the comparison map on free classes
/// and is additive on the supplied short exact sequences `(f, g)`.
pub fn theta_roundtrip(
    ring: &Arc<QuotRing>,
    generators: &[(String, FPModule)],
    sequences: &[(ModuleMap, ModuleMap)],
    depth: usize,
) -> Result<ThetaReport> {
    let mut gens = Vec::new();
    for (label, m) in generators {
        match pd_from_resolution(&free_resolution(m, depth)?)? {
            PdVerdict::Finite(n) => gens.push((label.clone(), n)),
            _ => return Err(Error::PropertyCUnverified(label.clone())),
        }
    }
    let mut free_ok = true;
    for n in 1..=4 {
        let k = euler_class(&FPModule::free(ring.clone(), n), depth)?;
        free_ok &= k == KClass::of(Summand::Free, n as i64);
    }
    let mut violations = Vec::new();
    for (idx, (f, g)) in sequences.iter().enumerate() {
        let sub = euler_class(f.source(), depth)?;
        let mid = euler_class(f.target(), depth)?;
        let quot = euler_class(g.target(), depth)?;
        if mid != sub.add(&quot) {
            violations.push(idx);
        }
    }
    Ok(ThetaReport {
        generators: gens,
        free_classes_ok: free_ok,
        violations,
    })
}
