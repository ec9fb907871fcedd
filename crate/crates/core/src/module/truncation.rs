use super::fpmodule::{subquotient, SubmoduleOfFree};
use super::map::ModuleMap;
use super::matrix::Matrix;
use super::transport::PolynomialExtension;
use crate::error::{Error, Result};
use crate::ring::groebner::{Engine, ModuleOrder};
use crate::ring::linalg::Column;
use crate::ring::{Poly, QuotRing};

/// `M ∩ F_k` for `M ⊆ F[x] = R[x]^r`, where `F_k` consists of the vectors
/// whose entries have `x`-degree below `k`. The result is a submodule of
/// `R^{r k}`; coordinate `j * r + i` holds the coefficient of `x^j` in
/// entry `i`.
///
/// Uses a Groebner basis for an order refining the `x`-degree: every
/// element of `M` of `x`-degree `d` is an `R`-combination of `x^j g` with
/// `g` in the basis and `j + deg_x(g) <= d`.
pub fn intersect_with_truncation(
    m: &SubmoduleOfFree,
    ext: &PolynomialExtension,
    k: usize,
) -> Result<SubmoduleOfFree> {
    m.ring().check_same(ext.ext())?;
    let r = m.rank();
    let ring: &QuotRing = ext.ext();
    let p = ring.base();
    let mut weight = vec![0; p.nvars()];
    weight[ext.var()] = 1;
    let engine = Engine::new(
        p,
        ModuleOrder {
            weight: Some(weight),
            position_first: true,
        },
    );
    let mut gens: Vec<_> = m.generators().iter().map(|g| engine.from_dense(g, 0)).collect();
    for i in 0..r {
        for g in ring.modulus().groebner_basis() {
            let mut v = vec![Poly::zero(); r];
            v[i] = g.clone();
            gens.push(engine.from_dense(&v, 0));
        }
    }
    let gb = engine.groebner(&gens)?;
    let mut out: Vec<Column> = Vec::new();
    for g in &gb {
        let dense = engine.to_dense(g, 0, r);
        let d = dense.iter().map(|f| f.degree_in(ext.var())).max().unwrap_or(0) as usize;
        if d >= k {
            continue;
        }
        let coeffs = dense
            .iter()
            .map(|f| ext.coefficients(f))
            .collect::<Result<Vec<_>>>()?;
        for shift in 0..k - d {
            let mut v = vec![Poly::zero(); r * k];
            for (i, c) in coeffs.iter().enumerate() {
                for (j, a) in c.iter().enumerate() {
                    v[(j + shift) * r + i] = a.clone();
                }
            }
            out.push(v);
        }
    }
    SubmoduleOfFree::new(ext.base().clone(), r * k, out)?.interreduced()
}

/// Outcome of comparing `A ⊆ B ⊆ B1` and `A ⊆ A1 ⊆ B1`.
#[derive(Debug, Clone)]
pub struct IntersectionCriterion {
    /// The induced map `B/A -> B1/A1`.
    pub h: ModuleMap,
    pub h_is_mono: bool,
    pub a_equals_a1_cap_b: bool,
}

pub fn intersection_criterion_check(
    a: &SubmoduleOfFree,
    b: &SubmoduleOfFree,
    b1: &SubmoduleOfFree,
    a1: &SubmoduleOfFree,
) -> Result<IntersectionCriterion> {
    for (small, big, what) in [
        (a, b, "A ⊆ B"),
        (b, b1, "B ⊆ B1"),
        (a1, b1, "A1 ⊆ B1"),
        (a, a1, "A ⊆ A1"),
    ] {
        if small.rank() != big.rank() || !big.contains_submodule(small)? {
            return Err(Error::InclusionFailed(what.to_string()));
        }
    }
    let ring = b.ring();
    let n = b.rank();
    let src = subquotient(ring, n, b.generators(), a.generators())?;
    let tgt = subquotient(ring, n, b1.generators(), a1.generators())?;
    let cols = b
        .generators()
        .iter()
        .map(|g| {
            b1.coordinates(g)?
                .ok_or_else(|| Error::InclusionFailed("B ⊆ B1".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let h = ModuleMap::new(src, tgt, Matrix::from_columns(b1.generators().len(), cols)?)?;
    let h_is_mono = h.is_injective()?;
    let a_equals_a1_cap_b = a1.intersection(b)?.same_as(a)?;
    Ok(IntersectionCriterion {
        h,
        h_is_mono,
        a_equals_a1_cap_b,
    })
}
