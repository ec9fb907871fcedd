use crate::error::{Error, Result};
use crate::module::{
    homology, intersect_with_truncation, FPModule, Matrix, ModuleMap, PolynomialExtension,
    SubmoduleOfFree,
};
use crate::ring::linalg::Column;
use crate::ring::Poly;

/// `0 -> A[x] --φ--> B[x] --ψ--> M -> 0` for a submodule `M ⊆ F[x]` with
/// `x` regular on `F[x]/M`, where `B = M ∩ F_k` and `A = M ∩ F_{k-1}`.
#[derive(Debug, Clone)]
pub struct TruncationSequence {
    pub k: usize,
    /// `A ⊆ R^{r (k-1)}`, padded into `R^{r k}`.
    pub a: SubmoduleOfFree,
    /// `B ⊆ R^{r k}`.
    pub b: SubmoduleOfFree,
    pub a_module: FPModule,
    pub b_module: FPModule,
    /// `M` presented on its given generators.
    pub m_module: FPModule,
    pub phi: ModuleMap,
    pub psi: ModuleMap,
}

pub fn truncation_sequence(m: &SubmoduleOfFree, ext: &PolynomialExtension) -> Result<TruncationSequence> {
    m.ring().check_same(ext.ext())?;
    let x = ext.x();
    let n = m.quotient_module()?;
    if !ModuleMap::multiplication(&n, &x).is_injective()? {
        return Err(Error::PreconditionXNotRegularOnN);
    }
    let r = m.rank();
    let maxdeg = m
        .generators()
        .iter()
        .flat_map(|g| g.iter().map(|f| f.degree_in(ext.var())))
        .max()
        .unwrap_or(0) as usize;
    let k = maxdeg + 1;
    let b = intersect_with_truncation(m, ext, k)?;
    let a_short = intersect_with_truncation(m, ext, k - 1)?;
    let a = SubmoduleOfFree::new(
        ext.base().clone(),
        r * k,
        a_short
            .generators()
            .iter()
            .map(|g| {
                let mut v = g.clone();
                v.resize(r * k, Poly::zero());
                v
            })
            .collect(),
    )?;
    let a_module = a.as_module()?;
    let b_module = b.as_module()?;
    let m_module = m.as_module()?;
    let ax = ext.extend_module(&a_module)?;
    let bx = ext.extend_module(&b_module)?;

    // ψ: b ↦ Σ_j x^j b_j, written in the generators of M
    let mut psi_cols = Vec::with_capacity(b.generators().len());
    for g in b.generators() {
        let folded = fold(ext, r, k, g)?;
        let c = m
            .coordinates(&folded)?
            .ok_or_else(|| Error::NotExact("truncated element outside M".into()))?;
        psi_cols.push(c);
    }
    let psi = ModuleMap::new(
        bx.clone(),
        m_module.clone(),
        Matrix::from_columns(m.generators().len(), psi_cols)?,
    )?;

    // φ(a ⊗ 1) = a ⊗ x - (x a) ⊗ 1
    let ring = ext.ext();
    let mut phi_cols = Vec::with_capacity(a.generators().len());
    for g in a.generators() {
        let c = lift_into(&b, g)?;
        let mut shifted = vec![Poly::zero(); r];
        shifted.extend(g[..r * (k - 1)].iter().cloned());
        let cs = lift_into(&b, &shifted)?;
        let col: Column = c
            .iter()
            .zip(&cs)
            .map(|(u, v)| Ok(ring.sub(&ring.mul(&x, &ext.embed(u)?), &ext.embed(v)?)))
            .collect::<Result<_>>()?;
        phi_cols.push(col);
    }
    let phi = ModuleMap::new(
        ax,
        bx,
        Matrix::from_columns(b.generators().len(), phi_cols)?,
    )?;

    if !phi.then(&psi)?.is_zero()? {
        return Err(Error::NotExact("ψ φ != 0".into()));
    }
    if !homology(&phi, &psi)?.is_zero()? {
        return Err(Error::NotExact("ker ψ != im φ".into()));
    }
    if !phi.is_injective()? {
        return Err(Error::NotExact("φ is not injective".into()));
    }
    if !psi.is_surjective()? {
        return Err(Error::NotExact("ψ is not surjective".into()));
    }
    Ok(TruncationSequence {
        k,
        a,
        b,
        a_module,
        b_module,
        m_module,
        phi,
        psi,
    })
}

fn fold(ext: &PolynomialExtension, r: usize, k: usize, v: &[Poly]) -> Result<Column> {
    (0..r)
        .map(|i| {
            let coeffs: Vec<Poly> = (0..k).map(|j| v[j * r + i].clone()).collect();
            ext.from_coefficients(&coeffs)
        })
        .collect()
}

fn lift_into(b: &SubmoduleOfFree, v: &[Poly]) -> Result<Column> {
    b.coordinates(v)?
        .ok_or_else(|| Error::NotExact("element of A outside B".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Field, MonomialOrder, PolyRing, QuotRing};
    use std::sync::Arc;

    fn setup() -> PolynomialExtension {
        let q = PolyRing::new(Field::Rationals, &[], MonomialOrder::Grevlex).unwrap();
        let base = Arc::new(QuotRing::polynomial(q));
        PolynomialExtension::adjoin(&base, "x").unwrap()
    }

    #[test]
    fn graph_of_x() {
        let ext = setup();
        let r = ext.ext().clone();
        let m = SubmoduleOfFree::new(r.clone(), 2, vec![vec![r.parse("x").unwrap(), r.one()]])
            .unwrap();
        let s = truncation_sequence(&m, &ext).unwrap();
        assert_eq!(s.k, 2);
        assert!(s.a.is_zero());
        assert_eq!(s.b.generators().len(), 1);
        assert!(s.psi.is_isomorphism().unwrap());
    }

    #[test]
    fn whole_free_module() {
        let ext = setup();
        let m = SubmoduleOfFree::whole(ext.ext().clone(), 2);
        let s = truncation_sequence(&m, &ext).unwrap();
        assert_eq!(s.k, 1);
        assert!(s.a.is_zero());
        assert!(s.psi.is_isomorphism().unwrap());
    }

    #[test]
    fn nontrivial_a() {
        // M = <(1, 0), (x, x + 1)>, so F[x]/M ≅ Q[x]/(x + 1) has no x-torsion
        let ext = setup();
        let r = ext.ext().clone();
        let m = SubmoduleOfFree::new(
            r.clone(),
            2,
            vec![
                vec![r.one(), Poly::zero()],
                vec![r.parse("x").unwrap(), r.parse("x + 1").unwrap()],
            ],
        )
        .unwrap();
        let s = truncation_sequence(&m, &ext).unwrap();
        assert_eq!(s.k, 2);
        assert_eq!(s.a.generators().len(), 1);
        assert_eq!(s.b.generators().len(), 3);
        assert!(s.phi.is_injective().unwrap());
    }

    #[test]
    fn torsion_rejected() {
        let ext = setup();
        let r = ext.ext().clone();
        let m = SubmoduleOfFree::new(r.clone(), 1, vec![vec![r.parse("x").unwrap()]]).unwrap();
        assert_eq!(
            truncation_sequence(&m, &ext).unwrap_err(),
            Error::PreconditionXNotRegularOnN
        );
    }
}
