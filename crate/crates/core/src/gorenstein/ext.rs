use crate::error::Result;
use crate::module::{homology, FPModule, Matrix, ModuleMap};
use crate::resolution::{free_resolution, FreeResolution};

/// `Ext^i(M, N)` as a finitely presented module.
#[derive(Debug, Clone)]
pub struct ExtResult {
    pub degree: usize,
    pub module: FPModule,
    pub is_zero: bool,
}

impl ExtResult {
    /// Length over the coefficient field, when finite.
    pub fn dimension(&self) -> Result<Option<usize>> {
        self.module.vector_space_dimension()
    }
}

/// `Hom(R^r, N) = N^r`, generator `a * n + t` sending `e_a` to generator
/// `t` of `N`.
fn hom_free_into(r: usize, n: &FPModule) -> FPModule {
    let mut out = FPModule::zero(n.ring().clone());
    for _ in 0..r {
        out = out.direct_sum(n).expect("same ring");
    }
    out
}

fn differential(res: &FreeResolution, i: usize) -> Matrix {
    if i >= 1 && i <= res.len() {
        res.maps[i - 1].clone()
    } else {
        Matrix::zero(res.rank(i.saturating_sub(1)), res.rank(i))
    }
}

/// `δ: Hom(F_{i-1}, N) -> Hom(F_i, N)`, precomposition with `d_i`.
fn hom_differential(res: &FreeResolution, n: &FPModule, i: usize) -> Result<ModuleMap> {
    let k = n.ngens();
    let src_rank = if i == 0 { 0 } else { res.rank(i - 1) };
    let d = if i == 0 {
        Matrix::zero(0, res.rank(0))
    } else {
        differential(res, i)
    };
    ModuleMap::new(
        hom_free_into(src_rank, n),
        hom_free_into(res.rank(i), n),
        d.transpose().kron_identity(k),
    )
}

/// Cohomology of `Hom(F, N)` at `Hom(F_i, N)` for a given resolution `F`
/// of `M`, which must have at least `i + 1` maps unless it terminated.
pub fn ext_from_resolution(res: &FreeResolution, n: &FPModule, i: usize) -> Result<ExtResult> {
    let into = hom_differential(res, n, i)?;
    let out = hom_differential(res, n, i + 1)?;
    let module = homology(&into, &out)?;
    let is_zero = module.is_zero()?;
    Ok(ExtResult {
        degree: i,
        module,
        is_zero,
    })
}

pub fn ext_module(m: &FPModule, n: &FPModule, i: usize) -> Result<ExtResult> {
    m.ring().check_same(n.ring())?;
    let res = free_resolution(m, i + 1)?;
    ext_from_resolution(&res, n, i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Field, MonomialOrder, PolyRing, QuotRing};
    use std::sync::Arc;

    #[test]
    fn ext_zero_is_hom() {
        let p = PolyRing::new(Field::Rationals, &["x"], MonomialOrder::Grevlex).unwrap();
        let r = Arc::new(QuotRing::polynomial(p));
        let free = FPModule::free(r.clone(), 1);
        let e = ext_module(&free, &free, 0).unwrap();
        assert!(!e.is_zero);
        assert!(e.module.has_free_presentation());
        assert_eq!(e.module.ngens(), 1);
    }

    #[test]
    fn ext_one_of_residue_field() {
        let p = PolyRing::new(Field::Rationals, &["x"], MonomialOrder::Grevlex).unwrap();
        let r = Arc::new(QuotRing::polynomial(p));
        let k = FPModule::from_rows(r.clone(), &[&["x"]]).unwrap();
        let free = FPModule::free(r.clone(), 1);
        let e = ext_module(&k, &free, 1).unwrap();
        assert_eq!(e.dimension().unwrap(), Some(1));
        assert!(ext_module(&k, &free, 0).unwrap().is_zero);
        assert!(ext_module(&k, &free, 2).unwrap().is_zero);
    }

    #[test]
    fn periodic_ext_vanishes() {
        let p = PolyRing::new(Field::prime(2).unwrap(), &["x"], MonomialOrder::Grevlex).unwrap();
        let r = Arc::new(QuotRing::new(p.clone(), vec![p.parse("x^2").unwrap()]).unwrap());
        let i = FPModule::from_rows(r.clone(), &[&["x"]]).unwrap();
        let free = FPModule::free(r.clone(), 1);
        for d in 1..=4 {
            assert!(ext_module(&i, &free, d).unwrap().is_zero);
        }
        // Ext^1(k, k) over the dual numbers is k
        assert_eq!(ext_module(&i, &i, 1).unwrap().dimension().unwrap(), Some(1));
    }
}
