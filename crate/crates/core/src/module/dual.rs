use super::fpmodule::FPModule;
use super::map::ModuleMap;
use super::matrix::Matrix;
use crate::error::{Error, Result};
use crate::ring::linalg::{self, Column, Lifter};

/// `M* = Hom(M, R)` with evaluation data: column `j` of `evaluation` is the
/// `j`-th generator of `M*` written as a functional on the generators of `M`.
#[derive(Debug, Clone)]
pub struct DualModule {
    pub module: FPModule,
    pub evaluation: Matrix,
}

/// Kernel of the transpose of the relations, presented by its syzygies.
pub fn dual_module(m: &FPModule) -> Result<DualModule> {
    let ring = m.ring();
    let n = m.ngens();
    let gens: Vec<Column> = if m.has_free_presentation() {
        (0..n).map(|i| super::fpmodule::unit(ring, n, i)).collect()
    } else {
        let rows = m.relations().rows();
        linalg::kernel(ring, m.relations().ncols(), &rows)?
    };
    let s = gens.len();
    let evaluation = Matrix::from_columns(n, gens)?;
    let rel = linalg::kernel(ring, n, evaluation.columns())?;
    let module = FPModule::new(ring.clone(), s, Matrix::from_columns(s, rel)?)?;
    Ok(DualModule { module, evaluation })
}

/// `f*: N* -> M*` for `f: M -> N`, given the duals of source and target.
pub fn dual_map(f: &ModuleMap, dual_source: &DualModule, dual_target: &DualModule) -> Result<ModuleMap> {
    let ring = f.ring();
    let ft = f.matrix().transpose();
    let lifter = Lifter::new(ring, f.source().ngens(), dual_source.evaluation.columns())?;
    let mut cols = Vec::with_capacity(dual_target.evaluation.ncols());
    for phi in dual_target.evaluation.columns() {
        let pulled = ft.apply(ring, phi);
        let c = lifter
            .lift(&pulled)
            .ok_or_else(|| Error::NotExact("pulled-back functional outside the dual".into()))?;
        cols.push(c);
    }
    let m = Matrix::from_columns(dual_source.module.ngens(), cols)?;
    ModuleMap::new(dual_target.module.clone(), dual_source.module.clone(), m)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DualityVerdict {
    Iso,
    MonoNotIso,
    NotMono,
}

impl DualityVerdict {
    pub fn name(self) -> &'static str {
        match self {
            DualityVerdict::Iso => "iso",
            DualityVerdict::MonoNotIso => "mono_not_iso",
            DualityVerdict::NotMono => "not_mono",
        }
    }
}

#[derive(Debug, Clone)]
pub struct DoubleDual {
    pub dual: DualModule,
    pub double: DualModule,
    pub map: ModuleMap,
    pub verdict: DualityVerdict,
}

/// `mu_M: M -> M**`, sending `m` to evaluation at `m`.
pub fn double_dual_map(m: &FPModule) -> Result<DoubleDual> {
    let ring = m.ring();
    let dual = dual_module(m)?;
    let double = dual_module(&dual.module)?;
    let lifter = Lifter::new(ring, dual.module.ngens(), double.evaluation.columns())?;
    let mut cols = Vec::with_capacity(m.ngens());
    for i in 0..m.ngens() {
        let ev = dual.evaluation.row(i);
        let c = lifter
            .lift(&ev)
            .ok_or_else(|| Error::NotExact("evaluation functional outside the double dual".into()))?;
        cols.push(c);
    }
    let mat = Matrix::from_columns(double.module.ngens(), cols)?;
    let map = ModuleMap::new(m.clone(), double.module.clone(), mat)?;
    let verdict = if !map.is_injective()? {
        DualityVerdict::NotMono
    } else if map.is_surjective()? {
        DualityVerdict::Iso
    } else {
        DualityVerdict::MonoNotIso
    };
    Ok(DoubleDual {
        dual,
        double,
        map,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Field, MonomialOrder, PolyRing, QuotRing};
    use std::sync::Arc;

    fn dual_numbers() -> Arc<QuotRing> {
        let p = PolyRing::new(Field::prime(2).unwrap(), &["x"], MonomialOrder::Grevlex).unwrap();
        let x2 = p.parse("x^2").unwrap();
        Arc::new(QuotRing::new(p, vec![x2]).unwrap())
    }

    #[test]
    fn free_modules_are_reflexive() {
        let r = dual_numbers();
        let f = FPModule::free(r, 3);
        let d = double_dual_map(&f).unwrap();
        assert_eq!(d.dual.module.ngens(), 3);
        assert!(d.dual.module.has_free_presentation());
        assert_eq!(d.verdict, DualityVerdict::Iso);
    }

    #[test]
    fn torsion_over_domain_has_zero_dual() {
        let p = PolyRing::new(Field::Rationals, &["x"], MonomialOrder::Grevlex).unwrap();
        let r = Arc::new(QuotRing::polynomial(p));
        let k = FPModule::from_rows(r, &[&["x"]]).unwrap();
        let d = double_dual_map(&k).unwrap();
        assert!(d.dual.module.is_zero().unwrap());
        assert_eq!(d.verdict, DualityVerdict::NotMono);
    }

    #[test]
    fn residue_field_of_dual_numbers() {
        let r = dual_numbers();
        let k = FPModule::from_rows(r.clone(), &[&["x"]]).unwrap();
        let d = dual_module(&k).unwrap();
        assert_eq!(d.module.vector_space_dimension().unwrap(), Some(1));
        assert_eq!(d.evaluation.column(0), &vec![r.parse("x").unwrap()]);
        assert_eq!(double_dual_map(&k).unwrap().verdict, DualityVerdict::Iso);
    }
}
