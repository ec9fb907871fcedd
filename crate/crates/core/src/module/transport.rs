//! Change of rings: polynomial extensions, reduction modulo a regular
//! element, restriction of scalars along `R -> R[x]/(f)` and along a
//! surjection `R -> R/J`, and generic rank over a polynomial ring.

use std::sync::Arc;

use super::fpmodule::FPModule;
use super::map::ModuleMap;
use super::matrix::Matrix;
use crate::error::{Error, Result};
use crate::ring::linalg::Column;
use crate::ring::{Monomial, Poly, PolyRing, QuotRing};

/// `ext = base[var]`, with the modulus of `ext` generated by that of `base`.
#[derive(Debug, Clone)]
pub struct PolynomialExtension {
    base: Arc<QuotRing>,
    ext: Arc<QuotRing>,
    var: usize,
}

impl PolynomialExtension {
    /// Adjoins a fresh variable as the last variable.
    pub fn adjoin(base: &Arc<QuotRing>, name: &str) -> Result<Self> {
        let pb = base.base();
        if pb.var_index(name).is_some() {
            return Err(Error::VariableCollision(name.to_string()));
        }
        let mut vars = pb.vars().to_vec();
        vars.push(name.to_string());
        let pe = PolyRing::with_names(pb.field(), vars, pb.order())?.with_degree_guard(pb.degree_guard());
        let gens = base
            .modulus()
            .generators()
            .iter()
            .map(|g| pe.convert_from(pb, g))
            .collect::<Result<Vec<_>>>()?;
        let ext = Arc::new(QuotRing::new(pe, gens)?);
        let var = ext.base().nvars() - 1;
        Ok(PolynomialExtension {
            base: base.clone(),
            ext,
            var,
        })
    }

    /// Recognizes `ring` as `base[name]`: the reduced Groebner basis of the
    /// modulus must not involve `name`.
    pub fn from_variable(ring: &Arc<QuotRing>, name: &str) -> Result<Self> {
        let pe = ring.base();
        let var = pe
            .var_index(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        if ring.modulus().groebner_basis().iter().any(|g| g.degree_in(var) > 0) {
            return Err(Error::NotPolynomialExtension(name.to_string()));
        }
        let vars: Vec<String> = pe.vars().iter().filter(|v| *v != name).cloned().collect();
        let pb = PolyRing::with_names(pe.field(), vars, pe.order())?.with_degree_guard(pe.degree_guard());
        let gens = ring
            .modulus()
            .groebner_basis()
            .iter()
            .map(|g| pb.convert_from(pe, g))
            .collect::<Result<Vec<_>>>()?;
        let base = Arc::new(QuotRing::new(pb, gens)?);
        Ok(PolynomialExtension {
            base,
            ext: ring.clone(),
            var,
        })
    }

    pub fn base(&self) -> &Arc<QuotRing> {
        &self.base
    }

    pub fn ext(&self) -> &Arc<QuotRing> {
        &self.ext
    }

    pub fn var(&self) -> usize {
        self.var
    }

    pub fn var_name(&self) -> &str {
        &self.ext.base().vars()[self.var]
    }

    pub fn x(&self) -> Poly {
        self.ext.base().var(self.var)
    }

    pub fn embed(&self, f: &Poly) -> Result<Poly> {
        Ok(self.ext.nf(&self.ext.base().convert_from(self.base.base(), f)?))
    }

    /// The image under `x -> 0`.
    pub fn at_zero(&self, f: &Poly) -> Result<Poly> {
        let pe = self.ext.base();
        let g = pe.substitute_constant(f, self.var, &pe.field().zero());
        Ok(self.base.nf(&self.base.base().convert_from(pe, &g)?))
    }

    /// Coefficients of `f` as a polynomial in `x`, each as an element of
    /// the base ring; index is the exponent of `x`.
    pub fn coefficients(&self, f: &Poly) -> Result<Vec<Poly>> {
        let pe = self.ext.base();
        let deg = f.degree_in(self.var) as usize;
        let mut buckets: Vec<Vec<(Monomial, crate::ring::Coeff)>> = vec![Vec::new(); deg + 1];
        for (m, c) in f.terms() {
            let mut e = m.clone();
            let k = e.0[self.var] as usize;
            e.0[self.var] = 0;
            buckets[k].push((e, c.clone()));
        }
        buckets
            .into_iter()
            .map(|b| {
                let g = pe.from_terms(b);
                Ok(self.base.nf(&self.base.base().convert_from(pe, &g)?))
            })
            .collect()
    }

    /// `sum_j coeffs[j] x^j` in the extension.
    pub fn from_coefficients(&self, coeffs: &[Poly]) -> Result<Poly> {
        let pe = self.ext.base();
        let x = self.x();
        let mut out = Poly::zero();
        for (j, c) in coeffs.iter().enumerate() {
            let c = pe.convert_from(self.base.base(), c)?;
            out = pe.add(&out, &pe.mul(&c, &pe.pow(&x, j as u32)));
        }
        Ok(self.ext.nf(&out))
    }

    /// `M[x]`: same presentation over the extension.
    pub fn extend_module(&self, m: &FPModule) -> Result<FPModule> {
        m.ring().check_same(&self.base)?;
        let cols = m
            .relations()
            .columns()
            .iter()
            .map(|c| c.iter().map(|f| self.embed(f)).collect::<Result<Column>>())
            .collect::<Result<Vec<_>>>()?;
        FPModule::new(self.ext.clone(), m.ngens(), Matrix::from_columns(m.ngens(), cols)?)
    }

    pub fn extend_map(&self, f: &ModuleMap) -> Result<ModuleMap> {
        let cols = f
            .matrix()
            .columns()
            .iter()
            .map(|c| c.iter().map(|e| self.embed(e)).collect::<Result<Column>>())
            .collect::<Result<Vec<_>>>()?;
        ModuleMap::new(
            self.extend_module(f.source())?,
            self.extend_module(f.target())?,
            Matrix::from_columns(f.target().ngens(), cols)?,
        )
    }

    /// `N / xN` as a module over the base ring.
    pub fn reduce_mod_var(&self, n: &FPModule) -> Result<FPModule> {
        n.ring().check_same(&self.ext)?;
        let cols = n
            .relations()
            .columns()
            .iter()
            .map(|c| c.iter().map(|f| self.at_zero(f)).collect::<Result<Column>>())
            .collect::<Result<Vec<_>>>()?;
        FPModule::new(self.base.clone(), n.ngens(), Matrix::from_columns(n.ngens(), cols)?)
    }
}

/// `M[name]` over `R[name]`.
pub fn polynomial_extension(m: &FPModule, name: &str) -> Result<(PolynomialExtension, FPModule)> {
    let ext = PolynomialExtension::adjoin(m.ring(), name)?;
    let mx = ext.extend_module(m)?;
    Ok((ext, mx))
}

/// `M / uM` over `R/(u)`. Rejects units, zero-divisors of the ring and
/// elements that are not regular on `M`, checked in that order.
pub fn quotient_by_regular_element(m: &FPModule, u: &Poly) -> Result<FPModule> {
    let ring = m.ring();
    let u = ring.normal_form(u)?;
    if ring.is_unit(&u)? {
        return Err(Error::UnitElement);
    }
    if u.is_zero() || !ring.annihilator(&u)?.generators().is_empty() {
        return Err(Error::ZeroDivisorInRing);
    }
    if !ModuleMap::multiplication(m, &u).is_injective()? {
        return Err(Error::NotRegularOnModule);
    }
    let quotient = Arc::new(ring.quotient(&[u])?);
    FPModule::new(quotient, m.ngens(), m.relations().clone())
}

/// Regards a module over `R/J` as a module over `R`, for rings on the same
/// polynomial ring with `modulus(R) ⊆ J`.
pub fn restrict_along_quotient(m: &FPModule, ring: &Arc<QuotRing>) -> Result<FPModule> {
    let q = m.ring();
    let same_base = q.base().field() == ring.base().field()
        && q.base().vars() == ring.base().vars()
        && q.base().order() == ring.base().order();
    if !same_base
        || !ring
            .modulus()
            .groebner_basis()
            .iter()
            .all(|g| q.modulus().contains(q.base(), g))
    {
        return Err(Error::RingMismatch);
    }
    let n = m.ngens();
    let mut cols: Vec<Column> = m.relations().columns().to_vec();
    for i in 0..n {
        for g in q.modulus().groebner_basis() {
            let mut v = vec![Poly::zero(); n];
            v[i] = g.clone();
            cols.push(v);
        }
    }
    FPModule::new(ring.clone(), n, Matrix::from_columns(n, cols)?)
}

/// `N` over `T = R[x]/(f)` regarded as an `R`-module, `f` monic of degree
/// `k` in `x`. Generator `j * ngens + i` is `x^j g_i`.
pub fn restrict_scalars_monic(n: &FPModule, ext: &PolynomialExtension, f: &Poly) -> Result<FPModule> {
    let fc = ext.coefficients(&ext.ext().nf(f))?;
    let k = fc.len() - 1;
    if k == 0 || fc[k] != ext.base().one() {
        return Err(Error::NotMonic(ext.var_name().to_string()));
    }
    let t = ext.ext().quotient(std::slice::from_ref(f))?;
    n.ring().check_same(&t)?;
    let base = ext.base();
    let r = n.ngens();
    let reduce = |mut c: Vec<Poly>| -> Vec<Poly> {
        while c.len() > k {
            let top = c.pop().expect("nonempty");
            let shift = c.len() - k;
            for (j, a) in fc[..k].iter().enumerate() {
                c[shift + j] = base.sub(&c[shift + j], &base.mul(&top, a));
            }
        }
        c.resize(k, Poly::zero());
        c
    };
    let mut cols = Vec::new();
    for rel in n.relations().columns() {
        // x-coefficients of each entry, reduced below degree k
        let mut coeffs: Vec<Vec<Poly>> = rel
            .iter()
            .map(|e| Ok(reduce(ext.coefficients(e)?)))
            .collect::<Result<_>>()?;
        for _ in 0..k {
            let mut v = vec![Poly::zero(); r * k];
            for (i, c) in coeffs.iter().enumerate() {
                for (j, a) in c.iter().enumerate() {
                    v[j * r + i] = a.clone();
                }
            }
            cols.push(v);
            for c in coeffs.iter_mut() {
                let mut shifted = vec![Poly::zero()];
                shifted.extend(c.iter().cloned());
                *c = reduce(shifted);
            }
        }
    }
    FPModule::new(base.clone(), r * k, Matrix::from_columns(r * k, cols)?)
}

/// Rank over the fraction field, for modules over a polynomial ring.
pub fn module_rank(m: &FPModule) -> Result<usize> {
    let ring = m.ring();
    if !ring.is_polynomial_ring() {
        return Err(Error::RingNotRecognizedAsDomain);
    }
    Ok(m.ngens() - matrix_rank(ring.base(), m.relations().rows()))
}

/// Rank over the fraction field by fraction-free elimination.
pub fn matrix_rank(p: &PolyRing, mut rows: Vec<Vec<Poly>>) -> usize {
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, piv);
        let pivot_row = rows[rank].clone();
        let a = pivot_row[col].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            let b = row[col].clone();
            if b.is_zero() {
                continue;
            }
            for (e, pe) in row.iter_mut().zip(&pivot_row) {
                *e = p.sub(&p.mul(&a, e), &p.mul(&b, pe));
            }
        }
        rank += 1;
    }
    rank
}
