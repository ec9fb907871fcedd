//! Dense univariate polynomials over a coefficient field, used for the
//! diagonal forms over `k[x]` and `k[x]/(x^n)`.

use crate::ring::{Coeff, Field, Monomial, Poly, PolyRing};

/// Coefficients from degree 0 upward, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    pub field: Field,
    pub coeffs: Vec<Coeff>,
}

impl UniPoly {
    pub fn new(field: Field, mut coeffs: Vec<Coeff>) -> Self {
        while coeffs.last().is_some_and(Coeff::is_zero) {
            coeffs.pop();
        }
        UniPoly { field, coeffs }
    }

    pub fn zero(field: Field) -> Self {
        UniPoly { field, coeffs: Vec::new() }
    }

    pub fn one(field: Field) -> Self {
        UniPoly::new(field, vec![field.one()])
    }

    /// Reads a polynomial of a one-variable ring.
    pub fn from_poly(ring: &PolyRing, f: &Poly) -> Self {
        let field = ring.field();
        let deg = f.degree_in(0) as usize;
        let mut coeffs = vec![field.zero(); if f.is_zero() { 0 } else { deg + 1 }];
        for (m, c) in f.terms() {
            coeffs[m.0[0] as usize] = c.clone();
        }
        UniPoly::new(field, coeffs)
    }

    pub fn to_poly(&self, ring: &PolyRing) -> Poly {
        ring.from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(e, c)| (Monomial(vec![e as u32]), c.clone()))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = self.field.zero();
        UniPoly::new(
            self.field,
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z).add(o.coeffs.get(i).unwrap_or(&z)))
                .collect(),
        )
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly::new(self.field, self.coeffs.iter().map(Coeff::neg).collect())
    }

    pub fn sub(&self, o: &UniPoly) -> UniPoly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        UniPoly::new(self.field, out)
    }

    /// Quotient and remainder; `d` must be nonzero.
    pub fn divrem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by zero");
        let lead_inv = d.coeffs[dd].inv();
        let mut r = self.coeffs.clone();
        let mut q = vec![self.field.zero(); r.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1;
            let c = r[k].mul(&lead_inv);
            if !c.is_zero() {
                for (i, b) in d.coeffs.iter().enumerate() {
                    r[k - dd + i] = r[k - dd + i].sub(&c.mul(b));
                }
                q[k - dd] = c;
            }
            r.pop();
        }
        (UniPoly::new(self.field, q), UniPoly::new(self.field, r))
    }

    pub fn monic(&self) -> UniPoly {
        match self.coeffs.last() {
            Some(l) => {
                let inv = l.inv();
                UniPoly::new(self.field, self.coeffs.iter().map(|c| c.mul(&inv)).collect())
            }
            None => self.clone(),
        }
    }

    pub fn truncate(&self, n: usize) -> UniPoly {
        UniPoly::new(self.field, self.coeffs.iter().take(n).cloned().collect())
    }

    /// `self / x^v`, dropping lower terms.
    pub fn shift_down(&self, v: usize) -> UniPoly {
        UniPoly::new(self.field, self.coeffs.iter().skip(v).cloned().collect())
    }

    /// Inverse modulo `x^n` of a polynomial with nonzero constant term.
    pub fn inverse_mod_power(&self, n: usize) -> UniPoly {
        let c0 = self.coeffs[0].inv();
        let mut inv = vec![self.field.zero(); n];
        for k in 0..n {
            let mut s = if k == 0 { self.field.one() } else { self.field.zero() };
            for j in 1..=k {
                if let Some(a) = self.coeffs.get(j) {
                    s = s.sub(&a.mul(&inv[k - j]));
                }
            }
            inv[k] = s.mul(&c0);
        }
        UniPoly::new(self.field, inv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_and_inverse() {
        let f = Field::Rationals;
        let c = |x: i64| f.from_i64(x);
        let a = UniPoly::new(f, vec![c(-1), c(0), c(1)]); // x^2 - 1
        let b = UniPoly::new(f, vec![c(1), c(1)]); // x + 1
        let (q, r) = a.divrem(&b);
        assert!(r.is_zero());
        assert_eq!(q, UniPoly::new(f, vec![c(-1), c(1)]));
        let inv = b.inverse_mod_power(3);
        assert_eq!(b.mul(&inv).truncate(3), UniPoly::one(f));
    }
}
