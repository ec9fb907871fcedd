use std::fmt;
use std::sync::Arc;

use super::field::Coeff;
use super::groebner::{Engine, ModVec, ModuleOrder};
use super::monomial::Monomial;
use super::poly::{Poly, PolyRing};
use crate::error::{Error, Result};

/// An ideal of a polynomial ring, with the reduced Groebner basis computed
/// at construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ideal {
    generators: Vec<Poly>,
    gb: Vec<Poly>,
}

/// Reduced Groebner basis of the ideal generated by `gens`, sorted by
/// descending leading monomial.
pub fn groebner_basis(ring: &PolyRing, gens: &[Poly]) -> Result<Vec<Poly>> {
    let engine = Engine::new(ring, ModuleOrder::pot());
    let vecs: Vec<ModVec> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| engine.from_dense(std::slice::from_ref(g), 0))
        .collect();
    let gb = engine.groebner(&vecs)?;
    Ok(gb
        .iter()
        .map(|v| engine.to_dense(v, 0, 1).pop().expect("rank one"))
        .collect())
}

fn reduce_by(ring: &PolyRing, f: &Poly, gb: &[Poly]) -> Poly {
    if gb.is_empty() || f.is_zero() {
        return f.clone();
    }
    let mut rem: Vec<(Monomial, Coeff)> = Vec::new();
    let mut p = f.clone();
    while let Some((m, c)) = p.leading().cloned() {
        let div = gb.iter().find(|g| g.leading().expect("nonzero").0.divides(&m));
        match div {
            Some(g) => {
                let (lm, lc) = g.leading().expect("nonzero");
                let q = lm.quotient_into(&m);
                p = ring.sub(&p, &ring.mul_term(g, &q, &c.div(lc)));
            }
            None => {
                rem.push((m, c));
                p = Poly::from_sorted(p.terms()[1..].to_vec());
            }
        }
    }
    Poly::from_sorted(rem)
}

impl Ideal {
    pub fn new(ring: &PolyRing, generators: Vec<Poly>) -> Result<Self> {
        for g in &generators {
            ring.check(g)?;
        }
        let gb = groebner_basis(ring, &generators)?;
        Ok(Ideal { generators, gb })
    }

    pub fn zero() -> Self {
        Ideal {
            generators: Vec::new(),
            gb: Vec::new(),
        }
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn groebner_basis(&self) -> &[Poly] {
        &self.gb
    }

    pub fn is_zero(&self) -> bool {
        self.gb.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gb.iter().any(|g| g.as_constant().is_some())
    }

    pub fn reduce(&self, ring: &PolyRing, f: &Poly) -> Poly {
        reduce_by(ring, f, &self.gb)
    }

    pub fn contains(&self, ring: &PolyRing, f: &Poly) -> bool {
        self.reduce(ring, f).is_zero()
    }
}

/// `base / modulus`. Elements are always kept as normal forms modulo the
/// reduced Groebner basis of the modulus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuotRing {
    base: PolyRing,
    modulus: Ideal,
}

impl QuotRing {
    pub fn new(base: PolyRing, modulus_generators: Vec<Poly>) -> Result<Self> {
        let modulus = Ideal::new(&base, modulus_generators)?;
        Ok(QuotRing { base, modulus })
    }

    pub fn polynomial(base: PolyRing) -> Self {
        QuotRing {
            base,
            modulus: Ideal::zero(),
        }
    }

    pub fn base(&self) -> &PolyRing {
        &self.base
    }

    pub fn modulus(&self) -> &Ideal {
        &self.modulus
    }

    pub fn is_polynomial_ring(&self) -> bool {
        self.modulus.is_zero()
    }

    /// True for the zero ring.
    pub fn is_trivial(&self) -> bool {
        self.modulus.is_unit()
    }

    /// Parses and reduces an element.
    pub fn parse(&self, text: &str) -> Result<Poly> {
        Ok(self.nf(&self.base.parse(text)?))
    }

    pub fn display(&self, f: &Poly) -> String {
        self.base.display(f)
    }

    /// Remainder of `f` modulo the reduced Groebner basis of the modulus.
    pub fn normal_form(&self, f: &Poly) -> Result<Poly> {
        self.base.check(f)?;
        Ok(self.nf(f))
    }

    pub(crate) fn nf(&self, f: &Poly) -> Poly {
        self.modulus.reduce(&self.base, f)
    }

    pub fn zero(&self) -> Poly {
        Poly::zero()
    }

    pub fn one(&self) -> Poly {
        self.nf(&self.base.one())
    }

    pub fn add(&self, a: &Poly, b: &Poly) -> Poly {
        self.base.add(a, b)
    }

    pub fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        self.base.sub(a, b)
    }

    pub fn neg(&self, a: &Poly) -> Poly {
        self.base.neg(a)
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        self.nf(&self.base.mul(a, b))
    }

    pub fn scale(&self, a: &Poly, c: &Coeff) -> Poly {
        self.base.scale(a, c)
    }

    /// `f` lies in the ideal of the base ring generated by `gens` and the
    /// modulus.
    pub fn ideal(&self, gens: Vec<Poly>) -> Result<Ideal> {
        let mut all: Vec<Poly> = gens.iter().map(|g| self.nf(g)).collect();
        all.retain(|g| !g.is_zero());
        let mut with_modulus = all.clone();
        with_modulus.extend(self.modulus.gb.iter().cloned());
        let gb = groebner_basis(&self.base, &with_modulus)?;
        Ok(Ideal {
            generators: all,
            gb,
        })
    }

    /// Whether `f` lies in `ideal` (an ideal of this ring built by
    /// [`QuotRing::ideal`]).
    pub fn ideal_membership(&self, f: &Poly, ideal: &Ideal) -> Result<bool> {
        self.base.check(f)?;
        Ok(ideal.contains(&self.base, f))
    }

    pub fn is_unit(&self, a: &Poly) -> Result<bool> {
        Ok(self.ideal(vec![a.clone()])?.is_unit())
    }

    /// Ring with `modulus + (extra)`.
    pub fn quotient(&self, extra: &[Poly]) -> Result<QuotRing> {
        let mut gens = self.modulus.generators.clone();
        gens.extend(extra.iter().cloned());
        let modulus = Ideal::new(&self.base, gens)?;
        Ok(QuotRing {
            base: self.base.clone(),
            modulus,
        })
    }

    /// Standard monomials, when finitely many. Every element is a unique
    /// linear combination of them.
    pub fn standard_monomials(&self) -> Option<Vec<Monomial>> {
        let n = self.base.nvars();
        let leads: Vec<Monomial> = self
            .modulus
            .gb
            .iter()
            .map(|g| g.leading().expect("nonzero").0.clone())
            .collect();
        standard_monomials_of(n, &leads)
    }

    pub fn into_arc(self) -> Arc<QuotRing> {
        Arc::new(self)
    }

    /// Same ring with a different degree guard.
    pub fn with_degree_guard(&self, guard: u32) -> QuotRing {
        QuotRing {
            base: self.base.clone().with_degree_guard(guard),
            modulus: self.modulus.clone(),
        }
    }
}

/// Monomials outside the monomial ideal generated by `leads`, if finite.
pub(crate) fn standard_monomials_of(nvars: usize, leads: &[Monomial]) -> Option<Vec<Monomial>> {
    if leads.iter().any(|m| m.is_one()) {
        return Some(Vec::new());
    }
    let mut bounds = Vec::with_capacity(nvars);
    for v in 0..nvars {
        let pure = leads
            .iter()
            .filter(|m| m.0.iter().enumerate().all(|(i, &e)| i == v || e == 0) && m.0[v] > 0)
            .map(|m| m.0[v])
            .min()?;
        bounds.push(pure);
    }
    let mut out = Vec::new();
    let mut e = vec![0u32; nvars];
    loop {
        let m = Monomial(e.clone());
        if !leads.iter().any(|l| l.divides(&m)) {
            out.push(m);
        }
        let mut i = 0;
        loop {
            if i == nvars {
                return Some(out);
            }
            e[i] += 1;
            if e[i] < bounds[i] {
                break;
            }
            e[i] = 0;
            i += 1;
        }
    }
}

impl fmt::Display for QuotRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.base.field(), self.base.vars().join(", "))?;
        if !self.modulus.generators.is_empty() {
            let gens: Vec<String> = self
                .modulus
                .generators
                .iter()
                .map(|g| self.base.display(g))
                .collect();
            write!(f, "/({})", gens.join(", "))?;
        }
        Ok(())
    }
}

impl QuotRing {
    pub fn check_same(&self, other: &QuotRing) -> Result<()> {
        if self.base.field() == other.base.field()
            && self.base.vars() == other.base.vars()
            && self.base.order() == other.base.order()
            && self.modulus.gb == other.modulus.gb
        {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Field, MonomialOrder};

    fn ring(field: Field, vars: &[&str], order: MonomialOrder) -> PolyRing {
        PolyRing::new(field, vars, order).unwrap()
    }

    #[test]
    fn gb_of_univariate_ideal_is_gcd() {
        let r = ring(Field::Rationals, &["x"], MonomialOrder::Lex);
        let gb = groebner_basis(&r, &[r.parse("x^2 - 1").unwrap(), r.parse("x^3 - 1").unwrap()])
            .unwrap();
        assert_eq!(gb, vec![r.parse("x - 1").unwrap()]);
    }

    #[test]
    fn gb_of_zero_ideal_is_empty() {
        let r = ring(Field::Rationals, &["x"], MonomialOrder::Lex);
        assert!(groebner_basis(&r, &[]).unwrap().is_empty());
        assert!(groebner_basis(&r, &[Poly::zero()]).unwrap().is_empty());
    }

    #[test]
    fn monomial_ideal_is_already_reduced() {
        let r = ring(Field::Rationals, &["x", "y"], MonomialOrder::Lex);
        let gb = groebner_basis(&r, &[r.parse("x^2").unwrap(), r.parse("x*y").unwrap()]).unwrap();
        assert_eq!(gb, vec![r.parse("x^2").unwrap(), r.parse("x*y").unwrap()]);
    }

    #[test]
    fn normal_forms_in_quotients() {
        let q = ring(Field::Rationals, &["x"], MonomialOrder::Grevlex);
        let rq = QuotRing::new(q.clone(), vec![q.parse("x^2").unwrap()]).unwrap();
        assert!(rq.normal_form(&q.parse("x^2").unwrap()).unwrap().is_zero());

        let f2 = ring(Field::prime(2).unwrap(), &["x"], MonomialOrder::Grevlex);
        let r2 = QuotRing::new(f2.clone(), vec![f2.parse("x^2").unwrap()]).unwrap();
        let sq = r2.mul(&f2.parse("x + 1").unwrap(), &f2.parse("x + 1").unwrap());
        assert_eq!(sq, f2.one());

        let free = QuotRing::polynomial(q.clone());
        let f = q.parse("x^5 + 3").unwrap();
        assert_eq!(free.normal_form(&f).unwrap(), f);
    }

    #[test]
    fn normal_form_rejects_foreign_polynomial() {
        let q = ring(Field::Rationals, &["x"], MonomialOrder::Grevlex);
        let r2 = ring(Field::Rationals, &["x", "y"], MonomialOrder::Grevlex);
        let rq = QuotRing::polynomial(q);
        assert!(rq.normal_form(&r2.parse("y").unwrap()).is_err());
    }

    #[test]
    fn membership_examples() {
        let q = ring(Field::Rationals, &["x"], MonomialOrder::Lex);
        let rq = QuotRing::polynomial(q.clone());
        let i = rq
            .ideal(vec![q.parse("x^2 - 1").unwrap(), q.parse("x^3 - 1").unwrap()])
            .unwrap();
        assert!(!rq.ideal_membership(&q.parse("x^3").unwrap(), &i).unwrap());
        assert!(rq.ideal_membership(&Poly::zero(), &i).unwrap());
        let j = rq.ideal(vec![q.parse("x^2").unwrap()]).unwrap();
        assert!(!rq.ideal_membership(&q.parse("x").unwrap(), &j).unwrap());
    }

    #[test]
    fn standard_monomials_of_box() {
        let f2 = ring(Field::prime(2).unwrap(), &["x", "y"], MonomialOrder::Grevlex);
        let r = QuotRing::new(
            f2.clone(),
            vec![f2.parse("x^2").unwrap(), f2.parse("y^2").unwrap(), f2.parse("x*y").unwrap()],
        )
        .unwrap();
        assert_eq!(r.standard_monomials().unwrap().len(), 3);
        let inf = QuotRing::new(f2.clone(), vec![f2.parse("x*y").unwrap()]).unwrap();
        assert!(inf.standard_monomials().is_none());
    }
}

impl QuotRing {
    /// `(0 : a)`, the ideal of elements killing `a`.
    pub fn annihilator(&self, a: &Poly) -> Result<Ideal> {
        let a = self.normal_form(a)?;
        let syz = super::linalg::kernel(self, 1, &[vec![a]])?;
        self.ideal(syz.into_iter().map(|mut c| c.remove(0)).collect())
    }
}

#[cfg(test)]
mod annihilator_tests {
    use super::*;
    use crate::ring::{Field, MonomialOrder};

    #[test]
    fn annihilators() {
        let p = PolyRing::new(Field::prime(2).unwrap(), &["x"], MonomialOrder::Grevlex).unwrap();
        let r = QuotRing::new(p.clone(), vec![p.parse("x^2").unwrap()]).unwrap();
        let x = p.parse("x").unwrap();
        let ann = r.annihilator(&x).unwrap();
        assert_eq!(ann.generators(), std::slice::from_ref(&x));
        let ann1 = r.annihilator(&r.one()).unwrap();
        assert!(ann1.generators().is_empty());

        let q = PolyRing::new(Field::Rationals, &["x"], MonomialOrder::Grevlex).unwrap();
        let rq = QuotRing::polynomial(q.clone());
        assert!(rq.annihilator(&q.parse("x").unwrap()).unwrap().is_zero());
    }
}
