use std::cmp::Ordering;
use std::collections::HashSet;

use super::field::{Coeff, Field};
use super::monomial::{Monomial, MonomialOrder};
use crate::error::{Error, Result};

/// Default cap on the total degree of elements produced by Groebner
/// computations.
pub const DEFAULT_DEGREE_GUARD: u32 = 32;

/// `field[vars]` with a fixed monomial order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyRing {
    field: Field,
    vars: Vec<String>,
    order: MonomialOrder,
    degree_guard: u32,
}

/// A polynomial: terms strictly descending in the ring's order, no zero
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Monomial, Coeff)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn leading(&self) -> Option<&(Monomial, Coeff)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    /// Degree in variable `var`.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.0[var]).max().unwrap_or(0)
    }

    /// The constant coefficient if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Coeff> {
        match self.terms.as_slice() {
            [] => None,
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub(crate) fn from_sorted(terms: Vec<(Monomial, Coeff)>) -> Self {
        Poly { terms }
    }
}

impl PolyRing {
    pub fn new(field: Field, vars: &[&str], order: MonomialOrder) -> Result<Self> {
        let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        Self::with_names(field, vars, order)
    }

    pub fn with_names(field: Field, vars: Vec<String>, order: MonomialOrder) -> Result<Self> {
        let mut seen = HashSet::new();
        for v in &vars {
            let valid = v
                .chars()
                .next()
                .map(|c| c.is_ascii_alphabetic() || c == '_')
                .unwrap_or(false)
                && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::BadVariables(format!("`{v}` is not an identifier")));
            }
            if !seen.insert(v.as_str()) {
                return Err(Error::BadVariables(format!("`{v}` declared twice")));
            }
        }
        Ok(PolyRing {
            field,
            vars,
            order,
            degree_guard: DEFAULT_DEGREE_GUARD,
        })
    }

    pub fn with_degree_guard(mut self, guard: u32) -> Self {
        self.degree_guard = guard;
        self
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn degree_guard(&self) -> u32 {
        self.degree_guard
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn cmp_mono(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    pub fn zero(&self) -> Poly {
        Poly::zero()
    }

    pub fn one(&self) -> Poly {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: Coeff) -> Poly {
        self.term(Monomial::one(self.nvars()), c)
    }

    pub fn from_int(&self, n: i64) -> Poly {
        self.constant(self.field.from_i64(n))
    }

    pub fn term(&self, m: Monomial, c: Coeff) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    pub fn var(&self, i: usize) -> Poly {
        self.term(Monomial::var(self.nvars(), i), self.field.one())
    }

    pub fn var_named(&self, name: &str) -> Result<Poly> {
        self.var_index(name)
            .map(|i| self.var(i))
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// Sorts and combines arbitrary terms into a canonical polynomial.
    pub fn from_terms(&self, mut terms: Vec<(Monomial, Coeff)>) -> Poly {
        terms.sort_by(|a, b| self.cmp_mono(&b.0, &a.0));
        let mut out: Vec<(Monomial, Coeff)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = lc.add(&c),
                _ => out.push((m, c)),
            }
            if out.last().map(|(_, c)| c.is_zero()).unwrap_or(false) {
                out.pop();
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly { terms: out }
    }

    /// Checks the structural invariants against this ring.
    pub fn check(&self, f: &Poly) -> Result<()> {
        for w in f.terms.windows(2) {
            if self.cmp_mono(&w[0].0, &w[1].0) != Ordering::Greater {
                return Err(Error::VariableMismatch("terms out of order".into()));
            }
        }
        for (m, c) in &f.terms {
            if m.0.len() != self.nvars() {
                return Err(Error::VariableMismatch(format!(
                    "exponent vector of length {} in a ring with {} variables",
                    m.0.len(),
                    self.nvars()
                )));
            }
            let same_field = matches!(
                (c, self.field),
                (Coeff::Rat(_), Field::Rationals)
            ) || matches!((c, self.field), (Coeff::Mod(_, p), Field::Prime(q)) if *p == q);
            if !same_field || c.is_zero() {
                return Err(Error::VariableMismatch("coefficient from another field".into()));
            }
        }
        Ok(())
    }

    pub fn add(&self, f: &Poly, g: &Poly) -> Poly {
        let mut out = Vec::with_capacity(f.terms.len() + g.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < f.terms.len() && j < g.terms.len() {
            match self.cmp_mono(&f.terms[i].0, &g.terms[j].0) {
                Ordering::Greater => {
                    out.push(f.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(g.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = f.terms[i].1.add(&g.terms[j].1);
                    if !c.is_zero() {
                        out.push((f.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&f.terms[i..]);
        out.extend_from_slice(&g.terms[j..]);
        Poly { terms: out }
    }

    pub fn neg(&self, f: &Poly) -> Poly {
        Poly {
            terms: f.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, f: &Poly, g: &Poly) -> Poly {
        self.add(f, &self.neg(g))
    }

    pub fn scale(&self, f: &Poly, c: &Coeff) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: f.terms.iter().map(|(m, d)| (m.clone(), d.mul(c))).collect(),
        }
    }

    /// `c * m * f`; the order is preserved by multiplication with a monomial.
    pub fn mul_term(&self, f: &Poly, m: &Monomial, c: &Coeff) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: f
                .terms
                .iter()
                .map(|(n, d)| (n.mul(m), d.mul(c)))
                .collect(),
        }
    }

    pub fn mul(&self, f: &Poly, g: &Poly) -> Poly {
        if f.is_zero() || g.is_zero() {
            return Poly::zero();
        }
        let (small, large) = if f.terms.len() <= g.terms.len() { (f, g) } else { (g, f) };
        let mut acc = Poly::zero();
        for (m, c) in &small.terms {
            acc = self.add(&acc, &self.mul_term(large, m, c));
        }
        acc
    }

    pub fn pow(&self, f: &Poly, e: u32) -> Poly {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, f);
        }
        acc
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self, f: &Poly) -> Poly {
        match f.leading() {
            Some((_, c)) if !c.is_one() => self.scale(f, &c.inv()),
            _ => f.clone(),
        }
    }

    /// Re-expresses `f` from `from` in this ring, mapping variables by name.
    /// Variables of `from` missing here must not occur in `f`.
    pub fn convert_from(&self, from: &PolyRing, f: &Poly) -> Result<Poly> {
        if from.field != self.field {
            return Err(Error::RingMismatch);
        }
        let map: Vec<Option<usize>> = from.vars.iter().map(|v| self.var_index(v)).collect();
        let mut terms = Vec::with_capacity(f.terms.len());
        for (m, c) in &f.terms {
            let mut e = vec![0; self.nvars()];
            for (i, &k) in m.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => e[j] = k,
                    None => return Err(Error::VariableMismatch(from.vars[i].clone())),
                }
            }
            terms.push((Monomial(e), c.clone()));
        }
        Ok(self.from_terms(terms))
    }

    /// Substitutes `value` (a constant) for variable `var`, keeping the
    /// variable in the ring.
    pub fn substitute_constant(&self, f: &Poly, var: usize, value: &Coeff) -> Poly {
        let terms = f
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = m.0.clone();
                let k = e[var];
                e[var] = 0;
                let mut coeff = c.clone();
                for _ in 0..k {
                    coeff = coeff.mul(value);
                }
                (Monomial(e), coeff)
            })
            .filter(|(_, c)| !c.is_zero())
            .collect();
        self.from_terms(terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qxy() -> PolyRing {
        PolyRing::new(Field::Rationals, &["x", "y"], MonomialOrder::Grevlex).unwrap()
    }

    #[test]
    fn rejects_duplicate_or_empty_names() {
        assert!(PolyRing::new(Field::Rationals, &["x", "x"], MonomialOrder::Lex).is_err());
        assert!(PolyRing::new(Field::Rationals, &[""], MonomialOrder::Lex).is_err());
        assert!(PolyRing::new(Field::Rationals, &["1x"], MonomialOrder::Lex).is_err());
    }

    #[test]
    fn product_is_sorted_and_combined() {
        let r = qxy();
        let x = r.var(0);
        let y = r.var(1);
        let s = r.add(&x, &y);
        let d = r.sub(&x, &y);
        let p = r.mul(&s, &d);
        let expect = r.sub(&r.mul(&x, &x), &r.mul(&y, &y));
        assert_eq!(p, expect);
        r.check(&p).unwrap();
    }

    #[test]
    fn cancellation_gives_zero() {
        let r = qxy();
        let x = r.var(0);
        assert!(r.sub(&x, &x).is_zero());
    }
}
