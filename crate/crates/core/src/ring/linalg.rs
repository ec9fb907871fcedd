//! Linear algebra over a quotient ring `R = P/I` on column vectors: spans,
//! membership, lifting and syzygies. Everything is computed over `P` with
//! the modulus added as `g * e_i` for each Groebner basis element `g`.

use super::groebner::{Engine, ModVec, ModuleOrder};
use super::poly::Poly;
use super::quotient::QuotRing;
use crate::error::Result;

/// A column vector over a quotient ring, entries in normal form.
pub type Column = Vec<Poly>;

fn modulus_vectors(engine: &Engine<'_>, ring: &QuotRing, n: usize) -> Vec<ModVec> {
    let mut out = Vec::new();
    for i in 0..n {
        for g in ring.modulus().groebner_basis() {
            let mut v = vec![Poly::zero(); n];
            v[i] = g.clone();
            out.push(engine.from_dense(&v, 0));
        }
    }
    out
}

pub fn nf_column(ring: &QuotRing, v: &[Poly]) -> Column {
    v.iter().map(|f| ring.nf(f)).collect()
}

pub fn is_zero_column(v: &[Poly]) -> bool {
    v.iter().all(Poly::is_zero)
}

/// Groebner basis of `span(cols) + I * P^n`.
pub struct Span<'a> {
    ring: &'a QuotRing,
    n: usize,
    gb: Vec<ModVec>,
}

impl<'a> Span<'a> {
    pub fn new(ring: &'a QuotRing, n: usize, cols: &[Column]) -> Result<Self> {
        let engine = Engine::new(ring.base(), ModuleOrder::pot());
        let mut gens: Vec<ModVec> = cols.iter().map(|c| engine.from_dense(c, 0)).collect();
        gens.extend(modulus_vectors(&engine, ring, n));
        let gb = engine.groebner(&gens)?;
        Ok(Span { ring, n, gb })
    }

    pub fn contains(&self, v: &[Poly]) -> bool {
        let engine = Engine::new(self.ring.base(), ModuleOrder::pot());
        engine.reduce(&engine.from_dense(v, 0), &self.gb).is_zero()
    }

    /// Normal form of `v` modulo the span.
    pub fn reduce(&self, v: &[Poly]) -> Column {
        let engine = Engine::new(self.ring.base(), ModuleOrder::pot());
        let r = engine.reduce(&engine.from_dense(v, 0), &self.gb);
        engine.to_dense(&r, 0, self.n)
    }

    /// The reduced Groebner basis elements as dense columns over `P`.
    pub fn basis(&self) -> Vec<Column> {
        let engine = Engine::new(self.ring.base(), ModuleOrder::pot());
        self.gb.iter().map(|g| engine.to_dense(g, 0, self.n)).collect()
    }

    /// Leading terms `(position, monomial)` of the basis.
    pub fn leading_terms(&self) -> Vec<(usize, super::Monomial)> {
        self.gb
            .iter()
            .map(|g| (g.lead().pos, g.lead().mono.clone()))
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.n
    }
}

/// Solves `sum_j c_j * cols[j] = v` over the ring.
pub struct Lifter<'a> {
    ring: &'a QuotRing,
    n: usize,
    m: usize,
    gb: Vec<ModVec>,
}

impl<'a> Lifter<'a> {
    pub fn new(ring: &'a QuotRing, n: usize, cols: &[Column]) -> Result<Self> {
        let engine = Engine::new(ring.base(), ModuleOrder::pot());
        let m = cols.len();
        let mut gens = Vec::with_capacity(m);
        for (j, c) in cols.iter().enumerate() {
            let mut v = c.clone();
            v.resize(n, Poly::zero());
            let mut tag = vec![Poly::zero(); m];
            tag[j] = ring.one();
            v.extend(tag);
            gens.push(engine.from_dense(&v, 0));
        }
        gens.extend(modulus_vectors(&engine, ring, n));
        let gb = engine.groebner(&gens)?;
        Ok(Lifter { ring, n, m, gb })
    }

    pub fn lift(&self, v: &[Poly]) -> Option<Column> {
        let engine = Engine::new(self.ring.base(), ModuleOrder::pot());
        let r = engine.reduce(&engine.from_dense(v, 0), &self.gb);
        if r.terms.iter().any(|t| t.pos < self.n) {
            return None;
        }
        let coeffs = engine.to_dense(&r, self.n, self.m);
        Some(coeffs.iter().map(|c| self.ring.nf(&self.ring.neg(c))).collect())
    }

    /// Generators of the syzygy module `{c : sum_j c_j * cols[j] = 0}`,
    /// straight from the elimination basis (not canonicalized).
    pub fn syzygies(&self) -> Vec<Column> {
        let engine = Engine::new(self.ring.base(), ModuleOrder::pot());
        self.gb
            .iter()
            .filter(|g| g.lead().pos >= self.n)
            .map(|g| nf_column(self.ring, &engine.to_dense(g, self.n, self.m)))
            .filter(|c| !is_zero_column(c))
            .collect()
    }
}

/// Raw generators of the syzygies of `cols` (vectors of length `n`).
pub fn syzygies(ring: &QuotRing, n: usize, cols: &[Column]) -> Result<Vec<Column>> {
    Ok(Lifter::new(ring, n, cols)?.syzygies())
}

/// Deterministic irredundant generating set of the submodule of `R^n`
/// spanned by `vecs`: the reduced Groebner basis of the span (modulus
/// included), with elements lying in `I * P^n` dropped, then pruned from
/// the end while an element lies in the span of the others.
pub fn canonical_generators(ring: &QuotRing, n: usize, vecs: &[Column]) -> Result<Vec<Column>> {
    let span = Span::new(ring, n, vecs)?;
    let mut cands: Vec<Column> = span
        .basis()
        .into_iter()
        .map(|c| nf_column(ring, &c))
        .filter(|c| !is_zero_column(c))
        .collect();
    let mut i = cands.len();
    while i > 0 {
        i -= 1;
        if cands.len() == 1 {
            break;
        }
        let others: Vec<Column> = cands
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, c)| c.clone())
            .collect();
        if Span::new(ring, n, &others)?.contains(&cands[i]) {
            cands.remove(i);
        }
    }
    Ok(cands)
}

/// Canonical generators of the kernel of the map `R^m -> R^n` whose
/// columns are `cols`.
pub fn kernel(ring: &QuotRing, n: usize, cols: &[Column]) -> Result<Vec<Column>> {
    let m = cols.len();
    let raw = syzygies(ring, n, cols)?;
    canonical_generators(ring, m, &raw)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Field, MonomialOrder, PolyRing};

    fn f2_dual_numbers() -> QuotRing {
        let p = PolyRing::new(Field::prime(2).unwrap(), &["x"], MonomialOrder::Grevlex).unwrap();
        let x2 = p.parse("x^2").unwrap();
        QuotRing::new(p, vec![x2]).unwrap()
    }

    #[test]
    fn kernel_of_multiplication_by_nilpotent() {
        let r = f2_dual_numbers();
        let x = r.parse("x").unwrap();
        let k = kernel(&r, 1, &[vec![x.clone()]]).unwrap();
        assert_eq!(k, vec![vec![x]]);
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        let r = f2_dual_numbers();
        let one = r.one();
        let z = Poly::zero();
        let k = kernel(&r, 2, &[vec![one.clone(), z.clone()], vec![z, one]]).unwrap();
        assert!(k.is_empty());
    }

    #[test]
    fn kernel_of_difference_map() {
        let p = PolyRing::new(Field::Rationals, &["x"], MonomialOrder::Grevlex).unwrap();
        let r = QuotRing::polynomial(p.clone());
        // (f, g) -> f - x g
        let cols = vec![vec![r.one()], vec![p.parse("-x").unwrap()]];
        let k = kernel(&r, 1, &cols).unwrap();
        assert_eq!(k, vec![vec![p.parse("x").unwrap(), r.one()]]);
    }

    #[test]
    fn lift_solves_linear_systems() {
        let p = PolyRing::new(Field::Rationals, &["x", "y"], MonomialOrder::Grevlex).unwrap();
        let r = QuotRing::polynomial(p.clone());
        let cols = vec![vec![p.parse("x").unwrap()], vec![p.parse("y").unwrap()]];
        let l = Lifter::new(&r, 1, &cols).unwrap();
        let target = vec![p.parse("x^2 + x*y + y^3").unwrap()];
        let c = l.lift(&target).unwrap();
        let back = r.add(&r.mul(&c[0], &cols[0][0]), &r.mul(&c[1], &cols[1][0]));
        assert_eq!(back, target[0]);
        assert!(l.lift(&[r.one()]).is_none());
    }
}
