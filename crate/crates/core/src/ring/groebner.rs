//! Buchberger's algorithm for submodules of free modules `P^n` over a
//! polynomial ring `P`. Ideals are the rank-one case.

use std::cmp::Ordering;
use std::collections::HashSet;

use super::field::Coeff;
use super::monomial::Monomial;
use super::poly::{Poly, PolyRing};
use crate::error::{Error, Result};

/// Term order on `P^n`.
///
/// Terms `m * e_i` are compared by the optional weight vector on `m` first,
/// then either position before monomial (POT) or monomial before position
/// (TOP). Lower position indices rank higher, so with POT the leading
/// positions of a vector dominate and act as an elimination block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleOrder {
    pub weight: Option<Vec<u32>>,
    pub position_first: bool,
}

impl ModuleOrder {
    pub fn pot() -> Self {
        ModuleOrder {
            weight: None,
            position_first: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModTerm {
    pub pos: usize,
    pub mono: Monomial,
    pub coeff: Coeff,
}

/// Sparse vector in `P^n`, terms strictly descending in the module order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ModVec {
    pub terms: Vec<ModTerm>,
}

impl ModVec {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> &ModTerm {
        &self.terms[0]
    }

    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|t| t.mono.degree()).max().unwrap_or(0)
    }

    fn single_position(&self) -> bool {
        self.terms.iter().all(|t| t.pos == self.terms[0].pos)
    }
}

/// Groebner engine bound to a ring and a module order.
pub struct Engine<'r> {
    ring: &'r PolyRing,
    order: ModuleOrder,
}

impl<'r> Engine<'r> {
    pub fn new(ring: &'r PolyRing, order: ModuleOrder) -> Self {
        Engine { ring, order }
    }

    pub fn ring(&self) -> &PolyRing {
        self.ring
    }

    fn weight(&self, m: &Monomial) -> u64 {
        match &self.order.weight {
            Some(w) => m.0.iter().zip(w).map(|(e, w)| *e as u64 * *w as u64).sum(),
            None => 0,
        }
    }

    pub fn cmp(&self, pa: usize, ma: &Monomial, pb: usize, mb: &Monomial) -> Ordering {
        let w = self.weight(ma).cmp(&self.weight(mb));
        if w != Ordering::Equal {
            return w;
        }
        let pos = pb.cmp(&pa);
        if self.order.position_first {
            pos.then_with(|| self.ring.cmp_mono(ma, mb))
        } else {
            self.ring.cmp_mono(ma, mb).then(pos)
        }
    }

    fn cmp_terms(&self, a: &ModTerm, b: &ModTerm) -> Ordering {
        self.cmp(a.pos, &a.mono, b.pos, &b.mono)
    }

    /// Packs a dense vector; entry `i` lands at position `offset + i`.
    pub fn from_dense(&self, v: &[Poly], offset: usize) -> ModVec {
        let mut terms: Vec<ModTerm> = v
            .iter()
            .enumerate()
            .flat_map(|(i, f)| {
                f.terms().iter().map(move |(m, c)| ModTerm {
                    pos: offset + i,
                    mono: m.clone(),
                    coeff: c.clone(),
                })
            })
            .collect();
        terms.sort_by(|a, b| self.cmp_terms(b, a));
        ModVec { terms }
    }

    /// Unpacks positions `offset..offset + n`; other positions are dropped.
    pub fn to_dense(&self, v: &ModVec, offset: usize, n: usize) -> Vec<Poly> {
        let mut buckets: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); n];
        for t in &v.terms {
            if t.pos >= offset && t.pos < offset + n {
                buckets[t.pos - offset].push((t.mono.clone(), t.coeff.clone()));
            }
        }
        buckets
            .into_iter()
            .map(|b| self.ring.from_terms(b))
            .collect()
    }

    /// `a - c * m * b`.
    fn sub_scaled(&self, a: &[ModTerm], b: &ModVec, m: &Monomial, c: &Coeff) -> Vec<ModTerm> {
        let mut out = Vec::with_capacity(a.len() + b.terms.len());
        let scaled = b.terms.iter().map(|t| ModTerm {
            pos: t.pos,
            mono: t.mono.mul(m),
            coeff: t.coeff.mul(c).neg(),
        });
        let mut i = 0;
        let mut scaled = scaled.peekable();
        while i < a.len() {
            let Some(s) = scaled.peek() else { break };
            match self.cmp_terms(&a[i], s) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(scaled.next().expect("peeked"));
                }
                Ordering::Equal => {
                    let s = scaled.next().expect("peeked");
                    let sum = a[i].coeff.add(&s.coeff);
                    if !sum.is_zero() {
                        out.push(ModTerm {
                            pos: s.pos,
                            mono: s.mono,
                            coeff: sum,
                        });
                    }
                    i += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(scaled);
        out
    }

    pub fn add(&self, a: &ModVec, b: &ModVec) -> ModVec {
        let one = Monomial::one(self.ring.nvars());
        ModVec {
            terms: self.sub_scaled(&a.terms, b, &one, &self.ring.field().one().neg()),
        }
    }

    pub fn scale(&self, a: &ModVec, m: &Monomial, c: &Coeff) -> ModVec {
        if c.is_zero() {
            return ModVec::default();
        }
        ModVec {
            terms: a
                .terms
                .iter()
                .map(|t| ModTerm {
                    pos: t.pos,
                    mono: t.mono.mul(m),
                    coeff: t.coeff.mul(c),
                })
                .collect(),
        }
    }

    /// Multiplies by a polynomial.
    pub fn mul_poly(&self, a: &ModVec, f: &Poly) -> ModVec {
        let mut acc = ModVec::default();
        for (m, c) in f.terms() {
            acc = self.add(&acc, &self.scale(a, m, c));
        }
        acc
    }

    pub fn monic(&self, a: ModVec) -> ModVec {
        if a.is_zero() || a.lead().coeff.is_one() {
            return a;
        }
        let inv = a.lead().coeff.inv();
        let one = Monomial::one(self.ring.nvars());
        self.scale(&a, &one, &inv)
    }

    fn find_divisor<'b>(&self, t: &ModTerm, basis: &'b [ModVec]) -> Option<&'b ModVec> {
        basis.iter().find(|g| {
            let l = g.lead();
            l.pos == t.pos && l.mono.divides(&t.mono)
        })
    }

    /// Full reduction of `v` by `basis`: no term of the result is divisible
    /// by a leading term of the basis.
    pub fn reduce(&self, v: &ModVec, basis: &[ModVec]) -> ModVec {
        let mut rem: Vec<ModTerm> = Vec::new();
        let mut p: Vec<ModTerm> = v.terms.clone();
        let mut start = 0;
        while start < p.len() {
            let t = &p[start];
            match self.find_divisor(t, basis) {
                Some(g) => {
                    let l = g.lead();
                    let m = l.mono.quotient_into(&t.mono);
                    let c = t.coeff.div(&l.coeff);
                    p = self.sub_scaled(&p[start..], g, &m, &c);
                    start = 0;
                }
                None => {
                    rem.push(t.clone());
                    start += 1;
                }
            }
        }
        ModVec { terms: rem }
    }

    /// Reduces only while the leading term is divisible.
    pub fn top_reduce(&self, v: &ModVec, basis: &[ModVec]) -> ModVec {
        let mut p = v.clone();
        while !p.is_zero() {
            let t = p.lead().clone();
            match self.find_divisor(&t, basis) {
                Some(g) => {
                    let l = g.lead();
                    let m = l.mono.quotient_into(&t.mono);
                    let c = t.coeff.div(&l.coeff);
                    p = ModVec {
                        terms: self.sub_scaled(&p.terms, g, &m, &c),
                    };
                }
                None => break,
            }
        }
        p
    }

    fn spoly(&self, f: &ModVec, g: &ModVec, lcm: &Monomial) -> ModVec {
        let lf = f.lead();
        let lg = g.lead();
        let mf = lf.mono.quotient_into(lcm);
        let mg = lg.mono.quotient_into(lcm);
        let a = self.scale(f, &mf, &lf.coeff.inv());
        let cg = lg.coeff.inv();
        ModVec {
            terms: self.sub_scaled(&a.terms, g, &mg, &cg),
        }
    }

    /// Reduced Groebner basis of the submodule generated by `gens`: monic,
    /// auto-reduced, sorted by descending leading term.
    pub fn groebner(&self, gens: &[ModVec]) -> Result<Vec<ModVec>> {
        let guard = self.ring.degree_guard();
        let mut basis: Vec<ModVec> = Vec::new();
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        let mut pending: HashSet<(usize, usize)> = HashSet::new();

        let push = |basis: &mut Vec<ModVec>,
                        pairs: &mut Vec<(usize, usize)>,
                        pending: &mut HashSet<(usize, usize)>,
                        h: ModVec| {
            let k = basis.len();
            for (i, g) in basis.iter().enumerate() {
                if g.lead().pos == h.lead().pos {
                    pairs.push((i, k));
                    pending.insert((i, k));
                }
            }
            basis.push(h);
        };

        for g in gens {
            let h = self.reduce(g, &basis);
            if !h.is_zero() {
                let h = self.monic(h);
                push(&mut basis, &mut pairs, &mut pending, h);
            }
        }

        while !pairs.is_empty() {
            let (idx, _) = pairs
                .iter()
                .enumerate()
                .min_by(|(_, a), (_, b)| {
                    let la = basis[a.0].lead().mono.lcm(&basis[a.1].lead().mono);
                    let lb = basis[b.0].lead().mono.lcm(&basis[b.1].lead().mono);
                    la.degree()
                        .cmp(&lb.degree())
                        .then_with(|| la.0.cmp(&lb.0))
                        .then_with(|| a.cmp(b))
                })
                .expect("nonempty");
            let (i, j) = pairs.swap_remove(idx);
            pending.remove(&(i, j));

            let (fi, fj) = (&basis[i], &basis[j]);
            let lcm = fi.lead().mono.lcm(&fj.lead().mono);
            if fi.single_position()
                && fj.single_position()
                && fi.lead().mono.coprime(&fj.lead().mono)
            {
                continue;
            }
            let pos = fi.lead().pos;
            let chain = (0..basis.len()).any(|k| {
                k != i
                    && k != j
                    && basis[k].lead().pos == pos
                    && basis[k].lead().mono.divides(&lcm)
                    && !pending.contains(&(i.min(k), i.max(k)))
                    && !pending.contains(&(j.min(k), j.max(k)))
            });
            if chain {
                continue;
            }
            let s = self.spoly(fi, fj, &lcm);
            let h = self.reduce(&s, &basis);
            if !h.is_zero() {
                if h.degree() > guard {
                    return Err(Error::DegreeGuard { limit: guard });
                }
                let h = self.monic(h);
                push(&mut basis, &mut pairs, &mut pending, h);
            }
        }

        // minimalize
        let mut minimal: Vec<ModVec> = Vec::new();
        for (i, g) in basis.iter().enumerate() {
            let l = g.lead();
            let redundant = basis.iter().enumerate().any(|(k, o)| {
                let lo = o.lead();
                k != i
                    && lo.pos == l.pos
                    && lo.mono.divides(&l.mono)
                    && (lo.mono != l.mono || k < i)
            });
            if !redundant {
                minimal.push(g.clone());
            }
        }
        // interreduce tails
        let mut reduced = Vec::with_capacity(minimal.len());
        for i in 0..minimal.len() {
            let others: Vec<ModVec> = minimal
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i)
                .map(|(_, g)| g.clone())
                .collect();
            let head = ModVec {
                terms: vec![minimal[i].lead().clone()],
            };
            let tail = ModVec {
                terms: minimal[i].terms[1..].to_vec(),
            };
            let tail = self.reduce(&tail, &others);
            reduced.push(self.monic(self.add(&head, &tail)));
        }
        reduced.sort_by(|a, b| self.cmp_terms(b.lead(), a.lead()));
        Ok(reduced)
    }
}
