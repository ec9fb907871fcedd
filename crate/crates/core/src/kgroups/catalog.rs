use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use super::abgroup::{group_from_relations, AbGroupPresentation};
use super::unipoly::UniPoly;
use crate::error::{Error, Result};
use crate::module::{matrix_rank, FPModule};
use crate::ring::QuotRing;

/// A canonical indecomposable summand over a catalog ring.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Summand {
    /// The field itself, over a field.
    Field,
    /// The free module `R`.
    Free,
    /// `R/(g)` for a monic non-unit `g`, stored with its degree and its
    /// printed form.
    Cyclic { degree: usize, generator: String },
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Summand::Field => write!(f, "[k]"),
            Summand::Free => write!(f, "[R]"),
            Summand::Cyclic { generator, .. } => write!(f, "[R/({generator})]"),
        }
    }
}

/// Integer combination of canonical summands.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct KClass {
    pub terms: BTreeMap<Summand, i64>,
}

impl KClass {
    pub fn zero() -> Self {
        KClass::default()
    }

    pub fn of(s: Summand, n: i64) -> Self {
        let mut k = KClass::zero();
        k.add_term(s, n);
        k
    }

    pub fn add_term(&mut self, s: Summand, n: i64) {
        let e = self.terms.entry(s.clone()).or_insert(0);
        *e += n;
        if *e == 0 {
            self.terms.remove(&s);
        }
    }

    pub fn add(&self, o: &KClass) -> KClass {
        let mut out = self.clone();
        for (s, n) in &o.terms {
            out.add_term(s.clone(), *n);
        }
        out
    }

    pub fn neg(&self) -> KClass {
        KClass {
            terms: self.terms.iter().map(|(s, n)| (s.clone(), -n)).collect(),
        }
    }

    pub fn sub(&self, o: &KClass) -> KClass {
        self.add(&o.neg())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, s: &Summand) -> i64 {
        self.terms.get(s).copied().unwrap_or(0)
    }
}

impl fmt::Display for KClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (s, n)) in self.terms.iter().enumerate() {
            match (i, *n < 0) {
                (0, false) => write!(f, "{n}*{s}")?,
                (0, true) => write!(f, "-{}*{s}", -n)?,
                (_, false) => write!(f, " + {n}*{s}")?,
                (_, true) => write!(f, " - {}*{s}", -n)?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Field,
    /// `k[x]`.
    Pid,
    /// `k[x]/(x^n)`.
    Truncated(u32),
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Field => write!(f, "field"),
            Family::Pid => write!(f, "k[x]"),
            Family::Truncated(n) => write!(f, "k[x]/(x^{n})"),
        }
    }
}

/// A ring on which finitely presented modules have a diagonal canonical
/// form, so classes are computable.
#[derive(Debug, Clone)]
pub struct Catalog {
    pub family: Family,
    pub ring: Arc<QuotRing>,
}

impl Catalog {
    pub fn detect(ring: &Arc<QuotRing>) -> Result<Catalog> {
        let nvars = ring.base().nvars();
        let gb = ring.modulus().groebner_basis();
        let family = match (nvars, gb) {
            (0, []) => Family::Field,
            (1, []) => Family::Pid,
            (1, [g]) if g.terms().len() == 1 && g.total_degree() > 0 => {
                Family::Truncated(g.total_degree())
            }
            _ => return Err(Error::RingNotInCatalog),
        };
        Ok(Catalog {
            family,
            ring: ring.clone(),
        })
    }

    fn power_label(&self, j: usize) -> Summand {
        let x = &self.ring.base().vars()[0];
        let generator = if j == 1 { x.clone() } else { format!("{x}^{j}") };
        Summand::Cyclic { degree: j, generator }
    }

    /// Canonical summand decomposition of `M`.
    pub fn class_decompose(&self, m: &FPModule) -> Result<KClass> {
        m.ring().check_same(&self.ring)?;
        let p = self.ring.base();
        match self.family {
            Family::Field => {
                let dim = m.ngens() - matrix_rank(p, m.relations().rows());
                Ok(KClass::of(Summand::Field, dim as i64))
            }
            Family::Pid => {
                let mat = uni_matrix(m);
                let diag = diagonalize_pid(mat, m.ngens(), m.relations().ncols());
                let mut k = KClass::of(Summand::Free, (m.ngens() - diag.len()) as i64);
                for d in diag {
                    let d = d.monic();
                    if d.degree() == Some(0) {
                        continue;
                    }
                    let s = Summand::Cyclic {
                        degree: d.degree().expect("nonzero"),
                        generator: p.display(&d.to_poly(p)),
                    };
                    k.add_term(s, 1);
                }
                Ok(k)
            }
            Family::Truncated(n) => {
                let n = n as usize;
                let mat = uni_matrix(m);
                let vals = diagonalize_chain(mat, m.ngens(), m.relations().ncols(), n);
                let mut k = KClass::of(Summand::Free, (m.ngens() - vals.len()) as i64);
                for v in vals.into_iter().filter(|&v| v > 0) {
                    k.add_term(self.power_label(v), 1);
                }
                Ok(k)
            }
        }
    }

    /// Generators of the Grothendieck group of finitely generated modules,
    /// in the order used by [`Catalog::project`].
    pub fn group_generators(&self) -> Vec<Summand> {
        match self.family {
            Family::Field => vec![Summand::Field],
            Family::Pid => vec![Summand::Free],
            Family::Truncated(n) => {
                let mut g: Vec<Summand> = (1..n as usize).map(|j| self.power_label(j)).collect();
                g.push(Summand::Free);
                g
            }
        }
    }

    /// The Grothendieck group: `[R/(x^j)] = j [R/(x)]` over `k[x]/(x^n)`,
    /// torsion classes vanish over `k[x]`.
    pub fn grothendieck_group(&self) -> Result<AbGroupPresentation> {
        let gens = self.group_generators();
        let labels = gens.iter().map(|s| s.to_string()).collect();
        let mut rels = Vec::new();
        if let Family::Truncated(n) = self.family {
            let n = n as usize;
            for j in 2..=n {
                let mut row = vec![BigInt::from(0); n];
                row[0] = BigInt::from(-(j as i64));
                row[j - 1] = BigInt::from(1);
                rels.push(row);
            }
        }
        group_from_relations(labels, rels)
    }

    /// Image of a class in the Grothendieck group coordinates.
    pub fn project(&self, k: &KClass) -> Vec<BigInt> {
        let gens = self.group_generators();
        let mut out = vec![BigInt::from(0); gens.len()];
        for (s, n) in &k.terms {
            if let Some(i) = gens.iter().position(|g| g == s) {
                out[i] += BigInt::from(*n);
            }
        }
        out
    }

    /// Equality of two classes in the Grothendieck group.
    pub fn same_in_group(&self, a: &KClass, b: &KClass) -> Result<bool> {
        Ok(self.grothendieck_group()?.equal(&self.project(a), &self.project(b)))
    }
}

fn uni_matrix(m: &FPModule) -> Vec<Vec<UniPoly>> {
    let p = m.ring().base();
    m.relations()
        .rows()
        .iter()
        .map(|r| r.iter().map(|f| UniPoly::from_poly(p, f)).collect())
        .collect()
}

fn find_pivot<F: Fn(&UniPoly) -> usize>(a: &[Vec<UniPoly>], t: usize, key: F) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, e) in row.iter().enumerate().skip(t) {
            if !e.is_zero() && best.is_none_or(|(_, _, k)| key(e) < k) {
                best = Some((i, j, key(e)));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

fn move_pivot(a: &mut [Vec<UniPoly>], t: usize, i: usize, j: usize) {
    a.swap(t, i);
    for row in a.iter_mut() {
        row.swap(t, j);
    }
}

/// Diagonal of the Smith form over `k[x]` (nonzero entries only).
fn diagonalize_pid(mut a: Vec<Vec<UniPoly>>, nrows: usize, ncols: usize) -> Vec<UniPoly> {
    let mut t = 0;
    while t < nrows.min(ncols) {
        let Some((pi, pj)) = find_pivot(&a, t, |e| e.degree().unwrap_or(0)) else {
            break;
        };
        move_pivot(&mut a, t, pi, pj);
        let piv = a[t][t].clone();
        let mut clean = true;
        for i in t + 1..nrows {
            let (q, r) = a[i][t].divrem(&piv);
            if !q.is_zero() {
                let rt = a[t].clone();
                for (x, y) in a[i].iter_mut().zip(&rt) {
                    *x = x.sub(&q.mul(y));
                }
            }
            clean &= r.is_zero();
        }
        for j in t + 1..ncols {
            let (q, r) = a[t][j].divrem(&piv);
            if !q.is_zero() {
                for row in a.iter_mut() {
                    let y = row[t].clone();
                    row[j] = row[j].sub(&q.mul(&y));
                }
            }
            clean &= r.is_zero();
        }
        if !clean {
            continue;
        }
        let bad = (t + 1..nrows).find(|&i| (t + 1..ncols).any(|j| !a[i][j].divrem(&piv).1.is_zero()));
        if let Some(i) = bad {
            let ri = a[i].clone();
            for (x, y) in a[t].iter_mut().zip(&ri) {
                *x = x.add(y);
            }
            continue;
        }
        t += 1;
    }
    (0..t).map(|i| a[i][i].clone()).collect()
}

/// Valuations of the diagonal form over `k[x]/(x^n)`.
fn diagonalize_chain(mut a: Vec<Vec<UniPoly>>, nrows: usize, ncols: usize, n: usize) -> Vec<usize> {
    for row in a.iter_mut() {
        for e in row.iter_mut() {
            *e = e.truncate(n);
        }
    }
    let mut vals = Vec::new();
    let mut t = 0;
    while t < nrows.min(ncols) {
        let Some((pi, pj)) = find_pivot(&a, t, |e| e.valuation().unwrap_or(n)) else {
            break;
        };
        move_pivot(&mut a, t, pi, pj);
        let v = a[t][t].valuation().expect("nonzero");
        let unit_inv = a[t][t].shift_down(v).inverse_mod_power(n);
        for i in t + 1..nrows {
            if a[i][t].is_zero() {
                continue;
            }
            let q = a[i][t].shift_down(v).mul(&unit_inv).truncate(n);
            let rt = a[t].clone();
            for (x, y) in a[i].iter_mut().zip(&rt) {
                *x = x.sub(&q.mul(y)).truncate(n);
            }
        }
        for j in t + 1..ncols {
            if a[t][j].is_zero() {
                continue;
            }
            let q = a[t][j].shift_down(v).mul(&unit_inv).truncate(n);
            for row in a.iter_mut() {
                let y = row[t].clone();
                row[j] = row[j].sub(&q.mul(&y)).truncate(n);
            }
        }
        vals.push(v);
        t += 1;
    }
    vals
}
