//! Oracles that avoid the Groebner and syzygy machinery: enumeration over
//! finite rings, a hand-rolled truncated polynomial ring and determinantal
//! divisors for integer matrices.

#![allow(dead_code)]

use std::collections::HashSet;
use std::sync::Arc;

use gproj::module::{FPModule, Matrix};
use gproj::ring::{Coeff, Field, Monomial, MonomialOrder, Poly, PolyRing, QuotRing};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn ring(field: Field, vars: &[&str], modulus: &[&str]) -> Arc<QuotRing> {
    let p = PolyRing::new(field, vars, MonomialOrder::Grevlex).unwrap();
    let gens = modulus.iter().map(|g| p.parse(g).unwrap()).collect();
    Arc::new(QuotRing::new(p, gens).unwrap())
}

pub fn gf(p: u64) -> Field {
    Field::prime(p).unwrap()
}

/// `GF(2)[x]/(x^2)`.
pub fn dual_numbers() -> Arc<QuotRing> {
    ring(gf(2), &["x"], &["x^2"])
}

pub fn qx() -> Arc<QuotRing> {
    ring(Field::Rationals, &["x"], &[])
}

// ---------------------------------------------------------------------------
// Enumeration over a finite quotient ring

/// Every element of a finite ring, as normal forms.
pub fn elements(r: &QuotRing) -> Vec<Poly> {
    let basis = r.standard_monomials().expect("finite-dimensional ring");
    let scalars = r.base().field().elements().expect("finite field");
    let p = r.base();
    let mut out = vec![Poly::zero()];
    for m in &basis {
        let mut next = Vec::with_capacity(out.len() * scalars.len());
        for f in &out {
            for c in &scalars {
                next.push(p.add(f, &p.term(m.clone(), c.clone())));
            }
        }
        out = next;
    }
    out
}

/// All vectors of `R^n`.
pub fn vectors(r: &QuotRing, n: usize) -> Vec<Vec<Poly>> {
    let els = elements(r);
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(out.len() * els.len());
        for v in &out {
            for e in &els {
                let mut w = v.clone();
                w.push(e.clone());
                next.push(w);
            }
        }
        out = next;
    }
    out
}

fn add_vec(r: &QuotRing, a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    a.iter().zip(b).map(|(x, y)| r.add(x, y)).collect()
}

fn scale_vec(r: &QuotRing, c: &Poly, a: &[Poly]) -> Vec<Poly> {
    a.iter().map(|x| r.mul(c, x)).collect()
}

/// The `R`-span of columns in `R^n`, by closure under `s + r c`.
pub fn span_set(r: &QuotRing, n: usize, cols: &[Vec<Poly>]) -> HashSet<Vec<Poly>> {
    let els = elements(r);
    let mut set: HashSet<Vec<Poly>> = HashSet::new();
    set.insert(vec![Poly::zero(); n]);
    for c in cols {
        let multiples: Vec<Vec<Poly>> = els.iter().map(|e| scale_vec(r, e, c)).collect();
        let mut next = HashSet::new();
        for s in &set {
            for m in &multiples {
                next.insert(add_vec(r, s, m));
            }
        }
        set = next;
    }
    set
}

/// `matrix * v` using only ring multiplication.
pub fn apply(r: &QuotRing, m: &Matrix, v: &[Poly]) -> Vec<Poly> {
    let mut out = vec![Poly::zero(); m.nrows()];
    for (j, x) in v.iter().enumerate() {
        for (i, o) in out.iter_mut().enumerate() {
            *o = r.add(o, &r.mul(m.entry(i, j), x));
        }
    }
    out
}

/// Vectors `v` in `R^{ncols}` with `m v` in `modulo`.
pub fn kernel_set(r: &QuotRing, m: &Matrix, modulo: &HashSet<Vec<Poly>>) -> HashSet<Vec<Poly>> {
    vectors(r, m.ncols())
        .into_iter()
        .filter(|v| modulo.contains(&apply(r, m, v)))
        .collect()
}

/// Image of `m` as a set.
pub fn image_set(r: &QuotRing, m: &Matrix) -> HashSet<Vec<Poly>> {
    span_set(r, m.nrows(), m.columns())
}

/// Number of elements of a module over a finite ring.
pub fn cardinality(m: &FPModule) -> usize {
    let r = m.ring();
    let all = vectors(r, m.ngens()).len();
    all / span_set(r, m.ngens(), m.relations().columns()).len()
}

pub fn random_element(r: &QuotRing, rng: &mut ChaCha8Rng) -> Poly {
    let els = elements(r);
    els[rng.gen_range(0..els.len())].clone()
}

/// A module over a finite ring with random relations.
pub fn random_module(r: &Arc<QuotRing>, rng: &mut ChaCha8Rng, max_gens: usize, max_rels: usize) -> FPModule {
    let n = rng.gen_range(1..=max_gens);
    let k = rng.gen_range(0..=max_rels);
    let cols = (0..k).map(|_| (0..n).map(|_| random_element(r, rng)).collect()).collect();
    FPModule::new(r.clone(), n, Matrix::from_columns(n, cols).unwrap()).unwrap()
}

/// A random polynomial of total degree at most `deg` in the ring's
/// variables, coefficients in `0..p` (or small integers over QQ).
pub fn random_poly(p: &PolyRing, rng: &mut ChaCha8Rng, deg: u32, terms: usize) -> Poly {
    let n = p.nvars();
    let mut t = Vec::new();
    for _ in 0..terms {
        let mut e = vec![0u32; n];
        let mut budget = rng.gen_range(0..=deg);
        for x in e.iter_mut() {
            let d = rng.gen_range(0..=budget);
            *x = d;
            budget -= d;
        }
        let c = rng.gen_range(-3i64..=3);
        t.push((Monomial(e), p.field().from_i64(c)));
    }
    p.from_terms(t)
}

// ---------------------------------------------------------------------------
// GF(p)[x, y]/(x^a, y^b) with dense coefficient arrays

#[derive(Clone, Debug)]
pub struct TruncatedRing {
    pub p: u64,
    pub a: usize,
    pub b: usize,
}

pub type Dense = Vec<u64>;

/// Relation rows of a module, as polynomial literals.
pub type Rows<'a> = &'a [&'a [&'a str]];

impl TruncatedRing {
    pub fn dim(&self) -> usize {
        self.a * self.b
    }

    pub fn index(&self, i: usize, j: usize) -> usize {
        i * self.b + j
    }

    /// Image of a polynomial in `x, y` (or just `x`) over `GF(p)`.
    pub fn encode(&self, f: &Poly) -> Dense {
        let mut out = vec![0; self.dim()];
        for (m, c) in f.terms() {
            let i = m.0[0] as usize;
            let j = m.0.get(1).copied().unwrap_or(0) as usize;
            if i < self.a && j < self.b {
                let k = self.index(i, j);
                out[k] = (out[k] + coeff_mod(c, self.p)) % self.p;
            }
        }
        out
    }

    pub fn mul(&self, f: &Dense, g: &Dense) -> Dense {
        let mut out = vec![0; self.dim()];
        for i1 in 0..self.a {
            for j1 in 0..self.b {
                let c1 = f[self.index(i1, j1)];
                if c1 == 0 {
                    continue;
                }
                for i2 in 0..self.a - i1 {
                    for j2 in 0..self.b - j1 {
                        let c2 = g[self.index(i2, j2)];
                        let k = self.index(i1 + i2, j1 + j2);
                        out[k] = (out[k] + c1 * c2) % self.p;
                    }
                }
            }
        }
        out
    }

    pub fn monomial(&self, i: usize, j: usize) -> Dense {
        let mut out = vec![0; self.dim()];
        out[self.index(i, j)] = 1;
        out
    }

    /// Every element of the ideal generated by `gens`: the additive closure
    /// of all monomial multiples.
    pub fn ideal_elements(&self, gens: &[Dense]) -> HashSet<Dense> {
        let mut spanning = Vec::new();
        for g in gens {
            for i in 0..self.a {
                for j in 0..self.b {
                    spanning.push(self.mul(&self.monomial(i, j), g));
                }
            }
        }
        let mut set: HashSet<Dense> = HashSet::new();
        set.insert(vec![0; self.dim()]);
        for v in spanning {
            if set.contains(&v) {
                continue;
            }
            let mut next = HashSet::new();
            for s in &set {
                for c in 0..self.p {
                    next.insert(s.iter().zip(&v).map(|(x, y)| (x + c * y) % self.p).collect());
                }
            }
            set = next;
        }
        set
    }
}

pub fn coeff_mod(c: &Coeff, p: u64) -> u64 {
    match c {
        Coeff::Mod(v, _) => *v as u64 % p,
        Coeff::Rat(_) => panic!("rational coefficient in a finite field oracle"),
    }
}

// ---------------------------------------------------------------------------
// Integer matrices

pub type IntRows = Vec<Vec<BigInt>>;

pub fn random_int_matrix(rng: &mut ChaCha8Rng, n: usize, m: usize, bound: i64) -> IntRows {
    (0..n)
        .map(|_| (0..m).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect())
        .collect()
}

/// Determinant by cofactor expansion.
pub fn det(m: &IntRows) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: IntRows = m[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][j] * det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Invariant factors `d_k / d_{k-1}`, where `d_k` is the gcd of the
/// `k x k` minors.
pub fn invariant_factors(a: &IntRows, ncols: usize) -> Vec<BigInt> {
    let nrows = a.len();
    let mut out = Vec::new();
    let mut prev = BigInt::from(1);
    for k in 1..=nrows.min(ncols) {
        let mut g = BigInt::zero();
        for rs in subsets(nrows, k) {
            for cs in subsets(ncols, k) {
                let sub: IntRows = rs.iter().map(|&r| cs.iter().map(|&c| a[r][c].clone()).collect()).collect();
                g = g.gcd(&det(&sub));
            }
        }
        if g.is_zero() {
            break;
        }
        out.push((&g / &prev).abs());
        prev = g;
    }
    out
}

pub fn int_mul(a: &IntRows, b: &IntRows, inner: usize, ncols: usize) -> IntRows {
    a.iter()
        .map(|row| {
            (0..ncols)
                .map(|j| (0..inner).map(|k| &row[k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}
