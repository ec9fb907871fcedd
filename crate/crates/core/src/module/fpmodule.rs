use std::sync::Arc;

use super::matrix::Matrix;
use crate::error::{Error, Result};
use crate::ring::linalg::{self, nf_column, Column, Lifter, Span};
use crate::ring::{standard_monomials_of, Poly, QuotRing};

/// `coker(relations)`: `ngens` generators, one relation per column.
#[derive(Debug, Clone)]
pub struct FPModule {
    ring: Arc<QuotRing>,
    ngens: usize,
    relations: Matrix,
}

impl PartialEq for FPModule {
    /// Equality of presentations, not isomorphism.
    fn eq(&self, other: &Self) -> bool {
        self.ring.check_same(&other.ring).is_ok()
            && self.ngens == other.ngens
            && self.relations == other.relations
    }
}

impl FPModule {
    pub fn new(ring: Arc<QuotRing>, ngens: usize, relations: Matrix) -> Result<Self> {
        if relations.nrows() != ngens {
            return Err(Error::Shape(format!(
                "relation matrix has {} rows but the module has {} generators",
                relations.nrows(),
                ngens
            )));
        }
        for c in relations.columns() {
            for e in c {
                ring.base().check(e)?;
            }
        }
        let relations = relations.normalize(&ring).drop_zero_columns();
        Ok(FPModule {
            ring,
            ngens,
            relations,
        })
    }

    pub fn free(ring: Arc<QuotRing>, n: usize) -> Self {
        FPModule {
            ring,
            ngens: n,
            relations: Matrix::zero(n, 0),
        }
    }

    pub fn zero(ring: Arc<QuotRing>) -> Self {
        Self::free(ring, 0)
    }

    /// `R / (gens)`.
    pub fn cyclic(ring: Arc<QuotRing>, gens: &[Poly]) -> Result<Self> {
        let cols = gens.iter().map(|g| vec![g.clone()]).collect();
        Self::new(ring, 1, Matrix::from_columns(1, cols)?)
    }

    /// Parses a row-major relation matrix of polynomial strings.
    pub fn from_rows(ring: Arc<QuotRing>, rows: &[&[&str]]) -> Result<Self> {
        let ngens = rows.len();
        let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let m = Matrix::from_rows(ncols, parsed)?;
        Self::new(ring, ngens, m)
    }

    pub fn ring(&self) -> &Arc<QuotRing> {
        &self.ring
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    pub fn relations(&self) -> &Matrix {
        &self.relations
    }

    pub fn has_free_presentation(&self) -> bool {
        self.relations.ncols() == 0
    }

    pub fn relation_span(&self) -> Result<Span<'_>> {
        Span::new(&self.ring, self.ngens, self.relations.columns())
    }

    /// Whether the element with coordinates `v` is zero in the module.
    pub fn is_zero_element(&self, v: &[Poly]) -> Result<bool> {
        Ok(self.relation_span()?.contains(v))
    }

    pub fn is_zero(&self) -> Result<bool> {
        if self.ngens == 0 {
            return Ok(true);
        }
        let span = self.relation_span()?;
        Ok((0..self.ngens).all(|i| span.contains(&unit(&self.ring, self.ngens, i))))
    }

    pub fn direct_sum(&self, other: &FPModule) -> Result<FPModule> {
        self.ring.check_same(&other.ring)?;
        Ok(FPModule {
            ring: self.ring.clone(),
            ngens: self.ngens + other.ngens,
            relations: self.relations.block_diagonal(&other.relations),
        })
    }

    /// Same module with the relation columns replaced by a canonical
    /// irredundant generating set of their span.
    pub fn interreduced(&self) -> Result<FPModule> {
        let cols = linalg::canonical_generators(&self.ring, self.ngens, self.relations.columns())?;
        Ok(FPModule {
            ring: self.ring.clone(),
            ngens: self.ngens,
            relations: Matrix::from_columns(self.ngens, cols)?,
        })
    }

    /// Dimension over the coefficient field, when finite.
    pub fn vector_space_dimension(&self) -> Result<Option<usize>> {
        let span = self.relation_span()?;
        let leads = span.leading_terms();
        let nvars = self.ring.base().nvars();
        let mut total = 0;
        for i in 0..self.ngens {
            let at_i: Vec<_> = leads
                .iter()
                .filter(|(p, _)| *p == i)
                .map(|(_, m)| m.clone())
                .collect();
            match standard_monomials_of(nvars, &at_i) {
                Some(s) => total += s.len(),
                None => return Ok(None),
            }
        }
        Ok(Some(total))
    }

    /// Same presentation over a ring with a different degree guard.
    pub fn with_ring(&self, ring: Arc<QuotRing>) -> Result<FPModule> {
        self.ring.check_same(&ring)?;
        Ok(FPModule {
            ring,
            ngens: self.ngens,
            relations: self.relations.clone(),
        })
    }
}

pub(crate) fn unit(ring: &QuotRing, n: usize, i: usize) -> Column {
    let mut v = vec![Poly::zero(); n];
    v[i] = ring.one();
    v
}

/// `(span(gens) + span(sub)) / span(sub)` presented on `gens`: the
/// relations are the coefficient vectors `c` with `sum c_j gens_j` in
/// `span(sub)`.
pub fn subquotient(ring: &Arc<QuotRing>, n: usize, gens: &[Column], sub: &[Column]) -> Result<FPModule> {
    let s = gens.len();
    let mut cols: Vec<Column> = gens.to_vec();
    cols.extend(sub.iter().cloned());
    let syz = linalg::syzygies(ring, n, &cols)?;
    let rel: Vec<Column> = syz
        .into_iter()
        .map(|c| c[..s].to_vec())
        .filter(|c| !linalg::is_zero_column(c))
        .collect();
    let rel = linalg::canonical_generators(ring, s, &rel)?;
    FPModule::new(ring.clone(), s, Matrix::from_columns(s, rel)?)
}

/// A submodule of the free module `R^rank` given by generators.
#[derive(Debug, Clone, PartialEq)]
pub struct SubmoduleOfFree {
    ring: Arc<QuotRing>,
    rank: usize,
    generators: Vec<Column>,
}

impl SubmoduleOfFree {
    pub fn new(ring: Arc<QuotRing>, rank: usize, generators: Vec<Column>) -> Result<Self> {
        for g in &generators {
            if g.len() != rank {
                return Err(Error::Shape(format!(
                    "generator of length {} in a free module of rank {}",
                    g.len(),
                    rank
                )));
            }
            for e in g {
                ring.base().check(e)?;
            }
        }
        let generators = generators
            .iter()
            .map(|g| nf_column(&ring, g))
            .filter(|g| !linalg::is_zero_column(g))
            .collect();
        Ok(SubmoduleOfFree {
            ring,
            rank,
            generators,
        })
    }

    pub fn whole(ring: Arc<QuotRing>, rank: usize) -> Self {
        let gens = (0..rank).map(|i| unit(&ring, rank, i)).collect();
        SubmoduleOfFree {
            ring,
            rank,
            generators: gens,
        }
    }

    pub fn zero(ring: Arc<QuotRing>, rank: usize) -> Self {
        SubmoduleOfFree {
            ring,
            rank,
            generators: Vec::new(),
        }
    }

    pub fn ring(&self) -> &Arc<QuotRing> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[Column] {
        &self.generators
    }

    pub fn span(&self) -> Result<Span<'_>> {
        Span::new(&self.ring, self.rank, &self.generators)
    }

    pub fn contains(&self, v: &[Poly]) -> Result<bool> {
        Ok(self.span()?.contains(v))
    }

    pub fn contains_submodule(&self, other: &SubmoduleOfFree) -> Result<bool> {
        self.ring.check_same(&other.ring)?;
        let span = self.span()?;
        Ok(other.generators.iter().all(|g| span.contains(g)))
    }

    pub fn same_as(&self, other: &SubmoduleOfFree) -> Result<bool> {
        Ok(self.contains_submodule(other)? && other.contains_submodule(self)?)
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Canonical irredundant generators.
    pub fn interreduced(&self) -> Result<SubmoduleOfFree> {
        Ok(SubmoduleOfFree {
            ring: self.ring.clone(),
            rank: self.rank,
            generators: linalg::canonical_generators(&self.ring, self.rank, &self.generators)?,
        })
    }

    /// The submodule as an abstract module, presented on its generators.
    pub fn as_module(&self) -> Result<FPModule> {
        subquotient(&self.ring, self.rank, &self.generators, &[])
    }

    /// `R^rank / self`.
    pub fn quotient_module(&self) -> Result<FPModule> {
        FPModule::new(
            self.ring.clone(),
            self.rank,
            Matrix::from_columns(self.rank, self.generators.clone())?,
        )
    }

    /// Coefficients expressing `v` in the generators.
    pub fn coordinates(&self, v: &[Poly]) -> Result<Option<Column>> {
        Ok(Lifter::new(&self.ring, self.rank, &self.generators)?.lift(v))
    }

    pub fn intersection(&self, other: &SubmoduleOfFree) -> Result<SubmoduleOfFree> {
        self.ring.check_same(&other.ring)?;
        let s = self.generators.len();
        let mut cols = self.generators.clone();
        cols.extend(other.generators.iter().cloned());
        let syz = linalg::syzygies(&self.ring, self.rank, &cols)?;
        let gens: Vec<Column> = syz
            .iter()
            .map(|c| {
                let mut v = vec![Poly::zero(); self.rank];
                for (j, a) in c[..s].iter().enumerate() {
                    for (vi, g) in v.iter_mut().zip(&self.generators[j]) {
                        *vi = self.ring.add(vi, &self.ring.mul(a, g));
                    }
                }
                v
            })
            .collect();
        SubmoduleOfFree::new(self.ring.clone(), self.rank, gens)?.interreduced()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Field, MonomialOrder, PolyRing};

    fn qx() -> Arc<QuotRing> {
        let p = PolyRing::new(Field::Rationals, &["x"], MonomialOrder::Grevlex).unwrap();
        Arc::new(QuotRing::polynomial(p))
    }

    #[test]
    fn zero_test_and_dimension() {
        let r = qx();
        let k = FPModule::from_rows(r.clone(), &[&["x"]]).unwrap();
        assert!(!k.is_zero().unwrap());
        assert_eq!(k.vector_space_dimension().unwrap(), Some(1));
        let zero = FPModule::from_rows(r.clone(), &[&["1"]]).unwrap();
        assert!(zero.is_zero().unwrap());
        assert_eq!(FPModule::free(r, 1).vector_space_dimension().unwrap(), None);
    }

    #[test]
    fn zero_columns_are_dropped() {
        let r = qx();
        let m = FPModule::from_rows(r, &[&["0", "x"]]).unwrap();
        assert_eq!(m.relations().ncols(), 1);
    }

    #[test]
    fn shape_mismatch_rejected() {
        let r = qx();
        assert!(FPModule::new(r, 2, Matrix::zero(1, 1)).is_err());
    }

    #[test]
    fn intersection_of_ideals() {
        let r = qx();
        let p = r.base().clone();
        let a = SubmoduleOfFree::new(r.clone(), 1, vec![vec![p.parse("x^2").unwrap()]]).unwrap();
        let b = SubmoduleOfFree::new(r.clone(), 1, vec![vec![p.parse("x^3 + x^2").unwrap()]])
            .unwrap();
        let i = a.intersection(&b).unwrap();
        // lcm(x^2, x^2 (x + 1)) = x^3 + x^2
        assert!(i.same_as(&b).unwrap());
    }
}
