use crate::error::{Error, Result};
use crate::ring::linalg::{nf_column, Column};
use crate::ring::{Poly, QuotRing};

/// Matrix over a quotient ring, stored by columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    nrows: usize,
    cols: Vec<Column>,
}

impl Matrix {
    pub fn from_columns(nrows: usize, cols: Vec<Column>) -> Result<Self> {
        if let Some(c) = cols.iter().find(|c| c.len() != nrows) {
            return Err(Error::Shape(format!(
                "column of length {} in a matrix with {} rows",
                c.len(),
                nrows
            )));
        }
        Ok(Matrix { nrows, cols })
    }

    pub fn from_rows(ncols: usize, rows: Vec<Vec<Poly>>) -> Result<Self> {
        let nrows = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != ncols) {
            return Err(Error::Shape(format!(
                "row of length {} in a matrix with {} columns",
                r.len(),
                ncols
            )));
        }
        let cols = (0..ncols)
            .map(|j| rows.iter().map(|r| r[j].clone()).collect())
            .collect();
        Ok(Matrix { nrows, cols })
    }

    pub fn zero(nrows: usize, ncols: usize) -> Self {
        Matrix {
            nrows,
            cols: vec![vec![Poly::zero(); nrows]; ncols],
        }
    }

    pub fn identity(ring: &QuotRing, n: usize) -> Self {
        Self::scalar(ring, n, &ring.one())
    }

    /// `a` times the identity.
    pub fn scalar(ring: &QuotRing, n: usize, a: &Poly) -> Self {
        let a = ring.nf(a);
        let cols = (0..n)
            .map(|j| {
                let mut c = vec![Poly::zero(); n];
                c[j] = a.clone();
                c
            })
            .collect();
        Matrix { nrows: n, cols }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn columns(&self) -> &[Column] {
        &self.cols
    }

    pub fn into_columns(self) -> Vec<Column> {
        self.cols
    }

    pub fn column(&self, j: usize) -> &Column {
        &self.cols[j]
    }

    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        &self.cols[j][i]
    }

    pub fn row(&self, i: usize) -> Column {
        self.cols.iter().map(|c| c[i].clone()).collect()
    }

    pub fn rows(&self) -> Vec<Column> {
        (0..self.nrows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix {
            nrows: self.ncols(),
            cols: self.rows(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.iter().all(Poly::is_zero))
    }

    pub fn normalize(&self, ring: &QuotRing) -> Matrix {
        Matrix {
            nrows: self.nrows,
            cols: self.cols.iter().map(|c| nf_column(ring, c)).collect(),
        }
    }

    /// `self * v`.
    pub fn apply(&self, ring: &QuotRing, v: &[Poly]) -> Column {
        debug_assert_eq!(v.len(), self.ncols());
        let mut out = vec![Poly::zero(); self.nrows];
        for (c, a) in self.cols.iter().zip(v) {
            if a.is_zero() {
                continue;
            }
            for (o, e) in out.iter_mut().zip(c) {
                if !e.is_zero() {
                    *o = ring.base().add(o, &ring.base().mul(e, a));
                }
            }
        }
        nf_column(ring, &out)
    }

    pub fn mul(&self, ring: &QuotRing, other: &Matrix) -> Result<Matrix> {
        if self.ncols() != other.nrows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.nrows,
                self.ncols(),
                other.nrows,
                other.ncols()
            )));
        }
        Ok(Matrix {
            nrows: self.nrows,
            cols: other.cols.iter().map(|c| self.apply(ring, c)).collect(),
        })
    }

    pub fn sub(&self, ring: &QuotRing, other: &Matrix) -> Result<Matrix> {
        if self.nrows != other.nrows || self.ncols() != other.ncols() {
            return Err(Error::Shape("difference of matrices of different shapes".into()));
        }
        Ok(Matrix {
            nrows: self.nrows,
            cols: self
                .cols
                .iter()
                .zip(&other.cols)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| ring.sub(x, y)).collect())
                .collect(),
        })
    }

    /// Columns of `self` followed by columns of `other`.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.nrows != other.nrows {
            return Err(Error::Shape("hstack of matrices with different row counts".into()));
        }
        let mut cols = self.cols.clone();
        cols.extend(other.cols.iter().cloned());
        Ok(Matrix {
            nrows: self.nrows,
            cols,
        })
    }

    pub fn block_diagonal(&self, other: &Matrix) -> Matrix {
        let n = self.nrows + other.nrows;
        let mut cols = Vec::with_capacity(self.ncols() + other.ncols());
        for c in &self.cols {
            let mut v = c.clone();
            v.resize(n, Poly::zero());
            cols.push(v);
        }
        for c in &other.cols {
            let mut v = vec![Poly::zero(); self.nrows];
            v.extend(c.iter().cloned());
            cols.push(v);
        }
        Matrix { nrows: n, cols }
    }

    /// `self ⊗ I_k`: every entry becomes `entry * I_k`.
    pub fn kron_identity(&self, k: usize) -> Matrix {
        let mut cols = Vec::with_capacity(self.ncols() * k);
        for c in &self.cols {
            for t in 0..k {
                let mut v = vec![Poly::zero(); self.nrows * k];
                for (i, e) in c.iter().enumerate() {
                    v[i * k + t] = e.clone();
                }
                cols.push(v);
            }
        }
        Matrix {
            nrows: self.nrows * k,
            cols,
        }
    }

    pub fn drop_zero_columns(&self) -> Matrix {
        Matrix {
            nrows: self.nrows,
            cols: self
                .cols
                .iter()
                .filter(|c| !c.iter().all(Poly::is_zero))
                .cloned()
                .collect(),
        }
    }

    /// Row-major rendering `[a, b; c, d]` in the polynomial grammar.
    pub fn display(&self, ring: &QuotRing) -> String {
        if self.cols.is_empty() {
            return "[]".into();
        }
        let rows: Vec<String> = (0..self.nrows)
            .map(|i| {
                self.cols
                    .iter()
                    .map(|c| ring.display(&c[i]))
                    .collect::<Vec<_>>()
                    .join(", ")
            })
            .collect();
        format!("[{}]", rows.join("; "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Field, MonomialOrder, PolyRing};

    #[test]
    fn product_and_transpose() {
        let p = PolyRing::new(Field::Rationals, &["x"], MonomialOrder::Grevlex).unwrap();
        let r = QuotRing::polynomial(p.clone());
        let x = p.parse("x").unwrap();
        let a = Matrix::from_rows(2, vec![vec![x.clone(), r.one()]]).unwrap();
        let at = a.transpose();
        assert_eq!(at.nrows(), 2);
        let aat = a.mul(&r, &at).unwrap();
        assert_eq!(aat.entry(0, 0), &p.parse("x^2 + 1").unwrap());
        assert!(a.mul(&r, &a).is_err());
    }

    #[test]
    fn kron_identity_layout() {
        let p = PolyRing::new(Field::Rationals, &["x"], MonomialOrder::Grevlex).unwrap();
        let r = QuotRing::polynomial(p.clone());
        let a = Matrix::from_rows(1, vec![vec![p.parse("x").unwrap()]]).unwrap();
        let k = a.kron_identity(2);
        assert_eq!(k, Matrix::scalar(&r, 2, &p.parse("x").unwrap()));
    }
}
