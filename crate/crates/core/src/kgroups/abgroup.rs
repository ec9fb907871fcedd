use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::snf::{smith_normal_form, IntMatrix, Smith};
use crate::error::{Error, Result};

/// `Z^n / (row span of relations)` with generator labels.
#[derive(Debug, Clone)]
pub struct AbGroupPresentation {
    pub labels: Vec<String>,
    pub relations: IntMatrix,
    pub smith: Smith,
}

pub fn group_from_relations(labels: Vec<String>, relations: IntMatrix) -> Result<AbGroupPresentation> {
    let n = labels.len();
    if let Some(r) = relations.iter().find(|r| r.len() != n) {
        return Err(Error::Shape(format!(
            "relation of width {} over {} generators",
            r.len(),
            n
        )));
    }
    let smith = smith_normal_form(&relations, n);
    Ok(AbGroupPresentation {
        labels,
        relations,
        smith,
    })
}

impl AbGroupPresentation {
    pub fn ngens(&self) -> usize {
        self.labels.len()
    }

    /// Nontrivial invariant factors `d > 1`.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.smith
            .diagonal()
            .into_iter()
            .filter(|d| !d.is_one())
            .collect()
    }

    pub fn free_rank(&self) -> usize {
        self.ngens() - self.smith.diagonal().len()
    }

    /// Coordinates of an element in the diagonal basis: entry `i` is taken
    /// modulo the `i`-th invariant factor, free coordinates are exact.
    pub fn normalize(&self, w: &[BigInt]) -> Vec<BigInt> {
        let n = self.ngens();
        let diag = self.smith.diagonal();
        (0..n)
            .map(|j| {
                let c: BigInt = (0..n).map(|k| &w[k] * &self.smith.v[k][j]).sum();
                match diag.get(j) {
                    Some(d) => c.mod_floor(d),
                    None => c,
                }
            })
            .collect()
    }

    pub fn is_zero(&self, w: &[BigInt]) -> bool {
        self.normalize(w).iter().all(Zero::is_zero)
    }

    pub fn equal(&self, a: &[BigInt], b: &[BigInt]) -> bool {
        let d: Vec<BigInt> = a.iter().zip(b).map(|(x, y)| x - y).collect();
        self.is_zero(&d)
    }

    /// Free generators of the group, as integer combinations of the labels:
    /// the rows of `V^{-1}` beyond the nonzero diagonal.
    pub fn free_generators(&self) -> Vec<Vec<BigInt>> {
        let n = self.ngens();
        let vinv = invert_unimodular(&self.smith.v);
        let r = self.smith.diagonal().len();
        (r..n).map(|i| vinv[i].clone()).collect()
    }
}

/// Inverse of a unimodular matrix by Gauss-Jordan over the rationals,
/// which stays integral.
fn invert_unimodular(v: &IntMatrix) -> IntMatrix {
    use num_rational::BigRational;
    let n = v.len();
    let mut a: Vec<Vec<BigRational>> = v
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<BigRational> = row.iter().map(|x| BigRational::from_integer(x.clone())).collect();
            r.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero()).expect("unimodular");
        a.swap(c, p);
        let inv = a[c][c].recip();
        for x in a[c].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let rc = a[c].clone();
                for (x, y) in a[i].iter_mut().zip(rc) {
                    *x = &*x - &f * y;
                }
            }
        }
    }
    a.into_iter()
        .map(|r| r[n..].iter().map(|x| x.to_integer()).collect())
        .collect()
}

impl fmt::Display for AbGroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank() {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in self.torsion() {
            parts.push(format!("Z/{d}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn dual_numbers_group() {
        let g = group_from_relations(
            vec!["[R]".into(), "[k]".into()],
            vec![ints(&[1, -2])],
        )
        .unwrap();
        assert_eq!(g.free_rank(), 1);
        assert!(g.torsion().is_empty());
        assert_eq!(g.to_string(), "Z");
        // [R] = 2[k]
        assert!(g.equal(&ints(&[1, 0]), &ints(&[0, 2])));
        let gens = g.free_generators();
        assert_eq!(gens.len(), 1);
        // the generator is ±[k] up to relations
        let k = ints(&[0, 1]);
        let neg_k = ints(&[0, -1]);
        assert!(g.equal(&gens[0], &k) || g.equal(&gens[0], &neg_k));
    }

    #[test]
    fn trivial_relations() {
        let g = group_from_relations(vec!["a".into(), "b".into()], vec![]).unwrap();
        assert_eq!(g.to_string(), "Z^2");
        let g = group_from_relations(vec!["g".into()], vec![ints(&[0])]).unwrap();
        assert_eq!(g.to_string(), "Z");
        let g = group_from_relations(vec!["g".into()], vec![ints(&[6])]).unwrap();
        assert_eq!(g.to_string(), "Z/6");
    }
}
