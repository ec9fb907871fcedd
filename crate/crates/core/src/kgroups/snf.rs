use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense integer matrix, row-major.
pub type IntMatrix = Vec<Vec<BigInt>>;

pub fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

pub fn mul(a: &IntMatrix, b: &IntMatrix, inner: usize, ncols: usize) -> IntMatrix {
    a.iter()
        .map(|row| {
            (0..ncols)
                .map(|j| (0..inner).map(|k| &row[k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// Result of [`smith_normal_form`]: `s = u * a * v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Smith {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
}

impl Smith {
    /// Nonzero diagonal entries, each dividing the next.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.s.len().min(self.s.first().map_or(0, |r| r.len())))
            .map(|i| self.s[i][i].clone())
            .take_while(|d| !d.is_zero())
            .collect()
    }
}

fn swap_cols(m: &mut IntMatrix, a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

/// `row_a += k * row_b`.
fn add_row(m: &mut IntMatrix, a: usize, b: usize, k: &BigInt) {
    let rb = m[b].clone();
    for (x, y) in m[a].iter_mut().zip(rb) {
        *x += k * y;
    }
}

fn add_col(m: &mut IntMatrix, a: usize, b: usize, k: &BigInt) {
    for row in m.iter_mut() {
        let y = row[b].clone();
        row[a] += k * y;
    }
}

/// Smith normal form of an `nrows x ncols` integer matrix with unimodular
/// transforms. Diagonal entries are nonnegative.
pub fn smith_normal_form(a: &IntMatrix, ncols: usize) -> Smith {
    let nrows = a.len();
    let mut s = a.clone();
    let mut u = identity(nrows);
    let mut v = identity(ncols);
    let mut t = 0;
    while t < nrows.min(ncols) {
        // smallest nonzero entry in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..nrows {
            for j in t..ncols {
                if !s[i][j].is_zero()
                    && best.is_none_or(|(bi, bj)| s[i][j].abs() < s[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        s.swap(t, pi);
        u.swap(t, pi);
        swap_cols(&mut s, t, pj);
        swap_cols(&mut v, t, pj);
        let mut clean = true;
        for i in t + 1..nrows {
            let q = s[i][t].div_floor(&s[t][t]);
            if !q.is_zero() {
                add_row(&mut s, i, t, &-&q);
                add_row(&mut u, i, t, &-&q);
            }
            if !s[i][t].is_zero() {
                clean = false;
            }
        }
        for j in t + 1..ncols {
            let q = s[t][j].div_floor(&s[t][t]);
            if !q.is_zero() {
                add_col(&mut s, j, t, &-&q);
                add_col(&mut v, j, t, &-&q);
            }
            if !s[t][j].is_zero() {
                clean = false;
            }
        }
        if !clean {
            continue;
        }
        // divisibility: fold a non-divisible row into the pivot row
        let bad = (t + 1..nrows).find(|&i| (t + 1..ncols).any(|j| !(&s[i][j] % &s[t][t]).is_zero()));
        if let Some(i) = bad {
            add_row(&mut s, t, i, &BigInt::one());
            add_row(&mut u, t, i, &BigInt::one());
            continue;
        }
        if s[t][t].is_negative() {
            for x in s[t].iter_mut() {
                *x = -&*x;
            }
            for x in u[t].iter_mut() {
                *x = -&*x;
            }
        }
        t += 1;
    }
    Smith { u, s, v }
}

/// Determinant by fraction-free elimination.
pub fn determinant(m: &IntMatrix) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let val = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = val / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn diag_2_3() {
        let a = m(&[&[2, 0], &[0, 3]]);
        let sm = smith_normal_form(&a, 2);
        assert_eq!(sm.s, m(&[&[1, 0], &[0, 6]]));
        assert_eq!(mul(&mul(&sm.u, &a, 2, 2), &sm.v, 2, 2), sm.s);
        assert_eq!(determinant(&sm.u).abs(), BigInt::one());
        assert_eq!(determinant(&sm.v).abs(), BigInt::one());
    }

    #[test]
    fn trivial_cases() {
        assert_eq!(smith_normal_form(&m(&[&[1, 0], &[0, 1]]), 2).s, m(&[&[1, 0], &[0, 1]]));
        assert_eq!(smith_normal_form(&m(&[&[2]]), 1).s, m(&[&[2]]));
        assert_eq!(smith_normal_form(&m(&[&[-4, 6]]), 2).diagonal(), vec![BigInt::from(2)]);
    }
}
