use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Coefficient field of a polynomial ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    /// Integers modulo a prime `p < 2^31`.
    Prime(u32),
}

/// A field element. Prime-field elements carry their modulus so that
/// arithmetic needs no context.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Rat(BigRational),
    Mod(u32, u32),
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn prime(p: u64) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime(p as u32))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Coeff {
        self.from_i64(0)
    }

    pub fn one(&self) -> Coeff {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Coeff {
        match self {
            Field::Rationals => Coeff::Rat(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Coeff::Mod(n.rem_euclid(*p as i64) as u32, *p),
        }
    }

    /// Builds `num/den`; `den` must be invertible in the field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Option<Coeff> {
        if den.is_zero() {
            return None;
        }
        match self {
            Field::Rationals => Some(Coeff::Rat(BigRational::new(num.clone(), den.clone()))),
            Field::Prime(p) => {
                let pb = BigInt::from(*p);
                let n = reduce_big(num, &pb);
                let d = reduce_big(den, &pb);
                if d == 0 {
                    return None;
                }
                let dinv = Coeff::Mod(d, *p).inv();
                Some(Coeff::Mod(n, *p).mul(&dinv))
            }
        }
    }

    /// Every element of a prime field, in increasing representative order.
    pub fn elements(&self) -> Option<Vec<Coeff>> {
        match self {
            Field::Rationals => None,
            Field::Prime(p) => Some((0..*p).map(|v| Coeff::Mod(v, *p)).collect()),
        }
    }
}

fn reduce_big(n: &BigInt, p: &BigInt) -> u32 {
    let r = ((n % p) + p) % p;
    u32::try_from(r).expect("residue below a 31-bit prime")
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl Coeff {
    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Rat(r) => r.is_zero(),
            Coeff::Mod(v, _) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Rat(r) => r.is_one(),
            Coeff::Mod(v, _) => *v == 1,
        }
    }

    pub fn add(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Rat(a), Coeff::Rat(b)) => Coeff::Rat(a + b),
            (Coeff::Mod(a, p), Coeff::Mod(b, _)) => {
                Coeff::Mod(((*a as u64 + *b as u64) % *p as u64) as u32, *p)
            }
            _ => panic!("coefficients from different fields"),
        }
    }

    pub fn neg(&self) -> Coeff {
        match self {
            Coeff::Rat(a) => Coeff::Rat(-a),
            Coeff::Mod(a, p) => Coeff::Mod(if *a == 0 { 0 } else { p - a }, *p),
        }
    }

    pub fn sub(&self, other: &Coeff) -> Coeff {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Rat(a), Coeff::Rat(b)) => Coeff::Rat(a * b),
            (Coeff::Mod(a, p), Coeff::Mod(b, _)) => {
                Coeff::Mod(((*a as u64 * *b as u64) % *p as u64) as u32, *p)
            }
            _ => panic!("coefficients from different fields"),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Coeff {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Coeff::Rat(a) => Coeff::Rat(a.recip()),
            Coeff::Mod(a, p) => {
                // Fermat: a^(p-2)
                let m = *p as u64;
                let mut base = *a as u64;
                let mut e = m - 2;
                let mut acc = 1u64;
                while e > 0 {
                    if e & 1 == 1 {
                        acc = acc * base % m;
                    }
                    base = base * base % m;
                    e >>= 1;
                }
                Coeff::Mod(acc as u32, *p)
            }
        }
    }

    pub fn div(&self, other: &Coeff) -> Coeff {
        self.mul(&other.inv())
    }

    /// Whether the printed form needs a leading minus sign.
    pub(crate) fn is_negative(&self) -> bool {
        match self {
            Coeff::Rat(r) => r.is_negative(),
            Coeff::Mod(..) => false,
        }
    }

    pub(crate) fn abs(&self) -> Coeff {
        match self {
            Coeff::Rat(r) => Coeff::Rat(r.abs()),
            c => c.clone(),
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Coeff::Mod(v, _) => write!(f, "{v}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_fields_reject_composites() {
        assert_eq!(Field::prime(4), Err(Error::NotPrime(4)));
        assert_eq!(Field::prime(1), Err(Error::NotPrime(1)));
        assert!(Field::prime(2_147_483_647).is_ok());
        assert!(Field::prime(1 << 31).is_err());
    }

    #[test]
    fn modular_inverse() {
        let f = Field::prime(7).unwrap();
        for v in 1..7 {
            let c = f.from_i64(v);
            assert!(c.mul(&c.inv()).is_one());
        }
    }

    #[test]
    fn rationals_stay_reduced() {
        let f = Field::Rationals;
        let c = f.from_ratio(&BigInt::from(4), &BigInt::from(-6)).unwrap();
        assert_eq!(c.to_string(), "-2/3");
    }

    #[test]
    fn ratio_in_prime_field() {
        let f = Field::prime(5).unwrap();
        let c = f.from_ratio(&BigInt::from(1), &BigInt::from(2)).unwrap();
        assert_eq!(c, f.from_i64(3));
        assert!(f.from_ratio(&BigInt::from(1), &BigInt::from(5)).is_none());
    }
}
