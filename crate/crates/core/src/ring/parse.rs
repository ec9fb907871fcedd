//! Polynomial string grammar.
//!
//! ```text
//! poly  := ['-'] term (('+' | '-') term)*
//! term  := coeff | coeff '*' mono | mono
//! mono  := power ('*' power)*
//! power := var | var '^' int
//! coeff := int | int '/' int
//! ```
//!
//! Whitespace is allowed between tokens. Printing emits terms in descending
//! order joined by ` + ` and ` - `, which parses back to the same value.

use num_bigint::BigInt;

use super::field::Coeff;
use super::monomial::Monomial;
use super::poly::{Poly, PolyRing};
use crate::error::{Error, Result};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            column: self.pos + 1,
            message: message.into(),
        })
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse as an integer"))
    }

    fn ident(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        match self.src.get(self.pos) {
            Some(c) if c.is_ascii_alphabetic() || *c == b'_' => {}
            _ => return None,
        }
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        Some(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }
}

impl PolyRing {
    /// Parses a polynomial in this ring's variables.
    pub fn parse(&self, text: &str) -> Result<Poly> {
        let mut cur = Cursor {
            src: text.as_bytes(),
            pos: 0,
        };
        let mut terms = Vec::new();
        let mut negate = false;
        if cur.peek() == Some(b'-') {
            cur.pos += 1;
            negate = true;
        } else if cur.peek() == Some(b'+') {
            cur.pos += 1;
        }
        loop {
            let (m, c) = self.parse_term(&mut cur)?;
            terms.push((m, if negate { c.neg() } else { c }));
            match cur.peek() {
                None => break,
                Some(b'+') => negate = false,
                Some(b'-') => negate = true,
                Some(_) => return cur.err("expected `+`, `-` or end of input"),
            }
            cur.pos += 1;
        }
        Ok(self.from_terms(terms))
    }

    fn parse_term(&self, cur: &mut Cursor<'_>) -> Result<(Monomial, Coeff)> {
        let mut coeff = self.field().one();
        let mut have_coeff = false;
        if matches!(cur.peek(), Some(c) if c.is_ascii_digit()) {
            let num = cur.integer()?;
            let mut den = BigInt::from(1);
            if cur.peek() == Some(b'/') {
                cur.pos += 1;
                den = cur.integer()?;
            }
            coeff = match self.field().from_ratio(&num, &den) {
                Some(c) => c,
                None => return cur.err("denominator is zero in this field"),
            };
            have_coeff = true;
            if cur.peek() == Some(b'*') {
                cur.pos += 1;
            } else {
                return Ok((Monomial::one(self.nvars()), coeff));
            }
        }
        let mut exps = vec![0u32; self.nvars()];
        loop {
            let name = match cur.ident() {
                Some(n) => n,
                None if have_coeff => return cur.err("expected a variable after `*`"),
                None => return cur.err("expected a coefficient or variable"),
            };
            let Some(i) = self.var_index(&name) else {
                return Err(Error::Parse {
                    column: cur.pos + 1 - name.len(),
                    message: format!("unknown variable `{name}`"),
                });
            };
            let mut k = 1u32;
            if cur.peek() == Some(b'^') {
                cur.pos += 1;
                let e = cur.integer()?;
                k = match u32::try_from(e) {
                    Ok(k) => k,
                    Err(_) => return cur.err("exponent too large"),
                };
            }
            exps[i] += k;
            if cur.peek() == Some(b'*') {
                cur.pos += 1;
            } else {
                break;
            }
        }
        Ok((Monomial(exps), coeff))
    }

    pub fn display_monomial(&self, m: &Monomial) -> String {
        let parts: Vec<String> = m
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    self.vars()[i].clone()
                } else {
                    format!("{}^{}", self.vars()[i], e)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    /// Canonical string form; parses back to `f`.
    pub fn display(&self, f: &Poly) -> String {
        if f.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in f.terms().iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&self.display_monomial(m));
            } else {
                out.push_str(&format!("{}*{}", mag, self.display_monomial(m)));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Field, MonomialOrder};
    use proptest::prelude::*;

    fn qxy() -> PolyRing {
        PolyRing::new(Field::Rationals, &["x", "y"], MonomialOrder::Grevlex).unwrap()
    }

    #[test]
    fn parses_the_documented_forms() {
        let r = qxy();
        let f = r.parse("3/2*x^2*y - x + 7 - y^2").unwrap();
        assert_eq!(r.display(&f), "3/2*x^2*y - y^2 - x + 7");
        assert_eq!(r.display(&r.parse("-x").unwrap()), "-x");
        assert_eq!(r.display(&r.parse("x*x").unwrap()), "x^2");
        assert_eq!(r.display(&r.parse("0").unwrap()), "0");
    }

    #[test]
    fn unknown_variable_is_located() {
        let r = qxy();
        match r.parse("x + z") {
            Err(Error::Parse { column, message }) => {
                assert_eq!(column, 5);
                assert!(message.contains("`z`"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn trailing_garbage_rejected() {
        let r = qxy();
        assert!(r.parse("x y").is_err());
        assert!(r.parse("2*").is_err());
        assert!(r.parse("").is_err());
    }

    #[test]
    fn prime_field_reduces_coefficients() {
        let r = PolyRing::new(Field::prime(2).unwrap(), &["x"], MonomialOrder::Grevlex).unwrap();
        let f = r.parse("x^2 + 2*x + 3").unwrap();
        assert_eq!(r.display(&f), "x^2 + 1");
        assert_eq!(r.display(&r.parse("-1").unwrap()), "1");
    }

    proptest! {
        #[test]
        fn display_then_parse_is_identity(
            terms in proptest::collection::vec((0u32..4, 0u32..4, -20i64..20, 1i64..5), 0..6)
        ) {
            let r = qxy();
            let f = r.from_terms(terms.iter().map(|&(a, b, n, d)| {
                (Monomial(vec![a, b]), r.field().from_ratio(&n.into(), &d.into()).unwrap())
            }).collect());
            let back = r.parse(&r.display(&f)).unwrap();
            prop_assert_eq!(back, f);
        }
    }
}
