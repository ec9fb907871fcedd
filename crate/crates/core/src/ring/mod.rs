//! Exact coefficients, polynomials, Groebner bases and quotient rings.

mod field;
pub mod groebner;
pub mod linalg;
mod monomial;
mod parse;
mod poly;
mod quotient;

pub use field::{is_prime, Coeff, Field};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{Poly, PolyRing, DEFAULT_DEGREE_GUARD};
pub use quotient::{groebner_basis, Ideal, QuotRing};

pub(crate) use quotient::standard_monomials_of;
