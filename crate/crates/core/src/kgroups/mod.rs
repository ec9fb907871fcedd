//! Smith normal form, finitely presented abelian groups, canonical
//! decompositions over the catalog rings and the class maps between
//! Grothendieck groups.

mod abgroup;
mod catalog;
mod classes;
pub mod snf;
mod unipoly;

pub use abgroup::{group_from_relations, AbGroupPresentation};
pub use catalog::{Catalog, Family, KClass, Summand};
pub use classes::{euler_class, g_pi_class, projective_rank, s0_lambda_class, theta_roundtrip, ThetaReport};
pub use snf::{smith_normal_form, IntMatrix, Smith};
pub use unipoly::UniPoly;
