//! Finitely presented modules, homomorphisms between them, duals and
//! change-of-ring constructions.

mod dual;
mod fpmodule;
mod map;
mod matrix;
mod transport;
mod truncation;

pub use dual::{double_dual_map, dual_map, dual_module, DoubleDual, DualModule, DualityVerdict};
pub(crate) use fpmodule::unit;
pub use fpmodule::{subquotient, FPModule, SubmoduleOfFree};
pub use map::{homology, kernel_of_map, ModuleMap};
pub use matrix::Matrix;
pub use transport::{
    matrix_rank, module_rank, polynomial_extension, quotient_by_regular_element,
    restrict_along_quotient, restrict_scalars_monic, PolynomialExtension,
};
pub use truncation::{intersect_with_truncation, intersection_criterion_check, IntersectionCriterion};
