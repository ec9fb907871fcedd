//! Ext modules, the G-class test, complete-resolution windows and bounded
//! Gorenstein projective dimension.

mod complete;
mod ext;
mod gclass;

pub use complete::{complete_resolution_check, CompleteResolutionWindow, WindowKind};
pub use ext::{ext_from_resolution, ext_module, ExtResult};
pub use gclass::{
    g_class_test, gpd_bounded, gpd_polynomial_compare, is_catalog_self_injective, CertifiedBy,
    GClassReport, GCondition, GFailure, GVerdict, GpdComparison, GpdVerdict,
};
