pub mod cli;
pub mod error;
pub mod gorenstein;
pub mod kgroups;
pub mod module;
pub mod resolution;
pub mod ring;

pub use error::{Error, Result};
