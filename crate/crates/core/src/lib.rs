//! Fixed-point localization on affine Laumon spaces, their generating
//! functions, and the vacuum characters of the associated iterated W-algebras.

pub mod characters;
pub mod cli;
pub mod closed_form;
pub mod error;
pub mod localization;
pub mod partitions;
pub mod series;

pub use error::{Error, Result};
pub use partitions::Partition;
pub use series::{Monomial, Series, VariableSpace};
