//! Cohomology jumping loci of finitely presented groups.

pub mod artin;
pub mod cli;
pub mod error;
pub mod fpgroup;
pub mod jumploci;
pub mod obstruct;
pub mod polyalg;

pub use error::{Error, Result};
