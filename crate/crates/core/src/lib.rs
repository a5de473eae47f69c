//! Exact equivariant-localization invariants of nested Hilbert schemes of
//! points on smooth projective toric surfaces.

pub mod algebra;
pub mod cli;
pub mod engine;
pub mod error;
pub mod fock;
pub mod oracle;
pub mod partitions;
pub mod toric;
pub mod verify;
pub mod vertex;

pub use error::{Error, Result};
