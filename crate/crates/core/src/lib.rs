//! Exact computations in finite-dimensional nonassociative algebras.

pub mod algebra;
pub mod analysis;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod linalg;
pub mod sampling;
pub mod scalars;
pub mod zerodiv;

pub use error::{Error, Result};
