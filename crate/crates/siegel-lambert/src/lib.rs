//! Numerical verification of Lambert-series identities for Rankin-Selberg
//! Dirichlet series attached to Siegel cusp forms.

pub mod error;
pub mod characters;
pub mod special;
pub mod summation;

pub use error::{Error, Result};
