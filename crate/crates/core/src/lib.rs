//! Exact computations in Grothendieck-Verdier categories: bimodule and group
//! representation backends, coherence and duality checks, Frobenius algebras
//! and higher Frobenius-Schur indicators.

pub mod error;
pub mod algebra;
pub mod exactla;
pub mod gvcore;
pub mod bimodcat;
pub mod repgcat;
pub mod frobenius;
pub mod indicators;
pub mod cli;

pub use error::{Error, Result};
