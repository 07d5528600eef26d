//! Exact field arithmetic and dense linear algebra.

mod field;
mod mat;

pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use mat::Mat;
