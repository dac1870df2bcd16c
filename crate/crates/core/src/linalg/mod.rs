//! Exact linear algebra over prime fields.

mod field;
mod matrix;
mod subspace;

pub use field::{is_prime, PrimeField};
pub use matrix::PrimeMatrix;
pub use subspace::Subspace;
