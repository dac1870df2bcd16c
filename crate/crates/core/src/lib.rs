//! Exact computations with modules over restricted enveloping algebras of small restricted
//! Lie algebras, aimed at endotrivial modules.

pub mod census;
pub mod endotrivial;
pub mod error;
pub mod hopf;
pub mod linalg;
pub mod repmod;
pub mod repro;
pub mod structure;
pub mod weight;

pub use error::{Error, Result};
