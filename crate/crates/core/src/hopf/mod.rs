//! Restricted enveloping algebras and their Hopf structure.

mod algebra;
mod automorphism;
pub mod blocks;
pub mod eval;
mod presentation;
mod presets;

pub use algebra::{AlgebraClass, PBWAlgebra, MAX_ALGEBRA_DIM};
pub use automorphism::{character_value, Automorphism, Embedding};
pub use blocks::{BlockData, Pim, Simple};
pub use presentation::{Presentation, PresentationData, PresentationFile};
pub use presets::{preset, PRESET_NAMES};
