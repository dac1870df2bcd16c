//! Radical, socle, Hom spaces, projective splitting, isomorphism and decomposition.

mod cover;
mod decompose;
mod hom;
mod iso;
mod split;

pub use cover::{injective_hull, projective_cover, Cover, Hull};
pub use decompose::{decompose, decompose_with_budget, fitting_split, is_local, Decomposition, Summand};
pub use hom::{graded_hom_space, hom_space, hom_space_naive, is_homomorphism, FreePresentation, HomSpace, HomSummary};
pub use iso::{is_graded_isomorphic, is_isomorphic, IsoVerdict};
pub use split::{dade_split, strip_projectives, SplitResult};

use crate::error::Result;
use crate::linalg::{PrimeMatrix, Subspace};
use crate::repmod::ModuleRep;

fn radical_matrices(m: &ModuleRep) -> Result<Vec<PrimeMatrix>> {
    let gens = m.algebra().radical_gens()?;
    Ok(gens.iter().map(|j| m.act_element(j)).collect())
}

/// `rad(A) M` as a subspace.
pub fn radical_subspace(m: &ModuleRep) -> Result<Subspace> {
    let mats = radical_matrices(m)?;
    let vecs: Vec<Vec<u32>> = mats.iter().flat_map(|r| r.columns()).collect();
    Ok(m.spin(vecs))
}

/// Vectors killed by the radical of the algebra.
pub fn socle_subspace(m: &ModuleRep) -> Result<Subspace> {
    let mats = radical_matrices(m)?;
    let stacked = mats
        .iter()
        .fold(PrimeMatrix::zeros(m.field(), 0, m.dim()), |acc, r| acc.vstack(r));
    Ok(Subspace::kernel(&stacked))
}

/// The radical with its inclusion.
pub fn radical(m: &ModuleRep) -> Result<(ModuleRep, PrimeMatrix)> {
    m.submodule(&radical_subspace(m)?)
}

/// The socle with its inclusion.
pub fn socle(m: &ModuleRep) -> Result<(ModuleRep, PrimeMatrix)> {
    m.submodule(&socle_subspace(m)?)
}

/// `M / rad M` with its projection.
pub fn top(m: &ModuleRep) -> Result<(ModuleRep, PrimeMatrix)> {
    m.quotient(&radical_subspace(m)?)
}
