use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hopf::{AlgebraClass, PBWAlgebra};
use crate::linalg::{PrimeMatrix, Subspace};
use crate::repmod::{self, ModuleRep};
use crate::structure::{graded_hom_space, hom_space, strip_projectives};
use crate::weight::Weight;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LiftMode {
    /// `K_{m+1} = ker(P ⊗ K_m -> K_m)` exactly.
    Full,
    /// Projective summands are stripped from each `K_m` before tensoring; stably equivalent.
    Reduced,
}

/// A nonzero map `P -> k`, degree-preserving when both are graded.
pub fn augmentation(p: &ModuleRep) -> Result<PrimeMatrix> {
    let k = ModuleRep::trivial(p.algebra());
    let h = match (p.grading(), k.grading()) {
        (Some(_), Some(g)) => graded_hom_space(p, &k, &Weight::zero(g[0].rank()))?,
        _ => hom_space(p, &k)?,
    };
    h.basis.into_iter().next().ok_or(Error::NotSurjective)
}

/// The projective used for lifting: `St ⊗ St` for `sl2`, the graded projective cover of `k`
/// for triangular algebras.
pub fn steinberg_projective(alg: &Arc<PBWAlgebra>) -> Result<ModuleRep> {
    match alg.class() {
        AlgebraClass::Sl2G1 => {
            let st = repmod::weyl_sl2(alg, alg.p() - 1)?;
            repmod::tensor(&st, &st)
        }
        AlgebraClass::Triangular { .. } => match alg.presentation().weight_rank() {
            Some(r) => repmod::graded_pim(alg, &Weight::zero(r)),
            None => repmod::pim_module(alg, 0),
        },
        AlgebraClass::Unsupported(why) => Err(Error::UnsupportedAlgebra(why.clone())),
    }
}

/// `K_0 = k, ..., K_n`, where `K_{m+1}` is the kernel of `ε ⊗ 1: P ⊗ K_m -> K_m`.
pub fn steinberg_lift_sequence(
    p: &ModuleRep,
    eps: &PrimeMatrix,
    n: usize,
    mode: LiftMode,
) -> Result<Vec<ModuleRep>> {
    if eps.rows() != 1 || eps.cols() != p.dim() || eps.is_zero() {
        return Err(Error::NotSurjective);
    }
    let k = ModuleRep::trivial(p.algebra());
    if !crate::structure::is_homomorphism(p, &k, eps) {
        return Err(Error::InvalidModule("augmentation is not a module map".into()));
    }
    let mut out = vec![k];
    for m in 0..n {
        let km = &out[m];
        let t = repmod::tensor(p, km)?;
        let map = eps.kronecker(&PrimeMatrix::identity(p.field(), km.dim()));
        let (next, _) = t.submodule(&Subspace::kernel(&map))?;
        let next = match mode {
            LiftMode::Full => next,
            LiftMode::Reduced => strip_projectives(&next)?.0,
        };
        out.push(next);
    }
    Ok(out)
}
