use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hopf::{blocks, AlgebraClass, PBWAlgebra};
use crate::linalg::PrimeMatrix;
use crate::weight::Weight;

use super::module::ModuleRep;

/// One-dimensional module of weight `w`: coroots act by the pairing, everything else by zero.
pub fn character(alg: &Arc<PBWAlgebra>, w: &Weight) -> Result<ModuleRep> {
    let pres = alg.presentation();
    let f = alg.field();
    if pres.weight_rank() != Some(w.rank()) {
        return Err(Error::Ungraded);
    }
    let action = (0..alg.ngens())
        .map(|i| match pres.coroot(i) {
            Some(r) => Ok(PrimeMatrix::scalar(f, 1, f.reduce(w.pair(r)))),
            None if pres.nilpotent()[i] => Ok(PrimeMatrix::zeros(f, 1, 1)),
            None => Err(Error::UnsupportedAlgebra(format!(
                "toral generator {} has no coroot",
                pres.basis_names()[i]
            ))),
        })
        .collect::<Result<Vec<_>>>()?;
    ModuleRep::new(alg.clone(), action, Some(vec![w.clone()]))
}

/// Trivial module with weights `p * w` for each listed `w`, i.e. a Frobenius twist of a
/// torus module.
pub fn frobenius_twist_trivial(alg: &Arc<PBWAlgebra>, weights: &[Weight]) -> Result<ModuleRep> {
    let p = alg.p() as i64;
    let f = alg.field();
    let n = weights.len();
    let grading = weights.iter().map(|w| p * w).collect();
    ModuleRep::new(alg.clone(), vec![PrimeMatrix::zeros(f, n, n); alg.ngens()], Some(grading))
}

/// Index of the projective indecomposable whose top has the toral character of `w`.
pub fn pim_index_for_weight(alg: &PBWAlgebra, w: &Weight) -> Result<usize> {
    let AlgebraClass::Triangular { toral, .. } = alg.class() else {
        return Err(Error::UnsupportedAlgebra("weight-indexed projectives need a triangular algebra".into()));
    };
    let pres = alg.presentation();
    let f = alg.field();
    let mut idx = 0;
    for &t in toral {
        let r = pres.coroot(t).ok_or(Error::Ungraded)?;
        idx = idx * alg.p() + f.reduce(w.pair(r)) as usize;
    }
    Ok(idx)
}

/// The `i`-th projective indecomposable, ungraded.
pub fn pim_module(alg: &Arc<PBWAlgebra>, i: usize) -> Result<ModuleRep> {
    let pim = alg
        .pims()?
        .get(i)
        .ok_or_else(|| Error::InvalidModule(format!("no projective with index {i}")))?;
    Ok(ModuleRep::from_parts(alg.clone(), pim.dim(), pim.action.clone(), None))
}

/// The projective cover of the character `mu`, graded with top weight `mu`.
pub fn graded_pim(alg: &Arc<PBWAlgebra>, mu: &Weight) -> Result<ModuleRep> {
    let i = pim_index_for_weight(alg, mu)?;
    let pim = &alg.pims()?[i];
    let offsets = pim.weight_offsets.as_ref().ok_or(Error::Ungraded)?;
    let grading = offsets.iter().map(|o| mu + o).collect();
    Ok(ModuleRep::from_parts(alg.clone(), pim.dim(), pim.action.clone(), Some(grading)))
}

/// The `i`-th simple module; graded when its weights are known.
pub fn simple_module(alg: &Arc<PBWAlgebra>, i: usize) -> Result<ModuleRep> {
    let s = alg
        .simples()?
        .get(i)
        .ok_or_else(|| Error::InvalidModule(format!("no simple with index {i}")))?;
    let grading = if alg.presentation().is_graded() { s.weights.clone() } else { None };
    Ok(ModuleRep::from_parts(alg.clone(), s.dim(), s.action.clone(), grading))
}

/// Weyl module `V(m)` of `sl2` with highest weight `m`, restricted to `u(sl2)`.
pub fn weyl_sl2(alg: &Arc<PBWAlgebra>, m: usize) -> Result<ModuleRep> {
    if *alg.class() != AlgebraClass::Sl2G1 {
        return Err(Error::UnsupportedAlgebra("Weyl modules are provided for sl2 only".into()));
    }
    let action = blocks::weyl_sl2_matrices(alg.field(), m);
    let grading = (0..=m).map(|i| Weight(vec![m as i64 - 2 * i as i64])).collect();
    ModuleRep::new(alg.clone(), action, Some(grading))
}

/// The natural three-dimensional module of `sl3` restricted to a subalgebra spanned by some of
/// `h1, h2, f1, f2, f12`, with `f1 = E21`, `f2 = E32`, `f12 = -E31`.
pub fn natural_sl3(alg: &Arc<PBWAlgebra>) -> Result<ModuleRep> {
    let pres = alg.presentation();
    let f = alg.field();
    let mat = |entries: &[(usize, usize, i64)]| {
        let mut m = PrimeMatrix::zeros(f, 3, 3);
        for &(r, c, x) in entries {
            m.set(r, c, f.reduce(x));
        }
        m
    };
    let action = pres
        .basis_names()
        .iter()
        .map(|name| match name.as_str() {
            "h1" => Ok(mat(&[(0, 0, 1), (1, 1, -1)])),
            "h2" => Ok(mat(&[(1, 1, 1), (2, 2, -1)])),
            "f1" => Ok(mat(&[(1, 0, 1)])),
            "f2" => Ok(mat(&[(2, 1, 1)])),
            "f12" => Ok(mat(&[(2, 0, -1)])),
            other => Err(Error::UnsupportedAlgebra(format!("no natural action for generator {other}"))),
        })
        .collect::<Result<Vec<_>>>()?;
    let grading = (pres.weight_rank() == Some(2))
        .then(|| vec![Weight(vec![1, 0]), Weight(vec![-1, 1]), Weight(vec![0, -1])]);
    ModuleRep::new(alg.clone(), action, grading)
}

/// The nilpotent ideal spanned by the nilpotent generators, under the adjoint action.
pub fn adjoint_nilradical(alg: &Arc<PBWAlgebra>) -> Result<ModuleRep> {
    let AlgebraClass::Triangular { nilpotent, .. } = alg.class() else {
        return Err(Error::UnsupportedAlgebra("adjoint nilradical needs a triangular algebra".into()));
    };
    let pres = alg.presentation();
    let f = alg.field();
    let k = nilpotent.len();
    let action = (0..alg.ngens())
        .map(|i| {
            let mut m = PrimeMatrix::zeros(f, k, k);
            for (c, &j) in nilpotent.iter().enumerate() {
                let b = pres.bracket(i, j);
                for (r, &jj) in nilpotent.iter().enumerate() {
                    m.set(r, c, b[jj]);
                }
            }
            m
        })
        .collect();
    let grading = pres.weights().map(|ws| nilpotent.iter().map(|&j| ws[j].clone()).collect());
    ModuleRep::new(alg.clone(), action, grading)
}
