use crate::error::{Error, Result};
use crate::hopf::{Automorphism, Embedding};
use crate::linalg::PrimeMatrix;
use crate::weight::Weight;

use super::module::ModuleRep;

/// `M ⊗ N` with the primitive coproduct `x ⊗ 1 + 1 ⊗ x`; weights add.
pub fn tensor(m: &ModuleRep, n: &ModuleRep) -> Result<ModuleRep> {
    m.require_same_algebra(n)?;
    let f = m.field();
    let (a, b) = (m.dim(), n.dim());
    let ia = PrimeMatrix::identity(f, a);
    let ib = PrimeMatrix::identity(f, b);
    let action = m
        .action()
        .iter()
        .zip(n.action())
        .map(|(x, y)| x.kronecker(&ib).add(&ia.kronecker(y)))
        .collect();
    let grading = match (m.grading(), n.grading()) {
        (Some(g), Some(h)) => Some(g.iter().flat_map(|u| h.iter().map(move |v| u + v)).collect()),
        _ => None,
    };
    Ok(ModuleRep::from_parts(m.algebra().clone(), a * b, action, grading))
}

/// `M^{⊗k}`, with `M^{⊗0} = k`.
pub fn tensor_power(m: &ModuleRep, k: usize) -> Result<ModuleRep> {
    let mut acc = ModuleRep::trivial(m.algebra());
    if !m.is_graded() {
        acc = acc.ungraded();
    }
    for _ in 0..k {
        acc = tensor(&acc, m)?;
    }
    Ok(acc)
}

/// `M* = Hom(M, k)` with `x` acting by `-ρ(x)^T` in the dual basis; weights negate.
pub fn dual(m: &ModuleRep) -> ModuleRep {
    let action = m.action().iter().map(|x| x.transpose().neg()).collect();
    let grading = m.grading().map(|g| g.iter().map(|w| -w).collect());
    ModuleRep::from_parts(m.algebra().clone(), m.dim(), action, grading)
}

/// Block-diagonal direct sum; graded only if every summand is.
pub fn direct_sum(parts: &[ModuleRep]) -> Result<ModuleRep> {
    let first = parts.first().ok_or_else(|| Error::InvalidModule("empty direct sum".into()))?;
    for p in &parts[1..] {
        first.require_same_algebra(p)?;
    }
    let dim = parts.iter().map(|p| p.dim()).sum();
    let action = (0..first.algebra().ngens())
        .map(|i| {
            parts[1..].iter().fold(first.gen_action(i).clone(), |acc, p| acc.block_diag(p.gen_action(i)))
        })
        .collect();
    let grading = parts
        .iter()
        .map(|p| p.grading().map(|g| g.to_vec()))
        .collect::<Option<Vec<_>>>()
        .map(|v| v.concat());
    Ok(ModuleRep::from_parts(first.algebra().clone(), dim, action, grading))
}

/// `M^φ`: the same space with `x` acting as `φ(x)`.
pub fn twist(m: &ModuleRep, phi: &Automorphism) -> Result<ModuleRep> {
    if !m.algebra().as_ref().eq(phi.algebra().as_ref()) {
        return Err(Error::AlgebraMismatch);
    }
    let action = combine_actions(m, phi.images());
    let grading = m
        .grading()
        .and_then(|g| g.iter().map(|w| phi.map_weight(w)).collect::<Option<Vec<_>>>());
    let out = ModuleRep::from_parts(m.algebra().clone(), m.dim(), action, grading);
    Ok(keep_valid_grading(out))
}

/// Restriction along an embedding into the module's algebra.
pub fn restrict(m: &ModuleRep, emb: &Embedding) -> Result<ModuleRep> {
    if !m.algebra().as_ref().eq(emb.target().as_ref()) {
        return Err(Error::AlgebraMismatch);
    }
    let action = combine_actions(m, emb.images());
    let grading = if emb.source().presentation().is_graded() { m.grading().map(|g| g.to_vec()) } else { None };
    let out = ModuleRep::from_parts(emb.source().clone(), m.dim(), action, grading);
    Ok(keep_valid_grading(out))
}

/// `M ⊗ χ(w)`: shifts every weight by `w`.
pub fn shift(m: &ModuleRep, w: &Weight) -> Result<ModuleRep> {
    if !m.is_graded() {
        return Err(Error::Ungraded);
    }
    tensor(m, &super::character(m.algebra(), w)?)
}

fn combine_actions(m: &ModuleRep, images: &[Vec<u32>]) -> Vec<PrimeMatrix> {
    let n = m.dim();
    images
        .iter()
        .map(|img| {
            let mut acc = PrimeMatrix::zeros(m.field(), n, n);
            for (k, &c) in img.iter().enumerate() {
                if c != 0 {
                    acc.add_scaled_assign(c, m.gen_action(k));
                }
            }
            acc
        })
        .collect()
}

fn keep_valid_grading(m: ModuleRep) -> ModuleRep {
    if m.is_graded() && m.grading_violation().is_some() {
        m.ungraded()
    } else {
        m
    }
}
