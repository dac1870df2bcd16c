//! Splitting off projective summands with the socle-rank criterion: if `u` spans the
//! socle of a projective indecomposable `P` and `t` is the rank of `u` on `P`, then the
//! multiplicity of `P` as a summand of `M` is `rank(u on M) / t`.

use crate::error::{Error, Result};
use crate::linalg::{PrimeMatrix, Subspace};
use crate::repmod::ModuleRep;

#[derive(Clone, Debug)]
pub struct SplitResult {
    pub pim: usize,
    pub multiplicity: usize,
    /// Rank of the socle element on `M`.
    pub rank: usize,
    pub t: usize,
    /// The summand `P^a` as a submodule of `M`.
    pub projective_part: Subspace,
    /// `M / P^a`, isomorphic to a complement of `P^a`.
    pub complement: ModuleRep,
    pub projection: PrimeMatrix,
}

pub fn dade_split(m: &ModuleRep, pim_index: usize) -> Result<SplitResult> {
    let alg = m.algebra();
    let pims = alg.pims()?;
    let pim = pims
        .get(pim_index)
        .ok_or_else(|| Error::Split(format!("no projective with index {pim_index}")))?;
    let f = m.field();
    let n = m.dim();
    let u = m.act_element(&pim.socle_element);
    let rank = u.rank();
    if !rank.is_multiple_of(pim.t) {
        return Err(Error::Split(format!("rank {rank} is not a multiple of t = {}", pim.t)));
    }
    let expected = rank / pim.t;
    let mut w = Subspace::zero(f, n);
    let mut count = 0;
    for c in 0..n {
        let uc = u.column(c);
        if w.contains(&uc) {
            continue;
        }
        let mut e = vec![0; n];
        e[c] = 1;
        let v = m.apply_element(&pim.idempotent, &e);
        let before = w.dim();
        m.spin_into(&mut w, [v]);
        if w.dim() - before != pim.dim() {
            return Err(Error::Split(format!(
                "map from {} is not injective (image of dimension {})",
                pim.label,
                w.dim() - before
            )));
        }
        count += 1;
    }
    if count != expected {
        return Err(Error::Split(format!("split off {count} copies, rank predicts {expected}")));
    }
    let (complement, projection) = m.quotient(&w)?;
    Ok(SplitResult {
        pim: pim_index,
        multiplicity: count,
        rank,
        t: pim.t,
        projective_part: w,
        complement,
        projection,
    })
}

/// Removes every projective summand. Returns the projective-free part and the
/// multiplicity of each projective indecomposable that was removed.
pub fn strip_projectives(m: &ModuleRep) -> Result<(ModuleRep, Vec<usize>)> {
    let k = m.algebra().pims()?.len();
    let mut cur = m.clone();
    let mut counts = Vec::with_capacity(k);
    for i in 0..k {
        let s = dade_split(&cur, i)?;
        counts.push(s.multiplicity);
        cur = s.complement;
    }
    Ok((cur, counts))
}
