use crate::error::{Error, Result};
use crate::linalg::PrimeMatrix;
use crate::repmod::{self, ModuleRep};
use crate::weight::Weight;

use super::radical_subspace;

/// A projective cover `P -> M`.
#[derive(Clone, Debug)]
pub struct Cover {
    pub module: ModuleRep,
    /// The surjection, `dim M x dim P`.
    pub map: PrimeMatrix,
    /// Projective indecomposable index of each summand, in order.
    pub pims: Vec<usize>,
    /// Top weight of each summand, for graded covers.
    pub tops: Vec<Option<Weight>>,
}

/// An injective hull `M -> I`.
#[derive(Clone, Debug)]
pub struct Hull {
    pub module: ModuleRep,
    /// The injection, `dim I x dim M`.
    pub map: PrimeMatrix,
    pub pims: Vec<usize>,
}

/// Vectors lying in `e_i M`, tagged with the projective index and (if graded) weight.
fn candidates(m: &ModuleRep) -> Result<Vec<(Vec<u32>, usize, Option<Weight>)>> {
    let alg = m.algebra();
    let pims = alg.pims()?;
    let n = m.dim();
    let mut out = Vec::new();
    if let (true, Some(g)) = (alg.is_triangular(), m.grading()) {
        for (c, w) in g.iter().enumerate() {
            let i = repmod::pim_index_for_weight(alg, w)?;
            let mut e = vec![0; n];
            e[c] = 1;
            out.push((e, i, Some(w.clone())));
        }
    } else {
        for (i, pim) in pims.iter().enumerate() {
            let img = crate::linalg::Subspace::column_space(&m.act_element(&pim.idempotent));
            out.extend(img.basis().iter().map(|v| (v.clone(), i, None)));
        }
    }
    Ok(out)
}

pub fn projective_cover(m: &ModuleRep) -> Result<Cover> {
    let alg = m.algebra();
    let f = m.field();
    let n = m.dim();
    let mut w = radical_subspace(m)?;
    let mut chosen = Vec::new();
    for (v, i, wt) in candidates(m)? {
        if w.is_full() {
            break;
        }
        if !w.contains(&v) {
            m.spin_into(&mut w, [v.clone()]);
            chosen.push((v, i, wt));
        }
    }
    if !w.is_full() {
        return Err(Error::NotSurjective);
    }
    let pims = alg.pims()?;
    let mut parts = Vec::with_capacity(chosen.len());
    let mut cols: Vec<Vec<u32>> = Vec::new();
    for (v, i, wt) in &chosen {
        let pm = match wt {
            Some(mu) => repmod::graded_pim(alg, mu)?,
            None => repmod::pim_module(alg, *i)?,
        };
        cols.extend(pims[*i].basis.iter().map(|b| m.apply_element(b, v)));
        parts.push(pm);
    }
    let module = if parts.is_empty() {
        let base = ModuleRep::zero(alg);
        if m.is_graded() { base } else { base.ungraded() }
    } else {
        repmod::direct_sum(&parts)?
    };
    let map = PrimeMatrix::from_columns(f, n, &cols);
    if map.rank() != n {
        return Err(Error::NotSurjective);
    }
    Ok(Cover {
        module,
        map,
        pims: chosen.iter().map(|c| c.1).collect(),
        tops: chosen.into_iter().map(|c| c.2).collect(),
    })
}

/// Dual of the projective cover of the dual.
pub fn injective_hull(m: &ModuleRep) -> Result<Hull> {
    let c = projective_cover(&repmod::dual(m))?;
    Ok(Hull { module: repmod::dual(&c.module), map: c.map.transpose(), pims: c.pims })
}
