//! Endotriviality, syzygies, Ext¹, the group of endotrivial classes and stable lifting.

mod cocycle;
mod lift;

pub use cocycle::Cocycles;
pub use lift::{augmentation, steinberg_lift_sequence, steinberg_projective, LiftMode};

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hopf::{Automorphism, PBWAlgebra};
use crate::linalg::{PrimeMatrix, Subspace};
use crate::repmod::{self, ModuleRep};
use crate::structure::{
    graded_hom_space, hom_space, injective_hull, is_isomorphic, projective_cover, strip_projectives,
    IsoVerdict,
};
use crate::weight::Weight;

/// Isomorphism as a boolean, with an indeterminate verdict surfaced as an error.
pub fn iso(m: &ModuleRep, n: &ModuleRep) -> Result<bool> {
    match is_isomorphic(m, n)? {
        IsoVerdict::Isomorphic(_) => Ok(true),
        IsoVerdict::NotIsomorphic => Ok(false),
        IsoVerdict::Indeterminate => Err(Error::Indeterminate),
    }
}

pub fn strip(m: &ModuleRep) -> Result<ModuleRep> {
    Ok(strip_projectives(m)?.0)
}

/// `M ⊗ M* ≅ k ⊕ projective`.
pub fn is_endotrivial(m: &ModuleRep) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    let s = strip(&repmod::tensor(m, &repmod::dual(m))?)?;
    Ok(s.dim() == 1 && s.is_trivial_action())
}

/// Kernel of the projective cover.
pub fn omega(m: &ModuleRep) -> Result<ModuleRep> {
    let c = projective_cover(m)?;
    Ok(c.module.submodule(&Subspace::kernel(&c.map))?.0)
}

/// Cokernel of the injective hull.
pub fn omega_inverse_via_hull(m: &ModuleRep) -> Result<ModuleRep> {
    let h = injective_hull(m)?;
    Ok(h.module.quotient(&Subspace::column_space(&h.map))?.0)
}

/// `Ω^n(M)` for any integer `n`, projective-free. Negative `n` uses `Ω^{-n}(M) = Ω^n(M*)*`.
pub fn syzygy(m: &ModuleRep, n: i64) -> Result<ModuleRep> {
    if n < 0 {
        return Ok(repmod::dual(&syzygy(&repmod::dual(m), -n)?));
    }
    let mut cur = strip(m)?;
    for _ in 0..n {
        cur = omega(&cur)?;
    }
    Ok(cur)
}

/// `Ω^{-n}(M)` through iterated injective hulls, for cross-checking [`syzygy`].
pub fn cosyzygy_via_hulls(m: &ModuleRep, n: usize) -> Result<ModuleRep> {
    let mut cur = strip(m)?;
    for _ in 0..n {
        cur = omega_inverse_via_hull(&cur)?;
    }
    Ok(cur)
}

/// `Ω^0(k), ..., Ω^n(k)`.
pub fn syzygy_tower(alg: &std::sync::Arc<PBWAlgebra>, n: usize) -> Result<Vec<ModuleRep>> {
    let mut out = vec![ModuleRep::trivial(alg)];
    for i in 0..n {
        out.push(omega(&out[i])?);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Ext1Component {
    pub weight: Weight,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Ext1Report {
    pub dim: usize,
    /// Nonzero weight components, sorted; present when both modules are graded.
    pub components: Option<Vec<Ext1Component>>,
}

fn restriction_rank(homs: &[PrimeMatrix], incl: &PrimeMatrix) -> usize {
    let f = incl.field();
    let vecs = homs.iter().map(|h| h.matmul(incl).data().to_vec());
    Subspace::spanned_by(f, homs.first().map_or(0, |h| h.rows() * incl.cols()), vecs).dim()
}

/// `Ext¹(M, N) = Hom(ΩM, N) / (maps extending to the projective cover)`.
pub fn ext1(m: &ModuleRep, n: &ModuleRep) -> Result<Ext1Report> {
    m.require_same_algebra(n)?;
    let c = projective_cover(m)?;
    let (om, incl) = c.module.submodule(&Subspace::kernel(&c.map))?;
    let total = hom_space(&om, n)?.dim() - restriction_rank(&hom_space(&c.module, n)?.basis, &incl);
    let components = match (om.grading(), n.grading(), c.module.grading()) {
        (Some(go), Some(gn), Some(_)) => {
            let shifts: BTreeSet<Weight> = go.iter().flat_map(|a| gn.iter().map(move |b| b - a)).collect();
            let mut comps = Vec::new();
            for nu in shifts {
                let h = graded_hom_space(&om, n, &nu)?.dim();
                if h == 0 {
                    continue;
                }
                let r = restriction_rank(&graded_hom_space(&c.module, n, &nu)?.basis, &incl);
                if h > r {
                    comps.push(Ext1Component { weight: nu, dim: h - r });
                }
            }
            Some(comps)
        }
        _ => None,
    };
    Ok(Ext1Report { dim: total, components })
}

/// Weight-preserving homomorphisms between graded modules.
pub fn graded_hom(m: &ModuleRep, n: &ModuleRep) -> Result<usize> {
    if !m.is_graded() || !n.is_graded() {
        return Err(Error::Ungraded);
    }
    let rank = m.algebra().presentation().weight_rank().ok_or(Error::Ungraded)?;
    Ok(graded_hom_space(m, n, &Weight::zero(rank))?.dim())
}

/// An endotrivial module up to projective summands.
#[derive(Clone, Debug)]
pub struct EndoClass {
    representative: ModuleRep,
}

impl EndoClass {
    pub fn new(m: &ModuleRep) -> Result<Self> {
        let representative = strip(m)?;
        if !is_endotrivial(&representative)? {
            return Err(Error::NotEndotrivial);
        }
        Ok(EndoClass { representative })
    }

    pub fn zero(alg: &std::sync::Arc<PBWAlgebra>) -> Self {
        EndoClass { representative: ModuleRep::trivial(alg) }
    }

    pub fn representative(&self) -> &ModuleRep {
        &self.representative
    }

    pub fn add(&self, other: &EndoClass) -> Result<Self> {
        Self::new(&repmod::tensor(&self.representative, &other.representative)?)
    }

    pub fn neg(&self) -> Result<Self> {
        Self::new(&repmod::dual(&self.representative))
    }

    pub fn equals(&self, other: &EndoClass) -> Result<bool> {
        iso(&self.representative, &other.representative)
    }

    pub fn is_zero(&self) -> bool {
        self.representative.dim() == 1 && self.representative.is_trivial_action()
    }
}

/// The `n` with `strip(M) ≅ Ω^n(k)` and `|n| <= bound`, smallest `|n|` first, positive before
/// negative.
pub fn syzygy_degree(m: &ModuleRep, bound: usize) -> Result<Option<i64>> {
    let s = strip(m)?;
    let k = ModuleRep::trivial(m.algebra());
    let mut up = k.clone();
    let mut down = k;
    let mut indeterminate = false;
    for n in 0..=bound as i64 {
        if n > 0 {
            up = omega(&up)?;
            down = omega_inverse_via_hull(&down)?;
        }
        let candidates: &[(i64, &ModuleRep)] = if n == 0 { &[(0, &up)] } else { &[(n, &up), (-n, &down)] };
        for &(deg, cand) in candidates {
            match is_isomorphic(&s, cand)? {
                IsoVerdict::Isomorphic(_) => return Ok(Some(deg)),
                IsoVerdict::Indeterminate => indeterminate = true,
                IsoVerdict::NotIsomorphic => {}
            }
        }
    }
    if indeterminate {
        return Err(Error::Indeterminate);
    }
    Ok(None)
}

/// `M^φ ≅ M`.
pub fn is_stable_under(m: &ModuleRep, phi: &Automorphism) -> Result<bool> {
    iso(&repmod::twist(m, phi)?, m)
}

/// The `n` with `Z ≅ M^{⊕n}`, if any.
pub fn is_direct_power(z: &ModuleRep, m: &ModuleRep) -> Result<Option<usize>> {
    if m.is_zero() || !z.dim().is_multiple_of(m.dim()) {
        return Ok(None);
    }
    if z.is_zero() {
        return Ok(Some(0));
    }
    let n = z.dim() / m.dim();
    let power = if n == 1 { m.clone() } else { repmod::direct_sum(&vec![m.clone(); n])? };
    Ok(iso(z, &power)?.then_some(n))
}

/// `K ≅ M ⊕ projective`, with `K` already restricted to the algebra of `M`.
pub fn is_stable_lift(k_restricted: &ModuleRep, m: &ModuleRep) -> Result<bool> {
    iso(&strip(k_restricted)?, &strip(m)?)
}
