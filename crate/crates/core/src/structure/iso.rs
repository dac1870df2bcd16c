use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::linalg::PrimeMatrix;
use crate::repmod::ModuleRep;
use crate::weight::Weight;

use super::hom::{graded_hom_space, hom_space, HomSpace};

const RANDOM_TRIES: usize = 200;
/// Hom spaces up to this dimension are scanned exhaustively when random search fails.
const EXHAUSTIVE_DIM: usize = 6;

/// Outcome of an isomorphism test over F_p.
#[derive(Clone, Debug)]
pub enum IsoVerdict {
    /// With an invertible homomorphism `M -> N` as witness.
    Isomorphic(PrimeMatrix),
    NotIsomorphic,
    Indeterminate,
}

impl IsoVerdict {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoVerdict::Isomorphic(_))
    }

    pub fn is_not_isomorphic(&self) -> bool {
        matches!(self, IsoVerdict::NotIsomorphic)
    }

    pub fn witness(&self) -> Option<&PrimeMatrix> {
        match self {
            IsoVerdict::Isomorphic(w) => Some(w),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            IsoVerdict::Isomorphic(_) => "isomorphic",
            IsoVerdict::NotIsomorphic => "not-isomorphic",
            IsoVerdict::Indeterminate => "indeterminate",
        }
    }
}

/// Ranks of the powers of each generator and of every projective idempotent and socle element.
fn rank_profile(m: &ModuleRep) -> Vec<usize> {
    let p = m.algebra().p();
    let mut out = Vec::new();
    for g in m.action() {
        let mut x = g.clone();
        for _ in 1..p {
            out.push(x.rank());
            x = x.matmul(g);
        }
    }
    if let Ok(pims) = m.algebra().pims() {
        for pim in pims {
            out.push(m.act_element(&pim.idempotent).rank());
            out.push(m.act_element(&pim.socle_element).rank());
        }
    }
    out
}

fn sorted_weights(m: &ModuleRep) -> Option<Vec<Weight>> {
    let mut w = m.grading()?.to_vec();
    w.sort();
    Some(w)
}

fn search(h: &HomSpace, seed: u64) -> Option<PrimeMatrix> {
    if h.is_zero() {
        return None;
    }
    if let Some(b) = h.basis.iter().find(|b| b.is_invertible()) {
        return Some(b.clone());
    }
    let p = h.basis[0].field().p();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_TRIES {
        let c: Vec<u32> = (0..h.dim()).map(|_| rng.gen_range(0..p)).collect();
        let x = h.combine(&c);
        if x.is_invertible() {
            return Some(x);
        }
    }
    None
}

fn exhaustive(h: &HomSpace) -> Option<PrimeMatrix> {
    let p = h.basis[0].field().p();
    let k = h.dim();
    let mut c = vec![0u32; k];
    loop {
        let x = h.combine(&c);
        if x.is_invertible() {
            return Some(x);
        }
        let mut i = 0;
        while i < k {
            c[i] += 1;
            if c[i] < p {
                break;
            }
            c[i] = 0;
            i += 1;
        }
        if i == k {
            return None;
        }
    }
}

fn decide(m: &ModuleRep, n: &ModuleRep, h: HomSpace, end_dim: impl Fn() -> Result<usize>) -> Result<IsoVerdict> {
    if h.is_zero() {
        return Ok(IsoVerdict::NotIsomorphic);
    }
    if let Some(w) = search(&h, (m.dim() as u64) << 32 | n.dim() as u64) {
        return Ok(IsoVerdict::Isomorphic(w));
    }
    if h.dim() <= EXHAUSTIVE_DIM {
        return Ok(match exhaustive(&h) {
            Some(w) => IsoVerdict::Isomorphic(w),
            None => IsoVerdict::NotIsomorphic,
        });
    }
    if end_dim()? != h.dim() {
        return Ok(IsoVerdict::NotIsomorphic);
    }
    Ok(IsoVerdict::Indeterminate)
}

/// Isomorphism of ungraded modules.
pub fn is_isomorphic(m: &ModuleRep, n: &ModuleRep) -> Result<IsoVerdict> {
    m.require_same_algebra(n)?;
    if m.dim() != n.dim() || rank_profile(m) != rank_profile(n) {
        return Ok(IsoVerdict::NotIsomorphic);
    }
    if m.dim() == 0 {
        return Ok(IsoVerdict::Isomorphic(PrimeMatrix::zeros(m.field(), 0, 0)));
    }
    let h = hom_space(m, n)?;
    decide(m, n, h, || Ok(hom_space(m, m)?.dim()))
}

/// Isomorphism of weight-graded modules through degree-preserving maps.
pub fn is_graded_isomorphic(m: &ModuleRep, n: &ModuleRep) -> Result<IsoVerdict> {
    m.require_same_algebra(n)?;
    let (Some(wm), Some(wn)) = (sorted_weights(m), sorted_weights(n)) else {
        return Err(crate::error::Error::Ungraded);
    };
    if wm != wn || rank_profile(m) != rank_profile(n) {
        return Ok(IsoVerdict::NotIsomorphic);
    }
    if m.dim() == 0 {
        return Ok(IsoVerdict::Isomorphic(PrimeMatrix::zeros(m.field(), 0, 0)));
    }
    let zero = Weight::zero(wm[0].rank());
    let h = graded_hom_space(m, n, &zero)?;
    decide(m, n, h, || Ok(graded_hom_space(m, m, &zero)?.dim()))
}
