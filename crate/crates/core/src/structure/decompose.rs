//! Krull-Schmidt decomposition by Fitting splitting of endomorphisms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::hom::{hom_space, HomSpace};
use crate::error::Result;
use crate::linalg::{PrimeMatrix, Subspace};
use crate::repmod::ModuleRep;

/// Random endomorphisms tried before a summand is declared indecomposable.
pub const DEFAULT_SPLIT_TRIES: usize = 48;

#[derive(Clone, Debug)]
pub struct Summand {
    pub module: ModuleRep,
    /// Columns span the summand inside the original module.
    pub embedding: PrimeMatrix,
    /// Whether the endomorphism ring was certified local.
    pub certified: bool,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub summands: Vec<Summand>,
    /// All summands certified indecomposable.
    pub certified: bool,
}

impl Decomposition {
    pub fn dims(&self) -> Vec<usize> {
        self.summands.iter().map(|s| s.module.dim()).collect()
    }
}

/// Image and kernel of the stable power of `phi`, if that splits the space nontrivially.
pub fn fitting_split(phi: &PrimeMatrix) -> Option<(Subspace, Subspace)> {
    let n = phi.rows();
    let mut q = phi.clone();
    let mut r = q.rank();
    loop {
        if r == 0 || r == n {
            return None;
        }
        let q2 = q.matmul(&q);
        let r2 = q2.rank();
        if r2 == r {
            break;
        }
        q = q2;
        r = r2;
    }
    Some((Subspace::column_space(&q), Subspace::kernel(&q)))
}

/// Whether `End(M)`, given by a basis, is local with residue field `F_p`: every basis element
/// is a scalar plus a nilpotent, and those nilpotent parts generate a nilpotent algebra.
pub fn is_local(end: &HomSpace) -> bool {
    let n = end.source_dim;
    if n == 0 {
        return false;
    }
    let f = end.basis[0].field();
    let mut nil = Vec::new();
    for phi in &end.basis {
        let found = (0..f.p()).find_map(|lam| {
            let psi = phi.sub(&PrimeMatrix::scalar(f, n, lam));
            psi.nilpotency_index().map(|_| psi)
        });
        match found {
            Some(psi) if !psi.is_zero() => nil.push(psi),
            Some(_) => {}
            None => return false,
        }
    }
    let as_vec = |m: &PrimeMatrix| m.data().to_vec();
    let mut w = Subspace::spanned_by(f, n * n, nil.iter().map(as_vec));
    for _ in 0..=n {
        if w.is_zero() {
            return true;
        }
        let mats: Vec<PrimeMatrix> = w
            .basis()
            .iter()
            .map(|v| PrimeMatrix::from_vec(f, n, n, v.clone()).expect("shape"))
            .collect();
        let mut next = Subspace::zero(f, n * n);
        for a in &nil {
            for b in &mats {
                next.insert(as_vec(&a.matmul(b)));
            }
        }
        w = next;
    }
    w.is_zero()
}

fn try_split(
    end: &HomSpace,
    rng: &mut ChaCha8Rng,
    tries: usize,
) -> Option<(Subspace, Subspace)> {
    let f = end.basis[0].field();
    let n = end.source_dim;
    let attempt = |phi: &PrimeMatrix| {
        (0..f.p()).find_map(|lam| fitting_split(&phi.sub(&PrimeMatrix::scalar(f, n, lam))))
    };
    for phi in &end.basis {
        if let Some(s) = attempt(phi) {
            return Some(s);
        }
    }
    for _ in 0..tries {
        let coeffs: Vec<u32> = (0..end.dim()).map(|_| rng.gen_range(0..f.p())).collect();
        if let Some(s) = attempt(&end.combine(&coeffs)) {
            return Some(s);
        }
    }
    None
}

pub fn decompose(m: &ModuleRep, seed: u64) -> Result<Decomposition> {
    decompose_with_budget(m, seed, DEFAULT_SPLIT_TRIES)
}

/// Splits `M` into summands. Summands whose endomorphism ring could not be certified local
/// within the budget are returned with `certified = false`.
pub fn decompose_with_budget(m: &ModuleRep, seed: u64, tries: usize) -> Result<Decomposition> {
    let f = m.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut work = vec![(m.clone(), PrimeMatrix::identity(f, m.dim()))];
    let mut out = Vec::new();
    while let Some((x, emb)) = work.pop() {
        if x.dim() == 0 {
            continue;
        }
        if x.dim() == 1 {
            out.push(Summand { module: x, embedding: emb, certified: true });
            continue;
        }
        let end = hom_space(&x, &x)?;
        if end.dim() == 1 {
            out.push(Summand { module: x, embedding: emb, certified: true });
            continue;
        }
        match try_split(&end, &mut rng, tries) {
            Some((im, ker)) => {
                let (a, ia) = x.submodule(&im)?;
                let (b, ib) = x.submodule(&ker)?;
                work.push((b, emb.matmul(&ib)));
                work.push((a, emb.matmul(&ia)));
            }
            None => {
                let certified = is_local(&end);
                out.push(Summand { module: x, embedding: emb, certified });
            }
        }
    }
    out.sort_by_key(|s| s.module.dim());
    let certified = out.iter().all(|s| s.certified);
    Ok(Decomposition { summands: out, certified })
}
