//! Enumeration of F_p-points of representation varieties and counting of endotrivial
//! isomorphism classes of a fixed dimension.

use std::sync::Arc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::endotrivial::is_endotrivial;
use crate::error::{Error, Result};
use crate::hopf::PBWAlgebra;
use crate::linalg::PrimeMatrix;
use crate::repmod::{self, ModuleRep};
use crate::structure::{decompose, hom_space, is_isomorphic, IsoVerdict};

pub const DEFAULT_BUDGET: u64 = 1 << 26;
pub const DEFAULT_SAMPLES: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ScanMode {
    Exhaustive,
    Sampled,
}

#[derive(Clone, Debug)]
pub struct CensusOptions {
    pub mode: ScanMode,
    /// Candidate draws in sampled mode.
    pub samples: u64,
    pub seed: u64,
    /// Largest number of candidate tuples an exhaustive scan may visit.
    pub budget: u64,
    /// For one-generator algebras with `x^[p] = 0`, scan Jordan forms instead of all matrices.
    pub orbit_reduction: bool,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            mode: ScanMode::Exhaustive,
            samples: DEFAULT_SAMPLES,
            seed: 0,
            budget: DEFAULT_BUDGET,
            orbit_reduction: true,
        }
    }
}

/// A tuple of generator matrices satisfying every relation.
#[derive(Clone, Debug, PartialEq)]
pub struct VarietyPoint {
    pub action: Vec<PrimeMatrix>,
}

impl VarietyPoint {
    pub fn module(&self, alg: &Arc<PBWAlgebra>) -> ModuleRep {
        if self.action.first().map_or(0, |m| m.rows()) == 0 {
            return ModuleRep::zero(alg).ungraded();
        }
        ModuleRep::new(alg.clone(), self.action.clone(), None).expect("variety points satisfy the relations")
    }
}

fn decode(alg: &PBWAlgebra, n: usize, digits: &[u32]) -> Vec<PrimeMatrix> {
    let f = alg.field();
    digits
        .chunks(n * n)
        .map(|c| PrimeMatrix::from_vec(f, n, n, c.to_vec()).expect("shape"))
        .collect()
}

fn relations_hold(alg: &PBWAlgebra, action: &[PrimeMatrix]) -> bool {
    action.first().is_none_or(|m| m.rows() == 0) || alg.first_violation(action).is_none()
}

/// Number of candidate tuples `p^(d n^2)`, or `None` on overflow.
pub fn candidate_count(alg: &PBWAlgebra, n: usize) -> Option<u64> {
    (alg.p() as u64).checked_pow((alg.ngens() * n * n) as u32)
}

fn orbit_reducible(alg: &PBWAlgebra) -> bool {
    alg.ngens() == 1 && alg.presentation().p_power(0).iter().all(|&c| c == 0)
}

fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn jordan_nilpotent(alg: &PBWAlgebra, n: usize, blocks: &[usize]) -> PrimeMatrix {
    let mut m = PrimeMatrix::zeros(alg.field(), n, n);
    let mut start = 0;
    for &b in blocks {
        for i in 0..b.saturating_sub(1) {
            m.set(start + i + 1, start + i, 1);
        }
        start += b;
    }
    m
}

/// All points in lexicographic order, every sampled candidate that satisfies the relations,
/// or (with orbit reduction) one nilpotent Jordan form per conjugacy class. Returns the points
/// and the number of candidates scanned.
pub fn enumerate_points(alg: &PBWAlgebra, n: usize, opts: &CensusOptions) -> Result<(Vec<VarietyPoint>, u64)> {
    if n == 0 {
        return Ok((vec![VarietyPoint { action: vec![PrimeMatrix::zeros(alg.field(), 0, 0); alg.ngens()] }], 1));
    }
    let p = alg.p() as u32;
    let len = alg.ngens() * n * n;
    match opts.mode {
        ScanMode::Exhaustive if opts.orbit_reduction && orbit_reducible(alg) => {
            let parts = partitions(n, alg.p());
            let scanned = parts.len() as u64;
            let pts = parts
                .iter()
                .map(|b| VarietyPoint { action: vec![jordan_nilpotent(alg, n, b)] })
                .filter(|pt| relations_hold(alg, &pt.action))
                .collect();
            Ok((pts, scanned))
        }
        ScanMode::Exhaustive => {
            let total = candidate_count(alg, n).filter(|&c| c <= opts.budget).ok_or_else(|| {
                Error::BudgetExceeded(format!("{p}^{len} candidates exceed the budget of {}", opts.budget))
            })?;
            let mut pts = Vec::new();
            let mut digits = vec![0u32; len];
            for _ in 0..total {
                let action = decode(alg, n, &digits);
                if relations_hold(alg, &action) {
                    pts.push(VarietyPoint { action });
                }
                for d in digits.iter_mut().rev() {
                    *d += 1;
                    if *d < p {
                        break;
                    }
                    *d = 0;
                }
            }
            Ok((pts, total))
        }
        ScanMode::Sampled => {
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            let mut pts = Vec::new();
            for _ in 0..opts.samples {
                let digits: Vec<u32> = (0..len).map(|_| rng.gen_range(0..p)).collect();
                let action = decode(alg, n, &digits);
                if relations_hold(alg, &action) {
                    pts.push(VarietyPoint { action });
                }
            }
            Ok((pts, opts.samples))
        }
    }
}

/// Closed-set criterion: `rank(u_i on M ⊗ L_σ) < s t_i`, i.e. `M ⊗ L_σ` has no submodule `P_i^s`.
pub fn no_projective_submodule_test(m: &ModuleRep, sigma: &VarietyPoint, i: usize, s: usize) -> Result<bool> {
    let alg = m.algebra();
    let pim = alg
        .pims()?
        .get(i)
        .ok_or_else(|| Error::Split(format!("no projective with index {i}")))?;
    let l = sigma.module(alg);
    let t = repmod::tensor(&m.ungraded(), &l)?;
    Ok(t.act_element(&pim.socle_element).rank() < s * pim.t)
}

/// The modules `χ ⊗ M` over all one-dimensional modules `χ`, up to isomorphism.
pub fn one_dim_twist_orbit(alg: &Arc<PBWAlgebra>, m: &ModuleRep) -> Result<Vec<ModuleRep>> {
    let mut out: Vec<ModuleRep> = Vec::new();
    for (i, s) in alg.simples()?.iter().enumerate() {
        if s.dim() != 1 {
            continue;
        }
        let chi = repmod::simple_module(alg, i)?.ungraded();
        let t = repmod::tensor(&chi, &m.ungraded())?;
        let mut seen = false;
        for o in &out {
            if !is_isomorphic(o, &t)?.is_not_isomorphic() {
                seen = true;
                break;
            }
        }
        if !seen {
            out.push(t);
        }
    }
    Ok(out)
}

fn gl_order(n: usize, q: u128) -> Option<u128> {
    let qn = q.checked_pow(n as u32)?;
    (0..n).try_fold(1u128, |acc, i| acc.checked_mul(qn - q.pow(i as u32)))
}

/// Size of the conjugation orbit of `M`: `|GL_n| / |Aut(M)|`, assuming every indecomposable
/// summand has endomorphism ring with residue field F_p.
pub fn orbit_size(m: &ModuleRep) -> Result<Option<u128>> {
    let q = m.field().p() as u128;
    let dec = decompose(m, 0)?;
    if !dec.certified {
        return Ok(None);
    }
    let mut classes: Vec<(ModuleRep, usize)> = Vec::new();
    'outer: for s in &dec.summands {
        for (rep, count) in classes.iter_mut() {
            if is_isomorphic(rep, &s.module)?.is_isomorphic() {
                *count += 1;
                continue 'outer;
            }
        }
        classes.push((s.module.clone(), 1));
    }
    let end_dim = hom_space(m, m)?.dim();
    let semisimple: usize = classes.iter().map(|(_, c)| c * c).sum();
    let mut aut = q.checked_pow((end_dim - semisimple) as u32);
    for (_, c) in &classes {
        aut = aut.and_then(|a| gl_order(*c, q).and_then(|g| a.checked_mul(g)));
    }
    Ok(aut.zip(gl_order(m.dim(), q)).map(|(a, g)| g / a))
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassRecord {
    pub dim: usize,
    /// Generator matrices of the representative, row-major residues.
    pub action: Vec<Vec<Vec<u32>>>,
    pub summand_dims: Vec<usize>,
    /// Endotrivial points found in this class by the scan.
    pub points_found: u64,
    /// `|GL_n(F_p)| / |Aut(M)|`, when computable.
    pub orbit_size: Option<u128>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusReport {
    pub algebra: String,
    pub p: u32,
    pub n: usize,
    pub field_size: u32,
    pub mode: ScanMode,
    pub orbit_reduction: bool,
    pub seed: u64,
    pub points_scanned: u64,
    pub valid_points: u64,
    pub endotrivial_points: u64,
    pub class_count: usize,
    pub classes: Vec<ClassRecord>,
    /// Endotrivial points whose class could not be decided.
    pub indeterminate_points: u64,
    pub wall_time_ms: u64,
}

pub fn endotrivial_census(alg: &Arc<PBWAlgebra>, n: usize, opts: &CensusOptions) -> Result<CensusReport> {
    let start = Instant::now();
    let (points, scanned) = enumerate_points(alg, n, opts)?;
    let reduced = opts.mode == ScanMode::Exhaustive && opts.orbit_reduction && orbit_reducible(alg);
    let mut reps: Vec<(ModuleRep, u64)> = Vec::new();
    let mut endo_points = 0;
    let mut indeterminate = 0;
    for pt in &points {
        let m = pt.module(alg);
        if !is_endotrivial(&m)? {
            continue;
        }
        endo_points += 1;
        let mut placed = false;
        let mut unsure = false;
        for (rep, count) in reps.iter_mut() {
            match is_isomorphic(rep, &m)? {
                IsoVerdict::Isomorphic(_) => {
                    *count += 1;
                    placed = true;
                    break;
                }
                IsoVerdict::Indeterminate => unsure = true,
                IsoVerdict::NotIsomorphic => {}
            }
        }
        if placed {
            continue;
        }
        if unsure {
            indeterminate += 1;
        } else {
            reps.push((m, 1));
        }
    }
    let classes = reps
        .iter()
        .map(|(m, count)| {
            let dec = decompose(m, opts.seed)?;
            Ok(ClassRecord {
                dim: m.dim(),
                action: m
                    .action()
                    .iter()
                    .map(|a| (0..a.rows()).map(|r| a.row(r).to_vec()).collect())
                    .collect(),
                summand_dims: dec.dims(),
                points_found: *count,
                orbit_size: if m.dim() == 0 { Some(1) } else { orbit_size(m)? },
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CensusReport {
        algebra: alg.presentation().name().to_string(),
        p: alg.field().p(),
        n,
        field_size: alg.field().p(),
        mode: opts.mode,
        orbit_reduction: reduced,
        seed: opts.seed,
        points_scanned: scanned,
        valid_points: points.len() as u64,
        endotrivial_points: endo_points,
        class_count: classes.len(),
        classes,
        indeterminate_points: indeterminate,
        wall_time_ms: start.elapsed().as_millis() as u64,
    })
}
