//! Simple modules, projective indecomposables and radical generators.

use std::sync::Arc;

use super::algebra::PBWAlgebra;
use super::eval;
use crate::error::{Error, Result};
use crate::linalg::{PrimeMatrix, Subspace};
use crate::weight::Weight;

/// A projective indecomposable module realized as a left ideal `A e`.
#[derive(Clone, Debug)]
pub struct Pim {
    pub label: String,
    /// Index of the simple top in [`BlockData::simples`].
    pub simple: usize,
    pub idempotent: Vec<u32>,
    /// Basis of the left ideal, as elements of the algebra.
    pub basis: Vec<Vec<u32>>,
    pub action: Vec<PrimeMatrix>,
    /// A nonzero element of the socle, as an element of the algebra.
    pub socle_element: Vec<u32>,
    /// Rank of the socle element acting on this module.
    pub t: usize,
    /// Weight of each basis vector relative to the top, for graded versions.
    pub weight_offsets: Option<Vec<Weight>>,
}

impl Pim {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

#[derive(Clone, Debug)]
pub struct Simple {
    pub label: String,
    pub action: Vec<PrimeMatrix>,
    /// For characters of a triangular algebra: the eigenvalue of each toral generator.
    pub character: Option<Vec<u32>>,
    /// Restricted highest weight, when known.
    pub highest_weight: Option<Weight>,
    pub weights: Option<Vec<Weight>>,
}

impl Simple {
    pub fn dim(&self) -> usize {
        self.action.first().map_or(0, |m| m.rows())
    }
}

#[derive(Clone, Debug)]
pub struct BlockData {
    pub pims: Vec<Pim>,
    pub simples: Vec<Simple>,
    pub radical_gens: Vec<Vec<u32>>,
}

fn all_tuples(p: usize, len: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..p as u32).map(move |c| {
                    let mut t = t.clone();
                    t.push(c);
                    t
                })
            })
            .collect();
    }
    out
}

fn rank_of_product(alg: &PBWAlgebra, u: &[u32], basis: &[Vec<u32>]) -> usize {
    let cols: Vec<Vec<u32>> = basis.iter().map(|b| alg.mul(u, b)).collect();
    PrimeMatrix::from_columns(alg.field(), alg.dim(), &cols).rank()
}

fn ideal_action(alg: &PBWAlgebra, w: &PrimeMatrix) -> Result<Vec<PrimeMatrix>> {
    alg.gen_matrices()
        .iter()
        .map(|g| {
            w.solve_matrix(&g.matmul(w))
                .ok_or_else(|| Error::InconsistentPresentation("left ideal is not closed".into()))
        })
        .collect()
}

/// Projectives `A ⊗_{u(t)} λ` for a toral subalgebra plus unipotent ideal.
pub(crate) fn triangular(alg: &PBWAlgebra, toral: &[usize], nil: &[usize]) -> Result<BlockData> {
    let f = alg.field();
    let p = alg.p();
    let pres = alg.presentation();
    let d = alg.ngens();
    let mut pims = Vec::new();
    let mut simples = Vec::new();
    let nil_exps: Vec<Vec<u32>> = all_tuples(p, nil.len());
    for (ci, lambda) in all_tuples(p, toral.len()).into_iter().enumerate() {
        let mut e = alg.one();
        for (pos, &t) in toral.iter().enumerate() {
            for c in 0..p as u32 {
                if c == lambda[pos] {
                    continue;
                }
                let inv = f.inv(f.sub(lambda[pos], c)).unwrap();
                let ht = alg.gen_matrices()[t].mul_vec(&e);
                e = ht.iter().zip(&e).map(|(&a, &b)| f.mul(inv, f.sub(a, f.mul(c, b)))).collect();
            }
        }
        let basis: Vec<Vec<u32>> = nil_exps
            .iter()
            .map(|b| {
                let mut exps = vec![0usize; d];
                for (k, &i) in nil.iter().enumerate() {
                    exps[i] = b[k] as usize;
                }
                alg.mul(&alg.basis_vector(alg.index_of(&exps)), &e)
            })
            .collect();
        let w = PrimeMatrix::from_columns(f, alg.dim(), &basis);
        let action = ideal_action(alg, &w)?;
        let stacked = nil
            .iter()
            .fold(PrimeMatrix::zeros(f, 0, basis.len()), |acc, &k| acc.vstack(&action[k]));
        let soc = stacked.kernel_basis();
        let first = soc.first().ok_or_else(|| Error::InconsistentPresentation("projective with zero socle".into()))?;
        let u = w.mul_vec(first);
        let t = rank_of_product(alg, &u, &basis);
        let weight_offsets = pres.weights().map(|ws| {
            nil_exps
                .iter()
                .map(|b| {
                    nil.iter().zip(b).fold(Weight::zero(ws[0].rank()), |acc, (&i, &k)| &acc + &(k as i64 * &ws[i]))
                })
                .collect()
        });
        let label = format!("P{lambda:?}");
        let simple_action = (0..d)
            .map(|i| {
                let c = toral.iter().position(|&t| t == i).map_or(0, |pos| lambda[pos]);
                PrimeMatrix::scalar(f, 1, c)
            })
            .collect();
        simples.push(Simple {
            label: format!("L{lambda:?}"),
            action: simple_action,
            character: Some(lambda.clone()),
            highest_weight: None,
            weights: None,
        });
        pims.push(Pim {
            label,
            simple: ci,
            idempotent: e,
            basis,
            action,
            socle_element: u,
            t,
            weight_offsets,
        });
    }
    let radical_gens = nil.iter().map(|&k| alg.generator(k)).collect();
    Ok(BlockData { pims, simples, radical_gens })
}

/// Restricted Weyl module `V(m)` of `sl2` in the basis `v_0..v_m` (generators `e, h, f`).
pub fn weyl_sl2_matrices(f: crate::linalg::PrimeField, m: usize) -> Vec<PrimeMatrix> {
    let n = m + 1;
    let mut e = PrimeMatrix::zeros(f, n, n);
    let mut h = PrimeMatrix::zeros(f, n, n);
    let mut fm = PrimeMatrix::zeros(f, n, n);
    for i in 0..n {
        h.set(i, i, f.reduce(m as i64 - 2 * i as i64));
        if i + 1 < n {
            fm.set(i + 1, i, f.reduce(i as i64 + 1));
        }
        if i >= 1 {
            e.set(i - 1, i, f.reduce(m as i64 - i as i64 + 1));
        }
    }
    vec![e, h, fm]
}

/// Blocks of `u(sl2)` from a Krull-Schmidt decomposition of the regular module.
pub(crate) fn sl2(alg: &Arc<PBWAlgebra>, seed: u64) -> Result<BlockData> {
    use crate::repmod::ModuleRep;
    let f = alg.field();
    let p = alg.p();
    let n = alg.dim();
    let simples: Vec<Simple> = (0..p)
        .map(|m| Simple {
            label: format!("L({m})"),
            action: weyl_sl2_matrices(f, m),
            character: None,
            highest_weight: Some(Weight(vec![m as i64])),
            weights: Some((0..=m).map(|i| Weight(vec![m as i64 - 2 * i as i64])).collect()),
        })
        .collect();
    // rad(A) is the common kernel of A -> End(L) over all simples
    let mut rows = PrimeMatrix::zeros(f, 0, n);
    for s in &simples {
        let mons = eval::monomial_matrices(&s.action, s.dim(), p, f);
        let cols: Vec<Vec<u32>> = mons.iter().map(|m| m.data().to_vec()).collect();
        rows = rows.vstack(&PrimeMatrix::from_columns(f, s.dim() * s.dim(), &cols));
    }
    let rad = Subspace::kernel(&rows);
    let regular = ModuleRep::regular(alg);
    let mut closure = Subspace::zero(f, n);
    let mut radical_gens = Vec::new();
    for v in rad.basis() {
        if !closure.contains(v) {
            radical_gens.push(v.clone());
            regular.spin_into(&mut closure, [v.clone()]);
        }
    }
    if closure != rad {
        return Err(Error::InconsistentPresentation("radical is not a left ideal".into()));
    }

    let dec = crate::structure::decompose(&regular, seed)?;
    let embeds: Vec<&PrimeMatrix> = dec.summands.iter().map(|s| &s.embedding).collect();
    let all = embeds.iter().skip(1).fold(embeds[0].clone(), |acc, e| acc.hstack(e));
    let coeffs = all
        .solve(&alg.one())?
        .ok_or_else(|| Error::Split("summands of the regular module do not span".into()))?;
    let mut pims: Vec<Option<Pim>> = vec![None; p];
    let mut offset = 0;
    let mut total = 0;
    for e in embeds {
        let q = e.cols();
        let idem = e.mul_vec(&coeffs[offset..offset + q]);
        offset += q;
        let basis = e.columns();
        let radl = regular.spin(radical_gens.iter().flat_map(|j| basis.iter().map(|b| alg.mul(j, b))));
        let top = q - radl.dim();
        if top == 0 || top > p {
            return Err(Error::Split("summand with unexpected top".into()));
        }
        let m = top - 1;
        if pims[m].is_some() {
            continue;
        }
        total += q * top;
        let action = ideal_action(alg, e)?;
        let mut stacked = PrimeMatrix::zeros(f, 0, q);
        for j in &radical_gens {
            let cols: Vec<Vec<u32>> = basis.iter().map(|b| alg.mul(j, b)).collect();
            let lj = PrimeMatrix::from_columns(f, n, &cols);
            let rho = e.solve_matrix(&lj).ok_or_else(|| Error::Split("radical action escapes".into()))?;
            stacked = stacked.vstack(&rho);
        }
        let soc = stacked.kernel_basis();
        let u = e.mul_vec(soc.first().ok_or_else(|| Error::Split("zero socle".into()))?);
        let t = rank_of_product(alg, &u, &basis);
        pims[m] = Some(Pim {
            label: format!("P({m})"),
            simple: m,
            idempotent: idem,
            basis,
            action,
            socle_element: u,
            t,
            weight_offsets: None,
        });
    }
    if total != n {
        return Err(Error::Split(format!("sum of dim P * dim L is {total}, expected {n}")));
    }
    let pims = pims
        .into_iter()
        .enumerate()
        .map(|(m, x)| x.ok_or_else(|| Error::Split(format!("no projective cover of L({m})"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(BlockData { pims, simples, radical_gens })
}
