use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::blocks::{self, BlockData, Pim, Simple};
use super::eval;
use super::presentation::Presentation;
use super::presets::preset;
use crate::error::{Error, Result};
use crate::linalg::{PrimeField, PrimeMatrix};

/// Largest restricted enveloping algebra that will be materialized.
pub const MAX_ALGEBRA_DIM: usize = 2048;

/// How the projective indecomposables of an algebra are obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraClass {
    /// Toral part plus a unipotent ideal; all simples are one-dimensional characters.
    Triangular { toral: Vec<usize>, nilpotent: Vec<usize> },
    /// `u(sl2)`; projectives come from decomposing the regular module.
    Sl2G1,
    Unsupported(String),
}

/// The restricted enveloping algebra `u(g)` on its PBW basis.
#[derive(Debug)]
pub struct PBWAlgebra {
    pres: Presentation,
    p: usize,
    dim: usize,
    radix: Vec<usize>,
    gens: Vec<PrimeMatrix>,
    class: AlgebraClass,
    blocks: Option<BlockData>,
}

impl PartialEq for PBWAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.pres.same_structure(&other.pres)
    }
}

impl PBWAlgebra {
    /// Builds `u(g)` with the default seed for the randomized decompositions.
    pub fn build(pres: Presentation) -> Result<Arc<Self>> {
        Self::build_with_seed(pres, 0)
    }

    pub fn build_with_seed(pres: Presentation, seed: u64) -> Result<Arc<Self>> {
        let core = Self::build_core(pres)?;
        let class = core.classify();
        let core = PBWAlgebra { class: class.clone(), ..core };
        let blocks = match &class {
            AlgebraClass::Triangular { toral, nilpotent } => {
                Some(blocks::triangular(&core, toral, nilpotent)?)
            }
            AlgebraClass::Sl2G1 => {
                let tmp = Arc::new(core.shallow_clone());
                Some(blocks::sl2(&tmp, seed)?)
            }
            AlgebraClass::Unsupported(_) => None,
        };
        Ok(Arc::new(PBWAlgebra { blocks, ..core }))
    }

    /// Cached build of a named preset.
    pub fn preset(name: &str, p: u32) -> Result<Arc<Self>> {
        static CACHE: OnceLock<Mutex<HashMap<(String, u32), Arc<PBWAlgebra>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let key = (name.to_string(), p);
        if let Some(a) = cache.lock().unwrap().get(&key) {
            return Ok(a.clone());
        }
        let a = Self::build(preset(name, p)?)?;
        cache.lock().unwrap().entry(key).or_insert(a.clone());
        Ok(a)
    }

    fn shallow_clone(&self) -> Self {
        PBWAlgebra {
            pres: self.pres.clone(),
            p: self.p,
            dim: self.dim,
            radix: self.radix.clone(),
            gens: self.gens.clone(),
            class: self.class.clone(),
            blocks: None,
        }
    }

    fn build_core(pres: Presentation) -> Result<Self> {
        let p = pres.p() as usize;
        let d = pres.dim();
        if d == 0 {
            return Err(Error::InconsistentPresentation("empty basis".into()));
        }
        let dim = p
            .checked_pow(d as u32)
            .filter(|&n| n <= MAX_ALGEBRA_DIM)
            .ok_or_else(|| Error::BudgetExceeded(format!("u(g) would have dimension {p}^{d}")))?;
        let radix: Vec<usize> = (0..d).map(|i| p.pow((d - 1 - i) as u32)).collect();
        let mut st = Straightener {
            pres: &pres,
            p,
            d,
            dim,
            radix: &radix,
            memo: vec![None; d * dim],
            busy: vec![false; d * dim],
        };
        let f = pres.field();
        let mut gens = Vec::with_capacity(d);
        for i in 0..d {
            let mut cols = Vec::with_capacity(dim);
            for idx in 0..dim {
                cols.push(st.mul_gen(i, idx)?);
            }
            gens.push(PrimeMatrix::from_columns(f, dim, &cols));
        }
        let alg = PBWAlgebra {
            pres,
            p,
            dim,
            radix,
            gens,
            class: AlgebraClass::Unsupported("unclassified".into()),
            blocks: None,
        };
        if let Some(msg) = alg.first_violation(&alg.gens) {
            return Err(Error::InconsistentPresentation(format!("regular representation: {msg}")));
        }
        Ok(alg)
    }

    /// First relation of `u(g)` violated by the given generator matrices.
    pub fn first_violation(&self, action: &[PrimeMatrix]) -> Option<String> {
        let pres = &self.pres;
        let d = pres.dim();
        let n = action.first().map_or(0, |m| m.rows());
        let f = pres.field();
        let combine = |c: &[u32]| {
            let mut m = PrimeMatrix::zeros(f, n, n);
            for (k, &x) in c.iter().enumerate() {
                m.add_scaled_assign(x, &action[k]);
            }
            m
        };
        for i in 0..d {
            for j in i + 1..d {
                if action[i].commutator(&action[j]) != combine(pres.bracket(i, j)) {
                    let names = pres.basis_names();
                    return Some(format!("[{}, {}]", names[i], names[j]));
                }
            }
        }
        for i in 0..d {
            if action[i].pow(self.p as u64) != combine(pres.p_power(i)) {
                return Some(format!("{0}^p = {0}^[p]", pres.basis_names()[i]));
            }
        }
        None
    }

    fn classify(&self) -> AlgebraClass {
        let pres = &self.pres;
        let d = pres.dim();
        let nilpotent: Vec<usize> = (0..d).filter(|&i| pres.nilpotent()[i]).collect();
        let toral: Vec<usize> = (0..d).filter(|&i| !pres.nilpotent()[i]).collect();
        let in_nil = |v: &[u32]| v.iter().enumerate().all(|(k, &c)| c == 0 || pres.nilpotent()[k]);
        let triangular = toral.iter().all(|&t| {
            let mut unit = vec![0; d];
            unit[t] = 1;
            pres.p_power(t) == unit.as_slice()
                && toral.iter().all(|&s| pres.bracket(t, s).iter().all(|&c| c == 0))
        }) && nilpotent.iter().all(|&k| {
            in_nil(pres.p_power(k)) && (0..d).all(|j| in_nil(pres.bracket(j, k)))
        }) && self.nilpotent_acts_nilpotently(&nilpotent);
        if triangular {
            return AlgebraClass::Triangular { toral, nilpotent };
        }
        if let Ok(sl2) = preset("sl2-g1", pres.p()) {
            if sl2.same_structure(pres) {
                return AlgebraClass::Sl2G1;
            }
        }
        AlgebraClass::Unsupported(format!("{} is neither triangular nor sl2", pres.name()))
    }

    fn nilpotent_acts_nilpotently(&self, nil: &[usize]) -> bool {
        use crate::linalg::Subspace;
        let f = self.field();
        let mut w = Subspace::full(f, self.dim);
        for _ in 0..=self.dim {
            if w.is_zero() {
                return true;
            }
            let mut next = Subspace::zero(f, self.dim);
            for &k in nil {
                next.extend(w.basis().iter().map(|v| self.gens[k].mul_vec(v)));
            }
            if next.dim() == w.dim() {
                return false;
            }
            w = next;
        }
        false
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn field(&self) -> PrimeField {
        self.pres.field()
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of Lie generators.
    pub fn ngens(&self) -> usize {
        self.gens.len()
    }

    /// Left regular action of each Lie generator.
    pub fn gen_matrices(&self) -> &[PrimeMatrix] {
        &self.gens
    }

    pub fn class(&self) -> &AlgebraClass {
        &self.class
    }

    pub fn is_triangular(&self) -> bool {
        matches!(self.class, AlgebraClass::Triangular { .. })
    }

    pub fn blocks(&self) -> Result<&BlockData> {
        self.blocks.as_ref().ok_or_else(|| match &self.class {
            AlgebraClass::Unsupported(m) => Error::UnsupportedAlgebra(m.clone()),
            _ => Error::UnsupportedAlgebra("block data unavailable".into()),
        })
    }

    pub fn pims(&self) -> Result<&[Pim]> {
        Ok(&self.blocks()?.pims)
    }

    pub fn simples(&self) -> Result<&[Simple]> {
        Ok(&self.blocks()?.simples)
    }

    /// Elements generating the Jacobson radical as a left ideal.
    pub fn radical_gens(&self) -> Result<&[Vec<u32>]> {
        Ok(&self.blocks()?.radical_gens)
    }

    pub fn exponents(&self, idx: usize) -> Vec<usize> {
        self.radix.iter().map(|&r| (idx / r) % self.p).collect()
    }

    pub fn index_of(&self, exps: &[usize]) -> usize {
        exps.iter().zip(&self.radix).map(|(&e, &r)| e * r).sum()
    }

    pub fn radix(&self) -> &[usize] {
        &self.radix
    }

    pub fn basis_vector(&self, idx: usize) -> Vec<u32> {
        let mut v = vec![0; self.dim];
        v[idx] = 1;
        v
    }

    pub fn one(&self) -> Vec<u32> {
        self.basis_vector(0)
    }

    /// The Lie generator `x_i` as an element.
    pub fn generator(&self, i: usize) -> Vec<u32> {
        self.basis_vector(self.radix[i])
    }

    /// Display name of a PBW monomial, e.g. `f1^2*f12`.
    pub fn monomial_name(&self, idx: usize) -> String {
        let names = self.pres.basis_names();
        let parts: Vec<String> = self
            .exponents(idx)
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { names[i].clone() } else { format!("{}^{}", names[i], e) })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    pub fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        eval::apply_element(&self.gens, self.p, a, b)
    }

    /// Product of two PBW basis monomials.
    pub fn mul_basis(&self, i: usize, j: usize) -> Vec<u32> {
        self.mul(&self.basis_vector(i), &self.basis_vector(j))
    }

    /// Matrix of left multiplication by `a`.
    pub fn left_mul_matrix(&self, a: &[u32]) -> PrimeMatrix {
        eval::element_matrix(&self.gens, self.dim, self.p, a)
    }

    /// Matrix of right multiplication by `a`.
    pub fn right_mul_matrix(&self, a: &[u32]) -> PrimeMatrix {
        let cols: Vec<Vec<u32>> = (0..self.dim).map(|i| self.mul(&self.basis_vector(i), a)).collect();
        PrimeMatrix::from_columns(self.field(), self.dim, &cols)
    }

    /// Augmentation: the coefficient of the unit monomial.
    pub fn counit(&self, a: &[u32]) -> u32 {
        a[0]
    }

    /// Antipode, `S(x_i) = -x_i`, extended as an anti-automorphism.
    pub fn antipode(&self, a: &[u32]) -> Vec<u32> {
        let f = self.field();
        let mut out = vec![0; self.dim];
        for (idx, &c) in a.iter().enumerate() {
            if c == 0 {
                continue;
            }
            // S(x_1^e1 ... x_d^ed) = (-x_d)^ed ... (-x_1)^e1
            let exps = self.exponents(idx);
            let mut v = self.one();
            for (i, &e) in exps.iter().enumerate() {
                for _ in 0..e {
                    v = self.gens[i].mul_vec(&v);
                }
            }
            let total: usize = exps.iter().sum();
            let sign = if total.is_multiple_of(2) { c } else { f.neg(c) };
            for (x, &y) in out.iter_mut().zip(&v) {
                *x = f.add(*x, f.mul(sign, y));
            }
        }
        out
    }

    /// Checks `(ab)c = a(bc)` on basis triples: all of them when `samples` is `None`,
    /// otherwise that many seeded random triples.
    pub fn check_associativity(&self, samples: Option<usize>, seed: u64) -> bool {
        let n = self.dim;
        let check = |i: usize, j: usize, k: usize| {
            let ab = self.mul_basis(i, j);
            let lhs = self.mul(&ab, &self.basis_vector(k));
            let bc = self.mul_basis(j, k);
            let rhs = self.mul(&self.basis_vector(i), &bc);
            lhs == rhs
        };
        match samples {
            None => (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| check(i, j, k)))),
            Some(s) => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                (0..s).all(|_| check(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n)))
            }
        }
    }
}

struct Straightener<'a> {
    pres: &'a Presentation,
    p: usize,
    d: usize,
    dim: usize,
    radix: &'a [usize],
    memo: Vec<Option<Vec<u32>>>,
    busy: Vec<bool>,
}

impl Straightener<'_> {
    fn unit(&self, idx: usize) -> Vec<u32> {
        let mut v = vec![0; self.dim];
        v[idx] = 1;
        v
    }

    fn axpy(&self, acc: &mut [u32], c: u32, v: &[u32]) {
        let f = self.pres.field();
        if c == 0 {
            return;
        }
        for (x, &y) in acc.iter_mut().zip(v) {
            if y != 0 {
                *x = f.add(*x, f.mul(c, y));
            }
        }
    }

    /// `x_i * x^e` in normal form, where `idx` encodes `e`.
    fn mul_gen(&mut self, i: usize, idx: usize) -> Result<Vec<u32>> {
        let key = i * self.dim + idx;
        if let Some(v) = &self.memo[key] {
            return Ok(v.clone());
        }
        if self.busy[key] {
            return Err(Error::InconsistentPresentation("straightening does not terminate".into()));
        }
        self.busy[key] = true;
        let p = self.p;
        let first = (0..self.d).find(|&j| !(idx / self.radix[j]).is_multiple_of(p));
        let out = match first {
            None => self.unit(self.radix[i]),
            Some(j) if i < j => self.unit(idx + self.radix[i]),
            Some(j) if i == j => {
                if (idx / self.radix[i]) % p + 1 < p {
                    self.unit(idx + self.radix[i])
                } else {
                    // x_i^p = x_i^[p]
                    let rest = idx - (p - 1) * self.radix[i];
                    let mut acc = vec![0; self.dim];
                    for (k, c) in self.pres.p_power(i).to_vec().into_iter().enumerate() {
                        if c != 0 {
                            let v = self.mul_gen(k, rest)?;
                            self.axpy(&mut acc, c, &v);
                        }
                    }
                    acc
                }
            }
            Some(j) => {
                // x_i x_j x^e' = x_j (x_i x^e') + [x_i, x_j] x^e'
                let rest = idx - self.radix[j];
                let inner = self.mul_gen(i, rest)?;
                let mut acc = vec![0; self.dim];
                for (m, &c) in inner.iter().enumerate() {
                    if c != 0 {
                        let v = self.mul_gen(j, m)?;
                        self.axpy(&mut acc, c, &v);
                    }
                }
                for (k, c) in self.pres.bracket(i, j).to_vec().into_iter().enumerate() {
                    if c != 0 {
                        let v = self.mul_gen(k, rest)?;
                        self.axpy(&mut acc, c, &v);
                    }
                }
                acc
            }
        };
        self.busy[key] = false;
        self.memo[key] = Some(out.clone());
        Ok(out)
    }
}
