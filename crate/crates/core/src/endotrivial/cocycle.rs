use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::hopf::Automorphism;
use crate::linalg::{PrimeMatrix, Subspace};
use crate::repmod::ModuleRep;
use crate::weight::Weight;

/// Restricted 1-cocycles `c: g -> N` modulo coboundaries, which computes `Ext¹(k, N)` from
/// the Lie generators directly. A cochain is stored as the concatenation of `c(x_0), c(x_1), ...`.
#[derive(Clone, Debug)]
pub struct Cocycles {
    module: ModuleRep,
    cocycles: Subspace,
    coboundaries: Subspace,
}

impl Cocycles {
    pub fn new(n: &ModuleRep) -> Result<Self> {
        let alg = n.algebra();
        let pres = alg.presentation();
        let f = n.field();
        let (g, d) = (alg.ngens(), n.dim());
        let p = f.p() as u64;
        let width = g * d;
        let mut rows: Vec<Vec<u32>> = Vec::new();
        let mut push_block = |blocks: Vec<(usize, PrimeMatrix)>| {
            let mut m = PrimeMatrix::zeros(f, d, width);
            for (k, b) in blocks {
                for r in 0..d {
                    for c in 0..d {
                        let v = f.add(m.get(r, k * d + c), b.get(r, c));
                        m.set(r, k * d + c, v);
                    }
                }
            }
            rows.extend((0..d).map(|r| m.row(r).to_vec()));
        };
        let id = PrimeMatrix::identity(f, d);
        for i in 0..g {
            for j in i + 1..g {
                let mut blocks = vec![(j, n.gen_action(i).clone()), (i, n.gen_action(j).neg())];
                for (k, &c) in pres.bracket(i, j).iter().enumerate() {
                    if c != 0 {
                        blocks.push((k, id.scale(f.neg(c))));
                    }
                }
                push_block(blocks);
            }
            let mut blocks = vec![(i, n.gen_action(i).pow(p - 1))];
            for (k, &c) in pres.p_power(i).iter().enumerate() {
                if c != 0 {
                    blocks.push((k, id.scale(f.neg(c))));
                }
            }
            push_block(blocks);
        }
        let system = if rows.is_empty() {
            PrimeMatrix::zeros(f, 0, width)
        } else {
            let flat: Vec<u32> = rows.iter().flatten().copied().collect();
            PrimeMatrix::from_vec(f, rows.len(), width, flat)?
        };
        let cocycles = Subspace::kernel(&system);
        let coboundaries = Subspace::spanned_by(
            f,
            width,
            (0..d).map(|a| {
                let mut e = vec![0; d];
                e[a] = 1;
                (0..g).flat_map(|i| n.gen_action(i).mul_vec(&e)).collect::<Vec<u32>>()
            }),
        );
        debug_assert!(coboundaries.is_subspace_of(&cocycles));
        Ok(Cocycles { module: n.clone(), cocycles, coboundaries })
    }

    pub fn module(&self) -> &ModuleRep {
        &self.module
    }

    pub fn cocycles(&self) -> &Subspace {
        &self.cocycles
    }

    pub fn coboundaries(&self) -> &Subspace {
        &self.coboundaries
    }

    /// `dim Ext¹(k, N)`.
    pub fn h1_dim(&self) -> usize {
        self.cocycles.dim() - self.coboundaries.dim()
    }

    pub fn is_cocycle(&self, c: &[u32]) -> bool {
        self.cocycles.contains(c)
    }

    /// Whether a cocycle represents the zero class.
    pub fn is_coboundary(&self, c: &[u32]) -> bool {
        self.coboundaries.contains(c)
    }

    /// Part of a cochain of weight `lambda`: entries of `c(x_i)` in the `lambda + wt(x_i)` space.
    pub fn weight_component(&self, c: &[u32], lambda: &Weight) -> Result<Vec<u32>> {
        let grading = self.module.grading().ok_or(Error::Ungraded)?;
        let ws = self.module.algebra().presentation().weights().ok_or(Error::Ungraded)?;
        let d = self.module.dim();
        let mut out = c.to_vec();
        for (i, w) in ws.iter().enumerate() {
            let target = lambda + w;
            for a in 0..d {
                if grading[a] != target {
                    out[i * d + a] = 0;
                }
            }
        }
        Ok(out)
    }

    /// Cocycles of weight `lambda`.
    pub fn weight_space(&self, lambda: &Weight) -> Result<Subspace> {
        let f = self.module.field();
        let width = self.cocycles.ambient();
        let mut s = Subspace::zero(f, width);
        for b in self.cocycles.basis() {
            s.insert(self.weight_component(b, lambda)?);
        }
        Ok(s)
    }

    /// `dim Ext¹(k, N)` per weight, over the weights where it is nonzero.
    pub fn h1_by_weight(&self) -> Result<BTreeMap<Weight, usize>> {
        let grading = self.module.grading().ok_or(Error::Ungraded)?;
        let ws = self.module.algebra().presentation().weights().ok_or(Error::Ungraded)?;
        let mut candidates: Vec<Weight> =
            grading.iter().flat_map(|a| ws.iter().map(move |w| a - w)).collect();
        candidates.sort();
        candidates.dedup();
        let mut out = BTreeMap::new();
        for lambda in candidates {
            let z = self.weight_space(&lambda)?;
            let b = self.coboundaries.intersection(&z);
            if z.dim() > b.dim() {
                out.insert(lambda, z.dim() - b.dim());
            }
        }
        Ok(out)
    }

    /// Action of the unipotent element `exp(s x_k)` on cochains: `c ↦ g · c(Ad(g)⁻¹ x)`.
    /// Requires `x_k` to act with `x_k^p = 0` on the module and checks that the module
    /// intertwines the two conjugations.
    pub fn unipotent_action(&self, k: usize, s: u32, c: &[u32]) -> Result<Vec<u32>> {
        let n = &self.module;
        let alg = n.algebra();
        let f = n.field();
        let p = f.p() as usize;
        let d = n.dim();
        let x = n.gen_action(k).scale(s % f.p());
        if !x.pow(p as u64).is_zero() {
            return Err(Error::InvalidModule("generator is not p-nilpotent on the module".into()));
        }
        let exp = |x: &PrimeMatrix| {
            let mut acc = PrimeMatrix::identity(f, d);
            let mut term = PrimeMatrix::identity(f, d);
            for m in 1..p {
                term = x.matmul(&term).scale(f.inv(m as u32).unwrap());
                acc = acc.add(&term);
            }
            acc
        };
        let g = exp(&x);
        let g_inv = exp(&x.neg());
        let phi = Automorphism::root_conjugation(alg, k, s)?;
        let phi_inv = Automorphism::root_conjugation(alg, k, f.neg(s % f.p()))?;
        let combine = |coeffs: &[u32]| {
            let mut m = PrimeMatrix::zeros(f, d, d);
            for (j, &a) in coeffs.iter().enumerate() {
                m.add_scaled_assign(a, n.gen_action(j));
            }
            m
        };
        for (i, img) in phi.images().iter().enumerate() {
            if g.matmul(n.gen_action(i)).matmul(&g_inv) != combine(img) {
                return Err(Error::InvalidModule("module does not intertwine the root conjugation".into()));
            }
        }
        let mut out = Vec::with_capacity(c.len());
        for img in phi_inv.images() {
            let mut v = vec![0; d];
            for (j, &a) in img.iter().enumerate() {
                if a != 0 {
                    for r in 0..d {
                        v[r] = f.add(v[r], f.mul(a, c[j * d + r]));
                    }
                }
            }
            out.extend(g.mul_vec(&v));
        }
        if !self.is_cocycle(&out) {
            return Err(Error::InvalidModule("conjugated cochain is not a cocycle".into()));
        }
        Ok(out)
    }
}
