use std::sync::Arc;

use super::algebra::{AlgebraClass, PBWAlgebra};
use super::presentation::Presentation;
use crate::error::{Error, Result};
use crate::linalg::{PrimeField, PrimeMatrix};
use crate::weight::Weight;

/// Checks that `images[j]` (elements of the Lie algebra of `target`) define a restricted
/// Lie homomorphism from `source`. The p-map is tested in the regular representation.
fn check_restricted_map(
    source: &Presentation,
    target: &PBWAlgebra,
    images: &[Vec<u32>],
) -> std::result::Result<(), String> {
    let tp = target.presentation();
    let d = source.dim();
    if images.len() != d || images.iter().any(|v| v.len() != tp.dim()) {
        return Err("image list has the wrong shape".into());
    }
    let f = tp.field();
    let lin = |c: &[u32]| {
        let mut out = vec![0u32; tp.dim()];
        for (k, &x) in c.iter().enumerate() {
            for (o, &y) in out.iter_mut().zip(&images[k]) {
                *o = f.add(*o, f.mul(x, y));
            }
        }
        out
    };
    for i in 0..d {
        for j in i + 1..d {
            if tp.bracket_of(&images[i], &images[j]) != lin(source.bracket(i, j)) {
                return Err(format!(
                    "bracket of {} and {} is not preserved",
                    source.basis_names()[i],
                    source.basis_names()[j]
                ));
            }
        }
    }
    let reg = |c: &[u32]| {
        let n = target.dim();
        let mut m = PrimeMatrix::zeros(f, n, n);
        for (k, &x) in c.iter().enumerate() {
            m.add_scaled_assign(x, &target.gen_matrices()[k]);
        }
        m
    };
    for i in 0..d {
        if reg(&images[i]).pow(f.p() as u64) != reg(&lin(source.p_power(i))) {
            return Err(format!("p-power of {} is not preserved", source.basis_names()[i]));
        }
    }
    Ok(())
}

/// An automorphism of the restricted Lie algebra, extended to `u(g)`.
#[derive(Clone, Debug)]
pub struct Automorphism {
    label: String,
    algebra: Arc<PBWAlgebra>,
    /// `images[j]` is `phi(x_j)` in the Lie basis.
    images: Vec<Vec<u32>>,
    /// Integer matrix acting on weight coordinates, when `phi` permutes weight spaces.
    weight_map: Option<Vec<Vec<i64>>>,
}

impl Automorphism {
    /// Verified automorphism. `weight_map` says how gradings transform; pass `None` to
    /// keep weights unchanged (only accepted if `phi` preserves every generator weight)
    /// or to drop gradings otherwise.
    pub fn new(
        label: &str,
        algebra: &Arc<PBWAlgebra>,
        images: Vec<Vec<u32>>,
        weight_map: Option<Vec<Vec<i64>>>,
    ) -> Result<Self> {
        let pres = algebra.presentation();
        check_restricted_map(pres, algebra, &images).map_err(Error::NotAutomorphism)?;
        let m = PrimeMatrix::from_columns(pres.field(), pres.dim(), &images);
        if !m.is_invertible() {
            return Err(Error::NotAutomorphism("map is singular".into()));
        }
        Ok(Automorphism { label: label.to_string(), algebra: algebra.clone(), images, weight_map })
    }

    pub fn identity(algebra: &Arc<PBWAlgebra>) -> Self {
        let d = algebra.ngens();
        let images = (0..d).map(|j| unit(d, j)).collect();
        Automorphism { label: "id".into(), algebra: algebra.clone(), images, weight_map: None }
    }

    /// Torus element `t` (one nonzero scalar per simple root) acting by `x_j -> wt_j(t) x_j`.
    pub fn torus_scaling(algebra: &Arc<PBWAlgebra>, t: &[u32]) -> Result<Self> {
        let pres = algebra.presentation();
        let f = pres.field();
        let (Some(ws), Some(rs)) = (pres.weights(), pres.root_system()) else {
            return Err(Error::NotAutomorphism("torus scaling needs weights and a root system".into()));
        };
        if t.len() != rs.rank() || t.iter().any(|&x| x % f.p() == 0) {
            return Err(Error::NotAutomorphism("torus element must have nonzero entries".into()));
        }
        let d = pres.dim();
        let mut images = Vec::with_capacity(d);
        for (j, w) in ws.iter().enumerate() {
            let c = rs
                .to_roots(w)
                .ok_or_else(|| Error::NotAutomorphism("generator weight outside root lattice".into()))?;
            let scale = character_value(f, t, &c);
            let mut v = vec![0; d];
            v[j] = scale;
            images.push(v);
        }
        let label = format!("torus{t:?}");
        Self::new(&label, algebra, images, None)
    }

    /// The simple reflection of `sl2`: `e -> -f`, `f -> -e`, `h -> -h`, weights negated.
    pub fn weyl_sl2(algebra: &Arc<PBWAlgebra>) -> Result<Self> {
        if *algebra.class() != AlgebraClass::Sl2G1 {
            return Err(Error::NotAutomorphism("Weyl reflection is only provided for sl2".into()));
        }
        let f = algebra.field();
        let m1 = f.neg(1);
        let images = vec![vec![0, 0, m1], vec![0, m1, 0], vec![m1, 0, 0]];
        Self::new("weyl-s", algebra, images, Some(vec![vec![-1]]))
    }

    /// `exp(s ad x_k)` for a nilpotent basis element with `ad(x_k)^p = 0`.
    pub fn root_conjugation(algebra: &Arc<PBWAlgebra>, k: usize, s: u32) -> Result<Self> {
        let pres = algebra.presentation();
        let f = pres.field();
        let p = f.p() as usize;
        let ad = pres.ad(k).scale(s % f.p());
        let d = pres.dim();
        if !ad.pow(p as u64).is_zero() {
            return Err(Error::NotAutomorphism("ad is not p-nilpotent".into()));
        }
        let mut exp = PrimeMatrix::identity(f, d);
        let mut term = PrimeMatrix::identity(f, d);
        for m in 1..p {
            term = ad.matmul(&term).scale(f.inv(m as u32).unwrap());
            exp = exp.add(&term);
        }
        let label = format!("exp({s} ad {})", pres.basis_names()[k]);
        Self::new(&label, algebra, exp.columns(), None)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn algebra(&self) -> &Arc<PBWAlgebra> {
        &self.algebra
    }

    pub fn images(&self) -> &[Vec<u32>] {
        &self.images
    }

    pub fn matrix(&self) -> PrimeMatrix {
        PrimeMatrix::from_columns(self.algebra.field(), self.images.len(), &self.images)
    }

    pub fn is_identity(&self) -> bool {
        self.matrix().is_identity()
    }

    /// How a weight transforms, or `None` if gradings cannot be transported.
    pub fn map_weight(&self, w: &Weight) -> Option<Weight> {
        match &self.weight_map {
            Some(m) => Some(Weight(m.iter().map(|row| row.iter().zip(&w.0).map(|(a, b)| a * b).sum()).collect())),
            None if self.preserves_weights() => Some(w.clone()),
            None => None,
        }
    }

    fn preserves_weights(&self) -> bool {
        let pres = self.algebra.presentation();
        let Some(ws) = pres.weights() else { return false };
        self.images.iter().enumerate().all(|(j, v)| {
            v.iter().enumerate().all(|(k, &c)| c == 0 || ws[k] == ws[j])
        })
    }

    pub fn compose(&self, other: &Automorphism) -> Result<Automorphism> {
        let m = self.matrix().matmul(&other.matrix());
        let weight_map = match (&self.weight_map, &other.weight_map) {
            (None, None) => None,
            (Some(a), None) | (None, Some(a)) => Some(a.clone()),
            (Some(a), Some(b)) => Some(int_matmul(a, b)),
        };
        let label = format!("{}*{}", self.label, other.label);
        Automorphism::new(&label, &self.algebra, m.columns(), weight_map)
    }
}

fn int_matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    (0..a.len())
        .map(|i| (0..b[0].len()).map(|j| (0..b.len()).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

fn unit(d: usize, j: usize) -> Vec<u32> {
    let mut v = vec![0; d];
    v[j] = 1;
    v
}

/// `prod t_i^{c_i}` with negative exponents through inverses.
pub fn character_value(f: PrimeField, t: &[u32], c: &[i64]) -> u32 {
    let mut acc = 1 % f.p();
    for (&ti, &ci) in t.iter().zip(c) {
        let base = if ci < 0 { f.inv(ti).unwrap() } else { ti % f.p() };
        acc = f.mul(acc, f.pow(base, ci.unsigned_abs()));
    }
    acc
}

/// A restricted Lie algebra map from a smaller presentation into a larger one.
#[derive(Clone, Debug)]
pub struct Embedding {
    label: String,
    source: Arc<PBWAlgebra>,
    target: Arc<PBWAlgebra>,
    images: Vec<Vec<u32>>,
}

impl Embedding {
    pub fn new(
        label: &str,
        source: &Arc<PBWAlgebra>,
        target: &Arc<PBWAlgebra>,
        images: Vec<Vec<u32>>,
    ) -> Result<Self> {
        if source.field() != target.field() {
            return Err(Error::InvalidEmbedding("different fields".into()));
        }
        check_restricted_map(source.presentation(), target, &images).map_err(Error::InvalidEmbedding)?;
        Ok(Embedding { label: label.to_string(), source: source.clone(), target: target.clone(), images })
    }

    /// Embedding sending each named source generator to the named target generator.
    pub fn by_names(
        source: &Arc<PBWAlgebra>,
        target: &Arc<PBWAlgebra>,
        pairs: &[(&str, &str)],
    ) -> Result<Self> {
        let sp = source.presentation();
        let tp = target.presentation();
        let mut images = vec![vec![0; tp.dim()]; sp.dim()];
        for (s, t) in pairs {
            let i = sp.index_of(s).ok_or_else(|| Error::InvalidEmbedding(format!("no generator {s}")))?;
            let j = tp.index_of(t).ok_or_else(|| Error::InvalidEmbedding(format!("no generator {t}")))?;
            images[i][j] = 1;
        }
        let label: Vec<String> = pairs.iter().map(|(s, t)| format!("{s}->{t}")).collect();
        Self::new(&label.join(","), source, target, images)
    }

    pub fn identity(algebra: &Arc<PBWAlgebra>) -> Self {
        let d = algebra.ngens();
        Embedding {
            label: "id".into(),
            source: algebra.clone(),
            target: algebra.clone(),
            images: (0..d).map(|j| unit(d, j)).collect(),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn source(&self) -> &Arc<PBWAlgebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<PBWAlgebra> {
        &self.target
    }

    pub fn images(&self) -> &[Vec<u32>] {
        &self.images
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_scaling_by_one_is_identity() {
        let a = PBWAlgebra::preset("sl3-u1", 2).unwrap();
        assert!(Automorphism::torus_scaling(&a, &[1, 1]).unwrap().is_identity());
        let b = PBWAlgebra::preset("sl2-u1", 3).unwrap();
        let phi = Automorphism::torus_scaling(&b, &[2]).unwrap();
        assert_eq!(phi.images()[0], vec![2]);
    }

    #[test]
    fn weyl_reflection_preserves_brackets() {
        let a = PBWAlgebra::preset("sl2-g1", 3).unwrap();
        let s = Automorphism::weyl_sl2(&a).unwrap();
        assert!(s.compose(&s).unwrap().is_identity());
        assert_eq!(s.map_weight(&Weight(vec![2])), Some(Weight(vec![-2])));
    }

    #[test]
    fn rejects_non_automorphism() {
        let a = PBWAlgebra::preset("sl2-g1", 3).unwrap();
        // e -> e, h -> h, f -> 2f breaks [e,f] = h
        let images = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 2]];
        assert!(matches!(Automorphism::new("bad", &a, images, None), Err(Error::NotAutomorphism(_))));
    }

    #[test]
    fn root_conjugations_of_b1() {
        let a = PBWAlgebra::preset("sl3-b1", 2).unwrap();
        for k in 2..5 {
            let phi = Automorphism::root_conjugation(&a, k, 1).unwrap();
            assert!(!phi.is_identity());
        }
    }
}
