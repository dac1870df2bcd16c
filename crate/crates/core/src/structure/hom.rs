//! Homomorphism spaces between modules.
//!
//! The source is presented as a quotient of a free module `A^s` on chosen generators;
//! a homomorphism is then a choice of images of the generators annihilated by a
//! generating set of the relation module.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{PrimeMatrix, Subspace};
use crate::repmod::ModuleRep;
use crate::weight::Weight;

/// A basis of `Hom_A(M, N)`, each element an `dim N x dim M` matrix.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub source_dim: usize,
    pub target_dim: usize,
    pub basis: Vec<PrimeMatrix>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HomSummary {
    pub source_dim: usize,
    pub target_dim: usize,
    pub dim: usize,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn combine(&self, coeffs: &[u32]) -> PrimeMatrix {
        let f = self.basis[0].field();
        let mut m = PrimeMatrix::zeros(f, self.target_dim, self.source_dim);
        for (b, &c) in self.basis.iter().zip(coeffs) {
            m.add_scaled_assign(c, b);
        }
        m
    }

    pub fn summary(&self) -> HomSummary {
        HomSummary { source_dim: self.source_dim, target_dim: self.target_dim, dim: self.dim() }
    }
}

/// `M` as a quotient of `A^s`.
#[derive(Debug)]
pub struct FreePresentation {
    /// Module generators of `M`, as vectors.
    pub gens: Vec<Vec<u32>>,
    /// Columns `(k, e)` of the map `A^s -> M` whose images form a basis of `M`.
    pub pivots: Vec<(usize, usize)>,
    /// Inverse of the matrix formed by those pivot images.
    pub pivot_inverse: PrimeMatrix,
    /// Generators of the kernel of `A^s -> M` as a left module.
    pub relations: Vec<Vec<u32>>,
}

impl FreePresentation {
    pub(crate) fn compute(m: &ModuleRep) -> FreePresentation {
        let f = m.field();
        let n = m.dim();
        let alg = m.algebra();
        let big = alg.dim();
        // candidates: lifts of a basis of the top first when the radical is known
        let mut candidates: Vec<usize> = Vec::new();
        if let Ok(rad) = super::radical_subspace(m) {
            candidates.extend(rad.non_pivots());
        }
        candidates.extend(0..n);
        let unit = |c: usize| {
            let mut v = vec![0; n];
            v[c] = 1;
            v
        };
        let mut closure = Subspace::zero(f, n);
        let mut gens: Vec<Vec<u32>> = Vec::new();
        for c in candidates {
            if closure.is_full() {
                break;
            }
            let v = unit(c);
            if !closure.contains(&v) {
                m.spin_into(&mut closure, [v.clone()]);
                gens.push(v);
            }
        }
        // drop generators already reachable from the others
        let mut k = 0;
        while gens.len() > 1 && k < gens.len() {
            let others = gens.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, g)| g.clone());
            if m.spin(others).dim() == n {
                gens.remove(k);
            } else {
                k += 1;
            }
        }
        let s = gens.len();
        let mut cols: Vec<Vec<u32>> = Vec::with_capacity(s * big);
        for g in &gens {
            cols.extend(m.orbit(g));
        }
        let pi = PrimeMatrix::from_columns(f, n, &cols);
        let (_, piv) = pi.rref();
        let pivots: Vec<(usize, usize)> = piv.iter().map(|&c| (c / big, c % big)).collect();
        let pivot_inverse = pi.select_columns(&piv).inverse().unwrap_or_else(|| PrimeMatrix::zeros(f, 0, 0));
        // x_i ε_b minus the pivot expansion of its image, for each pivot b: these generate the
        // kernel, since the quotient by them is spanned by the n pivot images
        let mut relations = Vec::new();
        let basis_cols: Vec<Vec<u32>> = piv.iter().map(|&c| cols[c].clone()).collect();
        for (&(k, e), col) in pivots.iter().zip(&basis_cols) {
            for i in 0..alg.ngens() {
                let mut r = vec![0; s * big];
                let xe = alg.mul(&alg.generator(i), &alg.basis_vector(e));
                r[k * big..(k + 1) * big].copy_from_slice(&xe);
                let coords = pivot_inverse.mul_vec(&m.gen_action(i).mul_vec(col));
                for (&c, &(k2, e2)) in coords.iter().zip(&pivots) {
                    let at = k2 * big + e2;
                    r[at] = f.sub(r[at], c);
                }
                if r.iter().any(|&x| x != 0) {
                    relations.push(r);
                }
            }
        }
        FreePresentation { gens, pivots, pivot_inverse, relations }
    }
}

/// Which target coordinates each generator image may use.
type Allowed = Vec<Vec<usize>>;

fn solve_presented(m: &ModuleRep, n: &ModuleRep, allowed: Option<Allowed>) -> HomSpace {
    let f = m.field();
    let pres = m.free_presentation();
    let big = m.algebra().dim();
    let nm = m.dim();
    let nn = n.dim();
    if nm == 0 || nn == 0 {
        return HomSpace { source_dim: nm, target_dim: nn, basis: Vec::new() };
    }
    let s = pres.gens.len();
    let allowed: Allowed = allowed.unwrap_or_else(|| vec![(0..nn).collect(); s]);
    let offsets: Vec<usize> = allowed
        .iter()
        .scan(0, |acc, a| {
            let o = *acc;
            *acc += a.len();
            Some(o)
        })
        .collect();
    let unknowns: usize = allowed.iter().map(|a| a.len()).sum();
    if unknowns == 0 {
        return HomSpace { source_dim: nm, target_dim: nn, basis: Vec::new() };
    }
    let mons = n.monomials();
    let mut constraints = Subspace::zero(f, unknowns);
    for r in &pres.relations {
        let mut block = PrimeMatrix::zeros(f, nn, unknowns);
        for k in 0..s {
            let rk = &r[k * big..(k + 1) * big];
            let mut rho = PrimeMatrix::zeros(f, nn, nn);
            for (e, &c) in rk.iter().enumerate() {
                if c != 0 {
                    rho.add_scaled_assign(c, &mons[e]);
                }
            }
            for (j, &col) in allowed[k].iter().enumerate() {
                for row in 0..nn {
                    let x = rho.get(row, col);
                    if x != 0 {
                        block.set(row, offsets[k] + j, x);
                    }
                }
            }
        }
        for row in 0..nn {
            let v = block.row(row);
            if v.iter().any(|&x| x != 0) {
                constraints.insert(v.to_vec());
            }
        }
        if constraints.is_full() {
            break;
        }
    }
    let cmat = PrimeMatrix::from_columns(f, unknowns, constraints.basis()).transpose();
    let sols = if constraints.is_zero() {
        (0..unknowns)
            .map(|i| {
                let mut v = vec![0; unknowns];
                v[i] = 1;
                v
            })
            .collect()
    } else {
        cmat.kernel_basis()
    };
    let basis = sols
        .into_iter()
        .map(|y| {
            let ys: Vec<Vec<u32>> = (0..s)
                .map(|k| {
                    let mut v = vec![0; nn];
                    for (j, &col) in allowed[k].iter().enumerate() {
                        v[col] = y[offsets[k] + j];
                    }
                    v
                })
                .collect();
            let cols: Vec<Vec<u32>> = pres.pivots.iter().map(|&(k, e)| mons[e].mul_vec(&ys[k])).collect();
            PrimeMatrix::from_columns(f, nn, &cols).matmul(&pres.pivot_inverse)
        })
        .collect();
    HomSpace { source_dim: nm, target_dim: nn, basis }
}

/// `Hom_A(M, N)`.
pub fn hom_space(m: &ModuleRep, n: &ModuleRep) -> Result<HomSpace> {
    m.require_same_algebra(n)?;
    Ok(solve_presented(m, n, None))
}

/// Homomorphisms sending weight `mu` to weight `mu + shift`; both modules must be graded.
pub fn graded_hom_space(m: &ModuleRep, n: &ModuleRep, shift: &Weight) -> Result<HomSpace> {
    m.require_same_algebra(n)?;
    let (Some(gm), Some(gn)) = (m.grading(), n.grading()) else {
        return Err(Error::Ungraded);
    };
    let pres = m.free_presentation();
    let allowed = pres
        .gens
        .iter()
        .map(|g| {
            let c = g.iter().position(|&x| x != 0).expect("nonzero generator");
            let target = &gm[c] + shift;
            (0..n.dim()).filter(|&j| gn[j] == target).collect()
        })
        .collect();
    Ok(solve_presented(m, n, Some(allowed)))
}

/// Reference solver: all matrices `X` with `rho_N(x) X = X rho_M(x)` for every generator.
pub fn hom_space_naive(m: &ModuleRep, n: &ModuleRep) -> Result<HomSpace> {
    m.require_same_algebra(n)?;
    let f = m.field();
    let (a, b) = (n.dim(), m.dim());
    if a == 0 || b == 0 {
        return Ok(HomSpace { source_dim: b, target_dim: a, basis: Vec::new() });
    }
    let mut eq = PrimeMatrix::zeros(f, 0, a * b);
    for (rm, rn) in m.action().iter().zip(n.action()) {
        // vec(X) row-major: rho_N X - X rho_M = (rho_N ⊗ I - I ⊗ rho_M^T) vec(X)
        let lhs = rn
            .kronecker(&PrimeMatrix::identity(f, b))
            .sub(&PrimeMatrix::identity(f, a).kronecker(&rm.transpose()));
        eq = eq.vstack(&lhs);
    }
    let basis = eq
        .kernel_basis()
        .into_iter()
        .map(|v| PrimeMatrix::from_vec(f, a, b, v).expect("shape"))
        .collect();
    Ok(HomSpace { source_dim: b, target_dim: a, basis })
}

/// Whether `phi` is a module homomorphism `M -> N`.
pub fn is_homomorphism(m: &ModuleRep, n: &ModuleRep, phi: &PrimeMatrix) -> bool {
    phi.rows() == n.dim()
        && phi.cols() == m.dim()
        && m.action().iter().zip(n.action()).all(|(rm, rn)| rn.matmul(phi) == phi.matmul(rm))
}
