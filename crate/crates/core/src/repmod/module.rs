use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::hopf::{eval, PBWAlgebra};
use crate::linalg::{PrimeField, PrimeMatrix, Subspace};
use crate::structure::FreePresentation;
use crate::weight::Weight;

/// A finite-dimensional module over `u(g)`, given by the action of the Lie generators.
#[derive(Clone)]
pub struct ModuleRep {
    algebra: Arc<PBWAlgebra>,
    dim: usize,
    action: Vec<PrimeMatrix>,
    grading: Option<Vec<Weight>>,
    monomials: OnceLock<Arc<Vec<PrimeMatrix>>>,
    free_pres: OnceLock<Arc<FreePresentation>>,
}

impl fmt::Debug for ModuleRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ModuleRep")
            .field("algebra", &self.algebra.presentation().name())
            .field("dim", &self.dim)
            .field("action", &self.action)
            .field("grading", &self.grading)
            .finish()
    }
}

impl PartialEq for ModuleRep {
    fn eq(&self, other: &Self) -> bool {
        self.same_algebra(other) && self.action == other.action && self.grading == other.grading
    }
}

impl ModuleRep {
    /// Validated constructor: checks shapes, every defining relation and the grading.
    pub fn new(
        algebra: Arc<PBWAlgebra>,
        action: Vec<PrimeMatrix>,
        grading: Option<Vec<Weight>>,
    ) -> Result<Self> {
        let dim = action.first().map_or(0, |m| m.rows());
        if action.len() != algebra.ngens() {
            return Err(Error::InvalidModule(format!(
                "{} matrices for {} generators",
                action.len(),
                algebra.ngens()
            )));
        }
        for m in &action {
            if m.rows() != dim || m.cols() != dim || m.field() != algebra.field() {
                return Err(Error::InvalidModule("generator matrices of inconsistent shape".into()));
            }
        }
        let m = Self::from_parts(algebra, dim, action, grading);
        if let Some(v) = m.first_violation() {
            return Err(Error::InvalidModule(v));
        }
        Ok(m)
    }

    /// Constructor for results of operations that preserve validity.
    pub(crate) fn from_parts(
        algebra: Arc<PBWAlgebra>,
        dim: usize,
        action: Vec<PrimeMatrix>,
        grading: Option<Vec<Weight>>,
    ) -> Self {
        let action = if dim == 0 && action.is_empty() {
            vec![PrimeMatrix::zeros(algebra.field(), 0, 0); algebra.ngens()]
        } else {
            action
        };
        debug_assert_eq!(action.len(), algebra.ngens());
        ModuleRep { algebra, dim, action, grading, monomials: OnceLock::new(), free_pres: OnceLock::new() }
    }

    pub fn zero(algebra: &Arc<PBWAlgebra>) -> Self {
        let f = algebra.field();
        let graded = algebra.presentation().is_graded();
        Self::from_parts(
            algebra.clone(),
            0,
            vec![PrimeMatrix::zeros(f, 0, 0); algebra.ngens()],
            graded.then(Vec::new),
        )
    }

    /// The trivial module `k`, graded by the zero weight when the algebra is graded.
    pub fn trivial(algebra: &Arc<PBWAlgebra>) -> Self {
        let f = algebra.field();
        let grading = algebra.presentation().weight_rank().map(|r| vec![Weight::zero(r)]);
        Self::from_parts(algebra.clone(), 1, vec![PrimeMatrix::zeros(f, 1, 1); algebra.ngens()], grading)
    }

    /// The left regular module. It is graded only when no toral generator is present.
    pub fn regular(algebra: &Arc<PBWAlgebra>) -> Self {
        let pres = algebra.presentation();
        let grading = match pres.weights() {
            Some(ws) if pres.nilpotent().iter().all(|&b| b) => Some(
                (0..algebra.dim())
                    .map(|idx| {
                        let e = algebra.exponents(idx);
                        e.iter().enumerate().fold(Weight::zero(ws[0].rank()), |acc, (i, &k)| {
                            &acc + &(k as i64 * &ws[i])
                        })
                    })
                    .collect(),
            ),
            _ => None,
        };
        Self::from_parts(algebra.clone(), algebra.dim(), algebra.gen_matrices().to_vec(), grading)
    }

    pub fn algebra(&self) -> &Arc<PBWAlgebra> {
        &self.algebra
    }

    pub fn field(&self) -> PrimeField {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    pub fn action(&self) -> &[PrimeMatrix] {
        &self.action
    }

    pub fn gen_action(&self, i: usize) -> &PrimeMatrix {
        &self.action[i]
    }

    pub fn grading(&self) -> Option<&[Weight]> {
        self.grading.as_deref()
    }

    pub fn is_graded(&self) -> bool {
        self.grading.is_some()
    }

    pub fn weight(&self, i: usize) -> Option<&Weight> {
        self.grading.as_ref().map(|g| &g[i])
    }

    pub fn with_grading(&self, grading: Option<Vec<Weight>>) -> Result<Self> {
        Self::new(self.algebra.clone(), self.action.clone(), grading)
    }

    pub fn ungraded(&self) -> Self {
        Self::from_parts(self.algebra.clone(), self.dim, self.action.clone(), None)
    }

    pub fn same_algebra(&self, other: &ModuleRep) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra) || *self.algebra == *other.algebra
    }

    pub(crate) fn require_same_algebra(&self, other: &ModuleRep) -> Result<()> {
        if self.same_algebra(other) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    /// Whether all generators act by zero.
    pub fn is_trivial_action(&self) -> bool {
        self.action.iter().all(|m| m.is_zero())
    }

    /// Diagnostic validity check: `None` when every relation holds, otherwise the first failure.
    pub fn first_violation(&self) -> Option<String> {
        if self.dim > 0 {
            if let Some(v) = self.algebra.first_violation(&self.action) {
                return Some(v);
            }
        }
        self.grading_violation()
    }

    pub fn is_valid(&self) -> bool {
        self.first_violation().is_none()
    }

    pub(crate) fn grading_violation(&self) -> Option<String> {
        let g = self.grading.as_ref()?;
        let pres = self.algebra.presentation();
        let Some(ws) = pres.weights() else {
            return Some("graded module over an ungraded algebra".into());
        };
        if g.len() != self.dim {
            return Some("grading has the wrong length".into());
        }
        let f = self.field();
        for (i, m) in self.action.iter().enumerate() {
            let name = &pres.basis_names()[i];
            for r in 0..self.dim {
                for c in 0..self.dim {
                    let x = m.get(r, c);
                    if let Some(root) = pres.coroot(i) {
                        let expect = if r == c { f.reduce(g[c].pair(root)) } else { 0 };
                        if x != expect {
                            return Some(format!("{name} does not act by the weight pairing"));
                        }
                    } else if x != 0 && g[r] != &g[c] + &ws[i] {
                        return Some(format!("{name} does not shift weights by {}", ws[i]));
                    }
                }
            }
        }
        None
    }

    /// `rho(x^e)` for every PBW monomial, computed once per module.
    pub fn monomials(&self) -> &[PrimeMatrix] {
        self.monomials.get_or_init(|| {
            Arc::new(eval::monomial_matrices(&self.action, self.dim, self.algebra.p(), self.field()))
        })
    }

    pub(crate) fn free_presentation(&self) -> &FreePresentation {
        self.free_pres.get_or_init(|| Arc::new(FreePresentation::compute(self)))
    }

    /// Matrix of an algebra element acting on the module.
    pub fn act_element(&self, a: &[u32]) -> PrimeMatrix {
        if self.dim == 0 {
            return PrimeMatrix::zeros(self.field(), 0, 0);
        }
        eval::element_matrix(&self.action, self.dim, self.algebra.p(), a)
    }

    pub fn apply_element(&self, a: &[u32], v: &[u32]) -> Vec<u32> {
        if self.dim == 0 {
            return Vec::new();
        }
        eval::apply_element(&self.action, self.algebra.p(), a, v)
    }

    /// `x^e v` for every PBW monomial.
    pub fn orbit(&self, v: &[u32]) -> Vec<Vec<u32>> {
        eval::orbit(&self.action, self.algebra.p(), v)
    }

    /// Smallest submodule containing the given vectors.
    pub fn spin<I: IntoIterator<Item = Vec<u32>>>(&self, vectors: I) -> Subspace {
        let mut s = Subspace::zero(self.field(), self.dim);
        self.spin_into(&mut s, vectors);
        s
    }

    /// Grows `s` to the submodule generated by `s` and `vectors`; `s` must already be closed
    /// or be grown only through this method.
    pub fn spin_into<I: IntoIterator<Item = Vec<u32>>>(&self, s: &mut Subspace, vectors: I) {
        let mut queue: Vec<Vec<u32>> = Vec::new();
        for v in vectors {
            let before = s.dim();
            if s.insert(v.clone()) {
                debug_assert_eq!(s.dim(), before + 1);
                queue.push(v);
            }
        }
        while let Some(v) = queue.pop() {
            for g in &self.action {
                let w = g.mul_vec(&v);
                if s.insert(w.clone()) {
                    queue.push(w);
                }
            }
        }
    }

    pub fn is_submodule(&self, s: &Subspace) -> bool {
        s.basis().iter().all(|v| self.action.iter().all(|g| s.contains(&g.mul_vec(v))))
    }

    /// Submodule on the echelon basis of `s`, together with its inclusion matrix.
    pub fn submodule(&self, s: &Subspace) -> Result<(ModuleRep, PrimeMatrix)> {
        if !self.is_submodule(s) {
            return Err(Error::InvalidModule("subspace is not a submodule".into()));
        }
        let k = s.dim();
        let f = self.field();
        let action = self
            .action
            .iter()
            .map(|g| {
                let cols: Vec<Vec<u32>> = s.basis().iter().map(|v| s.coordinates(&g.mul_vec(v))).collect();
                PrimeMatrix::from_columns(f, k, &cols)
            })
            .collect();
        let grading = self.grading.as_ref().and_then(|g| homogeneous_weights(g, s.basis()));
        let sub = Self::from_parts(self.algebra.clone(), k, action, grading);
        Ok((sub, s.basis_matrix()))
    }

    /// Quotient on the non-pivot coordinates of `s`, together with the projection matrix.
    pub fn quotient(&self, s: &Subspace) -> Result<(ModuleRep, PrimeMatrix)> {
        if !self.is_submodule(s) {
            return Err(Error::InvalidModule("subspace is not a submodule".into()));
        }
        let f = self.field();
        let keep = s.non_pivots();
        let q = keep.len();
        let mut proj = PrimeMatrix::zeros(f, q, self.dim);
        for c in 0..self.dim {
            let mut e = vec![0; self.dim];
            e[c] = 1;
            let r = s.reduce(&e);
            for (j, &k) in keep.iter().enumerate() {
                proj.set(j, c, r[k]);
            }
        }
        let action = self
            .action
            .iter()
            .map(|g| proj.matmul(&g.select_columns(&keep)))
            .collect();
        let grading = self
            .grading
            .as_ref()
            .filter(|g| homogeneous_weights(g, s.basis()).is_some())
            .map(|g| keep.iter().map(|&k| g[k].clone()).collect());
        Ok((Self::from_parts(self.algebra.clone(), q, action, grading), proj))
    }

    /// Change of basis: the module on the columns of the invertible matrix `b`.
    pub fn conjugate(&self, b: &PrimeMatrix) -> Result<ModuleRep> {
        let inv = b
            .inverse()
            .ok_or_else(|| Error::InvalidModule("change of basis is singular".into()))?;
        let action = self.action.iter().map(|g| inv.matmul(&g.matmul(b))).collect();
        let grading = match &self.grading {
            Some(g) => homogeneous_weights(g, &b.columns()),
            None => None,
        };
        Ok(Self::from_parts(self.algebra.clone(), self.dim, action, grading))
    }
}

/// Weights of homogeneous vectors, or `None` if some vector mixes weights.
pub(crate) fn homogeneous_weights(grading: &[Weight], vectors: &[Vec<u32>]) -> Option<Vec<Weight>> {
    let mut out = Vec::with_capacity(vectors.len());
    for v in vectors {
        let mut w: Option<&Weight> = None;
        for (i, &x) in v.iter().enumerate() {
            if x != 0 {
                match w {
                    None => w = Some(&grading[i]),
                    Some(prev) if *prev != grading[i] => return None,
                    _ => {}
                }
            }
        }
        out.push(w?.clone());
    }
    Some(out)
}
