use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{PrimeField, PrimeMatrix};
use crate::weight::{RootSystem, Weight};

/// A restricted Lie algebra over F_p given by structure constants on a fixed basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    name: String,
    field: PrimeField,
    basis: Vec<String>,
    /// `brackets[i * d + j]` holds the coordinates of `[x_i, x_j]`.
    brackets: Vec<Vec<u32>>,
    p_power: Vec<Vec<u32>>,
    weights: Option<Vec<Weight>>,
    nilpotent: Vec<bool>,
    /// For toral basis elements that are simple coroots, the index of the root.
    coroots: Vec<Option<usize>>,
    root_system: Option<RootSystem>,
}

/// Builder input for [`Presentation::new`]; structure constants may be any integers.
#[derive(Clone, Debug, Default)]
pub struct PresentationData {
    pub name: String,
    pub p: u32,
    pub basis: Vec<String>,
    pub brackets: Vec<(usize, usize, Vec<i64>)>,
    pub p_power: Vec<Vec<i64>>,
    pub weights: Option<Vec<Weight>>,
    pub nilpotent: Vec<bool>,
    pub coroots: Vec<Option<usize>>,
    pub root_system: Option<RootSystem>,
}

impl Presentation {
    /// Validates and builds a presentation. Brackets not listed are zero; listing
    /// `[x_i, x_j]` also fixes `[x_j, x_i]`.
    pub fn new(data: PresentationData) -> Result<Self> {
        let field = PrimeField::new(data.p)?;
        let d = data.basis.len();
        let bad = |m: String| Error::InconsistentPresentation(m);
        let mut brackets = vec![vec![0u32; d]; d * d];
        let mut seen = vec![false; d * d];
        for (i, j, c) in &data.brackets {
            let (i, j) = (*i, *j);
            if i >= d || j >= d || c.len() != d {
                return Err(bad(format!("bracket entry ({i},{j}) out of range")));
            }
            let v: Vec<u32> = c.iter().map(|&x| field.reduce(x)).collect();
            let neg: Vec<u32> = v.iter().map(|&x| field.neg(x)).collect();
            if seen[i * d + j] && brackets[i * d + j] != v {
                return Err(bad(format!("conflicting entries for [{i},{j}]")));
            }
            if seen[j * d + i] && brackets[j * d + i] != neg {
                return Err(bad(format!("bracket [{i},{j}] is not antisymmetric")));
            }
            brackets[i * d + j] = v;
            brackets[j * d + i] = neg;
            seen[i * d + j] = true;
            seen[j * d + i] = true;
        }
        if data.p_power.len() != d || data.p_power.iter().any(|c| c.len() != d) {
            return Err(bad("p-power table has the wrong shape".into()));
        }
        let p_power = data
            .p_power
            .iter()
            .map(|c| c.iter().map(|&x| field.reduce(x)).collect())
            .collect();
        let nilpotent = if data.nilpotent.is_empty() { vec![false; d] } else { data.nilpotent };
        let coroots = if data.coroots.is_empty() { vec![None; d] } else { data.coroots };
        if nilpotent.len() != d || coroots.len() != d {
            return Err(bad("flag vectors have the wrong length".into()));
        }
        let pres = Presentation {
            name: data.name,
            field,
            basis: data.basis,
            brackets,
            p_power,
            weights: data.weights,
            nilpotent,
            coroots,
            root_system: data.root_system,
        };
        pres.validate()?;
        Ok(pres)
    }

    fn validate(&self) -> Result<()> {
        let d = self.dim();
        let f = self.field;
        let bad = |m: String| Error::InconsistentPresentation(m);
        for i in 0..d {
            if self.bracket(i, i).iter().any(|&x| x != 0) {
                return Err(bad(format!("[{0},{0}] != 0", self.basis[i])));
            }
        }
        // Jacobi on the adjoint representation: ad[x,y] = [ad x, ad y]
        let ad: Vec<PrimeMatrix> = (0..d).map(|i| self.ad(i)).collect();
        for i in 0..d {
            for j in i + 1..d {
                let lhs = self.ad_of(self.bracket(i, j));
                if lhs != ad[i].commutator(&ad[j]) {
                    return Err(bad(format!(
                        "Jacobi identity fails for {} and {}",
                        self.basis[i], self.basis[j]
                    )));
                }
            }
        }
        for i in 0..d {
            if self.ad_of(&self.p_power[i]) != ad[i].pow(f.p() as u64) {
                return Err(bad(format!("ad({0}^[p]) != ad({0})^p", self.basis[i])));
            }
        }
        if let Some(ws) = &self.weights {
            if ws.len() != d {
                return Err(bad("weight list has the wrong length".into()));
            }
            let rank = ws.first().map_or(0, |w| w.rank());
            if ws.iter().any(|w| w.rank() != rank) {
                return Err(bad("weights of mixed rank".into()));
            }
            if let Some(rs) = self.root_system {
                if rs.rank() != rank {
                    return Err(bad("weights do not match the root system".into()));
                }
            }
            for i in 0..d {
                for j in 0..d {
                    let target = &ws[i] + &ws[j];
                    for (k, &c) in self.bracket(i, j).iter().enumerate() {
                        if c != 0 && ws[k] != target {
                            return Err(bad(format!(
                                "[{}, {}] is not homogeneous",
                                self.basis[i], self.basis[j]
                            )));
                        }
                    }
                }
                let target = f.p() as i64 * &ws[i];
                for (k, &c) in self.p_power[i].iter().enumerate() {
                    if c != 0 && ws[k] != target {
                        return Err(bad(format!("{}^[p] is not homogeneous", self.basis[i])));
                    }
                }
            }
            for i in 0..d {
                let Some(r) = self.coroots[i] else { continue };
                if r >= rank || !ws[i].is_zero() || self.nilpotent[i] {
                    return Err(bad(format!("{} is not a valid coroot", self.basis[i])));
                }
                for j in 0..d {
                    let mut expect = vec![0; d];
                    expect[j] = f.reduce(ws[j].pair(r));
                    if self.bracket(i, j) != expect.as_slice() {
                        return Err(bad(format!(
                            "[{}, {}] disagrees with the weight of {}",
                            self.basis[i], self.basis[j], self.basis[j]
                        )));
                    }
                }
            }
        } else if self.coroots.iter().any(|c| c.is_some()) {
            return Err(bad("coroots require weights".into()));
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == name)
    }

    pub fn bracket(&self, i: usize, j: usize) -> &[u32] {
        &self.brackets[i * self.dim() + j]
    }

    pub fn p_power(&self, i: usize) -> &[u32] {
        &self.p_power[i]
    }

    pub fn weights(&self) -> Option<&[Weight]> {
        self.weights.as_deref()
    }

    pub fn weight(&self, i: usize) -> Option<&Weight> {
        self.weights.as_ref().map(|w| &w[i])
    }

    pub fn is_graded(&self) -> bool {
        self.weights.is_some()
    }

    pub fn nilpotent(&self) -> &[bool] {
        &self.nilpotent
    }

    pub fn coroot(&self, i: usize) -> Option<usize> {
        self.coroots[i]
    }

    pub fn root_system(&self) -> Option<RootSystem> {
        self.root_system
    }

    /// Rank of the weight lattice, if graded.
    pub fn weight_rank(&self) -> Option<usize> {
        self.weights.as_ref().map(|w| w.first().map_or(0, |x| x.rank()))
    }

    /// Matrix of `ad(x_i)` in the Lie basis.
    pub fn ad(&self, i: usize) -> PrimeMatrix {
        let d = self.dim();
        let cols: Vec<Vec<u32>> = (0..d).map(|j| self.bracket(i, j).to_vec()).collect();
        PrimeMatrix::from_columns(self.field, d, &cols)
    }

    /// `ad(x)` for a Lie element with coordinates `x`.
    pub fn ad_of(&self, x: &[u32]) -> PrimeMatrix {
        let d = self.dim();
        let mut m = PrimeMatrix::zeros(self.field, d, d);
        for (i, &c) in x.iter().enumerate() {
            if c != 0 {
                m.add_scaled_assign(c, &self.ad(i));
            }
        }
        m
    }

    /// Bracket of two Lie elements in coordinates.
    pub fn bracket_of(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        self.ad_of(x).mul_vec(y)
    }

    /// Same presentation under another name; equality ignores nothing else.
    pub fn renamed(&self, name: &str) -> Self {
        Presentation { name: name.to_string(), ..self.clone() }
    }

    /// Equality of the mathematical data, ignoring the display name.
    pub fn same_structure(&self, other: &Presentation) -> bool {
        self.field == other.field
            && self.basis == other.basis
            && self.brackets == other.brackets
            && self.p_power == other.p_power
            && self.weights == other.weights
            && self.nilpotent == other.nilpotent
            && self.coroots == other.coroots
    }

    pub fn to_file(&self) -> PresentationFile {
        let d = self.dim();
        let mut brackets = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                let c = self.bracket(i, j);
                if c.iter().any(|&x| x != 0) {
                    brackets.push((i, j, c.iter().map(|&x| x as i64).collect()));
                }
            }
        }
        PresentationFile {
            name: Some(self.name.clone()),
            p: self.p(),
            basis: self.basis.clone(),
            brackets,
            p_power: self.p_power.iter().map(|c| c.iter().map(|&x| x as i64).collect()).collect(),
            weights: self.weights.as_ref().map(|ws| ws.iter().map(|w| w.0.clone()).collect()),
            nilpotent: self.nilpotent.clone(),
            coroots: Some(self.coroots.clone()),
            root_system: self.root_system,
        }
    }

    pub fn from_file(file: PresentationFile) -> Result<Self> {
        Presentation::new(PresentationData {
            name: file.name.unwrap_or_else(|| "custom".into()),
            p: file.p,
            basis: file.basis,
            brackets: file.brackets,
            p_power: file.p_power,
            weights: file.weights.map(|ws| ws.into_iter().map(Weight).collect()),
            nilpotent: file.nilpotent,
            coroots: file.coroots.unwrap_or_default(),
            root_system: file.root_system,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("presentation serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Self::from_file(serde_json::from_str(s)?)
    }
}

/// On-disk form of a presentation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PresentationFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub p: u32,
    pub basis: Vec<String>,
    pub brackets: Vec<(usize, usize, Vec<i64>)>,
    pub p_power: Vec<Vec<i64>>,
    pub weights: Option<Vec<Vec<i64>>>,
    #[serde(default)]
    pub nilpotent: Vec<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coroots: Option<Vec<Option<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root_system: Option<RootSystem>,
}
