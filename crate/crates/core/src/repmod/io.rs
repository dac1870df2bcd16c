use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hopf::{PBWAlgebra, Presentation, PresentationFile, PRESET_NAMES};
use crate::linalg::PrimeMatrix;
use crate::weight::Weight;

use super::module::ModuleRep;

/// Where a module file finds its algebra.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraRef {
    Preset { preset: String, p: u32 },
    /// Path to an algebra JSON file, relative to the module file.
    File { file: String },
    Inline { presentation: PresentationFile },
}

impl AlgebraRef {
    /// A preset tag when the algebra is a preset, otherwise the inline presentation.
    pub fn for_algebra(alg: &PBWAlgebra) -> Self {
        let pres = alg.presentation();
        if PRESET_NAMES.contains(&pres.name()) {
            if let Ok(q) = crate::hopf::preset(pres.name(), pres.p()) {
                if q.same_structure(pres) {
                    return AlgebraRef::Preset { preset: pres.name().to_string(), p: pres.p() };
                }
            }
        }
        AlgebraRef::Inline { presentation: pres.to_file() }
    }

    pub fn resolve(&self, base: Option<&Path>) -> Result<Arc<PBWAlgebra>> {
        match self {
            AlgebraRef::Preset { preset, p } => PBWAlgebra::preset(preset, *p),
            AlgebraRef::File { file } => {
                let path = base.map_or_else(|| PathBuf::from(file), |b| b.join(file));
                PBWAlgebra::build(Presentation::from_json(&std::fs::read_to_string(path)?)?)
            }
            AlgebraRef::Inline { presentation } => PBWAlgebra::build(Presentation::from_file(presentation.clone())?),
        }
    }
}

/// On-disk form of a module: residues, one row-major matrix per generator.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModuleFile {
    pub algebra: AlgebraRef,
    pub dim: usize,
    pub action: Vec<Vec<Vec<i64>>>,
    pub weights: Option<Vec<Vec<i64>>>,
}

impl ModuleFile {
    pub fn from_module(m: &ModuleRep) -> Self {
        let n = m.dim();
        ModuleFile {
            algebra: AlgebraRef::for_algebra(m.algebra()),
            dim: n,
            action: m
                .action()
                .iter()
                .map(|a| (0..n).map(|r| a.row(r).iter().map(|&x| x as i64).collect()).collect())
                .collect(),
            weights: m.grading().map(|g| g.iter().map(|w| w.0.clone()).collect()),
        }
    }

    /// Validated module; `base` is the directory that relative algebra paths refer to.
    pub fn to_module(&self, base: Option<&Path>) -> Result<ModuleRep> {
        let alg = self.algebra.resolve(base)?;
        self.to_module_over(&alg)
    }

    pub fn to_module_over(&self, alg: &Arc<PBWAlgebra>) -> Result<ModuleRep> {
        let f = alg.field();
        let n = self.dim;
        if self.action.len() != alg.ngens() {
            return Err(Error::Format(format!(
                "{} action matrices for {} generators",
                self.action.len(),
                alg.ngens()
            )));
        }
        let action = self
            .action
            .iter()
            .map(|rows| {
                if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                    return Err(Error::Format(format!("action matrix is not {n} x {n}")));
                }
                let data = rows.iter().flatten().map(|&x| f.reduce(x)).collect();
                PrimeMatrix::from_vec(f, n, n, data)
            })
            .collect::<Result<Vec<_>>>()?;
        let grading = self.weights.as_ref().map(|ws| ws.iter().cloned().map(Weight).collect::<Vec<_>>());
        if grading.as_ref().is_some_and(|g| g.len() != n) {
            return Err(Error::Format("weights list has the wrong length".into()));
        }
        if n == 0 {
            return Ok(ModuleRep::zero(alg));
        }
        ModuleRep::new(alg.clone(), action, grading)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("module file serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn load(path: &Path) -> Result<ModuleRep> {
        let file = Self::from_json(&std::fs::read_to_string(path)?)?;
        file.to_module(path.parent())
    }

    pub fn save(m: &ModuleRep, path: &Path) -> Result<()> {
        std::fs::write(path, Self::from_module(m).to_json())?;
        Ok(())
    }
}
