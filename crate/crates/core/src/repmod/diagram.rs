use std::fmt::Write;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::weight::{RootSystem, Weight};

use super::module::ModuleRep;

/// Weight nodes of a graded module with arrows for the negative simple root generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightDiagram {
    pub root_system: RootSystem,
    /// One node per basis vector.
    pub nodes: Vec<Weight>,
    /// `(from, to, i)`: the generator of weight `-alpha_i` has a nonzero entry from `from` to `to`.
    pub arrows: Vec<(usize, usize, usize)>,
}

impl WeightDiagram {
    pub fn from_module(m: &ModuleRep) -> Result<Self> {
        let g = m.grading().ok_or(Error::Ungraded)?;
        let pres = m.algebra().presentation();
        let rs = pres
            .root_system()
            .ok_or_else(|| Error::UnsupportedAlgebra("weight diagrams need a root system".into()))?;
        let ws = pres.weights().ok_or(Error::Ungraded)?;
        let mut arrows = Vec::new();
        for i in 0..rs.rank() {
            let neg = -&rs.simple_root(i);
            for (k, _) in ws.iter().enumerate().filter(|(_, w)| **w == neg) {
                let a = m.gen_action(k);
                for c in 0..m.dim() {
                    for r in 0..m.dim() {
                        if a.get(r, c) != 0 {
                            arrows.push((c, r, i + 1));
                        }
                    }
                }
            }
        }
        arrows.sort();
        arrows.dedup();
        Ok(WeightDiagram { root_system: rs, nodes: g.to_vec(), arrows })
    }

    /// Sorted multiset of node weights.
    pub fn weight_multiset(&self) -> Vec<Weight> {
        let mut w = self.nodes.clone();
        w.sort();
        w
    }

    /// DOT text; node labels are weights in simple-root form, arrow labels `a1`/`a2`.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = String::new();
        writeln!(s, "digraph \"{name}\" {{").unwrap();
        writeln!(s, "  rankdir=TB;").unwrap();
        writeln!(s, "  // root system {:?}", self.root_system).unwrap();
        for (i, w) in self.nodes.iter().enumerate() {
            writeln!(s, "  n{i} [label=\"{}\"];", self.root_system.format_roots(w)).unwrap();
        }
        for &(a, b, r) in &self.arrows {
            writeln!(s, "  n{a} -> n{b} [label=\"a{r}\"];").unwrap();
        }
        s.push_str("}\n");
        s
    }
}

fn quoted_label(line: &str) -> Result<&str> {
    let start = line.find("label=\"").ok_or_else(|| Error::Format(format!("missing label in `{line}`")))? + 7;
    let len = line[start..].find('"').ok_or_else(|| Error::Format(format!("unterminated label in `{line}`")))?;
    Ok(&line[start..start + len])
}

fn node_id(s: &str) -> Result<usize> {
    s.trim()
        .strip_prefix('n')
        .and_then(|x| x.parse().ok())
        .ok_or_else(|| Error::Format(format!("bad node id `{s}`")))
}

/// Parses DOT text produced by [`WeightDiagram::to_dot`].
pub fn parse_dot(text: &str) -> Result<WeightDiagram> {
    let rs_line = text
        .lines()
        .find_map(|l| l.trim().strip_prefix("// root system "))
        .ok_or_else(|| Error::Format("missing root system comment".into()))?;
    let rs = match rs_line.trim() {
        "A1" => RootSystem::A1,
        "A2" => RootSystem::A2,
        other => return Err(Error::Format(format!("unknown root system `{other}`"))),
    };
    let mut nodes: Vec<(usize, Weight)> = Vec::new();
    let mut arrows = Vec::new();
    for line in text.lines().map(str::trim) {
        if !line.starts_with('n') {
            continue;
        }
        let head = line.split('[').next().unwrap_or("");
        if let Some((a, b)) = head.split_once("->") {
            let label = quoted_label(line)?;
            let r: usize = label
                .strip_prefix('a')
                .and_then(|x| x.parse().ok())
                .ok_or_else(|| Error::Format(format!("bad arrow label `{label}`")))?;
            arrows.push((node_id(a)?, node_id(b)?, r));
        } else {
            nodes.push((node_id(head)?, rs.parse_roots(quoted_label(line)?)?));
        }
    }
    nodes.sort_by_key(|(i, _)| *i);
    if nodes.iter().enumerate().any(|(k, (i, _))| k != *i) {
        return Err(Error::Format("node ids are not contiguous".into()));
    }
    if arrows.iter().any(|&(a, b, r)| a >= nodes.len() || b >= nodes.len() || r == 0 || r > rs.rank()) {
        return Err(Error::Format("arrow refers to an unknown node or root".into()));
    }
    arrows.sort();
    Ok(WeightDiagram { root_system: rs, nodes: nodes.into_iter().map(|(_, w)| w).collect(), arrows })
}
