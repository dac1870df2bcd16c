//! Weights of the A1 and A2 root systems in fundamental-weight coordinates.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integral weight, stored in the basis of fundamental weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Pairing with the i-th simple coroot.
    pub fn pair(&self, i: usize) -> i64 {
        self.0[i]
    }

    /// Whether every coordinate is divisible by `p`, i.e. the weight lies in `pX`.
    pub fn in_multiple_lattice(&self, p: i64) -> bool {
        self.0.iter().all(|&x| x.rem_euclid(p) == 0)
    }

    /// `self / p`, if the weight lies in `pX`.
    pub fn divide(&self, p: i64) -> Option<Weight> {
        self.in_multiple_lattice(p).then(|| Weight(self.0.iter().map(|&x| x / p).collect()))
    }

    /// Whether all coordinates are non-negative.
    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    /// Restriction to the first Frobenius kernel of the torus: coordinates mod p.
    pub fn residues(&self, p: u32) -> Vec<u32> {
        self.0.iter().map(|&x| x.rem_euclid(p as i64) as u32).collect()
    }

    fn zip(&self, other: &Weight, f: impl Fn(i64, i64) -> i64) -> Weight {
        assert_eq!(self.rank(), other.rank(), "weights of different rank");
        Weight(self.0.iter().zip(&other.0).map(|(&a, &b)| f(a, b)).collect())
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        self.zip(rhs, |a, b| a + b)
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        self.zip(rhs, |a, b| a - b)
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|&x| -x).collect())
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        -&self
    }
}

impl Mul<&Weight> for i64 {
    type Output = Weight;
    fn mul(self, rhs: &Weight) -> Weight {
        Weight(rhs.0.iter().map(|&x| self * x).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RootSystem {
    A1,
    A2,
}

impl RootSystem {
    pub fn rank(self) -> usize {
        match self {
            RootSystem::A1 => 1,
            RootSystem::A2 => 2,
        }
    }

    pub fn cartan(self) -> Vec<Vec<i64>> {
        match self {
            RootSystem::A1 => vec![vec![2]],
            RootSystem::A2 => vec![vec![2, -1], vec![-1, 2]],
        }
    }

    /// Determinant of the Cartan matrix; denominators of root coordinates divide it.
    pub fn det(self) -> i64 {
        match self {
            RootSystem::A1 => 2,
            RootSystem::A2 => 3,
        }
    }

    /// `alpha_i` in fundamental coordinates: the i-th row of the Cartan matrix.
    pub fn simple_root(self, i: usize) -> Weight {
        Weight(self.cartan()[i].clone())
    }

    pub fn fundamental(self, i: usize) -> Weight {
        let mut w = Weight::zero(self.rank());
        w.0[i] = 1;
        w
    }

    pub fn rho(self) -> Weight {
        Weight(vec![1; self.rank()])
    }

    /// Weight with the given coordinates in the basis of simple roots.
    pub fn from_roots(self, c: &[i64]) -> Weight {
        assert_eq!(c.len(), self.rank());
        let mut w = Weight::zero(self.rank());
        for (i, &ci) in c.iter().enumerate() {
            w = &w + &(ci * &self.simple_root(i));
        }
        w
    }

    /// Coordinates in the basis of simple roots, as numerators over `det()`.
    pub fn to_roots_scaled(self, w: &Weight) -> Vec<i64> {
        match self {
            RootSystem::A1 => vec![w.0[0]],
            RootSystem::A2 => vec![2 * w.0[0] + w.0[1], w.0[0] + 2 * w.0[1]],
        }
    }

    /// Integral root coordinates, if the weight lies in the root lattice.
    pub fn to_roots(self, w: &Weight) -> Option<Vec<i64>> {
        let d = self.det();
        let s = self.to_roots_scaled(w);
        s.iter().all(|&x| x % d == 0).then(|| s.iter().map(|&x| x / d).collect())
    }

    /// Simple reflection `s_i(w) = w - <w, alpha_i^v> alpha_i`.
    pub fn reflect(self, i: usize, w: &Weight) -> Weight {
        w - &(w.pair(i) * &self.simple_root(i))
    }

    /// Dot action `s_i . w = s_i(w + rho) - rho`.
    pub fn dot(self, i: usize, w: &Weight) -> Weight {
        let r = self.rho();
        &self.reflect(i, &(w + &r)) - &r
    }

    /// Human-readable form in simple-root coordinates when integral, e.g. `-2a1-a2`.
    pub fn format_roots(self, w: &Weight) -> String {
        match self.to_roots(w) {
            Some(c) => format_linear(&c, "a"),
            None => format_linear(&w.0, "w"),
        }
    }

    /// Parses the output of [`RootSystem::format_roots`].
    pub fn parse_roots(self, s: &str) -> Result<Weight> {
        let (coeffs, sym) = parse_linear(s, self.rank())?;
        Ok(match sym {
            'w' => Weight(coeffs),
            _ => self.from_roots(&coeffs),
        })
    }
}

fn format_linear(c: &[i64], sym: &str) -> String {
    let mut out = String::new();
    for (i, &x) in c.iter().enumerate() {
        if x == 0 {
            continue;
        }
        if x < 0 {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if x.abs() != 1 {
            out.push_str(&x.abs().to_string());
        }
        out.push_str(&format!("{sym}{}", i + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn parse_linear(s: &str, rank: usize) -> Result<(Vec<i64>, char)> {
    let bad = || Error::Format(format!("cannot parse weight `{s}`"));
    let s = s.trim();
    let mut coeffs = vec![0; rank];
    let mut sym = 'a';
    if s == "0" {
        return Ok((coeffs, sym));
    }
    let bytes: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < bytes.len() {
        let mut sign = 1;
        if bytes[i] == '+' || bytes[i] == '-' {
            if bytes[i] == '-' {
                sign = -1;
            }
            i += 1;
        }
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let mag: i64 = if start == i {
            1
        } else {
            bytes[start..i].iter().collect::<String>().parse().map_err(|_| bad())?
        };
        let c = *bytes.get(i).ok_or_else(bad)?;
        if c != 'a' && c != 'w' {
            return Err(bad());
        }
        sym = c;
        i += 1;
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let idx: usize = bytes[start..i].iter().collect::<String>().parse().map_err(|_| bad())?;
        if idx == 0 || idx > rank {
            return Err(bad());
        }
        coeffs[idx - 1] += sign * mag;
    }
    Ok((coeffs, sym))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_dot_action() {
        let r = RootSystem::A2;
        let w2 = r.fundamental(1);
        assert_eq!(r.dot(0, &w2), Weight(vec![-2, 2]));
        let mu = &r.from_roots(&[-2, -1]) - &r.fundamental(0);
        assert_eq!(&mu - &r.dot(0, &w2), r.from_roots(&[-2, -2]));
        assert_eq!(&mu - &r.dot(1, &w2), r.from_roots(&[-3, 0]));
    }

    #[test]
    fn root_coordinates_round_trip() {
        let r = RootSystem::A2;
        let w = r.from_roots(&[-3, -1]);
        assert_eq!(r.to_roots(&w), Some(vec![-3, -1]));
        assert_eq!(r.to_roots(&r.fundamental(0)), None);
        assert_eq!(r.format_roots(&w), "-3a1-a2");
        assert_eq!(r.parse_roots("-3a1-a2").unwrap(), w);
        assert_eq!(r.parse_roots("0").unwrap(), Weight::zero(2));
        assert_eq!(r.format_roots(&r.fundamental(0)), "w1");
    }
}
