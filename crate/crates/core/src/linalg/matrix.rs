//! Dense row-major matrices over a prime field.
//!
//! Pivoting always takes the first nonzero entry of a column, so echelon
//! forms and kernel bases are reproducible from run to run.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::field::PrimeField;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for PrimeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PrimeMatrix F_{} {}x{} [", self.field.p(), self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        write!(f, "]")
    }
}

impl PrimeMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        PrimeMatrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % field.p();
        }
        m
    }

    pub fn scalar(field: PrimeField, n: usize, c: u32) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = c % field.p();
        }
        m
    }

    /// Builds a matrix from residues in row-major order, rejecting out-of-range entries.
    pub fn from_vec(field: PrimeField, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {}x{} matrix",
                data.len(),
                rows,
                cols
            )));
        }
        if let Some(bad) = data.iter().find(|&&x| x >= field.p()) {
            return Err(Error::Format(format!("entry {} is not a residue mod {}", bad, field.p())));
        }
        Ok(PrimeMatrix { field, rows, cols, data })
    }

    /// Builds a matrix from integer rows, reducing every entry mod p.
    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let data = rows.iter().flat_map(|r| r.iter().map(|&x| field.reduce(x))).collect();
        Ok(PrimeMatrix { field, rows: rows.len(), cols, data })
    }

    pub fn from_columns(field: PrimeField, rows: usize, columns: &[Vec<u32>]) -> Self {
        let cols = columns.len();
        let mut m = Self::zeros(field, rows, cols);
        for (j, c) in columns.iter().enumerate() {
            debug_assert_eq!(c.len(), rows);
            for i in 0..rows {
                m.data[i * cols + j] = c[i];
            }
        }
        m
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.field.p();
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u32>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == u32::from(i == j)))
    }

    pub fn nonzeros(&self) -> usize {
        self.data.iter().filter(|&&x| x != 0).count()
    }

    fn check_same_shape(&self, other: &Self) {
        assert_eq!(self.field, other.field, "field mismatch");
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_same_shape(other);
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        self.with_data(data)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_same_shape(other);
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        self.with_data(data)
    }

    /// `self += c * other`
    pub fn add_scaled_assign(&mut self, c: u32, other: &Self) {
        self.check_same_shape(other);
        if c == 0 {
            return;
        }
        let f = self.field;
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            if b != 0 {
                *a = f.add(*a, f.mul(c, b));
            }
        }
    }

    pub fn scale(&self, c: u32) -> Self {
        let f = self.field;
        let data = self.data.iter().map(|&a| f.mul(a, c)).collect();
        self.with_data(data)
    }

    pub fn neg(&self) -> Self {
        let f = self.field;
        let data = self.data.iter().map(|&a| f.neg(a)).collect();
        self.with_data(data)
    }

    fn with_data(&self, data: Vec<u32>) -> Self {
        PrimeMatrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    /// Matrix product; panics on a shape mismatch. Zero entries of `self` are skipped,
    /// so a sparse left factor costs roughly `nnz(self) * other.cols`.
    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.field, other.field, "field mismatch");
        assert_eq!(self.cols, other.rows, "shape mismatch in matmul");
        let p = self.field.p() as u64;
        let budget = self.field.accumulation_budget();
        let n = other.cols;
        let mut out = Self::zeros(self.field, self.rows, n);
        let mut acc = vec![0u64; n];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|x| *x = 0);
            let mut pending = 0usize;
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let brow = &other.data[k * n..(k + 1) * n];
                for (x, &b) in acc.iter_mut().zip(brow) {
                    *x += a * b as u64;
                }
                pending += 1;
                if pending >= budget {
                    acc.iter_mut().for_each(|x| *x %= p);
                    pending = 0;
                }
            }
            for (o, &x) in out.data[i * n..(i + 1) * n].iter_mut().zip(&acc) {
                *o = (x % p) as u32;
            }
        }
        out
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.p(), other.field.p()));
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(self.matmul(other))
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len(), "shape mismatch in mul_vec");
        let p = self.field.p() as u64;
        let budget = self.field.accumulation_budget();
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let mut acc = 0u64;
                let mut pending = 0;
                for (&a, &b) in row.iter().zip(v) {
                    if a != 0 && b != 0 {
                        acc += a as u64 * b as u64;
                        pending += 1;
                        if pending >= budget {
                            acc %= p;
                            pending = 0;
                        }
                    }
                }
                (acc % p) as u32
            })
            .collect()
    }

    /// `self * other - other * self`
    pub fn commutator(&self, other: &Self) -> Self {
        self.matmul(other).sub(&other.matmul(self))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.matmul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.matmul(&base);
            }
        }
        acc
    }

    /// Standard Kronecker product `a ⊗ b`: entry `(i*rb + k, j*cb + l) = a[i,j] * b[k,l]`.
    pub fn kronecker(&self, other: &Self) -> Self {
        assert_eq!(self.field, other.field, "field mismatch");
        let f = self.field;
        let (ra, ca, rb, cb) = (self.rows, self.cols, other.rows, other.cols);
        let mut out = Self::zeros(f, ra * rb, ca * cb);
        let oc = ca * cb;
        for i in 0..ra {
            for j in 0..ca {
                let a = self.data[i * ca + j];
                if a == 0 {
                    continue;
                }
                for k in 0..rb {
                    for l in 0..cb {
                        let b = other.data[k * cb + l];
                        if b != 0 {
                            out.data[(i * rb + k) * oc + j * cb + l] = f.mul(a, b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        let mut out = Self::zeros(self.field, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            out.data[r * out.cols..r * out.cols + self.cols].copy_from_slice(self.row(r));
            out.data[r * out.cols + self.cols..(r + 1) * out.cols].copy_from_slice(other.row(r));
        }
        out
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        PrimeMatrix { field: self.field, rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn block_diag(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.field, self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.data[r * out.cols + c] = self.get(r, c);
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                out.data[(r + self.rows) * out.cols + c + self.cols] = other.get(r, c);
            }
        }
        out
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        let mut out = Self::zeros(self.field, self.rows, idx.len());
        for r in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                out.data[r * idx.len() + j] = self.get(r, c);
            }
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &r in idx {
            data.extend_from_slice(self.row(r));
        }
        PrimeMatrix { field: self.field, rows: idx.len(), cols: self.cols, data }
    }

    /// Submatrix `rows x cols` given by index lists.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        self.select_rows(rows).select_columns(cols)
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        self.eliminate(true, self.cols)
    }

    /// Gaussian elimination restricted to the first `limit` columns.
    /// `full` additionally clears entries above each pivot.
    fn eliminate(&mut self, full: bool, limit: usize) -> Vec<usize> {
        let f = self.field;
        let p = f.p() as u64;
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut rank = 0;
        for c in 0..limit {
            if rank == self.rows {
                break;
            }
            let Some(pr) = (rank..self.rows).find(|&r| self.data[r * cols + c] != 0) else {
                continue;
            };
            if pr != rank {
                for k in 0..cols {
                    self.data.swap(pr * cols + k, rank * cols + k);
                }
            }
            let inv = f.inv(self.data[rank * cols + c]).unwrap();
            if inv != 1 {
                for k in c..cols {
                    let x = self.data[rank * cols + k];
                    if x != 0 {
                        self.data[rank * cols + k] = f.mul(x, inv);
                    }
                }
            }
            let (before, rest) = self.data.split_at_mut(rank * cols);
            let (pivot_row, after) = rest.split_at_mut(cols);
            let clear = |row: &mut [u32]| {
                let factor = row[c] as u64;
                if factor == 0 {
                    return;
                }
                let nf = p - factor;
                for k in c..cols {
                    let b = pivot_row[k];
                    if b != 0 {
                        row[k] = ((row[k] as u64 + nf * b as u64) % p) as u32;
                    }
                }
            };
            for row in after.chunks_mut(cols) {
                clear(row);
            }
            if full {
                for row in before.chunks_mut(cols) {
                    clear(row);
                }
            }
            pivots.push(c);
            rank += 1;
        }
        pivots
    }

    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let piv = m.rref_in_place();
        (m, piv)
    }

    /// Row rank by exact Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.eliminate(false, self.cols).len()
    }

    /// Basis of the null space `{x : self * x = 0}`, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<u32>> {
        let f = self.field;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u32; self.cols];
            v[free] = 1 % f.p();
            for (k, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(k, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Some `x` with `self * x = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[u32]) -> Result<Option<Vec<u32>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        let aug = self.hstack(&PrimeMatrix::from_columns(self.field, self.rows, &[b.to_vec()]));
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![0u32; self.cols];
        for (k, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(k, self.cols);
        }
        Ok(Some(x))
    }

    /// Solves `self * X = rhs` for a matrix `X`, returning `None` if some column is inconsistent.
    pub fn solve_matrix(&self, rhs: &PrimeMatrix) -> Option<PrimeMatrix> {
        assert_eq!(self.rows, rhs.rows);
        let aug = self.hstack(rhs);
        let mut r = aug;
        let pivots = r.eliminate(true, self.cols);
        // any nonzero row below the rank in the rhs part means inconsistency
        for row in pivots.len()..r.rows {
            if r.row(row)[self.cols..].iter().any(|&x| x != 0) {
                return None;
            }
        }
        let mut x = PrimeMatrix::zeros(self.field, self.cols, rhs.cols);
        for (k, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.data[pc * rhs.cols + j] = r.get(k, self.cols + j);
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = self.hstack(&Self::identity(self.field, n));
        let pivots = aug.eliminate(true, n);
        if pivots.len() < n {
            return None;
        }
        let idx: Vec<usize> = (n..2 * n).collect();
        Some(aug.select_columns(&idx))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Smallest `k <= n` with `self^k = 0`, if nilpotent.
    pub fn nilpotency_index(&self) -> Option<usize> {
        assert!(self.is_square());
        let n = self.rows;
        if self.is_zero() {
            return Some(if n == 0 { 0 } else { 1 });
        }
        let mut acc = self.clone();
        for k in 2..=n.max(1) {
            acc = self.matmul(&acc);
            if acc.is_zero() {
                return Some(k);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn m(p: u32, rows: &[Vec<i64>]) -> PrimeMatrix {
        PrimeMatrix::from_rows(f(p), rows).unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(PrimeMatrix::identity(f(2), 2).rank(), 2);
        assert_eq!(PrimeMatrix::zeros(f(2), 3, 3).rank(), 0);
        assert_eq!(m(2, &[vec![1, 1], vec![1, 1]]).rank(), 1);
        assert_eq!(m(3, &[vec![1, 2], vec![2, 1]]).rank(), 1);
        assert_eq!(m(5, &[vec![1, 2], vec![2, 1]]).rank(), 2);
    }

    #[test]
    fn kernel_examples() {
        assert!(PrimeMatrix::identity(f(3), 3).kernel_basis().is_empty());
        assert_eq!(PrimeMatrix::zeros(f(2), 2, 2).kernel_basis().len(), 2);
        assert_eq!(m(2, &[vec![1, 1]]).kernel_basis(), vec![vec![1, 1]]);
    }

    #[test]
    fn solve_examples() {
        let id = PrimeMatrix::identity(f(5), 3);
        assert_eq!(id.solve(&[1, 2, 3]).unwrap(), Some(vec![1, 2, 3]));
        let z = PrimeMatrix::zeros(f(5), 2, 2);
        assert_eq!(z.solve(&[1, 0]).unwrap(), None);
        let a = m(3, &[vec![1, 0], vec![0, 0]]);
        let x = a.solve(&[1, 0]).unwrap().unwrap();
        assert_eq!(x[0], 1);
        assert!(a.solve(&[1, 2, 3]).is_err());
    }

    #[test]
    fn kronecker_examples() {
        let i2 = PrimeMatrix::identity(f(3), 2);
        let i3 = PrimeMatrix::identity(f(3), 3);
        assert!(i2.kronecker(&i3).is_identity());
        let a = m(3, &[vec![1, 2], vec![0, 1]]);
        assert!(a.kronecker(&PrimeMatrix::zeros(f(3), 2, 2)).is_zero());
        // mixed product rule
        let b = m(3, &[vec![2, 1], vec![1, 1]]);
        let c = m(3, &[vec![0, 1], vec![1, 2]]);
        let d = m(3, &[vec![1, 1], vec![2, 0]]);
        assert_eq!(a.kronecker(&b).matmul(&c.kronecker(&d)), a.matmul(&c).kronecker(&b.matmul(&d)));
    }

    #[test]
    fn inverse_and_solve_matrix() {
        let a = m(7, &[vec![1, 2, 3], vec![0, 1, 4], vec![5, 6, 0]]);
        let inv = a.inverse().unwrap();
        assert!(a.matmul(&inv).is_identity());
        let rhs = m(7, &[vec![1, 0], vec![2, 3], vec![4, 5]]);
        let x = a.solve_matrix(&rhs).unwrap();
        assert_eq!(a.matmul(&x), rhs);
        assert!(m(2, &[vec![1, 1], vec![1, 1]]).inverse().is_none());
    }

    #[test]
    fn nilpotency() {
        let n = m(3, &[vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]]);
        assert_eq!(n.nilpotency_index(), Some(3));
        assert_eq!(PrimeMatrix::identity(f(3), 2).nilpotency_index(), None);
    }
}
