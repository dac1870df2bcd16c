use super::field::PrimeField;
use super::matrix::PrimeMatrix;

/// A subspace of `F_p^n` kept as reduced row echelon rows sorted by pivot column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: PrimeField,
    ambient: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Subspace { field, ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Self {
        let mut s = Self::zero(field, ambient);
        for i in 0..ambient {
            let mut v = vec![0; ambient];
            v[i] = 1;
            s.rows.push(v);
            s.pivots.push(i);
        }
        s
    }

    pub fn spanned_by<I>(field: PrimeField, ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<u32>>,
    {
        let mut s = Self::zero(field, ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    /// Span of the columns of `m`.
    pub fn column_space(m: &PrimeMatrix) -> Self {
        let t = m.transpose();
        let (r, piv) = t.rref();
        let rows = (0..piv.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace { field: m.field(), ambient: m.rows(), rows, pivots: piv }
    }

    /// Null space of `m` as a subspace of its column space domain.
    pub fn kernel(m: &PrimeMatrix) -> Self {
        Self::spanned_by(m.field(), m.cols(), m.kernel_basis())
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns outside the pivot set, i.e. coordinates on the standard complement.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut mark = vec![false; self.ambient];
        for &c in &self.pivots {
            mark[c] = true;
        }
        (0..self.ambient).filter(|&c| !mark[c]).collect()
    }

    /// Residue of `v` modulo the subspace: zero at every pivot column.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.ambient);
        let f = self.field;
        let mut w = v.to_vec();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let a = w[c];
            if a != 0 {
                let na = f.neg(a);
                for (x, &r) in w.iter_mut().zip(row).skip(c) {
                    if r != 0 {
                        *x = f.add(*x, f.mul(na, r));
                    }
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<u32>) -> bool {
        let f = self.field;
        let mut w = self.reduce(&v);
        let Some(c) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(w[c]).unwrap();
        for x in w.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for row in &mut self.rows {
            let a = row[c];
            if a != 0 {
                let na = f.neg(a);
                for (x, &r) in row.iter_mut().zip(&w).skip(c) {
                    if r != 0 {
                        *x = f.add(*x, f.mul(na, r));
                    }
                }
            }
        }
        let pos = self.pivots.partition_point(|&q| q < c);
        self.pivots.insert(pos, c);
        self.rows.insert(pos, w);
        true
    }

    pub fn extend<I: IntoIterator<Item = Vec<u32>>>(&mut self, vectors: I) {
        for v in vectors {
            self.insert(v);
        }
    }

    /// Coordinates of `v` in the echelon basis; `v` must lie in the subspace.
    pub fn coordinates(&self, v: &[u32]) -> Vec<u32> {
        debug_assert!(self.contains(v));
        self.pivots.iter().map(|&c| v[c]).collect()
    }

    /// Coordinates of `v` in the basis, or `None` if it lies outside.
    pub fn try_coordinates(&self, v: &[u32]) -> Option<Vec<u32>> {
        if self.contains(v) {
            Some(self.pivots.iter().map(|&c| v[c]).collect())
        } else {
            None
        }
    }

    /// Vector with the given basis coordinates.
    pub fn combine(&self, coords: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut out = vec![0; self.ambient];
        for (row, &a) in self.rows.iter().zip(coords) {
            if a != 0 {
                for (x, &r) in out.iter_mut().zip(row) {
                    if r != 0 {
                        *x = f.add(*x, f.mul(a, r));
                    }
                }
            }
        }
        out
    }

    /// Basis vectors as the columns of an `ambient x dim` matrix.
    pub fn basis_matrix(&self) -> PrimeMatrix {
        PrimeMatrix::from_columns(self.field, self.ambient, &self.rows)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        s.extend(other.rows.iter().cloned());
        s
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // x in both iff x = B a = C b, so solve [B | -C] (a, b) = 0
        let b = self.basis_matrix();
        let c = other.basis_matrix().neg();
        let k = b.hstack(&c).kernel_basis();
        let vecs = k.into_iter().map(|z| self.combine(&z[..self.dim()]));
        Subspace::spanned_by(self.field, self.ambient, vecs)
    }

    /// Image of the subspace under `m`.
    pub fn image(&self, m: &PrimeMatrix) -> Subspace {
        Subspace::spanned_by(self.field, m.rows(), self.rows.iter().map(|v| m.mul_vec(v)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_and_reduce() {
        let f = PrimeField::new(3).unwrap();
        let mut s = Subspace::zero(f, 3);
        assert!(s.insert(vec![0, 1, 2]));
        assert!(s.insert(vec![1, 1, 0]));
        assert!(!s.insert(vec![1, 2, 2]));
        assert_eq!(s.dim(), 2);
        assert_eq!(s.pivots(), &[0, 1]);
        let v = vec![2, 0, 2];
        assert!(s.contains(&v));
        assert_eq!(s.combine(&s.coordinates(&v)), v);
        assert_eq!(s.non_pivots(), vec![2]);
    }

    #[test]
    fn intersection_of_planes() {
        let f = PrimeField::new(5).unwrap();
        let a = Subspace::spanned_by(f, 3, [vec![1, 0, 0], vec![0, 1, 0]]);
        let b = Subspace::spanned_by(f, 3, [vec![0, 1, 0], vec![0, 0, 1]]);
        let c = a.intersection(&b);
        assert_eq!(c.dim(), 1);
        assert!(c.contains(&[0, 3, 0]));
    }
}
