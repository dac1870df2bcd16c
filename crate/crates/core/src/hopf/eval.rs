//! Evaluation of PBW elements through generator matrices.
//!
//! PBW coordinates are indexed in mixed radix with `x_1` most significant, so
//! the coordinate vector splits into `p` blocks by the exponent of `x_1`; this
//! gives a Horner scheme that skips zero blocks.

use crate::linalg::{PrimeField, PrimeMatrix};

/// `rho(a) v` where `rho(x_i) = gens[i]`.
pub fn apply_element(gens: &[PrimeMatrix], p: usize, a: &[u32], v: &[u32]) -> Vec<u32> {
    let f = gens[0].field();
    apply_rec(gens, p, 0, a, v, f).unwrap_or_else(|| vec![0; v.len()])
}

fn axpy(f: PrimeField, acc: &mut [u32], c: u32, v: &[u32]) {
    for (x, &y) in acc.iter_mut().zip(v) {
        if y != 0 {
            *x = f.add(*x, f.mul(c, y));
        }
    }
}

fn apply_rec(
    gens: &[PrimeMatrix],
    p: usize,
    level: usize,
    a: &[u32],
    v: &[u32],
    f: PrimeField,
) -> Option<Vec<u32>> {
    if a.iter().all(|&x| x == 0) {
        return None;
    }
    if level == gens.len() {
        let mut out = vec![0; v.len()];
        axpy(f, &mut out, a[0], v);
        return Some(out);
    }
    let block = a.len() / p;
    let mut acc: Option<Vec<u32>> = None;
    for k in (0..p).rev() {
        if let Some(prev) = acc.take() {
            acc = Some(gens[level].mul_vec(&prev));
        }
        if let Some(part) = apply_rec(gens, p, level + 1, &a[k * block..(k + 1) * block], v, f) {
            acc = Some(match acc {
                None => part,
                Some(mut x) => {
                    axpy(f, &mut x, 1, &part);
                    x
                }
            });
        }
    }
    acc
}

enum Acc {
    Scalar(u32),
    Matrix(PrimeMatrix),
}

/// The matrix `rho(a)` of size `n x n`.
pub fn element_matrix(gens: &[PrimeMatrix], n: usize, p: usize, a: &[u32]) -> PrimeMatrix {
    let f = gens.first().map(|g| g.field()).expect("at least one generator");
    match matrix_rec(gens, p, 0, a, f) {
        None => PrimeMatrix::zeros(f, n, n),
        Some(Acc::Scalar(c)) => PrimeMatrix::scalar(f, n, c),
        Some(Acc::Matrix(m)) => m,
    }
}

fn matrix_rec(gens: &[PrimeMatrix], p: usize, level: usize, a: &[u32], f: PrimeField) -> Option<Acc> {
    if a.iter().all(|&x| x == 0) {
        return None;
    }
    if level == gens.len() {
        return Some(Acc::Scalar(a[0]));
    }
    let n = gens[level].rows();
    let block = a.len() / p;
    let mut acc: Option<Acc> = None;
    for k in (0..p).rev() {
        acc = acc.map(|x| match x {
            Acc::Scalar(c) => Acc::Matrix(gens[level].scale(c)),
            Acc::Matrix(m) => Acc::Matrix(gens[level].matmul(&m)),
        });
        if let Some(part) = matrix_rec(gens, p, level + 1, &a[k * block..(k + 1) * block], f) {
            acc = Some(match (acc, part) {
                (None, part) => part,
                (Some(Acc::Scalar(c)), Acc::Scalar(d)) => Acc::Scalar(f.add(c, d)),
                (Some(Acc::Matrix(mut m)), Acc::Scalar(d)) | (Some(Acc::Scalar(d)), Acc::Matrix(mut m)) => {
                    for i in 0..n {
                        let x = m.get(i, i);
                        m.set(i, i, f.add(x, d));
                    }
                    Acc::Matrix(m)
                }
                (Some(Acc::Matrix(m)), Acc::Matrix(q)) => Acc::Matrix(m.add(&q)),
            });
        }
    }
    acc
}

/// All monomial images `x^e v` in PBW index order.
pub fn orbit(gens: &[PrimeMatrix], p: usize, v: &[u32]) -> Vec<Vec<u32>> {
    let d = gens.len();
    let total = p.pow(d as u32);
    let radix: Vec<usize> = (0..d).map(|i| p.pow((d - 1 - i) as u32)).collect();
    let mut out: Vec<Vec<u32>> = Vec::with_capacity(total);
    out.push(v.to_vec());
    for idx in 1..total {
        let j = (0..d).find(|&j| !(idx / radix[j]).is_multiple_of(p)).unwrap();
        let prev = &out[idx - radix[j]];
        let next = if prev.iter().all(|&x| x == 0) { prev.clone() } else { gens[j].mul_vec(prev) };
        out.push(next);
    }
    out
}

/// All monomial matrices `rho(x^e)` in PBW index order.
pub fn monomial_matrices(gens: &[PrimeMatrix], n: usize, p: usize, f: PrimeField) -> Vec<PrimeMatrix> {
    let d = gens.len();
    let total = p.pow(d as u32);
    let radix: Vec<usize> = (0..d).map(|i| p.pow((d - 1 - i) as u32)).collect();
    let mut out: Vec<PrimeMatrix> = Vec::with_capacity(total);
    out.push(PrimeMatrix::identity(f, n));
    for idx in 1..total {
        let j = (0..d).find(|&j| !(idx / radix[j]).is_multiple_of(p)).unwrap();
        let prev = &out[idx - radix[j]];
        let next = if prev.is_zero() { prev.clone() } else { gens[j].matmul(prev) };
        out.push(next);
    }
    out
}
