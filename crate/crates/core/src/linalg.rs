// Copyright 2026 commonbath contributors
// SPDX-License-Identifier: Apache-2.0

//! Small dense linear-algebra helpers on complex matrices.
//!
//! Everything here is generic plumbing: adjoints, Hilbert-Schmidt inner
//! products, Hermitian spectra and principal square roots. The quantum
//! structure lives in the callers.

use nalgebra::{Complex, DMatrix, DVector};

pub type C64 = Complex<f64>;
pub type CMatrix = DMatrix<C64>;
pub type CVector = DVector<C64>;

pub(crate) const ZERO: C64 = Complex::new(0.0, 0.0);
pub(crate) const ONE: C64 = Complex::new(1.0, 0.0);

/// Conjugate transpose.
pub fn dagger(m: &CMatrix) -> CMatrix {
    m.adjoint()
}

/// Trace of a square complex matrix.
pub fn trace(m: &CMatrix) -> C64 {
    m.diagonal().iter().sum()
}

/// Hilbert-Schmidt inner product tr(a† b).
pub fn hs_inner(a: &CMatrix, b: &CMatrix) -> C64 {
    debug_assert_eq!(a.shape(), b.shape());
    a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum()
}

/// Hilbert-Schmidt (Frobenius) norm.
pub fn hs_norm(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Largest absolute deviation from Hermiticity, max |m - m†|.
pub fn hermiticity_defect(m: &CMatrix) -> f64 {
    let n = m.nrows();
    let mut worst = 0.0f64;
    for r in 0..n {
        for c in r..n {
            let d = (m[(r, c)] - m[(c, r)].conj()).norm();
            worst = worst.max(d);
        }
    }
    worst
}

/// Entrywise maximum absolute difference.
pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    debug_assert_eq!(a.shape(), b.shape());
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Eigenvalues of a Hermitian matrix, ascending.
///
/// The input is symmetrized first so tiny Hermiticity defects from
/// accumulated rounding do not leak imaginary parts into the spectrum.
pub fn hermitian_eigenvalues(m: &CMatrix) -> Vec<f64> {
    let sym = (m + m.adjoint()).scale(0.5);
    let mut vals: Vec<f64> = sym.symmetric_eigenvalues().iter().copied().collect();
    vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
    vals
}

/// Principal square root of a Hermitian PSD matrix.
///
/// Eigenvalues below zero (rounding noise on rank-deficient inputs) are
/// clamped to zero before taking square roots.
pub fn hermitian_sqrt(m: &CMatrix) -> CMatrix {
    let sym = (m + m.adjoint()).scale(0.5);
    let eig = nalgebra::SymmetricEigen::new(sym);
    let dim = m.nrows();
    let mut out = CMatrix::zeros(dim, dim);
    for (idx, &lambda) in eig.eigenvalues.iter().enumerate() {
        let root = lambda.max(0.0).sqrt();
        if root == 0.0 {
            continue;
        }
        let v = eig.eigenvectors.column(idx);
        for r in 0..dim {
            for c in 0..dim {
                out[(r, c)] += v[r] * v[c].conj() * C64::new(root, 0.0);
            }
        }
    }
    out
}

/// Solve the symmetric positive-definite system g x = rhs.
///
/// Used for least-squares projection onto non-orthogonal operator bases,
/// where `g` is a Gram matrix. Falls back to LU when the Cholesky
/// factorization fails near degeneracy.
pub fn solve_spd(g: &DMatrix<f64>, rhs: &DVector<f64>) -> Option<DVector<f64>> {
    if let Some(chol) = g.clone().cholesky() {
        return Some(chol.solve(rhs));
    }
    g.clone().lu().solve(rhs)
}

/// Condition number of a symmetric matrix from its eigenvalue spread.
pub fn symmetric_condition_number(g: &DMatrix<f64>) -> f64 {
    let eigs = g.clone().symmetric_eigenvalues();
    let mut lo = f64::INFINITY;
    let mut hi = 0.0f64;
    for &e in eigs.iter() {
        lo = lo.min(e.abs());
        hi = hi.max(e.abs());
    }
    if lo == 0.0 {
        f64::INFINITY
    } else {
        hi / lo
    }
}
