// Copyright 2026 commonbath contributors
// SPDX-License-Identifier: Apache-2.0

//! Projection of operators onto a finite, generally non-orthogonal
//! operator basis, and extraction of the generator the dissipator induces
//! on the spanned coefficients.
//!
//! The basis Gram matrix uses the Hilbert-Schmidt inner product; naive
//! coefficient reading would be wrong because several basis operators
//! overlap.

use crate::error::{Error, Result};
use crate::hilbert::DenseOperator;
use crate::linalg::{hs_inner, hs_norm, solve_spd, symmetric_condition_number, CMatrix};
use nalgebra::{DMatrix, DVector};

/// A list of Hermitian operators spanning an invariant subspace.
pub struct OperatorBasis {
    ops: Vec<CMatrix>,
    gram: DMatrix<f64>,
}

impl OperatorBasis {
    /// Build the basis and its Gram matrix. All operators must be
    /// Hermitian so that Hilbert-Schmidt inner products are real.
    pub fn new(ops: Vec<DenseOperator>) -> Result<Self> {
        if ops.is_empty() {
            return Err(Error::invalid("operator basis must be non-empty"));
        }
        let dim = ops[0].dim();
        for op in &ops {
            if op.dim() != dim {
                return Err(Error::invalid("operator basis has mixed dimensions"));
            }
            if !op.is_hermitian(1e-12) {
                return Err(Error::invalid("operator basis element is not Hermitian"));
            }
        }
        let mats: Vec<CMatrix> = ops.into_iter().map(DenseOperator::into_matrix).collect();
        let m = mats.len();
        let mut gram = DMatrix::<f64>::zeros(m, m);
        for i in 0..m {
            for j in i..m {
                let v = hs_inner(&mats[i], &mats[j]).re;
                gram[(i, j)] = v;
                gram[(j, i)] = v;
            }
        }
        Ok(OperatorBasis { ops: mats, gram })
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    pub fn op(&self, idx: usize) -> &CMatrix {
        &self.ops[idx]
    }

    pub fn gram(&self) -> &DMatrix<f64> {
        &self.gram
    }

    pub fn gram_condition_number(&self) -> f64 {
        symmetric_condition_number(&self.gram)
    }

    /// Least-squares decomposition target = Σ c_i op_i.
    ///
    /// Returns the coefficients and the Hilbert-Schmidt norm of the
    /// residual outside the span.
    pub fn project(&self, target: &CMatrix) -> Result<(Vec<f64>, f64)> {
        let m = self.ops.len();
        let mut rhs = DVector::<f64>::zeros(m);
        for i in 0..m {
            let ip = hs_inner(&self.ops[i], target);
            if ip.im.abs() > 1e-9 {
                return Err(Error::numerical(format!(
                    "non-real overlap {ip} with Hermitian basis element {i}"
                )));
            }
            rhs[i] = ip.re;
        }
        let coeffs = solve_spd(&self.gram, &rhs)
            .ok_or_else(|| Error::numerical("Gram matrix is singular".to_string()))?;
        let mut residual = target.clone();
        for (i, op) in self.ops.iter().enumerate() {
            let c = nalgebra::Complex::new(coeffs[i], 0.0);
            residual
                .iter_mut()
                .zip(op.iter())
                .for_each(|(r, o)| *r -= c * o);
        }
        Ok((coeffs.iter().copied().collect(), hs_norm(&residual)))
    }

    /// Reconstruct Σ c_i op_i.
    pub fn reconstruct(&self, coeffs: &[f64]) -> CMatrix {
        debug_assert_eq!(coeffs.len(), self.ops.len());
        let shape = self.ops[0].shape();
        let mut out = CMatrix::zeros(shape.0, shape.1);
        for (c, op) in coeffs.iter().zip(self.ops.iter()) {
            let cc = nalgebra::Complex::new(*c, 0.0);
            out.iter_mut().zip(op.iter()).for_each(|(r, o)| *r += cc * o);
        }
        out
    }

    /// Traces of the basis operators (real by Hermiticity).
    pub fn traces(&self) -> Vec<f64> {
        self.ops
            .iter()
            .map(|op| op.diagonal().iter().sum::<nalgebra::Complex<f64>>().re)
            .collect()
    }
}

/// Result of verifying that a map closes on an operator basis.
pub struct ClosureCheck {
    /// generator[i][j]: coefficient of basis op i in map(basis op j); the
    /// coefficient ODE is then ċ = generator · c.
    pub generator: DMatrix<f64>,
    /// Worst projection residual across the basis images.
    pub max_residual: f64,
}

/// Apply `map` to every basis element and decompose the images in the
/// same basis. Small residuals certify that the basis is invariant.
pub fn verify_closure<F>(basis: &OperatorBasis, mut map: F) -> Result<ClosureCheck>
where
    F: FnMut(&CMatrix) -> CMatrix,
{
    let m = basis.len();
    let mut generator = DMatrix::<f64>::zeros(m, m);
    let mut max_residual = 0.0f64;
    for j in 0..m {
        let image = map(basis.op(j));
        let (coeffs, residual) = basis.project(&image)?;
        max_residual = max_residual.max(residual);
        for i in 0..m {
            generator[(i, j)] = coeffs[i];
        }
    }
    Ok(ClosureCheck {
        generator,
        max_residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::{build_basis_state, QubitIndexSet};
    use approx::assert_relative_eq;

    #[test]
    fn projection_recovers_known_coefficients() {
        let n = 3;
        let g = build_basis_state(&QubitIndexSet::new(n, &[]).unwrap()).unwrap();
        let k = build_basis_state(&QubitIndexSet::new(n, &[1]).unwrap()).unwrap();
        // Deliberately overlapping basis: {|G⟩⟨G|, |G⟩⟨G| + |k⟩⟨k|}.
        let gg = g.outer(&g);
        let mut sum = g.outer(&g);
        sum.add_scaled(&k.outer(&k), 1.0);
        let basis = OperatorBasis::new(vec![gg, sum]).unwrap();

        // target = 2|G⟩⟨G| + 3|k⟩⟨k| = -1 * op0 + 3 * op1.
        let mut target = g.outer(&g).scaled(2.0);
        target.add_scaled(&k.outer(&k), 3.0);
        let (coeffs, residual) = basis.project(target.matrix()).unwrap();
        assert_relative_eq!(coeffs[0], -1.0, epsilon = 1e-10);
        assert_relative_eq!(coeffs[1], 3.0, epsilon = 1e-10);
        assert!(residual < 1e-12);
    }

    #[test]
    fn residual_detects_out_of_span_component() {
        let n = 2;
        let g = build_basis_state(&QubitIndexSet::new(n, &[]).unwrap()).unwrap();
        let k = build_basis_state(&QubitIndexSet::new(n, &[1]).unwrap()).unwrap();
        let basis = OperatorBasis::new(vec![g.outer(&g)]).unwrap();
        let (_, residual) = basis.project(k.outer(&k).matrix()).unwrap();
        assert_relative_eq!(residual, 1.0, epsilon = 1e-12);
    }
}
