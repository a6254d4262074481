// Copyright 2026 commonbath contributors
// SPDX-License-Identifier: Apache-2.0

//! Wootters concurrence of two-qubit density matrices.
//!
//! The general path is the ground truth for every entanglement number
//! this crate emits. The block fast path covers the states produced by
//! collective decay: populations plus one real coherence between |01⟩
//! and |10⟩.

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, hermitian_sqrt, hermiticity_defect, CMatrix, C64};

/// Tolerance for Hermiticity / unit-trace validation of inputs.
pub const DENSITY_TOL: f64 = 1e-10;

/// A validated 4x4 two-qubit density matrix in the ordered basis
/// {|00⟩, |01⟩, |10⟩, |11⟩}.
#[derive(Debug, Clone)]
pub struct TwoQubitDensity {
    entries: CMatrix,
}

impl TwoQubitDensity {
    /// Validate shape, Hermiticity and unit trace (both to 1e-10).
    ///
    /// Positivity is not enforced here; eigenvalue noise down to -1e-10
    /// is clamped inside the concurrence computation instead.
    pub fn new(entries: CMatrix) -> Result<Self> {
        if entries.nrows() != 4 || entries.ncols() != 4 {
            return Err(Error::invalid(format!(
                "two-qubit density matrix must be 4x4, got {}x{}",
                entries.nrows(),
                entries.ncols()
            )));
        }
        let defect = hermiticity_defect(&entries);
        if defect > DENSITY_TOL {
            return Err(Error::invalid(format!(
                "density matrix is not Hermitian (defect {defect:.3e})"
            )));
        }
        let tr: C64 = entries.diagonal().iter().sum();
        if (tr.re - 1.0).abs() > DENSITY_TOL || tr.im.abs() > DENSITY_TOL {
            return Err(Error::invalid(format!(
                "density matrix trace {tr} is not 1"
            )));
        }
        Ok(TwoQubitDensity { entries })
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.entries
    }

    /// Assemble the block form: populations (p00, p01, p10, p11) with a
    /// single real coherence z between |01⟩ and |10⟩.
    pub fn from_block(p00: f64, p01: f64, p10: f64, z: f64) -> Result<Self> {
        let p11 = derived_population(p00, p01, p10)?;
        let mut m = CMatrix::zeros(4, 4);
        m[(0, 0)] = C64::new(p00, 0.0);
        m[(1, 1)] = C64::new(p01, 0.0);
        m[(2, 2)] = C64::new(p10, 0.0);
        m[(3, 3)] = C64::new(p11, 0.0);
        m[(1, 2)] = C64::new(z, 0.0);
        m[(2, 1)] = C64::new(z, 0.0);
        Ok(TwoQubitDensity { entries: m })
    }
}

/// p11 = 1 - p00 - p01 - p10, validated and flushed to zero when it is
/// rounding residue.
///
/// A derived population within a few ulps of zero would otherwise inject
/// O(1e-8) noise once a square root is taken of it.
fn derived_population(p00: f64, p01: f64, p10: f64) -> Result<f64> {
    let p11 = 1.0 - p00 - p01 - p10;
    if p00 < -DENSITY_TOL || p01 < -DENSITY_TOL || p10 < -DENSITY_TOL || p11 < -DENSITY_TOL {
        return Err(Error::invalid(format!(
            "negative population in block state: ({p00}, {p01}, {p10}, {p11})"
        )));
    }
    if p11.abs() < 64.0 * f64::EPSILON {
        return Ok(0.0);
    }
    Ok(p11)
}

/// Concurrence value, clamped to [0, 1].
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct ConcurrenceValue(f64);

impl ConcurrenceValue {
    pub(crate) fn clamped(raw: f64) -> Self {
        ConcurrenceValue(raw.clamp(0.0, 1.0))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// The spin-flipped matrix ρ̃ = (Y⊗Y) ρ* (Y⊗Y).
///
/// In the computational basis (Y⊗Y) has entries ±1 on the anti-diagonal,
/// so ρ̃[i,j] = s_i s_j conj(ρ[3-i, 3-j]) with s = (-1, +1, +1, -1).
fn spin_flipped(rho: &CMatrix) -> CMatrix {
    const SIGN: [f64; 4] = [-1.0, 1.0, 1.0, -1.0];
    CMatrix::from_fn(4, 4, |i, j| {
        let v = rho[(3 - i, 3 - j)].conj();
        v * C64::new(SIGN[i] * SIGN[j], 0.0)
    })
}

/// Wootters concurrence C = max(0, λ1 − λ2 − λ3 − λ4).
///
/// The λ are the decreasing square roots of the eigenvalues of ρρ̃,
/// computed via the Hermitian equivalent √ρ ρ̃ √ρ so that no general
/// complex eigensolver is needed and degenerate spectra stay stable.
pub fn concurrence(rho: &TwoQubitDensity) -> Result<ConcurrenceValue> {
    let root = hermitian_sqrt(&rho.entries);
    let tilde = spin_flipped(&rho.entries);
    let herm = &root * tilde * &root;
    // Eigenvalues at the rank-deficiency noise floor are exact zeros of
    // the spin-flip spectrum; taking their square roots would turn
    // O(1e-16) residue into O(1e-8) concurrence noise.
    const NOISE_FLOOR: f64 = 1e-14;
    let mut lambdas: Vec<f64> = hermitian_eigenvalues(&herm)
        .into_iter()
        .map(|e| {
            debug_assert!(e > -1e-8, "spin-flip spectrum too negative: {e}");
            if e < NOISE_FLOOR {
                0.0
            } else {
                e.sqrt()
            }
        })
        .collect();
    lambdas.sort_by(|a, b| b.partial_cmp(a).unwrap());
    Ok(ConcurrenceValue::clamped(
        lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3],
    ))
}

/// Fast-path concurrence for the block form produced by collective decay.
///
/// For populations p with a single real coherence z between |01⟩ and
/// |10⟩ the Wootters formula collapses to C = 2 max(0, |z| − √(p00 p11)).
pub fn concurrence_single_excitation_block(
    p00: f64,
    p01: f64,
    p10: f64,
    z: f64,
) -> Result<ConcurrenceValue> {
    if p00 < 0.0 || p01 < 0.0 || p10 < 0.0 {
        return Err(Error::invalid(format!(
            "negative population in block state: ({p00}, {p01}, {p10})"
        )));
    }
    let p11 = derived_population(p00, p01, p10)?;
    let raw = 2.0 * (z.abs() - (p00 * p11).sqrt());
    Ok(ConcurrenceValue::clamped(raw))
}
