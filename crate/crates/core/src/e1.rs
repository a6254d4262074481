// Copyright 2026 commonbath contributors
// SPDX-License-Identifier: Apache-2.0

//! Exact evolution for one initial excitation.
//!
//! Starting from a single excited qubit, the collective dissipator closes
//! on a four-operator basis, so the full state is carried by four real
//! coefficients. This module provides both the closed-form solution and
//! an independent integration of the coefficient equations, plus the
//! reduced pair states and their concurrences.
//!
//! All choices of the excited qubit are equivalent by permutation
//! symmetry; it is fixed to qubit 1 internally.
//!
//! A time argument of `f64::INFINITY` is the stationary sentinel: the
//! decaying exponentials evaluate to exactly zero, so the coefficients
//! take their exact limits with no large-t underflow games.

use crate::concurrence::{ConcurrenceValue, TwoQubitDensity};
use crate::error::{Error, Result};
use crate::hilbert::{
    build_basis_state, build_special_vector, partial_trace_pair, DenseOperator, QubitIndexSet,
    SpecialVector,
};
use nalgebra::{DMatrix, DVector};

/// Which kind of pair is reduced out of the single-excitation state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairClassE1 {
    /// The initially excited qubit against an initially ground one.
    ExcitedGround,
    /// Two initially ground qubits (requires n >= 3).
    GroundGround,
}

/// Coefficients of the four-operator expansion at one time point.
///
/// The basis ordering is (|G⟩⟨G|, |k⟩⟨k|, |E⟩⟨E|, |E⟩⟨k| + h.c.) with
/// |E⟩ the unnormalized sum of the other single-excitation states.
#[derive(Debug, Clone, Copy)]
pub struct E1Coefficients {
    pub n: u32,
    pub t: f64,
    pub a0: f64,
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
}

impl E1Coefficients {
    /// Unit-trace identity a0 + a1 + (n-1) a2 = 1 (⟨E|E⟩ = n-1).
    pub fn trace(&self) -> f64 {
        self.a0 + self.a1 + (self.n as f64 - 1.0) * self.a2
    }

    pub fn as_array(&self) -> [f64; 4] {
        [self.a0, self.a1, self.a2, self.a3]
    }
}

fn check_n(n: u32) -> Result<f64> {
    if n < 2 {
        return Err(Error::invalid(format!(
            "single-excitation engine needs n >= 2, got {n}"
        )));
    }
    Ok(n as f64)
}

fn check_time(t: f64) -> Result<()> {
    if t.is_nan() || t < 0.0 {
        return Err(Error::invalid(format!("time must be >= 0, got {t}")));
    }
    Ok(())
}

/// The decay function f(t) = (1 - e^{-nt})/n.
///
/// Monotone increasing from 0 with limit 1/n; `t = f64::INFINITY` yields
/// the limit exactly.
pub fn decay_function(n: u32, t: f64) -> f64 {
    debug_assert!(n >= 1 && t >= 0.0);
    let nf = n as f64;
    (1.0 - (-nf * t).exp()) / nf
}

/// Closed-form coefficients: a1 = (1-f)², a0 = f(2-nf), a2 = f²,
/// a3 = -f(1-f).
pub fn coefficients_closed_form(n: u32, t: f64) -> Result<E1Coefficients> {
    let nf = check_n(n)?;
    check_time(t)?;
    let f = decay_function(n, t);
    Ok(E1Coefficients {
        n,
        t,
        a0: f * (2.0 - nf * f),
        a1: (1.0 - f) * (1.0 - f),
        a2: f * f,
        a3: -f * (1.0 - f),
    })
}

/// The coefficient-equation generator: ċ = A c over (a0, a1, a2, a3).
pub fn generator_matrix_e1(n: u32) -> DMatrix<f64> {
    let m = n as f64 - 1.0;
    let nf = n as f64;
    DMatrix::from_row_slice(
        4,
        4,
        &[
            0.0, 2.0, 2.0 * m * m, 4.0 * m, //
            0.0, -2.0, 0.0, -2.0 * m, //
            0.0, 0.0, -2.0 * m, -2.0, //
            0.0, -1.0, -m, -nf,
        ],
    )
}

/// Integrate the coefficient equations numerically from (0, 1, 0, 0).
///
/// Retained purely as a consistency check on the closed form; fixed-step
/// RK4 with the supplied dt.
pub fn coefficients_ode(n: u32, t: f64, dt: f64) -> Result<E1Coefficients> {
    check_n(n)?;
    check_time(t)?;
    if !t.is_finite() {
        return Err(Error::invalid(
            "ODE integration needs a finite time; use the closed form for the stationary limit"
                .to_string(),
        ));
    }
    if dt <= 0.0 || dt.is_nan() {
        return Err(Error::invalid(format!("dt must be positive, got {dt}")));
    }
    let gen = generator_matrix_e1(n);
    let mut v = DVector::from_column_slice(&[0.0, 1.0, 0.0, 0.0]);
    let steps = (t / dt).ceil().max(1.0) as usize;
    let h = t / steps as f64;
    for _ in 0..steps {
        let k1 = &gen * &v;
        let k2 = &gen * (&v + &k1 * (h / 2.0));
        let k3 = &gen * (&v + &k2 * (h / 2.0));
        let k4 = &gen * (&v + &k3 * h);
        v += (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);
        // Coefficients are bounded by small powers of n; explosive growth
        // means the step is outside the RK4 stability region.
        if !v.iter().all(|x| x.is_finite() && x.abs() < 1e6) {
            return Err(Error::numerical(format!(
                "coefficient integration unstable (n = {n}, dt = {dt}); reduce dt"
            )));
        }
    }
    Ok(E1Coefficients {
        n,
        t,
        a0: v[0],
        a1: v[1],
        a2: v[2],
        a3: v[3],
    })
}

/// The four basis operators realized on the full space (k = 1).
pub fn basis_ops_e1(n: u32) -> Result<Vec<DenseOperator>> {
    check_n(n)?;
    let g = build_basis_state(&QubitIndexSet::new(n, &[])?)?;
    let k = build_basis_state(&QubitIndexSet::new(n, &[1])?)?;
    let e = build_special_vector(n, &SpecialVector::ExcitedSum { excluded: vec![1] })?;
    let mut cross = e.outer(&k);
    cross.add_scaled(&k.outer(&e), 1.0);
    Ok(vec![g.outer(&g), k.outer(&k), e.outer(&e), cross])
}

/// Reconstruct the full density matrix Σ aᵢ Oᵢ at time t.
pub fn full_state_e1(n: u32, t: f64) -> Result<DenseOperator> {
    let coeffs = coefficients_closed_form(n, t)?;
    let ops = basis_ops_e1(n)?;
    let mut out = DenseOperator::zeros(n)?;
    for (c, op) in coeffs.as_array().iter().zip(ops.iter()) {
        out.add_scaled(op, *c);
    }
    Ok(out)
}

/// Block data (p00, p01, p10, z) of the reduced pair state.
fn block_e1(n: u32, t: f64, pair_class: PairClassE1) -> Result<(f64, f64, f64, f64)> {
    let _ = check_n(n)?;
    check_time(t)?;
    let f = decay_function(n, t);
    match pair_class {
        PairClassE1::ExcitedGround => {
            let p10 = (1.0 - f) * (1.0 - f);
            let p01 = f * f;
            let z = -f * (1.0 - f);
            Ok((2.0 * f * (1.0 - f), p01, p10, z))
        }
        PairClassE1::GroundGround => {
            if n < 3 {
                return Err(Error::invalid(format!(
                    "a ground-ground pair needs n >= 3, got {n}"
                )));
            }
            let f2 = f * f;
            Ok((1.0 - 2.0 * f2, f2, f2, f2))
        }
    }
}

/// Reduced two-qubit state of the requested pair class at time t.
pub fn reduced_pair_e1(n: u32, t: f64, pair_class: PairClassE1) -> Result<TwoQubitDensity> {
    let (p00, p01, p10, z) = block_e1(n, t, pair_class)?;
    TwoQubitDensity::from_block(p00, p01, p10, z)
}

/// Pairwise concurrence from the closed-form solution.
///
/// ExcitedGround: 2f(1-f); GroundGround: 2f². Both equal the general
/// Wootters concurrence of the corresponding reduced state.
pub fn concurrence_e1(n: u32, t: f64, pair_class: PairClassE1) -> Result<ConcurrenceValue> {
    let (p00, p01, p10, z) = block_e1(n, t, pair_class)?;
    crate::concurrence::concurrence_single_excitation_block(p00, p01, p10, z)
}

/// Reduced pair state obtained by partial-tracing the reconstructed full
/// state; used to cross-check the direct block assembly.
pub fn reduced_pair_e1_from_full(
    n: u32,
    t: f64,
    pair_class: PairClassE1,
) -> Result<TwoQubitDensity> {
    let rho = full_state_e1(n, t)?;
    match pair_class {
        PairClassE1::ExcitedGround => partial_trace_pair(&rho, 1, 2),
        PairClassE1::GroundGround => {
            if n < 3 {
                return Err(Error::invalid("ground-ground pair needs n >= 3".to_string()));
            }
            partial_trace_pair(&rho, 2, 3)
        }
    }
}

/// One row of the stationary scan.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct E1StationaryRow {
    pub n: u32,
    /// 2(n-1)/n².
    pub c_excited_ground: f64,
    /// 2/n².
    pub c_ground_ground: f64,
    /// At n = 2 no ground-ground pair exists; the formula value is still
    /// reported but flagged.
    pub ground_pair_degenerate: bool,
}

/// Stationary concurrences over a range of system sizes.
pub fn stationary_scan_e1(n_min: u32, n_max: u32) -> Result<Vec<E1StationaryRow>> {
    if n_min < 2 || n_min > n_max {
        return Err(Error::invalid(format!(
            "scan range must satisfy 2 <= n_min <= n_max, got [{n_min}, {n_max}]"
        )));
    }
    Ok((n_min..=n_max)
        .map(|n| {
            let nf = n as f64;
            E1StationaryRow {
                n,
                c_excited_ground: 2.0 * (nf - 1.0) / (nf * nf),
                c_ground_ground: 2.0 / (nf * nf),
                ground_pair_degenerate: n == 2,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::{verify_closure, OperatorBasis};
    use crate::hilbert::DissipatorWorkspace;
    use crate::linalg::CMatrix;
    use crate::linalg::max_abs_diff;
    use crate::oracle::{evolve_full, EvolutionConfig};
    use approx::assert_relative_eq;

    #[test]
    fn decay_function_values() {
        assert_eq!(decay_function(5, 0.0), 0.0);
        assert_relative_eq!(decay_function(2, f64::INFINITY), 0.5);
        // (1 - e^{-1})/4, frozen.
        assert_relative_eq!(decay_function(4, 0.25), 0.15803013970713942, epsilon = 1e-15);
        // Monotone on a grid.
        let mut last = -1.0;
        for i in 0..50 {
            let f = decay_function(3, i as f64 * 0.1);
            assert!(f > last);
            last = f;
        }
    }

    #[test]
    fn closed_form_initial_and_stationary() {
        let c0 = coefficients_closed_form(4, 0.0).unwrap();
        assert_eq!(c0.as_array(), [0.0, 1.0, 0.0, 0.0]);
        let cinf = coefficients_closed_form(2, f64::INFINITY).unwrap();
        assert_relative_eq!(cinf.a0, 0.5, epsilon = 1e-15);
        assert_relative_eq!(cinf.a1, 0.25, epsilon = 1e-15);
        assert_relative_eq!(cinf.a2, 0.25, epsilon = 1e-15);
        assert_relative_eq!(cinf.a3, -0.25, epsilon = 1e-15);
    }

    #[test]
    fn trace_identity_holds_everywhere() {
        for n in [2u32, 3, 5, 9] {
            for t in [0.0, 0.05, 0.3, 1.0, 4.0, f64::INFINITY] {
                let c = coefficients_closed_form(n, t).unwrap();
                assert_relative_eq!(c.trace(), 1.0, epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn ode_matches_closed_form() {
        let ode = coefficients_ode(5, 1.0, 1e-4).unwrap();
        let cf = coefficients_closed_form(5, 1.0).unwrap();
        for (a, b) in ode.as_array().iter().zip(cf.as_array().iter()) {
            assert!((a - b).abs() < 1e-9, "ODE {a} vs closed form {b}");
        }
        // Long-time limit: a3 → -f(1-f) with f ≈ 1/3.
        let ode = coefficients_ode(3, 10.0, 1e-3).unwrap();
        assert_relative_eq!(ode.a3, -2.0 / 9.0, epsilon = 1e-8);
        assert_eq!(coefficients_ode(2, 0.0, 1e-3).unwrap().as_array(), [
            0.0, 1.0, 0.0, 0.0
        ]);
    }

    #[test]
    fn ode_rejects_unstable_step() {
        // |λ|h far beyond the RK4 stability region must be reported, not
        // returned as garbage.
        assert!(matches!(
            coefficients_ode(9, 200.0, 2.0),
            Err(crate::error::Error::Numerical(_))
        ));
    }

    #[test]
    fn closure_reproduces_generator() {
        for n in [2u32, 3, 5] {
            let basis = OperatorBasis::new(basis_ops_e1(n).unwrap()).unwrap();
            let dim = 1usize << n;
            let mut ws = DissipatorWorkspace::new(dim);
            let check = verify_closure(&basis, |m| {
                let mut out = CMatrix::zeros(dim, dim);
                ws_apply(&mut ws, m, &mut out);
                out
            })
            .unwrap();
            assert!(check.max_residual < 1e-10, "residual {}", check.max_residual);
            let printed = generator_matrix_e1(n);
            let diff = (&check.generator - &printed).abs().max();
            assert!(diff < 1e-10, "generator mismatch {diff} at n = {n}");
        }
    }

    fn ws_apply(ws: &mut DissipatorWorkspace, m: &CMatrix, out: &mut CMatrix) {
        ws.apply_into(m, out);
    }

    #[test]
    fn reconstruction_matches_oracle() {
        for n in [2u32, 4] {
            let rho0 = build_basis_state(&QubitIndexSet::new(n, &[1]).unwrap())
                .unwrap()
                .density()
                .unwrap();
            let config = EvolutionConfig::defaults(n, 1.0).with_samples(3);
            let traj = evolve_full(&rho0, &config).unwrap();
            for (t, state) in traj.times.iter().zip(traj.states.iter()) {
                let rebuilt = full_state_e1(n, *t).unwrap();
                assert!(
                    max_abs_diff(rebuilt.matrix(), state.matrix()) < 1e-8,
                    "reconstruction deviates at t = {t}, n = {n}"
                );
            }
        }
    }

    #[test]
    fn reduced_states_match_partial_trace() {
        for n in [2u32, 3, 5] {
            for t in [0.0, 0.2, 1.0, 3.0] {
                let direct = reduced_pair_e1(n, t, PairClassE1::ExcitedGround).unwrap();
                let traced = reduced_pair_e1_from_full(n, t, PairClassE1::ExcitedGround).unwrap();
                assert!(max_abs_diff(direct.matrix(), traced.matrix()) < 1e-12);
                if n >= 3 {
                    let direct = reduced_pair_e1(n, t, PairClassE1::GroundGround).unwrap();
                    let traced =
                        reduced_pair_e1_from_full(n, t, PairClassE1::GroundGround).unwrap();
                    assert!(max_abs_diff(direct.matrix(), traced.matrix()) < 1e-12);
                }
            }
        }
    }

    #[test]
    fn reduced_pair_examples() {
        // (n=2, t=0): the pair is in |10⟩⟨10|.
        let r = reduced_pair_e1(2, 0.0, PairClassE1::ExcitedGround).unwrap();
        assert_relative_eq!(r.matrix()[(2, 2)].re, 1.0, epsilon = 1e-15);
        // (n=4, t→∞, ground-ground): coherence f² = 1/16.
        let r = reduced_pair_e1(4, f64::INFINITY, PairClassE1::GroundGround).unwrap();
        assert_relative_eq!(r.matrix()[(2, 1)].re, 1.0 / 16.0, epsilon = 1e-15);
        // n=2 has no ground-ground pair.
        assert!(reduced_pair_e1(2, 1.0, PairClassE1::GroundGround).is_err());
    }

    #[test]
    fn concurrence_values() {
        for pc in [PairClassE1::ExcitedGround, PairClassE1::GroundGround] {
            assert_eq!(concurrence_e1(4, 0.0, pc).unwrap().value(), 0.0);
        }
        assert_relative_eq!(
            concurrence_e1(2, f64::INFINITY, PairClassE1::ExcitedGround)
                .unwrap()
                .value(),
            0.5,
            epsilon = 1e-15
        );
        assert_relative_eq!(
            concurrence_e1(10, f64::INFINITY, PairClassE1::GroundGround)
                .unwrap()
                .value(),
            0.02,
            epsilon = 1e-15
        );
    }

    use crate::concurrence::concurrence;

    #[test]
    fn analytic_concurrence_equals_wootters() {
        for n in [2u32, 3, 6] {
            for t in [0.05, 0.4, 1.5, f64::INFINITY] {
                let analytic = concurrence_e1(n, t, PairClassE1::ExcitedGround)
                    .unwrap()
                    .value();
                let general = concurrence(&reduced_pair_e1(n, t, PairClassE1::ExcitedGround).unwrap())
                    .unwrap()
                    .value();
                assert!((analytic - general).abs() < 1e-10);
                if n >= 3 {
                    let analytic = concurrence_e1(n, t, PairClassE1::GroundGround)
                        .unwrap()
                        .value();
                    let general =
                        concurrence(&reduced_pair_e1(n, t, PairClassE1::GroundGround).unwrap())
                            .unwrap()
                            .value();
                    assert!((analytic - general).abs() < 1e-10);
                }
            }
        }
    }

    #[test]
    fn stationary_scan_rows() {
        let rows = stationary_scan_e1(2, 4).unwrap();
        assert_eq!(rows.len(), 3);
        assert_relative_eq!(rows[0].c_excited_ground, 0.5);
        assert_relative_eq!(rows[0].c_ground_ground, 0.5);
        assert!(rows[0].ground_pair_degenerate);
        assert_relative_eq!(rows[2].c_excited_ground, 0.375);
        assert_relative_eq!(rows[2].c_ground_ground, 0.125);
        assert!(!rows[2].ground_pair_degenerate);
        // C_jm / C_kj = 1/(n-1) for every row.
        for row in &rows {
            assert_relative_eq!(
                row.c_ground_ground / row.c_excited_ground,
                1.0 / (row.n as f64 - 1.0),
                epsilon = 1e-12
            );
        }
    }
}
