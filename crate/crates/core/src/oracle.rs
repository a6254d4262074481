// Copyright 2026 commonbath contributors
// SPDX-License-Identifier: Apache-2.0

//! Brute-force integration of the collective-decay master equation on the
//! full 2^n Hilbert space.
//!
//! This module is the independent referee: every analytic or
//! subspace-reduced result in the crate is validated against it. It is
//! deliberately plain — fixed-step RK4 on the dense density matrix, or a
//! dense matrix exponential of the materialized Liouvillian.

use crate::error::{Error, Result};
use crate::hilbert::{DenseOperator, DissipatorWorkspace, MAX_QUBITS};
use crate::linalg::{hs_norm, CMatrix, CVector, C64, ZERO};

/// Largest qubit count for which the 4^n x 4^n Liouvillian is materialized.
pub const MAX_QUBITS_EXPM: u32 = 6;

/// Integration method for the full-space oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Classical fixed-step fourth-order Runge-Kutta on the density matrix.
    Rk4,
    /// Scaling-and-squaring matrix exponential of the materialized
    /// Liouvillian, applied to the vectorized state.
    Expm,
}

/// Parameters for a full-space evolution.
#[derive(Debug, Clone)]
pub struct EvolutionConfig {
    /// Final dimensionless time.
    pub t_final: f64,
    /// Integrator step size.
    pub dt: f64,
    pub method: Method,
    /// Steady-state detection threshold on ||D rho||_HS, also the floor
    /// for the trace-drift guard.
    pub tolerance: f64,
    /// Number of output grid points (>= 2), evenly spaced on [0, t_final].
    pub samples: usize,
}

impl EvolutionConfig {
    /// Defaults for a given system size: dt = min(1e-3, 0.1/n). The
    /// fastest decay rates in the spectrum grow linearly with n, so the
    /// step must not grow with the system.
    pub fn defaults(n: u32, t_final: f64) -> Self {
        EvolutionConfig {
            t_final,
            dt: (0.1 / n as f64).min(1e-3),
            method: Method::Rk4,
            tolerance: 1e-10,
            samples: 2,
        }
    }

    pub fn with_samples(mut self, samples: usize) -> Self {
        self.samples = samples;
        self
    }

    pub fn with_method(mut self, method: Method) -> Self {
        self.method = method;
        self
    }

    pub fn with_dt(mut self, dt: f64) -> Self {
        self.dt = dt;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.dt <= 0.0 || self.dt.is_nan() {
            return Err(Error::invalid(format!("dt must be positive, got {}", self.dt)));
        }
        if self.t_final < 0.0 {
            return Err(Error::invalid(format!(
                "t_final must be non-negative, got {}",
                self.t_final
            )));
        }
        if self.t_final > 0.0 && self.dt > self.t_final {
            return Err(Error::invalid(format!(
                "dt = {} exceeds t_final = {}",
                self.dt, self.t_final
            )));
        }
        if self.tolerance <= 0.0 || self.tolerance.is_nan() {
            return Err(Error::invalid("tolerance must be positive".to_string()));
        }
        if self.samples < 2 && self.t_final > 0.0 {
            return Err(Error::invalid("need at least 2 output samples".to_string()));
        }
        Ok(())
    }

    fn trace_guard(&self) -> f64 {
        self.tolerance.max(1e-9)
    }
}

/// A sampled density-matrix trajectory.
#[derive(Debug, Clone)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub states: Vec<DenseOperator>,
}

impl Trajectory {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn final_state(&self) -> &DenseOperator {
        self.states.last().expect("trajectory is never empty")
    }
}

fn check_density_input(rho0: &DenseOperator) -> Result<()> {
    if !rho0.is_hermitian(1e-9) {
        return Err(Error::invalid("initial state is not Hermitian".to_string()));
    }
    let tr = rho0.trace();
    if (tr.re - 1.0).abs() > 1e-9 || tr.im.abs() > 1e-9 {
        return Err(Error::invalid(format!(
            "initial state trace {tr} is not 1"
        )));
    }
    Ok(())
}

fn output_grid(t_final: f64, samples: usize) -> Vec<f64> {
    if t_final == 0.0 {
        return vec![0.0];
    }
    let m = samples.max(2);
    (0..m)
        .map(|i| t_final * i as f64 / (m - 1) as f64)
        .collect()
}

/// Fixed-step RK4 propagator with preallocated stage buffers.
struct Rk4Integrator {
    ws: DissipatorWorkspace,
    k1: CMatrix,
    k2: CMatrix,
    k3: CMatrix,
    k4: CMatrix,
    tmp: CMatrix,
    /// ||D rho||_HS at the start of the most recent step.
    last_rhs_norm: f64,
}

impl Rk4Integrator {
    fn new(dim: usize) -> Self {
        Rk4Integrator {
            ws: DissipatorWorkspace::new(dim),
            k1: CMatrix::zeros(dim, dim),
            k2: CMatrix::zeros(dim, dim),
            k3: CMatrix::zeros(dim, dim),
            k4: CMatrix::zeros(dim, dim),
            tmp: CMatrix::zeros(dim, dim),
            last_rhs_norm: f64::INFINITY,
        }
    }

    fn step(&mut self, rho: &mut CMatrix, h: f64) {
        let half = C64::new(h / 2.0, 0.0);
        let full = C64::new(h, 0.0);

        self.ws.apply_hermitian_into(rho, &mut self.k1);
        self.last_rhs_norm = hs_norm(&self.k1);

        stage(&mut self.tmp, rho, &self.k1, half);
        self.ws.apply_hermitian_into(&self.tmp, &mut self.k2);

        stage(&mut self.tmp, rho, &self.k2, half);
        self.ws.apply_hermitian_into(&self.tmp, &mut self.k3);

        stage(&mut self.tmp, rho, &self.k3, full);
        self.ws.apply_hermitian_into(&self.tmp, &mut self.k4);

        let w = h / 6.0;
        for ((((r, k1), k2), k3), k4) in rho
            .iter_mut()
            .zip(self.k1.iter())
            .zip(self.k2.iter())
            .zip(self.k3.iter())
            .zip(self.k4.iter())
        {
            *r += C64::new(w, 0.0) * (k1 + C64::new(2.0, 0.0) * (k2 + k3) + k4);
        }
    }
}

fn stage(dst: &mut CMatrix, base: &CMatrix, k: &CMatrix, factor: C64) {
    for ((d, b), kk) in dst.iter_mut().zip(base.iter()).zip(k.iter()) {
        *d = b + factor * kk;
    }
}

fn real_trace(m: &CMatrix) -> f64 {
    m.diagonal().iter().map(|z| z.re).sum()
}

/// Evolve rho0 under the collective dissipator and sample the trajectory
/// on an even grid.
pub fn evolve_full(rho0: &DenseOperator, config: &EvolutionConfig) -> Result<Trajectory> {
    config.validate()?;
    check_density_input(rho0)?;
    match config.method {
        Method::Rk4 => evolve_rk4(rho0, config),
        Method::Expm => evolve_expm(rho0, config),
    }
}

fn evolve_rk4(rho0: &DenseOperator, config: &EvolutionConfig) -> Result<Trajectory> {
    let n = rho0.n();
    let dim = rho0.dim();
    let grid = output_grid(config.t_final, config.samples);
    let mut integ = Rk4Integrator::new(dim);
    let mut rho = rho0.matrix().clone();
    let guard = config.trace_guard();

    let mut times = Vec::with_capacity(grid.len());
    let mut states = Vec::with_capacity(grid.len());
    times.push(0.0);
    states.push(rho0.clone());

    let mut t = 0.0f64;
    for &target in grid.iter().skip(1) {
        let span = target - t;
        let steps = (span / config.dt).ceil().max(1.0) as usize;
        let h = span / steps as f64;
        for _ in 0..steps {
            integ.step(&mut rho, h);
        }
        t = target;
        let drift = (real_trace(&rho) - 1.0).abs();
        if drift > guard {
            return Err(Error::numerical(format!(
                "trace drifted by {drift:.3e} at t = {t} (guard {guard:.1e}); reduce dt"
            )));
        }
        times.push(t);
        states.push(DenseOperator::from_matrix(n, rho.clone())?);
    }
    Ok(Trajectory { times, states })
}

fn evolve_expm(rho0: &DenseOperator, config: &EvolutionConfig) -> Result<Trajectory> {
    let n = rho0.n();
    if n > MAX_QUBITS_EXPM {
        return Err(Error::capacity(format!(
            "expm path materializes a {}x{} Liouvillian; n <= {MAX_QUBITS_EXPM} required, got {n}",
            1usize << (2 * n),
            1usize << (2 * n)
        )));
    }
    let dim = rho0.dim();
    let grid = output_grid(config.t_final, config.samples);
    let liou = liouvillian_matrix(n)?;
    let guard = config.trace_guard();

    let mut times = Vec::with_capacity(grid.len());
    let mut states = Vec::with_capacity(grid.len());
    times.push(0.0);
    states.push(rho0.clone());

    // The grid is even, so one propagator per grid interval is exact for
    // the time-independent generator.
    let step = grid.get(1).map(|t| *t - grid[0]).unwrap_or(0.0);
    if step > 0.0 {
        let propagator = liou.scale(step).exp();
        let mut v = vectorize(rho0.matrix());
        for &target in grid.iter().skip(1) {
            v = &propagator * v;
            let rho = unvectorize(dim, &v);
            let drift = (real_trace(&rho) - 1.0).abs();
            if drift > guard {
                return Err(Error::numerical(format!(
                    "trace drifted by {drift:.3e} at t = {target} in the expm path"
                )));
            }
            times.push(target);
            states.push(DenseOperator::from_matrix(n, rho)?);
        }
    }
    Ok(Trajectory { times, states })
}

/// Integrate until ||D rho||_HS falls below config.tolerance.
///
/// The slowest transients decay no slower than exp(-(n-2)t), so the
/// search is capped at t = 200/n; exceeding the cap is a convergence
/// error.
pub fn steady_state(rho0: &DenseOperator, config: &EvolutionConfig) -> Result<DenseOperator> {
    config.validate()?;
    check_density_input(rho0)?;
    let n = rho0.n();
    if n > MAX_QUBITS {
        return Err(Error::capacity(format!("n = {n} exceeds {MAX_QUBITS}")));
    }
    let dim = rho0.dim();
    let max_time = 200.0 / n as f64;
    let mut integ = Rk4Integrator::new(dim);
    let mut rho = rho0.matrix().clone();
    let guard = config.trace_guard();

    // The ground state and other dark states are already stationary.
    {
        let mut probe = CMatrix::zeros(dim, dim);
        integ.ws.apply_hermitian_into(&rho, &mut probe);
        if hs_norm(&probe) < config.tolerance {
            return Ok(rho0.clone());
        }
    }

    let mut t = 0.0f64;
    let mut steps_since_guard = 0usize;
    while t < max_time {
        integ.step(&mut rho, config.dt);
        t += config.dt;
        steps_since_guard += 1;
        if integ.last_rhs_norm < config.tolerance {
            let drift = (real_trace(&rho) - 1.0).abs();
            if drift > guard {
                return Err(Error::numerical(format!(
                    "trace drifted by {drift:.3e} during steady-state search"
                )));
            }
            return DenseOperator::from_matrix(n, rho);
        }
        if steps_since_guard >= 1000 {
            steps_since_guard = 0;
            let drift = (real_trace(&rho) - 1.0).abs();
            if drift > guard {
                return Err(Error::numerical(format!(
                    "trace drifted by {drift:.3e} during steady-state search"
                )));
            }
        }
    }
    Err(Error::Convergence(format!(
        "||D rho|| still {:.3e} at t = {max_time:.2} (tolerance {:.1e})",
        integ.last_rhs_norm, config.tolerance
    )))
}

/// Column-major vectorization of a square matrix.
fn vectorize(m: &CMatrix) -> CVector {
    CVector::from_column_slice(m.as_slice())
}

fn unvectorize(dim: usize, v: &CVector) -> CMatrix {
    CMatrix::from_column_slice(dim, dim, v.as_slice())
}

/// Materialize the Liouvillian superoperator column by column: column
/// (r + c·dim) is vec(D(E_rc)) for the matrix unit E_rc. The dissipator
/// implementation itself is the single source of truth for the matrix.
pub fn liouvillian_matrix(n: u32) -> Result<CMatrix> {
    if n == 0 {
        return Err(Error::invalid("qubit count must be positive"));
    }
    if n > MAX_QUBITS_EXPM {
        return Err(Error::capacity(format!(
            "Liouvillian materialization capped at n <= {MAX_QUBITS_EXPM}, got {n}"
        )));
    }
    let dim = 1usize << n;
    let dim_l = dim * dim;
    let mut ws = DissipatorWorkspace::new(dim);
    let mut unit = CMatrix::zeros(dim, dim);
    let mut image = CMatrix::zeros(dim, dim);
    let mut liou = CMatrix::zeros(dim_l, dim_l);
    for c in 0..dim {
        for r in 0..dim {
            unit[(r, c)] = crate::linalg::ONE;
            ws.apply_into(&unit, &mut image);
            unit[(r, c)] = ZERO;
            let col = r + c * dim;
            liou.column_mut(col).copy_from_slice(image.as_slice());
        }
    }
    Ok(liou)
}

/// tr(σ†σ ρ), the collective excitation expectation.
pub fn excitation_expectation(rho: &DenseOperator) -> f64 {
    // tr(σ†σρ) = Σ_x Σ_{i ∈ bits(x)} (σρ)[x∖i, x]: σρ is a sum of shifted
    // rows of ρ, so the whole gather is O(n² 2^n) without forming σ.
    let dim = rho.dim();
    let m = rho.matrix();
    let mut acc = 0.0;
    for x in 0..dim {
        let mut bits_i = x;
        while bits_i != 0 {
            let low_i = bits_i & bits_i.wrapping_neg();
            // (σρ)[x∖i, x] = Σ_{j ∈ bits} ρ[(x∖i)∪j ... ] — expand σ rows:
            // (σρ)[y, x] = Σ_{z: z∖j = y} ρ[z, x] = Σ_{j ∉ y} ρ[y∪j, x].
            let y = x ^ low_i;
            let mut j_bit = 1usize;
            while j_bit < dim {
                if y & j_bit == 0 {
                    acc += m[(y | j_bit, x)].re;
                }
                j_bit <<= 1;
            }
            bits_i ^= low_i;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::{apply_dissipator, build_basis_state, QubitIndexSet};
    use crate::linalg::{hermitian_eigenvalues, max_abs_diff};

    fn projector(n: u32, excited: &[u32]) -> DenseOperator {
        build_basis_state(&QubitIndexSet::new(n, excited).unwrap())
            .unwrap()
            .density()
            .unwrap()
    }

    #[test]
    fn ground_state_is_invariant() {
        let g = projector(3, &[]);
        let config = EvolutionConfig::defaults(3, 2.0).with_samples(5);
        let traj = evolve_full(&g, &config).unwrap();
        for state in &traj.states {
            assert!(max_abs_diff(state.matrix(), g.matrix()) < 1e-12);
        }
    }

    #[test]
    fn single_excitation_ground_population_n2() {
        // a0(t) = f(2 - n f) with f = (1 - e^{-nt})/n; frozen at n=2, t=1.
        let rho0 = projector(2, &[1]);
        let config = EvolutionConfig::defaults(2, 1.0).with_samples(3);
        let traj = evolve_full(&rho0, &config).unwrap();
        let rho_t = traj.final_state();
        let expected_a0 = 0.4908421805556329;
        assert!((rho_t.matrix()[(0, 0)].re - expected_a0).abs() < 1e-8);
    }

    #[test]
    fn trajectory_stays_physical() {
        let rho0 = projector(4, &[1, 3]);
        let config = EvolutionConfig::defaults(4, 3.0).with_samples(7);
        let traj = evolve_full(&rho0, &config).unwrap();
        let mut last_excitation = f64::INFINITY;
        for state in &traj.states {
            assert!((state.trace().re - 1.0).abs() < 1e-9);
            assert!(state.is_hermitian(1e-10));
            let eigs = hermitian_eigenvalues(state.matrix());
            assert!(eigs.iter().all(|&e| e >= -1e-8), "eigs: {eigs:?}");
            let exc = excitation_expectation(state);
            assert!(exc <= last_excitation + 1e-10, "excitation grew: {exc}");
            last_excitation = exc;
        }
    }

    #[test]
    fn rk4_agrees_with_expm() {
        for n in [2u32, 3] {
            let rho0 = projector(n, &[1]);
            let rk = evolve_full(&rho0, &EvolutionConfig::defaults(n, 1.5).with_samples(4))
                .unwrap();
            let ex = evolve_full(
                &rho0,
                &EvolutionConfig::defaults(n, 1.5)
                    .with_samples(4)
                    .with_method(Method::Expm),
            )
            .unwrap();
            for (a, b) in rk.states.iter().zip(ex.states.iter()) {
                assert!(max_abs_diff(a.matrix(), b.matrix()) < 1e-8);
            }
        }
    }

    #[test]
    fn halving_dt_is_converged() {
        let rho0 = projector(3, &[2]);
        let base = EvolutionConfig::defaults(3, 2.0).with_samples(2);
        let fine = base.clone().with_dt(base.dt / 2.0);
        let a = evolve_full(&rho0, &base).unwrap();
        let b = evolve_full(&rho0, &fine).unwrap();
        assert!(max_abs_diff(a.final_state().matrix(), b.final_state().matrix()) < 1e-8);
    }

    #[test]
    fn steady_state_annihilates_dissipator() {
        let rho0 = projector(3, &[1]);
        let config = EvolutionConfig::defaults(3, 0.0);
        let ss = steady_state(&rho0, &config).unwrap();
        let d = apply_dissipator(&ss).unwrap();
        assert!(hs_norm(d.matrix()) < config.tolerance * 1.01);
    }

    #[test]
    fn steady_state_of_ground_is_ground() {
        let g = projector(4, &[]);
        let ss = steady_state(&g, &EvolutionConfig::defaults(4, 0.0)).unwrap();
        assert!(max_abs_diff(ss.matrix(), g.matrix()) < 1e-12);
    }

    #[test]
    fn expm_rejects_large_systems() {
        let rho0 = projector(7, &[1]);
        let config = EvolutionConfig::defaults(7, 1.0).with_method(Method::Expm);
        assert!(matches!(
            evolve_full(&rho0, &config),
            Err(Error::Capacity(_))
        ));
    }

    #[test]
    fn rejects_invalid_initial_states() {
        // Non-unit trace.
        let bad = DenseOperator::from_matrix(2, CMatrix::identity(4, 4)).unwrap();
        assert!(matches!(
            evolve_full(&bad, &EvolutionConfig::defaults(2, 1.0)),
            Err(Error::InvalidInput(_))
        ));
        // Non-Hermitian.
        let mut m = CMatrix::zeros(4, 4);
        m[(0, 0)] = crate::linalg::ONE;
        m[(0, 1)] = crate::linalg::ONE;
        let bad = DenseOperator::from_matrix(2, m).unwrap();
        assert!(matches!(
            steady_state(&bad, &EvolutionConfig::defaults(2, 0.0)),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn steady_state_reports_non_convergence() {
        // A tolerance below the floating-point noise floor can never be
        // reached; the search must give up at its time cap instead of
        // spinning forever.
        let rho0 = projector(2, &[1]);
        let mut config = EvolutionConfig::defaults(2, 0.0);
        config.tolerance = 1e-30;
        assert!(matches!(
            steady_state(&rho0, &config),
            Err(Error::Convergence(_))
        ));
    }

    #[test]
    fn bad_config_rejected() {
        let rho0 = projector(2, &[1]);
        let mut config = EvolutionConfig::defaults(2, 1.0);
        config.dt = 0.0;
        assert!(evolve_full(&rho0, &config).is_err());
        let mut config = EvolutionConfig::defaults(2, 1.0);
        config.dt = 2.0;
        assert!(evolve_full(&rho0, &config).is_err());
    }

    #[test]
    fn liouvillian_reproduces_dissipator_action() {
        let n = 2;
        let dim = 1usize << n;
        let liou = liouvillian_matrix(n).unwrap();
        let rho = projector(n, &[1, 2]);
        let direct = apply_dissipator(&rho).unwrap();
        let v = vectorize(rho.matrix());
        let lv = &liou * v;
        let via_matrix = unvectorize(dim, &lv);
        assert!(max_abs_diff(direct.matrix(), &via_matrix) < 1e-12);
    }
}
