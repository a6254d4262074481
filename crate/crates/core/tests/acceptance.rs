// Copyright 2026 commonbath contributors
// SPDX-License-Identifier: Apache-2.0

//! Acceptance suite: one test per release criterion, each printing a
//! pass/fail line. Run with `cargo test --test acceptance -- --nocapture`
//! to see the lines; tolerances and runtime budgets are pinned in code.

use commonbath::concurrence::concurrence;
use commonbath::e1::{self, PairClassE1};
use commonbath::e2::{self, PairClassE2};
use commonbath::hilbert::{build_basis_state, partial_trace_pair, QubitIndexSet};
use commonbath::oracle::{evolve_full, EvolutionConfig};
use commonbath::report;
use commonbath::scaling;
use std::time::{Duration, Instant};

fn finish(criterion: &str, passed: bool, detail: &str) {
    println!(
        "ACCEPTANCE {criterion}: {} — {detail}",
        if passed { "PASS" } else { "FAIL" }
    );
    assert!(passed, "{criterion}: {detail}");
}

fn within_budget(start: Instant, budget: Duration) -> (bool, String) {
    let elapsed = start.elapsed();
    (
        elapsed <= budget,
        format!("runtime {elapsed:.2?} (budget {budget:.0?})"),
    )
}

#[test]
fn criterion_01_e1_closure() {
    let start = Instant::now();
    let ns: Vec<u32> = (2..=8).collect();
    let check = report::check_e1_closure(&ns).unwrap();
    let (in_time, timing) = within_budget(start, Duration::from_secs(10));
    finish(
        "01 e1 closure vs coefficient equations",
        check.passed && in_time,
        &format!("worst {:.2e} (tol 1e-10), {timing}", check.worst),
    );
}

#[test]
fn criterion_02_e2_closure() {
    let start = Instant::now();
    let ns: Vec<u32> = (4..=8).collect();
    let check = report::check_e2_closure(&ns).unwrap();
    let (in_time, timing) = within_budget(start, Duration::from_secs(60));
    finish(
        "02 e2 closure vs printed 9x9 generator",
        check.passed && in_time,
        &format!("worst {:.2e} (tol 1e-10), {timing}", check.worst),
    );
}

#[test]
fn criterion_03_e1_oracle_equivalence() {
    let start = Instant::now();
    let ns: Vec<u32> = (2..=8).collect();
    let check = report::check_oracle_reconstruction(1, &ns, &[0.1, 0.5, 1.0, 5.0]).unwrap();
    let (in_time, timing) = within_budget(start, Duration::from_secs(120));
    finish(
        "03 e1 reconstruction vs RK4 oracle",
        check.passed && in_time,
        &format!("worst {:.2e} (tol 1e-8), {timing}", check.worst),
    );
}

#[test]
fn criterion_04_e2_oracle_equivalence() {
    let ns: Vec<u32> = (4..=8).collect();
    let recon = report::check_oracle_reconstruction(2, &ns, &[0.1, 0.5, 1.0, 5.0]).unwrap();
    let cf = report::check_e2_closed_form_vs_expm(&ns, &[0.0, 0.1, 0.5, 1.0, 2.0, 5.0]).unwrap();
    finish(
        "04 e2 closed forms vs oracle and exp(tM)",
        recon.passed && cf.passed,
        &format!(
            "reconstruction worst {:.2e}, closed-form worst {:.2e} (tol 1e-8)",
            recon.worst, cf.worst
        ),
    );
}

#[test]
fn criterion_05_e1_stationary_laws() {
    let ns: Vec<u32> = (2..=8).collect();
    let check = report::check_e1_stationary_vs_oracle(&ns).unwrap();
    finish(
        "05 e1 stationary laws vs oracle steady state",
        check.passed,
        &format!("worst {:.2e} (tol 1e-6)", check.worst),
    );
}

#[test]
fn criterion_06_excited_pair_never_entangled() {
    let ns: Vec<u32> = (4..=8).collect();
    let ts: Vec<f64> = (0..=50).map(|i| i as f64 * 0.1).collect();
    let check = report::check_e2_excited_pair_zero(&ns, &ts).unwrap();
    finish(
        "06 initially excited pair never entangles",
        check.passed,
        &format!("worst concurrence {:.2e} (tol 1e-10)", check.worst),
    );
}

#[test]
fn criterion_07_large_n_asymptotics() {
    let check = report::check_asymptotics().unwrap();
    // e1: n² · C_jm(∞) = 2 exactly (one rounding allowed).
    let n = 1000u32;
    let nf = n as f64;
    let row = &e1::stationary_scan_e1(n, n).unwrap()[0];
    let exact = (nf * nf * row.c_ground_ground - 2.0).abs() <= 4.0 * f64::EPSILON;
    finish("07 large-n asymptotics", check.passed && exact, &check.detail);
}

#[test]
fn criterion_08_figure_families() {
    // e1 family: peak time and peak value strictly decreasing in n. The
    // curves are monotone saturating, so "peak time" is the first grid
    // time at which the curve stops rising at f64 resolution.
    let mut last_peak_t = f64::INFINITY;
    let mut last_peak_c = f64::INFINITY;
    let mut e1_ok = true;
    let mut e1_detail = String::new();
    for n in [2u32, 6, 10, 14] {
        let mut peak_t = 0.0;
        let mut peak_c = -1.0;
        let mut t = 0.0;
        while t <= 30.0 {
            let c = e1::concurrence_e1(n, t, PairClassE1::ExcitedGround)
                .unwrap()
                .value();
            if c > peak_c + 1e-12 {
                peak_c = c;
                peak_t = t;
            }
            t += 0.005;
        }
        e1_detail.push_str(&format!("n={n}: t*={peak_t:.3} C*={peak_c:.4}; "));
        e1_ok &= peak_t < last_peak_t && peak_c < last_peak_c;
        last_peak_t = peak_t;
        last_peak_c = peak_c;
    }

    // e2 family: ground-ground curves lie strictly below excited-ground
    // curves at matched (n, t) past the initial transient.
    let mut e2_ok = true;
    for n in [4u32, 7, 10, 13] {
        let mut t = 0.05;
        while t <= 5.0 {
            let kj = e2::concurrence_e2(n, t, PairClassE2::ExcitedGround)
                .unwrap()
                .value();
            let jm = e2::concurrence_e2(n, t, PairClassE2::GroundGround)
                .unwrap()
                .value();
            if jm >= kj {
                e2_ok = false;
            }
            t += 0.05;
        }
    }
    finish(
        "08 figure-family properties",
        e1_ok && e2_ok,
        &format!("e1 peaks: {e1_detail}e2 dominance on t in [0.05, 5]: {e2_ok}"),
    );
}

#[test]
fn criterion_09_dimension_formula() {
    let check = report::check_dimension_formula().unwrap();
    let dims: Vec<u128> = (0..=2)
        .map(|e| scaling::subspace_dimension(e).dim)
        .collect();
    finish(
        "09 subspace dimension formula",
        check.passed && dims == vec![1, 4, 10],
        &format!("enumerated dims {dims:?} vs (1, 4, 10), bound holds"),
    );
}

#[test]
fn criterion_10_block_structure() {
    // Closed-form states across a grid, plus oracle states projected
    // directly for independence.
    let grid = [
        (1u32, 2u32, 0.3),
        (1, 3, 1.0),
        (1, 5, 2.0),
        (1, 6, 0.7),
        (2, 4, 0.0),
        (2, 4, 0.5),
        (2, 5, 1.5),
        (2, 6, 3.0),
    ];
    let check = report::check_block_structure(&grid).unwrap();

    let mut oracle_ok = true;
    let mut worst_oracle = 0.0f64;
    for (e, n, t) in [(1u32, 3u32, 1.0), (2, 4, 2.0)] {
        let excited: Vec<u32> = (1..=e).collect();
        let rho0 = build_basis_state(&QubitIndexSet::new(n, &excited).unwrap())
            .unwrap()
            .density()
            .unwrap();
        let traj = evolve_full(&rho0, &EvolutionConfig::defaults(n, t).with_samples(2)).unwrap();
        let report =
            scaling::verify_block_structure_of(e, n, t, traj.final_state()).unwrap();
        oracle_ok &= report.passed;
        worst_oracle = worst_oracle.max(report.max_off_block);
    }
    finish(
        "10 block structure of evolved states",
        check.passed && oracle_ok,
        &format!(
            "closed-form worst off-block {:.2e}, oracle-projected worst {:.2e} (tol 1e-10)",
            check.worst, worst_oracle
        ),
    );
}

#[test]
fn criterion_11_discrepancy_resolutions() {
    let a = report::resolve_excited_projector_closure().unwrap();
    let b = report::resolve_eq32_b7_term().unwrap();
    let c = report::resolve_e2_stationary_n4().unwrap();
    let conclusive = |n: &report::DiscrepancyNote| !n.verdict.starts_with("UNRESOLVED");

    // The validate report must carry all three as required outputs.
    let quick = report::run_validation(report::ValidationGrid::Quick).unwrap();
    let json = quick.to_json();
    let ids: Vec<String> = json["discrepancies"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d["id"].as_str().unwrap().to_string())
        .collect();
    let present = ["excited_projector_closure_term", "eq32_b7_discrepancy", "e2_stationary_ckj_n4"]
        .iter()
        .all(|id| ids.iter().any(|x| x == id));

    finish(
        "11 discrepancy resolutions documented",
        conclusive(&a) && conclusive(&b) && conclusive(&c) && present,
        &format!("report ids {ids:?}"),
    );
}

/// Not a numbered criterion: spot checks of frozen oracle values used in
/// the operation examples, kept here so the acceptance target exercises
/// them end to end.
#[test]
fn frozen_example_values() {
    // Oracle ground population at n=2, t=1 from the closed form.
    let rho0 = build_basis_state(&QubitIndexSet::new(2, &[1]).unwrap())
        .unwrap()
        .density()
        .unwrap();
    let traj = evolve_full(&rho0, &EvolutionConfig::defaults(2, 1.0)).unwrap();
    let a0 = traj.final_state().matrix()[(0, 0)].re;
    assert!((a0 - 0.49084218055563295).abs() < 1e-8);

    // Stationary off-diagonal of the n=2 reduced pair: -f(1-f) = -1/4.
    let rho0 = build_basis_state(&QubitIndexSet::new(2, &[1]).unwrap())
        .unwrap()
        .density()
        .unwrap();
    let ss = commonbath::oracle::steady_state(&rho0, &EvolutionConfig::defaults(2, 0.0)).unwrap();
    let reduced = partial_trace_pair(&ss, 1, 2).unwrap();
    assert!((reduced.matrix()[(2, 1)].re - (-0.25)).abs() < 1e-8);

    // Steady-state concurrence at n=3 equals 2(n-1)/n² = 4/9.
    let rho0 = build_basis_state(&QubitIndexSet::new(3, &[1]).unwrap())
        .unwrap()
        .density()
        .unwrap();
    let ss = commonbath::oracle::steady_state(&rho0, &EvolutionConfig::defaults(3, 0.0)).unwrap();
    let c = concurrence(&partial_trace_pair(&ss, 1, 2).unwrap())
        .unwrap()
        .value();
    assert!((c - 4.0 / 9.0).abs() < 1e-6);

    // Two-excitation steady state at n=4: the excited pair stays
    // unentangled.
    let rho0 = build_basis_state(&QubitIndexSet::new(4, &[1, 2]).unwrap())
        .unwrap()
        .density()
        .unwrap();
    let ss = commonbath::oracle::steady_state(&rho0, &EvolutionConfig::defaults(4, 0.0)).unwrap();
    let c = concurrence(&partial_trace_pair(&ss, 1, 2).unwrap())
        .unwrap()
        .value();
    assert!(c < 1e-8);
}
