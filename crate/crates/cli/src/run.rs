// Copyright 2026 commonbath contributors
// SPDX-License-Identifier: Apache-2.0

//! Implementations of the CLI subcommands.

use crate::output::{format_full, write_output, Cell, Table};
use crate::{
    CliError, ConcurrenceArgs, EvolveArgs, Format, GraphArgs, GraphFormat, Grid, Preset, ScanArgs,
    ValidateArgs,
};
use commonbath::e1::{self, PairClassE1};
use commonbath::e2::{self, PairClassE2};
use commonbath::hilbert::{build_basis_state, QubitIndexSet};
use commonbath::linalg::max_abs_diff;
use commonbath::oracle::{evolve_full, EvolutionConfig};
use commonbath::report::{run_validation, ValidationGrid};
use commonbath::scaling::{correlation_graph, WeightSource};
use std::process::ExitCode;

fn check_common(e: u32, n: u32) -> Result<(), CliError> {
    match e {
        1 if n >= 2 => Ok(()),
        1 => Err(CliError::usage(format!(
            "one initial excitation requires --n >= 2, got {n}"
        ))),
        2 if n >= 4 => Ok(()),
        2 => Err(CliError::usage(format!(
            "two initial excitations require --n >= 4, got {n}"
        ))),
        other => Err(CliError::usage(format!(
            "--e must be 1 or 2, got {other}"
        ))),
    }
}

fn check_positive(value: f64, what: &str) -> Result<(), CliError> {
    if value <= 0.0 || value.is_nan() {
        return Err(CliError::usage(format!("{what} must be positive, got {value}")));
    }
    Ok(())
}

fn time_grid(t_max: f64, samples: usize) -> Result<Vec<f64>, CliError> {
    if samples < 2 {
        return Err(CliError::usage(format!(
            "--samples must be at least 2, got {samples}"
        )));
    }
    Ok((0..samples)
        .map(|i| t_max * i as f64 / (samples - 1) as f64)
        .collect())
}

fn emit(table: &Table, format: Format, out: &Option<std::path::PathBuf>, name: &str) -> Result<(), CliError> {
    let content = match format {
        Format::Csv => table.to_csv(),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&table.to_json())
                .expect("json serialization cannot fail");
            s.push('\n');
            s
        }
    };
    let default_name = match format {
        Format::Csv => format!("{name}.csv"),
        Format::Json => format!("{name}.json"),
    };
    write_output(out, &default_name, &content)
}

pub fn evolve(args: EvolveArgs) -> Result<ExitCode, CliError> {
    check_common(args.e, args.n)?;
    check_positive(args.t_max, "--t-max")?;
    check_positive(args.rate, "--rate")?;
    let grid = time_grid(args.t_max, args.samples)?;

    // Oracle deviations, when requested, come from one full-space
    // trajectory sampled on the same (dimensionless) grid.
    let oracle_states = if args.oracle {
        let excited: Vec<u32> = (1..=args.e).collect();
        let rho0 = build_basis_state(&QubitIndexSet::new(args.n, &excited)?)?.density()?;
        let mut config = EvolutionConfig::defaults(args.n, args.rate * args.t_max)
            .with_samples(args.samples);
        if let Some(dt) = args.dt {
            config = config.with_dt(dt);
        }
        if let Some(tol) = args.tolerance {
            config.tolerance = tol;
        }
        Some(evolve_full(&rho0, &config)?)
    } else {
        None
    };

    let mut columns: Vec<String> = vec!["t".to_string()];
    match args.e {
        1 => columns.extend((0..4).map(|i| format!("a{i}"))),
        _ => columns.extend((0..10).map(|i| format!("b{i}"))),
    }
    if args.oracle {
        columns.push("max_abs_dev".to_string());
    }
    let column_refs: Vec<&str> = columns.iter().map(String::as_str).collect();
    let mut table = Table::new(&column_refs);

    for (idx, &t_physical) in grid.iter().enumerate() {
        let tau = args.rate * t_physical;
        let mut row = vec![Cell::Float(t_physical)];
        match args.e {
            1 => {
                let c = e1::coefficients_closed_form(args.n, tau)?;
                row.extend(c.as_array().iter().map(|v| Cell::Float(*v)));
                if let Some(traj) = &oracle_states {
                    let rebuilt = e1::full_state_e1(args.n, tau)?;
                    let dev = max_abs_diff(rebuilt.matrix(), traj.states[idx].matrix());
                    row.push(Cell::Float(dev));
                }
            }
            _ => {
                let c = e2::closed_form_b(args.n, tau)?;
                row.extend(c.b.iter().map(|v| Cell::Float(*v)));
                if let Some(traj) = &oracle_states {
                    let rebuilt = e2::full_state_e2(args.n, tau)?;
                    let dev = max_abs_diff(rebuilt.matrix(), traj.states[idx].matrix());
                    row.push(Cell::Float(dev));
                }
            }
        }
        table.push(row);
    }
    emit(&table, args.format, &args.out.output, &format!("evolve_e{}_n{}", args.e, args.n))?;
    Ok(ExitCode::SUCCESS)
}

fn concurrence_columns(e: u32) -> Vec<&'static str> {
    match e {
        1 => vec!["t", "C_excited_ground", "C_ground_ground"],
        _ => vec!["t", "C_excited_ground", "C_ground_ground", "C_excited_excited"],
    }
}

fn concurrence_row(e: u32, n: u32, t_physical: f64, tau: f64) -> Result<Vec<Cell>, CliError> {
    let mut row = vec![Cell::Float(t_physical)];
    match e {
        1 => {
            row.push(Cell::Float(
                e1::concurrence_e1(n, tau, PairClassE1::ExcitedGround)?.value(),
            ));
            if n >= 3 {
                row.push(Cell::Float(
                    e1::concurrence_e1(n, tau, PairClassE1::GroundGround)?.value(),
                ));
            } else {
                row.push(Cell::Missing);
            }
        }
        _ => {
            row.push(Cell::Float(
                e2::concurrence_e2(n, tau, PairClassE2::ExcitedGround)?.value(),
            ));
            row.push(Cell::Float(
                e2::concurrence_e2(n, tau, PairClassE2::GroundGround)?.value(),
            ));
            row.push(Cell::Float(
                e2::concurrence_e2(n, tau, PairClassE2::ExcitedExcited)?.value(),
            ));
        }
    }
    Ok(row)
}

pub fn concurrence(args: ConcurrenceArgs) -> Result<ExitCode, CliError> {
    check_positive(args.rate, "--rate")?;
    if let Some(preset) = args.preset {
        return concurrence_preset(&args, preset);
    }
    let e = args.e.expect("clap enforces presence");
    let n = args.n.expect("clap enforces presence");
    check_common(e, n)?;
    check_positive(args.t_max, "--t-max")?;
    let grid = time_grid(args.t_max, args.samples)?;

    let mut table = Table::new(&concurrence_columns(e));
    for &t in &grid {
        table.push(concurrence_row(e, n, t, args.rate * t)?);
    }
    emit(&table, args.format, &args.out.output, &format!("concurrence_e{e}_n{n}"))?;
    Ok(ExitCode::SUCCESS)
}

fn concurrence_preset(args: &ConcurrenceArgs, preset: Preset) -> Result<ExitCode, CliError> {
    let grid = time_grid(args.t_max, args.samples)?;
    let (table, name): (Table, &str) = match preset {
        Preset::Fig1 | Preset::Fig3 => {
            let pair_class = if preset == Preset::Fig1 {
                PairClassE1::ExcitedGround
            } else {
                PairClassE1::GroundGround
            };
            let column = if preset == Preset::Fig1 {
                "C_excited_ground"
            } else {
                "C_ground_ground"
            };
            let mut table = Table::new(&["n", "t", column]);
            for n in [2u32, 6, 10, 14] {
                for &t in &grid {
                    table.push(vec![
                        Cell::Int(n as i64),
                        Cell::Float(t),
                        Cell::Float(e1::concurrence_e1(n, args.rate * t, pair_class)?.value()),
                    ]);
                }
            }
            (table, if preset == Preset::Fig1 { "fig1" } else { "fig3" })
        }
        Preset::Fig2 => {
            let mut table = Table::new(&[
                "n",
                "C_excited_ground_inf",
                "C_ground_ground_inf",
                "ground_pair_degenerate",
            ]);
            for row in e1::stationary_scan_e1(2, 50)? {
                table.push(vec![
                    Cell::Int(row.n as i64),
                    Cell::Float(row.c_excited_ground),
                    Cell::Float(row.c_ground_ground),
                    Cell::Bool(row.ground_pair_degenerate),
                ]);
            }
            (table, "fig2")
        }
        Preset::Fig5 => {
            let mut table = Table::new(&["n", "t", "C_excited_ground", "C_ground_ground"]);
            for n in [4u32, 7, 10, 13] {
                for &t in &grid {
                    let tau = args.rate * t;
                    table.push(vec![
                        Cell::Int(n as i64),
                        Cell::Float(t),
                        Cell::Float(
                            e2::concurrence_e2(n, tau, PairClassE2::ExcitedGround)?.value(),
                        ),
                        Cell::Float(
                            e2::concurrence_e2(n, tau, PairClassE2::GroundGround)?.value(),
                        ),
                    ]);
                }
            }
            (table, "fig5")
        }
    };
    emit(&table, args.format, &args.out.output, name)?;
    Ok(ExitCode::SUCCESS)
}

pub fn scan(args: ScanArgs) -> Result<ExitCode, CliError> {
    match args.e {
        1 => {
            if args.n_min < 2 || args.n_min > args.n_max {
                return Err(CliError::usage(format!(
                    "need 2 <= n-min <= n-max, got [{}, {}]",
                    args.n_min, args.n_max
                )));
            }
            let mut columns = vec![
                "n",
                "C_excited_ground_inf",
                "C_ground_ground_inf",
                "ground_pair_degenerate",
            ];
            if args.oracle {
                columns.extend([
                    "oracle_excited_ground",
                    "oracle_ground_ground",
                    "matches_oracle",
                ]);
            }
            columns.push("source");
            let mut table = Table::new(&columns);
            for row in e1::stationary_scan_e1(args.n_min, args.n_max)? {
                let mut cells = vec![
                    Cell::Int(row.n as i64),
                    Cell::Float(row.c_excited_ground),
                    Cell::Float(row.c_ground_ground),
                    Cell::Bool(row.ground_pair_degenerate),
                ];
                let mut source = "analytic";
                if args.oracle {
                    if row.n <= 8 {
                        let (okj, ojm) = e1_oracle_stationary(row.n)?;
                        let matches = (okj - row.c_excited_ground).abs() < 1e-4
                            && ojm.is_none_or(|v| (v - row.c_ground_ground).abs() < 1e-4);
                        cells.push(Cell::Float(okj));
                        cells.push(ojm.map(Cell::Float).unwrap_or(Cell::Missing));
                        cells.push(Cell::Bool(matches));
                        source = "analytic+oracle";
                    } else {
                        cells.extend([Cell::Missing, Cell::Missing, Cell::Missing]);
                    }
                }
                cells.push(Cell::Text(source.to_string()));
                table.push(cells);
            }
            emit(&table, args.format, &args.out.output, "scan_e1")?;
        }
        2 => {
            if args.n_min < 4 || args.n_min > args.n_max {
                return Err(CliError::usage(format!(
                    "need 4 <= n-min <= n-max, got [{}, {}]",
                    args.n_min, args.n_max
                )));
            }
            let mut table = Table::new(&[
                "n",
                "C_excited_ground_inf",
                "C_ground_ground_inf",
                "C_excited_ground_printed",
                "C_ground_ground_printed",
                "oracle_excited_ground",
                "oracle_ground_ground",
                "printed_matches_oracle",
                "limit_matches_oracle",
                "source",
            ]);
            for row in e2::stationary_scan_e2(args.n_min, args.n_max, args.oracle)? {
                let opt_f = |v: Option<f64>| v.map(Cell::Float).unwrap_or(Cell::Missing);
                let opt_b = |v: Option<bool>| v.map(Cell::Bool).unwrap_or(Cell::Missing);
                let source = if row.oracle_excited_ground.is_some() {
                    "coefficient_limit+oracle"
                } else {
                    "coefficient_limit"
                };
                table.push(vec![
                    Cell::Int(row.n as i64),
                    Cell::Float(row.c_excited_ground),
                    Cell::Float(row.c_ground_ground),
                    Cell::Float(row.c_excited_ground_printed),
                    Cell::Float(row.c_ground_ground_printed),
                    opt_f(row.oracle_excited_ground),
                    opt_f(row.oracle_ground_ground),
                    opt_b(row.printed_matches_oracle),
                    opt_b(row.limit_matches_oracle),
                    Cell::Text(source.to_string()),
                ]);
            }
            emit(&table, args.format, &args.out.output, "scan_e2")?;
        }
        other => {
            return Err(CliError::usage(format!("--e must be 1 or 2, got {other}")));
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Steady-state pair concurrences from the oracle for one excitation:
/// (excited-ground, ground-ground if it exists).
fn e1_oracle_stationary(n: u32) -> Result<(f64, Option<f64>), CliError> {
    let rho0 = build_basis_state(&QubitIndexSet::new(n, &[1])?)?.density()?;
    let ss = commonbath::oracle::steady_state(&rho0, &EvolutionConfig::defaults(n, 0.0))?;
    let kj = commonbath::concurrence::concurrence(&commonbath::hilbert::partial_trace_pair(
        &ss, 1, 2,
    )?)?
    .value();
    let jm = if n >= 3 {
        Some(
            commonbath::concurrence::concurrence(&commonbath::hilbert::partial_trace_pair(
                &ss, 2, 3,
            )?)?
            .value(),
        )
    } else {
        None
    };
    Ok((kj, jm))
}

pub fn validate(args: ValidateArgs) -> Result<ExitCode, CliError> {
    let grid = match args.grid {
        Grid::Quick => ValidationGrid::Quick,
        Grid::Full => ValidationGrid::Full,
    };
    let report = run_validation(grid)?;
    print!("{}", report.render_text());
    if let Some(path) = &args.output {
        let mut content = serde_json::to_string_pretty(&report.to_json())
            .expect("report serialization cannot fail");
        content.push('\n');
        write_output(&Some(path.clone()), "validate.json", &content)?;
    }
    Ok(if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

pub fn graph(args: GraphArgs) -> Result<ExitCode, CliError> {
    check_common(args.e, args.n)?;
    let source = if args.oracle {
        WeightSource::Oracle
    } else {
        WeightSource::Analytic
    };
    let threshold = if args.threshold == "auto" {
        auto_threshold(args.e, args.n, source)?
    } else {
        args.threshold
            .parse::<f64>()
            .map_err(|_| CliError::usage(format!("invalid threshold '{}'", args.threshold)))?
    };
    if !(threshold > 0.0 && threshold < 1.0) {
        return Err(CliError::usage(format!(
            "threshold must lie in (0, 1), got {threshold}"
        )));
    }
    let graph = correlation_graph(args.e, args.n, threshold, source)?;
    let content = match args.format {
        GraphFormat::Dot => graph.to_dot(),
        GraphFormat::Json => {
            let mut s = serde_json::to_string_pretty(&graph.to_json())
                .expect("graph serialization cannot fail");
            s.push('\n');
            s
        }
    };
    let suffix = match args.format {
        GraphFormat::Dot => "dot",
        GraphFormat::Json => "json",
    };
    write_output(
        &args.out.output,
        &format!("graph_e{}_n{}.{suffix}", args.e, args.n),
        &content,
    )?;
    Ok(ExitCode::SUCCESS)
}

/// Geometric mean of the two stationary class concurrences, falling back
/// to half the dominant value when the smaller class is unentangled.
fn auto_threshold(e: u32, n: u32, source: WeightSource) -> Result<f64, CliError> {
    let weights = commonbath::scaling::stationary_class_weights(e, n, source)?;
    let kj = weights[1].unwrap_or(0.0);
    let jm = weights[2].unwrap_or(0.0);
    if kj <= 0.0 {
        return Err(CliError::usage(format!(
            "no stationary entanglement at (e={e}, n={n}); choose --threshold explicitly"
        )));
    }
    let threshold = if jm > 0.0 { (kj * jm).sqrt() } else { kj / 2.0 };
    eprintln!("auto threshold = {}", format_full(threshold));
    Ok(threshold)
}
