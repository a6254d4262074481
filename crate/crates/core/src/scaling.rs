// Copyright 2026 commonbath contributors
// SPDX-License-Identifier: Apache-2.0

//! Subspace dimension counting, block-structure verification of the
//! evolved states, and extraction of the stationary correlation graph.

use crate::error::{Error, Result};
use crate::hilbert::{
    build_basis_state, build_special_vector, DenseOperator, PureState, QubitIndexSet,
    SpecialVector,
};
use crate::linalg::{CMatrix, C64};
use nalgebra::DMatrix;
use serde::Serialize;

/// Dimension of the invariant operator subspace for e initial
/// excitations, together with the loose 4^e bound it always satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SubspaceDimension {
    pub e: u32,
    /// (1+e)(2+e)(3+e)/6.
    pub dim: u128,
    /// The generic bound (2^e)² = 4^e.
    pub bound: u128,
}

/// Polynomial subspace dimension (1+e)(2+e)(3+e)/6 and the 4^e bound.
pub fn subspace_dimension(e: u32) -> SubspaceDimension {
    let ee = e as u128;
    SubspaceDimension {
        e,
        dim: (1 + ee) * (2 + ee) * (3 + ee) / 6,
        bound: 1u128 << (2 * e.min(63)),
    }
}

/// Result of projecting an evolved state onto the subspace vector basis.
#[derive(Debug, Clone, Serialize)]
pub struct BlockStructureReport {
    pub e: u32,
    pub n: u32,
    pub t: f64,
    /// Expected diagonal block sizes: (1, 2) for e = 1, (1, 2, 3) for e = 2.
    pub block_sizes: Vec<usize>,
    /// Coefficient matrix of the state in the non-orthogonal vector basis
    /// (row-major), real parts; imaginary parts are checked separately.
    pub coefficients: Vec<Vec<f64>>,
    /// Largest |entry| outside the expected diagonal blocks.
    pub max_off_block: f64,
    /// Largest imaginary part anywhere in the coefficient matrix.
    pub max_imag: f64,
    /// Residual of the state outside the span of the vector basis.
    pub span_residual: f64,
    /// Condition number of the vector Gram matrix (the basis overlaps).
    pub gram_condition: f64,
    pub passed: bool,
}

fn vector_basis(e: u32, n: u32) -> Result<Vec<PureState>> {
    match e {
        1 => {
            if n < 2 {
                return Err(Error::invalid("block structure for e = 1 needs n >= 2"));
            }
            Ok(vec![
                build_basis_state(&QubitIndexSet::new(n, &[])?)?,
                build_basis_state(&QubitIndexSet::new(n, &[1])?)?,
                build_special_vector(n, &SpecialVector::ExcitedSum { excluded: vec![1] })?,
            ])
        }
        2 => {
            if n < 4 {
                return Err(Error::invalid("block structure for e = 2 needs n >= 4"));
            }
            let anchored = build_special_vector(n, &SpecialVector::AnchoredPairs { k: 1, l: 2 })?;
            let kl = build_basis_state(&QubitIndexSet::new(n, &[1, 2])?)?;
            let bridge = PureState::from_amplitudes(
                n,
                anchored.amplitudes() - kl.amplitudes().scale(2.0),
            )?;
            Ok(vec![
                build_basis_state(&QubitIndexSet::new(n, &[])?)?,
                build_special_vector(
                    n,
                    &SpecialVector::ExcitedSum {
                        excluded: vec![1, 2],
                    },
                )?,
                build_special_vector(n, &SpecialVector::PairSum { k: 1, l: 2 })?,
                kl,
                bridge,
                build_special_vector(n, &SpecialVector::SpectatorPairs { k: 1, l: 2 })?,
            ])
        }
        other => Err(Error::invalid(format!(
            "block structure is verified for e in {{1, 2}}, got e = {other}"
        ))),
    }
}

fn block_sizes(e: u32) -> Vec<usize> {
    (1..=(e as usize + 1)).collect()
}

/// True when (row, col) lies inside the diagonal blocks of given sizes.
fn in_block(sizes: &[usize], row: usize, col: usize) -> bool {
    let mut start = 0;
    for &s in sizes {
        let end = start + s;
        if row >= start && row < end {
            return col >= start && col < end;
        }
        start = end;
    }
    false
}

/// Project the evolved state at time t onto the subspace vector basis and
/// verify the diagonal block pattern.
///
/// The basis is non-orthogonal, so the coefficient matrix is
/// R = G⁻¹ (V† ρ V) G⁻¹ with G = V†V; the Gram condition number is
/// reported to guard near-degeneracy at small n.
pub fn verify_block_structure(e: u32, n: u32, t: f64) -> Result<BlockStructureReport> {
    let rho = match e {
        1 => crate::e1::full_state_e1(n, t)?,
        2 => crate::e2::full_state_e2(n, t)?,
        other => {
            return Err(Error::invalid(format!(
                "block structure is verified for e in {{1, 2}}, got e = {other}"
            )))
        }
    };
    verify_block_structure_of(e, n, t, &rho)
}

/// Same check against a caller-supplied state (e.g. an oracle trajectory
/// point).
pub fn verify_block_structure_of(
    e: u32,
    n: u32,
    t: f64,
    rho: &DenseOperator,
) -> Result<BlockStructureReport> {
    let basis = vector_basis(e, n)?;
    let dim = rho.dim();
    let m = basis.len();

    let mut v = CMatrix::zeros(dim, m);
    for (j, state) in basis.iter().enumerate() {
        v.column_mut(j).copy_from(state.amplitudes());
    }
    let gram = v.adjoint() * &v;
    let gram_real = DMatrix::<f64>::from_fn(m, m, |r, c| gram[(r, c)].re);
    let gram_condition = crate::linalg::symmetric_condition_number(&gram_real);

    let overlap = v.adjoint() * rho.matrix() * &v;
    let gram_inv = gram
        .clone()
        .try_inverse()
        .ok_or_else(|| Error::numerical("vector Gram matrix is singular".to_string()))?;
    let coeff = &gram_inv * overlap * &gram_inv;

    // Residual of rho outside span{|v_i⟩⟨v_j|}.
    let reconstructed = &v * &coeff * v.adjoint();
    let span_residual = crate::linalg::max_abs_diff(&reconstructed, rho.matrix());

    let sizes = block_sizes(e);
    let mut max_off_block = 0.0f64;
    let mut max_imag = 0.0f64;
    let mut rows = Vec::with_capacity(m);
    for r in 0..m {
        let mut row = Vec::with_capacity(m);
        for c in 0..m {
            let entry: C64 = coeff[(r, c)];
            max_imag = max_imag.max(entry.im.abs());
            if !in_block(&sizes, r, c) {
                max_off_block = max_off_block.max(entry.norm());
            }
            row.push(entry.re);
        }
        rows.push(row);
    }

    let passed = max_off_block < 1e-10 && span_residual < 1e-9 && max_imag < 1e-10;
    Ok(BlockStructureReport {
        e,
        n,
        t,
        block_sizes: sizes,
        coefficients: rows,
        max_off_block,
        max_imag,
        span_residual,
        gram_condition,
        passed,
    })
}

/// Initial role of a qubit in the correlation graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NodeRole {
    InitiallyExcited,
    InitiallyGround,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct GraphNode {
    pub id: u32,
    pub role: NodeRole,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct GraphEdge {
    pub a: u32,
    pub b: u32,
    pub weight: f64,
}

/// The stationary entanglement structure: nodes are qubits, edges are
/// pairs whose stationary concurrence exceeds the threshold.
#[derive(Debug, Clone, Serialize)]
pub struct CorrelationGraph {
    pub n: u32,
    pub e: u32,
    pub threshold: f64,
    pub nodes: Vec<GraphNode>,
    pub edges: Vec<GraphEdge>,
}

/// Where the stationary pair weights come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightSource {
    /// Closed-form stationary values (fast, any n).
    Analytic,
    /// Steady state of the full-space integrator (n <= 8).
    Oracle,
}

/// Stationary pairwise concurrences by class: (excited-excited,
/// excited-ground, ground-ground). Classes that do not exist at the
/// given (e, n) are None.
pub fn stationary_class_weights(e: u32, n: u32, source: WeightSource) -> Result<[Option<f64>; 3]> {
    match (e, source) {
        (1, WeightSource::Analytic) => {
            let nf = n as f64;
            Ok([
                None,
                Some(2.0 * (nf - 1.0) / (nf * nf)),
                if n >= 3 { Some(2.0 / (nf * nf)) } else { None },
            ])
        }
        (2, WeightSource::Analytic) => Ok([
            Some(
                crate::e2::concurrence_e2(n, f64::INFINITY, crate::e2::PairClassE2::ExcitedExcited)?
                    .value(),
            ),
            Some(
                crate::e2::concurrence_e2(n, f64::INFINITY, crate::e2::PairClassE2::ExcitedGround)?
                    .value(),
            ),
            if n >= 4 {
                Some(
                    crate::e2::concurrence_e2(
                        n,
                        f64::INFINITY,
                        crate::e2::PairClassE2::GroundGround,
                    )?
                    .value(),
                )
            } else {
                None
            },
        ]),
        (1, WeightSource::Oracle) => {
            if n > 8 {
                return Err(Error::capacity(format!(
                    "oracle graph weights are limited to n <= 8, got {n}"
                )));
            }
            let rho0 = build_basis_state(&QubitIndexSet::new(n, &[1])?)?.density()?;
            let ss = crate::oracle::steady_state(&rho0, &crate::oracle::EvolutionConfig::defaults(n, 0.0))?;
            let c = |i, j| -> Result<f64> {
                let r = crate::hilbert::partial_trace_pair(&ss, i, j)?;
                Ok(crate::concurrence::concurrence(&r)?.value())
            };
            Ok([
                None,
                Some(c(1, 2)?),
                if n >= 3 { Some(c(2, 3)?) } else { None },
            ])
        }
        (2, WeightSource::Oracle) => {
            if n > 8 {
                return Err(Error::capacity(format!(
                    "oracle graph weights are limited to n <= 8, got {n}"
                )));
            }
            let rho0 = build_basis_state(&QubitIndexSet::new(n, &[1, 2])?)?.density()?;
            let ss = crate::oracle::steady_state(&rho0, &crate::oracle::EvolutionConfig::defaults(n, 0.0))?;
            let c = |i, j| -> Result<f64> {
                let r = crate::hilbert::partial_trace_pair(&ss, i, j)?;
                Ok(crate::concurrence::concurrence(&r)?.value())
            };
            Ok([Some(c(1, 2)?), Some(c(1, 3)?), Some(c(3, 4)?)])
        }
        _ => Err(Error::invalid(format!(
            "correlation graphs exist for e in {{1, 2}}, got e = {e}"
        ))),
    }
}

/// Build the stationary correlation graph.
///
/// All pairs within a class share one weight by permutation symmetry;
/// edges are kept when their weight exceeds the threshold.
pub fn correlation_graph(
    e: u32,
    n: u32,
    threshold: f64,
    source: WeightSource,
) -> Result<CorrelationGraph> {
    if !(0.0..1.0).contains(&threshold) || threshold == 0.0 {
        return Err(Error::invalid(format!(
            "threshold must lie in (0, 1), got {threshold}"
        )));
    }
    let min_n = match e {
        1 => 2,
        2 => 4,
        other => {
            return Err(Error::invalid(format!(
                "correlation graphs exist for e in {{1, 2}}, got e = {other}"
            )))
        }
    };
    if n < min_n {
        return Err(Error::invalid(format!(
            "e = {e} graphs need n >= {min_n}, got {n}"
        )));
    }
    let weights = stationary_class_weights(e, n, source)?;
    let excited_count = e;
    let nodes: Vec<GraphNode> = (1..=n)
        .map(|id| GraphNode {
            id,
            role: if id <= excited_count {
                NodeRole::InitiallyExcited
            } else {
                NodeRole::InitiallyGround
            },
        })
        .collect();
    let mut edges = Vec::new();
    for a in 1..=n {
        for b in (a + 1)..=n {
            let class = match (a <= excited_count, b <= excited_count) {
                (true, true) => 0,
                (true, false) | (false, true) => 1,
                (false, false) => 2,
            };
            if let Some(w) = weights[class] {
                if w > threshold {
                    edges.push(GraphEdge { a, b, weight: w });
                }
            }
        }
    }
    Ok(CorrelationGraph {
        n,
        e,
        threshold,
        nodes,
        edges,
    })
}

/// Format a weight with six significant digits for DOT labels.
fn sig6(w: f64) -> String {
    if w == 0.0 {
        return "0.00000".to_string();
    }
    let mag = w.abs().log10().floor() as i32;
    let decimals = (5 - mag).max(0) as usize;
    format!("{w:.decimals$}")
}

impl CorrelationGraph {
    /// Graphviz DOT serialization: node color encodes the initial role,
    /// edge labels carry the stationary concurrence.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph correlations {\n");
        for node in &self.nodes {
            let color = match node.role {
                NodeRole::InitiallyExcited => "red",
                NodeRole::InitiallyGround => "blue",
            };
            out.push_str(&format!("    q{} [color={color}];\n", node.id));
        }
        for edge in &self.edges {
            out.push_str(&format!(
                "    q{} -- q{} [label=\"{}\"];\n",
                edge.a,
                edge.b,
                sig6(edge.weight)
            ));
        }
        out.push_str("}\n");
        out
    }

    /// JSON edge-list serialization.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("graph serialization cannot fail")
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn dimension_formula() {
        assert_eq!(subspace_dimension(0).dim, 1);
        assert_eq!(subspace_dimension(1).dim, 4);
        assert_eq!(subspace_dimension(2).dim, 10);
        for e in 0..=20 {
            let d = subspace_dimension(e);
            assert!(d.dim <= d.bound, "bound violated at e = {e}");
        }
    }

    #[test]
    fn dimension_matches_enumerated_bases() {
        assert_eq!(subspace_dimension(1).dim as usize, crate::e1::basis_ops_e1(5).unwrap().len());
        assert_eq!(
            subspace_dimension(2).dim as usize,
            crate::e2::build_e2_basis(5, 1, 2).unwrap().len()
        );
        // e = 0: the ground projector alone.
        assert_eq!(subspace_dimension(0).dim, 1);
    }

    #[test]
    fn block_structure_e1() {
        let report = verify_block_structure(1, 3, 1.0).unwrap();
        assert!(report.passed, "{report:?}");
        assert_eq!(report.block_sizes, vec![1, 2]);
        // The 1x1 block is a0.
        let a0 = crate::e1::coefficients_closed_form(3, 1.0).unwrap().a0;
        assert_relative_eq!(report.coefficients[0][0], a0, epsilon = 1e-10);
    }

    #[test]
    fn block_structure_e2_initial() {
        let report = verify_block_structure(2, 5, 0.0).unwrap();
        assert!(report.passed);
        assert_eq!(report.block_sizes, vec![1, 2, 3]);
        // Only the initial-pair diagonal entry is populated at t = 0.
        for (r, row) in report.coefficients.iter().enumerate() {
            for (c, val) in row.iter().enumerate() {
                if r == 3 && c == 3 {
                    assert_relative_eq!(*val, 1.0, epsilon = 1e-10);
                } else {
                    assert!(val.abs() < 1e-10, "unexpected entry at ({r},{c}): {val}");
                }
            }
        }
    }

    #[test]
    fn block_structure_e2_evolved() {
        let report = verify_block_structure(2, 4, 2.0).unwrap();
        assert!(report.passed, "off-block {}", report.max_off_block);
        assert!(report.max_off_block < 1e-10);
        assert!(report.gram_condition.is_finite());
    }

    #[test]
    fn e1_star_graph() {
        // n = 6: C_kj = 10/36 ≈ 0.278 > 0.1 > C_jm = 2/36 ≈ 0.056.
        let g = correlation_graph(1, 6, 0.1, WeightSource::Analytic).unwrap();
        assert_eq!(g.edge_count(), 5);
        assert!(g.edges.iter().all(|e| e.a == 1));
        // A tree on n nodes with n-1 edges centered at qubit 1.
        let dot = g.to_dot();
        assert!(dot.contains("q1 [color=red]"));
        assert!(dot.contains("q2 [color=blue]"));
        assert!(dot.contains("0.277778"));
    }

    #[test]
    fn e1_degenerate_two_qubit_graph() {
        // n = 2, threshold above 0.5: no edges survive.
        let g = correlation_graph(1, 2, 0.6, WeightSource::Analytic).unwrap();
        assert_eq!(g.edge_count(), 0);
        // threshold 0.4 < 0.5: the single pair is connected.
        let g = correlation_graph(1, 2, 0.4, WeightSource::Analytic).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn e2_bipartite_graph() {
        // A threshold between the two stationary class values leaves the
        // complete bipartite graph between the initially excited pair and
        // the spectators: K_{2,4} at n = 6.
        for n in [6u32, 7] {
            let kj =
                crate::e2::concurrence_e2(n, f64::INFINITY, crate::e2::PairClassE2::ExcitedGround)
                    .unwrap()
                    .value();
            let jm =
                crate::e2::concurrence_e2(n, f64::INFINITY, crate::e2::PairClassE2::GroundGround)
                    .unwrap()
                    .value();
            assert!(kj > jm, "ordering violated at n = {n}: {kj} vs {jm}");
            let threshold = (kj * jm).sqrt();
            let g = correlation_graph(2, n, threshold, WeightSource::Analytic).unwrap();
            assert_eq!(g.edge_count(), 2 * (n as usize - 2));
            assert!(g.edges.iter().all(|e| (e.a <= 2) != (e.b <= 2)));
        }
    }

    #[test]
    fn edge_counts_across_sizes() {
        // e = 1: a threshold strictly between the two stationary values
        // leaves the star, a tree with n - 1 edges.
        for n in 3..=10u32 {
            let nf = n as f64;
            let threshold = (2.0 * (nf - 1.0) / (nf * nf) * 2.0 / (nf * nf)).sqrt();
            let g = correlation_graph(1, n, threshold, WeightSource::Analytic).unwrap();
            assert_eq!(g.edge_count(), n as usize - 1, "n = {n}");
            assert!(g.edges.iter().all(|e| e.a == 1));
        }
        // e = 2: the analogous threshold leaves the complete bipartite
        // graph with 2(n - 2) edges. Below n = 6 the ground-ground class
        // is stationary-unentangled, so any threshold under the dominant
        // value works.
        for n in 4..=9u32 {
            let kj = crate::e2::concurrence_e2(n, f64::INFINITY, crate::e2::PairClassE2::ExcitedGround)
                .unwrap()
                .value();
            let jm = crate::e2::concurrence_e2(n, f64::INFINITY, crate::e2::PairClassE2::GroundGround)
                .unwrap()
                .value();
            let threshold = if jm > 0.0 { (kj * jm).sqrt() } else { kj / 2.0 };
            let g = correlation_graph(2, n, threshold, WeightSource::Analytic).unwrap();
            assert_eq!(g.edge_count(), 2 * (n as usize - 2), "n = {n}");
            assert!(g.edges.iter().all(|e| (e.a <= 2) != (e.b <= 2)), "n = {n}");
        }
    }

    #[test]
    fn json_roundtrip_shape() {
        let g = correlation_graph(1, 4, 0.2, WeightSource::Analytic).unwrap();
        let v = g.to_json();
        assert_eq!(v["n"], 4);
        assert_eq!(v["edges"].as_array().unwrap().len(), g.edge_count());
    }

    #[test]
    fn sig6_formatting() {
        assert_eq!(sig6(0.2777777777), "0.277778");
        assert_eq!(sig6(0.0002), "0.000200000");
        assert_eq!(sig6(0.0), "0.00000");
    }
}
