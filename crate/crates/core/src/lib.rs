// Copyright 2026 commonbath contributors
// SPDX-License-Identifier: Apache-2.0

//! Simulator for n qubits dissipating into one common zero-temperature
//! environment.
//!
//! The collective decay channel confines states with few initial
//! excitations to low-dimensional invariant operator subspaces. This
//! crate provides:
//!
//! - [`hilbert`]: dense multi-qubit states, the collective lowering
//!   operator, the dissipator and partial traces;
//! - [`oracle`]: brute-force full-space integration, the referee for
//!   everything else;
//! - [`e1`], [`e2`]: exact engines for one and two initial excitations;
//! - [`concurrence`]: Wootters concurrence of two-qubit states;
//! - [`scaling`]: subspace dimensions, block-structure verification and
//!   stationary correlation graphs;
//! - [`report`]: the cross-validation suite wired into the CLI.

pub mod closure;
pub mod concurrence;
pub mod e1;
pub mod e2;
pub mod error;
pub mod hilbert;
pub mod linalg;
pub mod oracle;
pub mod report;
pub mod scaling;

pub use concurrence::{concurrence, concurrence_single_excitation_block, ConcurrenceValue, TwoQubitDensity};
pub use error::{Error, Result};
pub use hilbert::{
    apply_dissipator, build_basis_state, build_special_vector, collective_lowering,
    partial_trace_pair, DenseOperator, PureState, QubitIndexSet, SpecialVector, MAX_QUBITS,
};
pub use linalg::{CMatrix, CVector, C64};
pub use oracle::{evolve_full, steady_state, EvolutionConfig, Method, Trajectory};
