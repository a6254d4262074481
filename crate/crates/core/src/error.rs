// Copyright 2026 commonbath contributors
// SPDX-License-Identifier: Apache-2.0

//! Error type shared by all simulator modules.

use thiserror::Error;

/// Errors produced by state construction, evolution and analysis routines.
#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on the inputs was violated (bad index, wrong
    /// dimension, invalid pair class, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The request is structurally valid but exceeds what the dense
    /// full-space representation supports (e.g. too many qubits).
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// A numerical method failed its own quality control (trace drift,
    /// quadrature error, step-size instability).
    #[error("numerical failure: {0}")]
    Numerical(String),

    /// An iterative method ran out of budget before reaching its target.
    #[error("convergence failure: {0}")]
    Convergence(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn capacity(msg: impl Into<String>) -> Self {
        Error::Capacity(msg.into())
    }

    pub(crate) fn numerical(msg: impl Into<String>) -> Self {
        Error::Numerical(msg.into())
    }
}
