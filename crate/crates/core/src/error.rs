// Copyright 2026 The gateset Authors
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

pub type Result<T> = std::result::Result<T, GatesetError>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GatesetError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid dimension {0}: need d >= 2")]
    InvalidDimension(usize),

    #[error("matrix contains non-finite entries")]
    NonFinite,

    #[error("matrix is not unitary (deviation {deviation:.3e})")]
    NotUnitary { deviation: f64 },

    #[error("matrix is not special unitary (|det - 1| = {deviation:.3e})")]
    NotSpecialUnitary { deviation: f64 },

    #[error("matrix is not normal (commutator norm {deviation:.3e})")]
    NotNormal { deviation: f64 },

    #[error("matrix is not skew-hermitian (deviation {deviation:.3e})")]
    NotSkewHermitian { deviation: f64 },

    #[error("eigendecomposition did not converge")]
    NoConvergence,

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("subspace is not closed under the bracket (residual {residual:.3e})")]
    NotBracketClosed { residual: f64 },

    #[error("hypothesis failed: generated algebra {which} is not simple (dim {dim})")]
    NotSimple { which: &'static str, dim: usize },

    #[error("hypothesis failed: Y is not contained in the algebra generated by X")]
    NotMember,

    #[error("unknown gate {name:?} for d = {d}")]
    UnknownGate { name: String, d: usize },

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("i/o error: {0}")]
    Io(String),
}
