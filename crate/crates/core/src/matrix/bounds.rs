// Copyright 2026 The gateset Authors
// SPDX-License-Identifier: Apache-2.0

//! Group commutator inequality for unitaries and the trace bound for the
//! principal logarithm of a special unitary.

use std::f64::consts::{PI, SQRT_2};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{frobenius_distance, principal_log, ComplexMatrix};
use crate::error::{GatesetError, Result};

/// Slack allowed on the right-hand side of the commutator inequality.
const BOUND_SLACK: f64 = 1e-12;

/// Relative margin for the strict hypothesis `||U - 1|| < 2 sqrt(d) sin(pi/d)`.
/// Values within this margin of the threshold count as equal, so the
/// tightness example `e^{2 pi i/d} I` is not accepted through rounding.
const STRICT_MARGIN: f64 = 1e-12;

/// Traces of the logarithm below this count as zero.
const TRACE_ZERO: f64 = 1e-8;

/// `g h g^{-1} h^{-1}` for unitary `g`, `h`.
pub fn group_commutator(g: &ComplexMatrix, h: &ComplexMatrix) -> Result<ComplexMatrix> {
    g.require_same_dim(h)?;
    g.require_unitary()?;
    h.require_unitary()?;
    Ok(&(&(g * h) * &g.adjoint()) * &h.adjoint())
}

/// Checks `||[A,B] - 1|| <= sqrt(2) ||A - 1|| ||B - 1||` for unitaries.
pub fn commutator_bound_holds(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<bool> {
    let comm = group_commutator(a, b)?;
    let id = ComplexMatrix::identity(a.dim());
    let lhs = frobenius_distance(&comm, &id)?;
    let rhs = SQRT_2 * frobenius_distance(a, &id)? * frobenius_distance(b, &id)?;
    Ok(lhs <= rhs + BOUND_SLACK)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LogTraceVerdict {
    /// Hypotheses hold and the principal logarithm is traceless.
    InSuD,
    /// Hypotheses hold but the trace is nonzero. Never expected.
    BoundViolatedPreconditions,
    /// At least one hypothesis fails.
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LogTraceReport {
    pub verdict: LogTraceVerdict,
    pub d: usize,
    pub r: f64,
    /// `||U - 1||`.
    pub distance_to_identity: f64,
    /// `2 sqrt(d) sin(pi/d)`.
    pub sine_threshold: f64,
    /// `ceil(40 / r^2)`.
    pub min_dimension: usize,
    pub dimension_ok: bool,
    pub radius_ok: bool,
    pub sine_ok: bool,
    pub trace_of_log: Complex64,
}

pub(crate) fn min_dimension_for_radius(r: f64) -> usize {
    (40.0 / (r * r)).ceil() as usize
}

/// Evaluates the hypotheses `d >= ceil(40/r^2)`, `||U - 1|| < r` and
/// `||U - 1|| < 2 sqrt(d) sin(pi/d)`; when all hold the principal logarithm
/// of `U` must be traceless.
pub fn log_trace_bound_report(u: &ComplexMatrix, r: f64) -> Result<LogTraceReport> {
    if !(r > 0.0 && r <= 1.0) {
        return Err(GatesetError::InvalidParameter(format!(
            "r must lie in (0, 1], got {r}"
        )));
    }
    u.require_special_unitary()?;
    let d = u.dim();
    let distance = frobenius_distance(u, &ComplexMatrix::identity(d))?;
    let sine_threshold = 2.0 * (d as f64).sqrt() * (PI / d as f64).sin();
    let min_dimension = min_dimension_for_radius(r);
    let dimension_ok = d >= min_dimension;
    let radius_ok = distance < r;
    let sine_ok = distance < sine_threshold * (1.0 - STRICT_MARGIN);
    let trace_of_log = principal_log(u)?.trace();
    let verdict = if dimension_ok && radius_ok && sine_ok {
        if trace_of_log.norm() < TRACE_ZERO {
            LogTraceVerdict::InSuD
        } else {
            LogTraceVerdict::BoundViolatedPreconditions
        }
    } else {
        LogTraceVerdict::NotApplicable
    };
    Ok(LogTraceReport {
        verdict,
        d,
        r,
        distance_to_identity: distance,
        sine_threshold,
        min_dimension,
        dimension_ok,
        radius_ok,
        sine_ok,
        trace_of_log,
    })
}

pub fn log_trace_bound_verdict(u: &ComplexMatrix, r: f64) -> Result<LogTraceVerdict> {
    Ok(log_trace_bound_report(u, r)?.verdict)
}
