// Copyright 2026 The gateset Authors
// SPDX-License-Identifier: Apache-2.0

//! Sampling checks of the two matrix inequalities the group-level
//! criteria depend on.

use std::f64::consts::{PI, SQRT_2};

use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{GatesetError, Result};
use crate::matrix::{
    frobenius_distance, group_commutator, log_trace_bound_report, mat_exp, ComplexMatrix,
    LogTraceReport, LogTraceVerdict,
};
use crate::random::{haar_unitary, random_traceless_skew_hermitian, seeded_rng};

/// Dimensions sampled for the commutator inequality.
pub const COMMUTATOR_DIMS: [usize; 3] = [2, 3, 5];
/// Smallest dimension used for the logarithm trace bound.
pub const LOG_TRACE_DIM: usize = 41;
/// Cap on the number of near-identity elements (each needs a Schur
/// decomposition at `d >= 41`).
pub const MAX_LOG_SAMPLES: usize = 100;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CommutatorCheck {
    pub d: usize,
    pub samples: usize,
    pub passed: usize,
    /// Largest `||[A,B] - 1|| / (sqrt(2) ||A - 1|| ||B - 1||)` seen.
    pub max_ratio: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LogTraceCheck {
    pub d: usize,
    pub r: f64,
    pub samples: usize,
    /// Samples classified `InSuD`.
    pub passed: usize,
    pub max_abs_trace: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TightnessCheck {
    pub report: LogTraceReport,
    /// `2 sqrt(d) sin(pi/d)`, computed from the closed form.
    pub expected_distance: f64,
    /// Classified `NotApplicable`, distance matches the closed form within
    /// 1e-10 and `|tr log U| = 2 pi` within 1e-8.
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AppendixReport {
    pub seed: u64,
    pub samples: usize,
    pub commutator: Vec<CommutatorCheck>,
    pub log_trace: LogTraceCheck,
    /// Absent when no samples were requested.
    pub tightness: Option<TightnessCheck>,
    pub all_passed: bool,
}

/// Runs the commutator inequality on `samples` Haar-random unitary pairs
/// for each `d` in [`COMMUTATOR_DIMS`], the logarithm trace bound on
/// `min(samples, 100)` near-identity special unitaries, and the tightness
/// example `e^{2 pi i/d} I`. The dimension for the trace bound is
/// `max(41, ceil(40/r^2))`.
pub fn verify_appendix(seed: u64, samples: usize, r: f64) -> Result<AppendixReport> {
    if !(r > 0.0 && r <= 1.0) {
        return Err(GatesetError::InvalidParameter(format!(
            "r must lie in (0, 1], got {r}"
        )));
    }
    let mut rng = seeded_rng(seed);
    let mut commutator = Vec::new();
    for d in COMMUTATOR_DIMS {
        let id = ComplexMatrix::identity(d);
        let mut check = CommutatorCheck {
            d,
            samples,
            passed: 0,
            max_ratio: 0.0,
        };
        for _ in 0..samples {
            let a = haar_unitary(&mut rng, d);
            let b = haar_unitary(&mut rng, d);
            let lhs = frobenius_distance(&group_commutator(&a, &b)?, &id)?;
            let rhs = SQRT_2 * frobenius_distance(&a, &id)? * frobenius_distance(&b, &id)?;
            if lhs <= rhs + 1e-12 {
                check.passed += 1;
            }
            if rhs > 0.0 {
                check.max_ratio = check.max_ratio.max(lhs / rhs);
            }
        }
        commutator.push(check);
    }

    let d = LOG_TRACE_DIM.max((40.0 / (r * r)).ceil() as usize);
    let threshold = 2.0 * (d as f64).sqrt() * (PI / d as f64).sin();
    let log_samples = samples.min(MAX_LOG_SAMPLES);
    let mut log_trace = LogTraceCheck {
        d,
        r,
        samples: log_samples,
        passed: 0,
        max_abs_trace: 0.0,
    };
    for _ in 0..log_samples {
        // ||exp(X) - 1|| <= ||X||, so this stays inside both radii
        let norm = rng.random_range(0.05..0.9) * r.min(threshold);
        let u = mat_exp(&random_traceless_skew_hermitian(&mut rng, d, norm))?;
        let rep = log_trace_bound_report(&u, r)?;
        if rep.verdict == LogTraceVerdict::InSuD {
            log_trace.passed += 1;
        }
        log_trace.max_abs_trace = log_trace.max_abs_trace.max(rep.trace_of_log.norm());
    }

    let tightness = if samples == 0 {
        None
    } else {
        let w = Complex64::from_polar(1.0, 2.0 * PI / d as f64);
        let report = log_trace_bound_report(&ComplexMatrix::scalar(d, w), r)?;
        let expected_distance = threshold;
        let passed = report.verdict == LogTraceVerdict::NotApplicable
            && (report.distance_to_identity - expected_distance).abs() < 1e-10
            && (report.trace_of_log.norm() - 2.0 * PI).abs() < 1e-8;
        Some(TightnessCheck {
            report,
            expected_distance,
            passed,
        })
    };

    let all_passed = commutator.iter().all(|c| c.passed == c.samples)
        && log_trace.passed == log_trace.samples
        && tightness.as_ref().is_none_or(|t| t.passed);
    Ok(AppendixReport {
        seed,
        samples,
        commutator,
        log_trace,
        tightness,
        all_passed,
    })
}
