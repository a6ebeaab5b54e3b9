// Copyright 2026 The gateset Authors
// SPDX-License-Identifier: Apache-2.0

//! Problem files, input normalization and a library of named gates.
//!
//! A problem file is JSON:
//!
//! ```json
//! {
//!   "d": 2,
//!   "problem": "group_universality",
//!   "gates": ["H", "T"],
//!   "budgets": { "max_word_length": 16, "element_budget": 200000 },
//!   "tolerances": { "rank_tol": 1e-9, "dedup_tol": 1e-8, "commute_tol": 1e-8 }
//! }
//! ```
//!
//! Explicit matrices are arrays of rows of `[re, im]` pairs. Hamiltonians
//! may be given hermitian (`H`, used as `iH`) or skew-hermitian.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::fmt;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{GatesetError, Result};
use crate::group::SearchBudget;
use crate::matrix::{mat_exp, principal_phase, ComplexMatrix, Tolerances, UNITARY_TOL};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProblemKind {
    AlgebraUniversality,
    AlgebraMembership,
    GroupUniversality,
    SubgroupUniversality,
    GroupMembership,
}

impl fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ProblemKind::AlgebraUniversality => "algebra_universality",
            ProblemKind::AlgebraMembership => "algebra_membership",
            ProblemKind::GroupUniversality => "group_universality",
            ProblemKind::SubgroupUniversality => "subgroup_universality",
            ProblemKind::GroupMembership => "group_membership",
        };
        f.write_str(s)
    }
}

/// A gate as written in the file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GateSpec {
    Named(String),
    Explicit(ComplexMatrix),
}

/// A problem file exactly as written; [`ProblemFile::resolve`] turns it
/// into matrices the engines accept.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub d: usize,
    pub problem: ProblemKind,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub gates: Vec<GateSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub hamiltonians: Vec<ComplexMatrix>,
    #[serde(default, rename = "Y", skip_serializing_if = "Vec::is_empty")]
    pub y: Vec<ComplexMatrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budgets: Option<SearchBudget>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerances: Option<Tolerances>,
}

/// Validated, normalized inputs.
#[derive(Debug, Clone, PartialEq)]
pub struct ResolvedProblem {
    pub d: usize,
    pub kind: ProblemKind,
    /// Special unitary gates.
    pub gates: Vec<ComplexMatrix>,
    pub gate_labels: Vec<String>,
    /// Traceless skew-hermitian matrices.
    pub hamiltonians: Vec<ComplexMatrix>,
    pub y: Vec<ComplexMatrix>,
    pub budget: SearchBudget,
    pub tolerances: Tolerances,
    /// Human-readable record of every normalization applied.
    pub notices: Vec<String>,
}

fn missing(field: &str, kind: ProblemKind) -> GatesetError {
    GatesetError::Parse {
        location: format!("field `{field}`"),
        message: format!("must be non-empty for problem {kind}"),
    }
}

/// Reads and validates a problem file.
pub fn parse_problem(path: impl AsRef<Path>) -> Result<ProblemFile> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| GatesetError::Io(format!("{}: {e}", path.display())))?;
    parse_problem_str(&text)
}

/// Parses and validates problem text.
pub fn parse_problem_str(text: &str) -> Result<ProblemFile> {
    let file: ProblemFile = serde_json::from_str(text).map_err(|e| GatesetError::Parse {
        location: format!("line {} column {}", e.line(), e.column()),
        message: e.to_string(),
    })?;
    file.resolve(true)?;
    Ok(file)
}

impl ProblemFile {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("problem files always serialize")
    }

    /// Checks dimensions, resolves names, brings gates into SU(d) and
    /// Hamiltonians into su(d). With `normalize` off, any input needing a
    /// phase or trace correction is an error instead.
    pub fn resolve(&self, normalize: bool) -> Result<ResolvedProblem> {
        let d = self.d;
        if d < 2 {
            return Err(GatesetError::InvalidDimension(d));
        }
        let tolerances = self.tolerances.unwrap_or_default();
        tolerances.validate()?;
        let budget = self.budgets.unwrap_or_default();
        if budget.element_budget == 0 {
            return Err(GatesetError::InvalidParameter(
                "element_budget must be at least 1".to_string(),
            ));
        }
        let mut notices = Vec::new();

        let mut hamiltonians = Vec::with_capacity(self.hamiltonians.len());
        for (k, h) in self.hamiltonians.iter().enumerate() {
            hamiltonians.push(normalize_hamiltonian(
                h,
                d,
                normalize,
                &format!("hamiltonians[{k}]"),
                &mut notices,
            )?);
        }
        let mut y = Vec::with_capacity(self.y.len());
        for (k, h) in self.y.iter().enumerate() {
            y.push(normalize_hamiltonian(
                h,
                d,
                normalize,
                &format!("Y[{k}]"),
                &mut notices,
            )?);
        }

        let mut gates = Vec::new();
        let mut gate_labels = Vec::new();
        for (k, spec) in self.gates.iter().enumerate() {
            let (m, label) = match spec {
                GateSpec::Named(name) => (named_gate(name, d)?, name.clone()),
                GateSpec::Explicit(m) => (m.clone(), format!("gates[{k}]")),
            };
            check_dim(&m, d)?;
            m.require_unitary()?;
            let su = if m.is_special_unitary(UNITARY_TOL) {
                m
            } else if normalize {
                let out = special_unitarize(&m)?;
                notices.push(format!("{label}: global phase removed to make det = 1"));
                out
            } else {
                return Err(GatesetError::NotSpecialUnitary {
                    deviation: (m.determinant() - Complex64::new(1.0, 0.0)).norm(),
                });
            };
            gates.push(su);
            gate_labels.push(label);
        }
        let group_level = matches!(
            self.problem,
            ProblemKind::GroupUniversality
                | ProblemKind::SubgroupUniversality
                | ProblemKind::GroupMembership
        );
        if group_level && gates.is_empty() && !hamiltonians.is_empty() {
            for (k, x) in hamiltonians.iter().enumerate() {
                gates.push(mat_exp(x)?);
                gate_labels.push(format!("exp(hamiltonians[{k}])"));
            }
            notices.push("gates synthesized as exp(hamiltonians)".to_string());
        }

        match self.problem {
            ProblemKind::GroupUniversality if gates.is_empty() => {
                return Err(missing("gates` or `hamiltonians", self.problem))
            }
            ProblemKind::GroupUniversality => {}
            _ if hamiltonians.is_empty() => return Err(missing("hamiltonians", self.problem)),
            _ => {}
        }

        Ok(ResolvedProblem {
            d,
            kind: self.problem,
            gates,
            gate_labels,
            hamiltonians,
            y,
            budget,
            tolerances,
            notices,
        })
    }
}

fn check_dim(m: &ComplexMatrix, d: usize) -> Result<()> {
    if m.dim() != d {
        return Err(GatesetError::DimensionMismatch {
            expected: d,
            found: m.dim(),
        });
    }
    Ok(())
}

/// Skew-hermitian input is used as is, hermitian input `H` becomes `iH`.
/// The trace is removed (with a notice) when `normalize` is on.
fn normalize_hamiltonian(
    h: &ComplexMatrix,
    d: usize,
    normalize: bool,
    label: &str,
    notices: &mut Vec<String>,
) -> Result<ComplexMatrix> {
    check_dim(h, d)?;
    let scale = h.frobenius_norm().max(1.0);
    let skew = if h.is_skew_hermitian(UNITARY_TOL * scale) {
        h.clone()
    } else if h.is_hermitian(UNITARY_TOL * scale) {
        h.scale(Complex64::new(0.0, 1.0))
    } else {
        return Err(GatesetError::NotSkewHermitian {
            deviation: h.skew_hermitian_deviation(),
        });
    };
    let skew = (&skew - &skew.adjoint()).scale_real(0.5);
    if skew.trace().norm() > UNITARY_TOL * scale {
        if !normalize {
            return Err(GatesetError::InvalidParameter(format!(
                "{label} has nonzero trace {}",
                skew.trace()
            )));
        }
        notices.push(format!("{label}: trace part removed"));
    }
    Ok(skew.traceless_part())
}

/// `e^{-i phi/d} U` where `det U = e^{i phi}`: the projectively equivalent
/// special unitary.
pub fn special_unitarize(u: &ComplexMatrix) -> Result<ComplexMatrix> {
    u.require_unitary()?;
    let det = u.determinant();
    if (det - Complex64::new(1.0, 0.0)).norm() <= 1e-14 {
        return Ok(u.clone());
    }
    let phi = principal_phase(det);
    log::info!(
        "removing global phase {phi:.6} to bring a gate into SU({})",
        u.dim()
    );
    Ok(u.scale(Complex64::from_polar(1.0, -phi / u.dim() as f64)))
}

/// Standard gates with exact entries. Names are case-insensitive.
///
/// Qubit (`d = 2`): `I X Y Z H S T SDG TDG`. Two qubits (`d = 4`):
/// `CNOT` (alias `CX`), `CZ`, `SWAP`. Any `d`: `I`, `CLOCK`
/// (`diag(w^j)`), `SHIFT` (`|j> -> |j+1 mod d>`), `FOURIER`.
pub fn named_gate(name: &str, d: usize) -> Result<ComplexMatrix> {
    let unknown = || GatesetError::UnknownGate {
        name: name.to_string(),
        d,
    };
    if d < 2 {
        return Err(unknown());
    }
    let (o, z, i) = (
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(0.0, 1.0),
    );
    let r = Complex64::new(FRAC_1_SQRT_2, 0.0);
    let w = |k: usize| root_of_unity(k, d);
    let upper = name.to_ascii_uppercase();
    let entries: Vec<Complex64> = match (upper.as_str(), d) {
        ("I", _) => return Ok(ComplexMatrix::identity(d)),
        ("X", 2) => vec![z, o, o, z],
        ("Y", 2) => vec![z, -i, i, z],
        ("Z", 2) => vec![o, z, z, -o],
        ("H", 2) => vec![r, r, r, -r],
        ("S", 2) => vec![o, z, z, i],
        ("SDG", 2) => vec![o, z, z, -i],
        ("T", 2) => vec![o, z, z, Complex64::from_polar(1.0, PI / 4.0)],
        ("TDG", 2) => vec![o, z, z, Complex64::from_polar(1.0, -PI / 4.0)],
        ("CNOT" | "CX", 4) => permutation(4, &[0, 1, 3, 2]),
        ("SWAP", 4) => permutation(4, &[0, 2, 1, 3]),
        ("CZ", 4) => return Ok(ComplexMatrix::diagonal(&[o, o, o, -o])),
        ("CLOCK", _) => return Ok(ComplexMatrix::diagonal(&(0..d).map(w).collect::<Vec<_>>())),
        ("SHIFT", _) => permutation(d, &(0..d).map(|j| (j + d - 1) % d).collect::<Vec<_>>()),
        ("FOURIER", _) => {
            let norm = 1.0 / (d as f64).sqrt();
            (0..d)
                .flat_map(|j| (0..d).map(move |k| (j, k)))
                .map(|(j, k)| w(j * k) * norm)
                .collect()
        }
        _ => return Err(unknown()),
    };
    ComplexMatrix::from_row_major(d, &entries)
}

/// `exp(2 pi i k / d)`, exact at multiples of a quarter turn.
fn root_of_unity(k: usize, d: usize) -> Complex64 {
    let k = k % d;
    if (4 * k).is_multiple_of(d) {
        let quarter = [(1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0)];
        let (re, im) = quarter[4 * k / d];
        return Complex64::new(re, im);
    }
    Complex64::from_polar(1.0, 2.0 * PI * k as f64 / d as f64)
}

/// Row `r` has its one in column `cols[r]`.
fn permutation(d: usize, cols: &[usize]) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); d * d];
    for (r, &c) in cols.iter().enumerate() {
        out[r * d + c] = Complex64::new(1.0, 0.0);
    }
    out
}
