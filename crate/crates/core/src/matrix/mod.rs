// Copyright 2026 The gateset Authors
// SPDX-License-Identifier: Apache-2.0

//! Dense complex matrices and the numerical primitives every decider sits on.
//!
//! [`ComplexMatrix`] is a thin wrapper around a square `nalgebra` matrix that
//! enforces finite entries. The submodules add the spectral functions
//! (exponential and principal logarithm of normal matrices), tolerance
//! controlled real null spaces, and the unitary commutator inequalities.

mod bounds;
mod functions;
pub(crate) mod nullspace;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{GatesetError, Result};

pub use bounds::{
    commutator_bound_holds, group_commutator, log_trace_bound_report, log_trace_bound_verdict,
    LogTraceReport, LogTraceVerdict,
};
pub(crate) use functions::principal_phase;
pub use functions::{mat_exp, principal_log};
pub use nullspace::{column_span, real_null_space, real_null_space_with_reference};

/// Deviation allowed when a precondition asks for a unitary or special
/// unitary argument.
pub const UNITARY_TOL: f64 = 1e-8;

/// Numerical thresholds shared by every engine.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Tolerances {
    /// Relative singular value cutoff: `sigma_i < rank_tol * sigma_max` is zero.
    pub rank_tol: f64,
    /// Frobenius distance below which two group elements are the same.
    pub dedup_tol: f64,
    /// Threshold for "commutes" tests.
    pub commute_tol: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            rank_tol: 1e-9,
            dedup_tol: 1e-8,
            commute_tol: 1e-8,
        }
    }
}

impl Tolerances {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("rank_tol", self.rank_tol),
            ("dedup_tol", self.dedup_tol),
            ("commute_tol", self.commute_tol),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return Err(GatesetError::InvalidParameter(format!(
                    "{name} must be strictly positive, got {v}"
                )));
            }
        }
        // The ball test compares against 1/sqrt(2); deduplication must not
        // merge elements at that scale.
        if self.dedup_tol >= std::f64::consts::FRAC_1_SQRT_2 {
            return Err(GatesetError::InvalidParameter(format!(
                "dedup_tol must be below 1/sqrt(2), got {}",
                self.dedup_tol
            )));
        }
        Ok(())
    }
}

/// Square complex matrix with finite entries.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix(DMatrix<Complex64>);

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ComplexMatrix{}", self.0)
    }
}

impl ComplexMatrix {
    /// Builds a `dim x dim` matrix from row-major entries.
    pub fn from_row_major(dim: usize, entries: &[Complex64]) -> Result<Self> {
        if dim == 0 {
            return Err(GatesetError::InvalidDimension(0));
        }
        if entries.len() != dim * dim {
            return Err(GatesetError::DimensionMismatch {
                expected: dim * dim,
                found: entries.len(),
            });
        }
        Self::from_dmatrix(DMatrix::from_row_slice(dim, dim, entries))
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let dim = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != dim) {
            return Err(GatesetError::DimensionMismatch {
                expected: dim,
                found: bad.len(),
            });
        }
        let flat: Vec<Complex64> = rows.iter().flatten().copied().collect();
        Self::from_row_major(dim, &flat)
    }

    pub fn from_dmatrix(m: DMatrix<Complex64>) -> Result<Self> {
        if m.nrows() != m.ncols() {
            return Err(GatesetError::DimensionMismatch {
                expected: m.nrows(),
                found: m.ncols(),
            });
        }
        if m.iter().any(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(GatesetError::NonFinite);
        }
        Ok(Self(m))
    }

    /// Wraps a matrix produced by arithmetic on valid matrices.
    pub(crate) fn wrap(m: DMatrix<Complex64>) -> Self {
        debug_assert_eq!(m.nrows(), m.ncols());
        Self(m)
    }

    pub fn identity(dim: usize) -> Self {
        Self(DMatrix::identity(dim, dim))
    }

    pub fn zeros(dim: usize) -> Self {
        Self(DMatrix::zeros(dim, dim))
    }

    pub fn scalar(dim: usize, c: Complex64) -> Self {
        Self(DMatrix::from_diagonal_element(dim, dim, c))
    }

    pub fn diagonal(entries: &[Complex64]) -> Self {
        let n = entries.len();
        let mut m = DMatrix::zeros(n, n);
        for (i, z) in entries.iter().enumerate() {
            m[(i, i)] = *z;
        }
        Self(m)
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn as_dmatrix(&self) -> &DMatrix<Complex64> {
        &self.0
    }

    pub fn into_dmatrix(self) -> DMatrix<Complex64> {
        self.0
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.0[(row, col)]
    }

    /// Row-major copy of the entries.
    pub fn to_rows(&self) -> Vec<Vec<Complex64>> {
        (0..self.dim())
            .map(|i| (0..self.dim()).map(|j| self.0[(i, j)]).collect())
            .collect()
    }

    pub fn adjoint(&self) -> Self {
        Self(self.0.adjoint())
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self(&self.0 * c)
    }

    pub fn scale_real(&self, c: f64) -> Self {
        self.scale(Complex64::new(c, 0.0))
    }

    pub fn trace(&self) -> Complex64 {
        self.0.trace()
    }

    pub fn determinant(&self) -> Complex64 {
        self.0.clone().determinant()
    }

    /// `sqrt(tr(A^dagger A))`.
    pub fn frobenius_norm(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Ring commutator `AB - BA`.
    pub fn commutator(&self, other: &Self) -> Self {
        Self(&self.0 * &other.0 - &other.0 * &self.0)
    }

    /// Kronecker product `A ⊗ B`.
    pub fn kron(&self, other: &Self) -> Self {
        Self(self.0.kronecker(&other.0))
    }

    /// `g X g^dagger`; equals `g X g^{-1}` for unitary `g`.
    pub fn conjugate_by(&self, g: &Self) -> Self {
        Self(&g.0 * &self.0 * g.0.adjoint())
    }

    /// Removes the trace part, `X - tr(X) I / d`.
    pub fn traceless_part(&self) -> Self {
        let d = self.dim() as f64;
        let t = self.trace() / d;
        Self(&self.0 - DMatrix::from_diagonal_element(self.dim(), self.dim(), t))
    }

    pub fn unitarity_deviation(&self) -> f64 {
        let n = self.dim();
        (self.0.adjoint() * &self.0 - DMatrix::<Complex64>::identity(n, n))
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.unitarity_deviation() <= tol
    }

    pub fn is_special_unitary(&self, tol: f64) -> bool {
        self.is_unitary(tol) && (self.determinant() - Complex64::new(1.0, 0.0)).norm() <= tol
    }

    /// `||X + X^dagger||`, absolute.
    pub fn skew_hermitian_deviation(&self) -> f64 {
        frob(&(&self.0 + self.0.adjoint()))
    }

    pub fn is_skew_hermitian(&self, tol: f64) -> bool {
        self.skew_hermitian_deviation() <= tol
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        frob(&(&self.0 - self.0.adjoint())) <= tol
    }

    pub fn is_traceless(&self, tol: f64) -> bool {
        self.trace().norm() <= tol
    }

    pub fn normality_deviation(&self) -> f64 {
        let a = &self.0;
        frob(&(a * a.adjoint() - a.adjoint() * a))
    }

    pub(crate) fn require_unitary(&self) -> Result<()> {
        let deviation = self.unitarity_deviation();
        if deviation > UNITARY_TOL {
            return Err(GatesetError::NotUnitary { deviation });
        }
        Ok(())
    }

    pub(crate) fn require_special_unitary(&self) -> Result<()> {
        self.require_unitary()?;
        let deviation = (self.determinant() - Complex64::new(1.0, 0.0)).norm();
        if deviation > UNITARY_TOL {
            return Err(GatesetError::NotSpecialUnitary { deviation });
        }
        Ok(())
    }

    pub(crate) fn require_same_dim(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(GatesetError::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(())
    }
}

pub(crate) fn frob(m: &DMatrix<Complex64>) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix(&self.0 * &rhs.0)
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix(&self.0 + &rhs.0)
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix(&self.0 - &rhs.0)
    }
}

impl Neg for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn neg(self) -> ComplexMatrix {
        ComplexMatrix(-&self.0)
    }
}

/// Serialized as a list of rows, each entry a `[re, im]` pair.
impl Serialize for ComplexMatrix {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<[f64; 2]>> = self
            .to_rows()
            .into_iter()
            .map(|r| r.into_iter().map(|z| [z.re, z.im]).collect())
            .collect();
        rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ComplexMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<[f64; 2]>>::deserialize(deserializer)?;
        let rows: Vec<Vec<Complex64>> = rows
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|[re, im]| Complex64::new(re, im))
                    .collect()
            })
            .collect();
        Self::from_rows(&rows).map_err(serde::de::Error::custom)
    }
}

/// `||A - B||` in the Frobenius norm.
pub fn frobenius_distance(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<f64> {
    a.require_same_dim(b)?;
    Ok(frob(&(&a.0 - &b.0)))
}
