// Copyright 2026 The gateset Authors
// SPDX-License-Identifier: Apache-2.0

//! Exponential and principal logarithm of normal matrices through a unitary
//! eigendecomposition.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::{frob, ComplexMatrix};
use crate::error::{GatesetError, Result};

/// Relative deviation from normality (or skew-hermiticity) accepted by the
/// spectral routines.
const NORMAL_TOL: f64 = 1e-8;

/// Eigenphases closer than this to `-pi` are moved to `+pi`.
const BRANCH_EPS: f64 = 1e-12;

const SCHUR_EPS: f64 = 1e-15;
const SCHUR_MAX_ITER: usize = 100_000;

/// Unitary eigendecomposition `A = Q diag(lambda) Q^dagger` of a normal matrix.
fn normal_eigen(a: &DMatrix<Complex64>) -> Result<(DMatrix<Complex64>, Vec<Complex64>)> {
    let scale = frob(a).max(1.0);
    let schur = a
        .clone()
        .try_schur(SCHUR_EPS, SCHUR_MAX_ITER)
        .ok_or(GatesetError::NoConvergence)?;
    let (q, t) = schur.unpack();
    let n = t.nrows();
    let mut off = 0.0;
    for j in 0..n {
        for i in 0..j {
            off += t[(i, j)].norm_sqr();
        }
    }
    // A normal matrix has a diagonal Schur form.
    let deviation = off.sqrt();
    if deviation > NORMAL_TOL * scale {
        return Err(GatesetError::NotNormal { deviation });
    }
    let eig = (0..n).map(|i| t[(i, i)]).collect();
    Ok((q, eig))
}

fn recompose(q: &DMatrix<Complex64>, values: &[Complex64]) -> DMatrix<Complex64> {
    let mut scaled = q.clone();
    for (j, v) in values.iter().enumerate() {
        for z in scaled.column_mut(j).iter_mut() {
            *z *= v;
        }
    }
    scaled * q.adjoint()
}

/// Matrix exponential of a normal matrix.
///
/// Skew-hermitian input goes through the hermitian eigensolver on `-iX`,
/// which keeps the result unitary to machine precision; other normal input
/// uses a complex Schur form.
pub fn mat_exp(x: &ComplexMatrix) -> Result<ComplexMatrix> {
    let a = x.as_dmatrix();
    let n = x.dim();
    let scale = x.frobenius_norm().max(1.0);
    if x.skew_hermitian_deviation() <= NORMAL_TOL * scale {
        let minus_i = Complex64::new(0.0, -1.0);
        let h = a * minus_i;
        let h = (&h + h.adjoint()) * Complex64::new(0.5, 0.0);
        let eig = h.symmetric_eigen();
        let phases: Vec<Complex64> = eig
            .eigenvalues
            .iter()
            .map(|&l| Complex64::from_polar(1.0, l))
            .collect();
        return Ok(ComplexMatrix::wrap(recompose(&eig.eigenvectors, &phases)));
    }
    let deviation = x.normality_deviation();
    if deviation > NORMAL_TOL * scale * scale {
        return Err(GatesetError::NotNormal { deviation });
    }
    let (q, eig) = normal_eigen(a)?;
    let values: Vec<Complex64> = eig.iter().map(|z| z.exp()).collect();
    debug_assert_eq!(values.len(), n);
    Ok(ComplexMatrix::wrap(recompose(&q, &values)))
}

/// Eigenphase in `(-pi, pi]`, with `-1` mapped to `+pi`.
pub(crate) fn principal_phase(z: Complex64) -> f64 {
    let theta = z.arg();
    if theta <= -PI + BRANCH_EPS {
        PI
    } else {
        theta
    }
}

/// Principal logarithm of a unitary matrix: the skew-hermitian `X` with
/// eigenvalues `i theta`, `theta` in `(-pi, pi]`, and `exp(X) = U`.
pub fn principal_log(u: &ComplexMatrix) -> Result<ComplexMatrix> {
    u.require_unitary()?;
    let (q, eig) = normal_eigen(u.as_dmatrix())?;
    let values: Vec<Complex64> = eig
        .iter()
        .map(|&z| Complex64::new(0.0, principal_phase(z)))
        .collect();
    let log = recompose(&q, &values);
    // Re-symmetrize: the exact logarithm is skew-hermitian.
    let log = (&log - log.adjoint()) * Complex64::new(0.5, 0.0);
    Ok(ComplexMatrix::wrap(log))
}
