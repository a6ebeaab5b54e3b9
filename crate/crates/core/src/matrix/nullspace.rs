// Copyright 2026 The gateset Authors
// SPDX-License-Identifier: Apache-2.0

//! Rank-revealing SVD helpers. Every rank decision is relative to the
//! largest singular value.

use nalgebra::{DMatrix, DVector};

use super::Tolerances;
use crate::subspace::RealSubspace;

/// Coordinates within this of the largest magnitude count as tied when
/// fixing the sign of a basis vector.
const SIGN_TIE: f64 = 1e-12;

/// Flips `v` so that its largest-magnitude coordinate (first one on ties) is
/// positive.
pub(crate) fn canonicalize_sign(v: &mut DVector<f64>) {
    let max = v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    if max == 0.0 {
        return;
    }
    if let Some(lead) = v.iter().find(|x| x.abs() >= max - SIGN_TIE) {
        if *lead < 0.0 {
            v.neg_mut();
        }
    }
}

/// Singular values (nonincreasing) and the requested factor of a thin or
/// full SVD, computed by faer. nalgebra's SVD returns wrong singular
/// vectors for some rank-deficient inputs with repeated singular values.
fn svd(m: &DMatrix<f64>, full: bool) -> (Vec<f64>, faer::Mat<f64>, faer::Mat<f64>) {
    let a = faer::Mat::<f64>::from_fn(m.nrows(), m.ncols(), |i, j| m[(i, j)]);
    let svd = if full { a.svd() } else { a.thin_svd() }.expect("SVD converges");
    let k = m.nrows().min(m.ncols());
    let sigma = (0..k).map(|i| svd.S()[i]).collect();
    (sigma, svd.U().to_owned(), svd.V().to_owned())
}

/// Largest singular value.
pub(crate) fn spectral_norm(m: &DMatrix<f64>) -> f64 {
    if m.is_empty() {
        return 0.0;
    }
    let a = faer::Mat::<f64>::from_fn(m.nrows(), m.ncols(), |i, j| m[(i, j)]);
    let sigma = a.singular_values().expect("SVD converges");
    sigma.iter().fold(0.0f64, |acc, s| acc.max(*s))
}

fn column_of(m: &faer::Mat<f64>, j: usize) -> DVector<f64> {
    let mut v = DVector::from_fn(m.nrows(), |i, _| m[(i, j)]);
    canonicalize_sign(&mut v);
    v
}

fn from_columns(ambient: usize, cols: Vec<DVector<f64>>) -> RealSubspace {
    let basis = if cols.is_empty() {
        DMatrix::zeros(ambient, 0)
    } else {
        DMatrix::from_columns(&cols)
    };
    RealSubspace::from_orthonormal_unchecked(basis)
}

/// Orthonormal basis of `{v : M v = 0}`; singular values below
/// `rank_tol * sigma_max` are treated as zero.
pub fn real_null_space(m: &DMatrix<f64>, tol: &Tolerances) -> RealSubspace {
    real_null_space_with_reference(m, tol.rank_tol, 0.0)
}

/// Like [`real_null_space`], but the cutoff is `rank_tol * max(sigma_max,
/// reference)`. Callers whose operators have a known natural scale pass it
/// as `reference` so that a numerically zero matrix is not mistaken for a
/// full-rank one.
pub fn real_null_space_with_reference(
    m: &DMatrix<f64>,
    rank_tol: f64,
    reference: f64,
) -> RealSubspace {
    let cols = m.ncols();
    if cols == 0 {
        return RealSubspace::zero(0);
    }
    if m.nrows() == 0 {
        return RealSubspace::full(cols);
    }
    let (sigma, _, v) = svd(m, true);
    let sigma_max = sigma.first().copied().unwrap_or(0.0);
    let cutoff = rank_tol * sigma_max.max(reference);
    // columns past min(rows, cols) have no singular value and are null
    let null: Vec<DVector<f64>> = (0..cols)
        .filter(|&j| sigma.get(j).is_none_or(|s| *s <= cutoff))
        .map(|j| column_of(&v, j))
        .collect();
    from_columns(cols, null)
}

/// Orthonormal basis of the column space of `vectors` (one vector per
/// column), cutoff `rank_tol * max(sigma_max, reference)`.
pub fn column_span(vectors: &DMatrix<f64>, rank_tol: f64, reference: f64) -> RealSubspace {
    let ambient = vectors.nrows();
    if vectors.ncols() == 0 || ambient == 0 {
        return RealSubspace::zero(ambient);
    }
    let (sigma, u, _) = svd(vectors, false);
    let sigma_max = sigma.first().copied().unwrap_or(0.0);
    let cutoff = rank_tol * sigma_max.max(reference);
    let range: Vec<DVector<f64>> = (0..sigma.len())
        .filter(|&j| sigma[j] > cutoff)
        .map(|j| column_of(&u, j))
        .collect();
    from_columns(ambient, range)
}
