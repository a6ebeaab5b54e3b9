// Copyright 2026 The gateset Authors
// SPDX-License-Identifier: Apache-2.0

//! Real subspaces carried by an orthonormal basis.

use nalgebra::{DMatrix, DVector};

use crate::matrix::nullspace::spectral_norm;
use crate::matrix::{column_span, real_null_space_with_reference};

/// Orthonormal spanning set of a real subspace of `R^ambient_dim`, stored as
/// the columns of an `ambient_dim x dim` matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct RealSubspace {
    basis: DMatrix<f64>,
}

impl RealSubspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            basis: DMatrix::zeros(ambient_dim, 0),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self {
            basis: DMatrix::identity(ambient_dim, ambient_dim),
        }
    }

    pub(crate) fn from_orthonormal_unchecked(basis: DMatrix<f64>) -> Self {
        Self { basis }
    }

    /// Orthonormalized span of the given vectors (columns).
    pub fn span_of(vectors: &DMatrix<f64>, rank_tol: f64) -> Self {
        column_span(vectors, rank_tol, 0.0)
    }

    pub fn dim(&self) -> usize {
        self.basis.ncols()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &DMatrix<f64> {
        &self.basis
    }

    pub fn vectors(&self) -> impl Iterator<Item = DVector<f64>> + '_ {
        self.basis.column_iter().map(|c| c.into_owned())
    }

    /// `||Q^T Q - I||`.
    pub fn gram_deviation(&self) -> f64 {
        let k = self.dim();
        (self.basis.transpose() * &self.basis - DMatrix::<f64>::identity(k, k)).norm()
    }

    /// Orthogonal projector `Q Q^T`.
    pub fn projector(&self) -> DMatrix<f64> {
        &self.basis * self.basis.transpose()
    }

    /// `||v - Q Q^T v||`.
    pub fn residual(&self, v: &DVector<f64>) -> f64 {
        let coeffs = self.basis.transpose() * v;
        (v - &self.basis * coeffs).norm()
    }

    /// Membership up to `tol` relative to `max(1, ||v||)`.
    pub fn contains(&self, v: &DVector<f64>, tol: f64) -> bool {
        self.residual(v) <= tol * v.norm().max(1.0)
    }

    pub fn is_subspace_of(&self, other: &Self, tol: f64) -> bool {
        self.vectors().all(|v| other.contains(&v, tol))
    }

    /// Sine of the largest principal angle (spectral norm of the projector
    /// difference); 1 when the dimensions differ.
    pub fn distance(&self, other: &Self) -> f64 {
        if self.dim() != other.dim() || self.ambient_dim() != other.ambient_dim() {
            return 1.0;
        }
        if self.dim() == 0 {
            return 0.0;
        }
        spectral_norm(&(self.projector() - other.projector()))
    }

    pub fn sum(&self, other: &Self, rank_tol: f64) -> Self {
        let mut cols: Vec<DVector<f64>> = self.vectors().collect();
        cols.extend(other.vectors());
        if cols.is_empty() {
            return Self::zero(self.ambient_dim());
        }
        column_span(&DMatrix::from_columns(&cols), rank_tol, 1.0)
    }

    pub fn orthogonal_complement(&self, rank_tol: f64) -> Self {
        if self.dim() == 0 {
            return Self::full(self.ambient_dim());
        }
        real_null_space_with_reference(&self.basis.transpose(), rank_tol, 1.0)
    }

    pub fn intersection(&self, other: &Self, rank_tol: f64) -> Self {
        let perp = self
            .orthogonal_complement(rank_tol)
            .sum(&other.orthogonal_complement(rank_tol), rank_tol);
        perp.orthogonal_complement(rank_tol)
    }

    /// Coordinates of `v` in this basis, `Q^T v`.
    pub fn coordinates(&self, v: &DVector<f64>) -> DVector<f64> {
        self.basis.transpose() * v
    }
}
