// Copyright 2026 The gateset Authors
// SPDX-License-Identifier: Apache-2.0

//! The ball of radius `1/sqrt(2)` around the center of SU(d) and the
//! algebra elements attached to its points.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{GatesetError, Result};
use crate::matrix::{column_span, frob, ComplexMatrix};
use crate::su_structure::SuStructure;
use crate::subspace::RealSubspace;

use super::closure::WordClosure;

/// Radius of the ball around the center.
pub const BALL_RADIUS: f64 = FRAC_1_SQRT_2;

/// Distance from a group element to the nearest central element `w^k I`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CenterDistance {
    pub distance: f64,
    /// `k` in `w^k I`, `w = exp(2 pi i / d)`.
    pub k: usize,
}

/// Nearest central element, computed without the error-prone expansion
/// `||g - cI||^2 = 2d - 2 Re(conj(c) tr g)`: that expansion only picks `k`.
pub(crate) fn center_distance_unchecked(g: &ComplexMatrix) -> CenterDistance {
    let d = g.dim();
    let tr = g.trace();
    let k = (0..d)
        .max_by(|&a, &b| {
            let score =
                |k: usize| (Complex64::from_polar(1.0, -2.0 * PI * k as f64 / d as f64) * tr).re;
            score(a).total_cmp(&score(b))
        })
        .unwrap_or(0);
    let w = Complex64::from_polar(1.0, 2.0 * PI * k as f64 / d as f64);
    let mut diff = g.as_dmatrix().clone();
    for i in 0..d {
        diff[(i, i)] -= w;
    }
    CenterDistance {
        distance: frob(&diff),
        k,
    }
}

/// `min_k ||g - w^k I||` for special unitary `g`.
pub fn center_distance(g: &ComplexMatrix) -> Result<CenterDistance> {
    g.require_special_unitary()?;
    Ok(center_distance_unchecked(g))
}

/// Strictly inside the ball of radius `1/sqrt(2)` around some central
/// element.
pub fn is_in_ball(g: &ComplexMatrix) -> Result<bool> {
    Ok(center_distance(g)?.distance < BALL_RADIUS)
}

/// The traceless skew-hermitian and hermitian-times-`-i` parts of `g`:
/// `x = (g - g^†)/2 - tr(.)I/d`, `y = (g + g^†)/(2i) - tr(.)I/d`.
pub fn xy_matrices(g: &ComplexMatrix) -> (ComplexMatrix, ComplexMatrix) {
    let adj = g.adjoint();
    let x = (g - &adj).scale_real(0.5).traceless_part();
    let y = (g + &adj).scale(Complex64::new(0.0, -0.5)).traceless_part();
    (x, y)
}

/// [`xy_matrices`] in the coordinates of `s`.
pub fn xy_parts(s: &SuStructure, g: &ComplexMatrix) -> Result<(DVector<f64>, DVector<f64>)> {
    if g.dim() != s.d() {
        return Err(GatesetError::DimensionMismatch {
            expected: s.d(),
            found: g.dim(),
        });
    }
    let (x, y) = xy_matrices(g);
    Ok((s.to_coords(&x)?.to_vector(), s.to_coords(&y)?.to_vector()))
}

/// Span of `x(g)` and `y(g)` over the enumerated elements inside the ball.
pub fn space_a(s: &SuStructure, closure: &WordClosure, rank_tol: f64) -> Result<RealSubspace> {
    let mut cols = Vec::new();
    for g in closure.elements() {
        if center_distance_unchecked(g).distance < BALL_RADIUS {
            let (x, y) = xy_parts(s, g)?;
            cols.push(x);
            cols.push(y);
        }
    }
    if cols.is_empty() {
        return Ok(RealSubspace::zero(s.n()));
    }
    Ok(column_span(&DMatrix::from_columns(&cols), rank_tol, 1.0))
}
