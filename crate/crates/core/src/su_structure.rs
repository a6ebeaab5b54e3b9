// Copyright 2026 The gateset Authors
// SPDX-License-Identifier: Apache-2.0

//! Realification of su(d).
//!
//! The basis is the generalized Gell-Mann family multiplied by `i/sqrt(2)`,
//! which is orthonormal for `<x, y> = -tr(xy)`. On su(d) this inner product
//! is a positive multiple of minus the Killing form (`K = -2d <.,.>`), so
//! orthogonal complements and projectors agree with the Killing-form ones.
//! Every operator acting on the algebra is a dense real `n x n` matrix in
//! this basis, `n = d^2 - 1`.

use std::f64::consts::FRAC_1_SQRT_2;
use std::ops::Mul;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{GatesetError, Result};
use crate::matrix::{mat_exp, ComplexMatrix};

/// Real coordinates of an element of su(d) in the [`SuStructure`] basis.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlgebraElement {
    coords: Vec<f64>,
}

impl AlgebraElement {
    pub fn new(coords: Vec<f64>) -> Self {
        Self { coords }
    }

    pub fn zero(n: usize) -> Self {
        Self::new(vec![0.0; n])
    }

    pub fn from_vector(v: &DVector<f64>) -> Self {
        Self::new(v.iter().copied().collect())
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn to_vector(&self) -> DVector<f64> {
        DVector::from_column_slice(&self.coords)
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn norm(&self) -> f64 {
        self.coords.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    pub fn scale(&self, t: f64) -> Self {
        Self::new(self.coords.iter().map(|c| c * t).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

/// Real linear operator on the coordinate space of su(d).
#[derive(Debug, Clone, PartialEq)]
pub struct LinearOperator {
    mat: DMatrix<f64>,
}

impl LinearOperator {
    pub fn new(mat: DMatrix<f64>) -> Self {
        Self { mat }
    }

    pub fn identity(n: usize) -> Self {
        Self::new(DMatrix::identity(n, n))
    }

    pub fn mat(&self) -> &DMatrix<f64> {
        &self.mat
    }

    pub fn into_mat(self) -> DMatrix<f64> {
        self.mat
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn apply(&self, x: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::from_vector(&(&self.mat * x.to_vector()))
    }

    /// `AB - BA`.
    pub fn commutator(&self, other: &Self) -> Self {
        Self::new(&self.mat * &other.mat - &other.mat * &self.mat)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.mat.norm()
    }

    pub fn distance(&self, other: &Self) -> f64 {
        (&self.mat - &other.mat).norm()
    }

    /// Matrix exponential of a real antisymmetric operator (the only kind
    /// the adjoint representation produces), through its unitary
    /// eigendecomposition.
    pub fn exp_antisymmetric(&self) -> Result<Self> {
        let complex = self.mat.map(|v| Complex64::new(v, 0.0));
        let e = mat_exp(&ComplexMatrix::from_dmatrix(complex)?)?;
        Ok(Self::new(e.as_dmatrix().map(|z| z.re)))
    }
}

impl Mul for &LinearOperator {
    type Output = LinearOperator;
    fn mul(self, rhs: &LinearOperator) -> LinearOperator {
        LinearOperator::new(&self.mat * &rhs.mat)
    }
}

/// Fixed orthonormal basis of su(d) with its structure constants.
#[derive(Debug, Clone)]
pub struct SuStructure {
    d: usize,
    basis: Vec<ComplexMatrix>,
    /// `ad_basis[i]` is the matrix of `ad_{b_i}`; entry `(k, j)` is the
    /// structure constant `f_{ijk}` with `[b_i, b_j] = sum_k f_{ijk} b_k`.
    ad_basis: Vec<DMatrix<f64>>,
}

fn gell_mann_basis(d: usize) -> Vec<ComplexMatrix> {
    let mut out = Vec::with_capacity(d * d - 1);
    let i_over_sqrt2 = Complex64::new(0.0, FRAC_1_SQRT_2);
    let one = Complex64::new(1.0, 0.0);
    let eye = Complex64::new(0.0, 1.0);
    for j in 0..d {
        for k in (j + 1)..d {
            let mut m = ComplexMatrix::zeros(d).into_dmatrix();
            m[(j, k)] = one;
            m[(k, j)] = one;
            out.push(ComplexMatrix::wrap(m * i_over_sqrt2));
        }
    }
    for j in 0..d {
        for k in (j + 1)..d {
            let mut m = ComplexMatrix::zeros(d).into_dmatrix();
            m[(j, k)] = -eye;
            m[(k, j)] = eye;
            out.push(ComplexMatrix::wrap(m * i_over_sqrt2));
        }
    }
    for l in 1..d {
        let norm = (2.0 / (l * (l + 1)) as f64).sqrt();
        let mut m = ComplexMatrix::zeros(d).into_dmatrix();
        for j in 0..l {
            m[(j, j)] = Complex64::new(norm, 0.0);
        }
        m[(l, l)] = Complex64::new(-(l as f64) * norm, 0.0);
        out.push(ComplexMatrix::wrap(m * i_over_sqrt2));
    }
    out
}

/// `-Re tr(a b)` without forming the product.
fn neg_trace_product(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> f64 {
    let n = a.nrows();
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (a[(i, j)], b[(j, i)]);
            acc += x.re * y.re - x.im * y.im;
        }
    }
    -acc
}

impl SuStructure {
    pub fn new(d: usize) -> Result<Self> {
        if d < 2 {
            return Err(GatesetError::InvalidDimension(d));
        }
        let basis = gell_mann_basis(d);
        let mut s = Self {
            d,
            basis,
            ad_basis: Vec::new(),
        };
        let n = s.n();
        let ad_basis = (0..n)
            .map(|i| {
                let bi = &s.basis[i];
                let mut m = DMatrix::zeros(n, n);
                for j in 0..n {
                    let c = bi.commutator(&s.basis[j]);
                    m.set_column(j, &s.coords_of(&c));
                }
                m
            })
            .collect();
        s.ad_basis = ad_basis;
        Ok(s)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Algebra dimension `d^2 - 1`.
    pub fn n(&self) -> usize {
        self.d * self.d - 1
    }

    pub fn basis(&self) -> &[ComplexMatrix] {
        &self.basis
    }

    pub fn basis_element(&self, i: usize) -> AlgebraElement {
        let mut c = vec![0.0; self.n()];
        c[i] = 1.0;
        AlgebraElement::new(c)
    }

    pub fn basis_elements(&self) -> Vec<AlgebraElement> {
        (0..self.n()).map(|i| self.basis_element(i)).collect()
    }

    fn coords_of(&self, m: &ComplexMatrix) -> DVector<f64> {
        DVector::from_iterator(
            self.n(),
            self.basis
                .iter()
                .map(|b| neg_trace_product(b.as_dmatrix(), m.as_dmatrix())),
        )
    }

    /// Coordinates `<b_j, m>`. Components of `m` outside su(d) (a trace or a
    /// hermitian part) are discarded.
    pub fn to_coords(&self, m: &ComplexMatrix) -> Result<AlgebraElement> {
        if m.dim() != self.d {
            return Err(GatesetError::DimensionMismatch {
                expected: self.d,
                found: m.dim(),
            });
        }
        Ok(AlgebraElement::from_vector(&self.coords_of(m)))
    }

    pub fn from_coords(&self, x: &AlgebraElement) -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(self.d).into_dmatrix();
        for (c, b) in x.coords().iter().zip(&self.basis) {
            if *c != 0.0 {
                m += b.as_dmatrix() * Complex64::new(*c, 0.0);
            }
        }
        ComplexMatrix::wrap(m)
    }

    /// `-tr(xy)` computed on the matrices.
    pub fn inner_product(&self, x: &AlgebraElement, y: &AlgebraElement) -> f64 {
        neg_trace_product(
            self.from_coords(x).as_dmatrix(),
            self.from_coords(y).as_dmatrix(),
        )
    }

    /// Lie bracket in coordinates.
    pub fn bracket(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::from_vector(&(self.ad_dmatrix(x) * y.to_vector()))
    }

    pub(crate) fn ad_dmatrix(&self, x: &AlgebraElement) -> DMatrix<f64> {
        let n = self.n();
        let mut m = DMatrix::zeros(n, n);
        for (c, adb) in x.coords().iter().zip(&self.ad_basis) {
            if *c != 0.0 {
                m += adb * *c;
            }
        }
        m
    }

    /// `ad_x = [x, .]`; antisymmetric in the orthonormal basis.
    pub fn ad_matrix(&self, x: &AlgebraElement) -> LinearOperator {
        LinearOperator::new(self.ad_dmatrix(x))
    }

    /// `Ad_g = g(.)g^{-1}`; orthogonal for unitary `g`.
    #[allow(non_snake_case)]
    pub fn Ad_matrix(&self, g: &ComplexMatrix) -> Result<LinearOperator> {
        if g.dim() != self.d {
            return Err(GatesetError::DimensionMismatch {
                expected: self.d,
                found: g.dim(),
            });
        }
        g.require_unitary()?;
        Ok(self.adjoint_action_unchecked(g))
    }

    pub(crate) fn adjoint_action_unchecked(&self, g: &ComplexMatrix) -> LinearOperator {
        let n = self.n();
        let mut m = DMatrix::zeros(n, n);
        for (j, b) in self.basis.iter().enumerate() {
            m.set_column(j, &self.coords_of(&b.conjugate_by(g)));
        }
        LinearOperator::new(m)
    }

    /// Killing form `tr(ad_x ad_y)`.
    pub fn killing_form(&self, x: &AlgebraElement, y: &AlgebraElement) -> f64 {
        (self.ad_dmatrix(x) * self.ad_dmatrix(y)).trace()
    }

    /// `exp(x)` as a special unitary matrix.
    pub fn exp(&self, x: &AlgebraElement) -> Result<ComplexMatrix> {
        mat_exp(&self.from_coords(x))
    }
}
