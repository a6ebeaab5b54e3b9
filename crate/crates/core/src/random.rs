// Copyright 2026 The gateset Authors
// SPDX-License-Identifier: Apache-2.0

//! Seeded random matrices for sampling verifiers and tests.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::matrix::ComplexMatrix;

pub type SeededRng = ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn ginibre<R: Rng + ?Sized>(rng: &mut R, d: usize) -> DMatrix<Complex64> {
    DMatrix::from_fn(d, d, |_, _| {
        Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
    })
}

/// Haar-distributed element of U(d) (QR of a Ginibre matrix with the
/// phases of `diag(R)` divided out).
pub fn haar_unitary<R: Rng + ?Sized>(rng: &mut R, d: usize) -> ComplexMatrix {
    let qr = ginibre(rng, d).qr();
    let (mut q, r) = qr.unpack();
    for j in 0..d {
        let rjj = r[(j, j)];
        let phase = if rjj.norm() > 0.0 {
            rjj / rjj.norm()
        } else {
            Complex64::new(1.0, 0.0)
        };
        for z in q.column_mut(j).iter_mut() {
            *z *= phase;
        }
    }
    ComplexMatrix::wrap(q)
}

/// Haar-distributed element of SU(d).
pub fn haar_special_unitary<R: Rng + ?Sized>(rng: &mut R, d: usize) -> ComplexMatrix {
    let u = haar_unitary(rng, d);
    let phase = u.determinant().arg();
    u.scale(Complex64::from_polar(1.0, -phase / d as f64))
}

/// Traceless skew-hermitian matrix with a Gaussian direction and Frobenius
/// norm `norm`.
pub fn random_traceless_skew_hermitian<R: Rng + ?Sized>(
    rng: &mut R,
    d: usize,
    norm: f64,
) -> ComplexMatrix {
    let g = ginibre(rng, d);
    let x = ComplexMatrix::wrap((&g - g.adjoint()) * Complex64::new(0.5, 0.0)).traceless_part();
    let n = x.frobenius_norm();
    x.scale_real(norm / n)
}

/// Standard normal vector of length `n`.
pub fn gaussian_vector<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<f64> {
    (0..n).map(|_| rng.sample(StandardNormal)).collect()
}
