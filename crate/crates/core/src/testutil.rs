// Copyright 2026 The gateset Authors
// SPDX-License-Identifier: Apache-2.0

use num_complex::Complex64;

use crate::matrix::ComplexMatrix;
use crate::su_structure::{AlgebraElement, SuStructure};

pub(crate) fn pauli(name: char) -> ComplexMatrix {
    let (o, z, i) = (
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(0.0, 1.0),
    );
    let entries = match name {
        'I' => [o, z, z, o],
        'X' => [z, o, o, z],
        'Y' => [z, -i, i, z],
        'Z' => [o, z, z, -o],
        _ => panic!("unknown Pauli {name}"),
    };
    ComplexMatrix::from_row_major(2, &entries).unwrap()
}

/// `t * i * P` for a tensor product `P` of Paulis, in coordinates.
pub(crate) fn ih(s: &SuStructure, word: &str, t: f64) -> AlgebraElement {
    let m = word
        .chars()
        .map(pauli)
        .reduce(|a, b| a.kron(&b))
        .unwrap()
        .scale(Complex64::new(0.0, t));
    s.to_coords(&m).unwrap()
}
