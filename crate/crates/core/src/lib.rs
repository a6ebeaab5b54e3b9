// Copyright 2026 The gateset Authors
// SPDX-License-Identifier: Apache-2.0

//! Numerical decision procedures for universality and membership of
//! quantum gate sets, at the Lie algebra and Lie group level.
//!
//! The algebra-level questions (is `<X> = su(d)`, is `Y ⊆ <X>`) reduce to
//! dimensions of commutants and centralizers and are always decided. The
//! group-level questions add a bounded search over words in the gates for
//! an element close to the center of SU(d); they answer `Yes`, `No` or
//! `Inconclusive` together with a certificate.

pub mod algebra;
pub mod appendix;
pub mod error;
pub mod group;
pub mod io;
pub mod matrix;
pub mod random;
pub mod su_structure;
pub mod subspace;
pub mod verdict;

#[cfg(test)]
mod testutil;

pub use algebra::{AlgebraEngine, AlgebraVerdict, ProjectorVariant};
pub use error::{GatesetError, Result};
pub use group::{GroupEngine, GroupVerdict, SearchBudget, WordClosure};
pub use matrix::{ComplexMatrix, Tolerances};
pub use su_structure::{AlgebraElement, LinearOperator, SuStructure};
pub use subspace::RealSubspace;
pub use verdict::{Answer, DimCheck};
