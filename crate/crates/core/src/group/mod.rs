// Copyright 2026 The gateset Authors
// SPDX-License-Identifier: Apache-2.0

//! Decisions about the closed subgroup generated by finitely many gates.
//!
//! Everything here combines a finite linear-algebra check (commutants of
//! the adjoint action) with a bounded search for a single group element
//! near the center of SU(d). The search can prove a positive answer or, if
//! the enumeration closes, a negative one; otherwise the answer is
//! inconclusive and the budget usage says how far it looked.

mod ball;
mod closure;
mod deciders;

pub use ball::{
    center_distance, is_in_ball, space_a, xy_matrices, xy_parts, CenterDistance, BALL_RADIUS,
};
pub use closure::{BudgetReport, Round, SearchBudget, WordClosure};
pub use deciders::{
    DiagramCase, DiagramDims, DiagramKind, Edge, GroupEngine, GroupVerdict, Witness, WitnessReason,
};
