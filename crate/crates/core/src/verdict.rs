// Copyright 2026 The gateset Authors
// SPDX-License-Identifier: Apache-2.0

//! Answer and certificate types shared by the deciders.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Answer {
    Yes,
    No,
    Inconclusive,
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Answer::Yes => "Yes",
            Answer::No => "No",
            Answer::Inconclusive => "Inconclusive",
        };
        f.write_str(s)
    }
}

/// Two computed dimensions that a criterion requires to be equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimCheck {
    pub lhs_dim: usize,
    pub rhs_dim: usize,
    pub equal: bool,
}

impl DimCheck {
    pub fn new(lhs_dim: usize, rhs_dim: usize) -> Self {
        Self {
            lhs_dim,
            rhs_dim,
            equal: lhs_dim == rhs_dim,
        }
    }
}
