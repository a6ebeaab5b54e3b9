// Copyright 2026 The gateset Authors
// SPDX-License-Identifier: Apache-2.0

//! Breadth-first enumeration of the words in a finite gate set.

use std::collections::HashMap;
use std::ops::Range;

use nalgebra::DVector;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{GatesetError, Result};
use crate::matrix::ComplexMatrix;
use crate::random::gaussian_vector;

/// Exploration limits for word enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct SearchBudget {
    pub max_word_length: usize,
    pub element_budget: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self {
            max_word_length: 16,
            element_budget: 200_000,
        }
    }
}

/// How much of the budget a search used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BudgetReport {
    pub max_word_length: usize,
    pub element_budget: usize,
    pub word_length_reached: usize,
    pub elements: usize,
    pub is_finite: bool,
    pub budget_exhausted: bool,
}

/// Result of one breadth-first round.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Round {
    /// New elements were found; their indices.
    Grew(Range<usize>),
    /// Nothing new: the set is closed under the gates, hence a finite group.
    Closed,
    /// The element budget ran out part way; the indices that did fit.
    Exhausted(Range<usize>),
}

const PROJECTIONS: usize = 3;
const PROJECTION_SEED: u64 = 0x0067_6174_6573_6574;

/// Grid hash over three fixed projections of the real coordinates. Two
/// matrices closer than the cell size in Frobenius norm differ by less than
/// one cell in each projection, so a lookup scans the 27 neighbouring cells.
struct DedupIndex {
    directions: Vec<DVector<f64>>,
    cell: f64,
    cells: HashMap<[i64; PROJECTIONS], Vec<u32>>,
}

impl DedupIndex {
    fn new(d: usize, cell: f64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(PROJECTION_SEED);
        let directions = (0..PROJECTIONS)
            .map(|_| {
                let v = DVector::from_vec(gaussian_vector(&mut rng, 2 * d * d));
                let n = v.norm();
                v / n
            })
            .collect();
        Self {
            directions,
            cell,
            cells: HashMap::new(),
        }
    }

    fn key(&self, m: &ComplexMatrix) -> [i64; PROJECTIONS] {
        let mut key = [0i64; PROJECTIONS];
        for (k, dir) in key.iter_mut().zip(&self.directions) {
            let p: f64 = m
                .as_dmatrix()
                .iter()
                .enumerate()
                .map(|(i, z)| dir[2 * i] * z.re + dir[2 * i + 1] * z.im)
                .sum();
            *k = (p / self.cell).floor() as i64;
        }
        key
    }

    fn find(
        &self,
        elements: &[ComplexMatrix],
        m: &ComplexMatrix,
        key: &[i64; PROJECTIONS],
    ) -> Option<usize> {
        for dx in -1..=1 {
            for dy in -1..=1 {
                for dz in -1..=1 {
                    let k = [key[0] + dx, key[1] + dy, key[2] + dz];
                    if let Some(ids) = self.cells.get(&k) {
                        for &id in ids {
                            let e = &elements[id as usize];
                            if crate::matrix::frob(&(e.as_dmatrix() - m.as_dmatrix())) < self.cell {
                                return Some(id as usize);
                            }
                        }
                    }
                }
            }
        }
        None
    }

    fn insert(&mut self, key: [i64; PROJECTIONS], id: usize) {
        self.cells.entry(key).or_default().push(id as u32);
    }
}

/// The distinct elements of `<S>` reached so far, in breadth-first order
/// (by word length, then by the order in which parents were found, then by
/// gate index). Element 0 is the identity.
pub struct WordClosure {
    gates: Vec<ComplexMatrix>,
    elements: Vec<ComplexMatrix>,
    parent: Vec<(u32, u32)>,
    length: Vec<u16>,
    index: DedupIndex,
    frontier: Range<usize>,
    word_length: usize,
    budget: SearchBudget,
    closed: bool,
    exhausted: bool,
}

impl WordClosure {
    /// Starts an enumeration; every gate must be special unitary of the
    /// same dimension. An empty gate set generates the trivial group.
    pub fn new(
        d: usize,
        gates: &[ComplexMatrix],
        budget: SearchBudget,
        dedup_tol: f64,
    ) -> Result<Self> {
        if d == 0 {
            return Err(GatesetError::InvalidDimension(d));
        }
        if !(dedup_tol.is_finite() && dedup_tol > 0.0) {
            return Err(GatesetError::InvalidParameter(format!(
                "dedup_tol must be strictly positive, got {dedup_tol}"
            )));
        }
        if budget.element_budget == 0 {
            return Err(GatesetError::InvalidParameter(
                "element_budget must be at least 1".to_string(),
            ));
        }
        for g in gates {
            if g.dim() != d {
                return Err(GatesetError::DimensionMismatch {
                    expected: d,
                    found: g.dim(),
                });
            }
            g.require_special_unitary()?;
        }
        let id = ComplexMatrix::identity(d);
        let mut index = DedupIndex::new(d, dedup_tol);
        index.insert(index.key(&id), 0);
        Ok(Self {
            gates: gates.to_vec(),
            elements: vec![id],
            parent: vec![(u32::MAX, u32::MAX)],
            length: vec![0],
            index,
            frontier: 0..1,
            word_length: 0,
            budget,
            closed: false,
            exhausted: false,
        })
    }

    /// Enumerates up to the word-length budget, then checks once more
    /// (without storing anything) whether the last layer already closes.
    pub fn explore(
        d: usize,
        gates: &[ComplexMatrix],
        budget: SearchBudget,
        dedup_tol: f64,
    ) -> Result<Self> {
        let mut c = Self::new(d, gates, budget, dedup_tol)?;
        while c.can_grow() {
            c.step();
        }
        c.confirm_closure();
        Ok(c)
    }

    pub fn can_grow(&self) -> bool {
        !self.closed && !self.exhausted && self.word_length < self.budget.max_word_length
    }

    fn products(&self) -> Vec<(u32, u32, ComplexMatrix, [i64; PROJECTIONS], bool)> {
        let ng = self.gates.len();
        let start = self.frontier.start;
        (0..self.frontier.len() * ng)
            .into_par_iter()
            .map(|k| {
                let (p, g) = (start + k / ng, k % ng);
                let m = &self.elements[p] * &self.gates[g];
                let key = self.index.key(&m);
                let known = self.index.find(&self.elements, &m, &key).is_some();
                (p as u32, g as u32, m, key, known)
            })
            .collect()
    }

    /// Multiplies the last layer by every gate on the right and keeps the
    /// products not seen before.
    pub fn step(&mut self) -> Round {
        if self.closed {
            return Round::Closed;
        }
        if self.exhausted {
            return Round::Exhausted(self.elements.len()..self.elements.len());
        }
        let first_new = self.elements.len();
        for (p, g, m, key, known) in self.products() {
            if known || self.index.find(&self.elements, &m, &key).is_some() {
                continue;
            }
            if self.elements.len() >= self.budget.element_budget {
                self.exhausted = true;
                break;
            }
            self.index.insert(key, self.elements.len());
            self.elements.push(m);
            self.parent.push((p, g));
            self.length.push(self.word_length as u16 + 1);
        }
        let new = first_new..self.elements.len();
        if new.is_empty() && !self.exhausted {
            self.closed = true;
            return Round::Closed;
        }
        self.word_length += 1;
        self.frontier = new.clone();
        if self.exhausted {
            Round::Exhausted(new)
        } else {
            Round::Grew(new)
        }
    }

    /// Marks the set closed if no product of the last layer with a gate is
    /// new. Does not store anything.
    pub fn confirm_closure(&mut self) {
        if self.closed || self.exhausted {
            return;
        }
        if self.products().iter().all(|t| t.4) {
            self.closed = true;
        }
    }

    pub fn d(&self) -> usize {
        self.elements[0].dim()
    }

    pub fn gates(&self) -> &[ComplexMatrix] {
        &self.gates
    }

    pub fn elements(&self) -> &[ComplexMatrix] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn word_length(&self) -> usize {
        self.word_length
    }

    /// True once the enumeration has provably produced the whole group.
    pub fn is_finite(&self) -> bool {
        self.closed
    }

    pub fn budget_exhausted(&self) -> bool {
        self.exhausted
    }

    /// Gate indices whose left-to-right product is element `i`.
    pub fn word(&self, i: usize) -> Vec<usize> {
        let mut w = Vec::with_capacity(self.length[i] as usize);
        let mut cur = i;
        while cur != 0 {
            let (p, g) = self.parent[cur];
            w.push(g as usize);
            cur = p as usize;
        }
        w.reverse();
        w
    }

    /// Index of a stored element within `dedup_tol` of `m`.
    pub fn find(&self, m: &ComplexMatrix) -> Option<usize> {
        if m.dim() != self.d() {
            return None;
        }
        self.index.find(&self.elements, m, &self.index.key(m))
    }

    pub fn report(&self) -> BudgetReport {
        BudgetReport {
            max_word_length: self.budget.max_word_length,
            element_budget: self.budget.element_budget,
            word_length_reached: self.word_length,
            elements: self.elements.len(),
            is_finite: self.closed,
            budget_exhausted: self.exhausted,
        }
    }
}
