// Copyright 2026 The gateset Authors
// SPDX-License-Identifier: Apache-2.0

use serde::{Deserialize, Serialize};

use crate::algebra::{refine_commutant, AlgebraEngine, ZERO_NORM};
use crate::error::{GatesetError, Result};
use crate::matrix::{ComplexMatrix, Tolerances};
use crate::su_structure::{AlgebraElement, LinearOperator, SuStructure};
use crate::subspace::RealSubspace;
use crate::verdict::{Answer, DimCheck};

use super::ball::{center_distance_unchecked, BALL_RADIUS};
use super::closure::{BudgetReport, Round, SearchBudget, WordClosure};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum WitnessReason {
    /// An element inside the ball that is not central.
    BallNonCenter,
    /// An element inside the ball that does not commute with the given
    /// algebra elements.
    BallNonCommuting,
}

/// A group element found by the search, with the word producing it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub element: ComplexMatrix,
    /// Gate indices, multiplied left to right.
    pub word: Vec<usize>,
    pub reason: WitnessReason,
    pub center_distance: f64,
    /// `max ||g x g^{-1} - x||` over the unit-normalized algebra elements,
    /// for [`WitnessReason::BallNonCommuting`].
    pub commutator_deviation: Option<f64>,
}

/// One edge of the membership diagram. Every edge is an inclusion of
/// commutants, so equality of dimensions decides it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Edge {
    Equal,
    Proper,
}

impl Edge {
    fn of(a: usize, b: usize) -> Self {
        if a == b {
            Edge::Equal
        } else {
            Edge::Proper
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramDims {
    /// `dim C(Ad_{S1})`
    pub ad_s1: usize,
    /// `dim C(Ad_{S2})`
    pub ad_s2: usize,
    /// `dim C(ad_{X1})`
    pub ad_x1: usize,
    /// `dim C(ad_{X2})`
    pub ad_x2: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DiagramKind {
    /// `C(Ad_{S1}) != C(Ad_{S2})`: the groups differ.
    NecessaryConditionFails,
    /// All four commutants equal.
    DecidableEqual,
    /// Only the left and bottom edges proper.
    DecidableStrict,
    /// Left and right proper, bottom equal.
    UndecidableSidesProper,
    /// Right and bottom proper, left equal.
    UndecidableRightBottomProper,
    /// Left, right and bottom proper.
    UndecidableAllProper,
    /// Dimensions contradicting the inclusions; only possible through
    /// numerical trouble.
    Inconsistent,
}

/// Inclusion pattern of `C(Ad_{S1}) ⊇ C(Ad_{S2})` (top),
/// `C(Ad_{S_i}) ⊇ C(ad_{X_i})` (left, right) and
/// `C(ad_{X1}) ⊇ C(ad_{X2})` (bottom).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramCase {
    pub top: Edge,
    pub left: Edge,
    pub right: Edge,
    pub bottom: Edge,
    pub dims: DiagramDims,
    pub kind: DiagramKind,
    pub decidable: bool,
}

impl DiagramKind {
    /// The pattern named by the four edges alone.
    pub fn from_edges(top: Edge, left: Edge, right: Edge, bottom: Edge) -> Self {
        use Edge::*;
        match (top, left, right, bottom) {
            (Proper, ..) => DiagramKind::NecessaryConditionFails,
            (Equal, Equal, Equal, Equal) => DiagramKind::DecidableEqual,
            (Equal, Proper, Equal, Proper) => DiagramKind::DecidableStrict,
            (Equal, Proper, Proper, Equal) => DiagramKind::UndecidableSidesProper,
            (Equal, Equal, Proper, Proper) => DiagramKind::UndecidableRightBottomProper,
            (Equal, Proper, Proper, Proper) => DiagramKind::UndecidableAllProper,
            _ => DiagramKind::Inconsistent,
        }
    }

    pub fn is_decidable(self) -> bool {
        matches!(
            self,
            DiagramKind::DecidableEqual | DiagramKind::DecidableStrict
        )
    }
}

impl DiagramCase {
    /// Classifies computed dimensions. Dimensions that break one of the
    /// four inclusions are reported as [`DiagramKind::Inconsistent`]. Since
    /// `C(ad_X) ⊆ C(Ad_{exp X})`, this also rules out the strict decidable
    /// pattern: it would need `dim C(ad_{X1}) > dim C(Ad_{S1})`.
    pub fn from_dims(dims: DiagramDims) -> Self {
        let top = Edge::of(dims.ad_s1, dims.ad_s2);
        let left = Edge::of(dims.ad_s1, dims.ad_x1);
        let right = Edge::of(dims.ad_s2, dims.ad_x2);
        let bottom = Edge::of(dims.ad_x1, dims.ad_x2);
        let ordered = dims.ad_s1 >= dims.ad_s2
            && dims.ad_s1 >= dims.ad_x1
            && dims.ad_s2 >= dims.ad_x2
            && dims.ad_x1 >= dims.ad_x2;
        let kind = if ordered {
            DiagramKind::from_edges(top, left, right, bottom)
        } else {
            DiagramKind::Inconsistent
        };
        Self {
            top,
            left,
            right,
            bottom,
            dims,
            kind,
            decidable: kind.is_decidable(),
        }
    }
}

/// Certificate for a group-level decision.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupVerdict {
    pub answer: Answer,
    /// The commutant comparison the decision rests on.
    pub commutant: DimCheck,
    pub witness: Option<Witness>,
    /// `None` when the answer was settled before any enumeration.
    pub budget: Option<BudgetReport>,
    pub diagram: Option<DiagramCase>,
    /// Dimension of the Lie algebra generated by the Hamiltonians, when
    /// the question involves one.
    pub generated_dim: Option<usize>,
}

/// Group deciders for one `su(d)`, tolerances and search budget.
pub struct GroupEngine<'a> {
    alg: AlgebraEngine<'a>,
    budget: SearchBudget,
}

fn unit_matrices(s: &SuStructure, xs: &[AlgebraElement]) -> Vec<ComplexMatrix> {
    xs.iter()
        .filter(|x| x.norm() > ZERO_NORM)
        .map(|x| s.from_coords(&x.scale(1.0 / x.norm())))
        .collect()
}

impl<'a> GroupEngine<'a> {
    pub fn new(s: &'a SuStructure, tol: Tolerances, budget: SearchBudget) -> Result<Self> {
        if budget.element_budget == 0 {
            return Err(GatesetError::InvalidParameter(
                "element_budget must be at least 1".to_string(),
            ));
        }
        Ok(Self {
            alg: AlgebraEngine::new(s, tol)?,
            budget,
        })
    }

    pub fn algebra(&self) -> &AlgebraEngine<'a> {
        &self.alg
    }

    fn s(&self) -> &SuStructure {
        self.alg.structure()
    }

    fn tol(&self) -> &Tolerances {
        self.alg.tolerances()
    }

    fn check_gates(&self, gates: &[ComplexMatrix]) -> Result<()> {
        for g in gates {
            if g.dim() != self.s().d() {
                return Err(GatesetError::DimensionMismatch {
                    expected: self.s().d(),
                    found: g.dim(),
                });
            }
            g.require_special_unitary()?;
        }
        Ok(())
    }

    fn ad_ops(&self, gates: &[ComplexMatrix]) -> Vec<LinearOperator> {
        gates
            .iter()
            .map(|g| self.s().adjoint_action_unchecked(g))
            .collect()
    }

    /// `C(Ad_S)` in `End(k)`, optionally refining an already known
    /// commutant of a subset of `S`.
    pub fn group_commutant(&self, gates: &[ComplexMatrix]) -> Result<RealSubspace> {
        self.check_gates(gates)?;
        let n = self.s().n();
        Ok(refine_commutant(
            &RealSubspace::full(n * n),
            &self.ad_ops(gates),
            n,
            self.tol().rank_tol,
        ))
    }

    fn exp_all(&self, xs: &[AlgebraElement]) -> Result<Vec<ComplexMatrix>> {
        xs.iter().map(|x| self.s().exp(x)).collect()
    }

    /// Breadth-first search for the first element passing `test`.
    fn search<F>(&self, gates: &[ComplexMatrix], test: F) -> Result<(Option<Witness>, BudgetReport)>
    where
        F: Fn(&ComplexMatrix) -> Option<(WitnessReason, f64, Option<f64>)>,
    {
        let d = self.s().d();
        let mut closure = WordClosure::new(d, gates, self.budget, self.tol().dedup_tol)?;
        while closure.can_grow() {
            let new = match closure.step() {
                Round::Grew(r) | Round::Exhausted(r) => r,
                Round::Closed => break,
            };
            for i in new {
                let g = &closure.elements()[i];
                if let Some((reason, center_distance, commutator_deviation)) = test(g) {
                    let witness = Witness {
                        element: g.clone(),
                        word: closure.word(i),
                        reason,
                        center_distance,
                        commutator_deviation,
                    };
                    return Ok((Some(witness), closure.report()));
                }
            }
        }
        closure.confirm_closure();
        Ok((None, closure.report()))
    }

    fn non_center_test(
        &self,
    ) -> impl Fn(&ComplexMatrix) -> Option<(WitnessReason, f64, Option<f64>)> {
        let dedup = self.tol().dedup_tol;
        move |g| {
            let dist = center_distance_unchecked(g).distance;
            (dist < BALL_RADIUS && dist >= dedup).then_some((
                WitnessReason::BallNonCenter,
                dist,
                None,
            ))
        }
    }

    fn non_commuting_test(
        &self,
        xs: &[AlgebraElement],
    ) -> impl Fn(&ComplexMatrix) -> Option<(WitnessReason, f64, Option<f64>)> {
        let units = unit_matrices(self.s(), xs);
        let tol = self.tol().commute_tol;
        move |g| {
            let dist = center_distance_unchecked(g).distance;
            if dist >= BALL_RADIUS {
                return None;
            }
            let dev = units
                .iter()
                .map(|x| (&x.conjugate_by(g) - x).frobenius_norm())
                .fold(0.0f64, f64::max);
            (dev >= tol).then_some((WitnessReason::BallNonCommuting, dist, Some(dev)))
        }
    }

    /// Is `<S>` dense in SU(d)?
    pub fn decide_group_universality(&self, gates: &[ComplexMatrix]) -> Result<GroupVerdict> {
        if gates.is_empty() {
            return Err(GatesetError::EmptyInput("gates"));
        }
        let c = self.group_commutant(gates)?;
        let commutant = DimCheck::new(c.dim(), self.alg.full_commutant().dim());
        if !commutant.equal {
            return Ok(GroupVerdict {
                answer: Answer::No,
                commutant,
                witness: None,
                budget: None,
                diagram: None,
                generated_dim: None,
            });
        }
        let (witness, budget) = self.search(gates, self.non_center_test())?;
        let answer = match (&witness, budget.is_finite) {
            (Some(_), _) => Answer::Yes,
            (None, true) => Answer::No,
            (None, false) => Answer::Inconclusive,
        };
        Ok(GroupVerdict {
            answer,
            commutant,
            witness,
            budget: Some(budget),
            diagram: None,
            generated_dim: None,
        })
    }

    fn require_simple(&self, g: &RealSubspace, which: &'static str) -> Result<()> {
        if self.alg.is_simple(g)? {
            Ok(())
        } else {
            Err(GatesetError::NotSimple {
                which,
                dim: g.dim(),
            })
        }
    }

    /// Is the closure of `<exp(Y)>` the connected subgroup with Lie
    /// algebra `<X>`? Requires `Y ⊆ <X>` and `<X>` simple.
    pub fn decide_subgroup_universality(
        &self,
        xs: &[AlgebraElement],
        ys: &[AlgebraElement],
    ) -> Result<GroupVerdict> {
        let g = self.alg.generate_subalgebra(xs)?;
        let member_tol = self.tol().rank_tol.sqrt();
        for y in ys {
            if y.len() != self.s().n() {
                return Err(GatesetError::DimensionMismatch {
                    expected: self.s().n(),
                    found: y.len(),
                });
            }
            let n = y.norm();
            if n > ZERO_NORM && !g.contains(&(y.to_vector() / n), member_tol) {
                return Err(GatesetError::NotMember);
            }
        }
        self.require_simple(&g, "generated algebra")?;
        let gates = self.exp_all(ys)?;
        let c_group = self.group_commutant(&gates)?;
        let c_alg = self.alg.ad_commutant(xs)?;
        let commutant = DimCheck::new(c_group.dim(), c_alg.dim());
        let generated_dim = Some(g.dim());
        if !commutant.equal {
            return Ok(GroupVerdict {
                answer: Answer::No,
                commutant,
                witness: None,
                budget: None,
                diagram: None,
                generated_dim,
            });
        }
        let (witness, budget) = self.search(&gates, self.non_commuting_test(xs))?;
        let answer = match (&witness, budget.is_finite) {
            (Some(_), _) => Answer::Yes,
            (None, true) => Answer::No,
            (None, false) => Answer::Inconclusive,
        };
        Ok(GroupVerdict {
            answer,
            commutant,
            witness,
            budget: Some(budget),
            diagram: None,
            generated_dim,
        })
    }

    /// Commutant pattern for `S1 = exp(X1)` and `S2 = exp(X1 ∪ Y)`.
    pub fn classify_diagram(
        &self,
        x1: &[AlgebraElement],
        ys: &[AlgebraElement],
    ) -> Result<DiagramCase> {
        if x1.is_empty() {
            return Err(GatesetError::EmptyInput("hamiltonians"));
        }
        let n = self.s().n();
        let rank_tol = self.tol().rank_tol;
        let s1 = self.exp_all(x1)?;
        let t = self.exp_all(ys)?;
        let c_s1 = self.group_commutant(&s1)?;
        let c_s2 = refine_commutant(&c_s1, &self.ad_ops(&t), n, rank_tol);
        let c_x1 = self.alg.ad_commutant(x1)?;
        let y_ops: Vec<LinearOperator> = ys
            .iter()
            .filter(|y| y.norm() > ZERO_NORM)
            .map(|y| self.s().ad_matrix(&y.scale(1.0 / y.norm())))
            .collect();
        let c_x2 = refine_commutant(&c_x1, &y_ops, n, rank_tol);
        Ok(DiagramCase::from_dims(DiagramDims {
            ad_s1: c_s1.dim(),
            ad_s2: c_s2.dim(),
            ad_x1: c_x1.dim(),
            ad_x2: c_x2.dim(),
        }))
    }

    /// Does adding `exp(Y)` to `S1 = exp(X1)` leave the generated closed
    /// group unchanged? Requires `<X1 ∪ Y>` simple.
    pub fn decide_group_membership(
        &self,
        x1: &[AlgebraElement],
        ys: &[AlgebraElement],
    ) -> Result<GroupVerdict> {
        if x1.is_empty() {
            return Err(GatesetError::EmptyInput("hamiltonians"));
        }
        if ys.is_empty() {
            let c = self.group_commutant(&self.exp_all(x1)?)?;
            return Ok(GroupVerdict {
                answer: Answer::Yes,
                commutant: DimCheck::new(c.dim(), c.dim()),
                witness: None,
                budget: None,
                diagram: None,
                generated_dim: None,
            });
        }
        let x2: Vec<AlgebraElement> = x1.iter().chain(ys).cloned().collect();
        let g2 = self.alg.generate_subalgebra(&x2)?;
        self.require_simple(&g2, "algebra generated by X1 and Y")?;
        let diagram = self.classify_diagram(x1, ys)?;
        let commutant = DimCheck::new(diagram.dims.ad_s1, diagram.dims.ad_s2);
        let mut verdict = GroupVerdict {
            answer: Answer::Inconclusive,
            commutant,
            witness: None,
            budget: None,
            diagram: Some(diagram),
            generated_dim: Some(g2.dim()),
        };
        let on_witness = match diagram.kind {
            DiagramKind::NecessaryConditionFails => {
                verdict.answer = Answer::No;
                return Ok(verdict);
            }
            DiagramKind::DecidableEqual => Answer::Yes,
            DiagramKind::DecidableStrict => {
                let g1 = self.alg.generate_subalgebra(x1)?;
                if !self.alg.is_simple(&g1)? {
                    return Ok(verdict);
                }
                Answer::No
            }
            _ => return Ok(verdict),
        };
        let gates = self.exp_all(x1)?;
        let (witness, budget) = self.search(&gates, self.non_commuting_test(x1))?;
        if witness.is_some() {
            verdict.answer = on_witness;
        }
        verdict.witness = witness;
        verdict.budget = Some(budget);
        Ok(verdict)
    }
}
