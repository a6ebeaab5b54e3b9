// Copyright 2026 The gateset Authors
// SPDX-License-Identifier: Apache-2.0

//! Linear-algebra decisions on subalgebras of su(d).
//!
//! All subspaces live in the coordinate space of a [`SuStructure`]. Inputs
//! are rescaled to unit norm before any rank decision, so the null-space
//! cutoffs use an absolute reference of 1 and do not depend on how large
//! the user's Hamiltonians are.

use std::sync::OnceLock;

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{GatesetError, Result};
use crate::matrix::{column_span, real_null_space_with_reference, Tolerances};
use crate::su_structure::{AlgebraElement, LinearOperator, SuStructure};
use crate::subspace::RealSubspace;
use crate::verdict::{Answer, DimCheck};

/// Elements at or below this norm are treated as zero inputs.
pub const ZERO_NORM: f64 = 1e-12;

/// Which centralizer supplies the image of the projector in the
/// membership criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum ProjectorVariant {
    /// `P_{X1}`
    #[default]
    X1,
    /// `P_{X2}` with `X2 = X1 ∪ Y`
    X2,
}

/// Certificate for an algebra-level decision.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlgebraVerdict {
    pub answer: Answer,
    /// `dim C(ad_lhs)` against `dim C(ad_rhs)` in `End(k)`.
    pub commutant: DimCheck,
    /// `dim span P(lhs)` against `dim span P(rhs)`.
    pub dimension: DimCheck,
    /// A unit vector separating the two sides of the first failed
    /// condition (an element of `End(k)` flattened column-major, or an
    /// element of `k`).
    pub witness: Option<Vec<f64>>,
}

fn normalized(xs: &[AlgebraElement]) -> Vec<DVector<f64>> {
    xs.iter()
        .filter_map(|x| {
            let n = x.norm();
            (n > ZERO_NORM).then(|| x.to_vector() / n)
        })
        .collect()
}

fn columns(n: usize, vs: &[DVector<f64>]) -> DMatrix<f64> {
    if vs.is_empty() {
        DMatrix::zeros(n, 0)
    } else {
        DMatrix::from_columns(vs)
    }
}

fn check_len(s: &SuStructure, xs: &[AlgebraElement]) -> Result<()> {
    for x in xs {
        if x.len() != s.n() {
            return Err(GatesetError::DimensionMismatch {
                expected: s.n(),
                found: x.len(),
            });
        }
    }
    Ok(())
}

/// Commutant `{M : A M = M A for all A}` of real `n x n` operators, as a
/// subspace of `R^{n^2}` (column-major flattening). Computed by
/// restricting the solution space one operator at a time.
pub fn commutant_of_operators(ops: &[LinearOperator], n: usize, rank_tol: f64) -> RealSubspace {
    refine_commutant(&RealSubspace::full(n * n), ops, n, rank_tol)
}

/// Elements of `start` (a subspace of `R^{n^2}`) commuting with every
/// operator in `ops`.
pub fn refine_commutant(
    start: &RealSubspace,
    ops: &[LinearOperator],
    n: usize,
    rank_tol: f64,
) -> RealSubspace {
    let nn = n * n;
    let mut basis = start.basis().clone();
    for op in ops {
        let norm = op.frobenius_norm();
        if norm <= ZERO_NORM || basis.ncols() == 0 {
            continue;
        }
        let a = op.mat() / norm;
        let mut image = DMatrix::zeros(nn, basis.ncols());
        for (j, col) in basis.column_iter().enumerate() {
            let m = DMatrix::from_column_slice(n, n, col.as_slice());
            let c = &a * &m - &m * &a;
            image.set_column(j, &DVector::from_column_slice(c.as_slice()));
        }
        let kernel = real_null_space_with_reference(&image, rank_tol, 1.0);
        basis = &basis * kernel.basis();
    }
    canonical(basis)
}

fn canonical(basis: DMatrix<f64>) -> RealSubspace {
    let cols: Vec<DVector<f64>> = basis
        .column_iter()
        .map(|c| {
            let mut v = c.into_owned();
            crate::matrix::nullspace::canonicalize_sign(&mut v);
            v
        })
        .collect();
    RealSubspace::from_orthonormal_unchecked(columns(basis.nrows(), &cols))
}

/// Decision procedures bound to one `su(d)` and one set of tolerances.
/// Results that depend only on `k = su(d)` itself are computed once.
pub struct AlgebraEngine<'a> {
    s: &'a SuStructure,
    tol: Tolerances,
    full_commutant: OnceLock<RealSubspace>,
    full_derived: OnceLock<RealSubspace>,
}

impl<'a> AlgebraEngine<'a> {
    pub fn new(s: &'a SuStructure, tol: Tolerances) -> Result<Self> {
        tol.validate()?;
        Ok(Self {
            s,
            tol,
            full_commutant: OnceLock::new(),
            full_derived: OnceLock::new(),
        })
    }

    pub fn structure(&self) -> &SuStructure {
        self.s
    }

    pub fn tolerances(&self) -> &Tolerances {
        &self.tol
    }

    fn full(&self) -> RealSubspace {
        RealSubspace::full(self.s.n())
    }

    fn span(&self, vs: &[DVector<f64>]) -> RealSubspace {
        column_span(&columns(self.s.n(), vs), self.tol.rank_tol, 1.0)
    }

    /// Smallest subalgebra containing `xs`.
    pub fn generate_subalgebra(&self, xs: &[AlgebraElement]) -> Result<RealSubspace> {
        if xs.is_empty() {
            return Err(GatesetError::EmptyInput("generators"));
        }
        check_len(self.s, xs)?;
        let mut w = self.span(&normalized(xs));
        loop {
            let q: Vec<DVector<f64>> = w.vectors().collect();
            let mut all = q.clone();
            for i in 0..q.len() {
                let ad = self.s.ad_dmatrix(&AlgebraElement::from_vector(&q[i]));
                for qj in &q[i + 1..] {
                    all.push(&ad * qj);
                }
            }
            let next = self.span(&all);
            if next.dim() == w.dim() {
                return Ok(next);
            }
            w = next;
        }
    }

    /// `{y in g : [y, x] = 0 for all x in xs}`.
    pub fn centralizer_in(&self, g: &RealSubspace, xs: &[AlgebraElement]) -> Result<RealSubspace> {
        check_len(self.s, xs)?;
        if g.ambient_dim() != self.s.n() {
            return Err(GatesetError::DimensionMismatch {
                expected: self.s.n(),
                found: g.ambient_dim(),
            });
        }
        let mut basis = g.basis().clone();
        for x in normalized(xs) {
            if basis.ncols() == 0 {
                break;
            }
            let ad = self.s.ad_dmatrix(&AlgebraElement::from_vector(&x));
            let kernel = real_null_space_with_reference(&(ad * &basis), self.tol.rank_tol, 1.0);
            basis = &basis * kernel.basis();
        }
        Ok(canonical(basis))
    }

    fn ad_ops(&self, xs: &[AlgebraElement]) -> Vec<LinearOperator> {
        normalized(xs)
            .iter()
            .map(|x| self.s.ad_matrix(&AlgebraElement::from_vector(x)))
            .collect()
    }

    /// Commutant of `{ad_x : x in xs}` in `End(k)`.
    pub fn ad_commutant(&self, xs: &[AlgebraElement]) -> Result<RealSubspace> {
        check_len(self.s, xs)?;
        Ok(commutant_of_operators(
            &self.ad_ops(xs),
            self.s.n(),
            self.tol.rank_tol,
        ))
    }

    /// `C(ad_k)`; one-dimensional (the scalars) for su(d).
    pub fn full_commutant(&self) -> &RealSubspace {
        self.full_commutant.get_or_init(|| {
            commutant_of_operators(
                &self.ad_ops(&self.s.basis_elements()),
                self.s.n(),
                self.tol.rank_tol,
            )
        })
    }

    /// `[g, g]` for a bracket-closed subspace `g`.
    pub fn derived_algebra(&self, g: &RealSubspace) -> Result<RealSubspace> {
        if g.ambient_dim() != self.s.n() {
            return Err(GatesetError::DimensionMismatch {
                expected: self.s.n(),
                found: g.ambient_dim(),
            });
        }
        let closure_tol = self.tol.rank_tol.sqrt();
        let q: Vec<DVector<f64>> = g.vectors().collect();
        let mut brackets = Vec::new();
        for i in 0..q.len() {
            let ad = self.s.ad_dmatrix(&AlgebraElement::from_vector(&q[i]));
            for qj in &q[i + 1..] {
                let b = &ad * qj;
                let residual = g.residual(&b);
                if residual > closure_tol {
                    return Err(GatesetError::NotBracketClosed { residual });
                }
                brackets.push(b);
            }
        }
        Ok(self.span(&brackets))
    }

    fn full_derived(&self) -> &RealSubspace {
        self.full_derived
            .get_or_init(|| self.derived_algebra(&self.full()).expect("su(d) is closed"))
    }

    /// `P_X`: image `C_k(X)`, kernel `[k, k] ∩ C_k(X)^⊥`.
    pub fn projector_px(&self, xs: &[AlgebraElement]) -> Result<LinearOperator> {
        let c = self.centralizer_in(&self.full(), xs)?;
        let kernel = self.full_derived().intersection(
            &c.orthogonal_complement(self.tol.rank_tol),
            self.tol.rank_tol,
        );
        projector_with(&c, &kernel)
    }

    /// Splits `span(xs)` into its components along the center of the
    /// generated algebra and along its derived part: returns
    /// `(span P_X(xs), <(1 - P_X) xs>)`.
    pub fn split_center_derived(
        &self,
        xs: &[AlgebraElement],
    ) -> Result<(RealSubspace, RealSubspace)> {
        let p = self.projector_px(xs)?;
        let (center, rest) = self.project_parts(&p, xs);
        let derived = if rest.iter().all(|v| v.norm() <= ZERO_NORM) {
            RealSubspace::zero(self.s.n())
        } else {
            let elems: Vec<AlgebraElement> = rest.iter().map(AlgebraElement::from_vector).collect();
            self.generate_subalgebra(&elems)?
        };
        Ok((self.span(&center), derived))
    }

    fn project_parts(
        &self,
        p: &LinearOperator,
        xs: &[AlgebraElement],
    ) -> (Vec<DVector<f64>>, Vec<DVector<f64>>) {
        normalized(xs)
            .into_iter()
            .map(|x| {
                let px = p.mat() * &x;
                let rest = &x - &px;
                (px, rest)
            })
            .unzip()
    }

    fn projected_span(&self, p: &LinearOperator, xs: &[AlgebraElement]) -> RealSubspace {
        self.span(&self.project_parts(p, xs).0)
    }

    /// A subalgebra is simple when it is perfect and its adjoint
    /// representation has only scalar self-intertwiners.
    pub fn is_simple(&self, g: &RealSubspace) -> Result<bool> {
        if g.dim() == 0 {
            return Ok(false);
        }
        if self.derived_algebra(g)?.dim() != g.dim() {
            return Ok(false);
        }
        let q = g.basis();
        let restricted: Vec<LinearOperator> = g
            .vectors()
            .map(|v| {
                let ad = self.s.ad_dmatrix(&AlgebraElement::from_vector(&v));
                LinearOperator::new(q.transpose() * ad * q)
            })
            .collect();
        Ok(commutant_of_operators(&restricted, g.dim(), self.tol.rank_tol).dim() == 1)
    }

    /// Is the Lie algebra generated by `xs` all of su(d)?
    pub fn decide_algebra_universality(&self, xs: &[AlgebraElement]) -> Result<AlgebraVerdict> {
        if xs.is_empty() {
            return Err(GatesetError::EmptyInput("hamiltonians"));
        }
        let cx = self.ad_commutant(xs)?;
        let ck = self.full_commutant();
        let commutant = DimCheck::new(cx.dim(), ck.dim());
        let pk = self.projector_px(&self.s.basis_elements())?;
        let dimension = DimCheck::new(
            self.projected_span(&pk, xs).dim(),
            self.projected_span(&pk, &self.s.basis_elements()).dim(),
        );
        Ok(self.finish(
            commutant,
            dimension,
            &cx,
            ck,
            &pk,
            xs,
            &self.s.basis_elements(),
        ))
    }

    /// Is every element of `ys` in the Lie algebra generated by `x1`?
    pub fn decide_algebra_membership(
        &self,
        x1: &[AlgebraElement],
        ys: &[AlgebraElement],
        variant: ProjectorVariant,
    ) -> Result<AlgebraVerdict> {
        if x1.is_empty() {
            return Err(GatesetError::EmptyInput("hamiltonians"));
        }
        check_len(self.s, ys)?;
        let x2: Vec<AlgebraElement> = x1.iter().chain(ys).cloned().collect();
        let c1 = self.ad_commutant(x1)?;
        let c2 = refine_commutant(&c1, &self.ad_ops(ys), self.s.n(), self.tol.rank_tol);
        let commutant = DimCheck::new(c1.dim(), c2.dim());
        let p = match variant {
            ProjectorVariant::X1 => self.projector_px(x1)?,
            ProjectorVariant::X2 => self.projector_px(&x2)?,
        };
        let dimension = DimCheck::new(
            self.projected_span(&p, x1).dim(),
            self.projected_span(&p, &x2).dim(),
        );
        Ok(self.finish(commutant, dimension, &c1, &c2, &p, x1, &x2))
    }

    #[allow(clippy::too_many_arguments)]
    fn finish(
        &self,
        commutant: DimCheck,
        dimension: DimCheck,
        c_small_side: &RealSubspace,
        c_other: &RealSubspace,
        p: &LinearOperator,
        lhs: &[AlgebraElement],
        rhs: &[AlgebraElement],
    ) -> AlgebraVerdict {
        let (answer, witness) = if !commutant.equal {
            let (big, small) = if c_small_side.dim() >= c_other.dim() {
                (c_small_side, c_other)
            } else {
                (c_other, c_small_side)
            };
            (Answer::No, separating_vector(big, small))
        } else if !dimension.equal {
            let lhs_span = self.projected_span(p, lhs);
            let rhs_span = self.projected_span(p, rhs);
            let (big, small) = if lhs_span.dim() >= rhs_span.dim() {
                (lhs_span, rhs_span)
            } else {
                (rhs_span, lhs_span)
            };
            (Answer::No, separating_vector(&big, &small))
        } else {
            (Answer::Yes, None)
        };
        AlgebraVerdict {
            answer,
            commutant,
            dimension,
            witness,
        }
    }
}

/// Basis vector of `big` farthest from `small`, with its component in
/// `small` removed.
fn separating_vector(big: &RealSubspace, small: &RealSubspace) -> Option<Vec<f64>> {
    big.vectors()
        .map(|v| {
            let r = &v - small.basis() * small.coordinates(&v);
            let n = r.norm();
            (n, r)
        })
        .max_by(|a, b| a.0.total_cmp(&b.0))
        .filter(|(n, _)| *n > ZERO_NORM)
        .map(|(n, r)| (r / n).iter().copied().collect())
}

/// Linear map with the given image and kernel; the two must be
/// complementary.
pub fn projector_with(image: &RealSubspace, kernel: &RealSubspace) -> Result<LinearOperator> {
    let n = image.ambient_dim();
    if image.dim() + kernel.dim() != n {
        return Err(GatesetError::InvalidParameter(format!(
            "image ({}) and kernel ({}) are not complementary in dimension {n}",
            image.dim(),
            kernel.dim()
        )));
    }
    let mut frame = DMatrix::zeros(n, n);
    frame
        .view_mut((0, 0), (n, image.dim()))
        .copy_from(image.basis());
    frame
        .view_mut((0, image.dim()), (n, kernel.dim()))
        .copy_from(kernel.basis());
    let inv = frame
        .try_inverse()
        .ok_or_else(|| GatesetError::InvalidParameter("image and kernel intersect".to_string()))?;
    let mut target = DMatrix::zeros(n, n);
    target
        .view_mut((0, 0), (n, image.dim()))
        .copy_from(image.basis());
    Ok(LinearOperator::new(target * inv))
}
