// Copyright 2026 The gateset Authors
// SPDX-License-Identifier: Apache-2.0

//! The report printed by every subcommand, in JSON or text.

use std::fmt::Write;

use gateset_core::algebra::AlgebraVerdict;
use gateset_core::appendix::AppendixReport;
use gateset_core::group::GroupVerdict;
use gateset_core::io::ProblemFile;
use gateset_core::{Answer, DimCheck, SearchBudget, Tolerances};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Yes,
    No,
    Inconclusive,
    /// `info` finished without deciding anything.
    Ok,
    Error,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Yes | Verdict::Ok => 0,
            Verdict::No => 1,
            Verdict::Inconclusive => 2,
            Verdict::Error => 3,
        }
    }
}

impl From<Answer> for Verdict {
    fn from(a: Answer) -> Self {
        match a {
            Answer::Yes => Verdict::Yes,
            Answer::No => Verdict::No,
            Answer::Inconclusive => Verdict::Inconclusive,
        }
    }
}

/// Summary produced by `info`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProblemSummary {
    pub d: usize,
    pub algebra_dim: usize,
    pub gate_labels: Vec<String>,
    pub hamiltonians: usize,
    pub y: usize,
    /// Dimension of the Lie algebra generated by the Hamiltonians.
    pub generated_dim: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    Algebra {
        #[serde(flatten)]
        verdict: AlgebraVerdict,
        /// Dimension of the algebra generated by the Hamiltonians (`X1 ∪ Y`
        /// for membership).
        generated_dim: usize,
        lhs_generated_dim: Option<usize>,
    },
    Group(GroupVerdict),
    Appendix(AppendixReport),
    Info(ProblemSummary),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub tool: String,
    pub version: String,
    pub command: String,
    pub input: Option<String>,
    pub problem: Option<ProblemFile>,
    pub verdict: Verdict,
    pub error: Option<String>,
    pub certificate: Option<Certificate>,
    pub tolerances: Option<Tolerances>,
    pub budgets: Option<SearchBudget>,
    pub notices: Vec<String>,
    pub timing_ms: f64,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Self {
            schema: SCHEMA_VERSION,
            tool: "gateset".to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.to_string(),
            input: None,
            problem: None,
            verdict: Verdict::Error,
            error: None,
            certificate: None,
            tolerances: None,
            budgets: None,
            notices: Vec::new(),
            timing_ms: 0.0,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "gateset {} {}", self.version, self.command);
        if let Some(input) = &self.input {
            let _ = writeln!(out, "input: {input}");
        }
        if let Some(p) = &self.problem {
            let _ = writeln!(out, "problem: {} (d = {})", p.problem, p.d);
        }
        let _ = writeln!(out, "verdict: {:?}", self.verdict);
        if let Some(e) = &self.error {
            let _ = writeln!(out, "error: {e}");
        }
        match &self.certificate {
            Some(Certificate::Algebra {
                verdict,
                generated_dim,
                lhs_generated_dim,
            }) => self.algebra_text(&mut out, verdict, *generated_dim, *lhs_generated_dim),
            Some(Certificate::Group(v)) => self.group_text(&mut out, v),
            Some(Certificate::Appendix(a)) => appendix_text(&mut out, a),
            Some(Certificate::Info(s)) => {
                let _ = writeln!(out, "su({}) has dimension {}", s.d, s.algebra_dim);
                if !s.gate_labels.is_empty() {
                    let _ = writeln!(out, "gates: {}", s.gate_labels.join(", "));
                }
                let _ = writeln!(out, "hamiltonians: {}, Y: {}", s.hamiltonians, s.y);
                if let Some(g) = s.generated_dim {
                    let _ = writeln!(out, "generated Lie algebra dimension: {g}");
                }
            }
            None => {}
        }
        if let Some(t) = &self.tolerances {
            let _ = writeln!(
                out,
                "tolerances: rank {:e}, dedup {:e}, commute {:e}",
                t.rank_tol, t.dedup_tol, t.commute_tol
            );
        }
        for n in &self.notices {
            let _ = writeln!(out, "note: {n}");
        }
        let _ = writeln!(out, "time: {:.1} ms", self.timing_ms);
        out
    }

    fn algebra_text(
        &self,
        out: &mut String,
        v: &AlgebraVerdict,
        generated_dim: usize,
        lhs_generated_dim: Option<usize>,
    ) {
        let (lhs, rhs, plhs, prhs) = if self.command == "alg-universal" {
            ("C(ad_X)", "C(ad_k)", "P_k(X)", "P_k(k)")
        } else {
            ("C(ad_X1)", "C(ad_X2)", "P(X1)", "P(X2)")
        };
        dim_line(out, "commutant", lhs, rhs, &v.commutant);
        dim_line(
            out,
            "dimension",
            &format!("span {plhs}"),
            &format!("span {prhs}"),
            &v.dimension,
        );
        match lhs_generated_dim {
            Some(g1) => {
                let _ = writeln!(
                    out,
                    "generated algebras: dim <X1> = {g1}, dim <X1 ∪ Y> = {generated_dim}"
                );
            }
            None => {
                let _ = writeln!(out, "generated algebra: dim <X> = {generated_dim}");
            }
        }
        if let Some(w) = &v.witness {
            let _ = writeln!(out, "separating vector: {} coordinates", w.len());
        }
    }

    fn group_text(&self, out: &mut String, v: &GroupVerdict) {
        let (lhs, rhs) = match self.command.as_str() {
            "grp-universal" => ("C(Ad_S)", "C(ad_k)"),
            "sub-universal" => ("C(Ad_S)", "C(ad_X)"),
            _ => ("C(Ad_S1)", "C(Ad_S2)"),
        };
        dim_line(out, "commutant", lhs, rhs, &v.commutant);
        if let Some(g) = v.generated_dim {
            let _ = writeln!(out, "generated algebra dimension: {g}");
        }
        if let Some(d) = &v.diagram {
            let _ = writeln!(
                out,
                "diagram: {:?} (decidable: {}); dims C(Ad_S1) {}, C(Ad_S2) {}, C(ad_X1) {}, C(ad_X2) {}",
                d.kind, d.decidable, d.dims.ad_s1, d.dims.ad_s2, d.dims.ad_x1, d.dims.ad_x2
            );
        }
        if let Some(w) = &v.witness {
            let word: Vec<String> = w.word.iter().map(|g| g.to_string()).collect();
            let _ = write!(
                out,
                "witness: {:?}, word [{}] (length {}), center distance {:.6}",
                w.reason,
                word.join(" "),
                w.word.len(),
                w.center_distance
            );
            if let Some(c) = w.commutator_deviation {
                let _ = write!(out, ", commutator deviation {c:.6}");
            }
            out.push('\n');
        }
        if let Some(b) = &v.budget {
            let _ = writeln!(
                out,
                "search: word length {} of {}, {} elements of {}, finite: {}, budget exhausted: {}",
                b.word_length_reached,
                b.max_word_length,
                b.elements,
                b.element_budget,
                b.is_finite,
                b.budget_exhausted
            );
        }
    }
}

fn dim_line(out: &mut String, name: &str, lhs: &str, rhs: &str, c: &DimCheck) {
    let rel = if c.equal { "equal" } else { "different" };
    let _ = writeln!(
        out,
        "{name}: dim {lhs} = {}, dim {rhs} = {} ({rel})",
        c.lhs_dim, c.rhs_dim
    );
}

fn appendix_text(out: &mut String, a: &AppendixReport) {
    let _ = writeln!(out, "seed {}, {} samples", a.seed, a.samples);
    for c in &a.commutator {
        let _ = writeln!(
            out,
            "commutator bound, d = {}: {}/{} hold (max ratio {:.4})",
            c.d, c.passed, c.samples, c.max_ratio
        );
    }
    let l = &a.log_trace;
    let _ = writeln!(
        out,
        "log trace bound, d = {}, r = {}: {}/{} traceless (max |tr log U| {:.2e})",
        l.d, l.r, l.passed, l.samples, l.max_abs_trace
    );
    if let Some(t) = &a.tightness {
        let _ = writeln!(
            out,
            "tightness example: {:?}, ||U - 1|| = {:.12} (closed form {:.12}), |tr log U| = {:.12}: {}",
            t.report.verdict,
            t.report.distance_to_identity,
            t.expected_distance,
            t.report.trace_of_log.norm(),
            if t.passed { "pass" } else { "FAIL" }
        );
    }
    let _ = writeln!(out, "all passed: {}", a.all_passed);
}
