// Copyright 2026 The gateset Authors
// SPDX-License-Identifier: Apache-2.0

//! Command-line driver for the `gateset` deciders.

pub mod report;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gateset_core::algebra::{AlgebraEngine, ProjectorVariant};
use gateset_core::appendix::verify_appendix;
use gateset_core::group::GroupEngine;
use gateset_core::io::{parse_problem, ProblemKind, ResolvedProblem};
use gateset_core::{AlgebraElement, ComplexMatrix, GatesetError, SuStructure};

pub use report::{Certificate, ProblemSummary, Report, Verdict, SCHEMA_VERSION};

/// Environment variable capping the worker threads used for word
/// enumeration.
pub const THREADS_ENV: &str = "GATESET_ORACLE_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "gateset",
    version,
    about = "Decide universality and membership questions for quantum gate sets"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Projector {
    X1,
    X2,
}

#[derive(Debug, Args)]
pub struct ProblemArgs {
    /// Problem file (JSON)
    #[arg(long)]
    pub input: PathBuf,
    /// Longest word enumerated in group searches [default: 16]
    #[arg(long)]
    pub max_word_length: Option<usize>,
    /// Maximum number of distinct group elements stored [default: 200000]
    #[arg(long)]
    pub budget: Option<usize>,
    /// Relative singular value cutoff for rank decisions [default: 1e-9]
    #[arg(long)]
    pub tol_rank: Option<f64>,
    /// Frobenius distance below which group elements coincide [default: 1e-8]
    #[arg(long)]
    pub tol_dedup: Option<f64>,
    /// Threshold for commutation tests [default: 1e-8]
    #[arg(long)]
    pub tol_commute: Option<f64>,
    #[arg(long, value_enum, default_value = "text")]
    pub output: OutputFormat,
    /// Reject gates with det != 1 and Hamiltonians with a trace instead of
    /// correcting them
    #[arg(long)]
    pub no_normalize: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Is the Lie algebra generated by the Hamiltonians all of su(d)?
    AlgUniversal(ProblemArgs),
    /// Is every element of Y in the Lie algebra generated by the Hamiltonians?
    AlgMember {
        #[command(flatten)]
        args: ProblemArgs,
        /// Centralizer used for the projector
        #[arg(long, value_enum, default_value = "x1")]
        projector: Projector,
    },
    /// Do the gates generate a dense subgroup of SU(d)?
    GrpUniversal(ProblemArgs),
    /// Is the closure of <exp(Y)> the connected subgroup of <X>? (Y defaults
    /// to the Hamiltonians.)
    SubUniversal(ProblemArgs),
    /// Does adding exp(Y) to exp(X) leave the generated group unchanged?
    GrpMember(ProblemArgs),
    /// Sample the commutator and logarithm-trace inequalities
    VerifyAppendix {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Radius in the logarithm-trace hypothesis, in (0, 1]
        #[arg(long, default_value_t = 1.0)]
        r: f64,
        #[arg(long, value_enum, default_value = "text")]
        output: OutputFormat,
    },
    /// Parse and normalize a problem file and print a summary
    Info(ProblemArgs),
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::AlgUniversal(_) => "alg-universal",
            Command::AlgMember { .. } => "alg-member",
            Command::GrpUniversal(_) => "grp-universal",
            Command::SubUniversal(_) => "sub-universal",
            Command::GrpMember(_) => "grp-member",
            Command::VerifyAppendix { .. } => "verify-appendix",
            Command::Info(_) => "info",
        }
    }

    fn output(&self) -> OutputFormat {
        match self {
            Command::AlgUniversal(a)
            | Command::GrpUniversal(a)
            | Command::SubUniversal(a)
            | Command::GrpMember(a)
            | Command::Info(a)
            | Command::AlgMember { args: a, .. } => a.output,
            Command::VerifyAppendix { output, .. } => *output,
        }
    }

    fn expected_kind(&self) -> Option<ProblemKind> {
        match self {
            Command::AlgUniversal(_) => Some(ProblemKind::AlgebraUniversality),
            Command::AlgMember { .. } => Some(ProblemKind::AlgebraMembership),
            Command::GrpUniversal(_) => Some(ProblemKind::GroupUniversality),
            Command::SubUniversal(_) => Some(ProblemKind::SubgroupUniversality),
            Command::GrpMember(_) => Some(ProblemKind::GroupMembership),
            _ => None,
        }
    }
}

/// Output of one invocation.
pub struct Outcome {
    pub exit_code: i32,
    /// Report text for standard output (empty when argument parsing failed).
    pub stdout: String,
    /// Usage or error text for standard error.
    pub stderr: String,
}

/// Parses `argv` (including the program name) and runs the subcommand.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            // Help and version requests succeed; anything else is a usage error.
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                Outcome {
                    exit_code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    exit_code: 3,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let report = execute(&cli.command);
    let stdout = match cli.command.output() {
        OutputFormat::Json => report.to_json() + "\n",
        OutputFormat::Text => report.to_text(),
    };
    Outcome {
        exit_code: report.verdict.exit_code(),
        stdout,
        stderr: String::new(),
    }
}

/// Runs a parsed subcommand and builds its report.
pub fn execute(command: &Command) -> Report {
    let start = Instant::now();
    let mut report = Report::new(command.name());
    if let Err(e) = execute_into(command, &mut report) {
        report.verdict = Verdict::Error;
        report.error = Some(e.to_string());
    }
    report.timing_ms = start.elapsed().as_secs_f64() * 1e3;
    report
}

fn load(args: &ProblemArgs, report: &mut Report) -> Result<ResolvedProblem, GatesetError> {
    report.input = Some(args.input.display().to_string());
    let file = parse_problem(&args.input)?;
    report.problem = Some(file.clone());
    let mut resolved = file.resolve(!args.no_normalize)?;
    if let Some(n) = args.max_word_length {
        resolved.budget.max_word_length = n;
    }
    if let Some(n) = args.budget {
        if n == 0 {
            return Err(GatesetError::InvalidParameter(
                "--budget must be at least 1".to_string(),
            ));
        }
        resolved.budget.element_budget = n;
    }
    let tol = &mut resolved.tolerances;
    if let Some(t) = args.tol_rank {
        tol.rank_tol = t;
    }
    if let Some(t) = args.tol_dedup {
        tol.dedup_tol = t;
    }
    if let Some(t) = args.tol_commute {
        tol.commute_tol = t;
    }
    tol.validate()?;
    report.tolerances = Some(resolved.tolerances);
    report.budgets = Some(resolved.budget);
    report.notices = resolved.notices.clone();
    for n in &resolved.notices {
        log::info!("{n}");
    }
    Ok(resolved)
}

fn coords(s: &SuStructure, ms: &[ComplexMatrix]) -> Result<Vec<AlgebraElement>, GatesetError> {
    ms.iter().map(|m| s.to_coords(m)).collect()
}

fn execute_into(command: &Command, report: &mut Report) -> Result<(), GatesetError> {
    if let Command::VerifyAppendix {
        seed, samples, r, ..
    } = command
    {
        let a = verify_appendix(*seed, *samples, *r)?;
        report.verdict = if a.all_passed {
            Verdict::Yes
        } else {
            Verdict::No
        };
        report.certificate = Some(Certificate::Appendix(a));
        return Ok(());
    }
    let args = match command {
        Command::AlgUniversal(a)
        | Command::GrpUniversal(a)
        | Command::SubUniversal(a)
        | Command::GrpMember(a)
        | Command::Info(a)
        | Command::AlgMember { args: a, .. } => a,
        Command::VerifyAppendix { .. } => unreachable!(),
    };
    let p = load(args, report)?;
    if let Some(kind) = command.expected_kind() {
        if kind != p.kind {
            report.notices.push(format!(
                "file declares problem {}; running {} as requested",
                p.kind,
                command.name()
            ));
        }
    }
    let s = SuStructure::new(p.d)?;
    let x = coords(&s, &p.hamiltonians)?;
    let y = coords(&s, &p.y)?;
    match command {
        Command::AlgUniversal(_) => {
            let alg = AlgebraEngine::new(&s, p.tolerances)?;
            let v = alg.decide_algebra_universality(&x)?;
            report.verdict = v.answer.into();
            report.certificate = Some(Certificate::Algebra {
                generated_dim: alg.generate_subalgebra(&x)?.dim(),
                lhs_generated_dim: None,
                verdict: v,
            });
        }
        Command::AlgMember { projector, .. } => {
            let alg = AlgebraEngine::new(&s, p.tolerances)?;
            let variant = match projector {
                Projector::X1 => ProjectorVariant::X1,
                Projector::X2 => ProjectorVariant::X2,
            };
            let v = alg.decide_algebra_membership(&x, &y, variant)?;
            let x2: Vec<AlgebraElement> = x.iter().chain(&y).cloned().collect();
            report.verdict = v.answer.into();
            report.certificate = Some(Certificate::Algebra {
                generated_dim: alg.generate_subalgebra(&x2)?.dim(),
                lhs_generated_dim: Some(alg.generate_subalgebra(&x)?.dim()),
                verdict: v,
            });
        }
        Command::GrpUniversal(_) => {
            let eng = GroupEngine::new(&s, p.tolerances, p.budget)?;
            let v = eng.decide_group_universality(&p.gates)?;
            report.verdict = v.answer.into();
            report.certificate = Some(Certificate::Group(v));
        }
        Command::SubUniversal(_) => {
            let eng = GroupEngine::new(&s, p.tolerances, p.budget)?;
            let ys = if y.is_empty() { &x } else { &y };
            let v = eng.decide_subgroup_universality(&x, ys)?;
            report.verdict = v.answer.into();
            report.certificate = Some(Certificate::Group(v));
        }
        Command::GrpMember(_) => {
            let eng = GroupEngine::new(&s, p.tolerances, p.budget)?;
            let v = eng.decide_group_membership(&x, &y)?;
            report.verdict = v.answer.into();
            report.certificate = Some(Certificate::Group(v));
        }
        Command::Info(_) => {
            let generated_dim = if x.is_empty() {
                None
            } else {
                Some(
                    AlgebraEngine::new(&s, p.tolerances)?
                        .generate_subalgebra(&x)?
                        .dim(),
                )
            };
            report.verdict = Verdict::Ok;
            report.certificate = Some(Certificate::Info(ProblemSummary {
                d: p.d,
                algebra_dim: s.n(),
                gate_labels: p.gate_labels.clone(),
                hamiltonians: p.hamiltonians.len(),
                y: p.y.len(),
                generated_dim,
            }));
        }
        Command::VerifyAppendix { .. } => unreachable!(),
    }
    Ok(())
}

/// Applies [`THREADS_ENV`] to the global worker pool. Invalid values are
/// ignored with a warning.
pub fn configure_threads() {
    let Ok(value) = std::env::var(THREADS_ENV) else {
        return;
    };
    match value.trim().parse::<usize>() {
        Ok(n) if n > 0 => {
            if let Err(e) = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global()
            {
                log::warn!("could not size the thread pool: {e}");
            }
        }
        _ => log::warn!("ignoring {THREADS_ENV}={value:?}: expected a positive integer"),
    }
}
