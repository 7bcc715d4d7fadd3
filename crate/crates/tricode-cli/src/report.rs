//! Run reports and the exit-code policy.
//!
//! Exit codes: 0 = all checks hold, 1 = usage error, 2 = a property was
//! refuted (a witness exists where d >= 7 was claimed, a bound failed, an
//! uncorrectable word), 3 = a resource budget was exceeded before any
//! conclusion could be reached.

use serde::Serialize;
use tricode::{
    CodeError, DecoderError, DistanceCertificate, DistanceError, FieldError, LinearizedError,
    SearchBudget, Verdict, WitnessError,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_REFUTED: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Self-describing report: parameters are sufficient to re-run the command,
/// and repeated runs are byte-identical apart from wall_time_ms fields.
#[derive(Serialize)]
pub struct RunReport<P: Serialize, R: Serialize> {
    pub command: &'static str,
    pub parameters: P,
    pub results: R,
    pub wall_time_ms: u64,
    pub seed: Option<u64>,
}

/// Terminal failure: a message for stderr and the process exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    pub fn refuted(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_REFUTED,
            message: message.into(),
        }
    }

    pub fn budget(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_BUDGET,
            message: message.into(),
        }
    }
}

impl From<FieldError> for Failure {
    fn from(e: FieldError) -> Self {
        Failure::usage(e.to_string())
    }
}

impl From<CodeError> for Failure {
    fn from(e: CodeError) -> Self {
        Failure::usage(e.to_string())
    }
}

impl From<LinearizedError> for Failure {
    fn from(e: LinearizedError) -> Self {
        Failure::usage(e.to_string())
    }
}

impl From<WitnessError> for Failure {
    fn from(e: WitnessError) -> Self {
        Failure::usage(e.to_string())
    }
}

impl From<DistanceError> for Failure {
    fn from(e: DistanceError) -> Self {
        match &e {
            DistanceError::DimensionBudget { .. }
            | DistanceError::MemoryBudget { .. }
            | DistanceError::EntryTooWide { .. } => Failure::budget(e.to_string()),
            DistanceError::OracleDisagreement(_) => Failure::refuted(e.to_string()),
            _ => Failure::usage(e.to_string()),
        }
    }
}

impl From<DecoderError> for Failure {
    fn from(e: DecoderError) -> Self {
        match &e {
            DecoderError::DegreeBudget { .. } | DecoderError::EntryTooWide { .. } => {
                Failure::budget(e.to_string())
            }
            DecoderError::DuplicateSyndrome { .. } | DecoderError::Uncorrectable => {
                Failure::refuted(e.to_string())
            }
            _ => Failure::usage(e.to_string()),
        }
    }
}

/// Prints the report: pretty JSON under --json, the prepared text otherwise.
pub fn emit<P: Serialize, R: Serialize>(report: &RunReport<P, R>, json: bool, text: &str) {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(report).expect("report serialization")
        );
    } else {
        print!("{text}");
    }
}

/// Classification of a per-row certification outcome inside `table`.
pub fn distance_exit_class(e: &DistanceError) -> i32 {
    match e {
        DistanceError::DimensionBudget { .. }
        | DistanceError::MemoryBudget { .. }
        | DistanceError::EntryTooWide { .. } => EXIT_BUDGET,
        _ => EXIT_REFUTED,
    }
}

/// Search budget from the CLI flags, defaults from `SearchBudget::default()`.
pub fn search_budget(workers: Option<usize>, mem_budget_mb: Option<u64>) -> SearchBudget {
    let mut budget = SearchBudget::default();
    if let Some(w) = workers {
        budget.workers = w.max(1);
    }
    if let Some(m) = mem_budget_mb {
        budget.mem_budget_mb = m;
    }
    budget
}

/// One-line human rendering of a certificate verdict.
pub fn verdict_text(cert: &DistanceCertificate) -> String {
    match &cert.verdict {
        Verdict::AtLeast(d) => format!("at_least({d})"),
        Verdict::Exact(d) => format!("exact({d})"),
        Verdict::Witness(s) => format!("witness(weight {})", s.len()),
    }
}
