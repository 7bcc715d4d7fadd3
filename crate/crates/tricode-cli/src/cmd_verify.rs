//! `tricode verify`: certify the minimum distance of one code.

use std::fmt::Write as _;
use std::time::Instant;

use clap::Args;
use serde::Serialize;
use tricode::{
    make_field_arc, min_weight_upto, verify_triple, Code, CodeSpec, DistanceCertificate, ZeroSet,
};

use crate::report::{self, Failure, RunReport, EXIT_OK, EXIT_REFUTED};

#[derive(Args, Serialize)]
pub struct VerifyArgs {
    /// Field degree n; the code has length 2^n - 1.
    #[arg(long)]
    pub n: u32,

    /// Zero-set exponents, comma-separated decimal (e.g. 1,3,5).
    #[arg(long, value_delimiter = ',', required = true)]
    pub zeros: Vec<u64>,

    /// Highest weight searched: the run certifies d >= weight-bound + 1 or
    /// finds a lighter codeword.
    #[arg(long, default_value_t = 6)]
    pub weight_bound: u32,

    /// Worker threads for the low-weight search (default: all cores).
    #[arg(long)]
    pub workers: Option<usize>,

    /// Memory ceiling for the search tables, in MiB.
    #[arg(long)]
    pub mem_budget_mb: Option<u64>,
}

#[derive(Serialize)]
struct VerifyResults {
    code: CodeSpec,
    certificate: DistanceCertificate,
    target_distance: u32,
    holds: bool,
}

pub fn run(args: VerifyArgs, json: bool) -> Result<i32, Failure> {
    let start = Instant::now();
    let field = make_field_arc(args.n)?;
    let zero_set = ZeroSet::new(args.n, &args.zeros)?;
    let code = Code::new(field, zero_set)?;
    let budget = report::search_budget(args.workers, args.mem_budget_mb);

    // The triple path adds the exhaustive cross-check at small dimensions;
    // it needs exactly three cosets and the standard weight bound.
    let certificate = if args.weight_bound == 6 && code.zero_set().exponents().len() == 3 {
        verify_triple(&code, &budget)?
    } else {
        min_weight_upto(&code, args.weight_bound, &budget)?
    };

    let target_distance = args.weight_bound + 1;
    let holds = certificate.is_at_least(target_distance);
    let results = VerifyResults {
        code: code.spec(),
        certificate,
        target_distance,
        holds,
    };

    let text = render_text(&results);
    let run = RunReport {
        command: "verify",
        parameters: &args,
        results: &results,
        wall_time_ms: start.elapsed().as_millis() as u64,
        seed: None,
    };
    report::emit(&run, json, &text);
    Ok(if holds { EXIT_OK } else { EXIT_REFUTED })
}

fn render_text(r: &VerifyResults) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "code: n={} zero_set={:?} [{}, {}] degenerate={}",
        r.code.n, r.code.zero_set, r.code.length, r.code.dimension, r.code.degenerate
    );
    let _ = writeln!(
        out,
        "verdict: {} (method {:?}, {} combinations, {} ms)",
        report::verdict_text(&r.certificate),
        r.certificate.method,
        r.certificate.combos_examined,
        r.certificate.wall_time_ms
    );
    if let Some(w) = r.certificate.witness() {
        let _ = writeln!(out, "witness support: {w:?}");
    }
    let _ = writeln!(
        out,
        "d >= {}: {}",
        r.target_distance,
        if r.holds { "HOLDS" } else { "REFUTED" }
    );
    out
}
