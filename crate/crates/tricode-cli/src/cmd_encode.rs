//! `tricode encode`: message bits -> codeword, non-systematic c(x) = m(x)g(x).

use std::fmt::Write as _;
use std::time::Instant;

use clap::Args;
use serde::Serialize;
use tricode::{make_field_arc, Code, CodeSpec, Codeword, ZeroSet};

use crate::args::{parse_hex_bits, render_hex_bits, support_to_bits};
use crate::report::{self, Failure, RunReport, EXIT_OK};

#[derive(Args, Serialize)]
pub struct EncodeArgs {
    /// Field degree n; the code has length 2^n - 1.
    #[arg(long)]
    pub n: u32,

    /// Zero-set exponents, comma-separated decimal.
    #[arg(long, value_delimiter = ',', required = true)]
    pub zeros: Vec<u64>,

    /// Message as a hex bit string of `dimension` bits (LSB = coefficient
    /// of x^0).
    #[arg(long)]
    pub message: String,
}

#[derive(Serialize)]
struct EncodeResults {
    code: CodeSpec,
    message_hex: String,
    codeword: Codeword,
    codeword_hex: String,
    weight: usize,
}

pub fn run(args: EncodeArgs, json: bool) -> Result<i32, Failure> {
    let start = Instant::now();
    let field = make_field_arc(args.n)?;
    let zero_set = ZeroSet::new(args.n, &args.zeros)?;
    let code = Code::new(field, zero_set)?;

    let message = parse_hex_bits(&args.message, code.dimension()).map_err(Failure::usage)?;
    let codeword = code.encode(&message)?;
    let codeword_hex = render_hex_bits(&support_to_bits(&codeword.support, code.length()));

    let results = EncodeResults {
        code: code.spec(),
        message_hex: render_hex_bits(&message),
        weight: codeword.weight(),
        codeword_hex,
        codeword,
    };

    let text = render_text(&results);
    let run = RunReport {
        command: "encode",
        parameters: &args,
        results: &results,
        wall_time_ms: start.elapsed().as_millis() as u64,
        seed: None,
    };
    report::emit(&run, json, &text);
    Ok(EXIT_OK)
}

fn render_text(r: &EncodeResults) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "code: n={} zero_set={:?} [{}, {}]",
        r.code.n, r.code.zero_set, r.code.length, r.code.dimension
    );
    let _ = writeln!(out, "message:  {}", r.message_hex);
    let _ = writeln!(out, "codeword: {} (weight {})", r.codeword_hex, r.weight);
    let _ = writeln!(out, "support: {:?}", r.codeword.support);
    out
}
