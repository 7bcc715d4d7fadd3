//! `tricode decode`: table-driven correction of up to 3 bit flips.

use std::fmt::Write as _;
use std::time::Instant;

use clap::Args;
use serde::Serialize;
use tricode::{
    build_syndrome_table, decode, make_field_arc, Code, CodeSpec, Codeword, DecoderError, ZeroSet,
};

use crate::args::{parse_hex_bits, render_hex_bits, support_to_bits};
use crate::report::{self, Failure, RunReport, EXIT_OK, EXIT_REFUTED};

#[derive(Args, Serialize)]
pub struct DecodeArgs {
    /// Field degree n; the code has length 2^n - 1.
    #[arg(long)]
    pub n: u32,

    /// Zero-set exponents, comma-separated decimal.
    #[arg(long, value_delimiter = ',', required = true)]
    pub zeros: Vec<u64>,

    /// Received word as a hex bit string of 2^n - 1 bits (LSB = position 0).
    #[arg(long)]
    pub received: String,
}

#[derive(Serialize)]
struct DecodeResults {
    code: CodeSpec,
    table_entries: usize,
    received_hex: String,
    status: &'static str,
    error_support: Option<Vec<u64>>,
    corrected: Option<Codeword>,
    corrected_hex: Option<String>,
    message_hex: Option<String>,
}

pub fn run(args: DecodeArgs, json: bool) -> Result<i32, Failure> {
    let start = Instant::now();
    let field = make_field_arc(args.n)?;
    let zero_set = ZeroSet::new(args.n, &args.zeros)?;
    let code = Code::new(field, zero_set)?;

    // Table build doubles as a d >= 7 check: duplicate syndromes abort.
    let table = build_syndrome_table(&code)?;
    let received = parse_hex_bits(&args.received, code.length()).map_err(Failure::usage)?;
    let received_hex = render_hex_bits(&received);

    let (results, exit) = match decode(&code, &table, &received) {
        Ok(decoded) => {
            let corrected_bits = support_to_bits(&decoded.codeword.support, code.length());
            let message = divide_by_generator(
                &corrected_bits,
                code.generator_poly(),
                code.dimension(),
            )
            .ok_or_else(|| {
                Failure::refuted("internal: corrected word is not a multiple of g(x)")
            })?;
            (
                DecodeResults {
                    code: code.spec(),
                    table_entries: table.len(),
                    received_hex,
                    status: "corrected",
                    error_support: Some(decoded.error_support),
                    corrected_hex: Some(render_hex_bits(&corrected_bits)),
                    message_hex: Some(render_hex_bits(&message)),
                    corrected: Some(decoded.codeword),
                },
                EXIT_OK,
            )
        }
        Err(DecoderError::Uncorrectable) => (
            DecodeResults {
                code: code.spec(),
                table_entries: table.len(),
                received_hex,
                status: "uncorrectable",
                error_support: None,
                corrected: None,
                corrected_hex: None,
                message_hex: None,
            },
            EXIT_REFUTED,
        ),
        Err(e) => return Err(e.into()),
    };

    let text = render_text(&results);
    let run = RunReport {
        command: "decode",
        parameters: &args,
        results: &results,
        wall_time_ms: start.elapsed().as_millis() as u64,
        seed: None,
    };
    report::emit(&run, json, &text);
    Ok(exit)
}

/// m(x) = c(x) / g(x) over GF(2); None when g does not divide c.
fn divide_by_generator(bits: &[bool], generator: u128, dimension: u64) -> Option<Vec<bool>> {
    let deg_g = (127 - generator.leading_zeros()) as usize;
    let mut rem = bits.to_vec();
    let mut message = vec![false; dimension as usize];
    for i in (deg_g..rem.len()).rev() {
        if rem[i] {
            let shift = i - deg_g;
            message[shift] = true;
            for b in 0..=deg_g {
                if (generator >> b) & 1 == 1 {
                    rem[shift + b] ^= true;
                }
            }
        }
    }
    if rem.iter().any(|&b| b) {
        None
    } else {
        Some(message)
    }
}

fn render_text(r: &DecodeResults) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "code: n={} zero_set={:?} [{}, {}], table entries: {}",
        r.code.n, r.code.zero_set, r.code.length, r.code.dimension, r.table_entries
    );
    let _ = writeln!(out, "received:  {}", r.received_hex);
    match r.status {
        "corrected" => {
            let errs = r.error_support.as_deref().unwrap_or(&[]);
            let _ = writeln!(
                out,
                "corrected: {} ({} error{} at {:?})",
                r.corrected_hex.as_deref().unwrap_or("-"),
                errs.len(),
                if errs.len() == 1 { "" } else { "s" },
                errs
            );
            let _ = writeln!(out, "message:   {}", r.message_hex.as_deref().unwrap_or("-"));
        }
        _ => {
            let _ = writeln!(out, "uncorrectable: more than 3 errors from every codeword");
        }
    }
    out
}
