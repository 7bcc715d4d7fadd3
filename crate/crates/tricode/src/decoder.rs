//! Syndrome-table decoder correcting up to 3 errors.
//!
//! For a code with d ≥ 7, distinct error patterns of weight ≤ 3 have
//! distinct syndromes (two equal ones would subtract to a nonzero codeword
//! of weight ≤ 6), so a complete table over all ≤ 3-subsets of positions is
//! an exact decoder. Building the table therefore doubles as a d ≤ 6
//! detector: any duplicate syndrome aborts with the offending pair.
//!
//! The table is a sorted flat vector of packed (syndrome, support) words —
//! with m zero-set exponents at degree n, the syndrome needs m·n bits and
//! the support 3 slots of n bits each (empty slots hold an all-ones
//! sentinel, which no position 0 ≤ j ≤ 2^n − 2 can collide with).

use serde::Serialize;

use crate::code::{Code, CodeError, Codeword};
use crate::field::{FieldElement, FieldError};
use crate::util::binomial;

/// Hard cap on the table: 1 + C(N,1) + C(N,2) + C(N,3) entries at
/// N = 2^10 − 1 is ≈ 1.8·10^8 packed words (~1.4 GiB), the edge of desk
/// scale; n = 11 would be eight times that.
pub const DECODER_DEGREE_LIMIT: u32 = 10;

#[derive(Debug, thiserror::Error, PartialEq, Eq, Clone)]
pub enum DecoderError {
    #[error("syndrome table for n = {n} exceeds the n <= {limit} size budget")]
    DegreeBudget { n: u32, limit: u32 },
    #[error("packed table entry would need {bits} bits > 64 (too many exponents for this degree)")]
    EntryTooWide { bits: u32 },
    #[error(
        "error patterns {first:?} and {second:?} share a syndrome, so their \
         difference is a nonzero codeword of weight <= 6: d <= 6 and \
         3-error decoding is impossible"
    )]
    DuplicateSyndrome { first: Vec<u64>, second: Vec<u64> },
    #[error("received word has {got} bits, code length is {expected}")]
    LengthMismatch { expected: u64, got: u64 },
    #[error("table was built for n = {table_n}, zero set {table_exponents:?}, not for this code")]
    TableMismatch {
        table_n: u32,
        table_exponents: Vec<u64>,
    },
    #[error("no codeword within 3 flips of the received word (more than 3 errors)")]
    Uncorrectable,
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Complete injective syndrome → error-support map for weights 0..=3.
#[derive(Debug, Clone)]
pub struct SyndromeTable {
    n: u32,
    exponents: Vec<u64>,
    position_bits: u32,
    entries: Vec<u64>,
}

/// A successful correction: the nearest codeword and the flipped positions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decoded {
    pub codeword: Codeword,
    pub error_support: Vec<u64>,
}

impl SyndromeTable {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    /// Number of (syndrome, support) entries: Σ_{i=0..3} C(2^n − 1, i).
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn sentinel(&self) -> u64 {
        (1u64 << self.n) - 1
    }

    /// Packed syndrome key for a support's power sums, exponent i at bits i·n.
    fn key(&self, syndrome: &[FieldElement]) -> u64 {
        syndrome
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, s)| acc | (u64::from(s.bits()) << (i as u32 * self.n)))
    }

    /// The error support stored under a packed syndrome key, if any.
    pub fn lookup(&self, key: u64) -> Option<Vec<u64>> {
        let probe = key << self.position_bits;
        let idx = self.entries.partition_point(|&e| e < probe);
        let entry = *self.entries.get(idx)?;
        if entry >> self.position_bits != key {
            return None;
        }
        let mask = self.sentinel();
        let mut support = Vec::with_capacity(3);
        for slot in 0..3 {
            let p = (entry >> (slot * self.n)) & mask;
            if p != mask {
                support.push(p);
            }
        }
        Some(support)
    }
}

fn unpack_support(entry: u64, n: u32) -> Vec<u64> {
    let mask = (1u64 << n) - 1;
    (0..3)
        .filter_map(|slot| {
            let p = (entry >> (slot * n)) & mask;
            (p != mask).then_some(p)
        })
        .collect()
}

/// Enumerate every error pattern of weight ≤ 3, sort by syndrome, and verify
/// injectivity. A duplicate syndrome is returned as `DuplicateSyndrome` with
/// the two supports — a constructive proof that d ≤ 6.
pub fn build_syndrome_table(code: &Code) -> Result<SyndromeTable, DecoderError> {
    let field = code.field();
    let n = field.n();
    if n > DECODER_DEGREE_LIMIT {
        return Err(DecoderError::DegreeBudget {
            n,
            limit: DECODER_DEGREE_LIMIT,
        });
    }
    let exponents = code.zero_set().exponents().to_vec();
    let m = exponents.len() as u32;
    let syndrome_bits = m * n;
    let position_bits = 3 * n;
    if syndrome_bits + position_bits > 64 {
        return Err(DecoderError::EntryTooWide {
            bits: syndrome_bits + position_bits,
        });
    }
    let order = code.length();
    let length = order as usize;
    let sentinel = (1u64 << n) - 1;

    // per-position packed column syndromes; multi-error syndromes XOR these
    let cols: Vec<u64> = (0..order)
        .map(|j| {
            exponents
                .iter()
                .enumerate()
                .fold(0u64, |acc, (i, &e)| {
                    acc | (u64::from(field.alpha_pow(j * e).bits()) << (i as u32 * n))
                })
        })
        .collect();

    let capacity = 1 + binomial(order, 1) + binomial(order, 2) + binomial(order, 3);
    let mut entries: Vec<u64> = Vec::with_capacity(capacity as usize);
    let empty_slots = sentinel | (sentinel << n) | (sentinel << (2 * n));
    entries.push(empty_slots); // weight 0: syndrome 0, no positions
    for j0 in 0..length {
        let s0 = cols[j0] << position_bits;
        let p0 = j0 as u64 | (sentinel << n) | (sentinel << (2 * n));
        entries.push(s0 | p0);
        for j1 in j0 + 1..length {
            let s1 = s0 ^ (cols[j1] << position_bits);
            let p1 = j0 as u64 | ((j1 as u64) << n) | (sentinel << (2 * n));
            entries.push(s1 | p1);
            for j2 in j1 + 1..length {
                let s2 = s1 ^ (cols[j2] << position_bits);
                let p2 = j0 as u64 | ((j1 as u64) << n) | ((j2 as u64) << (2 * n));
                entries.push(s2 | p2);
            }
        }
    }
    debug_assert_eq!(entries.len() as u64, capacity);

    entries.sort_unstable();
    for w in 1..entries.len() {
        if entries[w] >> position_bits == entries[w - 1] >> position_bits {
            return Err(DecoderError::DuplicateSyndrome {
                first: unpack_support(entries[w - 1], n),
                second: unpack_support(entries[w], n),
            });
        }
    }

    Ok(SyndromeTable {
        n,
        exponents,
        position_bits,
        entries,
    })
}

/// Correct up to 3 errors: look the received word's syndrome up and flip the
/// listed positions. A missing syndrome proves the word is more than 3 flips
/// from every codeword.
pub fn decode(
    code: &Code,
    table: &SyndromeTable,
    received: &[bool],
) -> Result<Decoded, DecoderError> {
    if table.n != code.field().n() || table.exponents != code.zero_set().exponents() {
        return Err(DecoderError::TableMismatch {
            table_n: table.n,
            table_exponents: table.exponents.clone(),
        });
    }
    if received.len() as u64 != code.length() {
        return Err(DecoderError::LengthMismatch {
            expected: code.length(),
            got: received.len() as u64,
        });
    }
    let support: Vec<u64> = received
        .iter()
        .enumerate()
        .filter_map(|(j, &bit)| bit.then_some(j as u64))
        .collect();
    let key = table.key(&code.syndrome(&support));
    let error_support = table.lookup(key).ok_or(DecoderError::Uncorrectable)?;
    // corrected word = received Δ errors; both lists are sorted
    let mut corrected: Vec<u64> = support
        .iter()
        .copied()
        .filter(|p| !error_support.contains(p))
        .collect();
    corrected.extend(error_support.iter().filter(|p| !support.contains(p)));
    corrected.sort_unstable();
    debug_assert!(code.is_codeword(&corrected));
    Ok(Decoded {
        codeword: Codeword { support: corrected },
        error_support,
    })
}
