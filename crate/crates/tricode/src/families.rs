//! The five known triple families, with their admissibility conditions and
//! structural row data (zero set, dimension, flags) for the table command.
//!
//! Each family is a parameterized triple of exponents; its conditions column
//! (a gcd constraint and/or a parity constraint on n) decides which
//! parameters are admissible at a given degree. Condition-satisfying rows
//! can still degenerate — exponents may collide or share cyclotomic cosets
//! for particular (n, k) — so rows carry the collapsed/degenerate flags and
//! any construction error instead of being silently dropped.

use serde::Serialize;

use crate::code::{code_dimension, ZeroSet};
use crate::field::{MAX_DEGREE, MIN_DEGREE};
use crate::util::gcd;

/// Static description of one family: the shape of its triple and the
/// conditions under which it is claimed to reach d = 7.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FamilyDef {
    pub id: u8,
    pub triple_form: &'static str,
    pub conditions: &'static str,
    pub param_name: &'static str,
}

/// The five families, ids 1..=5.
pub static FAMILIES: [FamilyDef; 5] = [
    FamilyDef {
        id: 1,
        triple_form: "{1, 2^k+1, 2^(2k)+1}",
        conditions: "gcd(n,k) = 1, any n",
        param_name: "k",
    },
    FamilyDef {
        id: 2,
        triple_form: "{1, 2^k+1, 2^(3k)+1}",
        conditions: "gcd(n,k) = 1, n odd",
        param_name: "k",
    },
    FamilyDef {
        id: 3,
        triple_form: "{1, 2^t+1, 2^(t+2)+3}",
        conditions: "n = 2t+1, n odd",
        param_name: "t",
    },
    FamilyDef {
        id: 4,
        triple_form: "{2^k+1, 2^(3k)+1, 2^(5k)+1}",
        conditions: "gcd(n,k) = 1, n odd",
        param_name: "k",
    },
    FamilyDef {
        id: 5,
        triple_form: "{1, 2^t+1, 2^(t-1)+1}",
        conditions: "n = 2t+1, n odd",
        param_name: "t",
    },
];

/// One table row: a family instantiated at (n, param), with the structural
/// outcome of building its zero set. Distance certificates are attached by
/// the caller (they need a search budget); everything here is exact and
/// cheap.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyRow {
    pub family: u8,
    pub triple_form: &'static str,
    pub conditions: &'static str,
    pub conditions_met: bool,
    pub n: u32,
    pub param_name: &'static str,
    pub param: u64,
    pub exponents: [u64; 3],
    pub zero_set: Option<Vec<u64>>,
    pub collapsed: bool,
    pub dimension: Option<u64>,
    pub degenerate: bool,
    pub error: Option<String>,
}

/// The three exponents of family `id` at degree n with parameter k or t,
/// with powers of 2 pre-reduced mod n (legal since 2^n = 1 on exponents);
/// the +3 tail of family 3 is reduced later, mod 2^n − 1, by `ZeroSet`.
pub fn family_exponents(id: u8, n: u32, param: u64) -> [u64; 3] {
    let nn = u64::from(n);
    let p = |a: u64| 1u64 << (a % nn);
    let pm = param % nn;
    match id {
        1 => [1, p(pm) + 1, p(2 * pm) + 1],
        2 => [1, p(pm) + 1, p(3 * pm) + 1],
        3 => [1, p(pm) + 1, p(pm + 2) + 3],
        4 => [p(pm) + 1, p(3 * pm) + 1, p(5 * pm) + 1],
        5 => [1, p(pm) + 1, p((pm + nn - 1) % nn) + 1],
        _ => panic!("family id {id} out of range 1..=5"),
    }
}

/// Parameters satisfying the family's conditions column at degree n:
/// every k < n coprime to n for the gcd families (subject to their parity
/// constraint on n), and the single t = (n−1)/2 for the n = 2t+1 families.
pub fn admissible_params(id: u8, n: u32) -> Vec<u64> {
    let coprime = || {
        (1..u64::from(n))
            .filter(|&k| gcd(k, u64::from(n)) == 1)
            .collect()
    };
    match id {
        1 => coprime(),
        2 | 4 if n % 2 == 1 => coprime(),
        3 | 5 if n % 2 == 1 && n >= 3 => vec![u64::from((n - 1) / 2)],
        2..=5 => Vec::new(),
        _ => panic!("family id {id} out of range 1..=5"),
    }
}

/// All admissible rows of the five-family table at degree n, in family
/// order then parameter order.
pub fn family_rows(n: u32) -> Vec<FamilyRow> {
    let mut rows = Vec::new();
    for def in &FAMILIES {
        for param in admissible_params(def.id, n) {
            let exponents = family_exponents(def.id, n, param);
            let row = match ZeroSet::new(n, &exponents) {
                Ok(zs) => {
                    let (dimension, degenerate) = code_dimension(&zs);
                    FamilyRow {
                        family: def.id,
                        triple_form: def.triple_form,
                        conditions: def.conditions,
                        conditions_met: true,
                        n,
                        param_name: def.param_name,
                        param,
                        exponents,
                        zero_set: Some(zs.exponents().to_vec()),
                        collapsed: zs.collapsed(),
                        dimension: Some(dimension),
                        degenerate,
                        error: None,
                    }
                }
                Err(e) => FamilyRow {
                    family: def.id,
                    triple_form: def.triple_form,
                    conditions: def.conditions,
                    conditions_met: true,
                    n,
                    param_name: def.param_name,
                    param,
                    exponents,
                    zero_set: None,
                    collapsed: false,
                    dimension: None,
                    degenerate: false,
                    error: Some(e.to_string()),
                },
            };
            rows.push(row);
        }
    }
    rows
}

/// Smallest degree at which the family yields at least one genuine
/// (three distinct cosets, nothing collapsed) zero set under its own
/// conditions. None only if no degree in range works.
pub fn smallest_admissible_n(id: u8) -> Option<u32> {
    (MIN_DEGREE..=MAX_DEGREE).find(|&n| {
        admissible_params(id, n).iter().any(|&param| {
            ZeroSet::new(n, &family_exponents(id, n, param))
                .map(|zs| !zs.collapsed() && zs.exponents().len() == 3)
                .unwrap_or(false)
        })
    })
}
