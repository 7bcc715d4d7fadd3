//! Exact arithmetic in GF(2^n) for 2 <= n <= 24.
//!
//! Elements are n-bit masks holding polynomial-basis coordinates. Each field
//! is defined by a fixed primitive polynomial from [`catalogue_poly`], so
//! element numbering (and hence every downstream report) is reproducible
//! across runs and machines. Fields with n <= 20 carry full log/antilog
//! tables; larger fields multiply through carry-less products.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::fmt;
use std::sync::Arc;

use crate::util::prime_factors;

pub const MIN_DEGREE: u32 = 2;
pub const MAX_DEGREE: u32 = 24;

/// Largest n for which log/antilog tables are built eagerly. The two tables
/// cost 2^(n+1) words, so n = 20 is 8 MiB and n = 24 would be 128 MiB.
const TABLE_DEGREE_LIMIT: u32 = 20;

/// Lowest-weight, numerically least primitive polynomial per degree,
/// indexed by n - 2. Verified by the order check in `FieldSpec::new`.
const PRIMITIVE_POLYS: [u32; 23] = [
    0x7,       // n=2:  x^2 + x + 1
    0xb,       // n=3:  x^3 + x + 1
    0x13,      // n=4:  x^4 + x + 1
    0x25,      // n=5:  x^5 + x^2 + 1
    0x43,      // n=6:  x^6 + x + 1
    0x83,      // n=7:  x^7 + x + 1
    0x11d,     // n=8:  x^8 + x^4 + x^3 + x^2 + 1
    0x211,     // n=9:  x^9 + x^4 + 1
    0x409,     // n=10: x^10 + x^3 + 1
    0x805,     // n=11: x^11 + x^2 + 1
    0x1053,    // n=12: x^12 + x^6 + x^4 + x + 1
    0x201b,    // n=13: x^13 + x^4 + x^3 + x + 1
    0x402b,    // n=14: x^14 + x^5 + x^3 + x + 1
    0x8003,    // n=15: x^15 + x + 1
    0x1002d,   // n=16: x^16 + x^5 + x^3 + x^2 + 1
    0x20009,   // n=17: x^17 + x^3 + 1
    0x40081,   // n=18: x^18 + x^7 + 1
    0x80027,   // n=19: x^19 + x^5 + x^2 + x + 1
    0x100009,  // n=20: x^20 + x^3 + 1
    0x200005,  // n=21: x^21 + x^2 + 1
    0x400003,  // n=22: x^22 + x + 1
    0x800021,  // n=23: x^23 + x^5 + 1
    0x100001b, // n=24: x^24 + x^4 + x^3 + x + 1
];

#[derive(Debug, thiserror::Error, PartialEq, Eq, Clone)]
pub enum FieldError {
    #[error("unsupported extension degree {0}: supported range is {MIN_DEGREE}..={MAX_DEGREE}")]
    UnsupportedDegree(u32),
    #[error("element mask {mask:#x} out of range for GF(2^{n})")]
    ElementOutOfRange { n: u32, mask: u32 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("0^0 is undefined")]
    ZeroPowZero,
    #[error("discrete logarithm of zero is undefined")]
    ZeroLog,
    #[error("polynomial {poly:#x} is not primitive over GF(2^{n})")]
    NotPrimitive { n: u32, poly: u32 },
}

/// The catalogued primitive polynomial for degree `n`, as an (n+1)-bit mask.
pub fn catalogue_poly(n: u32) -> Result<u32, FieldError> {
    if !(MIN_DEGREE..=MAX_DEGREE).contains(&n) {
        return Err(FieldError::UnsupportedDegree(n));
    }
    Ok(PRIMITIVE_POLYS[(n - MIN_DEGREE) as usize])
}

/// An element of GF(2^n): an n-bit mask of polynomial-basis coordinates.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElement(pub u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:x}", self.0)
    }
}

// Elements serialize as lowercase hex of the bit mask.
impl Serialize for FieldElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(&format_args!("{:x}", self.0))
    }
}

/// GF(2^n) with a fixed primitive polynomial; α is the class of x.
#[derive(Debug, Clone)]
pub struct FieldSpec {
    n: u32,
    prim_poly: u32,
    order: u64,
    log_table: Option<Vec<u32>>,
    antilog_table: Option<Vec<u32>>,
}

/// Builds the field GF(2^n) from the polynomial catalogue.
pub fn make_field(n: u32) -> Result<FieldSpec, FieldError> {
    FieldSpec::new(n)
}

/// `make_field` behind an `Arc`, for sharing across search workers.
pub fn make_field_arc(n: u32) -> Result<Arc<FieldSpec>, FieldError> {
    FieldSpec::new(n).map(Arc::new)
}

impl FieldSpec {
    pub fn new(n: u32) -> Result<Self, FieldError> {
        let prim_poly = catalogue_poly(n)?;
        let order = (1u64 << n) - 1;
        let mut field = FieldSpec {
            n,
            prim_poly,
            order,
            log_table: None,
            antilog_table: None,
        };
        if n <= TABLE_DEGREE_LIMIT {
            field.build_tables()?;
        } else if field.order_by_squaring(FieldElement(2)) != order {
            return Err(FieldError::NotPrimitive { n, poly: prim_poly });
        }
        Ok(field)
    }

    /// Walks α^0, α^1, ... filling both tables; a repeat before the full
    /// cycle means the catalogue polynomial is not primitive.
    fn build_tables(&mut self) -> Result<(), FieldError> {
        const UNSET: u32 = u32::MAX;
        let size = 1usize << self.n;
        let mut log = vec![UNSET; size];
        let mut antilog = vec![0u32; self.order as usize];
        let mut acc: u32 = 1;
        for e in 0..self.order as usize {
            if log[acc as usize] != UNSET {
                return Err(FieldError::NotPrimitive {
                    n: self.n,
                    poly: self.prim_poly,
                });
            }
            log[acc as usize] = e as u32;
            antilog[e] = acc;
            acc <<= 1;
            if acc >> self.n != 0 {
                acc ^= self.prim_poly;
            }
        }
        if acc != 1 {
            return Err(FieldError::NotPrimitive {
                n: self.n,
                poly: self.prim_poly,
            });
        }
        self.log_table = Some(log);
        self.antilog_table = Some(antilog);
        Ok(())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn prim_poly(&self) -> u32 {
        self.prim_poly
    }

    /// Multiplicative group order, 2^n - 1.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn has_tables(&self) -> bool {
        self.log_table.is_some()
    }

    pub fn element(&self, mask: u32) -> Result<FieldElement, FieldError> {
        if u64::from(mask) > self.order {
            return Err(FieldError::ElementOutOfRange { n: self.n, mask });
        }
        Ok(FieldElement(mask))
    }

    /// The primitive element α (the class of x).
    pub fn alpha(&self) -> FieldElement {
        FieldElement(2)
    }

    /// α^e with e reduced mod 2^n - 1. Total on u64 exponents, so column
    /// indices times zero-set exponents can be fed in directly.
    pub fn alpha_pow(&self, e: u64) -> FieldElement {
        let e = e % self.order;
        match &self.antilog_table {
            Some(t) => FieldElement(t[e as usize]),
            None => self.pow_square_multiply(FieldElement(2), e),
        }
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(a.0 ^ b.0)
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.is_zero() || b.is_zero() {
            return FieldElement::ZERO;
        }
        match (&self.log_table, &self.antilog_table) {
            (Some(log), Some(antilog)) => {
                let e = (u64::from(log[a.0 as usize]) + u64::from(log[b.0 as usize])) % self.order;
                FieldElement(antilog[e as usize])
            }
            _ => FieldElement(self.clmul_reduce(a.0, b.0)),
        }
    }

    /// a^e for any integer e; exponents reduce mod 2^n - 1 for nonzero a.
    /// 0^e is 0 for e > 0; 0^0 and negative powers of 0 are errors.
    pub fn pow(&self, a: FieldElement, e: i64) -> Result<FieldElement, FieldError> {
        if a.is_zero() {
            return match e {
                0 => Err(FieldError::ZeroPowZero),
                _ if e < 0 => Err(FieldError::ZeroInverse),
                _ => Ok(FieldElement::ZERO),
            };
        }
        let e = e.rem_euclid(self.order as i64) as u64;
        match (&self.log_table, &self.antilog_table) {
            (Some(log), Some(antilog)) => {
                let idx = (u64::from(log[a.0 as usize]) * e) % self.order;
                Ok(FieldElement(antilog[idx as usize]))
            }
            _ => Ok(self.pow_square_multiply(a, e)),
        }
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        if a.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        match (&self.log_table, &self.antilog_table) {
            (Some(log), Some(antilog)) => {
                let e = (self.order - u64::from(log[a.0 as usize])) % self.order;
                Ok(FieldElement(antilog[e as usize]))
            }
            _ => Ok(self.pow_square_multiply(a, self.order - 1)),
        }
    }

    /// a^(2^k), by k-fold squaring; k reduces mod n since Frobenius has order n.
    pub fn frobenius(&self, a: FieldElement, k: u32) -> FieldElement {
        if a.is_zero() {
            return FieldElement::ZERO;
        }
        let k = k % self.n;
        match (&self.log_table, &self.antilog_table) {
            (Some(log), Some(antilog)) => {
                let e = (u64::from(log[a.0 as usize]) << k) % self.order;
                FieldElement(antilog[e as usize])
            }
            _ => {
                let mut r = a;
                for _ in 0..k {
                    r = FieldElement(self.clmul_reduce(r.0, r.0));
                }
                r
            }
        }
    }

    /// Least t > 0 with a^t = 1; divides 2^n - 1.
    pub fn element_order(&self, a: FieldElement) -> Result<u64, FieldError> {
        if a.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        Ok(self.order_by_squaring(a))
    }

    fn order_by_squaring(&self, a: FieldElement) -> u64 {
        let mut t = self.order;
        for p in prime_factors(self.order) {
            while t % p == 0 && self.pow_square_multiply(a, t / p) == FieldElement::ONE {
                t /= p;
            }
        }
        t
    }

    /// Discrete log base α. Table lookup when available; otherwise a linear
    /// scan of the α-cycle, which is O(2^n) and meant for one-off use.
    pub fn log(&self, a: FieldElement) -> Result<u64, FieldError> {
        if a.is_zero() {
            return Err(FieldError::ZeroLog);
        }
        if let Some(log) = &self.log_table {
            return Ok(u64::from(log[a.0 as usize]));
        }
        let mut acc = FieldElement::ONE;
        for e in 0..self.order {
            if acc == a {
                return Ok(e);
            }
            acc = FieldElement(self.clmul_reduce(acc.0, 2));
        }
        unreachable!("every nonzero element is a power of alpha");
    }

    fn pow_square_multiply(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a.0;
        let mut acc: u32 = 1;
        while e != 0 {
            if e & 1 == 1 {
                acc = self.clmul_reduce(acc, base);
            }
            base = self.clmul_reduce(base, base);
            e >>= 1;
        }
        FieldElement(acc)
    }

    /// Carry-less 24x24-bit product reduced mod the primitive polynomial.
    fn clmul_reduce(&self, a: u32, b: u32) -> u32 {
        let mut prod: u64 = 0;
        let a = u64::from(a);
        let mut b = b;
        let mut shift = 0;
        while b != 0 {
            if b & 1 == 1 {
                prod ^= a << shift;
            }
            b >>= 1;
            shift += 1;
        }
        let p = u64::from(self.prim_poly);
        while prod >> self.n != 0 {
            let d = 63 - prod.leading_zeros();
            prod ^= p << (d - self.n);
        }
        prod as u32
    }
}

// FieldSpec serializes as {n, prim_poly (hex)}; tables are derived data.
impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("FieldSpec", 2)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("prim_poly", &format!("{:x}", self.prim_poly))?;
        s.end()
    }
}
