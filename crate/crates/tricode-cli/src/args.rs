//! Shared argument parsing: degree ranges and hex bit strings.

use std::fmt;
use std::str::FromStr;

/// Inclusive range of field degrees. Accepts `5`, `4..10` (half-open) and
/// `4..=10` (inclusive).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NRange {
    pub start: u32,
    pub end: u32,
}

impl NRange {
    pub fn iter(self) -> std::ops::RangeInclusive<u32> {
        self.start..=self.end
    }
}

impl fmt::Display for NRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.start == self.end {
            write!(f, "{}", self.start)
        } else {
            write!(f, "{}..={}", self.start, self.end)
        }
    }
}

impl serde::Serialize for NRange {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bound = |t: &str| -> Result<u32, String> {
            t.trim()
                .parse::<u32>()
                .map_err(|_| format!("invalid degree `{t}`"))
        };
        if let Some((a, b)) = s.split_once("..=") {
            let (start, end) = (bound(a)?, bound(b)?);
            if start > end {
                return Err(format!("empty range `{s}`"));
            }
            Ok(NRange { start, end })
        } else if let Some((a, b)) = s.split_once("..") {
            let (start, end_excl) = (bound(a)?, bound(b)?);
            if end_excl <= start {
                return Err(format!("empty range `{s}`"));
            }
            Ok(NRange {
                start,
                end: end_excl - 1,
            })
        } else {
            let v = bound(s)?;
            Ok(NRange { start: v, end: v })
        }
    }
}

/// Parses a hex bit string into `len` bits with the LSB of the hex number
/// at position 0: the digit written last is the least significant, and bit
/// i of the value is position i of the word. An optional `0x` prefix is
/// accepted; bits set at or beyond `len` are an error.
pub fn parse_hex_bits(s: &str, len: u64) -> Result<Vec<bool>, String> {
    let t = s.trim();
    let t = t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")).unwrap_or(t);
    if t.is_empty() {
        return Err("empty hex string".to_string());
    }
    let mut bits = vec![false; len as usize];
    for (i, ch) in t.chars().rev().enumerate() {
        let v = ch
            .to_digit(16)
            .ok_or_else(|| format!("invalid hex digit `{ch}`"))? as u64;
        for b in 0..4 {
            if v & (1 << b) != 0 {
                let pos = 4 * i as u64 + b;
                if pos >= len {
                    return Err(format!("bit {pos} set beyond word length {len}"));
                }
                bits[pos as usize] = true;
            }
        }
    }
    Ok(bits)
}

/// Renders bits (LSB = position 0) as fixed-width lowercase hex,
/// ceil(len/4) digits, most significant digit first.
pub fn render_hex_bits(bits: &[bool]) -> String {
    let digits = bits.len().div_ceil(4).max(1);
    let mut out = String::with_capacity(digits);
    for i in (0..digits).rev() {
        let mut v = 0u32;
        for b in 0..4 {
            let pos = 4 * i + b;
            if pos < bits.len() && bits[pos] {
                v |= 1 << b;
            }
        }
        out.push(char::from_digit(v, 16).expect("nibble"));
    }
    out
}

/// Expands a sorted support into a bit vector of the given length.
pub fn support_to_bits(support: &[u64], len: u64) -> Vec<bool> {
    let mut bits = vec![false; len as usize];
    for &p in support {
        bits[p as usize] = true;
    }
    bits
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nrange_forms() {
        assert_eq!("5".parse::<NRange>().unwrap(), NRange { start: 5, end: 5 });
        assert_eq!(
            "4..10".parse::<NRange>().unwrap(),
            NRange { start: 4, end: 9 }
        );
        assert_eq!(
            "4..=10".parse::<NRange>().unwrap(),
            NRange { start: 4, end: 10 }
        );
        assert!("10..4".parse::<NRange>().is_err());
        assert!("4..4".parse::<NRange>().is_err());
        assert!("x".parse::<NRange>().is_err());
        assert_eq!("4..=10".parse::<NRange>().unwrap().to_string(), "4..=10");
        assert_eq!("7".parse::<NRange>().unwrap().to_string(), "7");
    }

    #[test]
    fn hex_round_trip() {
        // 15 bits, positions {0, 1, 14} -> 0b100_0000_0000_0011 = 0x4003.
        let bits = parse_hex_bits("4003", 15).unwrap();
        let mut expect = vec![false; 15];
        expect[0] = true;
        expect[1] = true;
        expect[14] = true;
        assert_eq!(bits, expect);
        assert_eq!(render_hex_bits(&bits), "4003");
        // 0x prefix and upper case digits are accepted.
        assert_eq!(parse_hex_bits("0x4003", 15).unwrap(), expect);
        assert_eq!(parse_hex_bits("0X4003", 15).unwrap(), expect);
        // Out-of-range bit refused: bit 15 of a 15-bit word.
        assert!(parse_hex_bits("8000", 15).is_err());
        assert!(parse_hex_bits("zz", 15).is_err());
        assert!(parse_hex_bits("", 15).is_err());
        // Short strings are zero-extended.
        let short = parse_hex_bits("3", 15).unwrap();
        assert_eq!(render_hex_bits(&short), "0003");
    }

    #[test]
    fn support_expansion() {
        let bits = support_to_bits(&[0, 21, 42], 63);
        assert_eq!(bits.iter().filter(|&&b| b).count(), 3);
        assert!(bits[0] && bits[21] && bits[42]);
        assert_eq!(render_hex_bits(&bits).len(), 16);
    }
}
