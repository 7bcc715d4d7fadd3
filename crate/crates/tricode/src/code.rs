//! Cyclic codes of length 2^n - 1 cut out by a zero set of exponents:
//! cyclotomic cosets, exact dimension, parity-check columns, syndromes,
//! generator polynomial, and a plain polynomial-multiplication encoder.
//!
//! Position j of a word corresponds to the field element α^j, so error
//! locations are literally field elements and the syndrome of a support set
//! is a tuple of power sums.

use serde::Serialize;
use std::sync::Arc;

use crate::field::{FieldElement, FieldError, FieldSpec, MAX_DEGREE, MIN_DEGREE};

/// H is materialized only up to this degree; 3n·(2^n - 1) bits is past any
/// sane memory budget well before n = 24. Larger n generate columns on the
/// fly (see the distance module).
pub const MATRIX_DEGREE_LIMIT: u32 = 16;

#[derive(Debug, thiserror::Error, PartialEq, Eq, Clone)]
pub enum CodeError {
    #[error("zero set must contain at least one exponent")]
    EmptyZeroSet,
    #[error("exponent {0} reduces to 0 mod 2^n - 1; the all-ones row is out of scope")]
    ZeroExponent(u64),
    #[error("zero set has {count} exponents after collapse; this operation needs exactly 3")]
    NotATriple { count: usize },
    #[error("field degree {field_n} does not match zero-set degree {zs_n}")]
    DegreeMismatch { field_n: u32, zs_n: u32 },
    #[error("parity-check matrix for n={n} exceeds the materialization limit n <= {MATRIX_DEGREE_LIMIT}")]
    MatrixTooLarge { n: u32 },
    #[error("message has {got} bits, dimension is {expected}")]
    MessageLengthMismatch { expected: u64, got: u64 },
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Closure of {e} under doubling mod 2^n - 1.
pub fn cyclotomic_coset(n: u32, e: u64) -> Vec<u64> {
    let order = (1u64 << n) - 1;
    let start = e % order.max(1);
    let mut coset = vec![start];
    let mut cur = (2 * start) % order;
    while cur != start {
        coset.push(cur);
        cur = (2 * cur) % order;
    }
    coset.sort_unstable();
    coset
}

/// The exponents whose cosets the generator polynomial vanishes on.
///
/// Construction reduces inputs mod 2^n - 1, sorts, and deduplicates. Two
/// exponents landing in the same cyclotomic coset define the same minimal
/// polynomial, so the set is collapsed to one representative per coset and
/// flagged whenever fewer cosets come out than exponents went in — nominal
/// triples can degenerate this way for particular (n, k), by outright
/// exponent collision or by coset sharing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroSet {
    n: u32,
    exponents: Vec<u64>,
    collapsed: bool,
}

impl ZeroSet {
    pub fn new(n: u32, exponents: &[u64]) -> Result<Self, CodeError> {
        if !(MIN_DEGREE..=MAX_DEGREE).contains(&n) {
            return Err(CodeError::Field(FieldError::UnsupportedDegree(n)));
        }
        if exponents.is_empty() {
            return Err(CodeError::EmptyZeroSet);
        }
        let requested = exponents.len();
        let order = (1u64 << n) - 1;
        let mut reduced: Vec<u64> = Vec::with_capacity(requested);
        for &e in exponents {
            let r = e % order;
            if r == 0 {
                return Err(CodeError::ZeroExponent(e));
            }
            reduced.push(r);
        }
        reduced.sort_unstable();
        reduced.dedup();
        let mut kept: Vec<u64> = Vec::with_capacity(reduced.len());
        let mut seen_cosets: Vec<u64> = Vec::with_capacity(reduced.len());
        for &e in &reduced {
            let leader = *cyclotomic_coset(n, e).first().unwrap();
            if !seen_cosets.contains(&leader) {
                seen_cosets.push(leader);
                kept.push(e);
            }
        }
        Ok(ZeroSet {
            n,
            collapsed: kept.len() < requested,
            exponents: kept,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// One exponent per coset, sorted ascending.
    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    /// True when the requested exponents yielded fewer distinct cosets than
    /// were asked for (equal after reduction, or sharing a coset).
    pub fn collapsed(&self) -> bool {
        self.collapsed
    }

    /// Sorted union of the cyclotomic cosets of all exponents.
    pub fn coset_union(&self) -> Vec<u64> {
        let mut union: Vec<u64> = self
            .exponents
            .iter()
            .flat_map(|&e| cyclotomic_coset(self.n, e))
            .collect();
        union.sort_unstable();
        union.dedup();
        union
    }
}

/// The canonical triple {1, 2^k + 1, 2^3k + 1} reduced mod 2^n - 1.
///
/// Since 2^n = 1 on exponents, k enters only through k mod n; for some
/// (n, k) the three nominal exponents share cosets and the set collapses
/// (e.g. n = 10, k = 5), which the returned `ZeroSet` flags.
pub fn triple_zero_set(n: u32, k: u64) -> Result<ZeroSet, CodeError> {
    if !(MIN_DEGREE..=MAX_DEGREE).contains(&n) {
        return Err(CodeError::Field(FieldError::UnsupportedDegree(n)));
    }
    let k1 = (k % u64::from(n)) as u32;
    let k3 = (3 * k1) % n;
    ZeroSet::new(n, &[1, (1u64 << k1) + 1, (1u64 << k3) + 1])
}

/// 2^n - 3n - 1, the generic dimension of a triple with three full cosets.
/// Negative for n <= 3, hence signed.
pub fn design_dimension(n: u32) -> i64 {
    (1i64 << n) - 3 * i64::from(n) - 1
}

/// Exact dimension (length minus the coset-union size) and whether it
/// differs from the generic 2^n - 3n - 1 formula (a "degenerate case").
pub fn code_dimension(zs: &ZeroSet) -> (u64, bool) {
    let length = (1u64 << zs.n) - 1;
    let dimension = length - zs.coset_union().len() as u64;
    let degenerate = dimension as i64 != design_dimension(zs.n);
    (dimension, degenerate)
}

/// Parity-check matrix of a zero-set triple {d1, d2, d3}: column j holds
/// (α^(j·d1), α^(j·d2), α^(j·d3)) packed little-endian into a u64, d1 in the
/// low n bits.
#[derive(Debug, Clone)]
pub struct ParityCheckMatrix {
    n: u32,
    exponents: [u64; 3],
    columns: Vec<u64>,
}

impl ParityCheckMatrix {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn exponents(&self) -> [u64; 3] {
        self.exponents
    }

    pub fn num_columns(&self) -> usize {
        self.columns.len()
    }

    /// The packed 3n-bit column mask.
    pub fn packed_column(&self, j: usize) -> u64 {
        self.columns[j]
    }

    pub fn column(&self, j: usize) -> [FieldElement; 3] {
        let mask = (1u64 << self.n) - 1;
        let c = self.columns[j];
        [
            FieldElement((c & mask) as u32),
            FieldElement((c >> self.n & mask) as u32),
            FieldElement((c >> (2 * self.n) & mask) as u32),
        ]
    }
}

/// Materializes H for a triple; n is capped by `MATRIX_DEGREE_LIMIT`.
pub fn build_parity_check(field: &FieldSpec, zs: &ZeroSet) -> Result<ParityCheckMatrix, CodeError> {
    if field.n() != zs.n {
        return Err(CodeError::DegreeMismatch {
            field_n: field.n(),
            zs_n: zs.n,
        });
    }
    if zs.exponents.len() != 3 {
        return Err(CodeError::NotATriple {
            count: zs.exponents.len(),
        });
    }
    if field.n() > MATRIX_DEGREE_LIMIT {
        return Err(CodeError::MatrixTooLarge { n: field.n() });
    }
    let n = field.n();
    let [d1, d2, d3] = [zs.exponents[0], zs.exponents[1], zs.exponents[2]];
    let columns = (0..field.order())
        .map(|j| {
            u64::from(field.alpha_pow(j * d1).bits())
                | u64::from(field.alpha_pow(j * d2).bits()) << n
                | u64::from(field.alpha_pow(j * d3).bits()) << (2 * n)
        })
        .collect();
    Ok(ParityCheckMatrix {
        n,
        exponents: [d1, d2, d3],
        columns,
    })
}

/// Power-sum syndrome of a support set: one Σ_j α^(j·e) per zero-set
/// exponent e. Empty support gives all zeros; a codeword's support gives
/// all zeros by definition of the null space.
pub fn syndrome(field: &FieldSpec, zs: &ZeroSet, support: &[u64]) -> Vec<FieldElement> {
    zs.exponents
        .iter()
        .map(|&e| {
            support
                .iter()
                .fold(FieldElement::ZERO, |acc, &j| {
                    field.add(acc, field.alpha_pow(j % field.order() * e))
                })
        })
        .collect()
}

/// Coefficient mask of g(x) = Π minimal polynomials over the zero set's
/// cosets; degree = |coset union| <= 3n <= 72, so a u128 holds it.
pub fn generator_polynomial(field: &FieldSpec, zs: &ZeroSet) -> Result<u128, CodeError> {
    if field.n() != zs.n {
        return Err(CodeError::DegreeMismatch {
            field_n: field.n(),
            zs_n: zs.n,
        });
    }
    let mut poly = vec![FieldElement::ONE];
    for &e in &zs.coset_union() {
        let root = field.alpha_pow(e);
        let mut next = vec![FieldElement::ZERO; poly.len() + 1];
        for (i, &c) in poly.iter().enumerate() {
            next[i + 1] = field.add(next[i + 1], c);
            next[i] = field.add(next[i], field.mul(c, root));
        }
        poly = next;
    }
    let mut mask = 0u128;
    for (i, &c) in poly.iter().enumerate() {
        match c.bits() {
            0 => {}
            1 => mask |= 1 << i,
            _ => unreachable!("coset union is Frobenius-closed, so coefficients lie in GF(2)"),
        }
    }
    Ok(mask)
}

/// A word of the code as its sorted set of nonzero positions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Codeword {
    pub support: Vec<u64>,
}

impl Codeword {
    pub fn weight(&self) -> usize {
        self.support.len()
    }
}

/// Serializable summary of a constructed code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodeSpec {
    pub n: u32,
    pub zero_set: Vec<u64>,
    pub length: u64,
    pub dimension: u64,
    pub design_formula_dim: i64,
    pub degenerate: bool,
    pub generator_poly: String,
}

/// A constructed code: field, zero set, generator, exact dimension.
#[derive(Debug, Clone)]
pub struct Code {
    field: Arc<FieldSpec>,
    zero_set: ZeroSet,
    generator: u128,
    dimension: u64,
    degenerate: bool,
}

impl Code {
    pub fn new(field: Arc<FieldSpec>, zero_set: ZeroSet) -> Result<Self, CodeError> {
        if field.n() != zero_set.n {
            return Err(CodeError::DegreeMismatch {
                field_n: field.n(),
                zs_n: zero_set.n,
            });
        }
        let generator = generator_polynomial(&field, &zero_set)?;
        let (dimension, degenerate) = code_dimension(&zero_set);
        debug_assert_eq!(
            dimension,
            field.order() - (127 - generator.leading_zeros()) as u64
        );
        Ok(Code {
            field,
            zero_set,
            generator,
            dimension,
            degenerate,
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn field_arc(&self) -> Arc<FieldSpec> {
        Arc::clone(&self.field)
    }

    pub fn zero_set(&self) -> &ZeroSet {
        &self.zero_set
    }

    pub fn length(&self) -> u64 {
        self.field.order()
    }

    pub fn dimension(&self) -> u64 {
        self.dimension
    }

    pub fn degenerate(&self) -> bool {
        self.degenerate
    }

    pub fn generator_poly(&self) -> u128 {
        self.generator
    }

    pub fn spec(&self) -> CodeSpec {
        CodeSpec {
            n: self.field.n(),
            zero_set: self.zero_set.exponents.clone(),
            length: self.length(),
            dimension: self.dimension,
            design_formula_dim: design_dimension(self.field.n()),
            degenerate: self.degenerate,
            generator_poly: format!("{:x}", self.generator),
        }
    }

    pub fn syndrome(&self, support: &[u64]) -> Vec<FieldElement> {
        syndrome(&self.field, &self.zero_set, support)
    }

    /// True iff the word polynomial is a multiple of g(x), checked through
    /// the coset-representative syndromes (Frobenius covers the rest of
    /// each coset).
    pub fn is_codeword(&self, support: &[u64]) -> bool {
        self.syndrome(support).iter().all(|s| s.is_zero())
    }

    /// Non-systematic encode: c(x) = m(x)·g(x), message bit i shifting g by i.
    pub fn encode(&self, message: &[bool]) -> Result<Codeword, CodeError> {
        if message.len() as u64 != self.dimension {
            return Err(CodeError::MessageLengthMismatch {
                expected: self.dimension,
                got: message.len() as u64,
            });
        }
        let len = self.length() as usize;
        let mut words = vec![0u64; len.div_ceil(64)];
        for (i, &bit) in message.iter().enumerate() {
            if bit {
                xor_shifted(&mut words, self.generator, i);
            }
        }
        let mut support = Vec::new();
        for (w, &word) in words.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                support.push((w * 64) as u64 + u64::from(bits.trailing_zeros()));
                bits &= bits - 1;
            }
        }
        Ok(Codeword { support })
    }
}

/// XORs the bits of `poly` into the bitset at offset `shift`.
pub(crate) fn xor_shifted(words: &mut [u64], poly: u128, shift: usize) {
    let mut p = poly;
    let mut base = shift;
    while p != 0 {
        let w = base / 64;
        let b = base % 64;
        words[w] ^= (p as u64) << b;
        if b != 0 {
            let spill = (p as u64) >> (64 - b);
            if spill != 0 {
                words[w + 1] ^= spill;
            }
        }
        p >>= 64;
        base += 64;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field_arc;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn zs(n: u32, exps: &[u64]) -> ZeroSet {
        ZeroSet::new(n, exps).unwrap()
    }

    /// x^e mod g over GF(2)[x], by square-and-multiply with shift-reduce.
    fn x_pow_mod(e: u64, g: u128) -> u128 {
        let dg = 127 - g.leading_zeros();
        let mul = |a: u128, b: u128| -> u128 {
            let mut acc = 0u128;
            let mut aa = a;
            let mut bb = b;
            while bb != 0 {
                if bb & 1 == 1 {
                    acc ^= aa;
                }
                bb >>= 1;
                aa <<= 1;
                if aa >> dg & 1 == 1 {
                    aa ^= g;
                }
            }
            acc
        };
        let mut acc = 1u128;
        let mut base = 2u128; // the polynomial x
        let mut e = e;
        while e != 0 {
            if e & 1 == 1 {
                acc = mul(acc, base);
            }
            base = mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn eval_poly(field: &FieldSpec, poly: u128, x: FieldElement) -> FieldElement {
        let mut acc = FieldElement::ZERO;
        for i in (0..128).rev() {
            acc = field.mul(acc, x);
            if poly >> i & 1 == 1 {
                acc = field.add(acc, FieldElement::ONE);
            }
        }
        acc
    }

    #[test]
    fn coset_examples() {
        assert_eq!(cyclotomic_coset(4, 5), vec![5, 10]);
        assert_eq!(cyclotomic_coset(4, 1), vec![1, 2, 4, 8]);
        assert_eq!(cyclotomic_coset(4, 0), vec![0]);
        assert_eq!(cyclotomic_coset(5, 3), vec![3, 6, 12, 17, 24]);
    }

    #[test]
    fn coset_members_share_minimal_polynomial() {
        let field = make_field_arc(6).unwrap();
        for e in 1..63u64 {
            let me = generator_polynomial(&field, &zs(6, &[e])).unwrap();
            let m2e = generator_polynomial(&field, &zs(6, &[2 * e % 63])).unwrap();
            assert_eq!(me, m2e, "e={e}");
        }
    }

    #[test]
    fn zero_set_construction() {
        let z = zs(5, &[5, 1, 3]);
        assert_eq!(z.exponents(), &[1, 3, 5]);
        assert!(!z.collapsed());

        // reduction mod 2^n - 1: 16 ≡ 1 is an exponent collision, flagged
        let z = zs(4, &[1, 16, 3]);
        assert_eq!(z.exponents(), &[1, 3]);
        assert!(z.collapsed());

        // 1 and 2 share a coset: collapsed, flagged
        let z = zs(4, &[1, 2, 5]);
        assert_eq!(z.exponents(), &[1, 5]);
        assert!(z.collapsed());

        assert_eq!(ZeroSet::new(4, &[]), Err(CodeError::EmptyZeroSet));
        assert_eq!(ZeroSet::new(4, &[15]), Err(CodeError::ZeroExponent(15)));
        assert!(matches!(
            ZeroSet::new(1, &[1]),
            Err(CodeError::Field(FieldError::UnsupportedDegree(1)))
        ));
    }

    #[test]
    fn triple_zero_set_examples() {
        let z = triple_zero_set(5, 1).unwrap();
        assert_eq!(z.exponents(), &[1, 3, 9]);
        assert!(!z.collapsed());

        // k enters mod n: k = 7 acts as k = 2 at n = 5, and 2^6+1 = 65 ≡ 3 (mod 31)
        let z = triple_zero_set(5, 7).unwrap();
        assert_eq!(z.exponents(), triple_zero_set(5, 2).unwrap().exponents());
        assert_eq!(z.exponents(), &[1, 3, 5]);
        assert!(!z.collapsed());

        // n = 10, k = 5: 2^5+1 = 33 and 2^15+1 ≡ 33 share an exponent
        let z = triple_zero_set(10, 5).unwrap();
        assert_eq!(z.exponents(), &[1, 33]);
        assert!(z.collapsed());

        assert!(matches!(
            triple_zero_set(1, 1),
            Err(CodeError::Field(FieldError::UnsupportedDegree(1)))
        ));
    }

    #[test]
    fn dimension_examples() {
        // three full cosets of size 5
        assert_eq!(code_dimension(&zs(5, &[1, 3, 5])), (16, false));
        assert_eq!(code_dimension(&zs(5, &[1, 3, 9])), (16, false));
        // coset of 5 mod 15 has size 2: dimension exceeds the formula
        assert_eq!(code_dimension(&zs(4, &[1, 3, 5])), (5, true));
        assert_eq!(design_dimension(4), 3);
        assert_eq!(design_dimension(2), -3);
    }

    #[test]
    fn parity_check_structure() {
        let field = make_field_arc(4).unwrap();
        let h = build_parity_check(&field, &zs(4, &[1, 3, 5])).unwrap();
        assert_eq!(h.num_columns(), 15);
        assert_eq!(
            h.column(0),
            [FieldElement::ONE, FieldElement::ONE, FieldElement::ONE]
        );
        let a = field.alpha();
        assert_eq!(
            h.column(1),
            [a, field.pow(a, 3).unwrap(), field.pow(a, 5).unwrap()]
        );
        // column 3: (α^3, α^9, α^15 = 1)
        assert_eq!(
            h.column(3),
            [
                field.pow(a, 3).unwrap(),
                field.pow(a, 9).unwrap(),
                FieldElement::ONE
            ]
        );
        // column j is the componentwise j-th power of column 1
        for j in 0..15 {
            let c1 = h.column(1);
            let cj = h.column(j);
            for t in 0..3 {
                assert_eq!(cj[t], field.pow(c1[t], j as i64).unwrap());
            }
        }
    }

    #[test]
    fn parity_check_guards() {
        let field = make_field_arc(4).unwrap();
        assert!(matches!(
            build_parity_check(&field, &zs(4, &[1, 3])),
            Err(CodeError::NotATriple { count: 2 })
        ));
        let field17 = make_field_arc(17).unwrap();
        assert!(matches!(
            build_parity_check(&field17, &zs(17, &[1, 3, 5])),
            Err(CodeError::MatrixTooLarge { n: 17 })
        ));
        assert!(matches!(
            build_parity_check(&field, &zs(5, &[1, 3, 5])),
            Err(CodeError::DegreeMismatch { field_n: 4, zs_n: 5 })
        ));
    }

    #[test]
    fn syndrome_basics() {
        let field = make_field_arc(5).unwrap();
        let z = zs(5, &[1, 3, 5]);
        assert!(syndrome(&field, &z, &[]).iter().all(|s| s.is_zero()));
        for j in 0..31u64 {
            let s = syndrome(&field, &z, &[j]);
            assert_eq!(s[0], field.alpha_pow(j));
            assert_eq!(s[1], field.alpha_pow(3 * j));
            assert_eq!(s[2], field.alpha_pow(5 * j));
            assert!(!s.iter().all(|v| v.is_zero()));
        }
    }

    #[test]
    fn syndrome_additive_under_symmetric_difference() {
        let field = make_field_arc(6).unwrap();
        let z = zs(6, &[1, 3, 5]);
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..100 {
            let a: Vec<u64> = (0..rng.gen_range(0..8)).map(|_| rng.gen_range(0..63)).collect();
            let b: Vec<u64> = (0..rng.gen_range(0..8)).map(|_| rng.gen_range(0..63)).collect();
            // symmetric difference via indicator XOR
            let mut ind = [false; 63];
            for &p in &a {
                ind[p as usize] ^= true;
            }
            for &p in &b {
                ind[p as usize] ^= true;
            }
            let sym: Vec<u64> = (0..63).filter(|&p| ind[p as usize]).collect();
            let sa = syndrome(&field, &z, &a);
            let sb = syndrome(&field, &z, &b);
            let ssym = syndrome(&field, &z, &sym);
            for t in 0..3 {
                assert_eq!(ssym[t], field.add(sa[t], sb[t]));
            }
        }
    }

    #[test]
    fn generator_examples() {
        let field = make_field_arc(4).unwrap();
        // minimal polynomial of α is the catalogue polynomial itself
        assert_eq!(
            generator_polynomial(&field, &zs(4, &[1])).unwrap(),
            u128::from(field.prim_poly())
        );
        let field5 = make_field_arc(5).unwrap();
        let g = generator_polynomial(&field5, &zs(5, &[1, 3, 5])).unwrap();
        assert_eq!(127 - g.leading_zeros(), 15); // degree 15 → dimension 16
    }

    #[test]
    fn generator_vanishes_on_cosets_and_divides_whole_space() {
        for n in 3..=10u32 {
            let field = make_field_arc(n).unwrap();
            let z = zs(n, &[1, 3, 5]);
            let g = generator_polynomial(&field, &z).unwrap();
            for e in z.coset_union() {
                assert_eq!(
                    eval_poly(&field, g, field.alpha_pow(e)),
                    FieldElement::ZERO,
                    "n={n} e={e}"
                );
            }
            // g | x^(2^n - 1) + 1  ⟺  x^(2^n - 1) ≡ 1 (mod g)
            assert_eq!(x_pow_mod(field.order(), g), 1, "n={n}");
        }
    }

    #[test]
    fn dimension_matches_generator_degree() {
        for n in 3..=10u32 {
            let field = make_field_arc(n).unwrap();
            for exps in [[1u64, 3, 5], [1, 3, 9], [1, 5, 9]] {
                let z = zs(n, &exps);
                let g = generator_polynomial(&field, &z).unwrap();
                let (dim, _) = code_dimension(&z);
                assert_eq!(
                    dim,
                    field.order() - u64::from(127 - g.leading_zeros()),
                    "n={n} {exps:?}"
                );
            }
        }
    }

    #[test]
    fn code_spec_shape() {
        let field = make_field_arc(4).unwrap();
        let code = Code::new(field, zs(4, &[1, 3, 5])).unwrap();
        assert_eq!(code.length(), 15);
        assert_eq!(code.dimension(), 5);
        assert!(code.degenerate());
        let json = serde_json::to_string(&code.spec()).unwrap();
        assert_eq!(
            json,
            r#"{"n":4,"zero_set":[1,3,5],"length":15,"dimension":5,"design_formula_dim":3,"degenerate":true,"generator_poly":"537"}"#
        );
    }

    #[test]
    fn encode_round_trip() {
        let field = make_field_arc(5).unwrap();
        let code = Code::new(field, zs(5, &[1, 3, 5])).unwrap();
        assert_eq!(code.dimension(), 16);

        let zero = code.encode(&[false; 16]).unwrap();
        assert!(zero.support.is_empty());
        assert!(code.is_codeword(&zero.support));

        // message = 1: the codeword is g itself
        let mut unit = [false; 16];
        unit[0] = true;
        let g_word = code.encode(&unit).unwrap();
        let g = code.generator_poly();
        let g_support: Vec<u64> = (0..128).filter(|&i| g >> i & 1 == 1).collect();
        assert_eq!(g_word.support, g_support);
        assert!(code.is_codeword(&g_word.support));

        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..200 {
            let msg: Vec<bool> = (0..16).map(|_| rng.gen_bool(0.5)).collect();
            let c = code.encode(&msg).unwrap();
            assert!(code.is_codeword(&c.support), "msg={msg:?}");
            // cyclic shift stays in the code
            let shifted: Vec<u64> = {
                let mut v: Vec<u64> = c.support.iter().map(|&p| (p + 1) % 31).collect();
                v.sort_unstable();
                v
            };
            assert!(code.is_codeword(&shifted));
        }

        assert_eq!(
            code.encode(&[false; 5]),
            Err(CodeError::MessageLengthMismatch { expected: 16, got: 5 })
        );
    }

    #[test]
    fn noncodewords_detected() {
        let field = make_field_arc(5).unwrap();
        let code = Code::new(field, zs(5, &[1, 3, 5])).unwrap();
        assert!(code.is_codeword(&[]));
        for j in 0..31u64 {
            assert!(!code.is_codeword(&[j]));
        }
        // min distance is 7 here, so no nonzero word of weight <= 4 passes
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for _ in 0..500 {
            let w = rng.gen_range(1..=4usize);
            let mut support: Vec<u64> = Vec::new();
            while support.len() < w {
                let p = rng.gen_range(0..31u64);
                if !support.contains(&p) {
                    support.push(p);
                }
            }
            support.sort_unstable();
            assert!(!code.is_codeword(&support), "{support:?}");
        }
    }

    #[test]
    fn collapsed_triple_flagged_honestly() {
        // n=6, k=2: {1, 2^2+1, 2^6+1 ≡ 2} — exponent 2 shares the coset of 1
        let z = zs(6, &[1, 5, 2]);
        assert!(z.collapsed());
        assert_eq!(z.exponents(), &[1, 5]);
        let field = make_field_arc(6).unwrap();
        assert!(matches!(
            build_parity_check(&field, &z),
            Err(CodeError::NotATriple { count: 2 })
        ));
    }

    #[test]
    fn codeword_serializes_as_support_array() {
        let w = Codeword { support: vec![0, 21, 42] };
        assert_eq!(serde_json::to_string(&w).unwrap(), "[0,21,42]");
        assert_eq!(w.weight(), 3);
    }
}
