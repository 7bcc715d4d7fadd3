//! Root counting for GF(2)-linear ("linearized") polynomials and the two
//! special equation families the distance argument reduces to.
//!
//! A linearized polynomial f(x) = Σ r_i x^(2^(s·i)) is a GF(2)-linear map on
//! GF(2^n), so its roots form a subspace and counting them is a rank
//! computation. The quartic-style equation x^(2^k+1) + b x^(2^k) + c x = d is
//! not linear; its solution count is bounded by 3 whenever gcd(k, n) = 1, and
//! we establish counts for it by plain enumeration.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::field::{make_field, FieldElement, FieldError, FieldSpec};
use crate::util::gcd;

#[derive(Debug, thiserror::Error, PartialEq, Eq, Clone)]
pub enum LinearizedError {
    #[error("linearized polynomial needs at least one coefficient")]
    EmptyCoefficients,
    #[error("stride must be >= 1")]
    ZeroStride,
    #[error("the polynomial is the zero map: all 2^n field elements are roots")]
    IdenticallyZeroMap,
    #[error("gcd({value}, {n}) != 1: {role} must be coprime to the extension degree")]
    NotCoprime {
        role: &'static str,
        value: u32,
        n: u32,
    },
    #[error("beta must be nonzero in the theorem reductions")]
    ZeroBeta,
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// f(x) = Σ_{i=0}^{d} coeffs[i] · x^(2^(s·i)), stride s >= 1.
///
/// The highest stored coefficient may be zero; degree bookkeeping always uses
/// the largest index with a nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearizedPoly {
    pub s: u32,
    pub coeffs: Vec<FieldElement>,
}

impl LinearizedPoly {
    pub fn new(s: u32, coeffs: Vec<FieldElement>) -> Result<Self, LinearizedError> {
        if s == 0 {
            return Err(LinearizedError::ZeroStride);
        }
        if coeffs.is_empty() {
            return Err(LinearizedError::EmptyCoefficients);
        }
        Ok(LinearizedPoly { s, coeffs })
    }

    /// Largest i with coeffs[i] != 0; None for the zero polynomial.
    pub fn degree_index(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|r| !r.is_zero())
    }
}

/// The equation x^(2^k + 1) + b·x^(2^k) + c·x = d.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BluherInstance {
    pub k: u32,
    pub b: FieldElement,
    pub c: FieldElement,
    pub d: FieldElement,
}

/// Coefficients (β, γ) of the two reduced equations that appear after
/// translating the three-term syndrome system; β must be nonzero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReductionParams {
    pub k: u32,
    pub beta: FieldElement,
    pub gamma: FieldElement,
}

/// Outcome of a bound check: the claimed bound, the largest count actually
/// observed over the instances examined, and whether the bound held.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct BoundReport {
    pub n: u32,
    pub k_or_s: u32,
    pub bound: u64,
    pub max_observed: u64,
    pub samples: u64,
    pub seed: Option<u64>,
    pub holds: bool,
}

/// Σ r_i · x^(2^(s·i)), evaluated through Frobenius powers.
pub fn eval_linearized(field: &FieldSpec, f: &LinearizedPoly, x: FieldElement) -> FieldElement {
    let n = u64::from(field.n());
    let mut acc = FieldElement::ZERO;
    for (i, &r) in f.coeffs.iter().enumerate() {
        if r.is_zero() {
            continue;
        }
        let k = ((u64::from(f.s) * i as u64) % n) as u32;
        acc = field.add(acc, field.mul(r, field.frobenius(x, k)));
    }
    acc
}

/// Exact number of roots of f in GF(2^n).
///
/// The roots form the kernel of a GF(2)-linear map, so the count is
/// 2^(n - rank) of the n×n matrix whose columns are the images of the
/// polynomial basis. The identically-zero map (every element a root) is
/// reported as an error rather than a count.
pub fn linearized_root_count(
    field: &FieldSpec,
    f: &LinearizedPoly,
) -> Result<u64, LinearizedError> {
    if f.coeffs.is_empty() {
        return Err(LinearizedError::EmptyCoefficients);
    }
    let n = field.n();
    let mut basis = [0u32; 32];
    let mut rank = 0u32;
    for j in 0..n {
        let mut v = eval_linearized(field, f, FieldElement(1 << j)).bits();
        while v != 0 {
            let h = (31 - v.leading_zeros()) as usize;
            if basis[h] == 0 {
                basis[h] = v;
                rank += 1;
                break;
            }
            v ^= basis[h];
        }
    }
    if rank == 0 {
        return Err(LinearizedError::IdenticallyZeroMap);
    }
    Ok(1u64 << (n - rank))
}

/// Checks the degree bound: when gcd(s, n) = 1, f has at most 2^d roots,
/// d being the largest index with a nonzero coefficient. A report with
/// `holds: false` is a fatal library defect, not a mathematical discovery.
pub fn lemma1_check(field: &FieldSpec, f: &LinearizedPoly) -> Result<BoundReport, LinearizedError> {
    let n = field.n();
    if gcd(u64::from(f.s), u64::from(n)) != 1 {
        return Err(LinearizedError::NotCoprime {
            role: "stride s",
            value: f.s,
            n,
        });
    }
    let d = f
        .degree_index()
        .ok_or(LinearizedError::IdenticallyZeroMap)?;
    let count = linearized_root_count(field, f)?;
    let bound = if d >= 63 { u64::MAX } else { 1u64 << d };
    Ok(BoundReport {
        n,
        k_or_s: f.s,
        bound,
        max_observed: count,
        samples: 1,
        seed: None,
        holds: count <= bound,
    })
}

/// Exact number of solutions of x^(2^k+1) + b·x^(2^k) + c·x = d, by full
/// enumeration of GF(2^n). Defined for any k; the ≤ 3 bound only applies
/// when gcd(k, n) = 1.
pub fn bluher_count(field: &FieldSpec, inst: &BluherInstance) -> u64 {
    let mut count = 0;
    for mask in 0..=field.order() as u32 {
        let x = FieldElement(mask);
        let xk = field.frobenius(x, inst.k);
        let lhs = field.add(
            field.add(field.mul(xk, x), field.mul(inst.b, xk)),
            field.mul(inst.c, x),
        );
        if lhs == inst.d {
            count += 1;
        }
    }
    count
}

/// Samples `samples` pseudorandom (b, c, d) triples from `seed`, plus every
/// triple with entries in {0, 1}, and reports the largest solution count
/// seen. Requires gcd(k, n) = 1, the hypothesis under which 3 is the bound.
pub fn lemma2_check(n: u32, k: u32, samples: u64, seed: u64) -> Result<BoundReport, LinearizedError> {
    if gcd(u64::from(k), u64::from(n)) != 1 {
        return Err(LinearizedError::NotCoprime {
            role: "Frobenius exponent k",
            value: k,
            n,
        });
    }
    let field = make_field(n)?;
    let mut max_observed = 0u64;
    let corners = [FieldElement::ZERO, FieldElement::ONE];
    for b in corners {
        for c in corners {
            for d in corners {
                let inst = BluherInstance { k, b, c, d };
                max_observed = max_observed.max(bluher_count(&field, &inst));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let top = field.order() as u32;
    for _ in 0..samples {
        let inst = BluherInstance {
            k,
            b: FieldElement(rng.gen_range(0..=top)),
            c: FieldElement(rng.gen_range(0..=top)),
            d: FieldElement(rng.gen_range(0..=top)),
        };
        max_observed = max_observed.max(bluher_count(&field, &inst));
    }
    Ok(BoundReport {
        n,
        k_or_s: k,
        bound: 3,
        max_observed,
        samples,
        seed: Some(seed),
        holds: max_observed <= 3,
    })
}

/// Number of roots of β·x^(2^(2k)) + γ·x^(2^k) + β^(2^k)·x. This is a
/// degree-2 linearized polynomial with stride k, so the count is ≤ 4
/// whenever gcd(k, n) = 1.
pub fn theorem1_reduction_count(
    field: &FieldSpec,
    p: &ReductionParams,
) -> Result<u64, LinearizedError> {
    if p.beta.is_zero() {
        return Err(LinearizedError::ZeroBeta);
    }
    let f = LinearizedPoly::new(
        p.k,
        vec![field.frobenius(p.beta, p.k), p.gamma, p.beta],
    )?;
    linearized_root_count(field, &f)
}

/// Number of roots of β·r^(2^k+1) + β^(2^k)·r^(2^k) + γ·r + β^(2^(2k)),
/// by full enumeration. Dividing through by β turns this into a
/// `BluherInstance`, so the count is ≤ 3 whenever gcd(k, n) = 1; the
/// enumeration here works on the un-normalized form directly.
pub fn theorem2_reduction_count(
    field: &FieldSpec,
    p: &ReductionParams,
) -> Result<u64, LinearizedError> {
    if p.beta.is_zero() {
        return Err(LinearizedError::ZeroBeta);
    }
    let k = p.k % field.n();
    let bk = field.frobenius(p.beta, k);
    let b2k = field.frobenius(p.beta, 2 * k);
    let mut count = 0;
    for mask in 0..=field.order() as u32 {
        let r = FieldElement(mask);
        let rk = field.frobenius(r, k);
        let v = field.add(
            field.add(field.mul(p.beta, field.mul(rk, r)), field.mul(bk, rk)),
            field.add(field.mul(p.gamma, r), b2k),
        );
        if v.is_zero() {
            count += 1;
        }
    }
    Ok(count)
}

/// Whether r = x^(2^(2k) - 1) is one-to-one on nonzero elements of GF(2^n),
/// i.e. gcd(2^(2k) - 1, 2^n - 1) = 1. True exactly when gcd(2k, n) = 1,
/// which forces n odd.
pub fn substitution_bijectivity(n: u32, k: u32) -> bool {
    let a = 2 * u64::from(k);
    if a >= 64 {
        // gcd(2^a - 1, 2^b - 1) = 2^gcd(a,b) - 1, so test the exponent gcd.
        return gcd(a, u64::from(n)) == 1;
    }
    gcd((1u64 << a) - 1, (1u64 << n) - 1) == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(m: u32) -> FieldElement {
        FieldElement(m)
    }

    /// Count roots the slow way: try every element.
    fn brute_force_roots(field: &FieldSpec, f: &LinearizedPoly) -> u64 {
        (0..=field.order() as u32)
            .filter(|&m| eval_linearized(field, f, fe(m)).is_zero())
            .count() as u64
    }

    /// For fixed (k, b, c), the largest solution count over every possible
    /// right-hand side d, via one histogram pass.
    fn bluher_max_over_d(field: &FieldSpec, k: u32, b: FieldElement, c: FieldElement) -> u64 {
        let mut hist = vec![0u32; 1 << field.n()];
        for mask in 0..=field.order() as u32 {
            let x = fe(mask);
            let xk = field.frobenius(x, k);
            let lhs = field.add(
                field.add(field.mul(xk, x), field.mul(b, xk)),
                field.mul(c, x),
            );
            hist[lhs.bits() as usize] += 1;
        }
        u64::from(*hist.iter().max().unwrap())
    }

    fn random_poly(rng: &mut ChaCha8Rng, field: &FieldSpec, s: u32, d: usize) -> LinearizedPoly {
        loop {
            let coeffs: Vec<FieldElement> = (0..=d)
                .map(|_| fe(rng.gen_range(0..=field.order() as u32)))
                .collect();
            if coeffs.iter().any(|c| !c.is_zero()) {
                return LinearizedPoly::new(s, coeffs).unwrap();
            }
        }
    }

    #[test]
    fn construction_guards() {
        assert_eq!(
            LinearizedPoly::new(0, vec![fe(1)]),
            Err(LinearizedError::ZeroStride)
        );
        assert_eq!(
            LinearizedPoly::new(1, vec![]),
            Err(LinearizedError::EmptyCoefficients)
        );
        let f = LinearizedPoly::new(1, vec![fe(1), fe(0)]).unwrap();
        assert_eq!(f.degree_index(), Some(0));
        let g = LinearizedPoly::new(1, vec![fe(0), fe(0)]).unwrap();
        assert_eq!(g.degree_index(), None);
    }

    #[test]
    fn eval_examples() {
        let field = make_field(6).unwrap();
        let identity = LinearizedPoly::new(3, vec![fe(1)]).unwrap();
        let x2_plus_x = LinearizedPoly::new(1, vec![fe(1), fe(1)]).unwrap();
        assert_eq!(eval_linearized(&field, &x2_plus_x, fe(1)), fe(0));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let a = fe(rng.gen_range(0..=field.order() as u32));
            let b = fe(rng.gen_range(0..=field.order() as u32));
            assert_eq!(eval_linearized(&field, &identity, a), a);
            // GF(2)-linearity
            assert_eq!(
                eval_linearized(&field, &x2_plus_x, field.add(a, b)),
                field.add(
                    eval_linearized(&field, &x2_plus_x, a),
                    eval_linearized(&field, &x2_plus_x, b)
                )
            );
        }
    }

    #[test]
    fn root_count_examples() {
        // x^2 + x: kernel is GF(2) in any extension.
        for n in [3u32, 5, 8, 13] {
            let field = make_field(n).unwrap();
            let f = LinearizedPoly::new(1, vec![fe(1), fe(1)]).unwrap();
            assert_eq!(linearized_root_count(&field, &f).unwrap(), 2);
        }
        // x^4 + x as stride-2, degree-1: roots are GF(4) ∩ GF(2^n).
        let f = LinearizedPoly::new(2, vec![fe(1), fe(1)]).unwrap();
        let gf16 = make_field(4).unwrap();
        assert_eq!(linearized_root_count(&gf16, &f).unwrap(), 4);
        let gf32 = make_field(5).unwrap();
        assert_eq!(linearized_root_count(&gf32, &f).unwrap(), 2);
    }

    #[test]
    fn zero_map_is_reported_distinctly() {
        // x^(2^4) + x vanishes identically on GF(16).
        let field = make_field(4).unwrap();
        let f = LinearizedPoly::new(1, vec![fe(1), fe(0), fe(0), fe(0), fe(1)]).unwrap();
        assert_eq!(brute_force_roots(&field, &f), 16);
        assert_eq!(
            linearized_root_count(&field, &f),
            Err(LinearizedError::IdenticallyZeroMap)
        );
        let zeros = LinearizedPoly::new(1, vec![fe(0), fe(0)]).unwrap();
        assert_eq!(
            linearized_root_count(&field, &zeros),
            Err(LinearizedError::IdenticallyZeroMap)
        );
    }

    #[test]
    fn rank_count_matches_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xabcd);
        for n in 3..=12u32 {
            let field = make_field(n).unwrap();
            for _ in 0..40 {
                let s = rng.gen_range(1..n.max(2));
                let d = rng.gen_range(1..=3usize);
                let f = random_poly(&mut rng, &field, s, d);
                let brute = brute_force_roots(&field, &f);
                match linearized_root_count(&field, &f) {
                    Ok(count) => {
                        assert_eq!(count, brute, "n={n} s={s} f={f:?}");
                        assert!(count.is_power_of_two());
                    }
                    Err(LinearizedError::IdenticallyZeroMap) => {
                        assert_eq!(brute, 1u64 << n);
                    }
                    Err(e) => panic!("unexpected error {e:?}"),
                }
            }
        }
    }

    #[test]
    fn lemma1_basic_reports() {
        let gf32 = make_field(5).unwrap();
        let f = LinearizedPoly::new(1, vec![fe(1), fe(1)]).unwrap();
        let report = lemma1_check(&gf32, &f).unwrap();
        assert_eq!(report.max_observed, 2);
        assert_eq!(report.bound, 2);
        assert!(report.holds);
        assert_eq!(report.seed, None);
        assert_eq!(report.samples, 1);

        // single nonzero coefficient: injective scaling, only root 0
        let scale = LinearizedPoly::new(3, vec![fe(7)]).unwrap();
        let report = lemma1_check(&gf32, &scale).unwrap();
        assert_eq!(report.max_observed, 1);
        assert_eq!(report.bound, 1);
        assert!(report.holds);

        // gcd(s, n) != 1 is a precondition violation
        let gf16 = make_field(4).unwrap();
        assert_eq!(
            lemma1_check(&gf16, &LinearizedPoly::new(2, vec![fe(1), fe(1)]).unwrap()),
            Err(LinearizedError::NotCoprime {
                role: "stride s",
                value: 2,
                n: 4
            })
        );
    }

    #[test]
    fn lemma1_bound_sampled() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x1e44a1);
        for (n, s, d) in [
            (5u32, 2u32, 2usize),
            (5, 3, 3),
            (7, 3, 2),
            (8, 3, 3),
            (9, 4, 2),
            (11, 2, 3),
            (12, 5, 2),
            (12, 7, 3),
        ] {
            let field = make_field(n).unwrap();
            for _ in 0..10_000 {
                let f = random_poly(&mut rng, &field, s, d);
                let report = lemma1_check(&field, &f).unwrap();
                assert!(
                    report.holds,
                    "bound 2^{d} violated at n={n} s={s}: {report:?} f={f:?}"
                );
            }
        }
    }

    #[test]
    fn bluher_count_examples() {
        let gf32 = make_field(5).unwrap();
        // x^3 = 1 with gcd(3, 31) = 1: cube map is a bijection
        let inst = BluherInstance { k: 1, b: fe(0), c: fe(0), d: fe(1) };
        assert_eq!(bluher_count(&gf32, &inst), 1);
        // x^3 = 1 in GF(16): three cube roots of unity
        let gf16 = make_field(4).unwrap();
        assert_eq!(bluher_count(&gf16, &inst), 3);
        // all-zero instance: only x = 0
        let zero = BluherInstance { k: 1, b: fe(0), c: fe(0), d: fe(0) };
        assert_eq!(bluher_count(&gf16, &zero), 1);
        // gcd(k, n) != 1: the bound genuinely fails (x^5 = 1 in GF(16))
        let bad = BluherInstance { k: 2, b: fe(0), c: fe(0), d: fe(1) };
        assert_eq!(bluher_count(&gf16, &bad), 5);
    }

    #[test]
    fn bluher_bound_exhaustive_small_fields() {
        // One histogram pass per (b, c) covers every right-hand side d.
        for n in 2..=7u32 {
            let field = make_field(n).unwrap();
            for k in 1..n {
                if gcd(u64::from(k), u64::from(n)) != 1 {
                    continue;
                }
                for b in 0..=field.order() as u32 {
                    for c in 0..=field.order() as u32 {
                        let max = bluher_max_over_d(&field, k, fe(b), fe(c));
                        assert!(max <= 3, "n={n} k={k} b={b:#x} c={c:#x}: {max} > 3");
                    }
                }
            }
        }
        // n = 8 at k = 1 as the largest exhaustive case
        let field = make_field(8).unwrap();
        for b in 0..=field.order() as u32 {
            for c in 0..=field.order() as u32 {
                assert!(bluher_max_over_d(&field, 1, fe(b), fe(c)) <= 3);
            }
        }
    }

    #[test]
    fn lemma2_check_reports() {
        let report = lemma2_check(5, 1, 500, 42).unwrap();
        assert!(report.holds);
        assert!(report.max_observed <= 3);
        assert_eq!(report.bound, 3);
        assert_eq!(report.samples, 500);
        assert_eq!(report.seed, Some(42));
        // same seed, same report
        assert_eq!(lemma2_check(5, 1, 500, 42).unwrap(), report);

        assert_eq!(
            lemma2_check(4, 2, 10, 0),
            Err(LinearizedError::NotCoprime {
                role: "Frobenius exponent k",
                value: 2,
                n: 4
            })
        );
    }

    #[test]
    fn lemma2_sampled_larger_fields() {
        for (n, k) in [(9u32, 2u32), (10, 3), (11, 1), (12, 5)] {
            let report = lemma2_check(n, k, 10_000, 7).unwrap();
            assert!(report.holds, "n={n} k={k}: {report:?}");
        }
    }

    #[test]
    fn theorem1_reduction_examples() {
        let gf32 = make_field(5).unwrap();
        let p = ReductionParams { k: 1, beta: fe(1), gamma: fe(0) };
        // x^4 + x over GF(32): roots {0, 1}
        assert_eq!(theorem1_reduction_count(&gf32, &p).unwrap(), 2);
        assert_eq!(
            theorem1_reduction_count(&gf32, &ReductionParams { k: 1, beta: fe(0), gamma: fe(1) }),
            Err(LinearizedError::ZeroBeta)
        );
    }

    #[test]
    fn theorem1_bound_and_power_of_two() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x7431);
        for n in [5u32, 7, 9, 11, 12] {
            let field = make_field(n).unwrap();
            let ks: Vec<u32> = (1..n).filter(|&k| gcd(k.into(), n.into()) == 1).collect();
            for _ in 0..2_000 {
                let p = ReductionParams {
                    k: ks[rng.gen_range(0..ks.len())],
                    beta: fe(rng.gen_range(1..=field.order() as u32)),
                    gamma: fe(rng.gen_range(0..=field.order() as u32)),
                };
                let count = theorem1_reduction_count(&field, &p).unwrap();
                assert!(count <= 4, "n={n} {p:?}: {count}");
                assert!(count.is_power_of_two());
            }
        }
    }

    #[test]
    fn theorem2_reduction_examples() {
        // β=1, γ=0, k=1, n=3: r^3 + r^2 + 1, an irreducible cubic whose
        // roots all live in GF(8)
        let gf8 = make_field(3).unwrap();
        let p = ReductionParams { k: 1, beta: fe(1), gamma: fe(0) };
        assert_eq!(theorem2_reduction_count(&gf8, &p).unwrap(), 3);

        let gf32 = make_field(5).unwrap();
        let p = ReductionParams { k: 1, beta: fe(1), gamma: fe(1) };
        assert!(theorem2_reduction_count(&gf32, &p).unwrap() <= 3);

        assert_eq!(
            theorem2_reduction_count(&gf8, &ReductionParams { k: 1, beta: fe(0), gamma: fe(0) }),
            Err(LinearizedError::ZeroBeta)
        );
    }

    #[test]
    fn theorem2_agrees_with_normalized_bluher() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x7432);
        for n in 3..=10u32 {
            let field = make_field(n).unwrap();
            for _ in 0..60 {
                let p = ReductionParams {
                    k: rng.gen_range(1..n),
                    beta: fe(rng.gen_range(1..=field.order() as u32)),
                    gamma: fe(rng.gen_range(0..=field.order() as u32)),
                };
                let direct = theorem2_reduction_count(&field, &p).unwrap();
                // divide through by beta: x^(2^k+1) + b'x^(2^k) + c'x = d'
                let inv_beta = field.inv(p.beta).unwrap();
                let inst = BluherInstance {
                    k: p.k,
                    b: field.mul(field.frobenius(p.beta, p.k), inv_beta),
                    c: field.mul(p.gamma, inv_beta),
                    d: field.mul(field.frobenius(p.beta, 2 * p.k), inv_beta),
                };
                assert_eq!(direct, bluher_count(&field, &inst), "n={n} {p:?}");
                if gcd(u64::from(p.k), u64::from(n)) == 1 {
                    assert!(direct <= 3, "n={n} {p:?}: {direct}");
                }
            }
        }
    }

    #[test]
    fn substitution_bijectivity_examples() {
        assert!(substitution_bijectivity(5, 1));
        assert!(!substitution_bijectivity(6, 1)); // gcd(3, 63) = 3
        assert!(substitution_bijectivity(7, 3)); // gcd(63, 127) = 1
        // even n never qualifies: 3 | 2^(2k) - 1 and 3 | 2^n - 1
        for k in 1..6 {
            assert!(!substitution_bijectivity(6, k), "k={k}");
        }
    }

    #[test]
    fn substitution_bijectivity_matches_image_enumeration() {
        for n in 2..=12u32 {
            let field = make_field(n).unwrap();
            for k in 1..n {
                if gcd(u64::from(k), u64::from(n)) != 1 {
                    continue;
                }
                let e = (1i64 << (2 * k)) - 1;
                let mut seen = vec![false; 1 << n];
                let mut distinct = 0u64;
                for mask in 1..=field.order() as u32 {
                    let image = field.pow(fe(mask), e).unwrap();
                    if !seen[image.bits() as usize] {
                        seen[image.bits() as usize] = true;
                        distinct += 1;
                    }
                }
                let bijective = distinct == field.order();
                assert_eq!(substitution_bijectivity(n, k), bijective, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn bound_report_serialization() {
        let report = BoundReport {
            n: 5,
            k_or_s: 1,
            bound: 2,
            max_observed: 2,
            samples: 1,
            seed: None,
            holds: true,
        };
        assert_eq!(
            serde_json::to_string(&report).unwrap(),
            r#"{"n":5,"k_or_s":1,"bound":2,"max_observed":2,"samples":1,"seed":null,"holds":true}"#
        );
        let seeded = BoundReport { seed: Some(9), ..report };
        assert!(serde_json::to_string(&seeded).unwrap().contains(r#""seed":9"#));
    }
}
