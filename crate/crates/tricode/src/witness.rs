//! Constructive low-weight codewords for even n: explicit weight-6 and
//! weight-3 supports with zero syndrome, certifying that the triple
//! {1, 2^k + 1, 2^3k + 1} does NOT reach distance 7 when n is even.
//!
//! Both constructions hinge on δ = α^((2^n−1)/3), the canonical order-3
//! element that exists exactly when n is even (GF(4) ⊂ GF(2^n) ⇔ 2 | n).
//!
//! Case 1 (k odd): 3 | 2^k + 1, so δ^(2^k+1) = 1 and the six locations
//! {x, y, z, δx, δy, δz} cancel pairwise on the two large exponents, while
//! x + y + z = 0 kills exponent 1.
//!
//! Case 2 (k even): 3 ∤ 2^k + 1, and {x, δx, δ²x} sums to x·(1 + δ^d + δ^2d)
//! on each exponent d; the bracket is zero whenever 3 ∤ d because δ^d is then
//! a primitive cube root of unity.

use serde::Serialize;

use crate::code::{self, CodeError, Codeword, ZeroSet};
use crate::field::{FieldElement, FieldError, FieldSpec};

#[derive(Debug, thiserror::Error, PartialEq, Eq, Clone)]
pub enum WitnessError {
    #[error("witness constructions need 3 | 2^n - 1, i.e. even n; got n = {0}")]
    OddDegree(u32),
    #[error("case 1 (weight 6) needs odd k so that 3 | 2^k + 1; got k = {0}")]
    EvenK(u64),
    #[error("case 2 (weight 3) needs even k so that 3 divides no exponent; got k = {0}")]
    OddK(u64),
    #[error(
        "zero-set exponent {0} is divisible by 3; the cube-root cancellation \
         1 + δ^d + δ^2d = 0 fails for it (the sum is 1)"
    )]
    ExponentDivisibleBy3(u64),
    #[error("case 1 cannot zero exponent {0}: neither a multiple of 3 nor a conjugate of 1")]
    UnsupportedExponent(u64),
    #[error("no base pair (x, y) with x/y outside GF(4)* exists in this field")]
    ScanExhausted,
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Which of the two constructions produced a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum WitnessCase {
    #[serde(rename = "case1_weight6")]
    Case1Weight6,
    #[serde(rename = "case2_weight3")]
    Case2Weight3,
}

impl std::fmt::Display for WitnessCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            WitnessCase::Case1Weight6 => write!(f, "case1_weight6"),
            WitnessCase::Case2Weight3 => write!(f, "case2_weight3"),
        }
    }
}

/// The data a witness is built from: the order-3 element δ and the chosen
/// base elements — x, y, z (with x + y + z = 0) for case 1, x alone for
/// case 2. Locations are the base elements times powers of δ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessRecipe {
    pub case_id: WitnessCase,
    pub delta: FieldElement,
    pub base_elements: Vec<FieldElement>,
}

impl WitnessRecipe {
    /// The error locations as field elements: {x, δx, y, δy, z, δz} for
    /// case 1, {x, δx, δ²x} for case 2.
    pub fn locations(&self, field: &FieldSpec) -> Vec<FieldElement> {
        match self.case_id {
            WitnessCase::Case1Weight6 => self
                .base_elements
                .iter()
                .flat_map(|&u| [u, field.mul(self.delta, u)])
                .collect(),
            WitnessCase::Case2Weight3 => {
                let x = self.base_elements[0];
                let dx = field.mul(self.delta, x);
                vec![x, dx, field.mul(self.delta, dx)]
            }
        }
    }
}

/// Full serializable witness record; `syndrome` is all zeros by construction.
#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub case: WitnessCase,
    pub n: u32,
    pub k: u64,
    pub zero_set: Vec<u64>,
    pub delta: FieldElement,
    pub support: Vec<u64>,
    pub syndrome: Vec<FieldElement>,
}

/// δ = α^((2^n−1)/3) plus the even-degree precondition shared by both cases.
fn order_three_element(field: &FieldSpec) -> Result<FieldElement, WitnessError> {
    let n = field.n();
    if n % 2 != 0 {
        return Err(WitnessError::OddDegree(n));
    }
    Ok(field.alpha_pow(field.order() / 3))
}

/// Case 1 ingredients: δ, and x = α^i, y = α^(i+1), z = x + y for the first
/// i ≥ 1 with x/y ∉ GF(4)* (z ≠ 0 is automatic since x ≠ y). The scan is
/// deterministic, so witnesses are reproducible; it exhausts only in GF(4)
/// itself, where every ratio lies in GF(4)*.
pub fn weight6_recipe(field: &FieldSpec, k: u64) -> Result<WitnessRecipe, WitnessError> {
    let delta = order_three_element(field)?;
    if k % 2 != 1 {
        return Err(WitnessError::EvenK(k));
    }
    let delta_sq = field.mul(delta, delta);
    for i in 1..field.order() {
        let x = field.alpha_pow(i);
        let y = field.alpha_pow(i + 1);
        let z = field.add(x, y);
        debug_assert!(!z.is_zero());
        let ratio = field.mul(x, field.inv(y)?);
        if ratio == FieldElement::ONE || ratio == delta || ratio == delta_sq {
            continue;
        }
        return Ok(WitnessRecipe {
            case_id: WitnessCase::Case1Weight6,
            delta,
            base_elements: vec![x, y, z],
        });
    }
    Err(WitnessError::ScanExhausted)
}

/// Case 2 ingredients: δ and the base x = α^0 = 1.
pub fn weight3_recipe(field: &FieldSpec, k: u64) -> Result<WitnessRecipe, WitnessError> {
    let delta = order_three_element(field)?;
    if k % 2 != 0 {
        return Err(WitnessError::OddK(k));
    }
    Ok(WitnessRecipe {
        case_id: WitnessCase::Case2Weight3,
        delta,
        base_elements: vec![FieldElement::ONE],
    })
}

/// Sorted positions (discrete logs) of a recipe's locations; multiplying by
/// δ shifts a log by (2^n−1)/3.
fn recipe_support(field: &FieldSpec, recipe: &WitnessRecipe) -> Result<Vec<u64>, WitnessError> {
    let order = field.order();
    let third = order / 3;
    let mut support: Vec<u64> = match recipe.case_id {
        WitnessCase::Case1Weight6 => {
            let mut s = Vec::with_capacity(6);
            for &u in &recipe.base_elements {
                let lu = field.log(u)?;
                s.push(lu);
                s.push((lu + third) % order);
            }
            s
        }
        WitnessCase::Case2Weight3 => {
            let j = field.log(recipe.base_elements[0])?;
            vec![j, (j + third) % order, (j + 2 * third) % order]
        }
    };
    support.sort_unstable();
    debug_assert!(support.windows(2).all(|w| w[0] < w[1]), "locations collide");
    Ok(support)
}

/// Weight-6 codeword for the triple {1, 2^k + 1, 2^3k + 1}, n even, k odd.
pub fn weight6_witness(field: &FieldSpec, k: u64) -> Result<Codeword, WitnessError> {
    let recipe = weight6_recipe(field, k)?;
    let support = recipe_support(field, &recipe)?;
    debug_assert!({
        let zs = code::triple_zero_set(field.n(), k).expect("degree already validated");
        code::syndrome(field, &zs, &support).iter().all(|s| s.is_zero())
    });
    Ok(Codeword { support })
}

/// Weight-3 codeword {j, j + (2^n−1)/3, j + 2(2^n−1)/3} (j = 0), valid for
/// any zero set of `field`'s degree in which no exponent is divisible by 3 —
/// in particular {1, 2^k + 1, 2^3k + 1} and {1, 2^k + 1, 2^2k + 1} for even
/// n and even k.
pub fn weight3_witness(
    field: &FieldSpec,
    k: u64,
    zs: &ZeroSet,
) -> Result<Codeword, WitnessError> {
    if zs.n() != field.n() {
        return Err(CodeError::DegreeMismatch {
            field_n: field.n(),
            zs_n: zs.n(),
        }
        .into());
    }
    let recipe = weight3_recipe(field, k)?;
    for &e in zs.exponents() {
        if e % 3 == 0 {
            return Err(WitnessError::ExponentDivisibleBy3(e));
        }
    }
    let support = recipe_support(field, &recipe)?;
    debug_assert!(code::syndrome(field, zs, &support).iter().all(|s| s.is_zero()));
    Ok(Codeword { support })
}

/// Dispatch on the parity of k, check the given zero set is one the chosen
/// case can actually zero out, and assemble the full serializable record.
pub fn build_witness(field: &FieldSpec, k: u64, zs: &ZeroSet) -> Result<Witness, WitnessError> {
    if zs.n() != field.n() {
        return Err(CodeError::DegreeMismatch {
            field_n: field.n(),
            zs_n: zs.n(),
        }
        .into());
    }
    let (case, recipe, support) = if k % 2 == 1 {
        let recipe = weight6_recipe(field, k)?;
        // Case 1 zeroes exponent e via pairwise cancellation when 3 | e, and
        // via Frobenius images of x + y + z = 0 when e is conjugate to 1.
        let coset_of_one = code::cyclotomic_coset(field.n(), 1);
        for &e in zs.exponents() {
            if e % 3 != 0 && !coset_of_one.contains(&e) {
                return Err(WitnessError::UnsupportedExponent(e));
            }
        }
        let support = recipe_support(field, &recipe)?;
        (WitnessCase::Case1Weight6, recipe, support)
    } else {
        let recipe = weight3_recipe(field, k)?;
        for &e in zs.exponents() {
            if e % 3 == 0 {
                return Err(WitnessError::ExponentDivisibleBy3(e));
            }
        }
        let support = recipe_support(field, &recipe)?;
        (WitnessCase::Case2Weight3, recipe, support)
    };
    let syndrome = code::syndrome(field, zs, &support);
    debug_assert!(syndrome.iter().all(|s| s.is_zero()));
    Ok(Witness {
        case,
        n: field.n(),
        k,
        zero_set: zs.exponents().to_vec(),
        delta: recipe.delta,
        support,
        syndrome,
    })
}
