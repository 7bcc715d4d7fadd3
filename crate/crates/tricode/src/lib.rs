//! Cyclic codes of length 2^n - 1 defined by zero-set triples {d1, d2, d3}:
//! construction, minimum-distance certification, counterexample witnesses,
//! and a syndrome-table decoder.

pub mod code;
pub mod decoder;
pub mod distance;
pub mod families;
pub mod field;
pub mod linearized;
mod util;
pub mod witness;

pub use code::{
    build_parity_check, code_dimension, cyclotomic_coset, design_dimension, generator_polynomial,
    syndrome, triple_zero_set, Code, CodeError, CodeSpec, Codeword, ParityCheckMatrix, ZeroSet,
};
pub use decoder::{build_syndrome_table, decode, Decoded, DecoderError, SyndromeTable};
pub use families::{
    admissible_params, family_exponents, family_rows, smallest_admissible_n, FamilyDef, FamilyRow,
    FAMILIES,
};
pub use distance::{
    apn_max_preimages, exhaustive_certificate, min_distance_exhaustive, min_weight_upto,
    pair_distance5_check, verify_triple, DistanceCertificate, DistanceError, Method, SearchBudget,
    Verdict,
};
pub use field::{catalogue_poly, make_field, make_field_arc, FieldElement, FieldError, FieldSpec};
pub use linearized::{
    bluher_count, eval_linearized, lemma1_check, lemma2_check, linearized_root_count,
    substitution_bijectivity, theorem1_reduction_count, theorem2_reduction_count, BluherInstance,
    BoundReport, LinearizedError, LinearizedPoly, ReductionParams,
};
pub use witness::{
    build_witness, weight3_recipe, weight3_witness, weight6_recipe, weight6_witness, Witness,
    WitnessCase, WitnessError, WitnessRecipe,
};
