//! Normal-form families, their classification, equivalence and recognition by invariants.

mod corpus;
mod decide;
mod equivalence;
mod families;

pub use corpus::{corpus, predicted_behaviour};
pub use decide::{
    classify, classify_2step, classify_3step, classify_checked, fingerprint_table, identify, identify_real,
    three_step_discriminant,
};
pub use equivalence::{
    automorphism_witness, canonical_form, equivalent_2step, pulls_back, transfer_target, Witness,
};
pub use families::{
    AlgebraClass, Family, GeneralNilpotentParams, NonNilpotentParams, ThreeStepTriple, TwoStepTriple,
};
