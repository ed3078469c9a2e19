//! Quadratic presentations, their degreewise tables, quadratic duals and
//! Koszulness verdicts to a given degree.

mod betti;
mod koszul;
mod lattice;
mod presentation;
mod table;

pub use betti::{BettiTable, LinearityVerdict};
pub use koszul::{
    alternating_product, betti_trivial_module, euler_check, is_koszul_to, koszul_numeric_check,
    koszul_verdict, numeric_identity, quadraticity_from_betti, EulerCheck, KoszulVerdict,
    NumericVerdict, QuadraticityVerdict,
};
pub use lattice::{distributivity_check, DistributivityVerdict, MAX_LATTICE_ELEMENTS, MAX_TENSOR_DIM};
pub use presentation::{
    decode_word, default_names, naive_quadratic_dims, word_index, QuadraticPresentation,
    TensorPresentation, Terms,
};
pub use table::{GradedAlgebraTable, HilbertTruncation, LeftModule, Lift};
