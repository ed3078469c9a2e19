//! Graded ring and module models: section rings on the projective line,
//! polynomial rings and their quotients, truncated minimal free
//! resolutions, multiplication maps and the regularity criterion.

pub mod binary;
mod models;
mod module;
mod regularity;
mod resolution;
mod surjectivity;

pub use binary::{sylvester, BinaryForm};
pub use models::{
    binary_monomial_label, h0_p1, h1_p1, ideal_generated_by, monomial_label, monomials,
    polynomial_ring, quotient_by_forms, rational_normal_curve, sym_dim, GradedRingModel,
    Provenance,
};
pub use module::{FreeModule, GradedModuleTable};
pub use regularity::{
    check_regularity, resolve_sections, RegularityOutcome, RegularityReport, SheafModelP1,
};
pub use resolution::{resolve, Resolution, ResolutionStage};
pub use surjectivity::{multiplication_surjectivity, pencil_multiplication, SurjectivityVerdict};

use crate::exactlin::Field;
use crate::quadalg::{BettiTable, LinearityVerdict};

/// Betti table of a module given on a window, through `(hom_cutoff, int_cutoff)`.
pub fn minimal_free_resolution<F: Field>(
    ring: &crate::quadalg::GradedAlgebraTable<F>,
    module: &GradedModuleTable<F>,
    hom_cutoff: usize,
    int_cutoff: usize,
) -> BettiTable {
    resolve(ring, module, module.top_degree(), hom_cutoff, int_cutoff)
        .betti()
        .clone()
}

/// Linear-resolution verdict to homological degree `n`, shifted to the
/// generation degree.
pub fn check_linear_resolution(betti: &BettiTable, n: usize) -> LinearityVerdict {
    betti.linearity(n)
}
