//! A two-term pencil complex on the section ring of `O(d)` over the
//! projective line, its homology, and hypothesis checklists for the
//! Koszul-type conclusions drawn from it.

mod checks;
mod complex;
mod model;

pub use checks::*;
pub use complex::{build_k_complex, closed_form_homology, HomologyTable, KComplex};
pub use model::{mult_block, mult_pair, TwistedSectionModel, MAX_ATTEMPTS};
