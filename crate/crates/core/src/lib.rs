//! Exact computations with graded algebras: quadratic presentations and
//! their duals, truncated minimal free resolutions, coordinate rings of
//! points, section rings on the projective line and the complexes built on
//! them.

pub mod checklist;
pub mod curvecomplex;
pub mod error;
pub mod exactlin;
pub mod gring;
pub mod points;
pub mod quadalg;
pub mod rng;
pub mod strata;

pub use error::Error;
