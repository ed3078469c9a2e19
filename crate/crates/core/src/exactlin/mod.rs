//! Exact linear algebra over `Q` and `GF(p)`: echelon forms, kernels, and the
//! subspace calculus the graded computations are built on.

mod field;
mod matrix;
mod subspace;

pub use field::{is_prime, Field, FieldSpec, PrimeField, Rationals, DEFAULT_PRIME, MAX_PRIME};
pub use matrix::DenseMatrix;
pub use subspace::{QuotientSpace, SubspaceBasis};

use crate::error::Error;

pub fn rref<F: Field>(m: &DenseMatrix<F>) -> SubspaceBasis<F> {
    m.rref()
}

pub fn kernel<F: Field>(m: &DenseMatrix<F>) -> SubspaceBasis<F> {
    m.kernel()
}

pub fn subspace_sum<F: Field>(
    a: &SubspaceBasis<F>,
    b: &SubspaceBasis<F>,
) -> Result<SubspaceBasis<F>, Error> {
    a.sum(b)
}

pub fn subspace_intersect<F: Field>(
    a: &SubspaceBasis<F>,
    b: &SubspaceBasis<F>,
) -> Result<SubspaceBasis<F>, Error> {
    a.intersect(b)
}

/// Runs `$body` with `$f` bound to the concrete field named by a [`FieldSpec`].
#[macro_export]
macro_rules! with_field {
    ($spec:expr, |$f:ident| $body:expr) => {
        match $spec {
            $crate::exactlin::FieldSpec::Rationals => {
                let $f = $crate::exactlin::Rationals;
                $body
            }
            $crate::exactlin::FieldSpec::Prime(p) => {
                let $f = $crate::exactlin::PrimeField::new(p)?;
                $body
            }
        }
    };
}
