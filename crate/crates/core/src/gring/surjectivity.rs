use serde::Serialize;

use crate::exactlin::{DenseMatrix, Field};

use super::binary::BinaryForm;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SurjectivityVerdict {
    pub surjective: bool,
    pub image_rank: usize,
    pub cokernel_dim: usize,
}

/// Rank of the bilinear map `src1 ⊗ src2 -> target` spanned by all products
/// of basis vectors.
pub fn multiplication_surjectivity<F, M>(
    field: &F,
    src1: &[Vec<F::Elem>],
    src2: &[Vec<F::Elem>],
    target_dim: usize,
    mult: M,
) -> SurjectivityVerdict
where
    F: Field,
    M: Fn(&[F::Elem], &[F::Elem]) -> Vec<F::Elem>,
{
    let columns: Vec<Vec<F::Elem>> = src1
        .iter()
        .flat_map(|a| src2.iter().map(|b| mult(a, b)).collect::<Vec<_>>())
        .collect();
    assert!(columns.iter().all(|c| c.len() == target_dim), "product outside the target");
    let rank = DenseMatrix::from_columns(field, target_dim, &columns).rank();
    SurjectivityVerdict {
        surjective: rank == target_dim,
        image_rank: rank,
        cokernel_dim: target_dim - rank,
    }
}

/// `V ⊗ H^0(O(k)) -> H^0(O(e + k))` on the projective line for a space `V`
/// of binary forms of degree `e`.
pub fn pencil_multiplication<F: Field>(
    field: &F,
    forms: &[BinaryForm<F>],
    k: usize,
) -> SurjectivityVerdict {
    let e = forms.first().map_or(0, BinaryForm::degree);
    assert!(forms.iter().all(|g| g.degree() == e), "forms of mixed degree");
    let src1: Vec<Vec<F::Elem>> = forms.iter().map(|g| g.coeffs().to_vec()).collect();
    let src2: Vec<Vec<F::Elem>> = super::binary::monomial_basis(field, k)
        .into_iter()
        .map(|g| g.coeffs().to_vec())
        .collect();
    multiplication_surjectivity(field, &src1, &src2, e + k + 1, |a, b| {
        BinaryForm::<F>::new(a.to_vec())
            .mul(field, &BinaryForm::new(b.to_vec()))
            .coeffs()
            .to_vec()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::PrimeField;
    use crate::gring::binary::monomial_basis;

    #[test]
    fn full_spaces_multiply_onto() {
        let f = PrimeField::new(32003).unwrap();
        let v = pencil_multiplication(&f, &monomial_basis(&f, 2), 3);
        assert!(v.surjective);
    }

    #[test]
    fn pencil_with_base_point_misses_a_monomial() {
        let f = PrimeField::new(32003).unwrap();
        let v = vec![
            BinaryForm::from_i64(&f, &[1, 0, 0]),
            BinaryForm::from_i64(&f, &[0, 1, 0]),
        ];
        let r = pencil_multiplication(&f, &v, 1);
        assert_eq!((r.surjective, r.cokernel_dim), (false, 1));
        let free = vec![
            BinaryForm::from_i64(&f, &[1, 0, 0]),
            BinaryForm::from_i64(&f, &[0, 0, 1]),
        ];
        assert!(pencil_multiplication(&f, &free, 1).surjective);
    }
}
