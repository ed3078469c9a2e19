//! Finite point sets in projective space and the degreewise ideals and
//! coordinate rings they cut out.

mod kempf;

pub use kempf::{kempf_predict, verify_kempf, KempfPrediction, KempfReport, KempfVerdict};

use serde::Serialize;

use crate::error::Error;
use crate::exactlin::{DenseMatrix, Field, SubspaceBasis};
use crate::gring::{ideal_generated_by, monomials, polynomial_ring, GradedRingModel, Provenance};
use crate::rng::SeededRng;

/// `d` distinct points of `P^m`, each normalized so that its first nonzero
/// coordinate is 1.
#[derive(Clone, Debug, PartialEq)]
pub struct PointConfiguration<F: Field> {
    field: F,
    ambient_dim: usize,
    points: Vec<Vec<F::Elem>>,
}

impl<F: Field> PointConfiguration<F> {
    pub fn new(field: &F, ambient_dim: usize, points: Vec<Vec<F::Elem>>) -> Result<Self, Error> {
        let mut normalized = Vec::with_capacity(points.len());
        for (k, p) in points.into_iter().enumerate() {
            if p.len() != ambient_dim + 1 {
                return Err(Error::InvalidPoints(format!(
                    "point {} has {} coordinates, expected {}",
                    k + 1,
                    p.len(),
                    ambient_dim + 1
                )));
            }
            let Some(lead) = p.iter().find(|x| !field.is_zero(x)) else {
                return Err(Error::InvalidPoints(format!("point {} is the zero vector", k + 1)));
            };
            let inv = field.inv(lead);
            normalized.push(p.iter().map(|x| field.mul(x, &inv)).collect::<Vec<_>>());
        }
        for a in 0..normalized.len() {
            for b in 0..a {
                if normalized[a] == normalized[b] {
                    return Err(Error::InvalidPoints(format!(
                        "points {} and {} coincide",
                        b + 1,
                        a + 1
                    )));
                }
            }
        }
        Ok(PointConfiguration {
            field: field.clone(),
            ambient_dim,
            points: normalized,
        })
    }

    pub fn from_i64(field: &F, ambient_dim: usize, points: &[Vec<i64>]) -> Result<Self, Error> {
        let pts = points
            .iter()
            .map(|p| p.iter().map(|&c| field.from_i64(c)).collect())
            .collect();
        Self::new(field, ambient_dim, pts)
    }

    /// `d` seeded points of `P^m` in general linear position, with integer
    /// coordinates in the fixture range. Redraws until the configuration is
    /// in general position; fails after a bounded number of attempts.
    pub fn random_general(field: &F, ambient_dim: usize, d: usize, seed: u64) -> Result<Self, Error> {
        let mut rng = SeededRng::new(seed);
        for _ in 0..64 {
            let pts: Vec<Vec<i64>> = (0..d)
                .map(|_| (0..=ambient_dim).map(|_| rng.coeff()).collect())
                .collect();
            if let Ok(c) = Self::from_i64(field, ambient_dim, &pts) {
                let expected_span = ambient_dim.min(d.saturating_sub(1));
                if c.span_dim() == Some(expected_span) && c.general_position().holds {
                    return Ok(c);
                }
            }
        }
        Err(Error::Construction(
            "could not draw points in general position".into(),
        ))
    }

    /// The images of the given points under a linear change of coordinates.
    pub fn transformed(&self, matrix: &DenseMatrix<F>) -> Result<Self, Error> {
        let pts = self.points.iter().map(|p| matrix.apply(p)).collect();
        Self::new(&self.field, self.ambient_dim, pts)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<F::Elem>] {
        &self.points
    }

    /// Projective dimension of the linear span; `None` for no points.
    pub fn span_dim(&self) -> Option<usize> {
        let r = DenseMatrix::from_rows(&self.field, self.ambient_dim + 1, self.points.clone()).rank();
        r.checked_sub(1)
    }

    /// Rows indexed by points, columns by the degree-`n` monomials in
    /// lexicographically descending order.
    pub fn evaluation_matrix(&self, n: usize) -> DenseMatrix<F> {
        let f = &self.field;
        let monos = monomials(self.ambient_dim + 1, n);
        let rows = self
            .points
            .iter()
            .map(|p| {
                monos
                    .iter()
                    .map(|e| {
                        e.iter().zip(p).fold(f.one(), |acc, (&k, x)| {
                            (0..k).fold(acc, |a, _| f.mul(&a, x))
                        })
                    })
                    .collect()
            })
            .collect();
        DenseMatrix::from_rows(f, monos.len(), rows)
    }

    /// Every subset of at most `span_dim + 1` points is linearly independent.
    /// The witness is the first dependent subset (1-based), by size and then
    /// lexicographically.
    pub fn general_position(&self) -> GeneralPosition {
        let Some(s) = self.span_dim() else {
            return GeneralPosition {
                holds: true,
                witness: None,
            };
        };
        let d = self.points.len();
        for size in 1..=(s + 1).min(d) {
            let mut subset: Vec<usize> = (0..size).collect();
            loop {
                let rows = subset.iter().map(|&i| self.points[i].clone()).collect();
                if DenseMatrix::from_rows(&self.field, self.ambient_dim + 1, rows).rank() < size {
                    return GeneralPosition {
                        holds: false,
                        witness: Some(subset.iter().map(|i| i + 1).collect()),
                    };
                }
                if !next_subset(&mut subset, d) {
                    break;
                }
            }
        }
        GeneralPosition {
            holds: true,
            witness: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneralPosition {
    pub holds: bool,
    pub witness: Option<Vec<usize>>,
}

/// Advances a strictly increasing index vector to the next subset in
/// lexicographic order; `false` after the last one.
pub(crate) fn next_subset(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    for pos in (0..k).rev() {
        if subset[pos] < n - k + pos {
            subset[pos] += 1;
            for q in pos + 1..k {
                subset[q] = subset[q - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Degree-`n` forms vanishing on the points, in the monomial basis.
pub fn ideal_truncation<F: Field>(c: &PointConfiguration<F>, n: usize) -> SubspaceBasis<F> {
    c.evaluation_matrix(n).kernel()
}

pub fn general_position_check<F: Field>(c: &PointConfiguration<F>) -> GeneralPosition {
    c.general_position()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndependentConditions {
    pub holds: bool,
    /// First `k`-subset (1-based) on which the forms have rank below `k`.
    pub witness: Option<Vec<usize>>,
}

/// Whether every `k`-subset of the points imposes `k` independent conditions
/// on the given space of degree-`n` forms.
pub fn impose_independent_conditions<F: Field>(
    c: &PointConfiguration<F>,
    forms: &SubspaceBasis<F>,
    n: usize,
    k: usize,
) -> Result<IndependentConditions, Error> {
    let eval = c.evaluation_matrix(n);
    if forms.ambient_dim() != eval.cols() {
        return Err(Error::DimensionMismatch {
            expected: eval.cols(),
            found: forms.ambient_dim(),
        });
    }
    if k > c.len() {
        return Err(Error::InvalidParameters(format!(
            "subset size {k} exceeds the number of points {}",
            c.len()
        )));
    }
    // values of each form at each point: (points x forms)
    let values = eval.mul(&forms.basis().transpose());
    if k == 0 {
        return Ok(IndependentConditions {
            holds: true,
            witness: None,
        });
    }
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        let rows = subset.iter().map(|&i| values.row(i).to_vec()).collect();
        if DenseMatrix::from_rows(c.field(), values.cols(), rows).rank() < k {
            return Ok(IndependentConditions {
                holds: false,
                witness: Some(subset.iter().map(|i| i + 1).collect()),
            });
        }
        if !next_subset(&mut subset, c.len()) {
            break;
        }
    }
    Ok(IndependentConditions {
        holds: true,
        witness: None,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct QuadraticGeneration {
    pub holds: bool,
    pub first_failing_degree: Option<usize>,
}

/// `Sym^{n-2} · I_2 = I_n` for `3 ≤ n ≤ cutoff`.
pub fn quadratic_generation_check<F: Field>(
    c: &PointConfiguration<F>,
    cutoff: usize,
) -> QuadraticGeneration {
    let ring = polynomial_ring(c.field(), c.ambient_dim() + 1, cutoff);
    let quadrics: Vec<(usize, Vec<F::Elem>)> = ideal_truncation(c, 2)
        .vectors()
        .into_iter()
        .map(|v| (2, v))
        .collect();
    // linear forms vanishing on the points are part of the ideal as well
    let linear: Vec<(usize, Vec<F::Elem>)> = ideal_truncation(c, 1)
        .vectors()
        .into_iter()
        .map(|v| (1, v))
        .collect();
    let generated = ideal_generated_by(&ring, &[linear, quadrics].concat()).expect("shapes");
    for (n, ideal_n) in generated.iter().enumerate().skip(3) {
        if ideal_n.dim() != ideal_truncation(c, n).dim() {
            return QuadraticGeneration {
                holds: false,
                first_failing_degree: Some(n),
            };
        }
    }
    QuadraticGeneration {
        holds: true,
        first_failing_degree: None,
    }
}

/// Homogeneous coordinate ring `S / I(points)` through degree `cutoff`.
pub fn model_point_ring<F: Field>(
    c: &PointConfiguration<F>,
    cutoff: usize,
) -> Result<GradedRingModel<F>, Error> {
    let ring = polynomial_ring(c.field(), c.ambient_dim() + 1, cutoff);
    let ideal: Vec<SubspaceBasis<F>> = (0..=cutoff)
        .map(|n| {
            if n == 0 {
                SubspaceBasis::zero(c.field(), 1)
            } else {
                ideal_truncation(c, n)
            }
        })
        .collect();
    Ok(GradedRingModel {
        table: ring.quotient(&ideal)?,
        provenance: Provenance::PointRing {
            ambient_dim: c.ambient_dim(),
            points: c.len(),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::PrimeField;

    fn gf() -> PrimeField {
        PrimeField::new(32003).unwrap()
    }

    #[test]
    fn validation_and_normalization() {
        let f = gf();
        let c = PointConfiguration::from_i64(&f, 1, &[vec![2, 4], vec![0, 3]]).unwrap();
        assert_eq!(c.points()[0], vec![f.one(), f.from_i64(2)]);
        assert!(PointConfiguration::from_i64(&f, 1, &[vec![0, 0]]).is_err());
        assert!(PointConfiguration::from_i64(&f, 1, &[vec![1, 2], vec![2, 4]]).is_err());
    }

    #[test]
    fn ideal_truncation_examples() {
        let f = gf();
        let two = PointConfiguration::from_i64(&f, 1, &[vec![1, 0], vec![0, 1]]).unwrap();
        let i2 = ideal_truncation(&two, 2);
        assert_eq!(i2.dim(), 1);
        // only x*y, the middle monomial of x^2, xy, y^2
        assert_eq!(i2.vector(0), &[f.zero(), f.one(), f.zero()]);
        let simplex =
            PointConfiguration::from_i64(&f, 2, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]])
                .unwrap();
        assert_eq!(ideal_truncation(&simplex, 2).dim(), 3);
    }

    #[test]
    fn collinear_witness() {
        let f = gf();
        let c = PointConfiguration::from_i64(
            &f,
            2,
            &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 0]],
        )
        .unwrap();
        assert_eq!(c.general_position().witness, Some(vec![1, 2, 4]));
    }

    #[test]
    fn point_ring_dims() {
        let f = gf();
        let two = PointConfiguration::from_i64(&f, 1, &[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(model_point_ring(&two, 3).unwrap().table.dims(), &[1, 2, 2, 2]);
        let simplex =
            PointConfiguration::from_i64(&f, 2, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]])
                .unwrap();
        assert_eq!(model_point_ring(&simplex, 3).unwrap().table.dims(), &[1, 3, 3, 3]);
    }

    #[test]
    fn three_points_on_a_line_need_a_cubic() {
        let f = gf();
        let c = PointConfiguration::from_i64(&f, 1, &[vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        assert_eq!(
            quadratic_generation_check(&c, 4),
            QuadraticGeneration {
                holds: false,
                first_failing_degree: Some(3)
            }
        );
    }

    #[test]
    fn independent_conditions_examples() {
        let f = gf();
        let two = PointConfiguration::from_i64(&f, 1, &[vec![1, 0], vec![0, 1]]).unwrap();
        let all = SubspaceBasis::full(&f, 3);
        assert!(impose_independent_conditions(&two, &all, 2, 2).unwrap().holds);
        let x2 = SubspaceBasis::from_vectors(&f, 3, vec![vec![f.one(), f.zero(), f.zero()]]);
        assert!(!impose_independent_conditions(&two, &x2, 2, 2).unwrap().holds);
    }
}
