use std::collections::HashMap;

use serde::Serialize;

use crate::error::Error;
use crate::exactlin::{DenseMatrix, Field, SubspaceBasis};
use crate::quadalg::{GradedAlgebraTable, QuadraticPresentation};

/// Where a ring table came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    Presented { generators: usize, relations: usize },
    RationalNormalCurve { d: usize },
    PointRing { ambient_dim: usize, points: usize },
    QuotientByForms { generator_degrees: Vec<usize> },
    PolynomialRing { nvars: usize },
}

#[derive(Clone, Debug)]
pub struct GradedRingModel<F: Field> {
    pub table: GradedAlgebraTable<F>,
    pub provenance: Provenance,
}

impl<F: Field> GradedRingModel<F> {
    pub fn presented(p: &QuadraticPresentation<F>, cutoff: usize) -> Self {
        GradedRingModel {
            table: p.expand_table(cutoff),
            provenance: Provenance::Presented {
                generators: p.num_generators(),
                relations: p.relations().dim(),
            },
        }
    }

    pub fn rational_normal_curve(field: &F, d: usize, cutoff: usize) -> Result<Self, Error> {
        Ok(GradedRingModel {
            table: rational_normal_curve(field, d, cutoff)?,
            provenance: Provenance::RationalNormalCurve { d },
        })
    }
}

/// Exponent vectors of total degree `deg` in `nvars` variables, in
/// lexicographically descending order (`x0^deg` first).
pub fn monomials(nvars: usize, deg: usize) -> Vec<Vec<usize>> {
    fn fill(prefix: &mut Vec<usize>, nvars: usize, left: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() + 1 == nvars {
            prefix.push(left);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e);
            fill(prefix, nvars, left - e, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if deg == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    fill(&mut Vec::with_capacity(nvars), nvars, deg, &mut out);
    out
}

pub fn monomial_label(exps: &[usize], names: &[String]) -> String {
    let parts: Vec<String> = exps
        .iter()
        .zip(names)
        .filter(|(e, _)| **e > 0)
        .map(|(e, n)| if *e == 1 { n.clone() } else { format!("{n}^{e}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// Dimension of the degree-`deg` part of a polynomial ring in `nvars` variables.
pub fn sym_dim(nvars: usize, deg: usize) -> usize {
    if nvars == 0 {
        return usize::from(deg == 0);
    }
    // C(deg + nvars - 1, nvars - 1), computed incrementally to stay exact
    let k = nvars - 1;
    (1..=k).fold(1usize, |acc, i| acc * (deg + i) / i)
}

/// `k[x_0..x_{n-1}]` through degree `cutoff`, monomial bases in
/// lexicographically descending order.
pub fn polynomial_ring<F: Field>(field: &F, nvars: usize, cutoff: usize) -> GradedAlgebraTable<F> {
    let names = crate::quadalg::default_names(nvars);
    let bases: Vec<Vec<Vec<usize>>> = (0..=cutoff).map(|m| monomials(nvars, m)).collect();
    let index: Vec<HashMap<Vec<usize>, usize>> = bases
        .iter()
        .map(|b| b.iter().enumerate().map(|(k, e)| (e.clone(), k)).collect())
        .collect();
    let lmul = (0..cutoff)
        .map(|m| {
            (0..nvars)
                .map(|i| {
                    let mut mat = DenseMatrix::zeros(field, bases[m + 1].len(), bases[m].len());
                    for (k, e) in bases[m].iter().enumerate() {
                        let mut e2 = e.clone();
                        e2[i] += 1;
                        mat.set(index[m + 1][&e2], k, field.one());
                    }
                    mat
                })
                .collect()
        })
        .collect();
    let labels = bases
        .iter()
        .map(|b| b.iter().map(|e| monomial_label(e, &names)).collect())
        .collect();
    let dims = bases.iter().map(Vec::len).collect();
    GradedAlgebraTable::from_left_multiplication(field, dims, lmul, labels).expect("polynomial ring")
}

/// Section ring of `O(d)` on the projective line: `A_m` is the space of
/// binary forms of degree `d·m` with basis `s^{dm-a} t^a`, ordered by `a`.
pub fn rational_normal_curve<F: Field>(
    field: &F,
    d: usize,
    cutoff: usize,
) -> Result<GradedAlgebraTable<F>, Error> {
    if d == 0 {
        return Err(Error::InvalidParameters("the degree d must be positive".into()));
    }
    let dims: Vec<usize> = (0..=cutoff).map(|m| d * m + 1).collect();
    let lmul = (0..cutoff)
        .map(|m| {
            (0..=d)
                .map(|i| {
                    let mut mat = DenseMatrix::zeros(field, dims[m + 1], dims[m]);
                    for a in 0..dims[m] {
                        mat.set(a + i, a, field.one());
                    }
                    mat
                })
                .collect()
        })
        .collect();
    let labels = (0..=cutoff)
        .map(|m| (0..dims[m]).map(|a| binary_monomial_label(d * m, a)).collect())
        .collect();
    GradedAlgebraTable::from_left_multiplication(field, dims, lmul, labels)
}

pub fn binary_monomial_label(deg: usize, a: usize) -> String {
    monomial_label(&[deg - a, a], &["s".to_string(), "t".to_string()])
}

/// The two-sided ideal generated by homogeneous elements of a commutative
/// table, degreewise through the cutoff. Each generator is `(degree, vector)`.
pub fn ideal_generated_by<F: Field>(
    ring: &GradedAlgebraTable<F>,
    generators: &[(usize, Vec<F::Elem>)],
) -> Result<Vec<SubspaceBasis<F>>, Error> {
    let f = ring.field();
    let mut ideal: Vec<SubspaceBasis<F>> = Vec::with_capacity(ring.cutoff() + 1);
    for m in 0..=ring.cutoff() {
        let mut rows: Vec<Vec<F::Elem>> = Vec::new();
        if m > 0 {
            for v in ideal[m - 1].vectors() {
                for i in 0..ring.num_generators() {
                    rows.push(ring.lmul(m - 1, i).apply(&v));
                }
            }
        }
        for (deg, g) in generators {
            if *deg == 0 {
                return Err(Error::InvalidParameters("ideal generator of degree 0".into()));
            }
            if *deg == m {
                if g.len() != ring.dim(m) {
                    return Err(Error::DimensionMismatch {
                        expected: ring.dim(m),
                        found: g.len(),
                    });
                }
                rows.push(g.clone());
            }
        }
        ideal.push(SubspaceBasis::from_vectors(f, ring.dim(m), rows));
    }
    Ok(ideal)
}

/// `ring / (generators)` for a commutative ring table.
pub fn quotient_by_forms<F: Field>(
    ring: &GradedAlgebraTable<F>,
    generators: &[(usize, Vec<F::Elem>)],
) -> Result<GradedRingModel<F>, Error> {
    let ideal = ideal_generated_by(ring, generators)?;
    let mut degrees: Vec<usize> = generators.iter().map(|(d, _)| *d).collect();
    degrees.sort_unstable();
    Ok(GradedRingModel {
        table: ring.quotient(&ideal)?,
        provenance: Provenance::QuotientByForms {
            generator_degrees: degrees,
        },
    })
}

/// `h^0(O(k))` on the projective line.
pub fn h0_p1(k: i64) -> usize {
    (k + 1).max(0) as usize
}

/// `h^1(O(k))` on the projective line.
pub fn h1_p1(k: i64) -> usize {
    (-k - 1).max(0) as usize
}
