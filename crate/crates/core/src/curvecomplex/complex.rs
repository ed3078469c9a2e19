use serde::Serialize;

use crate::error::Error;
use crate::exactlin::{DenseMatrix, Field};
use crate::gring::{h0_p1, BinaryForm};

use super::model::{mult_block, TwistedSectionModel};

/// The complex `… → U⊗R(-3) → V⊗R(-2) → U⊗R(-1) → R` truncated at
/// homological index `depth` and internal degree `window`. In degree `n`
/// the term of index `p ≥ 1` is `C ⊗ R_{n-p}` with `C = U` for odd and
/// `C = V` for even `p`, coordinates ordered coefficient-major.
#[derive(Clone, Debug)]
pub struct KComplex<F: Field> {
    field: F,
    d: usize,
    depth: usize,
    window: usize,
    /// `diffs[p - 1][n]` is `d_p` in internal degree `n`.
    diffs: Vec<Vec<DenseMatrix<F>>>,
}

impl<F: Field> KComplex<F> {
    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn window(&self) -> usize {
        self.window
    }

    /// `dim K_{p,n}`.
    pub fn term_dim(&self, p: usize, n: usize) -> usize {
        let coeff = if p == 0 { 1 } else { 2 };
        if n < p {
            0
        } else {
            coeff * (self.d * (n - p) + 1)
        }
    }

    pub fn coefficient_dims(&self) -> Vec<usize> {
        (0..=self.depth).map(|p| if p == 0 { 1 } else { 2 }).collect()
    }

    /// `d_p` in internal degree `n`, for `1 ≤ p ≤ depth`.
    pub fn differential(&self, p: usize, n: usize) -> &DenseMatrix<F> {
        &self.diffs[p - 1][n]
    }

    fn rank_of(&self, p: usize, n: usize) -> usize {
        if p == 0 || p > self.depth {
            0
        } else {
            self.diffs[p - 1][n].rank()
        }
    }

    /// `dim H_p(K)_n`; unknown for `p = depth`, whose outgoing image is not
    /// part of the truncation.
    pub fn homology(&self, p: usize, n: usize) -> Option<usize> {
        if p >= self.depth && self.depth > 0 || n > self.window {
            return None;
        }
        Some(self.term_dim(p, n) - self.rank_of(p, n) - self.rank_of(p + 1, n))
    }

    pub fn homology_table(&self) -> HomologyTable {
        let cells = (0..=self.depth)
            .map(|p| (0..=self.window).map(|n| self.homology(p, n)).collect())
            .collect();
        HomologyTable { cells }
    }

    /// Composites `d_{p} ∘ d_{p+1}` in every degree of the window; returns the
    /// first nonzero one.
    pub fn check_square_zero(&self) -> Result<(), (usize, usize)> {
        for p in 1..self.depth {
            for n in 0..=self.window {
                let a = &self.diffs[p - 1][n];
                let b = &self.diffs[p][n];
                if a.cols() > 0 && b.cols() > 0 && !a.mul(b).is_zero() {
                    return Err((p, n));
                }
            }
        }
        Ok(())
    }
}

/// `H_p(K)_n` for `0 ≤ p ≤ depth`, `0 ≤ n ≤ window`; `None` is unknown.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyTable {
    pub cells: Vec<Vec<Option<usize>>>,
}

impl HomologyTable {
    pub fn get(&self, p: usize, n: usize) -> Option<usize> {
        self.cells.get(p).and_then(|r| r.get(n)).copied().flatten()
    }
}

/// Block matrix from a grid of blocks with consistent row and column sizes.
fn blocks<F: Field>(field: &F, grid: Vec<Vec<DenseMatrix<F>>>) -> DenseMatrix<F> {
    let mut out: Option<DenseMatrix<F>> = None;
    for row in grid {
        let mut line: Option<DenseMatrix<F>> = None;
        for b in row {
            line = Some(match line {
                None => b,
                Some(l) => l.hstack(&b),
            });
        }
        let line = line.expect("nonempty block row");
        out = Some(match out {
            None => line,
            Some(o) => o.vstack(&line),
        });
    }
    out.unwrap_or_else(|| DenseMatrix::zeros(field, 0, 0))
}

/// Builds `K` from a model. The odd differentials factor through division
/// by the pencil `Ū` and the even ones through the pencil `V`:
///
/// * `d_1(u_c ⊗ r) = f0·ū_c·r`
/// * `d_{2k}(v_c ⊗ r) = (ū_2 v_c r) ⊗ u_1 − (ū_1 v_c r) ⊗ u_2`
/// * `d_{2k+1}(u_c ⊗ r) = (f_1 ū_c r) ⊗ v_1 − (f_0 ū_c r) ⊗ v_2`
///
/// `d ∘ d = 0` is verified before returning.
pub fn build_k_complex<F: Field>(
    model: &TwistedSectionModel<F>,
    depth: usize,
    window: usize,
) -> Result<KComplex<F>, Error> {
    let f = model.field();
    let d = model.d() as i64;
    let [u1, u2] = model.u_bar();
    let [v1, v2] = model.v_basis();
    let prod = |a: &BinaryForm<F>, b: &BinaryForm<F>| a.mul(f, b);
    let neg = |a: &BinaryForm<F>| BinaryForm::new(a.coeffs().iter().map(|c| f.neg(c)).collect());
    let mut diffs = Vec::with_capacity(depth);
    for p in 1..=depth {
        let per_degree = (0..=window)
            .map(|n| {
                // source coefficient forms act on R_{n-p}
                let src = d * (n as i64 - p as i64);
                let grid: Vec<Vec<BinaryForm<F>>> = if p == 1 {
                    vec![vec![prod(model.f0(), u1), prod(model.f0(), u2)]]
                } else if p % 2 == 0 {
                    vec![
                        vec![prod(u2, v1), prod(u2, v2)],
                        vec![neg(&prod(u1, v1)), neg(&prod(u1, v2))],
                    ]
                } else {
                    vec![
                        vec![prod(model.f1(), u1), prod(model.f1(), u2)],
                        vec![neg(&prod(model.f0(), u1)), neg(&prod(model.f0(), u2))],
                    ]
                };
                let grid = grid
                    .iter()
                    .map(|row| row.iter().map(|g| mult_block(f, g, src)).collect())
                    .collect();
                blocks(f, grid)
            })
            .collect();
        diffs.push(per_degree);
    }
    let k = KComplex {
        field: f.clone(),
        d: model.d(),
        depth,
        window,
        diffs,
    };
    for p in 1..=depth {
        for n in 0..=window {
            let m = k.differential(p, n);
            if m.rows() != k.term_dim(p - 1, n) || m.cols() != k.term_dim(p, n) {
                return Err(Error::Internal(format!("d_{p} in degree {n} has the wrong shape")));
            }
        }
    }
    if let Err((p, n)) = k.check_square_zero() {
        return Err(Error::Internal(format!(
            "d_{p} ∘ d_{} is nonzero in degree {n}",
            p + 1
        )));
    }
    let _ = &k.field;
    Ok(k)
}

/// Independent evaluation of `H_p(K)_n` for `p ≥ 1` from the cokernels
///
/// * `H_{2k+1}(K)_n = coker(V ⊗ H^0(O(d(n-2k-2))) → H^0(O(d(n-2k-2) + e)))`
/// * `H_{2k}(K)_n = coker(Ū ⊗ H^0(O(d(n-2k-1))) → H^0(O(d(n-2k) - e)))`
pub fn closed_form_homology<F: Field>(model: &TwistedSectionModel<F>, p: usize, n: usize) -> usize {
    assert!(p >= 1);
    let f = model.field();
    let d = model.d() as i64;
    let e = model.e() as i64;
    let (forms, src, target) = if p % 2 == 1 {
        let m = d * (n as i64 - p as i64 - 1);
        (model.v_basis(), m, m + e)
    } else {
        let [u1, u2] = model.u_bar();
        let m = d * (n as i64 - p as i64 - 1);
        ([u1, u2], m, d * (n as i64 - p as i64) - e)
    };
    let target_dim = h0_p1(target);
    if src < 0 {
        return target_dim;
    }
    let map = mult_block(f, forms[0], src).hstack(&mult_block(f, forms[1], src));
    debug_assert_eq!(map.rows(), target_dim);
    target_dim - map.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::PrimeField;

    #[test]
    fn twisted_cubic_complex_is_a_complex() {
        let f = PrimeField::new(32003).unwrap();
        let m = TwistedSectionModel::build(&f, 3, 2, 9, 6).unwrap();
        let k = build_k_complex(&m, 4, 6).unwrap();
        assert_eq!(k.coefficient_dims(), vec![1, 2, 2, 2, 2]);
        let h = k.homology_table();
        // H_0 is the coordinate ring of the two points of D
        assert_eq!(h.cells[0], vec![Some(1), Some(2), Some(2), Some(2), Some(2), Some(2), Some(2)]);
    }

    #[test]
    fn closed_forms_match_ranks() {
        let f = PrimeField::new(32003).unwrap();
        for (d, e) in [(2, 1), (3, 1), (3, 2), (4, 3)] {
            let m = TwistedSectionModel::build(&f, d, e, 3, 8).unwrap();
            let k = build_k_complex(&m, 4, 8).unwrap();
            for p in 1..4 {
                for n in 0..=8 {
                    assert_eq!(k.homology(p, n), Some(closed_form_homology(&m, p, n)), "d={d} e={e} p={p} n={n}");
                }
            }
        }
    }

    #[test]
    fn depth_one_is_a_single_map() {
        let f = PrimeField::new(32003).unwrap();
        let m = TwistedSectionModel::build(&f, 2, 1, 3, 4).unwrap();
        let k = build_k_complex(&m, 1, 4).unwrap();
        assert_eq!(k.homology(0, 3), Some(1));
        assert_eq!(k.homology(1, 3), None);
    }
}
