use serde::Serialize;

use crate::error::Error;
use crate::exactlin::{DenseMatrix, Field, SubspaceBasis};

/// Hilbert function `h_0..h_N` of a graded algebra or module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertTruncation(pub Vec<usize>);

impl HilbertTruncation {
    pub fn coefficients(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }
}

/// Expresses each basis element of `A_p` through products `x_i * b_k` with
/// `b_k` a basis element of `A_{p-1}`: `a = sum_l coeffs[l][a] * x_{pairs[l].0} * b_{pairs[l].1}`.
#[derive(Clone, Debug)]
pub struct Lift<F: Field> {
    pub pairs: Vec<(usize, usize)>,
    pub coeffs: DenseMatrix<F>,
}

/// A graded left module over a [`GradedAlgebraTable`], described by the
/// action of the algebra's generators.
pub trait LeftModule<F: Field> {
    fn module_dim(&self, degree: usize) -> usize;
    /// `x_i * v` for `v` of the given degree.
    fn apply_generator(&self, i: usize, degree: usize, v: &[F::Elem]) -> Vec<F::Elem>;
}

impl<F: Field> LeftModule<F> for GradedAlgebraTable<F> {
    fn module_dim(&self, degree: usize) -> usize {
        self.dim(degree)
    }

    fn apply_generator(&self, i: usize, degree: usize, v: &[F::Elem]) -> Vec<F::Elem> {
        self.lmul[degree][i].apply(v)
    }
}

/// Degreewise model of a graded algebra `A = A_0 + A_1 + ...` generated in
/// degree 1, truncated at a cutoff. `A_1`'s basis doubles as the generator
/// list; `lmul[m][i]` is left multiplication by generator `i` on `A_m`.
#[derive(Clone, Debug)]
pub struct GradedAlgebraTable<F: Field> {
    field: F,
    dims: Vec<usize>,
    lmul: Vec<Vec<DenseMatrix<F>>>,
    labels: Vec<Vec<String>>,
    lifts: Vec<Option<Lift<F>>>,
}

impl<F: Field> GradedAlgebraTable<F> {
    /// Validates shapes, unit behaviour and generation in degree 1, then
    /// precomputes the lifts.
    pub fn from_left_multiplication(
        field: &F,
        dims: Vec<usize>,
        lmul: Vec<Vec<DenseMatrix<F>>>,
        labels: Vec<Vec<String>>,
    ) -> Result<Self, Error> {
        if dims.first() != Some(&1) {
            return Err(Error::Construction("dim A_0 must be 1".into()));
        }
        let cutoff = dims.len() - 1;
        if lmul.len() != cutoff || labels.len() != dims.len() {
            return Err(Error::Construction("table shape does not match cutoff".into()));
        }
        let n = if cutoff >= 1 { dims[1] } else { 0 };
        for (m, maps) in lmul.iter().enumerate() {
            if maps.len() != n {
                return Err(Error::Construction(format!(
                    "degree {m}: expected {n} multiplication maps, found {}",
                    maps.len()
                )));
            }
            for mat in maps {
                if mat.rows() != dims[m + 1] || mat.cols() != dims[m] {
                    return Err(Error::Construction(format!(
                        "degree {m}: multiplication map has wrong shape"
                    )));
                }
            }
        }
        for (m, l) in labels.iter().enumerate() {
            if l.len() != dims[m] {
                return Err(Error::Construction(format!("degree {m}: label count mismatch")));
            }
        }
        if cutoff >= 1 {
            for i in 0..n {
                let col = lmul[0][i].column(0);
                let unit = col
                    .iter()
                    .enumerate()
                    .all(|(k, v)| if k == i { field.is_one(v) } else { field.is_zero(v) });
                if !unit {
                    return Err(Error::Construction(
                        "generator times the unit must be the generator".into(),
                    ));
                }
            }
        }
        let mut table = GradedAlgebraTable {
            field: field.clone(),
            dims,
            lmul,
            labels,
            lifts: Vec::new(),
        };
        table.lifts = (0..=cutoff).map(|p| table.compute_lift(p)).collect::<Result<_, _>>()?;
        Ok(table)
    }

    fn compute_lift(&self, p: usize) -> Result<Option<Lift<F>>, Error> {
        if p == 0 {
            return Ok(None);
        }
        let n = self.num_generators();
        let prev = self.dims[p - 1];
        let mut columns = Vec::with_capacity(n * prev);
        let mut all_pairs = Vec::with_capacity(n * prev);
        for i in 0..n {
            for k in 0..prev {
                columns.push(self.lmul[p - 1][i].column(k));
                all_pairs.push((i, k));
            }
        }
        let products = DenseMatrix::from_columns(&self.field, self.dims[p], &columns);
        let pivots = products.clone().reduce_in_place();
        if pivots.len() != self.dims[p] {
            return Err(Error::Construction(format!(
                "algebra is not generated in degree 1: A_1 * A_{} has rank {} < {}",
                p - 1,
                pivots.len(),
                self.dims[p]
            )));
        }
        let square = products.select_columns(&pivots);
        let coeffs = square
            .inverse()
            .ok_or_else(|| Error::Internal("pivot columns not invertible".into()))?;
        Ok(Some(Lift {
            pairs: pivots.iter().map(|&c| all_pairs[c]).collect(),
            coeffs,
        }))
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn cutoff(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, m: usize) -> usize {
        self.dims.get(m).copied().unwrap_or(0)
    }

    pub fn num_generators(&self) -> usize {
        if self.cutoff() >= 1 {
            self.dims[1]
        } else {
            0
        }
    }

    /// Left multiplication by generator `i` as a map `A_m -> A_{m+1}`.
    pub fn lmul(&self, m: usize, i: usize) -> &DenseMatrix<F> {
        &self.lmul[m][i]
    }

    pub fn labels(&self, m: usize) -> &[String] {
        &self.labels[m]
    }

    pub fn lift(&self, p: usize) -> &Lift<F> {
        self.lifts[p].as_ref().expect("no lift in degree 0")
    }

    pub fn hilbert_function(&self) -> HilbertTruncation {
        HilbertTruncation(self.dims.clone())
    }

    /// The same algebra truncated at a lower cutoff.
    pub fn truncate(&self, cutoff: usize) -> Self {
        assert!(cutoff <= self.cutoff());
        GradedAlgebraTable {
            field: self.field.clone(),
            dims: self.dims[..=cutoff].to_vec(),
            lmul: self.lmul[..cutoff].to_vec(),
            labels: self.labels[..=cutoff].to_vec(),
            lifts: self.lifts[..=cutoff].to_vec(),
        }
    }

    /// Product `u * v` of `u ∈ A_p` and `v ∈ A_q`, computed from generator
    /// multiplications through the lifts.
    pub fn multiply(&self, p: usize, u: &[F::Elem], q: usize, v: &[F::Elem]) -> Vec<F::Elem> {
        assert!(p + q <= self.cutoff(), "product beyond cutoff");
        self.act(p, u, q, v, self)
    }

    /// Action of `u ∈ A_p` on a degree-`q` vector of a left module.
    pub fn act<M: LeftModule<F> + ?Sized>(
        &self,
        p: usize,
        u: &[F::Elem],
        q: usize,
        v: &[F::Elem],
        module: &M,
    ) -> Vec<F::Elem> {
        let f = &self.field;
        if p == 0 {
            return v.iter().map(|x| f.mul(&u[0], x)).collect();
        }
        let lift = self.lift(p);
        let n = self.num_generators();
        // coefficient of x_i * b_k, summed over the basis of A_p
        let mut per_gen: Vec<Vec<F::Elem>> = vec![vec![f.zero(); self.dims[p - 1]]; n];
        for (l, &(i, k)) in lift.pairs.iter().enumerate() {
            let mut c = f.zero();
            for (a, ua) in u.iter().enumerate() {
                if !f.is_zero(ua) {
                    c = f.add(&c, &f.mul(ua, lift.coeffs.get(l, a)));
                }
            }
            per_gen[i][k] = f.add(&per_gen[i][k], &c);
        }
        let mut out = vec![f.zero(); module.module_dim(q + p)];
        for (i, y) in per_gen.iter().enumerate() {
            if y.iter().all(|x| f.is_zero(x)) {
                continue;
            }
            let inner = self.act(p - 1, y, q, v, module);
            let term = module.apply_generator(i, q + p - 1, &inner);
            for (o, t) in out.iter_mut().zip(&term) {
                *o = f.add(o, t);
            }
        }
        out
    }

    /// Checks `(a*b)*c = a*(b*c)` on all basis triples of total degree at most
    /// `max_degree`. Returns the first failing triple of degrees.
    pub fn check_associativity(&self, max_degree: usize) -> Result<(), (usize, usize, usize)> {
        let f = &self.field;
        let top = max_degree.min(self.cutoff());
        let basis = |m: usize, k: usize| {
            let mut e = vec![f.zero(); self.dims[m]];
            e[k] = f.one();
            e
        };
        for p in 0..=top {
            for q in 0..=top - p {
                for r in 0..=top - p - q {
                    for a in 0..self.dims[p] {
                        for b in 0..self.dims[q] {
                            let ea = basis(p, a);
                            let eb = basis(q, b);
                            let ab = self.multiply(p, &ea, q, &eb);
                            for c in 0..self.dims[r] {
                                let ec = basis(r, c);
                                let left = self.multiply(p + q, &ab, r, &ec);
                                let bc = self.multiply(q, &eb, r, &ec);
                                let right = self.multiply(p, &ea, q + r, &bc);
                                if left != right {
                                    return Err((p, q, r));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Whether all generator multiplications commute.
    pub fn is_commutative(&self) -> bool {
        let n = self.num_generators();
        (0..self.cutoff().saturating_sub(1)).all(|m| {
            (0..n).all(|i| {
                (0..n).all(|j| {
                    self.lmul[m + 1][i].mul(&self.lmul[m][j]) == self.lmul[m + 1][j].mul(&self.lmul[m][i])
                })
            })
        })
    }

    /// `A / I` for a graded two-sided ideal given degreewise (`ideal[m] ⊆ A_m`).
    /// The quotient's generators are the normal basis of `A_1 / I_1`.
    pub fn quotient(&self, ideal: &[SubspaceBasis<F>]) -> Result<Self, Error> {
        use crate::exactlin::QuotientSpace;
        let cutoff = self.cutoff();
        if ideal.len() != cutoff + 1 {
            return Err(Error::Construction("ideal must be given in every degree".into()));
        }
        if !ideal[0].is_zero() {
            return Err(Error::Construction("ideal contains the unit".into()));
        }
        for m in 0..cutoff {
            for i in 0..self.num_generators() {
                for v in ideal[m].vectors() {
                    if !ideal[m + 1].contains(&self.lmul[m][i].apply(&v)) {
                        return Err(Error::Construction(format!(
                            "subspaces are not closed under multiplication in degree {m}"
                        )));
                    }
                }
            }
        }
        let quotients: Vec<QuotientSpace<F>> =
            ideal.iter().map(|s| QuotientSpace::new(s.clone())).collect();
        let dims: Vec<usize> = quotients.iter().map(QuotientSpace::dim).collect();
        let gens: Vec<usize> = if cutoff >= 1 {
            quotients[1].normal_columns().to_vec()
        } else {
            Vec::new()
        };
        let mut lmul = Vec::with_capacity(cutoff);
        for m in 0..cutoff {
            let maps = gens
                .iter()
                .map(|&g| {
                    let cols: Vec<Vec<F::Elem>> = quotients[m]
                        .normal_columns()
                        .iter()
                        .map(|&b| quotients[m + 1].project(&self.lmul[m][g].column(b)))
                        .collect();
                    DenseMatrix::from_columns(&self.field, dims[m + 1], &cols)
                })
                .collect();
            lmul.push(maps);
        }
        let labels = quotients
            .iter()
            .enumerate()
            .map(|(m, q)| q.normal_columns().iter().map(|&c| self.labels[m][c].clone()).collect())
            .collect();
        Self::from_left_multiplication(&self.field, dims, lmul, labels)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gring::polynomial_ring;
    use crate::exactlin::PrimeField;

    #[test]
    fn polynomial_ring_products_are_associative_and_commutative() {
        let f = PrimeField::new(32003).unwrap();
        let t = polynomial_ring(&f, 3, 4);
        assert_eq!(t.dims(), &[1, 3, 6, 10, 15]);
        assert!(t.check_associativity(4).is_ok());
        assert!(t.is_commutative());
    }

    #[test]
    fn truncation_keeps_prefix() {
        let f = PrimeField::new(32003).unwrap();
        let t = polynomial_ring(&f, 2, 5).truncate(3);
        assert_eq!(t.hilbert_function(), HilbertTruncation(vec![1, 2, 3, 4]));
    }

    #[test]
    fn quotient_by_a_monomial_ideal() {
        // k[x, y] / (x*y): x^a and y^b survive
        let f = PrimeField::new(32003).unwrap();
        let t = polynomial_ring(&f, 2, 3);
        let mut xy = vec![f.zero(); 3];
        xy[1] = f.one();
        let ideal = crate::gring::ideal_generated_by(&t, &[(2, xy)]).unwrap();
        let q = t.quotient(&ideal).unwrap();
        assert_eq!(q.dims(), &[1, 2, 2, 2]);
        let x = vec![f.one(), f.zero()];
        let y = vec![f.zero(), f.one()];
        assert!(q.multiply(1, &x, 1, &y).iter().all(|c| f.is_zero(c)));
        let bad = vec![SubspaceBasis::zero(&f, 1), SubspaceBasis::zero(&f, 2), SubspaceBasis::full(&f, 3), SubspaceBasis::zero(&f, 4)];
        assert!(t.quotient(&bad).is_err());
    }
}
