use super::field::Field;
use super::matrix::DenseMatrix;
use crate::error::Error;

/// A subspace of `F^n` stored by its reduced row-echelon basis.
///
/// The basis has full row rank, strictly increasing pivots, and each pivot
/// is a 1 that is the only nonzero entry of its column. RREF is unique, so
/// equal subspaces compare equal.
#[derive(Clone, PartialEq, Debug)]
pub struct SubspaceBasis<F: Field> {
    basis: DenseMatrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> SubspaceBasis<F> {
    pub fn from_matrix(mut m: DenseMatrix<F>) -> Self {
        let pivots = m.reduce_in_place();
        let cols = m.cols();
        let rank = pivots.len();
        let data = m.entries()[..rank * cols].to_vec();
        SubspaceBasis {
            basis: DenseMatrix::from_data(m.field(), rank, cols, data),
            pivots,
        }
    }

    pub fn from_vectors(field: &F, ambient_dim: usize, vectors: Vec<Vec<F::Elem>>) -> Self {
        Self::from_matrix(DenseMatrix::from_rows(field, ambient_dim, vectors))
    }

    pub fn zero(field: &F, ambient_dim: usize) -> Self {
        SubspaceBasis {
            basis: DenseMatrix::zeros(field, 0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &F, ambient_dim: usize) -> Self {
        SubspaceBasis {
            basis: DenseMatrix::identity(field, ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn field(&self) -> &F {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn basis(&self) -> &DenseMatrix<F> {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn vectors(&self) -> Vec<Vec<F::Elem>> {
        self.basis.row_vectors()
    }

    pub fn vector(&self, i: usize) -> &[F::Elem] {
        self.basis.row(i)
    }

    fn check_ambient(&self, other: &Self) -> Result<(), Error> {
        if self.ambient_dim() != other.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                found: other.ambient_dim(),
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self, Error> {
        self.check_ambient(other)?;
        Ok(Self::from_matrix(self.basis.vstack(&other.basis)))
    }

    /// Intersection by the Zassenhaus construction: row-reduce
    /// `[A | A; B | 0]`; rows with vanishing left half span `A ∩ B`.
    pub fn intersect(&self, other: &Self) -> Result<Self, Error> {
        self.check_ambient(other)?;
        let f = self.field();
        let n = self.ambient_dim();
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(f, n));
        }
        let top = self.basis.hstack(&self.basis);
        let bottom = other
            .basis
            .hstack(&DenseMatrix::zeros(f, other.dim(), n));
        let mut z = top.vstack(&bottom);
        let pivots = z.reduce_in_place();
        let rows: Vec<Vec<F::Elem>> = pivots
            .iter()
            .enumerate()
            .filter(|(_, &p)| p >= n)
            .map(|(r, _)| z.row(r)[n..].to_vec())
            .collect();
        Ok(Self::from_vectors(f, n, rows))
    }

    /// Reduces `v` against the basis; the result is zero iff `v` lies in the
    /// subspace and otherwise vanishes on every pivot column.
    pub fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.ambient_dim());
        let f = self.field();
        let mut out = v.to_vec();
        for (r, &c) in self.pivots.iter().enumerate() {
            let coef = out[c].clone();
            if f.is_zero(&coef) {
                continue;
            }
            for (j, b) in self.basis.row(r).iter().enumerate() {
                if !f.is_zero(b) {
                    out[j] = f.sub_mul(&out[j], &coef, b);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        let f = self.field();
        self.reduce(v).iter().all(|x| f.is_zero(x))
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient_dim() == other.ambient_dim()
            && self.vectors().iter().all(|v| other.contains(v))
    }

    /// `dim(self / sub)`; `sub` must be contained in `self`.
    pub fn quotient_dim(&self, sub: &Self) -> Result<usize, Error> {
        self.check_ambient(sub)?;
        if !sub.is_subspace_of(self) {
            return Err(Error::NotASubspace);
        }
        Ok(self.dim() - sub.dim())
    }

    /// Coordinates of a member vector in this basis: the pivot entries.
    pub fn coordinates(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&c| v[c].clone()).collect())
    }

    /// Image under a linear map given as a matrix acting on column vectors.
    pub fn image_under(&self, map: &DenseMatrix<F>) -> Self {
        assert_eq!(map.cols(), self.ambient_dim());
        let rows = self.vectors().iter().map(|v| map.apply(v)).collect();
        Self::from_vectors(self.field(), map.rows(), rows)
    }
}

/// `ambient / sub` with normal coordinates on the non-pivot columns of `sub`.
#[derive(Clone, Debug)]
pub struct QuotientSpace<F: Field> {
    sub: SubspaceBasis<F>,
    normal: Vec<usize>,
    position: Vec<Option<usize>>,
}

impl<F: Field> QuotientSpace<F> {
    pub fn new(sub: SubspaceBasis<F>) -> Self {
        let n = sub.ambient_dim();
        let mut position = vec![None; n];
        let mut is_pivot = vec![false; n];
        for &p in sub.pivots() {
            is_pivot[p] = true;
        }
        let normal: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
        for (k, &c) in normal.iter().enumerate() {
            position[c] = Some(k);
        }
        QuotientSpace {
            sub,
            normal,
            position,
        }
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.sub.ambient_dim()
    }

    pub fn subspace(&self) -> &SubspaceBasis<F> {
        &self.sub
    }

    /// Ambient coordinates chosen as quotient representatives.
    pub fn normal_columns(&self) -> &[usize] {
        &self.normal
    }

    pub fn normal_position(&self, ambient_index: usize) -> Option<usize> {
        self.position[ambient_index]
    }

    pub fn project(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let r = self.sub.reduce(v);
        self.normal.iter().map(|&c| r[c].clone()).collect()
    }

    /// Normal form of the ambient basis vector `e_i`.
    pub fn project_basis(&self, i: usize) -> Vec<F::Elem> {
        let f = self.sub.field();
        let mut e = vec![f.zero(); self.ambient_dim()];
        e[i] = f.one();
        self.project(&e)
    }

    /// The representative of quotient coordinates inside the ambient space.
    pub fn lift(&self, coords: &[F::Elem]) -> Vec<F::Elem> {
        let f = self.sub.field();
        let mut v = vec![f.zero(); self.ambient_dim()];
        for (k, &c) in self.normal.iter().enumerate() {
            v[c] = coords[k].clone();
        }
        v
    }

    /// The projection `ambient -> quotient` as a matrix.
    pub fn projection_matrix(&self) -> DenseMatrix<F> {
        let f = self.sub.field();
        let cols: Vec<Vec<F::Elem>> = (0..self.ambient_dim())
            .map(|i| self.project_basis(i))
            .collect();
        DenseMatrix::from_columns(f, self.dim(), &cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Rationals;

    fn span(rows: &[Vec<i64>]) -> SubspaceBasis<Rationals> {
        DenseMatrix::from_i64_rows(&Rationals, rows).rref()
    }

    #[test]
    fn rref_examples() {
        let a = span(&[vec![1, 1], vec![2, 2]]);
        assert_eq!(a.dim(), 1);
        assert_eq!(a, span(&[vec![1, 1]]));
        let id = span(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(id, SubspaceBasis::full(&Rationals, 3));
        assert_eq!(span(&[vec![0, 1], vec![1, 0]]), span(&[vec![1, 0], vec![0, 1]]));
    }

    #[test]
    fn sum_examples() {
        let e1 = span(&[vec![1, 0, 0]]);
        let e2 = span(&[vec![0, 1, 0]]);
        assert_eq!(e1.sum(&e2).unwrap(), span(&[vec![1, 0, 0], vec![0, 1, 0]]));
        assert_eq!(e1.sum(&e1).unwrap(), e1);
        let p = span(&[vec![1, 1]]);
        let m = span(&[vec![1, -1]]);
        assert_eq!(p.sum(&m).unwrap(), SubspaceBasis::full(&Rationals, 2));
        assert!(e1.sum(&p).is_err());
    }

    #[test]
    fn intersect_examples() {
        let a = span(&[vec![1, 0, 0], vec![0, 1, 0]]);
        let b = span(&[vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(a.intersect(&b).unwrap(), span(&[vec![0, 1, 0]]));
        let zero = SubspaceBasis::zero(&Rationals, 3);
        assert_eq!(a.intersect(&zero).unwrap(), zero);
    }

    #[test]
    fn quotient_projection() {
        let sub = span(&[vec![1, 1, 0]]);
        let q = QuotientSpace::new(sub);
        assert_eq!(q.dim(), 2);
        assert_eq!(q.normal_columns(), &[1, 2]);
        // e0 ≡ -e1 modulo (1,1,0)
        let r = Rationals;
        assert_eq!(q.project_basis(0), vec![r.from_i64(-1), r.from_i64(0)]);
        assert_eq!(q.project(&q.lift(&[r.from_i64(3), r.from_i64(5)])), vec![r.from_i64(3), r.from_i64(5)]);
    }
}
