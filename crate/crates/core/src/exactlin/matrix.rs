use std::fmt;

use super::field::Field;
use super::subspace::SubspaceBasis;

/// Row-major dense matrix over an exact field.
#[derive(Clone, PartialEq)]
pub struct DenseMatrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> DenseMatrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        DenseMatrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_data(field: &F, rows: usize, cols: usize, data: Vec<F::Elem>) -> Self {
        assert_eq!(data.len(), rows * cols, "entries length must be rows*cols");
        DenseMatrix {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    /// Builds from explicit rows; `cols` is needed when there are no rows.
    pub fn from_rows(field: &F, cols: usize, rows: Vec<Vec<F::Elem>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            data.extend(r);
        }
        DenseMatrix {
            field: field.clone(),
            rows: n,
            cols,
            data,
        }
    }

    pub fn from_i64_rows(field: &F, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Self::from_rows(field, cols, rows)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: &F, rows: usize, columns: &[Vec<F::Elem>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, v) in c.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[F::Elem] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let cur = &out.data[i * other.cols + j];
                    out.data[i * other.cols + j] = f.add(cur, &f.mul(a, b));
                }
            }
        }
        out
    }

    /// `self * v` for a column vector `v`.
    pub fn apply(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let f = &self.field;
        let mut out = vec![f.zero(); self.rows];
        for (k, x) in v.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, k);
                if !f.is_zero(a) {
                    *o = f.add(o, &f.mul(a, x));
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| f.add(a, b))
            .collect();
        Self::from_data(f, self.rows, self.cols, data)
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.field;
        let data = self.data.iter().map(|a| f.mul(a, c)).collect();
        Self::from_data(f, self.rows, self.cols, data)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Self::from_data(&self.field, self.rows + other.rows, self.cols, data)
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "row mismatch in hstack");
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend(self.row(i).iter().cloned());
            data.extend(other.row(i).iter().cloned());
        }
        Self::from_data(&self.field, self.rows, cols, data)
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut m = Self::zeros(&self.field, self.rows, cols.len());
        for i in 0..self.rows {
            for (jj, &j) in cols.iter().enumerate() {
                m.set(i, jj, self.get(i, j).clone());
            }
        }
        m
    }

    /// In-place reduction to reduced row-echelon form; returns the pivot
    /// columns. Pivot search takes the leftmost nonzero column and, within
    /// it, the first nonzero row at or below the current one.
    pub fn reduce_in_place(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == self.rows {
                break;
            }
            let Some(src) = (r..self.rows).find(|&i| !f.is_zero(self.get(i, c))) else {
                continue;
            };
            if src != r {
                for j in c..cols {
                    self.data.swap(src * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(self.get(r, c));
            if !f.is_one(&inv) {
                for j in c..cols {
                    let v = f.mul(self.get(r, j), &inv);
                    self.set(r, j, v);
                }
            }
            let (head, tail) = self.data.split_at_mut(r * cols);
            let (pivot_row, rest) = tail.split_at_mut(cols);
            let pivot_row = &*pivot_row;
            let eliminate = |row: &mut [F::Elem]| {
                let factor = row[c].clone();
                if f.is_zero(&factor) {
                    return;
                }
                for j in c..cols {
                    if !f.is_zero(&pivot_row[j]) {
                        row[j] = f.sub_mul(&row[j], &factor, &pivot_row[j]);
                    }
                }
            };
            for row in head.chunks_mut(cols) {
                eliminate(row);
            }
            for row in rest.chunks_mut(cols) {
                eliminate(row);
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().reduce_in_place().len()
    }

    /// Canonical basis of the row space.
    pub fn rref(&self) -> SubspaceBasis<F> {
        SubspaceBasis::from_matrix(self.clone())
    }

    /// Null space `{v : self * v = 0}` as a subspace of `F^cols`.
    pub fn kernel(&self) -> SubspaceBasis<F> {
        SubspaceBasis::from_vectors(&self.field, self.cols, self.kernel_vectors())
    }

    /// A basis of the null space with one vector per free column: the vector
    /// for free column `c` is `1` at `c`, `0` at the other free columns. Not
    /// in echelon form; [`DenseMatrix::kernel`] canonicalizes it.
    pub fn kernel_vectors(&self) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let mut m = self.clone();
        let pivots = m.reduce_in_place();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|fc| {
                let mut v = vec![f.zero(); self.cols];
                v[fc] = f.one();
                for (r, &pc) in pivots.iter().enumerate() {
                    let x = m.get(r, fc);
                    if !f.is_zero(x) {
                        v[pc] = f.neg(x);
                    }
                }
                v
            })
            .collect()
    }

    /// Column space `{self * v}` as a subspace of `F^rows`.
    pub fn image(&self) -> SubspaceBasis<F> {
        SubspaceBasis::from_matrix(self.transpose())
    }

    /// Inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let mut aug = self.hstack(&Self::identity(&self.field, n));
        let pivots = aug.reduce_in_place();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        Some(aug.select_columns(&cols))
    }
}

impl<F: Field> fmt::Debug for DenseMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "DenseMatrix {}x{} over {}", self.rows, self.cols, self.field.spec())?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| self.field.render(x)).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{PrimeField, Rationals};

    #[test]
    fn kernel_examples() {
        let q = Rationals;
        let k = DenseMatrix::from_i64_rows(&q, &[vec![1, 1]]).kernel();
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&[q.from_i64(1), q.from_i64(-1)]));

        assert_eq!(DenseMatrix::identity(&q, 3).kernel().dim(), 0);
        let z = DenseMatrix::zeros(&q, 2, 3).kernel();
        assert_eq!(z, SubspaceBasis::full(&q, 3));
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let f = PrimeField::new(32003).unwrap();
        let m = DenseMatrix::from_i64_rows(&f, &[vec![1, 2, 3, 4], vec![2, 4, 6, 8], vec![0, 1, 1, 0]]);
        let k = m.kernel();
        assert_eq!(k.dim(), 4 - m.rank());
        for v in k.vectors() {
            assert!(m.apply(&v).iter().all(|x| *x == 0));
        }
    }

    #[test]
    fn inverse_and_singular() {
        let q = Rationals;
        let m = DenseMatrix::from_i64_rows(&q, &[vec![2, 1], vec![1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), DenseMatrix::identity(&q, 2));
        let s = DenseMatrix::from_i64_rows(&q, &[vec![1, 2], vec![2, 4]]);
        assert!(s.inverse().is_none());
    }
}
