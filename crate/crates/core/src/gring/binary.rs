//! Binary forms in `s, t`. A form of degree `n` is the coefficient vector
//! `c_0..c_n` of `s^n, s^{n-1}t, .., t^n`.

use crate::exactlin::{DenseMatrix, Field};

#[derive(Clone, Debug, PartialEq)]
pub struct BinaryForm<F: Field> {
    coeffs: Vec<F::Elem>,
}

impl<F: Field> BinaryForm<F> {
    pub fn new(coeffs: Vec<F::Elem>) -> Self {
        assert!(!coeffs.is_empty(), "a binary form needs a degree");
        BinaryForm { coeffs }
    }

    pub fn from_i64(field: &F, coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn constant(field: &F) -> Self {
        Self::new(vec![field.one()])
    }

    /// The linear form `a·s + b·t`.
    pub fn linear(a: F::Elem, b: F::Elem) -> Self {
        Self::new(vec![a, b])
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self, field: &F) -> bool {
        self.coeffs.iter().all(|c| field.is_zero(c))
    }

    pub fn mul(&self, field: &F, other: &Self) -> Self {
        let mut out = vec![field.zero(); self.degree() + other.degree() + 1];
        for (a, x) in self.coeffs.iter().enumerate() {
            if field.is_zero(x) {
                continue;
            }
            for (b, y) in other.coeffs.iter().enumerate() {
                out[a + b] = field.add(&out[a + b], &field.mul(x, y));
            }
        }
        Self::new(out)
    }

    pub fn product(field: &F, forms: &[Self]) -> Self {
        forms
            .iter()
            .fold(Self::constant(field), |acc, g| acc.mul(field, g))
    }

    /// Matrix of `h ↦ self·h` from forms of degree `k` to degree `k + deg`.
    pub fn multiplication_matrix(&self, field: &F, k: usize) -> DenseMatrix<F> {
        let mut m = DenseMatrix::zeros(field, k + self.degree() + 1, k + 1);
        for col in 0..=k {
            for (a, c) in self.coeffs.iter().enumerate() {
                m.set(col + a, col, c.clone());
            }
        }
        m
    }

    /// `self / divisor` when the division is exact, `None` otherwise.
    pub fn divide_exact(&self, field: &F, divisor: &Self) -> Option<Self> {
        if divisor.degree() > self.degree() {
            return if self.is_zero(field) {
                Some(Self::new(vec![field.zero(); 1]))
            } else {
                None
            };
        }
        let k = self.degree() - divisor.degree();
        let m = divisor.multiplication_matrix(field, k);
        solve(field, &m, &self.coeffs).map(Self::new)
    }

    /// Whether `self` and `other` have no common zero on the projective line,
    /// via the rank of their Sylvester matrix.
    pub fn coprime_with(&self, field: &F, other: &Self) -> bool {
        let (m, n) = (self.degree(), other.degree());
        if m + n == 0 {
            return !self.is_zero(field) && !other.is_zero(field);
        }
        sylvester(field, self, other).rank() == m + n
    }
}

/// Sylvester matrix of two binary forms: the map
/// `(u, v) ↦ u·f + v·g` on forms of degrees `n-1` and `m-1`.
pub fn sylvester<F: Field>(field: &F, f: &BinaryForm<F>, g: &BinaryForm<F>) -> DenseMatrix<F> {
    let (m, n) = (f.degree(), g.degree());
    let a = if n == 0 {
        DenseMatrix::zeros(field, m + n, 0)
    } else {
        f.multiplication_matrix(field, n - 1)
    };
    let b = if m == 0 {
        DenseMatrix::zeros(field, m + n, 0)
    } else {
        g.multiplication_matrix(field, m - 1)
    };
    a.hstack(&b)
}

/// Some `x` with `m·x = y`, if one exists.
pub fn solve<F: Field>(field: &F, m: &DenseMatrix<F>, y: &[F::Elem]) -> Option<Vec<F::Elem>> {
    let mut cols: Vec<Vec<F::Elem>> = (0..m.cols()).map(|j| m.column(j)).collect();
    cols.push(y.iter().map(|v| field.neg(v)).collect());
    let last = m.cols();
    let v = DenseMatrix::from_columns(field, m.rows(), &cols)
        .kernel()
        .vectors()
        .into_iter()
        .find(|v| !field.is_zero(&v[last]))?;
    let scale = field.inv(&v[last]);
    Some(v[..last].iter().map(|x| field.mul(x, &scale)).collect())
}

/// Coefficient vectors of the basis `s^{k-a} t^a` as forms.
pub fn monomial_basis<F: Field>(field: &F, k: usize) -> Vec<BinaryForm<F>> {
    (0..=k)
        .map(|a| {
            let mut c = vec![field.zero(); k + 1];
            c[a] = field.one();
            BinaryForm::new(c)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{PrimeField, Rationals};

    #[test]
    fn product_and_division_roundtrip() {
        let f = Rationals;
        let a = BinaryForm::from_i64(&f, &[1, -2]);
        let b = BinaryForm::from_i64(&f, &[3, 0, 5]);
        let ab = a.mul(&f, &b);
        assert_eq!(ab.degree(), 3);
        assert_eq!(ab.divide_exact(&f, &a), Some(b.clone()));
        let c = BinaryForm::from_i64(&f, &[1, 1]);
        assert_eq!(ab.divide_exact(&f, &c), None);
    }

    #[test]
    fn resultant_detects_common_roots() {
        let f = PrimeField::new(32003).unwrap();
        let s = BinaryForm::from_i64(&f, &[1, 0]);
        let t = BinaryForm::from_i64(&f, &[0, 1]);
        let s2 = s.mul(&f, &s);
        let st = s.mul(&f, &t);
        let t2 = t.mul(&f, &t);
        assert!(!s2.coprime_with(&f, &st));
        assert!(s2.coprime_with(&f, &t2));
        assert!(s.coprime_with(&f, &t));
    }
}
