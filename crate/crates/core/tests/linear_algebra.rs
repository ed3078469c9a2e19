use proptest::prelude::*;
use quadkit::exactlin::{DenseMatrix, Field, PrimeField, Rationals, SubspaceBasis};

fn gf() -> PrimeField {
    PrimeField::new(32003).unwrap()
}

fn small_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-3i64..=3, c), r)
    })
}

fn vectors(count: usize, n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, n), 0..=count)
}

fn subspace<F: Field>(f: &F, n: usize, rows: &[Vec<i64>]) -> SubspaceBasis<F> {
    let vecs = rows
        .iter()
        .map(|r| r.iter().map(|&x| f.from_i64(x)).collect())
        .collect();
    SubspaceBasis::from_vectors(f, n, vecs)
}

proptest! {
    #[test]
    fn rref_is_idempotent(rows in small_matrix(6, 6)) {
        let f = gf();
        let m = DenseMatrix::from_i64_rows(&f, &rows);
        let once = m.rref();
        let twice = once.basis().rref();
        prop_assert_eq!(once.basis(), twice.basis());
    }

    #[test]
    fn rref_is_canonical_under_row_operations(rows in small_matrix(5, 6), mix in prop::collection::vec(-4i64..=4, 25)) {
        let f = gf();
        let m = DenseMatrix::from_i64_rows(&f, &rows);
        // left-multiply by a unit lower-triangular matrix
        let r = m.rows();
        let mut t = DenseMatrix::identity(&f, r);
        for i in 0..r {
            for j in 0..i {
                t.set(i, j, f.from_i64(mix[i * 5 + j]));
            }
        }
        let (before, after) = (m.rref(), t.mul(&m).rref());
        prop_assert_eq!(before.basis(), after.basis());
    }

    #[test]
    fn rank_plus_nullity(rows in small_matrix(6, 7)) {
        let f = gf();
        let m = DenseMatrix::from_i64_rows(&f, &rows);
        prop_assert_eq!(m.rank() + m.kernel().dim(), m.cols());
        for v in m.kernel().vectors() {
            prop_assert!(m.apply(&v).iter().all(|x| f.is_zero(x)));
        }
    }

    #[test]
    fn modular_law(a in vectors(3, 5), b in vectors(3, 5), c in vectors(3, 5)) {
        // A ⊆ C  ⇒  A + (B ∩ C) = (A + B) ∩ C
        let f = gf();
        let n = 5;
        let cs = subspace(&f, n, &c);
        let a_raw = subspace(&f, n, &a);
        let a = a_raw.intersect(&cs).unwrap();
        let b = subspace(&f, n, &b);
        let lhs = a.sum(&b.intersect(&cs).unwrap()).unwrap();
        let rhs = a.sum(&b).unwrap().intersect(&cs).unwrap();
        prop_assert_eq!(lhs.basis(), rhs.basis());
    }

    #[test]
    fn dimension_formula(a in vectors(4, 6), b in vectors(4, 6)) {
        let f = gf();
        let a = subspace(&f, 6, &a);
        let b = subspace(&f, 6, &b);
        let sum = a.sum(&b).unwrap().dim();
        let cap = a.intersect(&b).unwrap().dim();
        prop_assert_eq!(sum + cap, a.dim() + b.dim());
    }

    #[test]
    fn rank_is_field_independent_for_small_integers(rows in small_matrix(5, 5)) {
        // entries bounded by 3 on a 5x5: every minor is below 3^5 * 5! in
        // absolute value, far under both primes, so ranks agree with Q
        let q = DenseMatrix::from_i64_rows(&Rationals, &rows).rank();
        let p1 = DenseMatrix::from_i64_rows(&gf(), &rows).rank();
        let p2 = DenseMatrix::from_i64_rows(&PrimeField::new(65537).unwrap(), &rows).rank();
        prop_assert_eq!(q, p1);
        prop_assert_eq!(q, p2);
    }
}

#[test]
fn inverse_round_trip() {
    let f = gf();
    let m = DenseMatrix::from_i64_rows(&f, &[vec![2, 1, 0], vec![0, 1, 4], vec![1, 0, 1]]);
    let inv = m.inverse().unwrap();
    assert_eq!(m.mul(&inv), DenseMatrix::identity(&f, 3));
    let singular = DenseMatrix::from_i64_rows(&f, &[vec![1, 2], vec![2, 4]]);
    assert!(singular.inverse().is_none());
}
