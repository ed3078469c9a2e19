use proptest::prelude::*;
use quadkit::exactlin::{Field, PrimeField, Rationals};
use quadkit::gring::{minimal_free_resolution, GradedModuleTable};
use quadkit::quadalg::*;

fn gf() -> PrimeField {
    PrimeField::new(32003).unwrap()
}

/// `k[x,y,z]/(x² + yz, xz, y²)`: quadratic, not Koszul.
fn non_koszul<F: Field>(f: &F) -> QuadraticPresentation<F> {
    let t = |a: usize, b: usize| (vec![a, b], f.one());
    QuadraticPresentation::from_terms(
        f,
        default_names(3),
        true,
        &[vec![t(0, 0), t(1, 2)], vec![t(0, 2)], vec![t(1, 1)]],
    )
    .unwrap()
}

fn random_presentation(
    f: &PrimeField,
    n: usize,
    commutative: bool,
    rels: &[Vec<(usize, usize, i64)>],
) -> QuadraticPresentation<PrimeField> {
    let terms: Vec<Terms<u64>> = rels
        .iter()
        .map(|r| {
            r.iter()
                .map(|&(a, b, c)| (vec![a % n, b % n], f.from_i64(c)))
                .collect()
        })
        .collect();
    QuadraticPresentation::from_terms(f, default_names(n), commutative, &terms).unwrap()
}

fn relations() -> impl Strategy<Value = Vec<Vec<(usize, usize, i64)>>> {
    prop::collection::vec(prop::collection::vec((0usize..4, 0usize..4, -5i64..=5), 1..3), 0..4)
}

#[test]
fn pinned_non_koszul_fixture() {
    let f = gf();
    let p = non_koszul(&f);
    assert_eq!(p.expand_table(6).dims(), naive_quadratic_dims(&p, 6).as_slice());
    assert_eq!(p.expand_table(5).dims(), &[1, 3, 3, 1, 1, 1]);
    assert_eq!(
        koszul_numeric_check(&p, 6),
        NumericVerdict::Inconsistent { degree: 4, coefficient: 1 }
    );
    assert_eq!(is_koszul_to(&p.expand_table(5), 4), KoszulVerdict::Violation { i: 3, j: 4 });
    assert!(matches!(distributivity_check(&p, 3), DistributivityVerdict::Distributive { .. }));
    assert!(matches!(distributivity_check(&p, 4), DistributivityVerdict::NotDistributive { .. }));
    let q = non_koszul(&Rationals);
    assert_eq!(
        koszul_numeric_check(&q, 6),
        NumericVerdict::Inconsistent { degree: 4, coefficient: 1 }
    );
}

#[test]
fn symmetric_algebras_have_binomial_diagonals() {
    let f = gf();
    for n in 2..=4 {
        let t = QuadraticPresentation::symmetric(&f, n).expand_table(6);
        let b = betti_trivial_module(&t, 5, 6);
        for i in 0..=5usize {
            let binom = (0..i).fold(1i64, |acc, k| acc * (n as i64 - k as i64) / (k as i64 + 1));
            assert_eq!(b.get(i, i), Some(binom as usize));
        }
        assert_eq!(koszul_verdict(&b, 5), KoszulVerdict::KoszulTo { n: 5 });
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn double_dual_is_the_original(comm in any::<bool>(), n in 2usize..=3, rels in relations()) {
        let f = gf();
        let p = random_presentation(&f, n, comm, &rels);
        let dd = p.quadratic_dual().quadratic_dual();
        prop_assert_eq!(dd.relations(), p.relations());
    }

    #[test]
    fn tables_match_the_naive_quotient(comm in any::<bool>(), n in 2usize..=3, rels in relations()) {
        let f = gf();
        let p = random_presentation(&f, n, comm, &rels);
        prop_assert_eq!(p.expand_table(4).dims().to_vec(), naive_quadratic_dims(&p, 4));
    }

    #[test]
    fn euler_identity_for_the_residue_field(n in 2usize..=3, rels in relations()) {
        let f = gf();
        let p = random_presentation(&f, n, true, &rels);
        let t = p.expand_table(5);
        let b = betti_trivial_module(&t, 4, 5);
        prop_assert_eq!(euler_check(&b, t.dims(), &[1], 4), EulerCheck::Holds { up_to: 4 });
    }

    #[test]
    fn euler_identity_for_the_regular_module(n in 2usize..=3, rels in relations()) {
        let f = gf();
        let p = random_presentation(&f, n, true, &rels);
        let t = p.expand_table(4);
        let m = GradedModuleTable::regular(&t);
        let b = minimal_free_resolution(&t, &m, 3, 4);
        prop_assert_eq!(euler_check(&b, t.dims(), t.dims(), 3), EulerCheck::Holds { up_to: 3 });
        prop_assert_eq!(b.get(0, 0), Some(1));
    }

    #[test]
    fn koszul_implies_numeric_identity(n in 2usize..=3, rels in relations()) {
        let f = gf();
        let p = random_presentation(&f, n, true, &rels);
        if is_koszul_to(&p.expand_table(5), 4).is_koszul() {
            // the identity in degree m only involves Tor in degrees <= m
            let a = p.expand_table(4);
            let dual = p.quadratic_dual().expand_table(4);
            prop_assert!(numeric_identity(a.dims(), dual.dims()).is_consistent());
        }
    }

    #[test]
    fn verdicts_agree_across_primes(n in 2usize..=3, rels in relations()) {
        let f1 = gf();
        let f2 = PrimeField::new(65537).unwrap();
        let p1 = random_presentation(&f1, n, true, &rels);
        let p2 = random_presentation(&f2, n, true, &rels);
        prop_assert_eq!(p1.expand_table(4).dims().to_vec(), p2.expand_table(4).dims().to_vec());
        prop_assert_eq!(is_koszul_to(&p1.expand_table(4), 3), is_koszul_to(&p2.expand_table(4), 3));
    }
}
