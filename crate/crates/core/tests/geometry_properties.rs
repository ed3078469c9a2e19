use proptest::prelude::*;
use quadkit::curvecomplex::{build_k_complex, closed_form_homology, TwistedSectionModel};
use quadkit::exactlin::{DenseMatrix, Field, PrimeField};
use quadkit::gring::{
    check_regularity, h1_p1, pencil_multiplication, BinaryForm, RegularityOutcome, SheafModelP1,
};
use quadkit::gring::sym_dim;
use quadkit::points::{kempf_predict, model_point_ring, verify_kempf, KempfVerdict, PointConfiguration};
use quadkit::strata::{
    double_cover_bookkeeping, quadraticity_verdict, stratum_invariants, Parity,
};

fn gf() -> PrimeField {
    PrimeField::new(32003).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn point_rings_stabilize_at_the_number_of_points(seed in any::<u64>(), m in 1usize..=3, d in 1usize..=5) {
        let f = gf();
        let c = PointConfiguration::random_general(&f, m, d, seed).unwrap();
        let ring = model_point_ring(&c, 5).unwrap().table;
        // at most five points in linear general position have maximal rank
        for (n, &h) in ring.dims().iter().enumerate() {
            prop_assert_eq!(h, d.min(sym_dim(m + 1, n)));
        }
    }

    #[test]
    fn kempf_is_coordinate_invariant(seed in any::<u64>(), entries in prop::collection::vec(-4i64..=4, 9)) {
        let f = gf();
        let g = DenseMatrix::from_i64_rows(&f, &[entries[0..3].to_vec(), entries[3..6].to_vec(), entries[6..9].to_vec()]);
        prop_assume!(g.inverse().is_some());
        let c = PointConfiguration::random_general(&f, 2, 4, seed).unwrap();
        let moved = c.transformed(&g).unwrap();
        let a = verify_kempf(&c, 3).unwrap();
        let b = verify_kempf(&moved, 3).unwrap();
        prop_assert_eq!(&a.prediction, &b.prediction);
        prop_assert_eq!(&a.betti, &b.betti);
        prop_assert_eq!(a.hilbert, b.hilbert);
    }

    #[test]
    fn base_point_free_pencils_multiply_onto(seed in any::<u64>(), e in 1usize..=4, k in 0usize..=5) {
        let f = gf();
        let mut rng = quadkit::rng::SeededRng::new(seed);
        let draw = |rng: &mut quadkit::rng::SeededRng| {
            let c: Vec<i64> = (0..=e).map(|_| rng.coeff()).collect();
            BinaryForm::from_i64(&f, &c)
        };
        let (a, b) = (draw(&mut rng), draw(&mut rng));
        prop_assume!(a.coprime_with(&f, &b));
        let v = pencil_multiplication(&f, &[a, b], k);
        prop_assert_eq!(v.surjective, k + 1 >= e);
        // rank is 2(k+1) below the threshold: the pencil trick kernel is H^0(O(k - e))
        let kernel = 2 * (k + 1) - v.image_rank;
        prop_assert_eq!(kernel, (k + 1).saturating_sub(e));
    }

    #[test]
    fn complexes_square_to_zero_and_match_closed_forms(seed in any::<u64>(), d in 2usize..=4, e_off in 1usize..=3) {
        prop_assume!(e_off < d);
        let e = d - e_off;
        let f = gf();
        let m = TwistedSectionModel::build(&f, d, e, seed, 6).unwrap();
        let k = build_k_complex(&m, 4, 6).unwrap();
        for p in 1..4 {
            for n in 0..=6 {
                prop_assert_eq!(k.homology(p, n), Some(closed_form_homology(&m, p, n)));
                if n > p + 1 {
                    prop_assert_eq!(k.homology(p, n), Some(0));
                }
            }
        }
    }
}

#[test]
fn kempf_desk_witness_on_the_line() {
    let f = gf();
    let c = PointConfiguration::from_i64(&f, 1, &[vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
    let k = kempf_predict(&c).unwrap();
    assert_eq!(k.verdict, KempfVerdict::OutOfRange);
    let r = verify_kempf(&c, 4).unwrap();
    assert_eq!(r.quadratic_generation.first_failing_degree, Some(3));
}

#[test]
fn change_of_pencil_basis_leaves_homology_alone() {
    let f = gf();
    let m = TwistedSectionModel::build(&f, 4, 3, 5, 6).unwrap();
    let [u1, u2] = m.u_bar().clone();
    let neg = |g: &BinaryForm<PrimeField>| BinaryForm::new(g.coeffs().iter().map(|c| f.neg(c)).collect());
    let two = BinaryForm::from_i64(&f, &[2]);
    let mixed = [
        BinaryForm::new(
            u1.coeffs().iter().zip(u2.coeffs()).map(|(a, b)| f.add(a, &f.mul(&f.from_i64(3), b))).collect(),
        ),
        neg(&u2.mul(&f, &two)),
    ];
    let other = TwistedSectionModel::from_forms_unchecked(&f, 4, m.roots().to_vec(), m.f1().clone(), mixed, 6).unwrap();
    let a = build_k_complex(&m, 4, 6).unwrap().homology_table();
    let b = build_k_complex(&other, 4, 6).unwrap().homology_table();
    assert_eq!(a, b);
}

#[test]
fn regularity_hypothesis_implies_linear_resolution() {
    let f = gf();
    for d in 1..=3usize {
        for m in -3..=4i64 {
            let r = check_regularity(&f, SheafModelP1::new(d, m).unwrap(), 4).unwrap();
            assert_eq!(r.hypothesis_holds, h1_p1(m - d as i64) == 0);
            match r.outcome {
                RegularityOutcome::Verified { linearity, .. } => {
                    assert!(linearity.is_linear(), "d={d} m={m}: {linearity:?}")
                }
                RegularityOutcome::HypothesisFails => assert!(!r.hypothesis_holds),
            }
        }
    }
}

#[test]
fn strata_identities_and_double_covers_agree() {
    for g_h in 2..=6 {
        for i in 1..=8 {
            for case in [Parity::Even, Parity::Odd] {
                if let Ok(s) = stratum_invariants(g_h, i, case) {
                    assert!(s.identities_hold);
                    assert!(s.a.min(s.b) >= 1);
                    assert_eq!(
                        quadraticity_verdict(s.a, s.b).unwrap(),
                        quadraticity_verdict(s.b, s.a).unwrap()
                    );
                }
            }
        }
        for deg_m in 2 * g_h + 1..=2 * g_h + 12 {
            let r = double_cover_bookkeeping(g_h, deg_m).unwrap();
            if r.g >= 9 {
                assert_eq!(r.cross_check.status, quadkit::checklist::CheckStatus::Pass, "{r:?}");
            }
        }
    }
}
