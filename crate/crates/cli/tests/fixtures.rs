use std::path::Path;

use quadkit::exactlin::{PrimeField, Rationals};
use quadkit::quadalg::QuadraticPresentation;
use quadkit_cli::input::read_presentation;

#[test]
fn genus5_fixture_is_the_seeded_generator_output() {
    let file = read_presentation(Path::new("tests/fixtures/genus5_seed5.json")).unwrap();
    let f = PrimeField::new(32003).unwrap();
    let from_file =
        QuadraticPresentation::from_terms(&f, file.generators.clone(), true, &file.terms(&f).unwrap()).unwrap();
    assert_eq!(from_file, QuadraticPresentation::random_commutative(&f, 5, 3, 5));
    let q = Rationals;
    let over_q =
        QuadraticPresentation::from_terms(&q, file.generators.clone(), true, &file.terms(&q).unwrap()).unwrap();
    assert_eq!(over_q, QuadraticPresentation::random_commutative(&q, 5, 3, 5));
}
