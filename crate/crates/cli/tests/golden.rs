mod common;

use common::{fixture, run, stable_json, verdict, witness};
use quadkit::rng::DEFAULT_SEED;

/// `(golden file stem, arguments)`; the stem carries the seed.
fn cases() -> Vec<(String, Vec<String>)> {
    let seed = format!("seed{DEFAULT_SEED:x}");
    let p = |name: &str| fixture(&format!("{name}.json"));
    let raw: Vec<(&str, Vec<String>)> = vec![
        ("sym3_cutoff5", vec!["--cutoff".into(), "5".into(), "check-presentation".into(), p("sym3")]),
        ("genus5_seed5", vec!["check-presentation".into(), p("genus5_seed5")]),
        ("cubic", vec!["check-presentation".into(), p("cubic")]),
        (
            "non_koszul",
            vec!["check-presentation".into(), p("non_koszul"), "--distributivity".into(), "4".into()],
        ),
        ("four_general_points", vec!["points".into(), p("four_general_points")]),
        ("collinear", vec!["points".into(), p("collinear")]),
        ("five_points_p2", vec!["points".into(), p("five_points_p2")]),
        ("three_points_p1", vec!["points".into(), p("three_points_p1")]),
        ("pencil_d3_e2", "pencil-complex --d 3 --e 2".split(' ').map(String::from).collect()),
        ("pencil_d2_e1", "pencil-complex --d 2 --e 1".split(' ').map(String::from).collect()),
        (
            "pencil_d3_e2_degenerate",
            "pencil-complex --d 3 --e 2 --degenerate".split(' ').map(String::from).collect(),
        ),
        ("regularity_d2_m3", "regularity --d 2 --m 3".split(' ').map(String::from).collect()),
        ("regularity_d2_m0", "regularity --d 2 --m 0".split(' ').map(String::from).collect()),
        ("regularity_d3_m2", "regularity --d 3 --m 2".split(' ').map(String::from).collect()),
        ("strata", vec!["strata".into()]),
    ];
    raw.into_iter()
        .map(|(stem, args)| (format!("{stem}_{seed}"), args))
        .collect()
}

/// Set `QUADKIT_BLESS=1` to rewrite the golden files after an intended change.
#[test]
fn reports_match_golden_files() {
    let bless = std::env::var_os("QUADKIT_BLESS").is_some();
    for (stem, args) in cases() {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let got = stable_json(run(&args));
        let path = format!("tests/fixtures/golden/{stem}.json");
        if bless {
            std::fs::write(&path, &got).unwrap();
            continue;
        }
        let want = std::fs::read_to_string(&path)
            .unwrap_or_else(|e| panic!("{path}: {e} (run with QUADKIT_BLESS=1 to create)"));
        assert_eq!(got, want, "{path} differs");
    }
}

#[test]
fn reruns_are_byte_identical() {
    for (_, args) in cases() {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        assert_eq!(stable_json(run(&args)), stable_json(run(&args)), "{args:?}");
    }
}

#[test]
fn seed_changes_the_model_and_is_echoed() {
    let a = run(&["--seed", "7", "pencil-complex", "--d", "3", "--e", "2"]);
    let b = run(&["--seed", "0x8", "pencil-complex", "--d", "3", "--e", "2"]);
    assert_eq!((a.config.seed, b.config.seed), (7, 8));
    assert_ne!(
        witness(&a, "model.v_base_point_free")["f1"],
        witness(&b, "model.v_base_point_free")["f1"]
    );
    assert_eq!(verdict(&a, "complex.hypotheses"), "pass");
    assert_eq!(verdict(&b, "complex.hypotheses"), "pass");
}

#[test]
fn presentation_examples() {
    let sym = run(&["--cutoff", "5", "check-presentation", &fixture("sym3.json")]);
    assert_eq!(verdict(&sym, "koszul_to"), "pass");
    assert_eq!(witness(&sym, "koszul_to")["n"], 5);

    let g5 = run(&["check-presentation", &fixture("genus5_seed5.json")]);
    assert_eq!(verdict(&g5, "quadratic"), "pass");
    assert_eq!(verdict(&g5, "koszul_to"), "pass");

    let cubic = run(&["check-presentation", &fixture("cubic.json")]);
    assert_eq!(verdict(&cubic, "quadratic"), "fail");
    assert_eq!(witness(&cubic, "quadratic")["ideal_generator"], serde_json::json!([1, 3]));
    assert_eq!(verdict(&cubic, "numeric_identity"), "not_applicable");

    let nk = run(&["check-presentation", &fixture("non_koszul.json"), "--distributivity", "4"]);
    assert_eq!(verdict(&nk, "numeric_identity"), "fail");
    assert_eq!(witness(&nk, "numeric_identity")["result"]["degree"], 4);
    assert_eq!(verdict(&nk, "koszul_to"), "fail");
    assert_eq!(verdict(&nk, "distributivity"), "fail");
}

#[test]
fn points_examples() {
    let four = run(&["points", &fixture("four_general_points.json")]);
    for name in ["general_position", "kempf_prediction", "koszul_to", "prediction_agrees"] {
        assert_eq!(verdict(&four, name), "pass", "{name}");
    }
    let collinear = run(&["points", &fixture("collinear.json")]);
    assert_eq!(verdict(&collinear, "general_position"), "fail");
    assert_eq!(
        witness(&collinear, "general_position")["dependent_subset"],
        serde_json::json!([1, 2, 4])
    );
    let five = run(&["points", &fixture("five_points_p2.json")]);
    assert_eq!(verdict(&five, "kempf_prediction"), "abstain");
    assert_eq!(witness(&five, "kempf_prediction")["verdict"], "out_of_range");
    assert!(five.entry("koszul_to").is_some());
    let line = run(&["points", &fixture("three_points_p1.json")]);
    assert_eq!(verdict(&line, "quadratic_generation"), "fail");
    assert_eq!(witness(&line, "quadratic_generation")["first_failing_degree"], 3);
}

#[test]
fn pencil_complex_examples() {
    let full = run(&["pencil-complex", "--d", "3", "--e", "2"]);
    assert!(full.entries.iter().all(|e| verdict(&full, &e.name) != "fail"), "{}", full.to_text());

    let low = run(&["pencil-complex", "--d", "2", "--e", "1"]);
    let failing: Vec<_> = low.entries.iter().filter(|e| verdict(&low, &e.name) == "fail").map(|e| e.name.as_str()).collect();
    // deg L = 2 is below the degree bound g + 3 of the numerology
    assert_eq!(failing, vec!["numerology.degree_bound"]);

    let bad = run(&["pencil-complex", "--d", "3", "--e", "2", "--degenerate"]);
    assert_eq!(verdict(&bad, "complex.hypotheses"), "fail");
    assert_eq!(
        witness(&bad, "conclusion.ring_koszul")["caveat"],
        "hypotheses not established; conclusions computed for information only"
    );
}

#[test]
fn regularity_examples() {
    let ok = run(&["regularity", "--d", "2", "--m", "3"]);
    assert_eq!(verdict(&ok, "hypothesis"), "pass");
    assert_eq!(verdict(&ok, "linear_resolution"), "pass");
    let off = run(&["regularity", "--d", "2", "--m", "0"]);
    assert_eq!(verdict(&off, "hypothesis"), "fail");
    assert_eq!(verdict(&off, "linear_resolution"), "abstain");
    assert_eq!(verdict(&run(&["regularity", "--d", "3", "--m", "2"]), "linear_resolution"), "pass");
}

#[test]
fn strata_examples() {
    let r = run(&["strata"]);
    let excluded = witness(&r, "stratum(g_h=2,i=1,even)");
    assert_eq!(excluded["known_exclusion"], true);
    for e in &r.entries {
        let flagged = e.witness.get("known_exclusion") == Some(&serde_json::json!(true));
        assert_eq!(flagged, e.name == "stratum(g_h=2,i=1,even)", "{}", e.name);
        if let Some(inv) = e.witness.pointer("/row/invariants") {
            let (a, b, g) = (inv["a"].as_i64().unwrap(), inv["b"].as_i64().unwrap(), inv["g"].as_i64().unwrap());
            assert_eq!(a + b, g - 5, "{}", e.name);
            assert!(e.witness["note"].as_str().unwrap().contains("a + b = g - 5"));
        }
    }
    // symmetric spot check: (2, 2, odd) has E = (2, 2)
    assert_eq!(witness(&r, "stratum(g_h=2,i=2,odd)")["row"]["quadratic"], "quadratic");
}

#[test]
fn text_output_is_derived_from_the_same_report() {
    let r = run(&["--format", "text", "regularity", "--d", "2", "--m", "3"]);
    let text = r.to_text();
    assert!(text.contains("PASS  hypothesis"));
    assert!(text.contains("linear_resolution"));
}
