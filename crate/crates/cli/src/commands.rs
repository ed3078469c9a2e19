use std::collections::BTreeMap;
use std::path::Path;

use quadkit::curvecomplex::{
    build_k_complex, check_complex_hypotheses, check_divisor_numerology, closed_form_homology,
    cross_validate_complex, DivisorNumerologyInput, TwistedSectionModel,
};
use quadkit::exactlin::{Field, FieldSpec};
use quadkit::gring::{check_regularity, resolve_sections, BinaryForm, RegularityOutcome, SheafModelP1};
use quadkit::points::{verify_kempf, KempfVerdict, PointConfiguration};
use quadkit::quadalg::{
    betti_trivial_module, distributivity_check, euler_check, koszul_verdict, numeric_identity,
    quadraticity_from_betti, BettiTable, DistributivityVerdict, EulerCheck, KoszulVerdict,
    LinearityVerdict, QuadraticityVerdict, TensorPresentation,
};
use quadkit::rng::SeededRng;
use quadkit::strata::{double_cover_bookkeeping, stratum_grid, GridRow};
use quadkit::with_field;
use serde_json::{json, Value};

use crate::args::{Command, Common};
use crate::error::CliError;
use crate::input::{field_spec, read_points, read_presentation};
use crate::report::{Entry, Verdict};

const CITE_KOSZUL_NUMERIC: &str = "Koszul algebras satisfy H_A(t) H_{A!}(-t) = 1";
const CITE_KEMPF: &str = "d points in general linear position with p <= d/2 have a Koszul coordinate ring";
const CITE_COMPLEX: &str = "pencil complex criterion: H_0 = A, H_p(K)_j = 0 for j > p + 1";
const CITE_NUMEROLOGY: &str = "divisor numerology for the pencil complex on a curve";
const CITE_REGULARITY: &str = "0-regular sheaves have linear resolutions over a Koszul section ring";
const CITE_STRATA: &str = "tetragonal strata by scroll and kernel-bundle splitting type";
const STRATA_NOTE: &str = "E-type read as (a, b); only a + b = g - 5 verified independently";

/// What a subcommand contributes to the report besides its entries.
pub struct Outcome {
    pub field: FieldSpec,
    pub inputs: Vec<String>,
    pub params: BTreeMap<String, Value>,
    pub entries: Vec<Entry>,
}

fn resolve_field(common: &Common, from_file: Option<&str>) -> Result<FieldSpec, CliError> {
    let spec = match field_spec(common.field.as_deref())? {
        Some(s) => s,
        None => field_spec(from_file)?.unwrap_or_default(),
    };
    spec.validate(common.cutoff.max(common.hom_cutoff) + 1)?;
    Ok(spec)
}

pub fn execute(common: &Common, command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::CheckPresentation { input, distributivity } => {
            check_presentation(common, input, *distributivity)
        }
        Command::Points { input } => points(common, input),
        Command::PencilComplex {
            d,
            e,
            depth,
            window,
            degenerate,
        } => pencil_complex(common, *d, *e, *depth, window.unwrap_or(2 * depth), *degenerate),
        Command::Regularity { d, m } => regularity(common, *d, *m),
        Command::Strata { gh_min, gh_max, i_max } => strata(common, *gh_min, *gh_max, *i_max),
    }
}

fn params(pairs: &[(&str, Value)]) -> BTreeMap<String, Value> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report data serializes")
}

fn euler_entry(betti: &BettiTable, ring: &[usize], top: usize) -> Entry {
    let check = euler_check(betti, ring, &[1], top);
    let verdict = match check {
        EulerCheck::Holds { .. } => Verdict::Pass,
        EulerCheck::FailsAt { .. } => Verdict::Fail,
        EulerCheck::Incomplete { .. } => Verdict::Abstain,
    };
    Entry::new("euler_identity", verdict, to_value(&check))
}

fn koszul_entry(betti: &BettiTable, n: usize, extra: Value) -> Entry {
    let verdict = koszul_verdict(betti, n);
    let v = match verdict {
        KoszulVerdict::KoszulTo { .. } => Verdict::Pass,
        KoszulVerdict::Violation { .. } => Verdict::Fail,
        KoszulVerdict::Unknown { .. } => Verdict::Abstain,
    };
    Entry::new(
        "koszul_to",
        v,
        json!({ "n": n, "result": verdict, "betti": betti, "data": extra }),
    )
}

fn linearity_verdict(l: &LinearityVerdict) -> Verdict {
    match l {
        LinearityVerdict::Linear { .. } => Verdict::Pass,
        LinearityVerdict::NotLinear { .. } => Verdict::Fail,
        LinearityVerdict::Abstain { .. } => Verdict::Abstain,
    }
}

fn check_presentation(
    common: &Common,
    path: &Path,
    distributivity: Option<usize>,
) -> Result<Outcome, CliError> {
    let file = read_presentation(path)?;
    let spec = resolve_field(common, file.field.as_deref())?;
    let entries = with_field!(spec, |f| presentation_entries(&f, &file, common, distributivity)?);
    Ok(Outcome {
        field: spec,
        inputs: vec![path.display().to_string()],
        params: params(&[("distributivity", json!(distributivity))]),
        entries,
    })
}

fn presentation_entries<F: Field>(
    f: &F,
    file: &crate::input::PresentationFile,
    common: &Common,
    distributivity: Option<usize>,
) -> Result<Vec<Entry>, CliError> {
    let n = common.cutoff;
    let hom = n.max(common.hom_cutoff);
    let terms = file.terms(f)?;
    let tensor = TensorPresentation::new(f, file.generators.clone(), file.commutative, &terms)?;
    let table = tensor.expand_table(n + 1);
    let betti = betti_trivial_module(&table, hom, n + 1);
    let hilbert = table.dims()[..=n].to_vec();
    let mut entries = Vec::new();

    let quad = quadraticity_from_betti(&betti, n);
    entries.push(match quad {
        QuadraticityVerdict::Quadratic { up_to } => Entry::new(
            "quadratic",
            Verdict::Pass,
            json!({ "up_to": up_to, "relation_degrees": tensor.relation_degrees() }),
        ),
        QuadraticityVerdict::NotQuadratic { degree } => Entry::new(
            "quadratic",
            Verdict::Fail,
            json!({
                "degree": degree,
                "ideal_generator": [1, degree],
                "betti_cell": [2, degree],
                "relation_degrees": tensor.relation_degrees(),
            }),
        ),
        QuadraticityVerdict::Unknown { degree } => {
            Entry::new("quadratic", Verdict::Abstain, json!({ "unknown_degree": degree }))
        }
    });

    let quadratic = tensor.as_quadratic();
    entries.push(match &quadratic {
        Some(q) => {
            let dual = q.quadratic_dual().expand_table(n);
            let verdict = numeric_identity(&hilbert, dual.dims());
            Entry::new(
                "numeric_identity",
                Verdict::from_bool(verdict.is_consistent()),
                json!({ "hilbert": hilbert, "dual_hilbert": dual.dims(), "result": verdict }),
            )
            .cite(CITE_KOSZUL_NUMERIC)
        }
        None => Entry::new(
            "numeric_identity",
            Verdict::NotApplicable,
            json!({ "reason": "the presentation has relations of degree above 2", "hilbert": hilbert }),
        ),
    });

    entries.push(koszul_entry(&betti, n, json!({ "hilbert": table.dims() })));
    entries.push(euler_entry(&betti, table.dims(), n));

    if let Some(deg) = distributivity {
        entries.push(match &quadratic {
            Some(q) => {
                let v = distributivity_check(q, deg);
                let verdict = match v {
                    DistributivityVerdict::Distributive { .. } => Verdict::Pass,
                    DistributivityVerdict::NotDistributive { .. } => Verdict::Fail,
                    DistributivityVerdict::Abstain { .. } => Verdict::Abstain,
                };
                Entry::new("distributivity", verdict, json!({ "degree": deg, "result": v }))
            }
            None => Entry::new(
                "distributivity",
                Verdict::NotApplicable,
                json!({ "reason": "the presentation is not quadratic" }),
            ),
        });
    }
    Ok(entries)
}

fn points(common: &Common, path: &Path) -> Result<Outcome, CliError> {
    let file = read_points(path)?;
    let spec = resolve_field(common, file.field.as_deref())?;
    let entries = with_field!(spec, |f| {
        let config = PointConfiguration::new(&f, file.ambient_dim, file.coordinates(&f)?)?;
        points_entries(&config, common.cutoff)?
    });
    Ok(Outcome {
        field: spec,
        inputs: vec![path.display().to_string()],
        params: params(&[
            ("ambient_dim", json!(file.ambient_dim)),
            ("points", json!(file.points.len())),
        ]),
        entries,
    })
}

fn points_entries<F: Field>(c: &PointConfiguration<F>, n: usize) -> Result<Vec<Entry>, CliError> {
    let gp = c.general_position();
    let report = verify_kempf(c, n)?;
    let mut entries = vec![Entry::new(
        "general_position",
        Verdict::from_bool(gp.holds),
        json!({ "dependent_subset": gp.witness }),
    )];
    let predicted = report.prediction.verdict == KempfVerdict::PredictedKoszul;
    entries.push(
        Entry::new(
            "kempf_prediction",
            if predicted { Verdict::Pass } else { Verdict::Abstain },
            to_value(&report.prediction),
        )
        .cite(CITE_KEMPF),
    );
    let qg = report.quadratic_generation;
    entries.push(Entry::new(
        "quadratic_generation",
        Verdict::from_bool(qg.holds),
        json!({ "first_failing_degree": qg.first_failing_degree, "checked_to": n.max(3) }),
    ));
    entries.push(koszul_entry(&report.betti, n, json!({ "hilbert": report.hilbert })));
    entries.push(euler_entry(&report.betti, &report.hilbert, n));
    entries.push(if predicted {
        Entry::new(
            "prediction_agrees",
            Verdict::from_bool(report.agrees()),
            json!({ "koszul": report.koszul, "quadratic_generation": qg.holds }),
        )
    } else {
        Entry::new(
            "prediction_agrees",
            Verdict::NotApplicable,
            json!({ "reason": "no prediction outside the range p <= d/2 in general position" }),
        )
    });
    Ok(entries)
}

fn render_form<F: Field>(f: &F, form: &BinaryForm<F>) -> Vec<String> {
    form.coeffs().iter().map(|c| f.render(c)).collect()
}

fn pencil_complex(
    common: &Common,
    d: usize,
    e: usize,
    depth: usize,
    window: usize,
    degenerate: bool,
) -> Result<Outcome, CliError> {
    let spec = resolve_field(common, None)?;
    spec.validate(window.max(common.cutoff + 1))?;
    let entries = with_field!(spec, |f| {
        pencil_entries(&f, common, d, e, depth, window, degenerate)?
    });
    Ok(Outcome {
        field: spec,
        inputs: Vec::new(),
        params: params(&[
            ("d", json!(d)),
            ("e", json!(e)),
            ("depth", json!(depth)),
            ("window", json!(window)),
            ("degenerate", json!(degenerate)),
        ]),
        entries,
    })
}

/// Replaces the second section of `V` by a multiple of the first root of
/// `f0`, so that `V` acquires a base point.
fn degenerate_model<F: Field>(
    f: &F,
    model: &TwistedSectionModel<F>,
    seed: u64,
    cutoff: usize,
) -> Result<TwistedSectionModel<F>, CliError> {
    let e = model.e();
    let mut rng = SeededRng::derive(seed, 0xDE);
    let cofactor = loop {
        let c: Vec<i64> = (0..e).map(|_| rng.coeff()).collect();
        let form = BinaryForm::from_i64(f, &c);
        if !form.is_zero(f) {
            break form;
        }
    };
    let f1 = model.roots()[0].mul(f, &cofactor);
    Ok(TwistedSectionModel::from_forms_unchecked(
        f,
        model.d(),
        model.roots().to_vec(),
        f1,
        model.u_bar().clone(),
        cutoff,
    )?)
}

fn pencil_entries<F: Field>(
    f: &F,
    common: &Common,
    d: usize,
    e: usize,
    depth: usize,
    window: usize,
    degenerate: bool,
) -> Result<Vec<Entry>, CliError> {
    let n = common.cutoff;
    let cutoff = window.max(n + 1);
    let mut model = TwistedSectionModel::build(f, d, e, common.seed, cutoff)?;
    if degenerate {
        model = degenerate_model(f, &model, common.seed, cutoff)?;
    }
    let mut entries = Vec::new();
    entries.push(Entry::new(
        "model.v_base_point_free",
        Verdict::from_bool(model.is_v_base_point_free()),
        json!({
            "roots": model.roots().iter().map(|r| render_form(f, r)).collect::<Vec<_>>(),
            "f0": render_form(f, model.f0()),
            "f1": render_form(f, model.f1()),
            "u_bar": model.u_bar().iter().map(|u| render_form(f, u)).collect::<Vec<_>>(),
            "attempts": model.attempts(),
        }),
    ));

    let input = DivisorNumerologyInput {
        g: 0,
        deg_l: d as i64,
        h1_l: 0,
    };
    let numerology = check_divisor_numerology(input, Some(&model));
    for item in &numerology.items {
        entries.push(Entry::from_item("numerology", item).cite(CITE_NUMEROLOGY));
    }

    let k = build_k_complex(&model, depth, window)?;
    entries.push(Entry::new(
        "complex.d_squared_zero",
        Verdict::Pass,
        json!({ "depth": depth, "window": window, "coefficient_dims": k.coefficient_dims() }),
    ));
    let hyp = check_complex_hypotheses(&k, &model, &model.quotient_module()?);
    for item in &hyp.items {
        entries.push(Entry::from_item("complex", item));
    }
    entries.push(
        Entry::new(
            "complex.hypotheses",
            Verdict::from_bool(hyp.established),
            json!({ "homology": hyp.homology.cells, "scope": hyp.scope }),
        )
        .cite(CITE_COMPLEX),
    );

    let mut mismatch = None;
    let mut compared = 0usize;
    'scan: for p in 1..depth {
        for j in 0..=window {
            let closed = closed_form_homology(&model, p, j);
            if k.homology(p, j) != Some(closed) {
                mismatch = Some(json!({ "p": p, "j": j, "rank": k.homology(p, j), "closed_form": closed }));
                break 'scan;
            }
            compared += 1;
        }
    }
    entries.push(if model.is_v_base_point_free() {
        Entry::new(
            "complex.closed_forms",
            Verdict::from_bool(mismatch.is_none()),
            json!({ "cells_compared": compared, "mismatch": mismatch }),
        )
    } else {
        Entry::new(
            "complex.closed_forms",
            Verdict::NotApplicable,
            json!({
                "reason": "the cokernel formulas assume V is base-point-free",
                "first_difference": mismatch,
            }),
        )
    });

    let cv = cross_validate_complex(&model, &hyp, n)?;
    let caveat = cv.caveat.clone();
    entries.push(Entry::new(
        "conclusion.ring_koszul",
        match cv.ring_koszul {
            KoszulVerdict::KoszulTo { .. } => Verdict::Pass,
            KoszulVerdict::Violation { .. } => Verdict::Fail,
            KoszulVerdict::Unknown { .. } => Verdict::Abstain,
        },
        json!({ "n": n, "result": cv.ring_koszul, "betti": cv.ring_betti, "caveat": caveat }),
    ));
    entries.push(Entry::new(
        "conclusion.quotient_linear",
        linearity_verdict(&cv.quotient_linear),
        json!({
            "n": n,
            "result": cv.quotient_linear,
            "quotient_hilbert": cv.quotient_dims,
            "betti": cv.quotient_betti,
            "caveat": caveat,
        }),
    ));
    Ok(entries)
}

fn regularity(common: &Common, d: usize, m: i64) -> Result<Outcome, CliError> {
    let spec = resolve_field(common, None)?;
    let sheaf = SheafModelP1::new(d, m)?;
    let hom = common.hom_cutoff;
    let entries = with_field!(spec, |f| {
        let report = check_regularity(&f, sheaf, hom)?;
        let mut entries = vec![Entry::new(
            "hypothesis",
            Verdict::from_bool(report.hypothesis_holds),
            json!({ "h1_twist": report.h1_twist, "twist": m - d as i64 }),
        )
        .cite(CITE_REGULARITY)];
        entries.push(match &report.outcome {
            RegularityOutcome::Verified { betti, linearity } => Entry::new(
                "linear_resolution",
                linearity_verdict(linearity),
                json!({ "result": linearity, "betti": betti }),
            ),
            RegularityOutcome::HypothesisFails => {
                let (betti, linearity) = resolve_sections(&f, sheaf, hom)?;
                Entry::new(
                    "linear_resolution",
                    Verdict::Abstain,
                    json!({
                        "reason": "hypothesis fails; no claim",
                        "for_information": { "result": linearity, "betti": betti },
                    }),
                )
            }
        });
        entries
    });
    Ok(Outcome {
        field: spec,
        inputs: Vec::new(),
        params: params(&[("d", json!(d)), ("m", json!(m))]),
        entries,
    })
}

fn strata(common: &Common, gh_min: i64, gh_max: i64, i_max: i64) -> Result<Outcome, CliError> {
    // integer bookkeeping only; the field is echoed but unused
    let field = resolve_field(common, None)?;
    let mut entries = Vec::new();
    for row in stratum_grid(gh_min..=gh_max, i_max) {
        entries.push(match &row {
            GridRow::Admissible { invariants: s, .. } => Entry::new(
                format!("stratum(g_h={},i={},{})", s.g_h, s.i, parity_label(s.case)),
                Verdict::from_bool(s.identities_hold),
                json!({ "row": row, "note": STRATA_NOTE }),
            )
            .cite(CITE_STRATA),
            GridRow::Rejected(r) => Entry::new(
                format!("stratum(g_h={},i={},{})", r.g_h, r.i, parity_label(r.case)),
                Verdict::NotApplicable,
                to_value(&row),
            ),
        });
    }
    for g_h in gh_min.max(2)..=gh_max {
        for deg_m in 2 * g_h + 1..=g_h + 2 * i_max + 1 {
            let report = double_cover_bookkeeping(g_h, deg_m).expect("g_h >= 2");
            entries.push(Entry::new(
                format!("double_cover(g_h={g_h},deg_M={deg_m})"),
                report.cross_check.status.into(),
                to_value(&report),
            ));
        }
    }
    Ok(Outcome {
        field,
        inputs: Vec::new(),
        params: params(&[
            ("gh_min", json!(gh_min)),
            ("gh_max", json!(gh_max)),
            ("i_max", json!(i_max)),
        ]),
        entries,
    })
}

fn parity_label(p: quadkit::strata::Parity) -> &'static str {
    match p {
        quadkit::strata::Parity::Even => "even",
        quadkit::strata::Parity::Odd => "odd",
    }
}
