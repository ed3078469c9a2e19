use serde::Serialize;

use crate::checklist::{all_established, CheckItem, CheckStatus};
use crate::error::Error;
use crate::exactlin::Field;
use crate::gring::{h0_p1, h1_p1, resolve, GradedModuleTable};
use crate::quadalg::{betti_trivial_module, koszul_verdict, BettiTable, KoszulVerdict, LinearityVerdict};

use super::complex::{HomologyTable, KComplex};
use super::model::TwistedSectionModel;

pub const DEFAULT_DEPTH: usize = 4;

/// Hypotheses of the linear-resolution criterion for `A = R / J_D`, checked
/// on the truncation window of `K`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComplexHypotheses {
    pub depth: usize,
    pub window: usize,
    pub homology: HomologyTable,
    pub items: Vec<CheckItem>,
    pub established: bool,
    pub scope: String,
}

/// Checks, on the window of `k`:
///
/// * `H_0(K) ≅ A` degreewise, and `im d_1 = J_D` as subspaces of `R`;
/// * `H_p(K)_j = 0` for `p ≥ 1`, `j > p + 1`;
/// * the terms are `C_p ⊗ R(-p)` with `C_0` one-dimensional.
///
/// `a_expected` is the module `H_0` should match; the image comparison is
/// made against `J_D` of `model` whenever `K` has a first differential.
pub fn check_complex_hypotheses<F: Field>(
    k: &KComplex<F>,
    model: &TwistedSectionModel<F>,
    a_expected: &GradedModuleTable<F>,
) -> ComplexHypotheses {
    let homology = k.homology_table();
    let window = k.window();
    let depth = k.depth();
    let mut items = Vec::new();

    let top = window.min(a_expected.top_degree());
    let mismatch = (0..=top).find(|&n| homology.get(0, n) != Some(a_expected.dims()[n]));
    items.push(match mismatch {
        Some(n) => CheckItem::new(
            "h0_is_quotient",
            CheckStatus::Fail,
            format!(
                "dim H_0(K)_{n} = {:?}, dim A_{n} = {}",
                homology.get(0, n),
                a_expected.dims()[n]
            ),
        ),
        None if top < window => CheckItem::new(
            "h0_is_quotient",
            CheckStatus::Abstain,
            format!("A is known only through degree {top}"),
        ),
        None => CheckItem::new(
            "h0_is_quotient",
            CheckStatus::Pass,
            format!("dimensions agree in degrees 0..={window}"),
        ),
    });

    if depth >= 1 {
        let ideal = model.ideal_of_d();
        let top = window.min(ideal.len() - 1);
        let bad = (0..=top).find(|&n| {
            let im = k.differential(1, n).image();
            !(im.is_subspace_of(&ideal[n]) && ideal[n].is_subspace_of(&im))
        });
        items.push(match bad {
            Some(n) => CheckItem::new(
                "image_d1_is_ideal",
                CheckStatus::Fail,
                format!(
                    "degree {n}: rank d_1 = {}, dim J_D = {}",
                    k.differential(1, n).rank(),
                    ideal[n].dim()
                ),
            ),
            None if top < window => CheckItem::new(
                "image_d1_is_ideal",
                CheckStatus::Abstain,
                format!("J_D is known only through degree {top}"),
            ),
            None => CheckItem::new(
                "image_d1_is_ideal",
                CheckStatus::Pass,
                format!("equal in degrees 0..={window}"),
            ),
        });
    } else {
        items.push(CheckItem::new(
            "image_d1_is_ideal",
            CheckStatus::NotApplicable,
            "no first differential",
        ));
    }

    let mut nonzero = None;
    let mut checked = 0usize;
    'scan: for p in 1..depth {
        for j in p + 2..=window {
            match homology.get(p, j) {
                Some(0) => checked += 1,
                Some(h) => {
                    nonzero = Some((p, j, h));
                    break 'scan;
                }
                None => {}
            }
        }
    }
    items.push(match nonzero {
        Some((p, j, h)) => CheckItem::new(
            "higher_homology_vanishes",
            CheckStatus::Fail,
            format!("dim H_{p}(K)_{j} = {h}"),
        ),
        None => CheckItem::new(
            "higher_homology_vanishes",
            CheckStatus::Pass,
            format!(
                "{checked} cells zero for 1 <= p <= {}, p + 2 <= j <= {window}; \
                 cells with p >= {depth} or j > {window} are not covered",
                depth.saturating_sub(1)
            ),
        ),
    });

    let dims = k.coefficient_dims();
    let shape_ok = dims.first() == Some(&1) && dims.iter().skip(1).all(|&c| c == 2);
    items.push(CheckItem::new(
        "shape",
        CheckStatus::from_bool(shape_ok),
        format!("coefficient dimensions {dims:?}, term p generated in degree p"),
    ));

    ComplexHypotheses {
        depth,
        window,
        homology,
        established: all_established(&items),
        items,
        scope: format!(
            "certified on the window p <= {depth}, n <= {window} only"
        ),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CrossValidation {
    pub n: usize,
    pub hypotheses_established: bool,
    /// Present when the conclusions are not backed by the hypotheses.
    pub caveat: Option<String>,
    pub ring_betti: BettiTable,
    pub ring_koszul: KoszulVerdict,
    pub quotient_dims: Vec<usize>,
    pub quotient_betti: BettiTable,
    pub quotient_linear: LinearityVerdict,
}

impl CrossValidation {
    pub fn conclusions_hold(&self) -> bool {
        self.ring_koszul.is_koszul() && self.quotient_linear.is_linear()
    }
}

/// Computes the conclusions directly: `R` Koszul to `n` and `A` with a
/// linear resolution over `R` to homological degree `n`. Needs the model's
/// ring through degree `n + 1`.
pub fn cross_validate_complex<F: Field>(
    model: &TwistedSectionModel<F>,
    hypotheses: &ComplexHypotheses,
    n: usize,
) -> Result<CrossValidation, Error> {
    if model.cutoff() < n + 1 {
        return Err(Error::CutoffExceeded {
            requested: n + 1,
            cutoff: model.cutoff(),
        });
    }
    let ring = model.ring();
    let ring_betti = betti_trivial_module(ring, n, n + 1);
    let ring_koszul = koszul_verdict(&ring_betti, n);
    let a = model.quotient_module()?;
    let quotient_betti = resolve(ring, &a, a.top_degree(), n, n + 1).betti().clone();
    let quotient_linear = quotient_betti.linearity(n);
    let established = hypotheses.established;
    Ok(CrossValidation {
        n,
        hypotheses_established: established,
        caveat: (!established).then(|| {
            "hypotheses not established; conclusions computed for information only".to_string()
        }),
        ring_betti,
        ring_koszul,
        quotient_dims: a.dims().to_vec(),
        quotient_betti,
        quotient_linear,
    })
}

/// Curve data for the divisor numerology: genus, `deg L`, `h^1(L)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DivisorNumerologyInput {
    pub g: i64,
    pub deg_l: i64,
    pub h1_l: i64,
}

impl DivisorNumerologyInput {
    /// `deg D = deg L - g - 1 + 2 h^1(L)`.
    pub fn divisor_degree(&self) -> i64 {
        self.deg_l - self.g - 1 + 2 * self.h1_l
    }

    /// `dim |D| = deg L - 2g + 4 h^1(L) - 1`.
    pub fn dim_linear_system(&self) -> i64 {
        self.deg_l - 2 * self.g + 4 * self.h1_l - 1
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NumerologyReport {
    pub input: DivisorNumerologyInput,
    pub divisor_degree: i64,
    pub dim_linear_system: i64,
    pub items: Vec<CheckItem>,
    pub established: bool,
}

impl NumerologyReport {
    pub fn item(&self, name: &str) -> Option<&CheckItem> {
        self.items.iter().find(|i| i.name == name)
    }
}

fn h1_item(name: &str, label: &str, value: Option<i64>, expected: i64) -> CheckItem {
    match value {
        Some(v) => CheckItem::new(
            name,
            CheckStatus::from_bool(v == expected),
            format!("{label} = {v}, required {expected}"),
        ),
        None => CheckItem::new(name, CheckStatus::Abstain, format!("{label} not computable for positive genus")),
    }
}

/// Injectivity of `H^1(source) → (pencil) ⊗ H^1(L)`. On the projective line
/// both sides are closed-form; the map matters only if both are nonzero.
fn injectivity_item(name: &str, source: Option<i64>, target_h1: Option<i64>) -> CheckItem {
    match (source, target_h1) {
        (Some(0), _) => CheckItem::new(name, CheckStatus::NotApplicable, "source H^1 is zero"),
        (Some(s), Some(0)) => CheckItem::new(
            name,
            CheckStatus::Fail,
            format!("source H^1 has dimension {s}, target is zero"),
        ),
        (Some(s), Some(t)) => CheckItem::new(
            name,
            CheckStatus::Abstain,
            format!("dimensions {s} -> 2*{t}; the map itself is not modelled"),
        ),
        _ => CheckItem::new(name, CheckStatus::Abstain, "positive genus"),
    }
}

/// Recomputes the divisor numerology and, in genus 0, evaluates every
/// cohomological condition from `h^i(O(k))`. A supplied model must realize
/// `deg L = d` and `deg D = e`.
pub fn check_divisor_numerology<F: Field>(
    input: DivisorNumerologyInput,
    model: Option<&TwistedSectionModel<F>>,
) -> NumerologyReport {
    let DivisorNumerologyInput { g, deg_l, h1_l } = input;
    let dd = input.divisor_degree();
    let dim_d = input.dim_linear_system();
    let genus0 = g == 0;
    let h1 = |k: i64| genus0.then(|| h1_p1(k) as i64);
    let h0 = |k: i64| genus0.then(|| h0_p1(k) as i64);
    let mut items = Vec::new();

    items.push(CheckItem::new(
        "degree_bound",
        CheckStatus::from_bool(deg_l >= g + 3),
        format!("deg L = {deg_l}, g + 3 = {}", g + 3),
    ));
    if genus0 {
        let actual = h1_p1(deg_l) as i64;
        items.push(CheckItem::new(
            "h1_l_consistent",
            CheckStatus::from_bool(actual == h1_l),
            format!("h^1(O({deg_l})) = {actual}, input {h1_l}"),
        ));
    }
    items.push(CheckItem::new(
        "divisor_degree",
        CheckStatus::from_bool(dd >= 1),
        format!("deg D = {dd}"),
    ));
    items.push(match h0(dd) {
        Some(h) => CheckItem::new(
            "dim_d",
            CheckStatus::from_bool(h - 1 == dim_d),
            format!("h^0(O({dd})) - 1 = {}, required {dim_d}", h - 1),
        ),
        None => CheckItem::new("dim_d", CheckStatus::Abstain, format!("required {dim_d}")),
    });
    items.push(match h0(deg_l - dd) {
        Some(h) => CheckItem::new(
            "dim_l_minus_d",
            CheckStatus::from_bool(h - 1 == 1),
            format!("h^0(L(-D)) - 1 = {}, required 1", h - 1),
        ),
        None => CheckItem::new("dim_l_minus_d", CheckStatus::Abstain, "required 1"),
    });
    items.push(if genus0 {
        let ok = dd >= 0 && deg_l - dd >= 0;
        CheckItem::new(
            "base_point_free",
            CheckStatus::from_bool(ok),
            format!("O({dd}) and O({}) on the line", deg_l - dd),
        )
    } else {
        CheckItem::new("base_point_free", CheckStatus::Abstain, "positive genus")
    });
    items.push(h1_item("h1_l_plus_d", "h^1(L(D))", h1(deg_l + dd), 0));
    items.push(h1_item("h1_l2_minus_d", "h^1(L^2(-D))", h1(2 * deg_l - dd), 0));

    // By Riemann-Roch both equal 2 h^1(L) once the two dimensions hold; in
    // genus 0 they are evaluated directly instead.
    let rr = |v: Option<i64>, deg: i64, dim: i64| v.or(Some(dim + 1 - deg + g - 1));
    let h1_d = rr(h1(dd), dd, dim_d);
    let h1_lmd = rr(h1(deg_l - dd), deg_l - dd, 1);
    items.push(h1_item("h1_d", "h^1(D)", h1_d, 2 * h1_l));
    items.push(h1_item("h1_l_minus_d", "h^1(L(-D))", h1_lmd, 2 * h1_l));

    items.push(if h1_l == 0 {
        CheckItem::new("independent_conditions", CheckStatus::NotApplicable, "h^1(L) = 0: no points to choose")
    } else {
        CheckItem::new(
            "independent_conditions",
            CheckStatus::Abstain,
            format!("{h1_l} points of D on K - L + D: not modelled"),
        )
    });
    let h1_l_actual = if genus0 { h1(deg_l) } else { Some(h1_l) };
    items.push(injectivity_item("alpha_injective", h1(deg_l - dd), h1_l_actual));
    items.push(injectivity_item("beta_injective", h1(dd), h1_l_actual));

    if let Some(m) = model {
        let ok = genus0 && m.d() as i64 == deg_l && m.e() as i64 == dd;
        items.push(CheckItem::new(
            "model_realizes_input",
            CheckStatus::from_bool(ok && m.is_v_base_point_free()),
            format!(
                "model deg L = {}, deg D = {}, V base-point-free: {}",
                m.d(),
                m.e(),
                m.is_v_base_point_free()
            ),
        ));
    }

    NumerologyReport {
        input,
        divisor_degree: dd,
        dim_linear_system: dim_d,
        established: all_established(&items),
        items,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvecomplex::build_k_complex;
    use crate::exactlin::PrimeField;
    use crate::gring::BinaryForm;

    fn f() -> PrimeField {
        PrimeField::new(32003).unwrap()
    }

    #[test]
    fn twisted_cubic_instance_passes() {
        let f = f();
        let m = TwistedSectionModel::build(&f, 3, 2, 17, 8).unwrap();
        let k = build_k_complex(&m, 4, 8).unwrap();
        let h = check_complex_hypotheses(&k, &m, &m.quotient_module().unwrap());
        assert!(h.established, "{:?}", h.items);
        let cv = cross_validate_complex(&m, &h, 4).unwrap();
        assert!(cv.conclusions_hold());
        assert_eq!(cv.caveat, None);
    }

    #[test]
    fn pencil_too_small_for_the_ideal() {
        let f = f();
        let m = TwistedSectionModel::build(&f, 4, 2, 17, 6).unwrap();
        let k = build_k_complex(&m, 4, 6).unwrap();
        let h = check_complex_hypotheses(&k, &m, &m.quotient_module().unwrap());
        let item = h.items.iter().find(|i| i.name == "image_d1_is_ideal").unwrap();
        assert_eq!(item.status, CheckStatus::Fail);
        assert!(!h.established);
    }

    #[test]
    fn shared_root_breaks_vanishing() {
        let f = f();
        let roots = vec![
            BinaryForm::from_i64(&f, &[1, 2]),
            BinaryForm::from_i64(&f, &[3, -1]),
        ];
        let f1 = roots[0].mul(&f, &BinaryForm::from_i64(&f, &[1, 1]));
        let u = [BinaryForm::from_i64(&f, &[1, 0]), BinaryForm::from_i64(&f, &[0, 1])];
        let m = TwistedSectionModel::from_forms_unchecked(&f, 3, roots, f1, u, 8).unwrap();
        let k = build_k_complex(&m, 4, 8).unwrap();
        let h = check_complex_hypotheses(&k, &m, &m.quotient_module().unwrap());
        let item = h.items.iter().find(|i| i.name == "higher_homology_vanishes").unwrap();
        assert_eq!(item.status, CheckStatus::Fail);
        let cv = cross_validate_complex(&m, &h, 4).unwrap();
        assert!(cv.caveat.is_some());
    }

    #[test]
    fn depth_zero_is_vacuous() {
        let f = f();
        let m = TwistedSectionModel::build(&f, 3, 2, 1, 4).unwrap();
        let k = build_k_complex(&m, 0, 4).unwrap();
        let h = check_complex_hypotheses(&k, &m, &GradedModuleTable::regular(m.ring()));
        assert!(h.established, "{:?}", h.items);
    }

    #[test]
    fn numerology_for_the_twisted_cubic() {
        let input = DivisorNumerologyInput { g: 0, deg_l: 3, h1_l: 0 };
        let r = check_divisor_numerology::<PrimeField>(input, None);
        assert_eq!((r.divisor_degree, r.dim_linear_system), (2, 2));
        assert!(r.established, "{:?}", r.items);

        let conic = DivisorNumerologyInput { g: 0, deg_l: 2, h1_l: 0 };
        let r = check_divisor_numerology::<PrimeField>(conic, None);
        assert_eq!((r.divisor_degree, r.dim_linear_system), (1, 1));
        assert_eq!(r.item("dim_d").unwrap().status, CheckStatus::Pass);
        assert_eq!(r.item("degree_bound").unwrap().status, CheckStatus::Fail);
    }

    #[test]
    fn riemann_roch_identities_in_positive_genus() {
        let input = DivisorNumerologyInput { g: 5, deg_l: 9, h1_l: 1 };
        let r = check_divisor_numerology::<PrimeField>(input, None);
        assert_eq!(r.divisor_degree, 5);
        assert_eq!(r.item("h1_d").unwrap().status, CheckStatus::Pass);
        assert_eq!(r.item("h1_l_minus_d").unwrap().status, CheckStatus::Pass);
        assert_eq!(r.item("h1_l_plus_d").unwrap().status, CheckStatus::Abstain);
    }
}
