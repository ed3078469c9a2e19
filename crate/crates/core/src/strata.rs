//! Integer invariants of tetragonal strata: scroll and kernel-bundle
//! splitting types, the quadraticity and projective-normality criteria in
//! terms of the bidegree `(a, b)`, linear-series constraints, and the degree
//! bookkeeping for double covers of a hyperelliptic curve.
//!
//! Nothing geometric is constructed; every quantity is an exact integer.

use serde::Serialize;

use crate::checklist::{CheckItem, CheckStatus};
use crate::error::Error;

/// Smallest genus covered by the stratum description.
pub const MIN_GENUS: i64 = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StratumInvariants {
    pub g_h: i64,
    pub i: i64,
    pub case: Parity,
    pub g: i64,
    pub v_type: [i64; 3],
    pub e_type: [i64; 2],
    /// The pair `e_type` read as the bidegree `(a, b)`; only `a + b` is
    /// pinned down independently.
    pub a: i64,
    pub b: i64,
    pub identities_hold: bool,
}

/// Why a parameter triple does not give a stratum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Rejection {
    pub g_h: i64,
    pub i: i64,
    pub case: Parity,
    pub g: i64,
    pub failing: String,
    /// `(g_h, i) = (2, 1)` in the even case, excluded separately.
    pub known_exclusion: bool,
}

fn genus(g_h: i64, i: i64, case: Parity) -> i64 {
    match case {
        Parity::Even => 3 * g_h + 2 * i,
        Parity::Odd => 3 * g_h + 2 * i - 1,
    }
}

/// Invariants of the stratum with base genus `g_h`, parameter `i` and the
/// given parity of `g - g_h`:
///
/// * even: `g = 3g_h + 2i`, `V = (g_h-1, g_h-1+i, g_h-1+i)`, `E = (2g_h-2, g_h-3+2i)`, `2i ≥ g_h`
/// * odd: `g = 3g_h + 2i - 1`, `V = (g_h-1, g_h-2+i, g_h-1+i)`, `E = (2g_h-2, g_h-4+2i)`, `2i ≥ g_h + 1`
pub fn stratum_invariants(g_h: i64, i: i64, case: Parity) -> Result<StratumInvariants, Rejection> {
    let g = genus(g_h, i, case);
    let reject = |failing: String| Rejection {
        g_h,
        i,
        case,
        g,
        failing,
        known_exclusion: case == Parity::Even && g_h == 2 && i == 1,
    };
    if g_h < 2 {
        return Err(reject(format!("g_h = {g_h} < 2")));
    }
    match case {
        Parity::Even if 2 * i < g_h => return Err(reject(format!("2i = {} < g_h = {g_h}", 2 * i))),
        Parity::Odd if 2 * i < g_h + 1 => {
            return Err(reject(format!("2i = {} < g_h + 1 = {}", 2 * i, g_h + 1)))
        }
        _ => {}
    }
    if g < MIN_GENUS {
        return Err(reject(format!("g = {g} < {MIN_GENUS}")));
    }
    let (v_type, e_type) = match case {
        Parity::Even => (
            [g_h - 1, g_h - 1 + i, g_h - 1 + i],
            [2 * g_h - 2, g_h - 3 + 2 * i],
        ),
        Parity::Odd => (
            [g_h - 1, g_h - 2 + i, g_h - 1 + i],
            [2 * g_h - 2, g_h - 4 + 2 * i],
        ),
    };
    let [a, b] = e_type;
    let identities_hold = a + b == g - 5 && v_type.iter().sum::<i64>() == g - 3;
    Ok(StratumInvariants {
        g_h,
        i,
        case,
        g,
        v_type,
        e_type,
        a,
        b,
        identities_hold,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum QuadraticityVerdict {
    Quadratic,
    NotQuadratic,
}

/// The complete-intersection algebra of bidegree `(a, b)` is quadratic iff
/// `a, b ≥ 2`. Both entries are at least `-1` on an actual curve.
pub fn quadraticity_verdict(a: i64, b: i64) -> Result<QuadraticityVerdict, Error> {
    if a < -1 || b < -1 {
        return Err(Error::InvalidParameters(format!(
            "bidegree entries must be at least -1, got ({a}, {b})"
        )));
    }
    Ok(if a.min(b) >= 2 {
        QuadraticityVerdict::Quadratic
    } else {
        QuadraticityVerdict::NotQuadratic
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NormalityVerdict {
    ProjectivelyNormal,
    NotProjectivelyNormal,
    /// `h^0(2T) ≠ 3`: the criterion says nothing.
    NotApplicable,
}

/// Projective normality iff `a, b ≥ 1`, valid when `h^0(2T) = 3`.
pub fn projective_normality_verdict(a: i64, b: i64, h0_2t_is_3: bool) -> NormalityVerdict {
    if !h0_2t_is_3 {
        NormalityVerdict::NotApplicable
    } else if a >= 1 && b >= 1 {
        NormalityVerdict::ProjectivelyNormal
    } else {
        NormalityVerdict::NotProjectivelyNormal
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TetragonalConstraintInput {
    pub g: i64,
    pub r: i64,
    pub deg_a: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PencilClass {
    Trigonal,
    Tetragonal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TetragonalReport {
    pub input: TetragonalConstraintInput,
    pub items: Vec<CheckItem>,
    /// For `r = 1` with admissible degree: the class of the pencil.
    pub classification: Option<PencilClass>,
    pub note: Option<String>,
}

impl TetragonalReport {
    pub fn all_hold(&self) -> bool {
        self.items.iter().all(|i| i.status == CheckStatus::Pass)
    }
}

/// Checks `3r ≤ deg A ≤ 4r` and `r ≤ g/3 - 1` (as `3(r + 1) ≤ g`).
pub fn tetragonal_constraints(input: TetragonalConstraintInput) -> Result<TetragonalReport, Error> {
    let TetragonalConstraintInput { g, r, deg_a } = input;
    if g < 0 || r < 0 || deg_a < 0 {
        return Err(Error::InvalidParameters("g, r and deg A must be nonnegative".into()));
    }
    let items = vec![
        CheckItem::new(
            "lower_degree_bound",
            CheckStatus::from_bool(3 * r <= deg_a),
            format!("3r = {} <= deg A = {deg_a}", 3 * r),
        ),
        CheckItem::new(
            "upper_degree_bound",
            CheckStatus::from_bool(deg_a <= 4 * r),
            format!("deg A = {deg_a} <= 4r = {}", 4 * r),
        ),
        CheckItem::new(
            "dimension_bound",
            CheckStatus::from_bool(3 * (r + 1) <= g),
            format!("3(r + 1) = {} <= g = {g}", 3 * (r + 1)),
        ),
    ];
    let (classification, note) = match (r, deg_a) {
        (1, 3) => (
            Some(PencilClass::Trigonal),
            Some("trigonal case: excluded by the argument in the source, not re-derived".to_string()),
        ),
        (1, 4) => (Some(PencilClass::Tetragonal), Some("A = T is a tetragonal pencil".to_string())),
        _ => (None, None),
    };
    Ok(TetragonalReport {
        input,
        items,
        classification,
        note,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DoubleCoverReport {
    pub g_h: i64,
    pub deg_m: i64,
    pub g: i64,
    pub deg_d: i64,
    /// `E` twisted back by `2g_h - 2`, asserted only for `deg M ≥ 2g_h + 1`.
    pub e_type: Option<[i64; 2]>,
    /// Splitting type of the pushforward of `M` and the matching stratum
    /// row, read off the parity of `deg M - g_h`.
    pub pushforward_type: Option<[i64; 2]>,
    pub stratum: Option<(Parity, i64)>,
    /// Outcome of feeding the stratum row back into [`stratum_invariants`].
    pub cross_check: CheckItem,
}

/// Degree bookkeeping for a double cover of a hyperelliptic curve of genus
/// `g_h` given by a line bundle `M`: `g = 2g_h - 1 + deg M`, `deg D = g - 3`,
/// and for `deg M ≥ 2g_h + 1` the splitting `(2g_h - 2, deg M - 4)`.
pub fn double_cover_bookkeeping(g_h: i64, deg_m: i64) -> Result<DoubleCoverReport, Error> {
    if g_h < 2 {
        return Err(Error::InvalidParameters(format!("g_h = {g_h} < 2")));
    }
    let g = 2 * g_h - 1 + deg_m;
    let deg_d = g - 3;
    if deg_m < 2 * g_h + 1 {
        return Ok(DoubleCoverReport {
            g_h,
            deg_m,
            g,
            deg_d,
            e_type: None,
            pushforward_type: None,
            stratum: None,
            cross_check: CheckItem::new(
                "stratum_cross_check",
                CheckStatus::NotApplicable,
                format!("deg M = {deg_m} < 2g_h + 1 = {}: splitting not asserted", 2 * g_h + 1),
            ),
        });
    }
    let e_type = [2 * g_h - 2, deg_m - 4];
    let (case, i, push) = if (deg_m - g_h - 1) % 2 == 0 {
        let i = (deg_m - g_h - 1) / 2;
        (Parity::Even, i, [i, i])
    } else {
        let i = (deg_m - g_h) / 2;
        (Parity::Odd, i, [i - 1, i])
    };
    let cross_check = match stratum_invariants(g_h, i, case) {
        Ok(s) => {
            let ok = s.g == g && s.e_type == e_type && s.identities_hold;
            CheckItem::new(
                "stratum_cross_check",
                CheckStatus::from_bool(ok),
                format!("row (g_h={g_h}, i={i}, {case:?}): g = {}, E = {:?}", s.g, s.e_type),
            )
        }
        Err(rej) => CheckItem::new(
            "stratum_cross_check",
            if rej.g < MIN_GENUS {
                CheckStatus::NotApplicable
            } else {
                CheckStatus::Fail
            },
            format!("row (g_h={g_h}, i={i}, {case:?}) rejected: {}", rej.failing),
        ),
    };
    Ok(DoubleCoverReport {
        g_h,
        deg_m,
        g,
        deg_d,
        e_type: Some(e_type),
        pushforward_type: Some(push),
        stratum: Some((case, i)),
        cross_check,
    })
}

/// One line of the stratum table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum GridRow {
    Admissible {
        invariants: StratumInvariants,
        quadratic: QuadraticityVerdict,
        normality: NormalityVerdict,
    },
    Rejected(Rejection),
}

/// Every `(g_h, i, case)` with `g_h` in `g_h_range`, `1 ≤ i ≤ i_max`, rejected
/// rows included. The gate `h^0(2T) = 3` is taken to hold on every row.
pub fn stratum_grid(g_h_range: std::ops::RangeInclusive<i64>, i_max: i64) -> Vec<GridRow> {
    let mut rows = Vec::new();
    for g_h in g_h_range {
        for i in 1..=i_max {
            for case in [Parity::Even, Parity::Odd] {
                rows.push(match stratum_invariants(g_h, i, case) {
                    Ok(s) => GridRow::Admissible {
                        quadratic: quadraticity_verdict(s.a, s.b).expect("entries are >= -1"),
                        normality: projective_normality_verdict(s.a, s.b, true),
                        invariants: s,
                    },
                    Err(r) => GridRow::Rejected(r),
                });
            }
        }
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_from_both_cases() {
        let s = stratum_invariants(2, 2, Parity::Even).unwrap();
        assert_eq!((s.g, s.v_type, s.e_type), (10, [1, 3, 3], [2, 3]));
        assert!(s.identities_hold);
        let s = stratum_invariants(3, 2, Parity::Odd).unwrap();
        assert_eq!((s.g, s.v_type, s.e_type), (12, [2, 3, 4], [4, 3]));
        let r = stratum_invariants(2, 1, Parity::Even).unwrap_err();
        assert_eq!(r.g, 8);
        assert!(r.known_exclusion);
    }

    #[test]
    fn verdicts() {
        use NormalityVerdict::*;
        assert_eq!(quadraticity_verdict(2, 3).unwrap(), QuadraticityVerdict::Quadratic);
        assert_eq!(quadraticity_verdict(1, 4).unwrap(), QuadraticityVerdict::NotQuadratic);
        assert_eq!(quadraticity_verdict(2, 2).unwrap(), QuadraticityVerdict::Quadratic);
        assert!(quadraticity_verdict(-2, 9).is_err());
        assert_eq!(projective_normality_verdict(1, 1, true), ProjectivelyNormal);
        assert_eq!(projective_normality_verdict(0, 2, true), NotProjectivelyNormal);
        assert_eq!(projective_normality_verdict(3, 3, false), NotApplicable);
    }

    #[test]
    fn tetragonal_examples() {
        let r = tetragonal_constraints(TetragonalConstraintInput { g: 12, r: 1, deg_a: 4 }).unwrap();
        assert!(r.all_hold());
        assert_eq!(r.classification, Some(PencilClass::Tetragonal));
        let r = tetragonal_constraints(TetragonalConstraintInput { g: 12, r: 1, deg_a: 5 }).unwrap();
        assert_eq!(r.items[1].status, CheckStatus::Fail);
        let r = tetragonal_constraints(TetragonalConstraintInput { g: 9, r: 2, deg_a: 6 }).unwrap();
        assert!(r.all_hold());
        let r = tetragonal_constraints(TetragonalConstraintInput { g: 12, r: 1, deg_a: 3 }).unwrap();
        assert_eq!(r.classification, Some(PencilClass::Trigonal));
    }

    #[test]
    fn double_covers() {
        let r = double_cover_bookkeeping(2, 7).unwrap();
        assert_eq!((r.g, r.deg_d, r.e_type), (10, 7, Some([2, 3])));
        assert_eq!(r.stratum, Some((Parity::Even, 2)));
        assert_eq!(r.cross_check.status, CheckStatus::Pass);
        let r = double_cover_bookkeeping(2, 5).unwrap();
        assert_eq!(r.g, 8);
        assert_eq!(r.cross_check.status, CheckStatus::NotApplicable);
        let r = double_cover_bookkeeping(3, 7).unwrap();
        assert_eq!(r.g, 12);
        assert_eq!(r.stratum, Some((Parity::Odd, 2)));
        assert_eq!(r.cross_check.status, CheckStatus::Pass);
    }
}
