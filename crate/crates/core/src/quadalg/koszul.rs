use serde::Serialize;

use crate::exactlin::Field;
use crate::gring::{resolve, GradedModuleTable};

use super::betti::BettiTable;
use super::presentation::QuadraticPresentation;
use super::table::GradedAlgebraTable;

/// `β_{i,j} = dim Tor_i^A(k, k)_j` from a truncated minimal resolution of the
/// residue field. Cells with `j` past the table cutoff are unknown.
pub fn betti_trivial_module<F: Field>(
    table: &GradedAlgebraTable<F>,
    hom_cutoff: usize,
    int_cutoff: usize,
) -> BettiTable {
    let k = GradedModuleTable::trivial(table);
    resolve(table, &k, table.cutoff(), hom_cutoff, int_cutoff)
        .betti()
        .clone()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum KoszulVerdict {
    KoszulTo { n: usize },
    /// `Tor_i(k, k)_j ≠ 0` with `i ≠ j`.
    Violation { i: usize, j: usize },
    /// The cell `(i, j)` is needed but lies past the table cutoff.
    Unknown { i: usize, j: usize },
}

impl KoszulVerdict {
    pub fn is_koszul(&self) -> bool {
        matches!(self, KoszulVerdict::KoszulTo { .. })
    }
}

/// Reads a Koszul verdict off a Betti table of `k`: `β_{i,j} = 0` for all
/// `i ≠ j`, `i ≤ n`, `j ≤ n + 1`. Cells are scanned by `i`, then `j`.
pub fn koszul_verdict(betti: &BettiTable, n: usize) -> KoszulVerdict {
    for i in 0..=n {
        for j in 0..=n + 1 {
            if i == j {
                continue;
            }
            match betti.get(i, j) {
                None => return KoszulVerdict::Unknown { i, j },
                Some(0) => {}
                Some(_) => return KoszulVerdict::Violation { i, j },
            }
        }
    }
    KoszulVerdict::KoszulTo { n }
}

/// Koszulness to degree `n`; needs the table through degree `n + 1`.
pub fn is_koszul_to<F: Field>(table: &GradedAlgebraTable<F>, n: usize) -> KoszulVerdict {
    koszul_verdict(&betti_trivial_module(table, n, n + 1), n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum QuadraticityVerdict {
    Quadratic { up_to: usize },
    /// A minimal defining relation of degree `degree`; in the usual
    /// convention for ideal generators this is the Betti cell `(1, degree)`.
    NotQuadratic { degree: usize },
    Unknown { degree: usize },
}

/// Minimal relations of `A` sit in `Tor_2^A(k, k)`: the algebra is quadratic
/// through degree `n` iff `β_{2,j} = 0` for `3 ≤ j ≤ n`.
pub fn quadraticity_from_betti(betti: &BettiTable, n: usize) -> QuadraticityVerdict {
    for j in 3..=n {
        match betti.get(2, j) {
            None => return QuadraticityVerdict::Unknown { degree: j },
            Some(0) => {}
            Some(_) => return QuadraticityVerdict::NotQuadratic { degree: j },
        }
    }
    QuadraticityVerdict::Quadratic { up_to: n }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum NumericVerdict {
    Consistent { up_to: usize },
    Inconsistent { degree: usize, coefficient: i64 },
}

impl NumericVerdict {
    pub fn is_consistent(&self) -> bool {
        matches!(self, NumericVerdict::Consistent { .. })
    }
}

/// Coefficients of `H_A(t) · H_B(-t)` through the shorter of the two series.
pub fn alternating_product(a: &[usize], b: &[usize]) -> Vec<i64> {
    let top = a.len().min(b.len());
    (0..top)
        .map(|m| {
            (0..=m)
                .map(|j| {
                    let term = (a[m - j] * b[j]) as i64;
                    if j % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum()
        })
        .collect()
}

/// First degree at which `H_A(t) · H_{A^!}(-t)` differs from `1`, if any.
pub fn numeric_identity(a: &[usize], dual: &[usize]) -> NumericVerdict {
    let coeffs = alternating_product(a, dual);
    for (m, &c) in coeffs.iter().enumerate() {
        let expected = i64::from(m == 0);
        if c != expected {
            return NumericVerdict::Inconsistent {
                degree: m,
                coefficient: c,
            };
        }
    }
    NumericVerdict::Consistent {
        up_to: coeffs.len().saturating_sub(1),
    }
}

/// Necessary condition for Koszulness: `H_A(t) H_{A^!}(-t) = 1` through `t^n`.
pub fn koszul_numeric_check<F: Field>(p: &QuadraticPresentation<F>, n: usize) -> NumericVerdict {
    let a = p.expand_table(n);
    let dual = p.quadratic_dual().expand_table(n);
    numeric_identity(a.dims(), dual.dims())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum EulerCheck {
    Holds { up_to: usize },
    FailsAt { degree: usize },
    Incomplete { degree: usize },
}

/// Checks `Σ_{i,m} (-1)^i β_{i,m} h_{j-m} = dim M_j` for `j ≤ top`, where `β`
/// is the Betti table of `M` over a ring with Hilbert function `h`. Since the
/// `i`-th free module lives in degrees `≥ i`, degrees `j ≤ hom_cutoff` need no
/// cell beyond the table.
pub fn euler_check(
    betti: &BettiTable,
    ring_hilbert: &[usize],
    module_hilbert: &[usize],
    top: usize,
) -> EulerCheck {
    let top = top.min(betti.hom_cutoff());
    for j in 0..=top {
        let mut sum: i64 = 0;
        for i in 0..=j {
            for m in 0..=j {
                let Some(b) = betti.get(i, m) else {
                    return EulerCheck::Incomplete { degree: j };
                };
                let Some(&h) = ring_hilbert.get(j - m) else {
                    return EulerCheck::Incomplete { degree: j };
                };
                let term = (b * h) as i64;
                sum += if i % 2 == 0 { term } else { -term };
            }
        }
        if sum != module_hilbert.get(j).copied().unwrap_or(0) as i64 {
            return EulerCheck::FailsAt { degree: j };
        }
    }
    EulerCheck::Holds { up_to: top }
}
