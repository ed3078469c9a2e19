use serde::Serialize;

use crate::error::Error;
use crate::exactlin::{DenseMatrix, Field};
use crate::quadalg::{BettiTable, LinearityVerdict};

use super::models::{h0_p1, h1_p1, rational_normal_curve};
use super::module::GradedModuleTable;
use super::resolution::resolve;

/// `O(m)` on the projective line viewed over the section ring of `O(d)`:
/// the module `M_i = H^0(O(m + d·i))`, `i ≥ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SheafModelP1 {
    pub d: usize,
    pub m: i64,
}

impl SheafModelP1 {
    pub fn new(d: usize, m: i64) -> Result<Self, Error> {
        if d == 0 {
            return Err(Error::InvalidParameters("the degree d must be positive".into()));
        }
        Ok(SheafModelP1 { d, m })
    }

    pub fn twist(&self, i: usize) -> i64 {
        self.m + (self.d * i) as i64
    }

    /// First degree in which the module is nonzero.
    pub fn first_degree(&self) -> usize {
        if self.m >= 0 {
            0
        } else {
            (-self.m as usize).div_ceil(self.d)
        }
    }

    /// The module on the window `[0, top]`; a ring generator
    /// `s^{d-a} t^a` shifts the monomial index by `a`.
    pub fn module<F: Field>(&self, field: &F, top: usize) -> GradedModuleTable<F> {
        let dims: Vec<usize> = (0..=top).map(|i| h0_p1(self.twist(i))).collect();
        let action = (0..top)
            .map(|i| {
                (0..=self.d)
                    .map(|a| {
                        let mut mat = DenseMatrix::zeros(field, dims[i + 1], dims[i]);
                        for b in 0..dims[i] {
                            mat.set(a + b, b, field.one());
                        }
                        mat
                    })
                    .collect()
            })
            .collect();
        GradedModuleTable::new(field, self.d + 1, dims, action).expect("valid shape")
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum RegularityOutcome {
    /// Hypothesis holds; the resolution was computed.
    Verified {
        betti: BettiTable,
        linearity: LinearityVerdict,
    },
    /// Hypothesis fails; no claim about the conclusion.
    HypothesisFails,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RegularityReport {
    pub sheaf: SheafModelP1,
    /// `h^1(F(-1)) = h^1(O(m - d))`, the only nontrivial vanishing on a curve.
    pub h1_twist: usize,
    pub hypothesis_holds: bool,
    pub outcome: RegularityOutcome,
}

/// The 0-regularity criterion on the rational normal curve of degree `d`:
/// if `H^1(O(m-d)) = 0`, the module of sections should have a linear
/// resolution. Checked through homological degree `hom_cutoff`.
pub fn check_regularity<F: Field>(
    field: &F,
    sheaf: SheafModelP1,
    hom_cutoff: usize,
) -> Result<RegularityReport, Error> {
    let h1_twist = h1_p1(sheaf.m - sheaf.d as i64);
    let hypothesis_holds = h1_twist == 0;
    let outcome = if hypothesis_holds {
        let (betti, linearity) = resolve_sections(field, sheaf, hom_cutoff)?;
        RegularityOutcome::Verified { betti, linearity }
    } else {
        RegularityOutcome::HypothesisFails
    };
    Ok(RegularityReport {
        sheaf,
        h1_twist,
        hypothesis_holds,
        outcome,
    })
}

/// Betti table of the section module through `(hom_cutoff, hom_cutoff + 1)`
/// past its generation degree, regardless of the hypothesis.
pub fn resolve_sections<F: Field>(
    field: &F,
    sheaf: SheafModelP1,
    hom_cutoff: usize,
) -> Result<(BettiTable, LinearityVerdict), Error> {
    let top = hom_cutoff + 1 + sheaf.first_degree();
    let ring = rational_normal_curve(field, sheaf.d, top)?;
    let module = sheaf.module(field, top);
    let res = resolve(&ring, &module, top, hom_cutoff, top);
    let betti = res.betti().clone();
    let linearity = betti.linearity(hom_cutoff);
    Ok((betti, linearity))
}
