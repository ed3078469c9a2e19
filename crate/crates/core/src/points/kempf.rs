use serde::Serialize;

use crate::error::Error;
use crate::exactlin::Field;
use crate::quadalg::{betti_trivial_module, koszul_verdict, BettiTable, KoszulVerdict};

use super::{model_point_ring, quadratic_generation_check, PointConfiguration, QuadraticGeneration};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum KempfVerdict {
    PredictedKoszul,
    OutOfRange,
}

/// `d` points spanning `P^s` are read as `d` points of `P^{d-p}`, so `p = d - s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KempfPrediction {
    pub d: usize,
    pub span_dim: usize,
    pub p: usize,
    pub general_position: bool,
    pub verdict: KempfVerdict,
}

/// Coordinate rings of `d` points in general linear position in `P^{d-p}`
/// are predicted Koszul when `2p ≤ d`.
pub fn kempf_predict<F: Field>(c: &PointConfiguration<F>) -> Result<KempfPrediction, Error> {
    let d = c.len();
    let span_dim = c
        .span_dim()
        .ok_or_else(|| Error::InvalidPoints("empty configuration".into()))?;
    let p = d - span_dim;
    let general_position = c.general_position().holds;
    let verdict = if general_position && 2 * p <= d {
        KempfVerdict::PredictedKoszul
    } else {
        KempfVerdict::OutOfRange
    };
    Ok(KempfPrediction {
        d,
        span_dim,
        p,
        general_position,
        verdict,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KempfReport {
    pub prediction: KempfPrediction,
    pub hilbert: Vec<usize>,
    pub quadratic_generation: QuadraticGeneration,
    pub betti: BettiTable,
    pub koszul: KoszulVerdict,
}

impl KempfReport {
    /// The prediction, when made, agrees with the direct computation.
    pub fn agrees(&self) -> bool {
        self.prediction.verdict == KempfVerdict::OutOfRange
            || (self.quadratic_generation.holds && self.koszul.is_koszul())
    }
}

/// Juxtaposes the prediction with a direct computation: quadratic generation
/// of the ideal through degree `n` and Koszulness of the coordinate ring to
/// degree `n`.
pub fn verify_kempf<F: Field>(c: &PointConfiguration<F>, n: usize) -> Result<KempfReport, Error> {
    let prediction = kempf_predict(c)?;
    let model = model_point_ring(c, n + 1)?;
    let betti = betti_trivial_module(&model.table, n, n + 1);
    let koszul = koszul_verdict(&betti, n);
    Ok(KempfReport {
        prediction,
        hilbert: model.table.dims().to_vec(),
        quadratic_generation: quadratic_generation_check(c, n.max(3)),
        betti,
        koszul,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::PrimeField;

    #[test]
    fn predictions_by_span() {
        let f = PrimeField::new(32003).unwrap();
        let four = PointConfiguration::random_general(&f, 2, 4, 7).unwrap();
        let k = kempf_predict(&four).unwrap();
        assert_eq!((k.p, k.verdict), (2, KempfVerdict::PredictedKoszul));
        let five = PointConfiguration::random_general(&f, 2, 5, 7).unwrap();
        assert_eq!(kempf_predict(&five).unwrap().verdict, KempfVerdict::OutOfRange);
        let simplex =
            PointConfiguration::from_i64(&f, 2, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]])
                .unwrap();
        assert_eq!(kempf_predict(&simplex).unwrap().p, 1);
    }

    #[test]
    fn four_general_points_are_koszul() {
        let f = PrimeField::new(32003).unwrap();
        let c = PointConfiguration::random_general(&f, 2, 4, 11).unwrap();
        let r = verify_kempf(&c, 4).unwrap();
        assert_eq!(r.hilbert, vec![1, 3, 4, 4, 4, 4]);
        assert!(r.quadratic_generation.holds);
        assert_eq!(r.koszul, KoszulVerdict::KoszulTo { n: 4 });
        assert!(r.agrees());
    }
}
