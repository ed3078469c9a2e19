use crate::error::Error;
use crate::exactlin::{DenseMatrix, Field, SubspaceBasis};
use crate::gring::{h0_p1, rational_normal_curve, BinaryForm, GradedModuleTable};
use crate::quadalg::GradedAlgebraTable;
use crate::rng::SeededRng;

/// Attempts at drawing a second section coprime to `f0` before giving up.
pub const MAX_ATTEMPTS: usize = 32;

/// Genus-0 data for the complex: `L = O(d)` on the projective line, a
/// reduced divisor `D` of degree `e` cut out by `f0`, the pencil
/// `V = ⟨f0, f1⟩ ⊆ H^0(O(e))` and `U = f0 · Ū ⊆ H^0(L)` for a pencil
/// `Ū = ⟨ū1, ū2⟩ ⊆ H^0(O(d - e))`.
#[derive(Clone, Debug)]
pub struct TwistedSectionModel<F: Field> {
    field: F,
    d: usize,
    e: usize,
    roots: Vec<BinaryForm<F>>,
    f0: BinaryForm<F>,
    f1: BinaryForm<F>,
    u_bar: [BinaryForm<F>; 2],
    ring: GradedAlgebraTable<F>,
    seed: u64,
    attempts: usize,
}

impl<F: Field> TwistedSectionModel<F> {
    /// Seeded model. `f0` is a product of `e` distinct linear forms, `f1` is
    /// redrawn until it is coprime to `f0`. When `e = d - 1`, `Ū` is all of
    /// `H^0(O(1))`; otherwise it is a seeded base-point-free pencil.
    pub fn build(field: &F, d: usize, e: usize, seed: u64, cutoff: usize) -> Result<Self, Error> {
        Self::build_with(field, d, e, seed, cutoff, |rng, field, e| random_form(rng, field, e))
    }

    /// As [`TwistedSectionModel::build`] with a caller-supplied generator of
    /// candidates for `f1`, given the stream, the field and the degree.
    pub fn build_with<G>(
        field: &F,
        d: usize,
        e: usize,
        seed: u64,
        cutoff: usize,
        mut candidate: G,
    ) -> Result<Self, Error>
    where
        G: FnMut(&mut SeededRng, &F, usize) -> BinaryForm<F>,
    {
        if d < 2 || e < 1 || e >= d {
            return Err(Error::InvalidParameters(format!(
                "need 1 <= e <= d - 1, got d = {d}, e = {e}"
            )));
        }
        let mut rng = SeededRng::derive(seed, 1);
        let roots = distinct_linear_forms(&mut rng, field, e)?;
        let f0 = BinaryForm::product(field, &roots);
        let u_bar = if e + 1 == d {
            [
                BinaryForm::from_i64(field, &[1, 0]),
                BinaryForm::from_i64(field, &[0, 1]),
            ]
        } else {
            coprime_pair(&mut SeededRng::derive(seed, 2), field, d - e)?
        };
        let mut f1_stream = SeededRng::derive(seed, 3);
        for attempt in 1..=MAX_ATTEMPTS {
            let f1 = candidate(&mut f1_stream, field, e);
            if f1.degree() == e && f0.coprime_with(field, &f1) {
                return Ok(TwistedSectionModel {
                    field: field.clone(),
                    d,
                    e,
                    roots,
                    f0,
                    f1,
                    u_bar,
                    ring: rational_normal_curve(field, d, cutoff)?,
                    seed,
                    attempts: attempt,
                });
            }
        }
        Err(Error::Construction(format!(
            "no section coprime to f0 after {MAX_ATTEMPTS} attempts (d = {d}, e = {e}, seed = {seed}); \
             the pencil V would have a base point"
        )))
    }

    /// Assembles a model from explicit forms without checking that `V` is
    /// base-point-free. Used to exhibit what goes wrong when it is not.
    pub fn from_forms_unchecked(
        field: &F,
        d: usize,
        roots: Vec<BinaryForm<F>>,
        f1: BinaryForm<F>,
        u_bar: [BinaryForm<F>; 2],
        cutoff: usize,
    ) -> Result<Self, Error> {
        let e = roots.len();
        if e == 0 || e >= d || f1.degree() != e || u_bar.iter().any(|u| u.degree() != d - e) {
            return Err(Error::InvalidParameters("forms of inconsistent degrees".into()));
        }
        let f0 = BinaryForm::product(field, &roots);
        Ok(TwistedSectionModel {
            field: field.clone(),
            d,
            e,
            roots,
            f0,
            f1,
            u_bar,
            ring: rational_normal_curve(field, d, cutoff)?,
            seed: 0,
            attempts: 0,
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn attempts(&self) -> usize {
        self.attempts
    }

    pub fn roots(&self) -> &[BinaryForm<F>] {
        &self.roots
    }

    pub fn f0(&self) -> &BinaryForm<F> {
        &self.f0
    }

    pub fn f1(&self) -> &BinaryForm<F> {
        &self.f1
    }

    pub fn v_basis(&self) -> [&BinaryForm<F>; 2] {
        [&self.f0, &self.f1]
    }

    pub fn u_bar(&self) -> &[BinaryForm<F>; 2] {
        &self.u_bar
    }

    pub fn ring(&self) -> &GradedAlgebraTable<F> {
        &self.ring
    }

    pub fn cutoff(&self) -> usize {
        self.ring.cutoff()
    }

    pub fn is_v_base_point_free(&self) -> bool {
        self.f0.coprime_with(&self.field, &self.f1)
    }

    /// `U = f0 · Ū` as a subspace of `R_1 = H^0(O(d))`.
    pub fn u_space(&self) -> SubspaceBasis<F> {
        let rows = self
            .u_bar
            .iter()
            .map(|u| self.f0.mul(&self.field, u).coeffs().to_vec())
            .collect();
        SubspaceBasis::from_vectors(&self.field, self.d + 1, rows)
    }

    pub fn v_space(&self) -> SubspaceBasis<F> {
        SubspaceBasis::from_vectors(
            &self.field,
            self.e + 1,
            vec![self.f0.coeffs().to_vec(), self.f1.coeffs().to_vec()],
        )
    }

    /// `dim W_{n,m} = h^0(O(dn + me))`.
    pub fn w_dim(&self, n: i64, m: i64) -> usize {
        h0_p1(self.d as i64 * n + m * self.e as i64)
    }

    /// `(J_D)_n = f0 · H^0(O(dn - e))` for `n ≥ 1`, zero in degree 0.
    pub fn ideal_of_d(&self) -> Vec<SubspaceBasis<F>> {
        (0..=self.cutoff())
            .map(|n| {
                let dim = self.d * n + 1;
                if n == 0 {
                    return SubspaceBasis::zero(&self.field, dim);
                }
                let m = mult_block(&self.field, &self.f0, (self.d * n) as i64 - self.e as i64);
                m.image()
            })
            .collect()
    }

    /// `A = R / J_D`, the coordinate ring of the `e` points of `D`, as an
    /// `R`-module.
    pub fn quotient_module(&self) -> Result<GradedModuleTable<F>, Error> {
        GradedModuleTable::quotient_of_ring(&self.ring, &self.ideal_of_d())
    }

    /// Left exactness of `0 → O(-D) → V ⊗ O → O(D) → 0` twisted by `L^n` on
    /// global sections: the kernel of `V ⊗ W_{n,0} → W_{n,1}` has the
    /// dimension of `W_{n,-1}`.
    pub fn check_v_sequence(&self, n: usize) -> bool {
        let src = (self.d * n) as i64;
        let map = mult_pair(&self.field, [&self.f0, &self.f1], src);
        let rank = map.rank();
        map.cols() - rank == self.w_dim(n as i64, -1)
    }
}

/// Matrix of `h ↦ g·h` on forms of degree `src` (zero-sized below degree 0).
pub fn mult_block<F: Field>(field: &F, g: &BinaryForm<F>, src: i64) -> DenseMatrix<F> {
    if src < 0 {
        return DenseMatrix::zeros(field, h0_p1(src + g.degree() as i64), 0);
    }
    g.multiplication_matrix(field, src as usize)
}

/// `(h1, h2) ↦ g1·h1 + g2·h2` on pairs of forms of degree `src`.
pub fn mult_pair<F: Field>(field: &F, g: [&BinaryForm<F>; 2], src: i64) -> DenseMatrix<F> {
    mult_block(field, g[0], src).hstack(&mult_block(field, g[1], src))
}

fn random_form<F: Field>(rng: &mut SeededRng, field: &F, deg: usize) -> BinaryForm<F> {
    loop {
        let c: Vec<i64> = (0..=deg).map(|_| rng.coeff()).collect();
        let f = BinaryForm::from_i64(field, &c);
        if !f.is_zero(field) {
            return f;
        }
    }
}

fn distinct_linear_forms<F: Field>(
    rng: &mut SeededRng,
    field: &F,
    count: usize,
) -> Result<Vec<BinaryForm<F>>, Error> {
    let mut out: Vec<BinaryForm<F>> = Vec::with_capacity(count);
    for _ in 0..count * MAX_ATTEMPTS {
        if out.len() == count {
            break;
        }
        let l = random_form(rng, field, 1);
        if out.iter().all(|m| m.coprime_with(field, &l)) {
            out.push(l);
        }
    }
    if out.len() < count {
        return Err(Error::Construction(format!("could not draw {count} distinct points")));
    }
    Ok(out)
}

fn coprime_pair<F: Field>(
    rng: &mut SeededRng,
    field: &F,
    deg: usize,
) -> Result<[BinaryForm<F>; 2], Error> {
    for _ in 0..MAX_ATTEMPTS {
        let a = random_form(rng, field, deg);
        let b = random_form(rng, field, deg);
        if a.coprime_with(field, &b) {
            return Ok([a, b]);
        }
    }
    Err(Error::Construction(format!("no base-point-free pencil of degree {deg}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::PrimeField;

    #[test]
    fn dimension_counts() {
        let f = PrimeField::new(32003).unwrap();
        let m = TwistedSectionModel::build(&f, 3, 2, 1, 6).unwrap();
        assert_eq!(m.ring().dim(1), 4);
        assert_eq!(m.u_space().dim(), 2);
        assert_eq!(m.v_space().dim(), 2);
        assert!(m.is_v_base_point_free());
        assert!((0..=6).all(|n| m.check_v_sequence(n)));
        let q = m.quotient_module().unwrap();
        assert_eq!(q.dims(), &[1, 2, 2, 2, 2, 2, 2]);
    }

    #[test]
    fn degenerate_candidates_are_retried_then_rejected() {
        let f = PrimeField::new(32003).unwrap();
        let mut calls = 0;
        let ok = TwistedSectionModel::build_with(&f, 3, 2, 5, 4, |rng, field, e| {
            calls += 1;
            if calls < 3 {
                BinaryForm::from_i64(field, &[0; 3])
            } else {
                let c: Vec<i64> = (0..=e).map(|_| rng.coeff()).collect();
                BinaryForm::from_i64(field, &c)
            }
        })
        .unwrap();
        assert_eq!(ok.attempts(), 3);

        let err = TwistedSectionModel::build_with(&f, 3, 2, 5, 4, |rng, field, _| {
            // a multiple of a root of f0 always shares that root
            let roots = distinct_linear_forms(&mut SeededRng::derive(5, 1), field, 2).unwrap();
            let c = BinaryForm::from_i64(field, &[1 + rng.int(0, 5), 1]);
            roots[0].mul(field, &c)
        });
        assert!(matches!(err, Err(Error::Construction(_))));
    }
}
