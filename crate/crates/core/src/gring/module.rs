use crate::error::Error;
use crate::exactlin::{DenseMatrix, Field, QuotientSpace, SubspaceBasis};
use crate::quadalg::{GradedAlgebraTable, LeftModule};

/// A graded left module over a ring table, stored on the degree window
/// `[0, top]` by its dimensions and the action `R_1 ⊗ M_j -> M_{j+1}`.
/// Degrees outside the window are unknown; degrees below 0 are zero.
#[derive(Clone, Debug)]
pub struct GradedModuleTable<F: Field> {
    field: F,
    num_ring_generators: usize,
    dims: Vec<usize>,
    /// `action[j][i]`: generator `i` of the ring acting `M_j -> M_{j+1}`.
    action: Vec<Vec<DenseMatrix<F>>>,
}

impl<F: Field> GradedModuleTable<F> {
    pub fn new(
        field: &F,
        num_ring_generators: usize,
        dims: Vec<usize>,
        action: Vec<Vec<DenseMatrix<F>>>,
    ) -> Result<Self, Error> {
        if dims.is_empty() {
            return Err(Error::Construction("module window is empty".into()));
        }
        if action.len() + 1 != dims.len() {
            return Err(Error::Construction("action maps must cover the window".into()));
        }
        for (j, maps) in action.iter().enumerate() {
            if maps.len() != num_ring_generators {
                return Err(Error::Construction(format!("degree {j}: wrong number of action maps")));
            }
            if maps.iter().any(|m| m.rows() != dims[j + 1] || m.cols() != dims[j]) {
                return Err(Error::Construction(format!("degree {j}: action map has wrong shape")));
            }
        }
        Ok(GradedModuleTable {
            field: field.clone(),
            num_ring_generators,
            dims,
            action,
        })
    }

    /// The residue field `k = R/R_+` in degree 0.
    pub fn trivial(ring: &GradedAlgebraTable<F>) -> Self {
        let f = ring.field();
        let top = ring.cutoff();
        let mut dims = vec![0; top + 1];
        dims[0] = 1;
        let action = (0..top)
            .map(|j| {
                (0..ring.num_generators())
                    .map(|_| DenseMatrix::zeros(f, dims[j + 1], dims[j]))
                    .collect()
            })
            .collect();
        Self::new(f, ring.num_generators(), dims, action).expect("valid shape")
    }

    /// The ring as a module over itself.
    pub fn regular(ring: &GradedAlgebraTable<F>) -> Self {
        let top = ring.cutoff();
        let action = (0..top)
            .map(|j| (0..ring.num_generators()).map(|i| ring.lmul(j, i).clone()).collect())
            .collect();
        Self::new(ring.field(), ring.num_generators(), ring.dims().to_vec(), action)
            .expect("valid shape")
    }

    /// `R / J` as an `R`-module, `J` a graded left ideal given degreewise.
    pub fn quotient_of_ring(
        ring: &GradedAlgebraTable<F>,
        ideal: &[SubspaceBasis<F>],
    ) -> Result<Self, Error> {
        let f = ring.field();
        let top = ring.cutoff().min(ideal.len().saturating_sub(1));
        let quotients: Vec<QuotientSpace<F>> = ideal[..=top]
            .iter()
            .map(|s| QuotientSpace::new(s.clone()))
            .collect();
        let mut action = Vec::with_capacity(top);
        for j in 0..top {
            let mut maps = Vec::with_capacity(ring.num_generators());
            for i in 0..ring.num_generators() {
                let lm = ring.lmul(j, i);
                for v in ideal[j].vectors() {
                    if !ideal[j + 1].contains(&lm.apply(&v)) {
                        return Err(Error::Construction(format!(
                            "not an ideal: generator {i} maps J_{j} outside J_{}",
                            j + 1
                        )));
                    }
                }
                let cols: Vec<Vec<F::Elem>> = quotients[j]
                    .normal_columns()
                    .iter()
                    .map(|&b| quotients[j + 1].project(&lm.column(b)))
                    .collect();
                maps.push(DenseMatrix::from_columns(f, quotients[j + 1].dim(), &cols));
            }
            action.push(maps);
        }
        let dims = quotients.iter().map(QuotientSpace::dim).collect();
        Self::new(f, ring.num_generators(), dims, action)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn num_ring_generators(&self) -> usize {
        self.num_ring_generators
    }

    pub fn top_degree(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn action(&self, j: usize, i: usize) -> &DenseMatrix<F> {
        &self.action[j][i]
    }

    /// Checks that the action respects the ring's multiplication: for every
    /// basis product `x_i * b` of the ring, acting by the product equals
    /// acting by `b` then by `x_i`. Returns the first failing degree pair.
    pub fn check_associativity(&self, ring: &GradedAlgebraTable<F>) -> Result<(), (usize, usize)> {
        let f = &self.field;
        let top = self.top_degree().min(ring.cutoff());
        for p in 2..=top {
            for b in 0..ring.dim(p - 1) {
                let mut eb = vec![f.zero(); ring.dim(p - 1)];
                eb[b] = f.one();
                for i in 0..ring.num_generators() {
                    let prod = ring.lmul(p - 1, i).apply(&eb);
                    for q in 0..=top - p {
                        for m in 0..self.dims[q] {
                            let mut em = vec![f.zero(); self.dims[q]];
                            em[m] = f.one();
                            let direct = ring.act(p, &prod, q, &em, self);
                            let inner = ring.act(p - 1, &eb, q, &em, self);
                            let stepwise = self.apply_generator(i, q + p - 1, &inner);
                            if direct != stepwise {
                                return Err((p, q));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

impl<F: Field> LeftModule<F> for GradedModuleTable<F> {
    fn module_dim(&self, degree: usize) -> usize {
        self.dims.get(degree).copied().unwrap_or(0)
    }

    fn apply_generator(&self, i: usize, degree: usize, v: &[F::Elem]) -> Vec<F::Elem> {
        self.action[degree][i].apply(v)
    }
}

/// Free module `⊕_γ R(-deg γ)`; in degree `j` the coordinates are the
/// concatenation over generators of `R_{j - deg γ}`.
#[derive(Clone, Debug)]
pub struct FreeModule<'a, F: Field> {
    ring: &'a GradedAlgebraTable<F>,
    generator_degrees: Vec<usize>,
}

impl<'a, F: Field> FreeModule<'a, F> {
    pub fn new(ring: &'a GradedAlgebraTable<F>, generator_degrees: Vec<usize>) -> Self {
        FreeModule {
            ring,
            generator_degrees,
        }
    }

    pub fn generator_degrees(&self) -> &[usize] {
        &self.generator_degrees
    }

    pub fn rank(&self) -> usize {
        self.generator_degrees.len()
    }

    /// `(generator, offset, block length)` for each summand in degree `j`.
    pub fn blocks(&self, j: usize) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::with_capacity(self.generator_degrees.len());
        let mut offset = 0;
        for (g, &d) in self.generator_degrees.iter().enumerate() {
            let len = if j >= d { self.ring.dim(j - d) } else { 0 };
            out.push((g, offset, len));
            offset += len;
        }
        out
    }
}

impl<F: Field> LeftModule<F> for FreeModule<'_, F> {
    fn module_dim(&self, degree: usize) -> usize {
        self.generator_degrees
            .iter()
            .map(|&d| if degree >= d { self.ring.dim(degree - d) } else { 0 })
            .sum()
    }

    fn apply_generator(&self, i: usize, degree: usize, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = self.ring.field();
        let mut out = Vec::with_capacity(self.module_dim(degree + 1));
        for (&d, (_, offset, len)) in self.generator_degrees.iter().zip(self.blocks(degree)) {
            if degree + 1 < d {
                continue;
            }
            if degree < d {
                // this summand starts in degree d = degree + 1
                out.extend(std::iter::repeat_n(f.zero(), self.ring.dim(0)));
                continue;
            }
            let block = &v[offset..offset + len];
            out.extend(self.ring.lmul(degree - d, i).apply(block));
        }
        out
    }
}
