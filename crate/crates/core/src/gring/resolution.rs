//! Truncated minimal graded free resolutions, computed one internal degree
//! at a time with exact linear algebra.

use crate::exactlin::{DenseMatrix, Field, SubspaceBasis};
use crate::quadalg::{BettiTable, GradedAlgebraTable, LeftModule};

use super::module::FreeModule;

/// One step `F_i -> F_{i-1}` (or `F_0 -> M`): generator degrees of `F_i` and
/// the image of each generator, a vector of the target in that degree.
#[derive(Clone, Debug)]
pub struct ResolutionStage<F: Field> {
    pub generator_degrees: Vec<usize>,
    pub images: Vec<Vec<F::Elem>>,
}

#[derive(Clone, Debug)]
pub struct Resolution<F: Field> {
    betti: BettiTable,
    stages: Vec<ResolutionStage<F>>,
    /// Largest internal degree for which every computed cell is exact.
    known_degree: usize,
}

impl<F: Field> Resolution<F> {
    pub fn betti(&self) -> &BettiTable {
        &self.betti
    }

    pub fn stages(&self) -> &[ResolutionStage<F>] {
        &self.stages
    }

    pub fn known_degree(&self) -> usize {
        self.known_degree
    }

    /// Minimality audit: no differential `F_i -> F_{i-1}` (`i ≥ 1`) has a
    /// unit entry, i.e. no generator image has a component in the degree-0
    /// part of a summand of the same degree.
    pub fn is_minimal(&self, ring: &GradedAlgebraTable<F>) -> bool {
        let f = ring.field();
        for w in self.stages.windows(2) {
            let (target, source) = (&w[0], &w[1]);
            let free = FreeModule::new(ring, target.generator_degrees.clone());
            for (deg, img) in source.generator_degrees.iter().zip(&source.images) {
                for (g, offset, len) in free.blocks(*deg) {
                    if target.generator_degrees[g] == *deg
                        && img[offset..offset + len].iter().any(|x| !f.is_zero(x))
                    {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Minimal free resolution of `module` over `ring` through homological degree
/// `hom_cutoff` and internal degree `int_cutoff`. Cells past the ring cutoff
/// or the module's window are reported unknown.
pub fn resolve<F, M>(
    ring: &GradedAlgebraTable<F>,
    module: &M,
    module_top: usize,
    hom_cutoff: usize,
    int_cutoff: usize,
) -> Resolution<F>
where
    F: Field,
    M: LeftModule<F>,
{
    let f = ring.field();
    let top = int_cutoff.min(ring.cutoff()).min(module_top);
    let mut betti = BettiTable::new(hom_cutoff, int_cutoff);
    let mut stages = Vec::new();

    // the submodule to be covered at the current stage, degreewise, as
    // independent vectors (not canonicalized: only spans and ranks matter)
    let mut sub: Vec<Vec<Vec<F::Elem>>> = (0..=top)
        .map(|j| SubspaceBasis::full(f, module.module_dim(j)).vectors())
        .collect();
    let mut previous_free: Option<FreeModule<'_, F>> = None;

    for i in 0..=hom_cutoff {
        let target: &dyn LeftModule<F> = match &previous_free {
            Some(free) => free,
            None => module,
        };
        let stage = minimal_generators(ring, target, &sub, top);
        let mut counts = vec![0usize; top + 1];
        for &d in &stage.generator_degrees {
            counts[d] += 1;
        }
        for (j, c) in counts.iter().enumerate() {
            betti.set(i, j, *c);
        }
        if i == hom_cutoff {
            stages.push(stage);
            break;
        }
        let free = FreeModule::new(ring, stage.generator_degrees.clone());
        sub = (0..=top)
            .map(|j| {
                cover_map(ring, target, &free, &stage, j, top).kernel_vectors()
            })
            .collect();
        stages.push(stage);
        previous_free = Some(free);
    }
    Resolution {
        betti,
        stages,
        known_degree: top,
    }
}

/// Minimal generators of a submodule `sub ⊆ target`: in each degree a basis
/// of a complement of `R_1 · sub_{j-1}` inside `sub_j`.
fn minimal_generators<F: Field>(
    ring: &GradedAlgebraTable<F>,
    target: &dyn LeftModule<F>,
    sub: &[Vec<Vec<F::Elem>>],
    top: usize,
) -> ResolutionStage<F> {
    let f = ring.field();
    let mut generator_degrees = Vec::new();
    let mut images = Vec::new();
    for j in 0..=top {
        if sub[j].is_empty() {
            continue;
        }
        let dim = target.module_dim(j);
        let decomposable = if j == 0 {
            SubspaceBasis::zero(f, dim)
        } else {
            decomposable_part(ring, target, &sub[j - 1], j, sub[j].len())
        };
        if decomposable.dim() == sub[j].len() {
            continue;
        }
        let residues: Vec<Vec<F::Elem>> = sub[j].iter().map(|v| decomposable.reduce(v)).collect();
        let fresh = SubspaceBasis::from_vectors(f, dim, residues);
        for v in fresh.vectors() {
            generator_degrees.push(j);
            images.push(v);
        }
    }
    ResolutionStage {
        generator_degrees,
        images,
    }
}

/// `R_1 · prev` inside `target_j`. The products are reduced in chunks, and
/// the loop stops once the span reaches `bound`: it lies in `sub_j`, so it
/// cannot grow further.
fn decomposable_part<F: Field>(
    ring: &GradedAlgebraTable<F>,
    target: &dyn LeftModule<F>,
    prev: &[Vec<F::Elem>],
    j: usize,
    bound: usize,
) -> SubspaceBasis<F> {
    let f = ring.field();
    let dim = target.module_dim(j);
    let chunk = bound.max(64);
    let mut products = prev
        .iter()
        .flat_map(|v| (0..ring.num_generators()).map(move |x| target.apply_generator(x, j - 1, v)));
    let mut span = SubspaceBasis::zero(f, dim);
    loop {
        let batch: Vec<Vec<F::Elem>> = products.by_ref().take(chunk).collect();
        if batch.is_empty() {
            return span;
        }
        let mut rows = span.vectors();
        rows.extend(batch);
        span = SubspaceBasis::from_vectors(f, dim, rows);
        if span.dim() >= bound {
            return span;
        }
    }
}

/// The map `(F)_j -> target_j` sending generator `γ` to its image. Columns of
/// a generator in degree `j > deg γ` are obtained from degree `j-1` through
/// the ring's lift `a = Σ c · x_i · b_k`, so `a·v = Σ c · x_i·(b_k·v)`.
fn cover_map<F: Field>(
    ring: &GradedAlgebraTable<F>,
    target: &dyn LeftModule<F>,
    free: &FreeModule<'_, F>,
    stage: &ResolutionStage<F>,
    j: usize,
    top: usize,
) -> DenseMatrix<F> {
    debug_assert!(j <= top);
    let rows = target.module_dim(j);
    let mut columns: Vec<Vec<F::Elem>> = Vec::with_capacity(free.module_dim(j));
    for (g, &d) in free.generator_degrees().iter().enumerate() {
        if j < d {
            continue;
        }
        columns.extend(generator_columns(ring, target, &stage.images[g], d, j));
    }
    DenseMatrix::from_columns(ring.field(), rows, &columns)
}

/// Images of `a · v` for `a` running over the basis of `R_{j-d}`, where `v`
/// lies in the target in degree `d`.
fn generator_columns<F: Field>(
    ring: &GradedAlgebraTable<F>,
    target: &dyn LeftModule<F>,
    image: &[F::Elem],
    d: usize,
    j: usize,
) -> Vec<Vec<F::Elem>> {
    let f = ring.field();
    let mut cols = vec![image.to_vec()];
    for p in 1..=j - d {
        let lift = ring.lift(p);
        let acted: Vec<Vec<F::Elem>> = lift
            .pairs
            .iter()
            .map(|&(x, k)| target.apply_generator(x, d + p - 1, &cols[k]))
            .collect();
        let len = target.module_dim(d + p);
        let next: Vec<Vec<F::Elem>> = (0..ring.dim(p))
            .map(|a| {
                let mut out = vec![f.zero(); len];
                for (l, w) in acted.iter().enumerate() {
                    let c = lift.coeffs.get(l, a);
                    if f.is_zero(c) {
                        continue;
                    }
                    for (o, x) in out.iter_mut().zip(w) {
                        if !f.is_zero(x) {
                            *o = f.add(o, &f.mul(c, x));
                        }
                    }
                }
                out
            })
            .collect();
        cols = next;
    }
    cols
}
