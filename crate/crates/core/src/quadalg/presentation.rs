use std::collections::BTreeMap;

use crate::error::Error;
use crate::exactlin::{DenseMatrix, Field, QuotientSpace, SubspaceBasis};
use crate::rng::SeededRng;

use super::table::GradedAlgebraTable;

/// A tensor element given as `(word, coefficient)` terms; a word lists
/// generator indices left to right.
pub type Terms<E> = Vec<(Vec<usize>, E)>;

/// Index of a word of length `t` in `V^{⊗t}`; the first letter is the most
/// significant digit, so index order is lexicographic word order.
pub fn word_index(word: &[usize], n: usize) -> usize {
    word.iter().fold(0, |acc, &l| acc * n + l)
}

pub fn decode_word(mut index: usize, len: usize, n: usize) -> Vec<usize> {
    let mut w = vec![0; len];
    for slot in w.iter_mut().rev() {
        *slot = index % n;
        index /= n;
    }
    w
}

/// Quadratic algebra `T(V)/(R)` with `R ⊆ V⊗V`.
///
/// Commutative presentations store the full preimage of their relations in
/// `V⊗V`: every commutator `e_i⊗e_j - e_j⊗e_i` is part of `relations`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticPresentation<F: Field> {
    field: F,
    generators: Vec<String>,
    commutative: bool,
    relations: SubspaceBasis<F>,
}

impl<F: Field> QuadraticPresentation<F> {
    /// `relations` are vectors in the `n²`-dimensional space `V⊗V`, the pair
    /// `(a, b)` at coordinate `a·n + b`.
    pub fn new(
        field: &F,
        generators: Vec<String>,
        commutative: bool,
        relations: Vec<Vec<F::Elem>>,
    ) -> Result<Self, Error> {
        let n = generators.len();
        if n == 0 {
            return Err(Error::InvalidPresentation("no generators".into()));
        }
        if field.characteristic() == 2 {
            return Err(Error::InvalidField("characteristic 2 is not supported".into()));
        }
        if let Some(bad) = relations.iter().find(|r| r.len() != n * n) {
            return Err(Error::InvalidPresentation(format!(
                "relation vector of length {} in a space of dimension {}",
                bad.len(),
                n * n
            )));
        }
        let mut rows = relations;
        if commutative {
            rows.extend(commutators(field, n));
        }
        Ok(QuadraticPresentation {
            field: field.clone(),
            generators,
            commutative,
            relations: SubspaceBasis::from_vectors(field, n * n, rows),
        })
    }

    pub fn from_terms(
        field: &F,
        generators: Vec<String>,
        commutative: bool,
        relations: &[Terms<F::Elem>],
    ) -> Result<Self, Error> {
        let n = generators.len();
        let vectors = relations
            .iter()
            .map(|r| terms_to_vector(field, n, 2, r))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(field, generators, commutative, vectors)
    }

    pub fn symmetric(field: &F, n: usize) -> Self {
        Self::new(field, default_names(n), true, Vec::new()).expect("valid")
    }

    /// Relations `e_i⊗e_j + e_j⊗e_i` and `e_i⊗e_i`.
    pub fn exterior(field: &F, n: usize) -> Self {
        let mut rels = Vec::new();
        for i in 0..n {
            for j in i..n {
                let mut v = vec![field.zero(); n * n];
                v[i * n + j] = field.one();
                v[j * n + i] = field.add(&v[j * n + i], &field.one());
                rels.push(v);
            }
        }
        Self::new(field, default_names(n), false, rels).expect("valid")
    }

    pub fn free(field: &F, n: usize) -> Self {
        Self::new(field, default_names(n), false, Vec::new()).expect("valid")
    }

    /// Commutative presentation by `count` quadrics with seeded integer
    /// coefficients on every monomial `x_i x_j`, `i ≤ j`.
    pub fn random_commutative(field: &F, n: usize, count: usize, seed: u64) -> Self {
        let mut rng = SeededRng::derive(seed, 0x51);
        let rels: Vec<Terms<F::Elem>> = (0..count)
            .map(|_| {
                (0..n)
                    .flat_map(|i| (i..n).map(move |j| vec![i, j]))
                    .map(|w| (w, rng.elem(field)))
                    .collect()
            })
            .collect();
        Self::from_terms(field, default_names(n), true, &rels).expect("well-formed terms")
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn relations(&self) -> &SubspaceBasis<F> {
        &self.relations
    }

    /// The presentation with the same relation space, read noncommutatively.
    pub fn as_noncommutative(&self) -> Self {
        QuadraticPresentation {
            commutative: false,
            ..self.clone()
        }
    }

    pub fn to_tensor_presentation(&self) -> TensorPresentation<F> {
        let mut relations = BTreeMap::new();
        relations.insert(2, self.relations.clone());
        TensorPresentation {
            field: self.field.clone(),
            generators: self.generators.clone(),
            commutative: self.commutative,
            relations,
        }
    }

    pub fn expand_table(&self, cutoff: usize) -> GradedAlgebraTable<F> {
        self.to_tensor_presentation().expand_table(cutoff)
    }

    /// `A^! = T(V*)/(R^⊥)` with `R^⊥` the annihilator of `R` under
    /// `⟨a⊗b, f⊗g⟩ = f(a)g(b)`, which in coordinates is the dot product.
    pub fn quadratic_dual(&self) -> Self {
        let n = self.num_generators();
        let perp = if self.relations.is_zero() {
            SubspaceBasis::full(&self.field, n * n)
        } else {
            self.relations.basis().kernel()
        };
        QuadraticPresentation {
            field: self.field.clone(),
            generators: self.generators.iter().map(|g| format!("{g}'")).collect(),
            commutative: false,
            relations: perp,
        }
    }
}

pub fn default_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{i}")).collect()
}

fn commutators<F: Field>(field: &F, n: usize) -> Vec<Vec<F::Elem>> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut v = vec![field.zero(); n * n];
            v[i * n + j] = field.one();
            v[j * n + i] = field.neg(&field.one());
            out.push(v);
        }
    }
    out
}

fn terms_to_vector<F: Field>(
    field: &F,
    n: usize,
    degree: usize,
    terms: &Terms<F::Elem>,
) -> Result<Vec<F::Elem>, Error> {
    let mut v = vec![field.zero(); n.pow(degree as u32)];
    for (word, c) in terms {
        if word.len() != degree {
            return Err(Error::InvalidPresentation(format!(
                "term of length {} in a relation of degree {degree}",
                word.len()
            )));
        }
        if let Some(&bad) = word.iter().find(|&&l| l >= n) {
            return Err(Error::InvalidPresentation(format!("unknown generator index {bad}")));
        }
        let k = word_index(word, n);
        v[k] = field.add(&v[k], c);
    }
    Ok(v)
}

/// Graded algebra `T(V)/I` with homogeneous relations of any degree ≥ 2.
/// Used for presentations that are not quadratic (e.g. a cubic relation).
#[derive(Clone, Debug)]
pub struct TensorPresentation<F: Field> {
    field: F,
    generators: Vec<String>,
    commutative: bool,
    relations: BTreeMap<usize, SubspaceBasis<F>>,
}

impl<F: Field> TensorPresentation<F> {
    /// Relations are homogeneous term lists; degree-1 relations are rejected
    /// (the generators must stay a basis of `A_1`).
    pub fn new(
        field: &F,
        generators: Vec<String>,
        commutative: bool,
        relations: &[Terms<F::Elem>],
    ) -> Result<Self, Error> {
        let n = generators.len();
        if n == 0 {
            return Err(Error::InvalidPresentation("no generators".into()));
        }
        if field.characteristic() == 2 {
            return Err(Error::InvalidField("characteristic 2 is not supported".into()));
        }
        let mut by_degree: BTreeMap<usize, Vec<Vec<F::Elem>>> = BTreeMap::new();
        for r in relations {
            let Some((w, _)) = r.first() else { continue };
            let t = w.len();
            if t < 2 {
                return Err(Error::InvalidPresentation(
                    "relations must have degree at least 2".into(),
                ));
            }
            by_degree.entry(t).or_default().push(terms_to_vector(field, n, t, r)?);
        }
        if commutative {
            by_degree.entry(2).or_default().extend(commutators(field, n));
        }
        let relations = by_degree
            .into_iter()
            .map(|(t, rows)| (t, SubspaceBasis::from_vectors(field, n.pow(t as u32), rows)))
            .filter(|(_, s)| !s.is_zero())
            .collect();
        Ok(TensorPresentation {
            field: field.clone(),
            generators,
            commutative,
            relations,
        })
    }

    pub fn is_quadratic(&self) -> bool {
        self.relations.keys().all(|&t| t == 2)
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn relation_degrees(&self) -> Vec<usize> {
        self.relations.keys().copied().collect()
    }

    /// The quadratic part, when all relations are quadratic.
    pub fn as_quadratic(&self) -> Option<QuadraticPresentation<F>> {
        if !self.is_quadratic() {
            return None;
        }
        let n = self.generators.len();
        Some(QuadraticPresentation {
            field: self.field.clone(),
            generators: self.generators.clone(),
            commutative: self.commutative,
            relations: self
                .relations
                .get(&2)
                .cloned()
                .unwrap_or_else(|| SubspaceBasis::zero(&self.field, n * n)),
        })
    }

    /// Degreewise quotient `A_m = V^{⊗m} / I_m`, computed incrementally as
    /// `A_m = (A_{m-1} ⊗ V) / image(A_{m-t} ⊗ R_t)`. Columns of `A_{m-1} ⊗ V`
    /// are ordered lexicographically by word, the leading (leftmost) word of
    /// each relation is eliminated, and the surviving words form the normal
    /// basis.
    pub fn expand_table(&self, cutoff: usize) -> GradedAlgebraTable<F> {
        let f = &self.field;
        let n = self.generators.len();
        let mut words: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new()]];
        // rmul[m][j]: A_m -> A_{m+1}, right multiplication by generator j
        let mut rmul: Vec<Vec<DenseMatrix<F>>> = Vec::new();
        if cutoff >= 1 {
            words.push((0..n).map(|j| vec![j]).collect());
            rmul.push(
                (0..n)
                    .map(|j| {
                        let mut m = DenseMatrix::zeros(f, n, 1);
                        m.set(j, 0, f.one());
                        m
                    })
                    .collect(),
            );
        }
        for m in 2..=cutoff {
            let prev = words[m - 1].len();
            let ambient = prev * n;
            let mut rows = Vec::new();
            for (&t, rel) in self.relations.range(..=m) {
                let base = words[m - t].len();
                for c in 0..base {
                    for r in rel.vectors() {
                        let mut img = vec![f.zero(); ambient];
                        for (widx, coef) in r.iter().enumerate() {
                            if f.is_zero(coef) {
                                continue;
                            }
                            let word = decode_word(widx, t, n);
                            let mut v = vec![f.zero(); base];
                            v[c] = f.one();
                            for (step, &letter) in word[..t - 1].iter().enumerate() {
                                v = rmul[m - t + step][letter].apply(&v);
                            }
                            let last = word[t - 1];
                            for (b, vb) in v.iter().enumerate() {
                                if !f.is_zero(vb) {
                                    let k = b * n + last;
                                    img[k] = f.add(&img[k], &f.mul(coef, vb));
                                }
                            }
                        }
                        rows.push(img);
                    }
                }
            }
            let quotient = QuotientSpace::new(SubspaceBasis::from_vectors(f, ambient, rows));
            let new_words: Vec<Vec<usize>> = quotient
                .normal_columns()
                .iter()
                .map(|&col| {
                    let mut w = words[m - 1][col / n].clone();
                    w.push(col % n);
                    w
                })
                .collect();
            let maps = (0..n)
                .map(|j| {
                    let cols: Vec<Vec<F::Elem>> =
                        (0..prev).map(|b| quotient.project_basis(b * n + j)).collect();
                    DenseMatrix::from_columns(f, quotient.dim(), &cols)
                })
                .collect();
            rmul.push(maps);
            words.push(new_words);
        }
        let dims: Vec<usize> = words.iter().map(Vec::len).collect();
        let mut lmul = Vec::with_capacity(cutoff);
        for m in 0..cutoff {
            let maps = (0..n)
                .map(|i| {
                    let cols: Vec<Vec<F::Elem>> = words[m]
                        .iter()
                        .map(|w| {
                            let mut v = vec![f.zero(); n];
                            v[i] = f.one();
                            for (step, &letter) in w.iter().enumerate() {
                                v = rmul[1 + step][letter].apply(&v);
                            }
                            v
                        })
                        .collect();
                    DenseMatrix::from_columns(f, dims[m + 1], &cols)
                })
                .collect();
            lmul.push(maps);
        }
        let labels = words
            .iter()
            .map(|ws| ws.iter().map(|w| self.render_word(w)).collect())
            .collect();
        GradedAlgebraTable::from_left_multiplication(f, dims, lmul, labels)
            .expect("tensor quotients are generated in degree 1")
    }

    fn render_word(&self, w: &[usize]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.iter()
            .map(|&l| self.generators[l].as_str())
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Naive degreewise quotient: `dim V^{⊗m} - dim Σ_i V^{⊗i} ⊗ R ⊗ V^{⊗(m-2-i)}`,
/// assembled directly in the full tensor power. Exponential in `m`; kept as
/// an independent check of [`TensorPresentation::expand_table`].
pub fn naive_quadratic_dims<F: Field>(p: &QuadraticPresentation<F>, cutoff: usize) -> Vec<usize> {
    let f = p.field();
    let n = p.num_generators();
    let mut dims = vec![1];
    for m in 1..=cutoff {
        let total = n.pow(m as u32);
        if m < 2 {
            dims.push(total);
            continue;
        }
        let mut rows = Vec::new();
        for i in 0..=m - 2 {
            let left = n.pow(i as u32);
            let right = n.pow((m - 2 - i) as u32);
            for r in p.relations().vectors() {
                for a in 0..left {
                    for b in 0..right {
                        let mut v = vec![f.zero(); total];
                        for (k, c) in r.iter().enumerate() {
                            if !f.is_zero(c) {
                                v[(a * n * n + k) * right + b] = c.clone();
                            }
                        }
                        rows.push(v);
                    }
                }
            }
        }
        let ideal = SubspaceBasis::from_vectors(f, total, rows);
        dims.push(total - ideal.dim());
    }
    dims
}
