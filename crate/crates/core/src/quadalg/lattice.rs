use std::collections::HashMap;

use serde::Serialize;

use crate::exactlin::{Field, SubspaceBasis};

use super::presentation::QuadraticPresentation;

/// The generated lattice is abandoned past this many elements.
pub const MAX_LATTICE_ELEMENTS: usize = 10_000;

/// `V^{⊗n}` must have at most this dimension for the check to run.
pub const MAX_TENSOR_DIM: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum DistributivityVerdict {
    Distributive { elements: usize },
    /// Dimensions of `x ∧ (y ∨ z)` and `(x ∧ y) ∨ (x ∧ z)` for a failing triple.
    NotDistributive { elements: usize, lhs_dim: usize, rhs_dim: usize },
    Abstain { reason: String },
}

/// Embeds `R` in position `i` of `V^{⊗n}`: `V^{⊗i} ⊗ R ⊗ V^{⊗(n-i-2)}`.
fn embedded_relations<F: Field>(p: &QuadraticPresentation<F>, n: usize, i: usize) -> SubspaceBasis<F> {
    let f = p.field();
    let v = p.num_generators();
    let total = v.pow(n as u32);
    let left = v.pow(i as u32);
    let right = v.pow((n - i - 2) as u32);
    let mut rows = Vec::new();
    for r in p.relations().vectors() {
        for a in 0..left {
            for b in 0..right {
                let mut row = vec![f.zero(); total];
                for (k, c) in r.iter().enumerate() {
                    if !f.is_zero(c) {
                        row[(a * v * v + k) * right + b] = c.clone();
                    }
                }
                rows.push(row);
            }
        }
    }
    SubspaceBasis::from_vectors(f, total, rows)
}

type Key<E> = (Vec<usize>, Vec<E>);

fn key<F: Field>(s: &SubspaceBasis<F>) -> Key<F::Elem> {
    (s.pivots().to_vec(), s.basis().entries().to_vec())
}

/// Closes the `n - 1` embedded copies of `R` in `V^{⊗n}` under sum and
/// intersection and verifies `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)` on all
/// triples. Subspaces are canonical, so lattice elements are compared by
/// their echelon bases.
pub fn distributivity_check<F: Field>(p: &QuadraticPresentation<F>, n: usize) -> DistributivityVerdict {
    if n < 3 {
        return DistributivityVerdict::Abstain {
            reason: "degree must be at least 3".into(),
        };
    }
    let total = (p.num_generators() as u128).pow(n as u32);
    if total > MAX_TENSOR_DIM as u128 {
        return DistributivityVerdict::Abstain {
            reason: format!("tensor power of dimension {total} exceeds {MAX_TENSOR_DIM}"),
        };
    }
    let mut elements: Vec<SubspaceBasis<F>> = Vec::new();
    let mut index: HashMap<Key<F::Elem>, usize> = HashMap::new();
    let insert = |s: SubspaceBasis<F>,
                  elements: &mut Vec<SubspaceBasis<F>>,
                  index: &mut HashMap<Key<F::Elem>, usize>|
     -> usize {
        let k = key(&s);
        if let Some(&i) = index.get(&k) {
            return i;
        }
        elements.push(s);
        index.insert(k, elements.len() - 1);
        elements.len() - 1
    };
    for i in 0..n - 1 {
        insert(embedded_relations(p, n, i), &mut elements, &mut index);
    }
    // meet/join tables filled as the closure grows
    let mut meet: HashMap<(usize, usize), usize> = HashMap::new();
    let mut join: HashMap<(usize, usize), usize> = HashMap::new();
    let mut done = 0;
    while done < elements.len() {
        let x = done;
        for y in 0..=x {
            let s = elements[x].sum(&elements[y]).expect("same ambient space");
            let m = elements[x].intersect(&elements[y]).expect("same ambient space");
            let js = insert(s, &mut elements, &mut index);
            let ms = insert(m, &mut elements, &mut index);
            join.insert((x, y), js);
            join.insert((y, x), js);
            meet.insert((x, y), ms);
            meet.insert((y, x), ms);
            if elements.len() > MAX_LATTICE_ELEMENTS {
                return DistributivityVerdict::Abstain {
                    reason: format!("lattice exceeds {MAX_LATTICE_ELEMENTS} elements"),
                };
            }
        }
        done += 1;
    }
    let k = elements.len();
    for x in 0..k {
        for y in 0..k {
            for z in 0..k {
                let lhs = meet[&(x, join[&(y, z)])];
                let rhs = join[&(meet[&(x, y)], meet[&(x, z)])];
                if lhs != rhs {
                    return DistributivityVerdict::NotDistributive {
                        elements: k,
                        lhs_dim: elements[lhs].dim(),
                        rhs_dim: elements[rhs].dim(),
                    };
                }
            }
        }
    }
    DistributivityVerdict::Distributive { elements: k }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::PrimeField;

    #[test]
    fn symmetric_and_exterior_are_distributive_in_degree_three() {
        let f = PrimeField::new(32003).unwrap();
        for p in [QuadraticPresentation::symmetric(&f, 2), QuadraticPresentation::exterior(&f, 2)] {
            assert!(matches!(
                distributivity_check(&p, 3),
                DistributivityVerdict::Distributive { .. }
            ));
        }
    }

    #[test]
    fn symmetric_three_variables_degree_four() {
        let f = PrimeField::new(32003).unwrap();
        let p = QuadraticPresentation::symmetric(&f, 3);
        assert!(matches!(
            distributivity_check(&p, 4),
            DistributivityVerdict::Distributive { .. }
        ));
    }

    #[test]
    fn oversized_tensor_power_abstains() {
        let f = PrimeField::new(32003).unwrap();
        let p = QuadraticPresentation::symmetric(&f, 5);
        assert!(matches!(distributivity_check(&p, 6), DistributivityVerdict::Abstain { .. }));
    }
}
