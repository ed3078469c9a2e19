use std::fmt;

use serde::Serialize;

/// Bigraded numbers `β_{i,j} = dim Tor_i(k, M)_j` for `i ≤ hom_cutoff`,
/// `j ≤ int_cutoff`. Cells that would need data past a truncation are `None`
/// ("unknown"), never estimated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    hom_cutoff: usize,
    int_cutoff: usize,
    entries: Vec<Vec<Option<usize>>>,
}

/// Outcome of a diagonal-concentration check on a Betti table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum LinearityVerdict {
    /// Concentrated on `j - shift = i` for every `i ≤ up_to`.
    Linear { up_to: usize, shift: usize },
    /// First nonzero cell off the diagonal, in normalized coordinates.
    NotLinear { i: usize, j: usize },
    /// Some needed cell is unknown.
    Abstain { i: usize, j: usize },
}

impl LinearityVerdict {
    pub fn is_linear(&self) -> bool {
        matches!(self, LinearityVerdict::Linear { .. })
    }
}

impl BettiTable {
    pub fn new(hom_cutoff: usize, int_cutoff: usize) -> Self {
        BettiTable {
            hom_cutoff,
            int_cutoff,
            entries: vec![vec![None; int_cutoff + 1]; hom_cutoff + 1],
        }
    }

    pub fn hom_cutoff(&self) -> usize {
        self.hom_cutoff
    }

    pub fn int_cutoff(&self) -> usize {
        self.int_cutoff
    }

    pub fn get(&self, i: usize, j: usize) -> Option<usize> {
        self.entries.get(i).and_then(|r| r.get(j)).copied().flatten()
    }

    pub fn set(&mut self, i: usize, j: usize, v: usize) {
        self.entries[i][j] = Some(v);
    }

    pub fn is_known(&self, i: usize, j: usize) -> bool {
        self.get(i, j).is_some()
    }

    /// Every cell with `i ≤ hom` and `j ≤ int` is known.
    pub fn is_complete_to(&self, hom: usize, int: usize) -> bool {
        hom <= self.hom_cutoff
            && int <= self.int_cutoff
            && (0..=hom).all(|i| (0..=int).all(|j| self.is_known(i, j)))
    }

    /// Smallest internal degree of a minimal generator.
    pub fn generation_degree(&self) -> Option<usize> {
        (0..=self.int_cutoff).find(|&j| self.get(0, j).is_some_and(|b| b > 0))
    }

    /// Checks `β_{i,j} = 0` for `j - shift ≠ i` and `i ≤ up_to`, where `shift`
    /// is the generation degree (0 for the zero module). Cells with
    /// `j - shift ≤ up_to + 1` must be known; known cells further out are
    /// checked as well.
    pub fn linearity(&self, up_to: usize) -> LinearityVerdict {
        let shift = self.generation_degree().unwrap_or(0);
        for i in 0..=up_to {
            for jn in 0..=self.int_cutoff.saturating_sub(shift).max(up_to + 1) {
                if jn == i {
                    continue;
                }
                match self.get(i, jn + shift) {
                    None if jn <= up_to + 1 => return LinearityVerdict::Abstain { i, j: jn },
                    None | Some(0) => {}
                    Some(_) => return LinearityVerdict::NotLinear { i, j: jn },
                }
            }
        }
        LinearityVerdict::Linear { up_to, shift }
    }

    /// The diagonal `β_{i,i}` as far as it is known.
    pub fn diagonal(&self) -> Vec<Option<usize>> {
        (0..=self.hom_cutoff.min(self.int_cutoff)).map(|i| self.get(i, i)).collect()
    }

    pub fn rows(&self) -> &[Vec<Option<usize>>] {
        &self.entries
    }
}

impl fmt::Display for BettiTable {
    /// Rows are homological degrees, columns internal degrees, `?` unknown.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "i\\j")?;
        for j in 0..=self.int_cutoff {
            write!(f, "{j:>6}")?;
        }
        writeln!(f)?;
        for (i, row) in self.entries.iter().enumerate() {
            write!(f, "{i:>3}")?;
            for cell in row {
                match cell {
                    Some(0) => write!(f, "{:>6}", ".")?,
                    Some(v) => write!(f, "{v:>6}")?,
                    None => write!(f, "{:>6}", "?")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linearity_detects_relation_in_degree_three() {
        let mut b = BettiTable::new(2, 4);
        for i in 0..=2 {
            for j in 0..=4 {
                b.set(i, j, 0);
            }
        }
        b.set(0, 0, 1);
        b.set(1, 3, 1);
        assert_eq!(b.linearity(1), LinearityVerdict::NotLinear { i: 1, j: 3 });
    }

    #[test]
    fn shift_normalizes_generation_degree() {
        let mut b = BettiTable::new(1, 4);
        for i in 0..=1 {
            for j in 0..=4 {
                b.set(i, j, 0);
            }
        }
        b.set(0, 2, 3);
        b.set(1, 3, 2);
        assert_eq!(b.linearity(1), LinearityVerdict::Linear { up_to: 1, shift: 2 });
        assert_eq!(BettiTable::new(1, 1).linearity(1), LinearityVerdict::Abstain { i: 0, j: 1 });
    }
}
