//! Presentation and point-configuration files. The formats are described in
//! `docs/formats.md`.

use std::path::Path;

use quadkit::exactlin::{Field, FieldSpec};
use quadkit::quadalg::Terms;
use serde::Deserialize;

use crate::error::CliError;

/// An integer, or a rational written as `"p/q"` (or `"p"`).
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Coefficient {
    Int(i64),
    Text(String),
}

impl Coefficient {
    pub fn to_elem<F: Field>(&self, field: &F) -> Result<F::Elem, String> {
        let (num, den) = match self {
            Coefficient::Int(v) => (*v, 1),
            Coefficient::Text(s) => {
                let s = s.trim();
                let (a, b) = s.split_once('/').unwrap_or((s, "1"));
                let num = a.trim().parse::<i64>().map_err(|_| format!("bad coefficient `{s}`"))?;
                let den = b.trim().parse::<i64>().map_err(|_| format!("bad coefficient `{s}`"))?;
                (num, den)
            }
        };
        if den == 0 {
            return Err("zero denominator".into());
        }
        if field.is_zero(&field.from_i64(den)) {
            return Err(format!("denominator {den} vanishes in the field"));
        }
        Ok(field.from_ratio(num, den))
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationFile {
    #[serde(default)]
    pub schema: Option<String>,
    #[serde(default)]
    pub field: Option<String>,
    pub generators: Vec<String>,
    #[serde(default)]
    pub commutative: bool,
    /// Each relation is a list of `[word, coefficient]` terms, a word being
    /// a list of generator names.
    pub relations: Vec<Vec<(Vec<String>, Coefficient)>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointsFile {
    #[serde(default)]
    pub schema: Option<String>,
    #[serde(default)]
    pub field: Option<String>,
    pub ambient_dim: usize,
    pub points: Vec<Vec<Coefficient>>,
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    serde_json::from_str(&text).map_err(|e| CliError::Parse {
        path: path.display().to_string(),
        line: e.line(),
        column: e.column(),
        message: {
            let full = e.to_string();
            let suffix = format!(" at line {} column {}", e.line(), e.column());
            full.strip_suffix(&suffix).unwrap_or(&full).to_string()
        },
    })
}

pub fn read_presentation(path: &Path) -> Result<PresentationFile, CliError> {
    read_json(path)
}

pub fn read_points(path: &Path) -> Result<PointsFile, CliError> {
    read_json(path)
}

pub fn field_spec(file: Option<&str>) -> Result<Option<FieldSpec>, CliError> {
    file.map(|s| s.parse::<FieldSpec>().map_err(CliError::from)).transpose()
}

impl PresentationFile {
    pub fn terms<F: Field>(&self, field: &F) -> Result<Vec<Terms<F::Elem>>, CliError> {
        let invalid = |m: String| CliError::from(quadkit::Error::InvalidPresentation(m));
        let mut names = std::collections::HashSet::new();
        if let Some(dup) = self.generators.iter().find(|g| !names.insert(g.as_str())) {
            return Err(invalid(format!("generator `{dup}` listed twice")));
        }
        self.relations
            .iter()
            .enumerate()
            .map(|(r, terms)| {
                let degree = terms.first().map_or(0, |t| t.0.len());
                terms
                    .iter()
                    .map(|(word, c)| {
                        if word.len() != degree {
                            return Err(invalid(format!("relation {r} is not homogeneous")));
                        }
                        let letters = word
                            .iter()
                            .map(|w| {
                                self.generators
                                    .iter()
                                    .position(|g| g == w)
                                    .ok_or_else(|| invalid(format!("relation {r}: unknown generator `{w}`")))
                            })
                            .collect::<Result<Vec<_>, _>>()?;
                        let c = c.to_elem(field).map_err(|m| invalid(format!("relation {r}: {m}")))?;
                        Ok((letters, c))
                    })
                    .collect()
            })
            .collect()
    }
}

impl PointsFile {
    pub fn coordinates<F: Field>(&self, field: &F) -> Result<Vec<Vec<F::Elem>>, CliError> {
        self.points
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .map(|c| {
                        c.to_elem(field).map_err(|m| {
                            CliError::from(quadkit::Error::InvalidPoints(format!("point {}: {m}", i + 1)))
                        })
                    })
                    .collect()
            })
            .collect()
    }
}
