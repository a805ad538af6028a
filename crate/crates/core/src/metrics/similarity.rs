use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SimilarityKind {
    Ota,
    Gda,
    MotifDistance,
}

impl SimilarityKind {
    /// Agreement kinds grow with similarity; the distance kind shrinks.
    pub fn is_agreement(self) -> bool {
        !matches!(self, SimilarityKind::MotifDistance)
    }
}

/// Symmetric network-by-network matrix of agreement or distance values.
#[derive(Debug, Clone, PartialEq)]
pub struct SimilarityMatrix {
    names: Vec<String>,
    values: Vec<f64>,
    kind: SimilarityKind,
}

impl SimilarityMatrix {
    /// Validates shape and symmetry (exact).
    pub fn new(names: Vec<String>, values: Vec<f64>, kind: SimilarityKind) -> Result<Self> {
        let n = names.len();
        if values.len() != n * n {
            return Err(Error::DimensionMismatch(format!(
                "{n} names but {} values",
                values.len()
            )));
        }
        for i in 0..n {
            for j in 0..i {
                if values[i * n + j] != values[j * n + i] {
                    return Err(Error::DimensionMismatch(format!(
                        "matrix not symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(SimilarityMatrix {
            names,
            values,
            kind,
        })
    }

    /// Fills the matrix from a symmetric pair function evaluated on `i <= j`.
    pub(crate) fn from_pairs<F>(
        names: Vec<String>,
        kind: SimilarityKind,
        mut pair: F,
    ) -> Result<Self>
    where
        F: FnMut(usize, usize) -> Result<f64>,
    {
        let n = names.len();
        let mut values = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let v = pair(i, j)?;
                values[i * n + j] = v;
                values[j * n + i] = v;
            }
        }
        Ok(SimilarityMatrix {
            names,
            values,
            kind,
        })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn kind(&self) -> SimilarityKind {
        self.kind
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.len() + j]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Distance used for grouping: `1 - value` for agreement kinds.
    pub fn distance(&self, i: usize, j: usize) -> f64 {
        let v = self.get(i, j);
        if self.kind.is_agreement() {
            1.0 - v
        } else {
            v
        }
    }
}
