use crate::census::{graphlet_class_frequencies, GraphletSize};
use crate::error::{Error, Result};
use crate::graph_core::StaticGraph;
use crate::nullmodel::EnsembleFrequencies;

use super::similarity::{SimilarityKind, SimilarityMatrix};

/// Over/under-representation scores of each graphlet class against a
/// randomised ensemble.
#[derive(Debug, Clone, PartialEq)]
pub struct MotifFingerprint {
    raw: Vec<f64>,
    normalized: Vec<f64>,
}

impl MotifFingerprint {
    /// `delta_i = (real_i - mean_i) / (real_i + mean_i)` with `0/0 = 0`,
    /// then scaled to unit Euclidean norm unless every score is zero.
    pub fn from_counts(real: &[u64], ensemble_mean: &[f64]) -> Result<Self> {
        if real.len() != ensemble_mean.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} real class counts vs {} ensemble means",
                real.len(),
                ensemble_mean.len()
            )));
        }
        let raw: Vec<f64> = real
            .iter()
            .zip(ensemble_mean)
            .map(|(&r, &e)| {
                let r = r as f64;
                if r + e == 0.0 {
                    0.0
                } else {
                    (r - e) / (r + e)
                }
            })
            .collect();
        let norm = raw.iter().map(|d| d * d).sum::<f64>().sqrt();
        let normalized = if norm > 0.0 {
            raw.iter().map(|d| d / norm).collect()
        } else {
            raw.clone()
        };
        Ok(MotifFingerprint { raw, normalized })
    }

    /// Scores before normalisation, each in `[-1, 1]`.
    pub fn raw(&self) -> &[f64] {
        &self.raw
    }

    pub fn scores(&self) -> &[f64] {
        &self.normalized
    }
}

/// Motif fingerprint of `real` over 4-node graphlet classes.
pub fn motif_scores(
    real: &StaticGraph,
    ensemble: &EnsembleFrequencies,
) -> Result<MotifFingerprint> {
    let counts = graphlet_class_frequencies(real, GraphletSize::Four);
    MotifFingerprint::from_counts(&counts, ensemble.mean())
}

pub fn fingerprint_distance(f1: &MotifFingerprint, f2: &MotifFingerprint) -> Result<f64> {
    if f1.normalized.len() != f2.normalized.len() {
        return Err(Error::DimensionMismatch(
            "fingerprints over different class sets".into(),
        ));
    }
    Ok(f1
        .normalized
        .iter()
        .zip(&f2.normalized)
        .map(|(a, b)| (a - b) * (a - b))
        .sum::<f64>()
        .sqrt())
}

pub fn motif_distance_matrix(
    names: Vec<String>,
    fingerprints: &[MotifFingerprint],
) -> Result<SimilarityMatrix> {
    if names.len() != fingerprints.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} names for {} fingerprints",
            names.len(),
            fingerprints.len()
        )));
    }
    SimilarityMatrix::from_pairs(names, SimilarityKind::MotifDistance, |i, j| {
        fingerprint_distance(&fingerprints[i], &fingerprints[j])
    })
}
