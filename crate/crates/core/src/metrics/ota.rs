use crate::error::{Error, Result};
use crate::transitions::{row_normalize, NormalizedTransitionMatrix, OrbitTransitionMatrix};

use super::similarity::{SimilarityKind, SimilarityMatrix};
use super::{AgreementConfig, OtaScaling};

/// Min-max rescales every cell across the network set. Cells with the same
/// value in every network become 0.
pub fn relative_rescale(
    matrices: &[NormalizedTransitionMatrix],
) -> Result<Vec<NormalizedTransitionMatrix>> {
    if matrices.len() < 2 {
        return Err(Error::TooFewNetworks {
            needed: 2,
            got: matrices.len(),
        });
    }
    let size = matrices[0].size();
    if matrices.iter().any(|m| m.size() != size) {
        return Err(Error::DimensionMismatch(
            "transition matrices over different orbit sets".into(),
        ));
    }
    let cells = size.orbit_count() * size.orbit_count();
    let mut out: Vec<Vec<f64>> = vec![vec![0.0; cells]; matrices.len()];
    for c in 0..cells {
        let column = matrices.iter().map(|m| m.values()[c]);
        let min = column.clone().fold(f64::INFINITY, f64::min);
        let max = column.fold(f64::NEG_INFINITY, f64::max);
        if max > min {
            for (dst, m) in out.iter_mut().zip(matrices) {
                dst[c] = (m.values()[c] - min) / (max - min);
            }
        }
    }
    out.into_iter()
        .map(|values| NormalizedTransitionMatrix::from_values(size, values))
        .collect()
}

/// Orbit-transition agreement `scale * sum_{a,b} (1 - |m1(a,b) - m2(a,b)|)`.
pub fn ota_pair(
    m1: &NormalizedTransitionMatrix,
    m2: &NormalizedTransitionMatrix,
    scaling: OtaScaling,
) -> Result<f64> {
    if m1.size() != m2.size() {
        return Err(Error::DimensionMismatch(format!(
            "{} vs {} orbits",
            m1.orbit_count(),
            m2.orbit_count()
        )));
    }
    let sum: f64 = m1
        .values()
        .iter()
        .zip(m2.values())
        .map(|(a, b)| 1.0 - (a - b).abs())
        .sum();
    let orbits = m1.orbit_count() as f64;
    Ok(match scaling {
        OtaScaling::PaperExact => sum / orbits,
        OtaScaling::Normalized => sum / (orbits * orbits),
    })
}

/// Row-normalises each network, optionally rescales across the set, and
/// evaluates OTA on every pair.
pub fn ota_matrix(
    names: Vec<String>,
    networks: &[OrbitTransitionMatrix],
    cfg: &AgreementConfig,
) -> Result<SimilarityMatrix> {
    if names.len() != networks.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} names for {} networks",
            names.len(),
            networks.len()
        )));
    }
    if networks.len() < 2 {
        return Err(Error::TooFewNetworks {
            needed: 2,
            got: networks.len(),
        });
    }
    let normalized: Vec<_> = networks.iter().map(row_normalize).collect();
    let prepared = if cfg.use_relative_rescale {
        relative_rescale(&normalized)?
    } else {
        normalized
    };
    SimilarityMatrix::from_pairs(names, SimilarityKind::Ota, |i, j| {
        ota_pair(&prepared[i], &prepared[j], cfg.ota_scaling)
    })
}
