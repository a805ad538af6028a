use std::collections::BTreeSet;

use crate::census::{GddScaling, GraphletDegreeDistribution};
use crate::error::{Error, Result};

use super::similarity::{SimilarityKind, SimilarityMatrix};

/// Per-orbit agreement `1 - sqrt(sum_k (n_G(k) - n_H(k))^2) / sqrt(2)`.
///
/// An orbit untouched in both networks agrees perfectly; untouched in one
/// of them, its distribution is taken as all zeros.
pub fn gda_orbits(
    g: &GraphletDegreeDistribution,
    h: &GraphletDegreeDistribution,
    scaling: GddScaling,
) -> Result<Vec<f64>> {
    if g.size() != h.size() {
        return Err(Error::DimensionMismatch(format!(
            "GDDs over {}-node and {}-node orbits",
            g.size(),
            h.size()
        )));
    }
    Ok(g.size()
        .orbits()
        .map(|orbit| {
            if g.is_untouched(orbit) && h.is_untouched(orbit) {
                return 1.0;
            }
            let ng = g.normalized(orbit, scaling);
            let nh = h.normalized(orbit, scaling);
            let keys: BTreeSet<u64> = ng.keys().chain(nh.keys()).copied().collect();
            let squared: f64 = keys
                .iter()
                .map(|k| {
                    let d = ng.get(k).copied().unwrap_or(0.0) - nh.get(k).copied().unwrap_or(0.0);
                    d * d
                })
                .sum();
            1.0 - squared.sqrt() / std::f64::consts::SQRT_2
        })
        .collect())
}

/// Arithmetic mean of the per-orbit agreements.
pub fn gda_pair(
    g: &GraphletDegreeDistribution,
    h: &GraphletDegreeDistribution,
    scaling: GddScaling,
) -> Result<f64> {
    let per_orbit = gda_orbits(g, h, scaling)?;
    Ok(per_orbit.iter().sum::<f64>() / per_orbit.len() as f64)
}

/// GDA between every pair. Each network may carry several distributions
/// (for example 3- and 4-node orbits); the mean then runs over all of their
/// orbits.
pub fn gda_matrix(
    names: Vec<String>,
    gdds: &[Vec<GraphletDegreeDistribution>],
    scaling: GddScaling,
) -> Result<SimilarityMatrix> {
    if names.len() != gdds.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} names for {} networks",
            names.len(),
            gdds.len()
        )));
    }
    SimilarityMatrix::from_pairs(names, SimilarityKind::Gda, |i, j| {
        if gdds[i].len() != gdds[j].len() {
            return Err(Error::DimensionMismatch(
                "networks carry different orbit sets".into(),
            ));
        }
        let mut all = Vec::new();
        for (g, h) in gdds[i].iter().zip(&gdds[j]) {
            all.extend(gda_orbits(g, h, scaling)?);
        }
        Ok(all.iter().sum::<f64>() / all.len() as f64)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::{compute_gdd, GraphletSize, OrbitFrequencyMatrix};

    fn gdd(rows: Vec<Vec<u64>>) -> GraphletDegreeDistribution {
        compute_gdd(&OrbitFrequencyMatrix::from_rows(GraphletSize::Three, rows).unwrap())
    }

    #[test]
    fn identical_is_one() {
        let g = gdd(vec![vec![1, 2, 0], vec![3, 0, 1], vec![0, 0, 1]]);
        assert_eq!(gda_pair(&g, &g, GddScaling::InverseK).unwrap(), 1.0);
    }

    #[test]
    fn disjoint_unit_masses() {
        // orbit 1: n_G = {1: 1}, n_H = {2: 1}; other orbits untouched in both
        let g = gdd(vec![vec![1, 0, 0]]);
        let h = gdd(vec![vec![2, 0, 0]]);
        let per = gda_orbits(&g, &h, GddScaling::InverseK).unwrap();
        assert!(per[0].abs() < 1e-15);
        assert_eq!(&per[1..], &[1.0, 1.0]);
        assert!((gda_pair(&g, &h, GddScaling::InverseK).unwrap() - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn untouched_in_one_network() {
        let g = gdd(vec![vec![1, 0, 0]]);
        let h = gdd(vec![vec![0, 0, 0]]);
        let per = gda_orbits(&g, &h, GddScaling::Plain).unwrap();
        assert!((per[0] - (1.0 - 1.0 / 2f64.sqrt())).abs() < 1e-15);
    }

    #[test]
    fn mismatched_sizes() {
        let g = gdd(vec![vec![1, 0, 0]]);
        let h = compute_gdd(&OrbitFrequencyMatrix::zeros(GraphletSize::Four, 2));
        assert!(gda_pair(&g, &h, GddScaling::InverseK).is_err());
    }
}
