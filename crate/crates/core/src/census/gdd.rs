use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::frequencies::OrbitFrequencyMatrix;
use super::types::{GraphletSize, OrbitId};

/// How a graphlet degree distribution is normalised before comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GddScaling {
    /// Scale `d(k)` by `1/k` before dividing by the total.
    #[default]
    InverseK,
    /// Divide `d(k)` by the total directly.
    Plain,
}

/// Per orbit `j`, the number of nodes that touch `j` exactly `k` times.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphletDegreeDistribution {
    size: GraphletSize,
    nodes: usize,
    /// `d^j(k)` for `k >= 1`, indexed by orbit slot.
    counts: Vec<BTreeMap<u64, u64>>,
}

impl GraphletDegreeDistribution {
    pub fn size(&self) -> GraphletSize {
        self.size
    }

    pub fn node_count(&self) -> usize {
        self.nodes
    }

    /// `d^j(k)`, including `k = 0`.
    pub fn count(&self, orbit: OrbitId, k: u64) -> u64 {
        if k == 0 {
            let touched: u64 = self.counts[orbit.slot()].values().sum();
            return self.nodes as u64 - touched;
        }
        self.counts[orbit.slot()].get(&k).copied().unwrap_or(0)
    }

    /// Non-zero entries `k -> d^j(k)` for `k >= 1`.
    pub fn distribution(&self, orbit: OrbitId) -> &BTreeMap<u64, u64> {
        &self.counts[orbit.slot()]
    }

    /// True when no node appears in `orbit`.
    pub fn is_untouched(&self, orbit: OrbitId) -> bool {
        self.counts[orbit.slot()].is_empty()
    }

    /// Normalised distribution `n^j(k)`; empty for untouched orbits.
    pub fn normalized(&self, orbit: OrbitId, scaling: GddScaling) -> BTreeMap<u64, f64> {
        let dist = &self.counts[orbit.slot()];
        let scaled: Vec<(u64, f64)> = dist
            .iter()
            .map(|(&k, &d)| match scaling {
                GddScaling::InverseK => (k, d as f64 / k as f64),
                GddScaling::Plain => (k, d as f64),
            })
            .collect();
        let total: f64 = scaled.iter().map(|(_, s)| s).sum();
        scaled.into_iter().map(|(k, s)| (k, s / total)).collect()
    }
}

pub fn compute_gdd(fr: &OrbitFrequencyMatrix) -> GraphletDegreeDistribution {
    let m = fr.orbit_count();
    let mut counts = vec![BTreeMap::new(); m];
    for row in fr.rows() {
        for (j, &c) in row.iter().enumerate() {
            if c > 0 {
                *counts[j].entry(c).or_insert(0) += 1;
            }
        }
    }
    GraphletDegreeDistribution {
        size: fr.size(),
        nodes: fr.node_count(),
        counts,
    }
}
