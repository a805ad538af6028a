//! Orbit-transition matrices between consecutive snapshots.
//!
//! Every node set that induces a connected graphlet in snapshot `i` is looked
//! up again in snapshot `i + 1`. If it is still connected, each member node
//! records a transition from its old orbit to its new one. Otherwise each
//! member records a dissolution of its old orbit, kept outside the matrix.
//! Sets connected only in the later snapshot have no source orbit and are
//! not counted.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::census::{
    classification_table, for_each_rooted_subgraph, induced_mask, GraphletSize, OrbitId,
};
use crate::error::{Error, Result};
use crate::graph_core::{NodeId, SnapshotSeries, StaticGraph};

/// Raw orbit-transition counts `tr(a, b)` plus dissolution diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitTransitionMatrix {
    size: GraphletSize,
    counts: Vec<u64>,
    dissolved: Vec<u64>,
    pairs_processed: usize,
}

impl OrbitTransitionMatrix {
    pub fn zeros(size: GraphletSize) -> Self {
        let m = size.orbit_count();
        OrbitTransitionMatrix {
            size,
            counts: vec![0; m * m],
            dissolved: vec![0; m],
            pairs_processed: 0,
        }
    }

    /// Rebuilds a matrix from stored counts (row-major `m x m`).
    pub fn from_parts(
        size: GraphletSize,
        counts: Vec<u64>,
        dissolved: Vec<u64>,
        pairs_processed: usize,
    ) -> Result<Self> {
        let m = size.orbit_count();
        if counts.len() != m * m || dissolved.len() != m {
            return Err(Error::DimensionMismatch(format!(
                "expected {m}x{m} counts and {m} dissolved entries, got {} and {}",
                counts.len(),
                dissolved.len()
            )));
        }
        Ok(OrbitTransitionMatrix {
            size,
            counts,
            dissolved,
            pairs_processed,
        })
    }

    pub fn size(&self) -> GraphletSize {
        self.size
    }

    pub fn orbit_count(&self) -> usize {
        self.size.orbit_count()
    }

    pub fn get(&self, from: OrbitId, to: OrbitId) -> u64 {
        self.counts[from.slot() * self.orbit_count() + to.slot()]
    }

    pub fn row(&self, from: OrbitId) -> &[u64] {
        let m = self.orbit_count();
        &self.counts[from.slot() * m..(from.slot() + 1) * m]
    }

    /// Row-major counts.
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn dissolved(&self, from: OrbitId) -> u64 {
        self.dissolved[from.slot()]
    }

    pub fn dissolved_counts(&self) -> &[u64] {
        &self.dissolved
    }

    pub fn pairs_processed(&self) -> usize {
        self.pairs_processed
    }

    /// Node-level transitions recorded, dissolutions included.
    pub fn total_node_transitions(&self) -> u64 {
        self.counts.iter().sum::<u64>() + self.dissolved.iter().sum::<u64>()
    }

    /// Adds `other` into `self`. Both must use the same graphlet size.
    pub fn merge(mut self, other: &OrbitTransitionMatrix) -> Self {
        assert_eq!(
            self.size, other.size,
            "merging transition matrices of different sizes"
        );
        self.counts
            .iter_mut()
            .zip(&other.counts)
            .for_each(|(a, b)| *a += b);
        self.dissolved
            .iter_mut()
            .zip(&other.dissolved)
            .for_each(|(a, b)| *a += b);
        self.pairs_processed += other.pairs_processed;
        self
    }
}

/// Transitions from `from` to `to` for one snapshot pair.
pub fn enumerate_transitions(
    from: &StaticGraph,
    to: &StaticGraph,
    size: GraphletSize,
) -> Result<OrbitTransitionMatrix> {
    if from.node_count() != to.node_count() {
        return Err(Error::UniverseMismatch(from.node_count(), to.node_count()));
    }
    let table = classification_table(size);
    let m = size.orbit_count();
    let mut result = (0..from.node_count() as NodeId)
        .into_par_iter()
        .fold(
            || OrbitTransitionMatrix::zeros(size),
            |mut acc, root| {
                for_each_rooted_subgraph(from, size, root, &mut |nodes: &[NodeId], mask| {
                    let source = table.get(mask).expect("enumerated sets are connected");
                    match table.get(induced_mask(to, size, nodes)) {
                        Some(target) => {
                            for p in 0..nodes.len() {
                                acc.counts[source.orbit_slot(p) * m + target.orbit_slot(p)] += 1;
                            }
                        }
                        None => {
                            for p in 0..nodes.len() {
                                acc.dissolved[source.orbit_slot(p)] += 1;
                            }
                        }
                    }
                });
                acc
            },
        )
        .reduce(|| OrbitTransitionMatrix::zeros(size), |a, b| a.merge(&b));
    result.pairs_processed = 1;
    Ok(result)
}

/// Sum of the transition matrices of all consecutive snapshot pairs.
pub fn accumulate_series(
    series: &SnapshotSeries,
    size: GraphletSize,
) -> Result<OrbitTransitionMatrix> {
    if series.len() < 2 {
        return Err(Error::TooFewSnapshots(series.len()));
    }
    let pairs: Vec<OrbitTransitionMatrix> = series
        .snapshots()
        .par_windows(2)
        .map(|w| enumerate_transitions(&w[0], &w[1], size))
        .collect::<Result<_>>()?;
    Ok(pairs
        .iter()
        .fold(OrbitTransitionMatrix::zeros(size), |acc, t| acc.merge(t)))
}

/// Row-normalised transition frequencies (or any `m x m` matrix of values
/// in `[0, 1]` derived from them).
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedTransitionMatrix {
    size: GraphletSize,
    values: Vec<f64>,
}

impl NormalizedTransitionMatrix {
    pub fn from_values(size: GraphletSize, values: Vec<f64>) -> Result<Self> {
        let m = size.orbit_count();
        if values.len() != m * m {
            return Err(Error::DimensionMismatch(format!(
                "expected {} values, got {}",
                m * m,
                values.len()
            )));
        }
        Ok(NormalizedTransitionMatrix { size, values })
    }

    pub fn size(&self) -> GraphletSize {
        self.size
    }

    pub fn orbit_count(&self) -> usize {
        self.size.orbit_count()
    }

    pub fn get(&self, from: OrbitId, to: OrbitId) -> f64 {
        self.values[from.slot() * self.orbit_count() + to.slot()]
    }

    pub fn row(&self, from: OrbitId) -> &[f64] {
        let m = self.orbit_count();
        &self.values[from.slot() * m..(from.slot() + 1) * m]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

/// `ntr(a, b) = tr(a, b) / sum_c tr(a, c)`. Rows with no transitions stay
/// zero; dissolutions are not part of the denominator.
pub fn row_normalize(t: &OrbitTransitionMatrix) -> NormalizedTransitionMatrix {
    let m = t.orbit_count();
    let mut values = vec![0.0; m * m];
    for (a, row) in t.counts.chunks(m).enumerate() {
        let total: u64 = row.iter().sum();
        if total == 0 {
            continue;
        }
        for (b, &c) in row.iter().enumerate() {
            values[a * m + b] = c as f64 / total as f64;
        }
    }
    NormalizedTransitionMatrix {
        size: t.size,
        values,
    }
}

/// Three-level label of a transition frequency.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TransitionLevel {
    /// `[0, 1/3]`
    Rare,
    /// `(1/3, 2/3]`
    Common,
    /// `(2/3, 1]`
    Frequent,
}

impl TransitionLevel {
    pub fn of(value: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&value) {
            return Err(Error::OutOfUnitRange(value));
        }
        Ok(if value <= 1.0 / 3.0 {
            TransitionLevel::Rare
        } else if value <= 2.0 / 3.0 {
            TransitionLevel::Common
        } else {
            TransitionLevel::Frequent
        })
    }

    pub fn as_str(self) -> &'static str {
        match self {
            TransitionLevel::Rare => "rare",
            TransitionLevel::Common => "common",
            TransitionLevel::Frequent => "frequent",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionFingerprint {
    size: GraphletSize,
    levels: Vec<TransitionLevel>,
}

impl TransitionFingerprint {
    pub fn get(&self, from: OrbitId, to: OrbitId) -> TransitionLevel {
        self.levels[from.slot() * self.size.orbit_count() + to.slot()]
    }

    pub fn levels(&self) -> &[TransitionLevel] {
        &self.levels
    }

    pub fn size(&self) -> GraphletSize {
        self.size
    }
}

pub fn discretize(nt: &NormalizedTransitionMatrix) -> Result<TransitionFingerprint> {
    let levels = nt
        .values
        .iter()
        .map(|&v| TransitionLevel::of(v))
        .collect::<Result<_>>()?;
    Ok(TransitionFingerprint {
        size: nt.size,
        levels,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_core::{SnapshotMode, SnapshotPolicy};
    use itertools::Itertools;

    fn orbit(size: GraphletSize, i: u8) -> OrbitId {
        OrbitId::new(size, i).unwrap()
    }

    #[test]
    fn triangle_breaks_into_chain() {
        let tri = StaticGraph::from_edges(3, [(0, 1), (1, 2), (0, 2)]);
        let chain = StaticGraph::from_edges(3, [(0, 1), (1, 2)]);
        let t = enumerate_transitions(&tri, &chain, GraphletSize::Three).unwrap();
        let k3 = GraphletSize::Three;
        assert_eq!(t.get(orbit(k3, 3), orbit(k3, 2)), 1);
        assert_eq!(t.get(orbit(k3, 3), orbit(k3, 1)), 2);
        assert_eq!(t.total_node_transitions(), 3);
    }

    #[test]
    fn unchanged_clique() {
        let k4 = StaticGraph::from_edges(4, (0..4).tuple_combinations());
        let t = enumerate_transitions(&k4, &k4, GraphletSize::Four).unwrap();
        let o11 = orbit(GraphletSize::Four, 11);
        assert_eq!(t.get(o11, o11), 4);
        assert_eq!(t.counts().iter().sum::<u64>(), 4);

        let policy = SnapshotPolicy::new(SnapshotMode::ActiveEdge, 1, 3).unwrap();
        let series =
            SnapshotSeries::from_snapshots(vec![k4.clone(), k4.clone(), k4], policy).unwrap();
        let acc = accumulate_series(&series, GraphletSize::Four).unwrap();
        assert_eq!(acc.get(o11, o11), 8);
        assert_eq!(acc.pairs_processed(), 2);
    }

    #[test]
    fn dissolution_is_tracked_separately() {
        let path = StaticGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]);
        let broken = StaticGraph::from_edges(4, [(0, 1), (2, 3)]);
        let t = enumerate_transitions(&path, &broken, GraphletSize::Four).unwrap();
        assert_eq!(t.counts().iter().sum::<u64>(), 0);
        assert_eq!(t.dissolved(orbit(GraphletSize::Four, 3)), 2);
        assert_eq!(t.dissolved(orbit(GraphletSize::Four, 4)), 2);
        // births are not counted
        let back = enumerate_transitions(&broken, &path, GraphletSize::Four).unwrap();
        assert_eq!(back.total_node_transitions(), 0);
    }

    #[test]
    fn mismatched_universe() {
        let a = StaticGraph::empty(3);
        let b = StaticGraph::empty(4);
        assert_eq!(
            enumerate_transitions(&a, &b, GraphletSize::Three),
            Err(Error::UniverseMismatch(3, 4))
        );
    }

    #[test]
    fn too_few_snapshots() {
        let policy = SnapshotPolicy::new(SnapshotMode::ActiveEdge, 1, 1).unwrap();
        let series = SnapshotSeries::from_snapshots(vec![StaticGraph::empty(3)], policy).unwrap();
        assert_eq!(
            accumulate_series(&series, GraphletSize::Four),
            Err(Error::TooFewSnapshots(1))
        );
    }

    #[test]
    fn normalize_rows() {
        let m = 11;
        let mut counts = vec![0; m * m];
        counts[0] = 2;
        counts[1] = 1;
        counts[2] = 1;
        let t =
            OrbitTransitionMatrix::from_parts(GraphletSize::Four, counts, vec![5; m], 1).unwrap();
        let nt = row_normalize(&t);
        assert_eq!(&nt.values()[..4], &[0.5, 0.25, 0.25, 0.0]);
        assert!(nt.values()[m..].iter().all(|&v| v == 0.0));
    }

    #[test]
    fn discretize_boundaries() {
        assert_eq!(
            TransitionLevel::of(1.0 / 3.0).unwrap(),
            TransitionLevel::Rare
        );
        assert_eq!(TransitionLevel::of(0.0).unwrap(), TransitionLevel::Rare);
        assert_eq!(TransitionLevel::of(0.5).unwrap(), TransitionLevel::Common);
        assert_eq!(
            TransitionLevel::of(2.0 / 3.0).unwrap(),
            TransitionLevel::Common
        );
        assert_eq!(TransitionLevel::of(1.0).unwrap(), TransitionLevel::Frequent);
        assert!(TransitionLevel::of(1.0001).is_err());
        assert!(TransitionLevel::of(-0.1).is_err());
        assert!(TransitionLevel::of(f64::NAN).is_err());
    }
}
