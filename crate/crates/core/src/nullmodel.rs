//! Degree-preserving randomisation and ensemble graphlet frequencies.

use std::collections::HashSet;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::census::{graphlet_class_frequencies, GraphletSize};
use crate::error::{Error, Result};
use crate::graph_core::{NodeId, StaticGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RandomizationConfig {
    pub replicates: usize,
    /// Attempted double-edge swaps per edge.
    pub swaps_per_edge: usize,
    pub seed: u64,
}

impl Default for RandomizationConfig {
    fn default() -> Self {
        RandomizationConfig {
            replicates: 100,
            swaps_per_edge: 10,
            seed: 0,
        }
    }
}

impl RandomizationConfig {
    pub fn validate(&self) -> Result<()> {
        if self.replicates == 0 {
            return Err(Error::InvalidConfig("replicates must be >= 1".into()));
        }
        if self.swaps_per_edge == 0 {
            return Err(Error::InvalidConfig("swaps per edge must be >= 1".into()));
        }
        Ok(())
    }
}

/// RNG for replicate `index`: the base seed selects the key and the
/// replicate index selects an independent ChaCha stream.
pub fn replicate_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

#[inline]
fn ordered(a: NodeId, b: NodeId) -> (NodeId, NodeId) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Performs `swaps_per_edge * |E|` attempted double-edge swaps
/// `(a,b),(c,d) -> (a,d),(c,b)`. Swaps that would create a self-loop or a
/// duplicate edge are skipped, so the degree sequence is preserved and the
/// result stays simple.
pub fn degree_preserving_randomize<R: Rng>(
    g: &StaticGraph,
    swaps_per_edge: usize,
    rng: &mut R,
) -> StaticGraph {
    let mut edges: Vec<(NodeId, NodeId)> = g.edges().collect();
    let m = edges.len();
    if m < 2 {
        return g.clone();
    }
    let mut present: HashSet<(NodeId, NodeId)> = edges.iter().copied().collect();
    for _ in 0..swaps_per_edge * m {
        let i = rng.random_range(0..m);
        let j = rng.random_range(0..m);
        if i == j {
            continue;
        }
        let (a, b) = edges[i];
        let (mut c, mut d) = edges[j];
        if rng.random::<bool>() {
            std::mem::swap(&mut c, &mut d);
        }
        if a == d || c == b {
            continue;
        }
        let (e1, e2) = (ordered(a, d), ordered(c, b));
        if present.contains(&e1) || present.contains(&e2) {
            continue;
        }
        present.remove(&edges[i]);
        present.remove(&edges[j]);
        present.insert(e1);
        present.insert(e2);
        edges[i] = e1;
        edges[j] = e2;
    }
    StaticGraph::from_edges(g.node_count(), edges)
}

/// The randomised replicates of `g`, in replicate order.
pub fn generate_replicates(g: &StaticGraph, cfg: &RandomizationConfig) -> Result<Vec<StaticGraph>> {
    cfg.validate()?;
    Ok((0..cfg.replicates as u64)
        .into_par_iter()
        .map(|r| {
            degree_preserving_randomize(g, cfg.swaps_per_edge, &mut replicate_rng(cfg.seed, r))
        })
        .collect())
}

/// Class frequencies of every replicate and their mean.
#[derive(Debug, Clone, PartialEq)]
pub struct EnsembleFrequencies {
    per_replicate: Vec<Vec<u64>>,
    mean: Vec<f64>,
}

impl EnsembleFrequencies {
    pub fn from_replicates(per_replicate: Vec<Vec<u64>>) -> Self {
        let classes = per_replicate.first().map_or(0, Vec::len);
        let mut sum = vec![0u64; classes];
        for counts in &per_replicate {
            for (s, c) in sum.iter_mut().zip(counts) {
                *s += c;
            }
        }
        let r = per_replicate.len() as f64;
        let mean = sum.into_iter().map(|s| s as f64 / r).collect();
        EnsembleFrequencies {
            per_replicate,
            mean,
        }
    }

    pub fn per_replicate(&self) -> &[Vec<u64>] {
        &self.per_replicate
    }

    /// Mean class frequency, indexed by class slot.
    pub fn mean(&self) -> &[f64] {
        &self.mean
    }
}

pub fn ensemble_frequencies(
    g: &StaticGraph,
    cfg: &RandomizationConfig,
    size: GraphletSize,
) -> Result<EnsembleFrequencies> {
    cfg.validate()?;
    let per_replicate: Vec<Vec<u64>> = (0..cfg.replicates as u64)
        .into_par_iter()
        .map(|r| {
            let replica =
                degree_preserving_randomize(g, cfg.swaps_per_edge, &mut replicate_rng(cfg.seed, r));
            graphlet_class_frequencies(&replica, size)
        })
        .collect();
    Ok(EnsembleFrequencies::from_replicates(per_replicate))
}
