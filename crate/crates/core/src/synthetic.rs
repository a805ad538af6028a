//! Generators for synthetic temporal networks.
//!
//! Snapshot `i` of a generated network holds the events with timestamp `i`,
//! so a policy with origin 0 and width 1 recovers the intended snapshots.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph_core::{NodeId, StaticGraph, TemporalEdgeList};

/// Erdős–Rényi graph `G(n, p)`.
pub fn gnp(n: usize, p: f64, seed: u64) -> StaticGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n as NodeId {
        for v in (u + 1)..n as NodeId {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    StaticGraph::from_edges(n, edges)
}

/// Disjoint groups of four nodes that tighten over time: each group is a
/// star until its start snapshot, then becomes a paw, a diamond and finally
/// a clique, which it stays. Edges are re-emitted in every snapshot.
/// `noise_edges` random extra edges are added per snapshot.
pub fn densifying_communities(
    communities: usize,
    snapshots: usize,
    noise_edges: usize,
    seed: u64,
) -> TemporalEdgeList {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = communities * 4;
    let latest_start = snapshots.saturating_sub(3).max(1);
    let groups: Vec<([NodeId; 4], usize)> = (0..communities)
        .map(|c| {
            let mut members: [NodeId; 4] = std::array::from_fn(|i| (c * 4 + i) as NodeId);
            members.shuffle(&mut rng);
            (members, rng.random_range(0..latest_start))
        })
        .collect();

    let mut events = Vec::new();
    for s in 0..snapshots {
        let t = s as i64;
        for (m, start) in &groups {
            let stage = s.saturating_sub(*start).min(3);
            let [hub, a, b, c] = *m;
            let mut group_edges = vec![(hub, a), (hub, b), (hub, c)];
            if stage >= 1 {
                group_edges.push((a, b));
            }
            if stage >= 2 {
                group_edges.push((b, c));
            }
            if stage >= 3 {
                group_edges.push((a, c));
            }
            events.extend(group_edges.into_iter().map(|(u, v)| (u, v, t)));
        }
        for _ in 0..noise_edges {
            let u = rng.random_range(0..n as NodeId);
            let v = rng.random_range(0..n as NodeId);
            if u != v {
                events.push((u, v, t));
            }
        }
    }
    TemporalEdgeList::from_ids(n, events)
}

/// Every snapshot is an independent uniformly random set of
/// `edges_per_snapshot` distinct edges on `n` nodes.
pub fn random_churn(
    n: usize,
    snapshots: usize,
    edges_per_snapshot: usize,
    seed: u64,
) -> TemporalEdgeList {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_edges = n * n.saturating_sub(1) / 2;
    let target = edges_per_snapshot.min(max_edges);
    let mut events = Vec::new();
    for s in 0..snapshots {
        let mut chosen = BTreeSet::new();
        while chosen.len() < target {
            let u = rng.random_range(0..n as NodeId);
            let v = rng.random_range(0..n as NodeId);
            if u != v {
                chosen.insert((u.min(v), u.max(v)));
            }
        }
        events.extend(chosen.into_iter().map(|(u, v)| (u, v, s as i64)));
    }
    TemporalEdgeList::from_ids(n, events)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_core::{build_snapshots, SnapshotMode, SnapshotPolicy};

    #[test]
    fn communities_densify() {
        let el = densifying_communities(5, 8, 0, 1);
        let policy = SnapshotPolicy::new(SnapshotMode::ActiveEdge, 1, 8)
            .unwrap()
            .with_origin(0);
        let s = build_snapshots(&el, policy).unwrap();
        let edges: Vec<usize> = s.snapshots().iter().map(StaticGraph::edge_count).collect();
        assert!(edges.windows(2).all(|w| w[0] <= w[1]));
        assert_eq!(edges[7], 30);
    }

    #[test]
    fn churn_has_exact_density() {
        let el = random_churn(20, 4, 25, 2);
        let policy = SnapshotPolicy::new(SnapshotMode::ActiveEdge, 1, 4)
            .unwrap()
            .with_origin(0);
        let s = build_snapshots(&el, policy).unwrap();
        assert!(s.snapshots().iter().all(|g| g.edge_count() == 25));
    }
}
