use std::collections::VecDeque;

use rayon::prelude::*;

use super::graph::{NodeId, StaticGraph};
use super::snapshot::SnapshotSeries;
use crate::error::{Error, Result};

/// Which clustering coefficient to report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ClusteringMode {
    /// Mean of local coefficients over nodes of degree >= 2.
    #[default]
    AverageLocal,
    /// Global transitivity: 3 * triangles / connected triples.
    Transitivity,
}

/// `2|E| / present nodes`. Isolated nodes are not counted.
pub fn average_degree(g: &StaticGraph) -> Result<f64> {
    let present = g.present_count();
    if present == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(2.0 * g.edge_count() as f64 / present as f64)
}

fn sorted_intersection(a: &[NodeId], b: &[NodeId]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

/// Triangles through each node.
pub(crate) fn node_triangles(g: &StaticGraph) -> Vec<u64> {
    (0..g.node_count() as NodeId)
        .into_par_iter()
        .map(|v| {
            let nv = g.neighbors(v);
            let twice: usize = nv
                .iter()
                .map(|&u| sorted_intersection(nv, g.neighbors(u)))
                .sum();
            (twice / 2) as u64
        })
        .collect()
}

/// Clustering coefficient of `g`; 0 when no node has degree >= 2.
pub fn clustering_coefficient(g: &StaticGraph, mode: ClusteringMode) -> f64 {
    let triangles = node_triangles(g);
    match mode {
        ClusteringMode::AverageLocal => {
            let mut sum = 0.0;
            let mut nodes = 0usize;
            for (v, &t) in triangles.iter().enumerate() {
                let d = g.degree(v as NodeId) as u64;
                if d >= 2 {
                    sum += t as f64 / (d * (d - 1) / 2) as f64;
                    nodes += 1;
                }
            }
            if nodes == 0 {
                0.0
            } else {
                sum / nodes as f64
            }
        }
        ClusteringMode::Transitivity => {
            let closed: u64 = triangles.iter().sum();
            let triples: u64 = (0..g.node_count() as NodeId)
                .map(|v| {
                    let d = g.degree(v) as u64;
                    d * d.saturating_sub(1) / 2
                })
                .sum();
            if triples == 0 {
                0.0
            } else {
                closed as f64 / triples as f64
            }
        }
    }
}

fn bfs_distance_sum(
    g: &StaticGraph,
    source: NodeId,
    dist: &mut [u32],
    queue: &mut VecDeque<NodeId>,
) -> (u64, u64) {
    dist.fill(u32::MAX);
    dist[source as usize] = 0;
    queue.clear();
    queue.push_back(source);
    let (mut total, mut reached) = (0u64, 0u64);
    while let Some(v) = queue.pop_front() {
        let dv = dist[v as usize];
        for &w in g.neighbors(v) {
            if dist[w as usize] == u32::MAX {
                dist[w as usize] = dv + 1;
                total += (dv + 1) as u64;
                reached += 1;
                queue.push_back(w);
            }
        }
    }
    (total, reached)
}

/// Mean shortest-path length over ordered pairs `u != v` that are connected.
/// Unreachable pairs are left out of the mean.
pub fn characteristic_path_length(g: &StaticGraph) -> Result<f64> {
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    let n = g.node_count();
    let (total, pairs) = (0..n as NodeId)
        .into_par_iter()
        .filter(|&v| g.is_present(v))
        .map_init(
            || (vec![u32::MAX; n], VecDeque::new()),
            |(dist, queue), v| bfs_distance_sum(g, v, dist, queue),
        )
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    Ok(total as f64 / pairs as f64)
}

/// Present-node count of each snapshot relative to the series maximum.
pub fn relative_size_series(series: &SnapshotSeries) -> Result<Vec<f64>> {
    let counts: Vec<usize> = series
        .snapshots()
        .iter()
        .map(StaticGraph::present_count)
        .collect();
    let max = counts.iter().copied().max().unwrap_or(0);
    if max == 0 {
        return Err(Error::EmptySeries);
    }
    Ok(counts.into_iter().map(|c| c as f64 / max as f64).collect())
}

/// One row of the per-snapshot summary table.
#[derive(Debug, Clone, PartialEq)]
pub struct SnapshotSummary {
    pub snapshot: usize,
    pub nodes: usize,
    pub edges: usize,
    pub avg_degree: Option<f64>,
    pub clustering: f64,
    pub cpl: Option<f64>,
}

impl SnapshotSummary {
    pub fn of(index: usize, g: &StaticGraph, mode: ClusteringMode) -> Self {
        SnapshotSummary {
            snapshot: index,
            nodes: g.present_count(),
            edges: g.edge_count(),
            avg_degree: average_degree(g).ok(),
            clustering: clustering_coefficient(g, mode),
            cpl: characteristic_path_length(g).ok(),
        }
    }

    pub fn series(series: &SnapshotSeries, mode: ClusteringMode) -> Vec<SnapshotSummary> {
        series
            .snapshots()
            .iter()
            .enumerate()
            .map(|(i, g)| SnapshotSummary::of(i, g, mode))
            .collect()
    }
}
