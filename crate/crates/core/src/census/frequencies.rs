use rayon::prelude::*;

use crate::graph_core::{NodeId, StaticGraph};

use super::enumerate::for_each_rooted_subgraph;
use super::table::classification_table;
use super::types::{GraphletClass, GraphletSize, OrbitId};

/// Per-node orbit counts: row `v` is the graphlet degree vector of `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitFrequencyMatrix {
    size: GraphletSize,
    nodes: usize,
    counts: Vec<u64>,
}

impl OrbitFrequencyMatrix {
    pub fn zeros(size: GraphletSize, nodes: usize) -> Self {
        OrbitFrequencyMatrix {
            size,
            nodes,
            counts: vec![0; nodes * size.orbit_count()],
        }
    }

    /// Builds a matrix from row-major counts.
    pub fn from_rows(size: GraphletSize, rows: Vec<Vec<u64>>) -> Option<Self> {
        let m = size.orbit_count();
        if rows.iter().any(|r| r.len() != m) {
            return None;
        }
        Some(OrbitFrequencyMatrix {
            size,
            nodes: rows.len(),
            counts: rows.into_iter().flatten().collect(),
        })
    }

    pub fn size(&self) -> GraphletSize {
        self.size
    }

    pub fn node_count(&self) -> usize {
        self.nodes
    }

    pub fn orbit_count(&self) -> usize {
        self.size.orbit_count()
    }

    #[inline]
    pub fn get(&self, v: NodeId, orbit: OrbitId) -> u64 {
        self.counts[v as usize * self.orbit_count() + orbit.slot()]
    }

    /// Graphlet degree vector of `v`, indexed by orbit slot.
    pub fn row(&self, v: NodeId) -> &[u64] {
        let m = self.orbit_count();
        &self.counts[v as usize * m..(v as usize + 1) * m]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u64]> {
        self.counts.chunks(self.orbit_count().max(1))
    }

    pub fn column_sum(&self, orbit: OrbitId) -> u64 {
        self.rows().map(|r| r[orbit.slot()]).sum()
    }

    fn add(&mut self, other: &OrbitFrequencyMatrix) {
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
    }
}

/// Orbit counts and class occurrence counts from a single census pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub orbits: OrbitFrequencyMatrix,
    /// Occurrences per graphlet class, indexed by class slot.
    pub classes: Vec<u64>,
}

impl Census {
    fn zeros(size: GraphletSize, nodes: usize) -> Self {
        Census {
            orbits: OrbitFrequencyMatrix::zeros(size, nodes),
            classes: vec![0; size.class_count()],
        }
    }

    fn merge(mut self, other: Census) -> Census {
        self.orbits.add(&other.orbits);
        for (a, b) in self.classes.iter_mut().zip(other.classes) {
            *a += b;
        }
        self
    }

    pub fn class_count(&self, class: GraphletClass) -> u64 {
        self.classes[class.slot()]
    }

    pub fn total_occurrences(&self) -> u64 {
        self.classes.iter().sum()
    }
}

/// Enumerates every connected induced `k`-node subgraph of `g` once,
/// counting class occurrences and per-node orbit appearances.
///
/// Roots are distributed over the rayon pool and partial counts are summed,
/// so results do not depend on the number of workers.
pub fn census(g: &StaticGraph, size: GraphletSize) -> Census {
    let table = classification_table(size);
    let n = g.node_count();
    let m = size.orbit_count();
    (0..n as NodeId)
        .into_par_iter()
        .fold(
            || Census::zeros(size, n),
            |mut acc, root| {
                for_each_rooted_subgraph(g, size, root, &mut |nodes: &[NodeId], mask| {
                    let entry = table.get(mask).expect("enumerated sets are connected");
                    acc.classes[entry.class.slot()] += 1;
                    for (p, &v) in nodes.iter().enumerate() {
                        acc.orbits.counts[v as usize * m + entry.orbit_slot(p)] += 1;
                    }
                });
                acc
            },
        )
        .reduce(|| Census::zeros(size, n), Census::merge)
}

pub fn compute_orbit_frequencies(g: &StaticGraph, size: GraphletSize) -> OrbitFrequencyMatrix {
    census(g, size).orbits
}

/// Occurrence count per graphlet class, indexed by class slot.
pub fn graphlet_class_frequencies(g: &StaticGraph, size: GraphletSize) -> Vec<u64> {
    let table = classification_table(size);
    (0..g.node_count() as NodeId)
        .into_par_iter()
        .fold(
            || vec![0u64; size.class_count()],
            |mut acc, root| {
                for_each_rooted_subgraph(g, size, root, &mut |_: &[NodeId], mask| {
                    acc[table.get(mask).expect("connected").class.slot()] += 1;
                });
                acc
            },
        )
        .reduce(
            || vec![0u64; size.class_count()],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        )
}
