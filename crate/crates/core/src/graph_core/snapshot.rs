use super::edges::TemporalEdgeList;
use super::graph::StaticGraph;
use crate::error::{Error, Result};

/// How edges persist across snapshots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SnapshotMode {
    /// An edge exists in a snapshot only if one of its events falls inside
    /// that snapshot's interval.
    #[default]
    ActiveEdge,
    /// Once an edge appears it stays in every later snapshot.
    Aggregate,
}

/// Binning of a temporal edge list into `count` half-open intervals of
/// `width` time units starting at the origin.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SnapshotPolicy {
    pub mode: SnapshotMode,
    pub width: i64,
    pub count: usize,
    pub origin_override: Option<i64>,
}

impl SnapshotPolicy {
    pub fn new(mode: SnapshotMode, width: i64, count: usize) -> Result<Self> {
        let policy = SnapshotPolicy {
            mode,
            width,
            count,
            origin_override: None,
        };
        policy.validate()?;
        Ok(policy)
    }

    pub fn with_origin(mut self, origin: i64) -> Self {
        self.origin_override = Some(origin);
        self
    }

    /// Width must be positive and at least one snapshot requested.
    /// Transition analysis additionally requires two snapshots, which is
    /// checked where transitions are built.
    pub fn validate(&self) -> Result<()> {
        if self.width <= 0 {
            return Err(Error::InvalidPolicy(format!(
                "width must be > 0, got {}",
                self.width
            )));
        }
        if self.count == 0 {
            return Err(Error::InvalidPolicy("snapshot count must be >= 1".into()));
        }
        if self.width.checked_mul(self.count as i64).is_none() {
            return Err(Error::InvalidPolicy("width * count overflows".into()));
        }
        Ok(())
    }
}

/// Ordered static snapshots over the node universe of one temporal network.
#[derive(Debug, Clone, PartialEq)]
pub struct SnapshotSeries {
    snapshots: Vec<StaticGraph>,
    policy: SnapshotPolicy,
    origin: i64,
    discarded: usize,
}

impl SnapshotSeries {
    /// Wraps prebuilt snapshots. All snapshots must share one node universe.
    pub fn from_snapshots(snapshots: Vec<StaticGraph>, policy: SnapshotPolicy) -> Result<Self> {
        if let Some(first) = snapshots.first() {
            for s in &snapshots[1..] {
                if s.node_count() != first.node_count() {
                    return Err(Error::UniverseMismatch(first.node_count(), s.node_count()));
                }
            }
        }
        Ok(SnapshotSeries {
            snapshots,
            origin: policy.origin_override.unwrap_or(0),
            policy,
            discarded: 0,
        })
    }

    pub fn snapshots(&self) -> &[StaticGraph] {
        &self.snapshots
    }

    pub fn len(&self) -> usize {
        self.snapshots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.snapshots.is_empty()
    }

    pub fn policy(&self) -> &SnapshotPolicy {
        &self.policy
    }

    pub fn origin(&self) -> i64 {
        self.origin
    }

    /// Events that fell into no snapshot.
    pub fn discarded_events(&self) -> usize {
        self.discarded
    }

    pub fn node_count(&self) -> usize {
        self.snapshots.first().map_or(0, StaticGraph::node_count)
    }
}

/// Materialises the snapshot series of `edges` under `policy`.
///
/// Snapshot `i` covers `[origin + width*i, origin + width*(i+1))`. In
/// aggregate mode every event before the end of that interval contributes.
pub fn build_snapshots(edges: &TemporalEdgeList, policy: SnapshotPolicy) -> Result<SnapshotSeries> {
    policy.validate()?;
    let origin = policy.origin_override.or(edges.origin()).unwrap_or(0);
    let n = edges.node_count();
    let end = origin + policy.width * policy.count as i64;

    let mut per_bin: Vec<Vec<(u32, u32)>> = vec![Vec::new(); policy.count];
    let mut discarded = 0;
    for e in edges.events() {
        if e.t >= end {
            discarded += 1;
            continue;
        }
        if e.t < origin {
            match policy.mode {
                SnapshotMode::ActiveEdge => discarded += 1,
                SnapshotMode::Aggregate => per_bin[0].push((e.u, e.v)),
            }
            continue;
        }
        let bin = ((e.t - origin) / policy.width) as usize;
        per_bin[bin].push((e.u, e.v));
    }

    let snapshots = match policy.mode {
        SnapshotMode::ActiveEdge => per_bin
            .into_iter()
            .map(|bin| StaticGraph::from_edges(n, bin))
            .collect(),
        SnapshotMode::Aggregate => {
            let mut acc = Vec::new();
            per_bin
                .into_iter()
                .map(|bin| {
                    acc.extend(bin);
                    StaticGraph::from_edges(n, acc.iter().copied())
                })
                .collect()
        }
    };

    Ok(SnapshotSeries {
        snapshots,
        policy,
        origin,
        discarded,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn abc() -> TemporalEdgeList {
        TemporalEdgeList::from_labelled([("a", "b", 0), ("b", "c", 10)])
    }

    fn edge_set(g: &StaticGraph) -> BTreeSet<(u32, u32)> {
        g.edges().collect()
    }

    #[test]
    fn active_edge_bins() {
        let policy = SnapshotPolicy::new(SnapshotMode::ActiveEdge, 10, 2).unwrap();
        let s = build_snapshots(&abc(), policy).unwrap();
        assert_eq!(edge_set(&s.snapshots()[0]), BTreeSet::from([(0, 1)]));
        assert_eq!(edge_set(&s.snapshots()[1]), BTreeSet::from([(1, 2)]));
    }

    #[test]
    fn aggregate_keeps_edges() {
        let policy = SnapshotPolicy::new(SnapshotMode::Aggregate, 10, 2).unwrap();
        let s = build_snapshots(&abc(), policy).unwrap();
        assert_eq!(edge_set(&s.snapshots()[0]), BTreeSet::from([(0, 1)]));
        assert_eq!(
            edge_set(&s.snapshots()[1]),
            BTreeSet::from([(0, 1), (1, 2)])
        );
    }

    #[test]
    fn boundary_is_half_open() {
        // b-c at t=10 with width 10 belongs to the second interval only.
        let policy = SnapshotPolicy::new(SnapshotMode::ActiveEdge, 10, 2).unwrap();
        let s = build_snapshots(&abc(), policy).unwrap();
        assert!(!s.snapshots()[0].has_edge(1, 2));
        assert!(s.snapshots()[1].has_edge(1, 2));
    }

    #[test]
    fn late_and_early_events_are_discarded() {
        let el = TemporalEdgeList::from_labelled([("a", "b", 0), ("b", "c", 5), ("c", "d", 30)]);
        let policy = SnapshotPolicy::new(SnapshotMode::ActiveEdge, 10, 2)
            .unwrap()
            .with_origin(3);
        let s = build_snapshots(&el, policy).unwrap();
        assert_eq!(s.discarded_events(), 2);
        assert_eq!(s.origin(), 3);
        assert_eq!(s.snapshots()[0].edge_count(), 1);
    }

    #[test]
    fn invalid_policies() {
        assert!(SnapshotPolicy::new(SnapshotMode::ActiveEdge, 0, 2).is_err());
        assert!(SnapshotPolicy::new(SnapshotMode::ActiveEdge, 5, 0).is_err());
    }

    proptest! {
        #[test]
        fn aggregate_is_monotone(
            events in prop::collection::vec((0u32..10, 0u32..10, 0i64..100), 1..60),
            width in 1i64..30,
            count in 1usize..8,
        ) {
            let el = TemporalEdgeList::from_ids(10, events);
            let policy = SnapshotPolicy::new(SnapshotMode::Aggregate, width, count).unwrap();
            let s = build_snapshots(&el, policy).unwrap();
            for w in s.snapshots().windows(2) {
                prop_assert!(edge_set(&w[0]).is_subset(&edge_set(&w[1])));
            }
        }

        #[test]
        fn active_union_covers_all_pairs(
            events in prop::collection::vec((0u32..10, 0u32..10, 0i64..100), 1..60),
            width in 1i64..30,
        ) {
            let el = TemporalEdgeList::from_ids(10, events);
            let Some(origin) = el.origin() else { return Ok(()) };
            let span = el.events().last().unwrap().t - origin + 1;
            let count = ((span + width - 1) / width) as usize;
            let policy = SnapshotPolicy::new(SnapshotMode::ActiveEdge, width, count).unwrap();
            let s = build_snapshots(&el, policy).unwrap();
            let union: BTreeSet<_> = s.snapshots().iter().flat_map(|g| g.edges()).collect();
            let distinct: BTreeSet<_> = el.events().iter().map(|e| (e.u.min(e.v), e.u.max(e.v))).collect();
            prop_assert_eq!(union, distinct);
            prop_assert_eq!(s.discarded_events(), 0);
        }
    }
}
