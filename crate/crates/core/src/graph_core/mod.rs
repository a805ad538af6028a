//! Edge-list ingestion, snapshot construction and global snapshot metrics.

mod edges;
mod graph;
mod snapshot;
mod stats;

pub use edges::{parse_edge_list, EdgeEvent, NodeLabels, Separator, TemporalEdgeList};
pub use graph::{NodeId, StaticGraph};
pub use snapshot::{build_snapshots, SnapshotMode, SnapshotPolicy, SnapshotSeries};
pub use stats::{
    average_degree, characteristic_path_length, clustering_coefficient, relative_size_series,
    ClusteringMode, SnapshotSummary,
};
