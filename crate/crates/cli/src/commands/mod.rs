//! One function per subcommand. Every function processes the manifest's
//! networks in order and records per-network failures in a [`RunReport`]
//! instead of aborting the run.

mod analysis;
mod compare;
mod motifs;

use std::path::{Path, PathBuf};

use orbitrans::StaticGraph;
use orbitrans::TemporalEdgeList;

pub use analysis::{run_census, run_stats, run_transitions, TransitionsArtifact};
pub use compare::{
    read_similarity, run_cluster, run_compare, EnsembleMetadata, Metric, NetworkMetadata,
    RunMetadata,
};
pub use motifs::{run_motifs, MotifArtifact};

/// Outcome of a subcommand: the networks that failed, with the reason.
#[derive(Debug, Default)]
pub struct RunReport {
    pub failures: Vec<(String, String)>,
}

impl RunReport {
    pub fn is_success(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, network: &str, err: anyhow::Error) {
        self.failures
            .push((network.to_string(), format!("{err:#}")));
    }
}

/// The static graph holding every edge that occurs at any time.
pub fn aggregate_graph(edges: &TemporalEdgeList) -> StaticGraph {
    StaticGraph::from_edges(
        edges.node_count(),
        edges.events().iter().map(|e| (e.u, e.v)),
    )
}

fn network_dir(out: &Path, step: &str, name: &str) -> PathBuf {
    out.join(step).join(name)
}
