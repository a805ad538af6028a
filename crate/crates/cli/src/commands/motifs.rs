use std::path::Path;

use anyhow::{ensure, Result};
use orbitrans::census::graphlet_class_frequencies;
use orbitrans::metrics::MotifFingerprint;
use orbitrans::nullmodel::ensemble_frequencies;
use orbitrans::GraphletSize;
use serde::{Deserialize, Serialize};

use super::{aggregate_graph, RunReport};
use crate::manifest::RunManifest;
use crate::output::{fmt_float, write_json, Csv};

/// Contents of `motifs/<name>.json`. Values keep full precision.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MotifArtifact {
    pub network: String,
    pub k: usize,
    pub replicates: usize,
    pub swaps_per_edge: usize,
    pub seed: u64,
    pub classes: Vec<String>,
    pub real: Vec<u64>,
    pub ensemble_mean: Vec<f64>,
    pub delta_raw: Vec<f64>,
    pub delta: Vec<f64>,
}

impl MotifArtifact {
    pub fn fingerprint(&self) -> Result<MotifFingerprint> {
        Ok(MotifFingerprint::from_counts(
            &self.real,
            &self.ensemble_mean,
        )?)
    }
}

/// Scores 4-node graphlet classes of each network's all-time graph against
/// a degree-preserving randomised ensemble; writes `motifs/<name>.csv` and
/// `motifs/<name>.json`.
pub fn run_motifs(manifest: &RunManifest, out: &Path) -> Result<RunReport> {
    let mut report = RunReport::default();
    let cfg = manifest.settings.randomization();
    cfg.validate()?;
    let size = GraphletSize::Four;
    for net in &manifest.networks {
        let result = (|| -> Result<()> {
            let edges = net.load_edges()?;
            let g = aggregate_graph(&edges);
            ensure!(
                g.edge_count() >= 2,
                "the network needs at least two edges to randomise"
            );
            let ensemble = ensemble_frequencies(&g, &cfg, size)?;
            let real = graphlet_class_frequencies(&g, size);
            let fp = MotifFingerprint::from_counts(&real, ensemble.mean())?;
            let mut csv = Csv::new([
                "class",
                "name",
                "real",
                "ensemble_mean",
                "delta_raw",
                "delta",
            ]);
            for class in size.classes() {
                let s = class.slot();
                csv.row([
                    class.to_string(),
                    class.name().to_string(),
                    real[s].to_string(),
                    fmt_float(ensemble.mean()[s]),
                    fmt_float(fp.raw()[s]),
                    fmt_float(fp.scores()[s]),
                ]);
            }
            let dir = out.join("motifs");
            csv.write(&dir.join(format!("{}.csv", net.name)))?;
            let artifact = MotifArtifact {
                network: net.name.clone(),
                k: size.k(),
                replicates: cfg.replicates,
                swaps_per_edge: cfg.swaps_per_edge,
                seed: cfg.seed,
                classes: size.classes().map(|c| c.to_string()).collect(),
                real,
                ensemble_mean: ensemble.mean().to_vec(),
                delta_raw: fp.raw().to_vec(),
                delta: fp.scores().to_vec(),
            };
            write_json(&dir.join(format!("{}.json", net.name)), &artifact)
        })();
        if let Err(e) = result {
            report.fail(&net.name, e);
        }
    }
    Ok(report)
}
