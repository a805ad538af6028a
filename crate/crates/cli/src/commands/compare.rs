use std::path::{Path, PathBuf};

use anyhow::{bail, ensure, Context, Result};
use orbitrans::census::{compute_gdd, GraphletDegreeDistribution};
use orbitrans::metrics::{
    gda_matrix, hierarchical_cluster, motif_distance_matrix, ota_matrix, MergeTree, SimilarityKind,
    SimilarityMatrix,
};
use orbitrans::{GraphletSize, OrbitFrequencyMatrix, OrbitTransitionMatrix};
use serde::{Deserialize, Serialize};

use super::analysis::census_dir;
use super::{MotifArtifact, RunReport, TransitionsArtifact};
use crate::manifest::{PolicySetting, RunManifest, SepSetting, Settings};
use crate::output::{fmt_float, parse_csv, write_json, Csv};

/// Network comparison measure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    /// Orbit-transition agreement (needs `transitions`).
    Ota,
    /// Graphlet degree distribution agreement (needs `census`).
    Gda,
    /// Motif fingerprint distance (needs `motifs`).
    Motif,
}

impl Metric {
    pub fn as_str(self) -> &'static str {
        match self {
            Metric::Ota => "ota",
            Metric::Gda => "gda",
            Metric::Motif => "motif",
        }
    }

    fn kind(self) -> SimilarityKind {
        match self {
            Metric::Ota => SimilarityKind::Ota,
            Metric::Gda => SimilarityKind::Gda,
            Metric::Motif => SimilarityKind::MotifDistance,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NetworkMetadata {
    pub name: String,
    pub sep: SepSetting,
    pub policy: PolicySetting,
    pub width: i64,
    pub count: usize,
    pub origin: Option<i64>,
}

/// Contents of `compare/<metric>/run.json`: everything needed to
/// reproduce the comparison, and nothing that varies between reruns.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunMetadata {
    pub tool: String,
    pub version: String,
    pub metric: Metric,
    pub settings: Settings,
    pub networks: Vec<NetworkMetadata>,
    /// Null-model parameters the motif artifacts were built with.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ensembles: Option<Vec<EnsembleMetadata>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnsembleMetadata {
    pub network: String,
    pub replicates: usize,
    pub swaps_per_edge: usize,
    pub seed: u64,
}

fn read_artifact(path: &Path, network: &str, step: &str) -> Result<String> {
    if !path.is_file() {
        bail!(
            "missing {} for network {network:?} (expected {}); run `orbitrans {step}` first",
            path.file_name()
                .map(|f| f.to_string_lossy().into_owned())
                .unwrap_or_default(),
            path.display()
        );
    }
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_transitions(out: &Path, name: &str, size: GraphletSize) -> Result<OrbitTransitionMatrix> {
    let path = out.join("transitions").join(name).join("transitions.json");
    let text = read_artifact(&path, name, "transitions")?;
    let a: TransitionsArtifact =
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    ensure!(
        a.k == size.k(),
        "transitions for network {name:?} use {}-node graphlets but the run expects {}; rerun `orbitrans transitions`",
        a.k,
        size.k()
    );
    Ok(OrbitTransitionMatrix::from_parts(
        size,
        a.counts.concat(),
        a.dissolved,
        a.pairs_processed,
    )?)
}

fn load_final_gdd(
    out: &Path,
    name: &str,
    size: GraphletSize,
) -> Result<GraphletDegreeDistribution> {
    let path = census_dir(out, name, size).join("final").join("orbits.csv");
    let step = format!("census --k {}", size.k());
    let text = read_artifact(&path, name, &step)?;
    let rows = parse_csv(&text);
    let mut counts = Vec::with_capacity(rows.len().saturating_sub(1));
    for (i, row) in rows.iter().enumerate().skip(1) {
        ensure!(
            row.len() == size.orbit_count() + 1,
            "{}: line {} has {} cells",
            path.display(),
            i + 1,
            row.len()
        );
        let values = row[1..]
            .iter()
            .map(|c| c.parse::<u64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .with_context(|| format!("{}: line {}", path.display(), i + 1))?;
        counts.push(values);
    }
    let fr = OrbitFrequencyMatrix::from_rows(size, counts).context("inconsistent orbit table")?;
    Ok(compute_gdd(&fr))
}

fn load_motif(out: &Path, name: &str) -> Result<MotifArtifact> {
    let path = out.join("motifs").join(format!("{name}.json"));
    let text = read_artifact(&path, name, "motifs")?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn similarity_for(
    manifest: &RunManifest,
    out: &Path,
    metric: Metric,
) -> Result<(SimilarityMatrix, Option<Vec<EnsembleMetadata>>)> {
    let names: Vec<String> = manifest.networks.iter().map(|n| n.name.clone()).collect();
    let settings = &manifest.settings;
    let mut ensembles = None;
    let sim = match metric {
        Metric::Ota => {
            let size = settings.graphlet_size()?;
            let matrices = names
                .iter()
                .map(|n| load_transitions(out, n, size))
                .collect::<Result<Vec<_>>>()?;
            ota_matrix(names, &matrices, &settings.agreement())?
        }
        Metric::Gda => {
            let mut sizes = vec![GraphletSize::Four];
            if settings.gda_include_k3 {
                sizes.insert(0, GraphletSize::Three);
            }
            let gdds = names
                .iter()
                .map(|n| {
                    sizes
                        .iter()
                        .map(|&s| load_final_gdd(out, n, s))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            gda_matrix(names, &gdds, settings.gdd_scaling)?
        }
        Metric::Motif => {
            let artifacts = names
                .iter()
                .map(|n| load_motif(out, n))
                .collect::<Result<Vec<_>>>()?;
            let fingerprints = artifacts
                .iter()
                .map(MotifArtifact::fingerprint)
                .collect::<Result<Vec<_>>>()?;
            ensembles = Some(
                artifacts
                    .iter()
                    .map(|a| EnsembleMetadata {
                        network: a.network.clone(),
                        replicates: a.replicates,
                        swaps_per_edge: a.swaps_per_edge,
                        seed: a.seed,
                    })
                    .collect(),
            );
            motif_distance_matrix(names, &fingerprints)?
        }
    };
    Ok((sim, ensembles))
}

fn similarity_csv(sim: &SimilarityMatrix) -> Csv {
    let mut csv =
        Csv::new(std::iter::once("network").chain(sim.names().iter().map(String::as_str)));
    for (i, name) in sim.names().iter().enumerate() {
        csv.row(
            std::iter::once(name.clone()).chain((0..sim.len()).map(|j| fmt_float(sim.get(i, j)))),
        );
    }
    csv
}

fn assignments_csv(tree: &MergeTree, clusters: usize) -> Result<Csv> {
    let groups = tree.cut(clusters)?;
    let mut csv = Csv::new(["network", "cluster"]);
    for (name, g) in tree.names().iter().zip(groups) {
        csv.row([name.clone(), g.to_string()]);
    }
    Ok(csv)
}

fn step_dir(out: &Path, step: &str, metric: Metric) -> PathBuf {
    out.join(step).join(metric.as_str())
}

/// Compares every pair of networks from earlier artifacts and clusters
/// them; writes `similarity.csv`, `merge_tree.json`, `assignments.csv`
/// and `run.json` under `compare/<metric>/`.
pub fn run_compare(
    manifest: &RunManifest,
    out: &Path,
    metric: Metric,
    clusters: usize,
) -> Result<RunReport> {
    let (sim, ensembles) = similarity_for(manifest, out, metric)?;
    let tree = hierarchical_cluster(&sim, manifest.settings.linkage)?;
    let dir = step_dir(out, "compare", metric);
    similarity_csv(&sim).write(&dir.join("similarity.csv"))?;
    write_json(&dir.join("merge_tree.json"), &tree.merges())?;
    assignments_csv(&tree, clusters.min(sim.len()))?.write(&dir.join("assignments.csv"))?;
    let meta = RunMetadata {
        tool: "orbitrans".to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        metric,
        settings: manifest.settings.clone(),
        networks: manifest
            .networks
            .iter()
            .map(|n| NetworkMetadata {
                name: n.name.clone(),
                sep: n.sep,
                policy: n.policy,
                width: n.width,
                count: n.count,
                origin: n.origin,
            })
            .collect(),
        ensembles,
    };
    write_json(&dir.join("run.json"), &meta)?;
    Ok(RunReport::default())
}

/// Reads a similarity matrix written by `compare`.
pub fn read_similarity(path: &Path, kind: SimilarityKind) -> Result<SimilarityMatrix> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let rows = parse_csv(&text);
    let (header, body) = rows.split_first().context("empty similarity table")?;
    let names: Vec<String> = header.iter().skip(1).cloned().collect();
    ensure!(
        body.len() == names.len(),
        "{}: expected {} rows",
        path.display(),
        names.len()
    );
    let mut values = Vec::with_capacity(names.len() * names.len());
    for (row, name) in body.iter().zip(&names) {
        ensure!(
            row.len() == names.len() + 1 && &row[0] == name,
            "{}: malformed row {name:?}",
            path.display()
        );
        for cell in &row[1..] {
            values.push(
                cell.parse::<f64>()
                    .with_context(|| format!("{}: bad value {cell:?}", path.display()))?,
            );
        }
    }
    Ok(SimilarityMatrix::new(names, values, kind)?)
}

/// Re-clusters a stored similarity matrix with the manifest's linkage;
/// writes `merge_tree.json` and `assignments.csv` under `cluster/<metric>/`.
pub fn run_cluster(
    manifest: &RunManifest,
    out: &Path,
    metric: Metric,
    clusters: usize,
) -> Result<RunReport> {
    let path = step_dir(out, "compare", metric).join("similarity.csv");
    if !path.is_file() {
        bail!(
            "missing {}; run `orbitrans compare --metric {}` first",
            path.display(),
            metric.as_str()
        );
    }
    let sim = read_similarity(&path, metric.kind())?;
    let tree = hierarchical_cluster(&sim, manifest.settings.linkage)?;
    let dir = step_dir(out, "cluster", metric);
    write_json(&dir.join("merge_tree.json"), &tree.merges())?;
    assignments_csv(&tree, clusters.min(sim.len()))?.write(&dir.join("assignments.csv"))?;
    Ok(RunReport::default())
}
