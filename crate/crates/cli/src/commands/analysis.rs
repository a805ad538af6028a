use std::path::Path;

use anyhow::{Context, Result};
use orbitrans::census::{census, compute_gdd, Census, GddScaling};
use orbitrans::graph_core::SnapshotSummary;
use orbitrans::transitions::{accumulate_series, discretize, row_normalize};
use orbitrans::{GraphletSize, StaticGraph, TemporalEdgeList};
use serde::{Deserialize, Serialize};

use super::{aggregate_graph, network_dir, RunReport};
use crate::manifest::RunManifest;
use crate::output::{fmt_float, fmt_opt, write_json, Csv};

const STATS_HEADER: [&str; 6] = [
    "snapshot",
    "nodes",
    "edges",
    "avg_degree",
    "clustering",
    "cpl",
];

fn summary_cells(s: &SnapshotSummary) -> [String; 6] {
    [
        s.snapshot.to_string(),
        s.nodes.to_string(),
        s.edges.to_string(),
        fmt_opt(s.avg_degree),
        fmt_float(s.clustering),
        fmt_opt(s.cpl),
    ]
}

/// Writes `stats/<name>.csv` per network and `stats/combined.csv` with a
/// leading `network` column over the networks that succeeded.
pub fn run_stats(manifest: &RunManifest, out: &Path) -> Result<RunReport> {
    let mut report = RunReport::default();
    let mode = manifest.settings.clustering_mode();
    let mut combined = Csv::new(std::iter::once("network").chain(STATS_HEADER));
    for net in &manifest.networks {
        let result = (|| -> Result<Vec<SnapshotSummary>> {
            let (_, series) = net.load()?;
            let rows = SnapshotSummary::series(&series, mode);
            let mut csv = Csv::new(STATS_HEADER);
            for row in &rows {
                csv.row(summary_cells(row));
            }
            csv.write(&out.join("stats").join(format!("{}.csv", net.name)))?;
            Ok(rows)
        })();
        match result {
            Ok(rows) => {
                for row in &rows {
                    combined.row(std::iter::once(net.name.clone()).chain(summary_cells(row)));
                }
            }
            Err(e) => report.fail(&net.name, e),
        }
    }
    combined.write(&out.join("stats").join("combined.csv"))?;
    Ok(report)
}

fn write_census_bundle(
    dir: &Path,
    g: &StaticGraph,
    edges: &TemporalEdgeList,
    size: GraphletSize,
    scaling: GddScaling,
) -> Result<()> {
    let Census { orbits, classes } = census(g, size);
    let mut orbit_csv =
        Csv::new(std::iter::once("node".to_string()).chain(size.orbits().map(|o| o.to_string())));
    for (v, row) in orbits.rows().enumerate() {
        let label = edges.labels().label(v as u32).to_string();
        orbit_csv.row(std::iter::once(label).chain(row.iter().map(u64::to_string)));
    }
    orbit_csv.write(&dir.join("orbits.csv"))?;

    let mut class_csv = Csv::new(["class", "name", "edges", "count"]);
    for class in size.classes() {
        class_csv.row([
            class.to_string(),
            class.name().to_string(),
            class.edge_count().to_string(),
            classes[class.slot()].to_string(),
        ]);
    }
    class_csv.write(&dir.join("classes.csv"))?;

    let gdd = compute_gdd(&orbits);
    let mut gdd_csv = Csv::new(["orbit", "degree", "count", "normalized"]);
    for orbit in size.orbits() {
        let normalized = gdd.normalized(orbit, scaling);
        for (&k, &count) in gdd.distribution(orbit) {
            gdd_csv.row([
                orbit.to_string(),
                k.to_string(),
                count.to_string(),
                fmt_float(normalized[&k]),
            ]);
        }
    }
    gdd_csv.write(&dir.join("gdd.csv"))
}

/// Census directory of one network for graphlets of `size`.
pub(crate) fn census_dir(out: &Path, name: &str, size: GraphletSize) -> std::path::PathBuf {
    network_dir(out, "census", name).join(format!("k{}", size.k()))
}

/// Writes `census/<name>/k<k>/snapshot_<i>/` per snapshot and
/// `census/<name>/k<k>/final/` for the graph of all edges, each holding
/// `orbits.csv`, `classes.csv` and `gdd.csv`.
pub fn run_census(manifest: &RunManifest, out: &Path) -> Result<RunReport> {
    let mut report = RunReport::default();
    let size = manifest.settings.graphlet_size()?;
    let scaling = manifest.settings.gdd_scaling;
    for net in &manifest.networks {
        let result = (|| -> Result<()> {
            let (edges, series) = net.load()?;
            let dir = census_dir(out, &net.name, size);
            for (i, g) in series.snapshots().iter().enumerate() {
                write_census_bundle(&dir.join(format!("snapshot_{i}")), g, &edges, size, scaling)?;
            }
            write_census_bundle(
                &dir.join("final"),
                &aggregate_graph(&edges),
                &edges,
                size,
                scaling,
            )
        })();
        if let Err(e) = result {
            report.fail(&net.name, e);
        }
    }
    Ok(report)
}

/// Contents of `transitions/<name>/transitions.json`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TransitionsArtifact {
    pub network: String,
    pub k: usize,
    pub snapshots: usize,
    pub pairs_processed: usize,
    pub orbits: Vec<String>,
    /// `counts[i][j]`: node moves from orbit `i+1` to orbit `j+1`.
    pub counts: Vec<Vec<u64>>,
    /// Per source orbit, anchored sets that disconnected in the next snapshot.
    pub dissolved: Vec<u64>,
    pub normalized: Vec<Vec<f64>>,
    pub fingerprint: Vec<Vec<String>>,
}

fn matrix_csv<T>(size: GraphletSize, cells: &[T], fmt: impl Fn(&T) -> String) -> Csv {
    let m = size.orbit_count();
    let mut csv =
        Csv::new(std::iter::once("from".to_string()).chain(size.orbits().map(|o| o.to_string())));
    for (orbit, row) in size.orbits().zip(cells.chunks(m)) {
        csv.row(std::iter::once(orbit.to_string()).chain(row.iter().map(&fmt)));
    }
    csv
}

/// Writes `counts.csv`, `normalized.csv`, `fingerprint.csv` and
/// `transitions.json` under `transitions/<name>/`.
pub fn run_transitions(manifest: &RunManifest, out: &Path) -> Result<RunReport> {
    let mut report = RunReport::default();
    let size = manifest.settings.graphlet_size()?;
    for net in &manifest.networks {
        let result = (|| -> Result<()> {
            let (_, series) = net.load()?;
            let counts = accumulate_series(&series, size).context("computing orbit transitions")?;
            let normalized = row_normalize(&counts);
            let fingerprint = discretize(&normalized)?;
            let dir = network_dir(out, "transitions", &net.name);
            matrix_csv(size, counts.counts(), u64::to_string).write(&dir.join("counts.csv"))?;
            matrix_csv(size, normalized.values(), |x| fmt_float(*x))
                .write(&dir.join("normalized.csv"))?;
            matrix_csv(size, fingerprint.levels(), |l| l.as_str().to_string())
                .write(&dir.join("fingerprint.csv"))?;
            let m = size.orbit_count();
            let artifact = TransitionsArtifact {
                network: net.name.clone(),
                k: size.k(),
                snapshots: series.len(),
                pairs_processed: counts.pairs_processed(),
                orbits: size.orbits().map(|o| o.to_string()).collect(),
                counts: counts.counts().chunks(m).map(<[u64]>::to_vec).collect(),
                dissolved: counts.dissolved_counts().to_vec(),
                normalized: normalized.values().chunks(m).map(<[f64]>::to_vec).collect(),
                fingerprint: fingerprint
                    .levels()
                    .chunks(m)
                    .map(|row| row.iter().map(|l| l.as_str().to_string()).collect())
                    .collect(),
            };
            write_json(&dir.join("transitions.json"), &artifact)
        })();
        if let Err(e) = result {
            report.fail(&net.name, e);
        }
    }
    Ok(report)
}
