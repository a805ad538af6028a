use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use orbitrans::metrics::{GddScaling, Linkage, OtaScaling};
use orbitrans_cli::manifest::{ClusteringSetting, PolicySetting, SepSetting};
use orbitrans_cli::{
    run_census, run_cluster, run_compare, run_motifs, run_stats, run_transitions, Metric,
    NetworkSpec, RunManifest, RunReport,
};

/// Graphlet-orbit transition analysis of temporal networks.
#[derive(Debug, Parser)]
#[command(name = "orbitrans", version)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalArgs {
    /// TOML run manifest listing the networks and settings.
    #[arg(long, global = true, conflicts_with = "input")]
    manifest: Option<PathBuf>,
    /// Single temporal edge list to analyse instead of a manifest.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Network name for `--input` (defaults to the file stem).
    #[arg(long, global = true, requires = "input")]
    name: Option<String>,
    /// Field separator of `--input`.
    #[arg(long, global = true, value_enum, default_value = "ws")]
    sep: SepArg,
    /// Snapshot construction for `--input`.
    #[arg(long, global = true, value_enum, default_value = "active")]
    policy: PolicyArg,
    /// Snapshot width in time units, for `--input`.
    #[arg(long, global = true)]
    width: Option<i64>,
    /// Number of snapshots, for `--input`.
    #[arg(long, global = true)]
    count: Option<usize>,
    /// Start of the first snapshot, for `--input` (default: earliest event).
    #[arg(long, global = true, allow_hyphen_values = true)]
    origin: Option<i64>,
    /// Output directory (default: the manifest's `out`, else `orbitrans-out`).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Base seed of the randomised ensembles.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Graphlet size for census, transitions and OTA.
    #[arg(long, global = true, value_parser = clap::value_parser!(u8).range(3..=4))]
    k: Option<u8>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SepArg {
    Ws,
    Comma,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PolicyArg {
    Active,
    Aggregate,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OtaScalingArg {
    Paper,
    Normalized,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GddScalingArg {
    InverseK,
    Plain,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum LinkageArg {
    Average,
    Single,
    Complete,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ClusteringArg {
    Local,
    Transitivity,
}

#[derive(Debug, Args)]
struct ClusterArgs {
    /// Comparison measure.
    #[arg(long, value_enum, default_value = "ota")]
    metric: Metric,
    /// Linkage of the agglomerative clustering.
    #[arg(long, value_enum)]
    linkage: Option<LinkageArg>,
    /// Number of groups in `assignments.csv`.
    #[arg(long, default_value_t = 2)]
    clusters: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Per-snapshot size, degree, clustering and path length.
    Stats {
        #[arg(long, value_enum)]
        clustering: Option<ClusteringArg>,
    },
    /// Per-node orbit counts, class counts and degree distributions.
    Census {
        #[arg(long, value_enum)]
        gdd_scaling: Option<GddScalingArg>,
    },
    /// Orbit transition counts between consecutive snapshots.
    Transitions,
    /// Motif fingerprints against degree-preserving random graphs.
    Motifs {
        #[arg(long)]
        replicates: Option<usize>,
        #[arg(long)]
        swaps_per_edge: Option<usize>,
    },
    /// Pairwise network agreement and clustering from earlier artifacts.
    Compare {
        #[command(flatten)]
        cluster: ClusterArgs,
        #[arg(long, value_enum)]
        ota_scaling: Option<OtaScalingArg>,
        /// Skip the min-max rescale across networks before OTA.
        #[arg(long)]
        no_relative_rescale: bool,
        #[arg(long, value_enum)]
        gdd_scaling: Option<GddScalingArg>,
        /// Add 3-node orbits to GDA.
        #[arg(long)]
        include_k3: bool,
    },
    /// Re-cluster a similarity matrix written by `compare`.
    Cluster {
        #[command(flatten)]
        cluster: ClusterArgs,
    },
}

fn gdd_scaling(arg: GddScalingArg) -> GddScaling {
    match arg {
        GddScalingArg::InverseK => GddScaling::InverseK,
        GddScalingArg::Plain => GddScaling::Plain,
    }
}

fn linkage(arg: LinkageArg) -> Linkage {
    match arg {
        LinkageArg::Average => Linkage::Average,
        LinkageArg::Single => Linkage::Single,
        LinkageArg::Complete => Linkage::Complete,
    }
}

fn build_manifest(g: &GlobalArgs) -> Result<RunManifest> {
    let mut manifest = match (&g.manifest, &g.input) {
        (Some(path), _) => RunManifest::load(path)?,
        (None, Some(input)) => {
            let (Some(width), Some(count)) = (g.width, g.count) else {
                bail!("--input needs --width and --count");
            };
            let name = match &g.name {
                Some(n) => n.clone(),
                None => input
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .context("--input has no file name")?,
            };
            RunManifest {
                out: None,
                settings: Default::default(),
                networks: vec![NetworkSpec {
                    name,
                    path: input.clone(),
                    sep: match g.sep {
                        SepArg::Ws => SepSetting::Ws,
                        SepArg::Comma => SepSetting::Comma,
                    },
                    policy: match g.policy {
                        PolicyArg::Active => PolicySetting::Active,
                        PolicyArg::Aggregate => PolicySetting::Aggregate,
                    },
                    width,
                    count,
                    origin: g.origin,
                }],
            }
        }
        (None, None) => bail!("pass --manifest FILE or --input FILE"),
    };
    if let Some(seed) = g.seed {
        manifest.settings.seed = seed;
    }
    if let Some(k) = g.k {
        manifest.settings.k = k as usize;
    }
    Ok(manifest)
}

fn apply_command_settings(manifest: &mut RunManifest, command: &Command) {
    let s = &mut manifest.settings;
    let apply_cluster = |s: &mut orbitrans_cli::Settings, c: &ClusterArgs| {
        if let Some(l) = c.linkage {
            s.linkage = linkage(l);
        }
    };
    match command {
        Command::Stats { clustering } => {
            if let Some(c) = clustering {
                s.clustering = match c {
                    ClusteringArg::Local => ClusteringSetting::Local,
                    ClusteringArg::Transitivity => ClusteringSetting::Transitivity,
                };
            }
        }
        Command::Census { gdd_scaling: g } => {
            if let Some(g) = g {
                s.gdd_scaling = gdd_scaling(*g);
            }
        }
        Command::Transitions => {}
        Command::Motifs {
            replicates,
            swaps_per_edge,
        } => {
            if let Some(r) = replicates {
                s.replicates = *r;
            }
            if let Some(q) = swaps_per_edge {
                s.swaps_per_edge = *q;
            }
        }
        Command::Compare {
            cluster,
            ota_scaling,
            no_relative_rescale,
            gdd_scaling: g,
            include_k3,
        } => {
            apply_cluster(s, cluster);
            if let Some(o) = ota_scaling {
                s.ota_scaling = match o {
                    OtaScalingArg::Paper => OtaScaling::PaperExact,
                    OtaScalingArg::Normalized => OtaScaling::Normalized,
                };
            }
            if *no_relative_rescale {
                s.relative_rescale = false;
            }
            if let Some(g) = g {
                s.gdd_scaling = gdd_scaling(*g);
            }
            if *include_k3 {
                s.gda_include_k3 = true;
            }
        }
        Command::Cluster { cluster } => apply_cluster(s, cluster),
    }
}

/// Builds and validates the run configuration; failures are usage errors.
fn prepare(cli: &Cli) -> Result<(RunManifest, PathBuf)> {
    let mut manifest = build_manifest(&cli.global)?;
    apply_command_settings(&mut manifest, &cli.command);
    manifest.validate()?;
    let out = cli
        .global
        .out
        .clone()
        .or_else(|| manifest.out.clone())
        .unwrap_or_else(|| PathBuf::from("orbitrans-out"));
    Ok((manifest, out))
}

fn execute(command: &Command, manifest: &RunManifest, out: &Path) -> Result<RunReport> {
    match command {
        Command::Stats { .. } => run_stats(manifest, out),
        Command::Census { .. } => run_census(manifest, out),
        Command::Transitions => run_transitions(manifest, out),
        Command::Motifs { .. } => run_motifs(manifest, out),
        Command::Compare { cluster, .. } => {
            run_compare(manifest, out, cluster.metric, cluster.clusters)
        }
        Command::Cluster { cluster } => {
            run_cluster(manifest, out, cluster.metric, cluster.clusters)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.global.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: configuring {threads} threads: {e}");
            return ExitCode::from(2);
        }
    }
    let (manifest, out) = match prepare(&cli) {
        Ok(prepared) => prepared,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    match execute(&cli.command, &manifest, &out) {
        Ok(report) if report.is_success() => ExitCode::SUCCESS,
        Ok(report) => {
            for (network, reason) in &report.failures {
                eprintln!("error: network {network:?}: {reason}");
            }
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
