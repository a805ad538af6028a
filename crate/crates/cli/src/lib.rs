//! Pipeline driver behind the `orbitrans` binary.
//!
//! Each subcommand reads a [`manifest::RunManifest`], processes every
//! network independently and writes its results below the output
//! directory. A failing network is reported and skipped; the run still
//! processes the others.

pub mod commands;
pub mod manifest;
pub mod output;

pub use commands::{
    run_census, run_cluster, run_compare, run_motifs, run_stats, run_transitions, Metric, RunReport,
};
pub use manifest::{NetworkSpec, RunManifest, Settings};
