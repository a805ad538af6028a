//! Temporal network comparison through graphlet-orbit transitions.
//!
//! The crate is organised as a pipeline:
//!
//! - [`graph_core`]: timestamped edge lists, snapshot series and global
//!   per-snapshot metrics.
//! - [`census`]: enumeration of connected induced 3- and 4-node subgraphs and
//!   the per-node orbit counts derived from them.
//! - [`transitions`]: orbit-transition matrices between consecutive
//!   snapshots, row normalisation and three-level fingerprints.
//! - [`metrics`]: pairwise agreement (OTA, GDA, motif-fingerprint distance)
//!   and agglomerative grouping of a network set.
//! - [`nullmodel`]: degree-preserving randomisation for motif scores.
//! - [`synthetic`]: small temporal network generators used by tests and demos.

pub mod census;
pub mod error;
pub mod graph_core;
pub mod metrics;
pub mod nullmodel;
pub mod synthetic;
pub mod transitions;

pub use census::{GraphletClass, GraphletSize, OrbitFrequencyMatrix, OrbitId};
pub use error::{Error, Result};
pub use graph_core::{SnapshotMode, SnapshotPolicy, SnapshotSeries, StaticGraph, TemporalEdgeList};
pub use transitions::{NormalizedTransitionMatrix, OrbitTransitionMatrix, TransitionFingerprint};
