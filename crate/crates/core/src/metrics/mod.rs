//! Pairwise agreement between networks and grouping of a network set.

mod cluster;
mod gda;
mod motif;
mod ota;
mod similarity;

use serde::{Deserialize, Serialize};

pub use crate::census::GddScaling;
pub use cluster::{hierarchical_cluster, Linkage, Merge, MergeTree};
pub use gda::{gda_matrix, gda_orbits, gda_pair};
pub use motif::{fingerprint_distance, motif_distance_matrix, motif_scores, MotifFingerprint};
pub use ota::{ota_matrix, ota_pair, relative_rescale};
pub use similarity::{SimilarityKind, SimilarityMatrix};

/// Prefactor of the orbit-transition agreement sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OtaScaling {
    /// `1/|O|`, which gives `|O|` for identical inputs.
    PaperExact,
    /// `1/|O|^2`, which keeps agreement in `[0, 1]`.
    #[default]
    Normalized,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AgreementConfig {
    pub ota_scaling: OtaScaling,
    pub use_relative_rescale: bool,
    pub gdd_scaling: GddScaling,
}

impl Default for AgreementConfig {
    fn default() -> Self {
        AgreementConfig {
            ota_scaling: OtaScaling::Normalized,
            use_relative_rescale: true,
            gdd_scaling: GddScaling::InverseK,
        }
    }
}
