use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use orbitrans::graph_core::{build_snapshots, parse_edge_list, ClusteringMode, Separator};
use orbitrans::metrics::{AgreementConfig, GddScaling, Linkage, OtaScaling};
use orbitrans::nullmodel::RandomizationConfig;
use orbitrans::{GraphletSize, SnapshotMode, SnapshotPolicy, SnapshotSeries, TemporalEdgeList};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SepSetting {
    #[default]
    Ws,
    Comma,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PolicySetting {
    #[default]
    Active,
    Aggregate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClusteringSetting {
    #[default]
    Local,
    Transitivity,
}

/// One temporal network of a run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NetworkSpec {
    pub name: String,
    pub path: PathBuf,
    #[serde(default)]
    pub sep: SepSetting,
    #[serde(default)]
    pub policy: PolicySetting,
    pub width: i64,
    pub count: usize,
    #[serde(default)]
    pub origin: Option<i64>,
}

/// Run-wide settings. Every field has a default and all of them are
/// recorded in the run metadata.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Settings {
    pub k: usize,
    pub seed: u64,
    pub replicates: usize,
    pub swaps_per_edge: usize,
    pub ota_scaling: OtaScaling,
    pub relative_rescale: bool,
    pub gdd_scaling: GddScaling,
    pub gda_include_k3: bool,
    pub linkage: Linkage,
    pub clustering: ClusteringSetting,
}

impl Default for Settings {
    fn default() -> Self {
        let agreement = AgreementConfig::default();
        let random = RandomizationConfig::default();
        Settings {
            k: 4,
            seed: random.seed,
            replicates: random.replicates,
            swaps_per_edge: random.swaps_per_edge,
            ota_scaling: agreement.ota_scaling,
            relative_rescale: agreement.use_relative_rescale,
            gdd_scaling: agreement.gdd_scaling,
            gda_include_k3: false,
            linkage: Linkage::Average,
            clustering: ClusteringSetting::Local,
        }
    }
}

impl Settings {
    pub fn graphlet_size(&self) -> Result<GraphletSize> {
        Ok(GraphletSize::try_from(self.k)?)
    }

    pub fn agreement(&self) -> AgreementConfig {
        AgreementConfig {
            ota_scaling: self.ota_scaling,
            use_relative_rescale: self.relative_rescale,
            gdd_scaling: self.gdd_scaling,
        }
    }

    pub fn randomization(&self) -> RandomizationConfig {
        RandomizationConfig {
            replicates: self.replicates,
            swaps_per_edge: self.swaps_per_edge,
            seed: self.seed,
        }
    }

    pub fn clustering_mode(&self) -> ClusteringMode {
        match self.clustering {
            ClusteringSetting::Local => ClusteringMode::AverageLocal,
            ClusteringSetting::Transitivity => ClusteringMode::Transitivity,
        }
    }
}

/// A run configuration, normally read from a TOML file:
///
/// ```toml
/// out = "results"
///
/// [settings]
/// k = 4
/// seed = 7
///
/// [[network]]
/// name = "enron"
/// path = "enron.txt"
/// policy = "active"
/// width = 2592000
/// count = 12
/// ```
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunManifest {
    #[serde(default)]
    pub out: Option<PathBuf>,
    #[serde(default)]
    pub settings: Settings,
    #[serde(default, rename = "network")]
    pub networks: Vec<NetworkSpec>,
}

impl RunManifest {
    /// Reads a manifest; relative network paths resolve against the
    /// manifest's directory.
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading manifest {}", path.display()))?;
        let mut manifest: RunManifest = toml::from_str(&text)
            .with_context(|| format!("parsing manifest {}", path.display()))?;
        let base = path.parent().unwrap_or(Path::new("."));
        for net in &mut manifest.networks {
            if net.path.is_relative() {
                net.path = base.join(&net.path);
            }
        }
        if let Some(out) = &manifest.out {
            if out.is_relative() {
                manifest.out = Some(base.join(out));
            }
        }
        Ok(manifest)
    }

    /// Checks the run can start: at least one network, unique file-safe
    /// names, existing inputs, valid policies and settings.
    pub fn validate(&self) -> Result<()> {
        if self.networks.is_empty() {
            bail!("manifest lists no networks");
        }
        let mut seen = BTreeSet::new();
        for net in &self.networks {
            let safe = !net.name.is_empty()
                && net
                    .name
                    .chars()
                    .all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '.'))
                && !net.name.starts_with('.');
            if !safe {
                bail!(
                    "network name {:?} must use only letters, digits, '_', '-' and '.'",
                    net.name
                );
            }
            if !seen.insert(net.name.as_str()) {
                bail!("duplicate network name {:?}", net.name);
            }
            if !net.path.is_file() {
                bail!(
                    "network {:?}: input {} does not exist",
                    net.name,
                    net.path.display()
                );
            }
            net.policy()
                .with_context(|| format!("network {:?}", net.name))?;
        }
        self.settings.graphlet_size()?;
        self.settings.randomization().validate()?;
        Ok(())
    }
}

impl NetworkSpec {
    pub fn separator(&self) -> Separator {
        match self.sep {
            SepSetting::Ws => Separator::Whitespace,
            SepSetting::Comma => Separator::Comma,
        }
    }

    pub fn policy(&self) -> Result<SnapshotPolicy> {
        let mode = match self.policy {
            PolicySetting::Active => SnapshotMode::ActiveEdge,
            PolicySetting::Aggregate => SnapshotMode::Aggregate,
        };
        let mut policy = SnapshotPolicy::new(mode, self.width, self.count)?;
        if let Some(origin) = self.origin {
            policy = policy.with_origin(origin);
        }
        Ok(policy)
    }

    pub fn load_edges(&self) -> Result<TemporalEdgeList> {
        let file = std::fs::File::open(&self.path)
            .with_context(|| format!("opening {}", self.path.display()))?;
        parse_edge_list(std::io::BufReader::new(file), self.separator())
            .with_context(|| format!("parsing {}", self.path.display()))
    }

    pub fn load(&self) -> Result<(TemporalEdgeList, SnapshotSeries)> {
        let edges = self.load_edges()?;
        let series = build_snapshots(&edges, self.policy()?)?;
        Ok((edges, series))
    }
}
