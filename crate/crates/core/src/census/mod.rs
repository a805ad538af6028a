//! Connected induced subgraph census on 3 and 4 nodes.
//!
//! Orbit numbering (1-based, as written in every output file):
//!
//! | k | orbit | position                          | graphlet |
//! |---|-------|-----------------------------------|----------|
//! | 3 | 1     | chain leaf                        | chain    |
//! | 3 | 2     | chain centre                      | chain    |
//! | 3 | 3     | triangle                          | triangle |
//! | 4 | 1     | star leaf                         | star     |
//! | 4 | 2     | star centre                       | star     |
//! | 4 | 3     | path end                          | path     |
//! | 4 | 4     | path middle                       | path     |
//! | 4 | 5     | cycle                             | cycle    |
//! | 4 | 6     | paw tail (degree 1)               | paw      |
//! | 4 | 7     | paw hub (degree 3)                | paw      |
//! | 4 | 8     | paw triangle pair (degree 2)      | paw      |
//! | 4 | 9     | diamond, degree 2                 | diamond  |
//! | 4 | 10    | diamond, degree 3                 | diamond  |
//! | 4 | 11    | clique                            | clique   |
//!
//! Graphlet classes are numbered by increasing edge count, star before path
//! and cycle before paw: `G1` star, `G2` path, `G3` cycle, `G4` paw,
//! `G5` diamond, `G6` clique (and `G1` chain, `G2` triangle for k = 3).

mod enumerate;
mod frequencies;
mod gdd;
mod table;
mod types;

pub use enumerate::{for_each_connected_subgraph, for_each_rooted_subgraph, induced_mask};
pub use frequencies::{
    census, compute_orbit_frequencies, graphlet_class_frequencies, Census, OrbitFrequencyMatrix,
};
pub use gdd::{compute_gdd, GddScaling, GraphletDegreeDistribution};
pub use table::{classification_table, ClassificationTable, MaskClass};
pub use types::{GraphletClass, GraphletSize, OrbitId};
