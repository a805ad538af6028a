use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Number of nodes in the enumerated graphlets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GraphletSize {
    Three,
    Four,
}

const K3_CLASSES: [(&str, usize); 2] = [("chain", 2), ("triangle", 3)];
const K4_CLASSES: [(&str, usize); 6] = [
    ("star", 3),
    ("path", 3),
    ("cycle", 4),
    ("paw", 4),
    ("diamond", 5),
    ("clique", 6),
];

// (name, owning class index)
const K3_ORBITS: [(&str, u8); 3] = [("chain-leaf", 1), ("chain-center", 1), ("triangle", 2)];
const K4_ORBITS: [(&str, u8); 11] = [
    ("star-leaf", 1),
    ("star-center", 1),
    ("path-end", 2),
    ("path-middle", 2),
    ("cycle", 3),
    ("paw-tail", 4),
    ("paw-hub", 4),
    ("paw-triangle", 4),
    ("diamond-rim", 5),
    ("diamond-spine", 5),
    ("clique", 6),
];

const K3_PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];
const K4_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

impl GraphletSize {
    pub fn k(self) -> usize {
        match self {
            GraphletSize::Three => 3,
            GraphletSize::Four => 4,
        }
    }

    pub fn orbit_count(self) -> usize {
        match self {
            GraphletSize::Three => K3_ORBITS.len(),
            GraphletSize::Four => K4_ORBITS.len(),
        }
    }

    pub fn class_count(self) -> usize {
        match self {
            GraphletSize::Three => K3_CLASSES.len(),
            GraphletSize::Four => K4_CLASSES.len(),
        }
    }

    /// Node-pair positions in mask bit order.
    pub fn pairs(self) -> &'static [(usize, usize)] {
        match self {
            GraphletSize::Three => &K3_PAIRS,
            GraphletSize::Four => &K4_PAIRS,
        }
    }

    pub fn mask_count(self) -> usize {
        1 << self.pairs().len()
    }

    pub fn orbits(self) -> impl Iterator<Item = OrbitId> {
        (1..=self.orbit_count() as u8).map(move |index| OrbitId { size: self, index })
    }

    pub fn classes(self) -> impl Iterator<Item = GraphletClass> {
        (1..=self.class_count() as u8).map(move |index| GraphletClass { size: self, index })
    }

    fn orbit_table(self) -> &'static [(&'static str, u8)] {
        match self {
            GraphletSize::Three => &K3_ORBITS,
            GraphletSize::Four => &K4_ORBITS,
        }
    }

    fn class_table(self) -> &'static [(&'static str, usize)] {
        match self {
            GraphletSize::Three => &K3_CLASSES,
            GraphletSize::Four => &K4_CLASSES,
        }
    }
}

impl TryFrom<usize> for GraphletSize {
    type Error = Error;

    fn try_from(k: usize) -> Result<Self, Error> {
        match k {
            3 => Ok(GraphletSize::Three),
            4 => Ok(GraphletSize::Four),
            other => Err(Error::InvalidGraphletSize(other)),
        }
    }
}

impl fmt::Display for GraphletSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.k())
    }
}

/// A graphlet-orbit, numbered from 1 within its graphlet size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbitId {
    size: GraphletSize,
    index: u8,
}

impl OrbitId {
    pub fn new(size: GraphletSize, index: u8) -> Option<Self> {
        (1..=size.orbit_count() as u8)
            .contains(&index)
            .then_some(OrbitId { size, index })
    }

    pub fn size(self) -> GraphletSize {
        self.size
    }

    /// 1-based orbit number.
    pub fn index(self) -> u8 {
        self.index
    }

    /// 0-based column/row position in matrices.
    pub fn slot(self) -> usize {
        self.index as usize - 1
    }

    pub fn name(self) -> &'static str {
        self.size.orbit_table()[self.slot()].0
    }

    pub fn class(self) -> GraphletClass {
        GraphletClass {
            size: self.size,
            index: self.size.orbit_table()[self.slot()].1,
        }
    }
}

impl fmt::Display for OrbitId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "orbit_{}", self.index)
    }
}

/// An isomorphism class of connected graphlets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphletClass {
    size: GraphletSize,
    index: u8,
}

impl GraphletClass {
    pub fn new(size: GraphletSize, index: u8) -> Option<Self> {
        (1..=size.class_count() as u8)
            .contains(&index)
            .then_some(GraphletClass { size, index })
    }

    pub fn size(self) -> GraphletSize {
        self.size
    }

    pub fn index(self) -> u8 {
        self.index
    }

    pub fn slot(self) -> usize {
        self.index as usize - 1
    }

    pub fn name(self) -> &'static str {
        self.size.class_table()[self.slot()].0
    }

    pub fn edge_count(self) -> usize {
        self.size.class_table()[self.slot()].1
    }

    pub fn orbits(self) -> impl Iterator<Item = OrbitId> {
        self.size.orbits().filter(move |o| o.class() == self)
    }
}

impl fmt::Display for GraphletClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G{}", self.index)
    }
}
