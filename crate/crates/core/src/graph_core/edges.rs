use std::collections::HashMap;
use std::io::BufRead;

use super::graph::NodeId;
use crate::error::{Error, Result};

/// Field separator of a temporal edge list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Separator {
    /// Any run of spaces or tabs.
    #[default]
    Whitespace,
    Comma,
}

impl Separator {
    fn split(self, line: &str) -> Vec<&str> {
        match self {
            Separator::Whitespace => line.split_whitespace().collect(),
            Separator::Comma => line.split(',').map(str::trim).collect(),
        }
    }
}

/// Bijection between original string tokens and dense node ids.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NodeLabels {
    labels: Vec<String>,
    index: HashMap<String, NodeId>,
}

impl NodeLabels {
    pub fn intern(&mut self, label: &str) -> NodeId {
        if let Some(&id) = self.index.get(label) {
            return id;
        }
        let id = self.labels.len() as NodeId;
        self.labels.push(label.to_owned());
        self.index.insert(label.to_owned(), id);
        id
    }

    pub fn id(&self, label: &str) -> Option<NodeId> {
        self.index.get(label).copied()
    }

    pub fn label(&self, id: NodeId) -> &str {
        &self.labels[id as usize]
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.labels.iter().map(String::as_str)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeEvent {
    pub u: NodeId,
    pub v: NodeId,
    pub t: i64,
}

/// Timestamped undirected edge events sorted by time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TemporalEdgeList {
    labels: NodeLabels,
    events: Vec<EdgeEvent>,
    dropped_self_loops: usize,
}

impl TemporalEdgeList {
    /// Builds an edge list from labelled events. Events are stably sorted by
    /// time and node ids are assigned in order of first appearance in the
    /// sorted sequence. Self-loops are dropped and counted.
    pub fn from_labelled<S: AsRef<str>>(events: impl IntoIterator<Item = (S, S, i64)>) -> Self {
        let mut raw: Vec<(S, S, i64)> = Vec::new();
        let mut dropped = 0;
        for (u, v, t) in events {
            if u.as_ref() == v.as_ref() {
                dropped += 1;
            } else {
                raw.push((u, v, t));
            }
        }
        raw.sort_by_key(|e| e.2);
        let mut labels = NodeLabels::default();
        let events = raw
            .iter()
            .map(|(u, v, t)| EdgeEvent {
                u: labels.intern(u.as_ref()),
                v: labels.intern(v.as_ref()),
                t: *t,
            })
            .collect();
        TemporalEdgeList {
            labels,
            events,
            dropped_self_loops: dropped,
        }
    }

    /// Events over unlabelled ids `0..n`; labels are the decimal ids.
    pub fn from_ids(n: usize, events: impl IntoIterator<Item = (NodeId, NodeId, i64)>) -> Self {
        let mut labels = NodeLabels::default();
        for v in 0..n {
            labels.intern(&v.to_string());
        }
        let mut dropped = 0;
        let mut evs: Vec<EdgeEvent> = events
            .into_iter()
            .filter(|&(u, v, _)| {
                assert!(
                    (u as usize) < n && (v as usize) < n,
                    "event endpoint out of range"
                );
                let keep = u != v;
                if !keep {
                    dropped += 1;
                }
                keep
            })
            .map(|(u, v, t)| EdgeEvent { u, v, t })
            .collect();
        evs.sort_by_key(|e| e.t);
        TemporalEdgeList {
            labels,
            events: evs,
            dropped_self_loops: dropped,
        }
    }

    pub fn events(&self) -> &[EdgeEvent] {
        &self.events
    }

    pub fn labels(&self) -> &NodeLabels {
        &self.labels
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn dropped_self_loops(&self) -> usize {
        self.dropped_self_loops
    }

    /// Earliest timestamp, if any event survived parsing.
    pub fn origin(&self) -> Option<i64> {
        self.events.first().map(|e| e.t)
    }

    /// Writes the events back as `u v t` lines.
    pub fn to_text(&self, sep: Separator) -> String {
        let delim = match sep {
            Separator::Whitespace => " ",
            Separator::Comma => ",",
        };
        let mut out = String::new();
        for e in &self.events {
            out.push_str(self.labels.label(e.u));
            out.push_str(delim);
            out.push_str(self.labels.label(e.v));
            out.push_str(delim);
            out.push_str(&e.t.to_string());
            out.push('\n');
        }
        out
    }
}

/// Parses `u v t` lines. Lines starting with `#` and blank lines are skipped.
pub fn parse_edge_list<R: BufRead>(reader: R, sep: Separator) -> Result<TemporalEdgeList> {
    let mut raw = Vec::new();
    let mut data_lines = 0;
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.map_err(|e| Error::Parse {
            line: lineno,
            message: e.to_string(),
        })?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        data_lines += 1;
        let fields = sep.split(trimmed);
        if fields.len() != 3 {
            return Err(Error::Parse {
                line: lineno,
                message: format!("expected 3 fields, found {}", fields.len()),
            });
        }
        if fields[0].is_empty() || fields[1].is_empty() {
            return Err(Error::Parse {
                line: lineno,
                message: "empty node token".into(),
            });
        }
        let t: i64 = fields[2].parse().map_err(|_| Error::Parse {
            line: lineno,
            message: format!("timestamp {:?} is not an integer", fields[2]),
        })?;
        raw.push((fields[0].to_owned(), fields[1].to_owned(), t));
    }
    if data_lines == 0 {
        return Err(Error::EmptyInput);
    }
    Ok(TemporalEdgeList::from_labelled(raw))
}
