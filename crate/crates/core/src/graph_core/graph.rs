use std::fmt;

/// Dense node index, contiguous `0..n` within one network.
pub type NodeId = u32;

/// Undirected simple graph stored as sorted adjacency lists.
///
/// Immutable once built, so a graph can be shared freely between workers.
#[derive(Clone, PartialEq, Eq)]
pub struct StaticGraph {
    adjacency: Vec<Vec<NodeId>>,
    edge_count: usize,
}

impl StaticGraph {
    /// Graph on `n` nodes with no edges.
    pub fn empty(n: usize) -> Self {
        StaticGraph {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a simple graph on `n` nodes. Self-loops are dropped and
    /// parallel edges collapse into one.
    ///
    /// Panics if an endpoint is `>= n`.
    pub fn from_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (NodeId, NodeId)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            assert!(
                (u as usize) < n && (v as usize) < n,
                "edge ({u}, {v}) out of range for {n} nodes"
            );
            if u == v {
                continue;
            }
            adjacency[u as usize].push(v);
            adjacency[v as usize].push(u);
        }
        let mut twice = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        StaticGraph {
            adjacency,
            edge_count: twice / 2,
        }
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Sorted neighbours of `v`.
    #[inline]
    pub fn neighbors(&self, v: NodeId) -> &[NodeId] {
        &self.adjacency[v as usize]
    }

    #[inline]
    pub fn degree(&self, v: NodeId) -> usize {
        self.adjacency[v as usize].len()
    }

    #[inline]
    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.adjacency[a as usize].binary_search(&b).is_ok()
    }

    /// A node is present when it has at least one incident edge.
    #[inline]
    pub fn is_present(&self, v: NodeId) -> bool {
        !self.adjacency[v as usize].is_empty()
    }

    pub fn present_count(&self) -> usize {
        self.adjacency.iter().filter(|l| !l.is_empty()).count()
    }

    /// Edges as `(u, v)` with `u < v`, in increasing order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            let u = u as NodeId;
            list.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    /// Relabels node `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[NodeId]) -> StaticGraph {
        assert_eq!(perm.len(), self.node_count(), "permutation length");
        StaticGraph::from_edges(
            self.node_count(),
            self.edges()
                .map(|(u, v)| (perm[u as usize], perm[v as usize])),
        )
    }
}

impl fmt::Debug for StaticGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("StaticGraph")
            .field("nodes", &self.node_count())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
