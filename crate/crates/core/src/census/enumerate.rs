use crate::graph_core::{NodeId, StaticGraph};

use super::types::GraphletSize;

/// Induced adjacency mask of `nodes` in `g`, using the bit order of
/// `size.pairs()`.
#[inline]
pub fn induced_mask(g: &StaticGraph, size: GraphletSize, nodes: &[NodeId]) -> u8 {
    let mut mask = 0u8;
    for (bit, &(a, b)) in size.pairs().iter().enumerate() {
        if g.has_edge(nodes[a], nodes[b]) {
            mask |= 1 << bit;
        }
    }
    mask
}

/// Calls `visit(sorted_nodes, mask)` exactly once for every node set of
/// size `k` that induces a connected subgraph of `g`.
pub fn for_each_connected_subgraph<F>(g: &StaticGraph, size: GraphletSize, mut visit: F)
where
    F: FnMut(&[NodeId], u8),
{
    for root in 0..g.node_count() as NodeId {
        for_each_rooted_subgraph(g, size, root, &mut visit);
    }
}

/// Same as [`for_each_connected_subgraph`] restricted to the sets whose
/// smallest node is `root`. Roots partition the occurrences, so censuses
/// can be split across workers by root.
pub fn for_each_rooted_subgraph<F>(g: &StaticGraph, size: GraphletSize, root: NodeId, visit: &mut F)
where
    F: FnMut(&[NodeId], u8),
{
    let mut walker = Walker {
        g,
        size,
        root,
        sub: [0; 4],
        len: 1,
    };
    walker.sub[0] = root;
    let ext: Vec<NodeId> = g
        .neighbors(root)
        .iter()
        .copied()
        .filter(|&u| u > root)
        .collect();
    walker.extend(ext, visit);
}

struct Walker<'g> {
    g: &'g StaticGraph,
    size: GraphletSize,
    root: NodeId,
    sub: [NodeId; 4],
    len: usize,
}

impl Walker<'_> {
    fn emit<F: FnMut(&[NodeId], u8)>(&self, last: NodeId, visit: &mut F) {
        let k = self.size.k();
        let mut nodes = self.sub;
        nodes[k - 1] = last;
        let nodes = &mut nodes[..k];
        nodes.sort_unstable();
        visit(nodes, induced_mask(self.g, self.size, nodes));
    }

    fn touches_sub(&self, u: NodeId) -> bool {
        self.sub[..self.len]
            .iter()
            .any(|&s| s == u || self.g.has_edge(s, u))
    }

    // Set-growth recursion: extension candidates are neighbours of the
    // current set with id above the root, and each newly added node only
    // contributes neighbours not already adjacent to the set.
    fn extend<F: FnMut(&[NodeId], u8)>(&mut self, mut ext: Vec<NodeId>, visit: &mut F) {
        if self.len + 1 == self.size.k() {
            for &w in &ext {
                self.emit(w, visit);
            }
            return;
        }
        while let Some(w) = ext.pop() {
            let mut next = ext.clone();
            for &u in self.g.neighbors(w) {
                if u > self.root && !self.touches_sub(u) && !next.contains(&u) {
                    next.push(u);
                }
            }
            self.sub[self.len] = w;
            self.len += 1;
            self.extend(next, visit);
            self.len -= 1;
        }
    }
}
