//! Exhaustive reference implementations shared by the integration tests.
//!
//! Orbits are identified here by rooted isomorphism against hand-drawn
//! reference graphlets, without going through the library's mask table.

#![allow(dead_code, clippy::needless_range_loop, clippy::type_complexity)]

use std::cell::RefCell;
use std::collections::HashMap;

use itertools::Itertools;
use orbitrans::StaticGraph;

/// Reference graphlets as edge lists over local nodes `0..k`, each with
/// the orbit number of every local node.
fn references(k: usize) -> Vec<(usize, Vec<(usize, usize)>, Vec<u8>)> {
    match k {
        // (class, edges, orbit per node)
        3 => vec![
            (1, vec![(0, 1), (1, 2)], vec![1, 2, 1]),
            (2, vec![(0, 1), (1, 2), (0, 2)], vec![3, 3, 3]),
        ],
        4 => vec![
            (1, vec![(0, 1), (0, 2), (0, 3)], vec![2, 1, 1, 1]),
            (2, vec![(0, 1), (1, 2), (2, 3)], vec![3, 4, 4, 3]),
            (3, vec![(0, 1), (1, 2), (2, 3), (3, 0)], vec![5, 5, 5, 5]),
            (4, vec![(0, 1), (1, 2), (2, 0), (2, 3)], vec![8, 8, 7, 6]),
            (
                5,
                vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)],
                vec![10, 9, 10, 9],
            ),
            (
                6,
                vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
                vec![11, 11, 11, 11],
            ),
        ],
        _ => unreachable!(),
    }
}

type Adj = Vec<Vec<bool>>;

fn adj_from_edges(k: usize, edges: &[(usize, usize)]) -> Adj {
    let mut a = vec![vec![false; k]; k];
    for &(u, v) in edges {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

fn code(a: &Adj, perm: &[usize]) -> Vec<bool> {
    // adjacency of the relabelled graph, read in row-major upper triangle
    let k = a.len();
    let mut inv = vec![0; k];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    let mut out = Vec::new();
    for i in 0..k {
        for j in (i + 1)..k {
            out.push(a[inv[i]][inv[j]]);
        }
    }
    out
}

fn rooted_signature(a: &Adj, root: usize) -> (usize, Vec<bool>) {
    let k = a.len();
    (0..k)
        .permutations(k)
        .map(|perm| (perm[root], code(a, &perm)))
        .min()
        .unwrap()
}

fn connected(a: &Adj) -> bool {
    let k = a.len();
    let mut seen = vec![false; k];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for w in 0..k {
            if a[v][w] && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.iter().all(|&s| s)
}

pub struct Oracle {
    k: usize,
    orbit_of: HashMap<(usize, Vec<bool>), u8>,
    class_of: HashMap<Vec<bool>, usize>,
    memo: RefCell<HashMap<Vec<bool>, Option<(usize, Vec<u8>)>>>,
}

impl Oracle {
    pub fn new(k: usize) -> Self {
        let mut orbit_of = HashMap::new();
        let mut class_of = HashMap::new();
        for (class, edges, orbits) in references(k) {
            let a = adj_from_edges(k, &edges);
            for root in 0..k {
                orbit_of.insert(rooted_signature(&a, root), orbits[root]);
            }
            let canon = (0..k).permutations(k).map(|p| code(&a, &p)).min().unwrap();
            class_of.insert(canon, class);
        }
        Oracle {
            k,
            orbit_of,
            class_of,
            memo: RefCell::new(HashMap::new()),
        }
    }

    pub fn orbit_count(&self) -> usize {
        if self.k == 3 {
            3
        } else {
            11
        }
    }

    pub fn class_count(&self) -> usize {
        if self.k == 3 {
            2
        } else {
            6
        }
    }

    fn local(&self, g: &StaticGraph, nodes: &[u32]) -> Adj {
        let k = nodes.len();
        let mut a = vec![vec![false; k]; k];
        for i in 0..k {
            for j in 0..k {
                a[i][j] = i != j && g.neighbors(nodes[i]).contains(&nodes[j]);
            }
        }
        a
    }

    /// `(class, orbit per position)` of `nodes` in `g`, or `None` when the
    /// induced subgraph is disconnected.
    pub fn classify(&self, g: &StaticGraph, nodes: &[u32]) -> Option<(usize, Vec<u8>)> {
        let a = self.local(g, nodes);
        let key = code(&a, &(0..self.k).collect::<Vec<_>>());
        if let Some(hit) = self.memo.borrow().get(&key) {
            return hit.clone();
        }
        let result = self.classify_uncached(&a);
        self.memo.borrow_mut().insert(key, result.clone());
        result
    }

    fn classify_uncached(&self, a: &Adj) -> Option<(usize, Vec<u8>)> {
        let a = a.clone();
        if !connected(&a) {
            return None;
        }
        let k = self.k;
        let canon = (0..k).permutations(k).map(|p| code(&a, &p)).min().unwrap();
        let class = self.class_of[&canon];
        let orbits = (0..k)
            .map(|r| self.orbit_of[&rooted_signature(&a, r)])
            .collect();
        Some((class, orbits))
    }

    /// All connected k-subsets by exhaustive search.
    pub fn connected_sets(&self, g: &StaticGraph) -> Vec<(Vec<u32>, usize, Vec<u8>)> {
        (0..g.node_count() as u32)
            .combinations(self.k)
            .filter_map(|nodes| self.classify(g, &nodes).map(|(c, o)| (nodes, c, o)))
            .collect()
    }

    /// Per-node orbit counts (row per node, 0-based orbit column) and class counts.
    pub fn census(&self, g: &StaticGraph) -> (Vec<Vec<u64>>, Vec<u64>) {
        let mut fr = vec![vec![0u64; self.orbit_count()]; g.node_count()];
        let mut classes = vec![0u64; self.class_count()];
        for (nodes, class, orbits) in self.connected_sets(g) {
            classes[class - 1] += 1;
            for (v, o) in nodes.iter().zip(orbits) {
                fr[*v as usize][o as usize - 1] += 1;
            }
        }
        (fr, classes)
    }

    /// Transition counts (row-major, 0-based) and dissolved counts between
    /// two snapshots, by evaluating every k-subset in both.
    pub fn transitions(&self, from: &StaticGraph, to: &StaticGraph) -> (Vec<u64>, Vec<u64>) {
        let m = self.orbit_count();
        let mut counts = vec![0u64; m * m];
        let mut dissolved = vec![0u64; m];
        for nodes in (0..from.node_count() as u32).combinations(self.k) {
            let Some((_, src)) = self.classify(from, &nodes) else {
                continue;
            };
            match self.classify(to, &nodes) {
                Some((_, dst)) => {
                    for (a, b) in src.iter().zip(dst) {
                        counts[(*a as usize - 1) * m + b as usize - 1] += 1;
                    }
                }
                None => {
                    for a in src {
                        dissolved[a as usize - 1] += 1;
                    }
                }
            }
        }
        (counts, dissolved)
    }
}

/// Erdős–Rényi graph from a simple LCG, independent of the library's RNGs.
pub fn lcg_graph(n: usize, p: f64, seed: u64) -> StaticGraph {
    let mut state = seed
        .wrapping_mul(6364136223846793005)
        .wrapping_add(1442695040888963407);
    let mut next = || {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        (state >> 11) as f64 / (1u64 << 53) as f64
    };
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in (u + 1)..n as u32 {
            if next() < p {
                edges.push((u, v));
            }
        }
    }
    StaticGraph::from_edges(n, edges)
}

/// Copy of `g` with each edge flipped independently with probability `p`.
pub fn perturb(g: &StaticGraph, p: f64, seed: u64) -> StaticGraph {
    let flips = lcg_graph(g.node_count(), p, seed);
    let n = g.node_count() as u32;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if g.has_edge(u, v) != flips.has_edge(u, v) {
                edges.push((u, v));
            }
        }
    }
    StaticGraph::from_edges(g.node_count(), edges)
}
