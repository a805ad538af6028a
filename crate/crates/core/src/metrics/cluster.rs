use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::similarity::SimilarityMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Linkage {
    #[default]
    Average,
    Single,
    Complete,
}

/// One agglomeration step. Leaves are clusters `0..n`; the cluster created
/// by merge `i` has id `n + i`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Merge {
    pub left: usize,
    pub right: usize,
    pub height: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MergeTree {
    names: Vec<String>,
    merges: Vec<Merge>,
}

impl MergeTree {
    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn merges(&self) -> &[Merge] {
        &self.merges
    }

    /// Leaf indices under cluster `id`, sorted.
    pub fn members(&self, id: usize) -> Vec<usize> {
        let n = self.names.len();
        let mut out = Vec::new();
        let mut stack = vec![id];
        while let Some(c) = stack.pop() {
            if c < n {
                out.push(c);
            } else {
                let m = &self.merges[c - n];
                stack.push(m.left);
                stack.push(m.right);
            }
        }
        out.sort_unstable();
        out
    }

    /// Flat assignment into `clusters` groups by undoing the last merges.
    /// Group ids follow the order of each group's smallest leaf index.
    pub fn cut(&self, clusters: usize) -> Result<Vec<usize>> {
        let n = self.names.len();
        if clusters == 0 || clusters > n {
            return Err(Error::InvalidConfig(format!(
                "cannot cut {n} leaves into {clusters} clusters"
            )));
        }
        let applied = n - clusters;
        let mut roots: Vec<usize> = (0..n).collect();
        for (i, m) in self.merges[..applied].iter().enumerate() {
            let id = n + i;
            for r in roots.iter_mut() {
                if *r == m.left || *r == m.right {
                    *r = id;
                }
            }
        }
        let mut order: Vec<usize> = Vec::new();
        Ok(roots
            .iter()
            .map(|r| match order.iter().position(|x| x == r) {
                Some(p) => p,
                None => {
                    order.push(*r);
                    order.len() - 1
                }
            })
            .collect())
    }
}

struct Active {
    id: usize,
    size: usize,
    min_label: String,
}

/// Agglomerative clustering of the networks in `sim`. Agreement values are
/// turned into distances as `1 - value`.
///
/// Among equally close pairs, the pair whose smallest member labels are
/// lexicographically first is merged.
pub fn hierarchical_cluster(sim: &SimilarityMatrix, linkage: Linkage) -> Result<MergeTree> {
    let n = sim.len();
    if n < 2 {
        return Err(Error::TooFewNetworks { needed: 2, got: n });
    }
    let mut dist: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| sim.distance(i, j)).collect())
        .collect();
    let mut active: Vec<Option<Active>> = sim
        .names()
        .iter()
        .enumerate()
        .map(|(i, name)| {
            Some(Active {
                id: i,
                size: 1,
                min_label: name.clone(),
            })
        })
        .collect();

    let key = |a: &Active, b: &Active| {
        if a.min_label <= b.min_label {
            (a.min_label.clone(), b.min_label.clone())
        } else {
            (b.min_label.clone(), a.min_label.clone())
        }
    };

    let mut merges = Vec::with_capacity(n - 1);
    for step in 0..n - 1 {
        let mut best: Option<(usize, usize, f64, (String, String))> = None;
        for i in 0..n {
            let Some(a) = &active[i] else { continue };
            for j in (i + 1)..n {
                let Some(b) = &active[j] else { continue };
                let d = dist[i][j];
                let better = match &best {
                    None => true,
                    Some((_, _, bd, bk)) => match d.total_cmp(bd) {
                        Ordering::Less => true,
                        Ordering::Equal => key(a, b) < *bk,
                        Ordering::Greater => false,
                    },
                };
                if better {
                    best = Some((i, j, d, key(a, b)));
                }
            }
        }
        let (i, j, height, _) = best.expect("at least two active clusters");
        let a = active[i].take().unwrap();
        let b = active[j].take().unwrap();
        let (left, right) = if a.min_label <= b.min_label {
            (&a, &b)
        } else {
            (&b, &a)
        };
        merges.push(Merge {
            left: left.id,
            right: right.id,
            height,
        });

        // Lance-Williams update into slot i.
        for k in 0..n {
            if k == i || k == j || active[k].is_none() {
                continue;
            }
            let (di, dj) = (dist[i][k], dist[j][k]);
            let d = match linkage {
                Linkage::Single => di.min(dj),
                Linkage::Complete => di.max(dj),
                Linkage::Average => {
                    (a.size as f64 * di + b.size as f64 * dj) / (a.size + b.size) as f64
                }
            };
            dist[i][k] = d;
            dist[k][i] = d;
        }
        active[i] = Some(Active {
            id: n + step,
            size: a.size + b.size,
            min_label: left.min_label.clone(),
        });
    }

    Ok(MergeTree {
        names: sim.names().to_vec(),
        merges,
    })
}
