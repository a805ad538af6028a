use std::sync::OnceLock;

use itertools::Itertools;

use super::types::{GraphletClass, GraphletSize, OrbitId};

/// Class and per-position orbits of one connected induced-adjacency mask.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MaskClass {
    pub class: GraphletClass,
    orbits: [u8; 4],
}

impl MaskClass {
    /// Orbit of the node at position `p` (0-based, sorted node order).
    #[inline]
    pub fn orbit(&self, p: usize) -> OrbitId {
        OrbitId::new(self.class.size(), self.orbits[p]).expect("valid orbit")
    }

    /// 0-based orbit slot of position `p`.
    #[inline]
    pub fn orbit_slot(&self, p: usize) -> usize {
        self.orbits[p] as usize - 1
    }
}

/// Lookup from induced-adjacency mask to graphlet class and node orbits.
///
/// Bit `i` of a mask is set when node pair `size.pairs()[i]` is adjacent.
/// Disconnected masks map to `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationTable {
    size: GraphletSize,
    entries: Vec<Option<MaskClass>>,
}

impl ClassificationTable {
    pub fn size(&self) -> GraphletSize {
        self.size
    }

    #[inline]
    pub fn get(&self, mask: u8) -> Option<&MaskClass> {
        self.entries[mask as usize].as_ref()
    }

    pub fn entries(&self) -> &[Option<MaskClass>] {
        &self.entries
    }

    /// Builds the table and checks it against brute-force automorphism
    /// orbits and isomorphism classes over all `k!` permutations.
    pub fn build(size: GraphletSize) -> Self {
        let k = size.k();
        let entries: Vec<Option<MaskClass>> = (0..size.mask_count())
            .map(|m| classify(size, m as u8))
            .collect();
        let table = ClassificationTable { size, entries };

        for mask in 0..size.mask_count() as u8 {
            let Some(entry) = table.get(mask) else {
                continue;
            };
            for perm in (0..k).permutations(k) {
                let image = permute_mask(size, mask, &perm);
                let other = table.get(image).expect("isomorphic mask must be connected");
                assert_eq!(
                    other.class, entry.class,
                    "mask {mask:#b}: class not permutation invariant"
                );
                for (p, &image_pos) in perm.iter().enumerate() {
                    assert_eq!(
                        entry.orbits[p], other.orbits[image_pos],
                        "mask {mask:#b}: orbit of position {p} not permutation consistent"
                    );
                }
            }
            // Same orbit label iff related by an automorphism.
            let autos: Vec<Vec<usize>> = (0..k)
                .permutations(k)
                .filter(|perm| permute_mask(size, mask, perm) == mask)
                .collect();
            for p in 0..k {
                for q in 0..k {
                    let related = autos.iter().any(|perm| perm[p] == q);
                    assert_eq!(
                        related,
                        entry.orbits[p] == entry.orbits[q],
                        "mask {mask:#b}: orbit partition differs from automorphism orbits"
                    );
                }
            }
        }
        // Distinct classes are non-isomorphic.
        let canon = |m: u8| {
            (0..k)
                .permutations(k)
                .map(|p| permute_mask(size, m, &p))
                .min()
                .unwrap()
        };
        for a in 0..size.mask_count() as u8 {
            for b in 0..size.mask_count() as u8 {
                if let (Some(x), Some(y)) = (table.get(a), table.get(b)) {
                    assert_eq!(x.class == y.class, canon(a) == canon(b));
                }
            }
        }
        table
    }
}

/// Shared, lazily built table for `size`.
pub fn classification_table(size: GraphletSize) -> &'static ClassificationTable {
    static K3: OnceLock<ClassificationTable> = OnceLock::new();
    static K4: OnceLock<ClassificationTable> = OnceLock::new();
    match size {
        GraphletSize::Three => K3.get_or_init(|| ClassificationTable::build(size)),
        GraphletSize::Four => K4.get_or_init(|| ClassificationTable::build(size)),
    }
}

/// Mask of the graph obtained by moving position `p` to `perm[p]`.
pub(crate) fn permute_mask(size: GraphletSize, mask: u8, perm: &[usize]) -> u8 {
    let pairs = size.pairs();
    let mut out = 0u8;
    for (bit, &(a, b)) in pairs.iter().enumerate() {
        if mask >> bit & 1 == 1 {
            let (x, y) = (perm[a].min(perm[b]), perm[a].max(perm[b]));
            let target = pairs.iter().position(|&pr| pr == (x, y)).unwrap();
            out |= 1 << target;
        }
    }
    out
}

fn degrees(size: GraphletSize, mask: u8) -> [usize; 4] {
    let mut deg = [0; 4];
    for (bit, &(a, b)) in size.pairs().iter().enumerate() {
        if mask >> bit & 1 == 1 {
            deg[a] += 1;
            deg[b] += 1;
        }
    }
    deg
}

fn is_connected(size: GraphletSize, mask: u8) -> bool {
    let k = size.k();
    let mut reached = 1u8;
    loop {
        let before = reached;
        for (bit, &(a, b)) in size.pairs().iter().enumerate() {
            if mask >> bit & 1 == 1 && (reached >> a & 1 == 1 || reached >> b & 1 == 1) {
                reached |= 1 << a | 1 << b;
            }
        }
        if reached == before {
            break;
        }
    }
    reached == (1u8 << k) - 1
}

// Within each connected graphlet on at most 4 nodes, the induced degree of
// a node determines its orbit. The brute-force checks in `build` confirm it.
fn classify(size: GraphletSize, mask: u8) -> Option<MaskClass> {
    if !is_connected(size, mask) {
        return None;
    }
    let k = size.k();
    let deg = degrees(size, mask);
    let edges = mask.count_ones() as usize;
    let max_deg = deg[..k].iter().copied().max().unwrap();
    let (class, orbit_of): (u8, fn(usize) -> u8) = match (size, edges, max_deg) {
        (GraphletSize::Three, 2, _) => (1, |d| if d == 1 { 1 } else { 2 }),
        (GraphletSize::Three, 3, _) => (2, |_| 3),
        (GraphletSize::Four, 3, 3) => (1, |d| if d == 1 { 1 } else { 2 }),
        (GraphletSize::Four, 3, _) => (2, |d| if d == 1 { 3 } else { 4 }),
        (GraphletSize::Four, 4, 2) => (3, |_| 5),
        (GraphletSize::Four, 4, _) => (4, |d| match d {
            1 => 6,
            3 => 7,
            _ => 8,
        }),
        (GraphletSize::Four, 5, _) => (5, |d| if d == 2 { 9 } else { 10 }),
        (GraphletSize::Four, 6, _) => (6, |_| 11),
        _ => unreachable!("connected graphlet with {edges} edges on {k} nodes"),
    };
    let mut orbits = [0u8; 4];
    for p in 0..k {
        orbits[p] = orbit_of(deg[p]);
    }
    Some(MaskClass {
        class: GraphletClass::new(size, class).unwrap(),
        orbits,
    })
}
