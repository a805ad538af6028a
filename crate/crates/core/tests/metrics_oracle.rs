#![allow(clippy::needless_range_loop, clippy::type_complexity)]

mod common;

use std::collections::BTreeMap;

use common::lcg_graph;
use orbitrans::census::{compute_gdd, compute_orbit_frequencies, GddScaling};
use orbitrans::metrics::{
    fingerprint_distance, gda_pair, hierarchical_cluster, ota_matrix, relative_rescale,
    AgreementConfig, Linkage, MotifFingerprint, SimilarityKind, SimilarityMatrix,
};
use orbitrans::transitions::row_normalize;
use orbitrans::{GraphletSize, NormalizedTransitionMatrix, OrbitTransitionMatrix};
use proptest::prelude::*;

/// GDA straight from the formula, over orbit columns of raw count rows.
fn gda_reference(fr_g: &[Vec<u64>], fr_h: &[Vec<u64>], orbits: usize) -> f64 {
    let dist = |fr: &[Vec<u64>], j: usize| {
        let mut d: BTreeMap<u64, f64> = BTreeMap::new();
        for row in fr {
            if row[j] > 0 {
                *d.entry(row[j]).or_default() += 1.0;
            }
        }
        let scaled: BTreeMap<u64, f64> = d.into_iter().map(|(k, c)| (k, c / k as f64)).collect();
        let total: f64 = scaled.values().sum();
        scaled
            .into_iter()
            .map(|(k, s)| (k, s / total))
            .collect::<BTreeMap<_, _>>()
    };
    let mut acc = 0.0;
    for j in 0..orbits {
        let (a, b) = (dist(fr_g, j), dist(fr_h, j));
        if a.is_empty() && b.is_empty() {
            acc += 1.0;
            continue;
        }
        let max_k = a.keys().chain(b.keys()).max().copied().unwrap();
        let mut s = 0.0;
        for k in 1..=max_k {
            let d = a.get(&k).unwrap_or(&0.0) - b.get(&k).unwrap_or(&0.0);
            s += d * d;
        }
        acc += 1.0 - (s / 2.0).sqrt();
    }
    acc / orbits as f64
}

#[test]
fn gda_matches_formula_on_random_graphs() {
    for seed in 0..4 {
        let g = lcg_graph(20, 0.2, seed);
        let h = lcg_graph(20, 0.3, seed + 17);
        let fg = compute_orbit_frequencies(&g, GraphletSize::Four);
        let fh = compute_orbit_frequencies(&h, GraphletSize::Four);
        let got = gda_pair(&compute_gdd(&fg), &compute_gdd(&fh), GddScaling::InverseK).unwrap();
        let rows_g: Vec<Vec<u64>> = fg.rows().map(<[u64]>::to_vec).collect();
        let rows_h: Vec<Vec<u64>> = fh.rows().map(<[u64]>::to_vec).collect();
        let want = gda_reference(&rows_g, &rows_h, 11);
        assert!((got - want).abs() < 1e-12, "{got} vs {want}");
        assert!((0.0..=1.0).contains(&got));
    }
}

fn random_counts(seed: u64) -> OrbitTransitionMatrix {
    let mut state = seed.wrapping_add(0x9E3779B97F4A7C15);
    let counts = (0..121)
        .map(|_| {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            if state.is_multiple_of(3) {
                0
            } else {
                state % 50
            }
        })
        .collect();
    OrbitTransitionMatrix::from_parts(GraphletSize::Four, counts, vec![0; 11], 1).unwrap()
}

#[test]
fn ota_matrix_matches_formula() {
    let nets: Vec<_> = (1..=3).map(random_counts).collect();
    let names = vec!["x".to_string(), "y".into(), "z".into()];
    let sim = ota_matrix(names, &nets, &AgreementConfig::default()).unwrap();

    // reference: normalize rows, min-max per cell, mean of 1 - |diff|
    let norm: Vec<Vec<f64>> = nets
        .iter()
        .map(|t| {
            let c = t.counts();
            let mut out = vec![0.0; 121];
            for a in 0..11 {
                let s: u64 = c[a * 11..a * 11 + 11].iter().sum();
                for b in 0..11 {
                    if s > 0 {
                        out[a * 11 + b] = c[a * 11 + b] as f64 / s as f64;
                    }
                }
            }
            out
        })
        .collect();
    let mut resc = vec![vec![0.0; 121]; 3];
    for c in 0..121 {
        let lo = norm.iter().map(|v| v[c]).fold(f64::MAX, f64::min);
        let hi = norm.iter().map(|v| v[c]).fold(f64::MIN, f64::max);
        for i in 0..3 {
            resc[i][c] = if hi > lo {
                (norm[i][c] - lo) / (hi - lo)
            } else {
                0.0
            };
        }
    }
    for i in 0..3 {
        for j in 0..3 {
            let want: f64 = (0..121)
                .map(|c| 1.0 - (resc[i][c] - resc[j][c]).abs())
                .sum::<f64>()
                / 121.0;
            assert!((sim.get(i, j) - want).abs() < 1e-12);
        }
    }
}

#[test]
fn duplicate_network_has_maximal_agreement() {
    let mut nets: Vec<_> = (10..14).map(random_counts).collect();
    nets.push(nets[1].clone());
    let names: Vec<String> = (0..5).map(|i| format!("n{i}")).collect();
    let sim = ota_matrix(names.clone(), &nets, &AgreementConfig::default()).unwrap();
    assert_eq!(sim.get(1, 4), 1.0);
    for j in 0..5 {
        assert!(sim.get(1, j) <= sim.get(1, 4));
    }

    // reordering the set permutes rows and columns
    let order = [3, 0, 4, 2, 1];
    let reordered: Vec<_> = order.iter().map(|&i| nets[i].clone()).collect();
    let renamed: Vec<String> = order.iter().map(|&i| names[i].clone()).collect();
    let sim2 = ota_matrix(renamed, &reordered, &AgreementConfig::default()).unwrap();
    for (a, &i) in order.iter().enumerate() {
        for (b, &j) in order.iter().enumerate() {
            assert!((sim2.get(a, b) - sim.get(i, j)).abs() < 1e-15);
        }
    }
}

#[test]
fn rescaled_cells_span_unit_interval() {
    let mats: Vec<NormalizedTransitionMatrix> =
        (20..26).map(|s| row_normalize(&random_counts(s))).collect();
    let r = relative_rescale(&mats).unwrap();
    for c in 0..121 {
        let vals: Vec<f64> = r.iter().map(|m| m.values()[c]).collect();
        let constant = mats.iter().all(|m| m.values()[c] == mats[0].values()[c]);
        if constant {
            assert!(vals.iter().all(|&v| v == 0.0));
        } else {
            assert!(vals.contains(&0.0) && vals.contains(&1.0));
        }
    }
    assert_eq!(relative_rescale(&r).unwrap(), r);
}

#[test]
fn fingerprint_distance_matches_formula() {
    let a = MotifFingerprint::from_counts(&[5, 9, 1, 0, 3, 7], &[4.0, 9.5, 2.5, 1.0, 0.5, 2.0])
        .unwrap();
    let b = MotifFingerprint::from_counts(&[8, 2, 4, 4, 0, 1], &[3.0, 4.0, 4.0, 1.5, 2.0, 0.1])
        .unwrap();
    let want = a
        .scores()
        .iter()
        .zip(b.scores())
        .map(|(x, y)| (x - y).powi(2))
        .sum::<f64>()
        .sqrt();
    assert!((fingerprint_distance(&a, &b).unwrap() - want).abs() < 1e-15);
}

/// Agglomeration that recomputes linkage from member sets at every step.
fn reference_merges(d: &[Vec<f64>], linkage: Linkage) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut clusters: Vec<Vec<usize>> = (0..d.len()).map(|i| vec![i]).collect();
    let mut out = Vec::new();
    while clusters.len() > 1 {
        let link = |a: &[usize], b: &[usize]| {
            let all = a.iter().flat_map(|&i| b.iter().map(move |&j| (i, j)));
            match linkage {
                Linkage::Single => all.map(|(i, j)| d[i][j]).fold(f64::MAX, f64::min),
                Linkage::Complete => all.map(|(i, j)| d[i][j]).fold(f64::MIN, f64::max),
                Linkage::Average => {
                    all.map(|(i, j)| d[i][j]).sum::<f64>() / (a.len() * b.len()) as f64
                }
            }
        };
        let mut best = (0, 1, f64::MAX);
        for i in 0..clusters.len() {
            for j in (i + 1)..clusters.len() {
                let l = link(&clusters[i], &clusters[j]);
                if l < best.2 {
                    best = (i, j, l);
                }
            }
        }
        let b = clusters.remove(best.1);
        let a = clusters.remove(best.0);
        out.push((a.clone(), b.clone()));
        let mut merged = a;
        merged.extend(b);
        merged.sort_unstable();
        clusters.push(merged);
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn ota_and_gda_properties(s1 in any::<u64>(), s2 in any::<u64>(), s3 in any::<u64>()) {
        let nets = vec![random_counts(s1), random_counts(s2), random_counts(s3)];
        let sim = ota_matrix(vec!["a".into(), "b".into(), "c".into()], &nets, &AgreementConfig::default()).unwrap();
        for i in 0..3 {
            prop_assert!((sim.get(i, i) - 1.0).abs() < 1e-9);
            for j in 0..3 {
                prop_assert_eq!(sim.get(i, j), sim.get(j, i));
                prop_assert!(sim.get(i, j) >= -1e-9 && sim.get(i, j) <= 1.0 + 1e-9);
            }
        }
        let g = lcg_graph(12, 0.3, s1 % 1000);
        let h = lcg_graph(12, 0.3, s2 % 1000);
        let gg = compute_gdd(&compute_orbit_frequencies(&g, GraphletSize::Four));
        let gh = compute_gdd(&compute_orbit_frequencies(&h, GraphletSize::Four));
        let ab = gda_pair(&gg, &gh, GddScaling::InverseK).unwrap();
        prop_assert_eq!(ab, gda_pair(&gh, &gg, GddScaling::InverseK).unwrap());
        prop_assert!((0.0..=1.0).contains(&ab));
        prop_assert_eq!(gda_pair(&gg, &gg, GddScaling::Plain).unwrap(), 1.0);
    }

    #[test]
    fn clustering_matches_reference(values in prop::collection::vec(0.0f64..1.0, 28), linkage in 0usize..3) {
        // distinct random distances make the merge order unique
        let n = 8;
        let mut d = vec![vec![0.0; n]; n];
        let mut it = values.into_iter();
        for i in 0..n {
            for j in (i + 1)..n {
                let v = it.next().unwrap();
                d[i][j] = v;
                d[j][i] = v;
            }
        }
        let linkage = [Linkage::Average, Linkage::Single, Linkage::Complete][linkage];
        let names: Vec<String> = (0..n).map(|i| format!("net{i}")).collect();
        let sim = SimilarityMatrix::new(names, d.iter().flatten().copied().collect(), SimilarityKind::MotifDistance).unwrap();
        let tree = hierarchical_cluster(&sim, linkage).unwrap();
        let want = reference_merges(&d, linkage);
        for (m, (a, b)) in tree.merges().iter().zip(want) {
            let mut got = [tree.members(m.left), tree.members(m.right)];
            got.sort();
            let mut exp = [a, b];
            exp.sort();
            prop_assert_eq!(got, exp);
        }
    }

    #[test]
    fn clustering_invariant_under_permutation(
        values in prop::collection::vec(0.0f64..1.0, 15),
        perm in Just((0..6usize).collect::<Vec<_>>()).prop_shuffle(),
    ) {
        let n = 6;
        let mut d = vec![vec![0.0; n]; n];
        let mut it = values.into_iter();
        for i in 0..n {
            for j in (i + 1)..n {
                let v = it.next().unwrap();
                d[i][j] = v;
                d[j][i] = v;
            }
        }
        let names: Vec<String> = (0..n).map(|i| format!("net{i}")).collect();
        let sim = SimilarityMatrix::new(names.clone(), d.iter().flatten().copied().collect(), SimilarityKind::MotifDistance).unwrap();
        let pnames: Vec<String> = perm.iter().map(|&i| names[i].clone()).collect();
        let pvals: Vec<f64> = perm.iter().flat_map(|&i| perm.iter().map(move |&j| (i, j))).map(|(i, j)| d[i][j]).collect();
        let psim = SimilarityMatrix::new(pnames, pvals, SimilarityKind::MotifDistance).unwrap();
        let (t1, t2) = (hierarchical_cluster(&sim, Linkage::Average).unwrap(), hierarchical_cluster(&psim, Linkage::Average).unwrap());
        for (a, b) in t1.merges().iter().zip(t2.merges()) {
            let label = |t: &orbitrans::metrics::MergeTree, id| {
                let mut v: Vec<String> = t.members(id).into_iter().map(|i| t.names()[i].clone()).collect();
                v.sort();
                v
            };
            prop_assert_eq!(label(&t1, a.left), label(&t2, b.left));
            prop_assert_eq!(label(&t1, a.right), label(&t2, b.right));
            prop_assert!((a.height - b.height).abs() < 1e-12);
        }
    }
}
