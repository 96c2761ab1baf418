mod common;

use std::collections::BTreeSet;

use common::NaiveGenerator;
use dso_core::enumerator::{enumerate, DegreeCap, InstanceParams};

fn compare(n: usize, ell: usize, cap: DegreeCap, naive: &NaiveGenerator) -> usize {
    let params = InstanceParams::new(n, ell, cap);
    let result = enumerate(params).unwrap();
    let cap_value = match cap {
        DegreeCap::AtMost(d) => d,
        DegreeCap::Unbounded => n,
    };
    let oracle = naive.classes(params.edge_budget(), cap_value);
    let ours: BTreeSet<u32> = result
        .graphs
        .iter()
        .map(|e| naive.brute_key(naive.mask_of(&e.graph)))
        .collect();
    assert_eq!(ours.len(), result.graph_count(), "duplicate class at ({n},{ell},{cap})");
    assert_eq!(ours, oracle.classes, "class sets differ at ({n},{ell},{cap})");
    result.graph_count()
}

#[test]
fn small_orders_match_naive_generator() {
    for n in 1..=6 {
        let naive = NaiveGenerator::new(n);
        let max_ell = (n * (n - 1) / 2 + 1).saturating_sub(n);
        for ell in 0..=max_ell + 1 {
            for cap in [DegreeCap::AtMost(2), DegreeCap::AtMost(3), DegreeCap::AtMost(4), DegreeCap::Unbounded] {
                compare(n, ell, cap, &naive);
            }
        }
    }
}

#[test]
fn pinned_counts() {
    // frozen from the naive generator
    let naive = NaiveGenerator::new(6);
    assert_eq!(compare(6, 3, DegreeCap::AtMost(4), &naive), N_6_3);
    assert_eq!(compare(6, 2, DegreeCap::AtMost(4), &naive), N_6_2);
    // connected graphs on six vertices with eight edges, any degree
    assert_eq!(compare(6, 3, DegreeCap::Unbounded, &naive), 22);
}

const N_6_3: usize = 18;
const N_6_2: usize = 17;

#[test]
fn minimum_at_six_two() {
    use dso_core::indices::Weight;
    use dso_core::{minimize_index, EdgeTypeCounts};
    // theta graphs whose two branch vertices are adjacent: one (3,3) edge,
    // four (2,3) edges, two (2,2) edges
    let expected = 3.0 / 2f64.sqrt() + 4.0 * 13f64.sqrt() / 5.0;
    let m = minimize_index(InstanceParams::molecular(6, 2), &Weight::Dso).unwrap();
    assert!((m.minimum - expected).abs() < 1e-9);
    assert_eq!(m.argmin_graph6(), vec!["EKNG", "E`NG", "EoLW"]);
    let census = EdgeTypeCounts::from_pairs([((2, 2), 2), ((2, 3), 4), ((3, 3), 1)]);
    assert!(m.argmin.iter().all(|g| g.graph.edge_type_counts() == census));
}

#[test]
fn minimum_at_ten_three() {
    use dso_core::indices::{paper_bound, Weight};
    use dso_core::minimize_index;
    let m = minimize_index(InstanceParams::molecular(10, 3), &Weight::Dso).unwrap();
    assert!((m.minimum - paper_bound(10, 3).unwrap()).abs() < 1e-9);
    assert!((m.minimum - 8.5132883).abs() < 1e-7);
}
