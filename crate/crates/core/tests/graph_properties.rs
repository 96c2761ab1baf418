mod common;

use common::{bfs_non_tree_edges, random_connected_graph, random_graph, random_permutation};
use dso_core::canon::canonical_form;
use dso_core::constructors::{circulant, mobius_ladder, CirculantSpec};
use dso_core::indices::{evaluate_counts, evaluate_index, route_discrepancy, Weight, ROUTE_TOLERANCE};
use dso_core::Graph;
use num_rational::Ratio;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn cycle(n: usize) -> Graph {
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

fn disjoint(a: &Graph, b: &Graph) -> Graph {
    let shift = a.order();
    Graph::new(
        a.order() + b.order(),
        a.edges().iter().copied().chain(b.edges().iter().map(|&(u, v)| (u + shift, v + shift))),
    )
    .unwrap()
}

#[test]
fn canonical_form_invariant_under_relabeling() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..500 {
        let n = rng.gen_range(1..=8);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        let form = canonical_form(&g).unwrap();
        for _ in 0..100 {
            let h = g.relabel(&random_permutation(&mut rng, n)).unwrap();
            assert_eq!(canonical_form(&h).unwrap(), form, "{g:?}");
        }
    }
}

#[test]
fn canonical_form_separates_same_degree_sequences() {
    let prism = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]).unwrap();
    let k33 = Graph::new(6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v)))).unwrap();
    let spider_113 = Graph::new(6, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5)]).unwrap();
    let spider_122 = Graph::new(6, [(0, 1), (0, 2), (2, 3), (0, 4), (4, 5)]).unwrap();
    let cube = Graph::new(
        8,
        (0..8usize).flat_map(|u| (0..3).map(move |b| (u, u ^ (1 << b)))).filter(|&(u, v)| u < v),
    )
    .unwrap();
    let petersen = Graph::new(
        10,
        (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)]),
    )
    .unwrap();
    let pentagonal_prism = Graph::new(
        10,
        (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 1) % 5)]),
    )
    .unwrap();
    // the 4x4 rook's graph and the Shrikhande graph are both srg(16,6,2,2)
    let rook = Graph::new(
        16,
        (0..16usize).flat_map(|u| (u + 1..16).map(move |v| (u, v))).filter(|&(u, v)| u / 4 == v / 4 || u % 4 == v % 4),
    )
    .unwrap();
    let shrikhande = circulant_2d();

    let pairs = [
        (cycle(6), disjoint(&cycle(3), &cycle(3))),
        (prism, k33),
        (spider_113, spider_122),
        (cycle(8), disjoint(&cycle(4), &cycle(4))),
        (cycle(8), disjoint(&cycle(5), &cycle(3))),
        (cube, mobius_ladder(4).unwrap()),
        (petersen, pentagonal_prism),
        (rook, shrikhande),
    ];
    for (a, b) in pairs {
        assert_eq!(a.degree_profile().degree_counts, b.degree_profile().degree_counts);
        assert_ne!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap(), "{a:?} vs {b:?}");
    }
}

/// Cayley graph of Z4 x Z4 with connection set ±(1,0), ±(0,1), ±(1,1).
fn circulant_2d() -> Graph {
    let id = |x: usize, y: usize| 4 * (x % 4) + y % 4;
    let mut edges = Vec::new();
    for x in 0..4 {
        for y in 0..4 {
            for (dx, dy) in [(1, 0), (0, 1), (1, 1)] {
                let (u, v) = (id(x, y), id(x + dx, y + dy));
                edges.push((u.min(v), u.max(v)));
            }
        }
    }
    Graph::new(16, edges).unwrap()
}

#[test]
fn handshake_and_census_identities() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..300 {
        let n = rng.gen_range(1..=12);
        let p = rng.gen_range(0.0..1.0);
        let g = random_graph(&mut rng, n, p);
        let profile = g.degree_profile();
        assert_eq!(profile.degree_sum(), 2 * g.size());
        let counts = g.edge_type_counts();
        assert_eq!(counts.total() as usize, g.size());
        if profile.min_degree > 0 {
            assert_eq!(counts.vertex_sum(), Ratio::from_integer(n as i64));
        }
    }
}

#[test]
fn cyclomatic_matches_bfs_forest() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let n = rng.gen_range(1..=14);
        let p = rng.gen_range(0.0..0.6);
        let g = random_graph(&mut rng, n, p);
        assert_eq!(g.cyclomatic_number(), bfs_non_tree_edges(&g));
    }
}

#[test]
fn index_routes_agree_on_random_connected_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(1000);
    for _ in 0..1000 {
        let n = rng.gen_range(2..=10);
        let p = rng.gen_range(0.0..0.7);
        let g = random_connected_graph(&mut rng, n, p);
        for w in [Weight::Dso, Weight::Sombor] {
            assert!(route_discrepancy(&g, &w) <= ROUTE_TOLERANCE);
            let direct = evaluate_index(&g, &w);
            let census = evaluate_counts(&g.edge_type_counts(), &w);
            assert!((direct - census).abs() <= ROUTE_TOLERANCE * direct.abs());
        }
    }
}

#[test]
fn circulant_regularity_and_connectivity() {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 { a } else { gcd(b, a % b) }
    }
    for r in 2..=20usize {
        let half = r / 2;
        for subset in 1u32..(1 << half) {
            let offsets: Vec<usize> = (1..=half).filter(|a| subset >> (a - 1) & 1 == 1).collect();
            let g = circulant(&CirculantSpec::new(r, offsets.clone()).unwrap());
            let last = *offsets.last().unwrap();
            if 2 * last < r {
                let p = g.degree_profile();
                assert!(p.is_regular() && p.max_degree == 2 * offsets.len(), "C({r};{offsets:?})");
            }
            let g_all = offsets.iter().fold(r, |acc, &a| gcd(acc, a));
            assert_eq!(g.is_connected(), g_all == 1, "C({r};{offsets:?})");
        }
    }
}

proptest! {
    #[test]
    fn relabeling_preserves_every_query(n in 1usize..9, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, n, 0.4);
        let h = g.relabel(&random_permutation(&mut rng, n)).unwrap();
        prop_assert_eq!(g.edge_type_counts(), h.edge_type_counts());
        prop_assert_eq!(g.cyclomatic_number(), h.cyclomatic_number());
        prop_assert_eq!(g.is_connected(), h.is_connected());
        prop_assert!((evaluate_index(&g, &Weight::Dso) - evaluate_index(&h, &Weight::Dso)).abs() < 1e-12);
    }
}
