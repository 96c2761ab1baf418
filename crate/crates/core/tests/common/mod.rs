//! Test-only oracles, kept independent of the library's enumerator and
//! canonical labeling.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use dso_core::Graph;
use rand::Rng;

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Labeled graphs on up to 7 vertices as bitmasks over the pair list.
pub struct NaiveGenerator {
    n: usize,
    pairs: Vec<(usize, usize)>,
    /// For each permutation, where every pair index goes.
    pair_maps: Vec<Vec<usize>>,
}

/// Classes found by the naive generator, keyed by the smallest image of
/// the pair bitmask under all vertex permutations.
pub struct NaiveClasses {
    pub labeled_count: usize,
    pub classes: BTreeSet<u32>,
}

impl NaiveGenerator {
    pub fn new(n: usize) -> Self {
        assert!(n <= 7, "naive generator is for n <= 7");
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let index = |u: usize, v: usize| pairs.iter().position(|&p| p == (u.min(v), u.max(v))).unwrap();
        let pair_maps = all_permutations(n)
            .into_iter()
            .map(|perm| pairs.iter().map(|&(u, v)| index(perm[u], perm[v])).collect())
            .collect();
        NaiveGenerator { n, pairs, pair_maps }
    }

    fn image(&self, mask: u32, map: &[usize]) -> u32 {
        let mut out = 0;
        let mut rest = mask;
        while rest != 0 {
            let e = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= 1 << map[e];
        }
        out
    }

    /// Smallest image of `mask` over every permutation.
    pub fn brute_key(&self, mask: u32) -> u32 {
        self.pair_maps.iter().map(|m| self.image(mask, m)).min().unwrap()
    }

    pub fn mask_of(&self, g: &Graph) -> u32 {
        g.edges()
            .iter()
            .map(|&e| 1u32 << self.pairs.iter().position(|&p| p == e).unwrap())
            .fold(0, |a, b| a | b)
    }

    fn accepts(&self, mask: u32, cap: usize) -> bool {
        let mut deg = [0usize; 8];
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        let mut comps = self.n;
        for (e, &(u, v)) in self.pairs.iter().enumerate() {
            if mask >> e & 1 == 1 {
                deg[u] += 1;
                deg[v] += 1;
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                if a != b {
                    parent[a] = b;
                    comps -= 1;
                }
            }
        }
        comps == 1 && deg[..self.n].iter().all(|&d| d <= cap)
    }

    /// Every labeled connected graph with `edges` edges and maximum degree
    /// at most `cap`, grouped into isomorphism classes by applying all
    /// permutations to each new representative.
    pub fn classes(&self, edges: usize, cap: usize) -> NaiveClasses {
        let total = self.pairs.len();
        let mut out = NaiveClasses {
            labeled_count: 0,
            classes: BTreeSet::new(),
        };
        if edges > total {
            return out;
        }
        let mut seen: HashSet<u32> = HashSet::new();
        let limit: u64 = 1u64 << total;
        let mut mask: u64 = if edges == 0 { 0 } else { (1u64 << edges) - 1 };
        loop {
            let m = mask as u32;
            if self.accepts(m, cap) {
                out.labeled_count += 1;
                if !seen.contains(&m) {
                    let mut key = u32::MAX;
                    for map in &self.pair_maps {
                        let img = self.image(m, map);
                        key = key.min(img);
                        seen.insert(img);
                    }
                    out.classes.insert(key);
                }
            }
            if mask == 0 {
                break;
            }
            // next mask with the same popcount
            let c = mask & mask.wrapping_neg();
            let r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
            if mask >= limit {
                break;
            }
        }
        out
    }
}

/// Erdős–Rényi style graph with a seeded generator.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Random connected graph: a random tree plus extra random edges.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, extra_p: f64) -> Graph {
    let mut edges = HashSet::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        edges.insert((u, v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(extra_p) {
                edges.insert((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Spanning-forest edge count by breadth-first search.
pub fn bfs_non_tree_edges(g: &Graph) -> usize {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut tree_edges = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    tree_edges += 1;
                    queue.push_back(w);
                }
            }
        }
    }
    g.size() - tree_edges
}
