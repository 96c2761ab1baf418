//! Canonical labeling for small graphs.
//!
//! Equitable refinement of an ordered partition, then individualization of
//! each vertex in the first smallest non-singleton cell, recursively. Every
//! leaf of that search tree is a labeling; the canonical one is the leaf
//! whose column-wise upper-triangle adjacency bitstring is smallest. The
//! tree depends only on graph structure, so isomorphic graphs yield the same
//! minimum. Twins (vertices with equal neighbourhoods apart from each other)
//! are interchangeable by an automorphism that fixes the current prefix, so
//! only one vertex per twin class is individualized at each node.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;

pub const DEFAULT_CANON_LIMIT: usize = 16;
const MAX_DENSE: usize = 16;

/// Isomorphism-class identifier: the graph6 bytes of the canonically
/// relabeled graph. Orders like the graph6 strings themselves.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    bytes: Vec<u8>,
}

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn as_graph6(&self) -> &str {
        // graph6 output is always ASCII
        std::str::from_utf8(&self.bytes).expect("graph6 is ASCII")
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> Graph {
        graph6::decode(self.as_graph6()).expect("canonical form holds valid graph6")
    }

    /// Wraps the graph6 string of a graph that is already canonically
    /// labeled.
    pub(crate) fn from_canonical_graph6(s: String) -> Self {
        CanonicalForm { bytes: s.into_bytes() }
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.as_graph6())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_graph6())
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_form_with_limit(g, DEFAULT_CANON_LIMIT)
}

pub fn canonical_form_with_limit(g: &Graph, limit: usize) -> Result<CanonicalForm> {
    let graph = canonical_graph_with_limit(g, limit)?;
    Ok(CanonicalForm {
        bytes: graph6::encode(&graph).into_bytes(),
    })
}

/// `perm[v]` is the canonical label of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>> {
    let dense = Dense::from_graph(g, DEFAULT_CANON_LIMIT)?;
    let (_, order) = dense.canonize();
    let mut perm = vec![0; g.order()];
    for (label, &v) in order[..g.order()].iter().enumerate() {
        perm[v as usize] = label;
    }
    Ok(perm)
}

pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    canonical_graph_with_limit(g, DEFAULT_CANON_LIMIT)
}

fn canonical_graph_with_limit(g: &Graph, limit: usize) -> Result<Graph> {
    let dense = Dense::from_graph(g, limit)?;
    let (key, _) = dense.canonize();
    Ok(Dense::from_key(dense.n, key).to_graph())
}

/// Bitmask adjacency for graphs of order at most 16.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Dense {
    pub n: usize,
    pub adj: [u16; MAX_DENSE],
}

/// Ordered partition: `order` lists vertices, bit `p` of `starts` marks a
/// cell beginning at position `p`.
#[derive(Clone, Copy)]
struct Partition {
    order: [u8; MAX_DENSE],
    starts: u32,
}

impl Partition {
    fn cell_end(&self, start: usize, n: usize) -> usize {
        let rest = self.starts >> (start + 1);
        if rest == 0 {
            n
        } else {
            start + 1 + rest.trailing_zeros() as usize
        }
    }

    fn is_discrete(&self, n: usize) -> bool {
        self.starts.count_ones() as usize == n
    }
}

impl Dense {
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_DENSE);
        Dense {
            n,
            adj: [0; MAX_DENSE],
        }
    }

    pub fn from_graph(g: &Graph, limit: usize) -> Result<Self> {
        let limit = limit.min(MAX_DENSE);
        if g.order() > limit {
            return Err(Error::CanonLimitExceeded {
                order: g.order(),
                limit,
            });
        }
        let mut d = Dense::new(g.order());
        for &(u, v) in g.edges() {
            d.add_edge(u, v);
        }
        Ok(d)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[cfg(test)]
    pub fn edge_count(&self) -> usize {
        self.adj[..self.n].iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn component_count(&self) -> usize {
        let all: u32 = if self.n == 0 { 0 } else { (1u32 << self.n) - 1 };
        let mut unseen = all;
        let mut count = 0;
        while unseen != 0 {
            count += 1;
            let start = unseen.trailing_zeros() as usize;
            let mut frontier = 1u32 << start;
            let mut reached = frontier;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[v] as u32 & !reached;
                reached |= fresh;
                frontier |= fresh;
            }
            unseen &= !reached;
        }
        count
    }

    pub fn to_graph(self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_sorted(self.n, edges)
    }

    /// Rebuilds a graph from a certificate produced by [`Dense::canonize`].
    pub fn from_key(n: usize, key: u128) -> Self {
        let mut d = Dense::new(n);
        let total = n * n.saturating_sub(1) / 2;
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if (key >> (total - 1 - k)) & 1 == 1 {
                    d.add_edge(i, j);
                }
                k += 1;
            }
        }
        d
    }

    /// Certificate together with the canonically relabeled graph.
    pub fn canonize_keyed(&self) -> (u128, Dense) {
        let (key, _) = self.canonize();
        (key, Dense::from_key(self.n, key))
    }

    /// Twin class representative (smallest member) of every vertex.
    fn twin_reps(&self) -> [u8; MAX_DENSE] {
        let mut rep = [0u8; MAX_DENSE];
        for v in 0..self.n {
            rep[v] = v as u8;
            for u in 0..v {
                let nu = self.adj[u] & !(1 << v);
                let nv = self.adj[v] & !(1 << u);
                if nu == nv {
                    rep[v] = rep[u];
                    break;
                }
            }
        }
        rep
    }

    fn certificate(&self, order: &[u8]) -> u128 {
        let mut key = 0u128;
        for j in 1..self.n {
            let row = self.adj[order[j] as usize];
            for &vi in &order[..j] {
                key = (key << 1) | (row >> vi & 1) as u128;
            }
        }
        key
    }

    fn refine(&self, p: &mut Partition) {
        let n = self.n;
        loop {
            let mut changed = false;
            let mut s = 0;
            while s < n {
                let s_end = p.cell_end(s, n);
                let mask = p.order[s..s_end].iter().fold(0u16, |m, &v| m | 1 << v);
                let mut c = 0;
                while c < n {
                    let e = p.cell_end(c, n);
                    if e - c > 1 && self.split_cell(p, c, e, mask) {
                        changed = true;
                    }
                    c = e;
                }
                s = p.cell_end(s, n);
            }
            if !changed {
                break;
            }
        }
    }

    fn split_cell(&self, p: &mut Partition, start: usize, end: usize, mask: u16) -> bool {
        let mut counts = [0u8; MAX_DENSE];
        let cell = &mut p.order[start..end];
        for (slot, &v) in counts.iter_mut().zip(cell.iter()) {
            *slot = (self.adj[v as usize] & mask).count_ones() as u8;
        }
        let counts = &mut counts[..end - start];
        if counts.iter().all(|&c| c == counts[0]) {
            return false;
        }
        // insertion sort on (count), keeping the pairs together
        for i in 1..cell.len() {
            let mut k = i;
            while k > 0 && counts[k - 1] > counts[k] {
                counts.swap(k - 1, k);
                cell.swap(k - 1, k);
                k -= 1;
            }
        }
        for i in 1..cell.len() {
            if counts[i] != counts[i - 1] {
                p.starts |= 1 << (start + i);
            }
        }
        true
    }

    /// Returns the smallest leaf certificate and the vertex order producing
    /// it (`order[label] = vertex`).
    pub fn canonize(&self) -> (u128, [u8; MAX_DENSE]) {
        let mut p = Partition {
            order: [0; MAX_DENSE],
            starts: 1,
        };
        for (i, slot) in p.order.iter_mut().enumerate() {
            *slot = i as u8;
        }
        if self.n == 0 {
            return (0, p.order);
        }
        self.refine(&mut p);
        let twins = self.twin_reps();
        let mut best = None;
        self.search(p, &twins, &mut best);
        best.expect("search visits at least one leaf")
    }

    fn search(&self, p: Partition, twins: &[u8; MAX_DENSE], best: &mut Option<(u128, [u8; MAX_DENSE])>) {
        let n = self.n;
        if p.is_discrete(n) {
            let key = self.certificate(&p.order[..n]);
            if best.is_none_or(|(b, _)| key < b) {
                *best = Some((key, p.order));
            }
            return;
        }
        let mut target = (usize::MAX, 0);
        let mut c = 0;
        while c < n {
            let e = p.cell_end(c, n);
            if e - c > 1 && e - c < target.0 {
                target = (e - c, c);
            }
            c = e;
        }
        let (size, start) = target;
        let mut tried: u32 = 0;
        for k in 0..size {
            let v = p.order[start + k];
            let class = twins[v as usize];
            if tried >> class & 1 == 1 {
                continue;
            }
            tried |= 1 << class;
            let mut child = p;
            child.order.swap(start, start + k);
            child.starts |= 1 << (start + 1);
            self.refine(&mut child);
            self.search(child, twins, best);
        }
    }
}
