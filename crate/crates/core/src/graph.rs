//! Immutable simple undirected graphs and the degree-based queries every
//! other module builds on.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..order`.
///
/// Edges are kept as `(min, max)` pairs in lexicographic order, so iteration
/// is deterministic regardless of how the graph was built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, repeated edges and out-of-range
    /// endpoints.
    pub fn new<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut normalized = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if u >= order || v >= order {
                return Err(Error::VertexOutOfRange {
                    vertex: u.max(v),
                    order,
                });
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted(order, normalized))
    }

    /// Edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Self {
        Self::from_sorted(order, Vec::new())
    }

    pub(crate) fn from_sorted(order: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adjacency = vec![Vec::new(); order];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph {
            order,
            edges,
            adjacency,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Returns a copy with `edge` removed, or an error if it is absent.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let key = (u.min(v), u.max(v));
        let pos = self
            .edges
            .binary_search(&key)
            .map_err(|_| Error::MissingEdge(key.0, key.1))?;
        let mut edges = self.edges.clone();
        edges.remove(pos);
        Ok(Self::from_sorted(self.order, edges))
    }

    /// Appends `extra` fresh vertices and the given edges.
    pub fn extended<I>(&self, extra: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Graph::new(
            self.order + extra,
            self.edges.iter().copied().chain(edges),
        )
    }

    /// Applies `perm`, where vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.order {
            return Err(Error::InvalidPermutation);
        }
        let mut seen = vec![false; self.order];
        for &p in perm {
            if p >= self.order || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidPermutation);
            }
        }
        Graph::new(
            self.order,
            self.edges.iter().map(|&(u, v)| (perm[u], perm[v])),
        )
    }

    /// Number of connected components. The empty-order graph has none.
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.order];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for start in 0..self.order {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        count
    }

    /// True iff every vertex is reachable from vertex 0.
    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// `|E| - |V| + c`, the minimum number of edges whose removal leaves a
    /// forest.
    pub fn cyclomatic_number(&self) -> usize {
        self.size() + self.component_count() - self.order
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        DegreeProfile::new(self.adjacency.iter().map(Vec::len).collect())
    }

    pub fn edge_type_counts(&self) -> EdgeTypeCounts {
        let mut counts = BTreeMap::new();
        for &(u, v) in &self.edges {
            *counts
                .entry(EdgeType::new(self.degree(u), self.degree(v)))
                .or_insert(0) += 1;
        }
        EdgeTypeCounts { counts }
    }

    /// Molecular graph: connected with maximum degree at most 4.
    pub fn is_molecular(&self) -> bool {
        self.is_connected() && self.adjacency.iter().all(|a| a.len() <= 4)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, E={:?})", self.order, self.edges)
    }
}

/// Degrees of every vertex plus the summary statistics derived from them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub max_degree: usize,
    pub min_degree: usize,
    /// degree -> number of vertices with that degree
    pub degree_counts: BTreeMap<usize, usize>,
}

impl DegreeProfile {
    fn new(degrees: Vec<usize>) -> Self {
        let mut degree_counts = BTreeMap::new();
        for &d in &degrees {
            *degree_counts.entry(d).or_insert(0) += 1;
        }
        DegreeProfile {
            max_degree: degrees.iter().copied().max().unwrap_or(0),
            min_degree: degrees.iter().copied().min().unwrap_or(0),
            degrees,
            degree_counts,
        }
    }

    pub fn count_of(&self, degree: usize) -> usize {
        self.degree_counts.get(&degree).copied().unwrap_or(0)
    }

    pub fn degree_sum(&self) -> usize {
        self.degrees.iter().sum()
    }

    pub fn is_regular(&self) -> bool {
        self.max_degree == self.min_degree
    }

    pub fn is_pendant(&self, v: usize) -> bool {
        self.degrees[v] == 1
    }

    pub fn is_branching(&self, v: usize) -> bool {
        self.degrees[v] >= 3
    }

    /// Compact degree sequence such as `4^5 2^1`, highest degree first.
    pub fn sequence_string(&self) -> String {
        self.degree_counts
            .iter()
            .rev()
            .map(|(d, c)| format!("{d}^{c}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Unordered pair of endpoint degrees, stored with `low <= high`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeType {
    pub low: usize,
    pub high: usize,
}

impl EdgeType {
    pub fn new(i: usize, j: usize) -> Self {
        EdgeType {
            low: i.min(j),
            high: i.max(j),
        }
    }

    /// `1/i + 1/j`: the share of vertices an edge of this type accounts for.
    pub fn vertex_share(&self) -> Ratio<i64> {
        Ratio::new(1, self.low as i64) + Ratio::new(1, self.high as i64)
    }

    /// The three types that the closed-form solve keeps explicit:
    /// (2,2), (2,3) and (3,3).
    pub fn is_low_cubic(&self) -> bool {
        matches!((self.low, self.high), (2, 2) | (2, 3) | (3, 3))
    }

    /// Membership in the molecular index set: `1 <= i <= j <= 4` without
    /// (1,1) and (1,2).
    pub fn in_molecular_set(&self) -> bool {
        self.low >= 1 && self.high <= 4 && !matches!((self.low, self.high), (1, 1) | (1, 2))
    }

    /// Molecular index set minus the low-cubic types.
    pub fn in_molecular_residual(&self) -> bool {
        self.in_molecular_set() && !self.is_low_cubic()
    }

    /// Same as [`Self::in_molecular_residual`] with the degree cap lifted.
    pub fn in_unbounded_residual(&self) -> bool {
        self.low >= 1 && !matches!((self.low, self.high), (1, 1) | (1, 2)) && !self.is_low_cubic()
    }
}

impl fmt::Display for EdgeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m[{},{}]", self.low, self.high)
    }
}

/// The census `{m_{i,j}}` of edges by endpoint degrees.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeTypeCounts {
    counts: BTreeMap<EdgeType, u64>,
}

impl EdgeTypeCounts {
    pub fn from_pairs<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = ((usize, usize), u64)>,
    {
        let mut counts = BTreeMap::new();
        for ((i, j), m) in pairs {
            if m > 0 {
                *counts.entry(EdgeType::new(i, j)).or_insert(0) += m;
            }
        }
        EdgeTypeCounts { counts }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.counts.get(&EdgeType::new(i, j)).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (EdgeType, u64)> + '_ {
        self.counts.iter().map(|(t, m)| (*t, *m))
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// `Σ (1/i + 1/j) m_{i,j}`, exact. Equals the order for graphs without
    /// isolated vertices.
    pub fn vertex_sum(&self) -> Ratio<i64> {
        self.iter()
            .map(|(t, m)| t.vertex_share() * Ratio::from_integer(m as i64))
            .sum()
    }

    /// Everything except the (2,2), (2,3), (3,3) entries.
    pub fn residual(&self) -> EdgeTypeCounts {
        EdgeTypeCounts {
            counts: self
                .counts
                .iter()
                .filter(|(t, _)| !t.is_low_cubic())
                .map(|(t, m)| (*t, *m))
                .collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }
}

impl fmt::Display for EdgeTypeCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(t, m)| format!("{t}={m}")).collect();
        f.write_str(&parts.join(" "))
    }
}
