//! Isomorph-free generation of connected graphs with a given order,
//! cyclomatic number and degree cap.
//!
//! Graphs grow one edge at a time from the edgeless graph. Each level is
//! deduplicated by canonical form before being extended. A partial graph is
//! dropped once it cannot become connected with the edges that remain
//! (`components − 1 > remaining`) or when an endpoint would exceed the cap.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{CanonicalForm, Dense, DEFAULT_CANON_LIMIT};
use crate::error::{domain, Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::indices::{evaluate_index, EdgeWeight, BOUND_TOLERANCE};

/// Environment variable overriding both desk-scale limits.
pub const MAX_N_ENV: &str = "DSO_MAX_N";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DegreeCap {
    AtMost(usize),
    Unbounded,
}

impl DegreeCap {
    fn effective(self, n: usize) -> usize {
        let complete = n.saturating_sub(1);
        match self {
            DegreeCap::AtMost(d) => d.min(complete),
            DegreeCap::Unbounded => complete,
        }
    }
}

impl fmt::Display for DegreeCap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegreeCap::AtMost(d) => write!(f, "{d}"),
            DegreeCap::Unbounded => f.write_str("unbounded"),
        }
    }
}

impl Serialize for DegreeCap {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            DegreeCap::AtMost(d) => s.serialize_u64(*d as u64),
            DegreeCap::Unbounded => s.serialize_str("unbounded"),
        }
    }
}

impl<'de> Deserialize<'de> for DegreeCap {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(usize),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(v) => Ok(DegreeCap::AtMost(v)),
            Raw::Text(t) if t == "unbounded" => Ok(DegreeCap::Unbounded),
            Raw::Text(t) => Err(serde::de::Error::custom(format!("bad max_degree {t:?}"))),
        }
    }
}

/// One enumeration/verification problem: order, cyclomatic number, cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InstanceParams {
    pub n: usize,
    pub ell: usize,
    pub max_degree: DegreeCap,
}

impl InstanceParams {
    pub fn new(n: usize, ell: usize, max_degree: DegreeCap) -> Self {
        InstanceParams { n, ell, max_degree }
    }

    /// Molecular instance: degree cap 4.
    pub fn molecular(n: usize, ell: usize) -> Self {
        Self::new(n, ell, DegreeCap::AtMost(4))
    }

    pub fn unbounded(n: usize, ell: usize) -> Self {
        Self::new(n, ell, DegreeCap::Unbounded)
    }

    /// `n + ℓ − 1`: edges of any connected graph in the instance.
    pub fn edge_budget(&self) -> usize {
        (self.n + self.ell).saturating_sub(1)
    }

    /// The edge budget fits in a simple graph with the degree cap.
    pub fn is_feasible(&self) -> bool {
        self.n >= 1 && 2 * self.edge_budget() <= self.n * self.max_degree.effective(self.n)
    }
}

/// Largest `n` the enumerator accepts, per cap kind.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub bounded_max_n: usize,
    pub unbounded_max_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            bounded_max_n: 11,
            unbounded_max_n: 10,
        }
    }
}

impl Limits {
    /// Defaults, with both limits replaced by `DSO_MAX_N` when it is set to
    /// an integer. Never above the canonicalization limit.
    pub fn from_env() -> Self {
        match std::env::var(MAX_N_ENV).ok().and_then(|v| v.trim().parse::<usize>().ok()) {
            Some(n) => {
                let n = n.min(DEFAULT_CANON_LIMIT);
                Limits {
                    bounded_max_n: n,
                    unbounded_max_n: n,
                }
            }
            None => Limits::default(),
        }
    }

    pub fn limit_for(&self, params: &InstanceParams) -> usize {
        match params.max_degree {
            DegreeCap::AtMost(_) => self.bounded_max_n,
            DegreeCap::Unbounded => self.unbounded_max_n,
        }
        .min(DEFAULT_CANON_LIMIT)
    }
}

/// One isomorphism class, held as its canonical representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumeratedGraph {
    pub form: CanonicalForm,
    pub graph: Graph,
}

impl EnumeratedGraph {
    pub fn graph6(&self) -> &str {
        self.form.as_graph6()
    }
}

#[derive(Clone, Debug)]
pub struct EnumerationResult {
    pub params: InstanceParams,
    /// Set when the edge budget cannot fit; `graphs` is then empty.
    pub infeasible: bool,
    /// Sorted by canonical form.
    pub graphs: Vec<EnumeratedGraph>,
}

impl EnumerationResult {
    pub fn graph_count(&self) -> usize {
        self.graphs.len()
    }
}

pub fn enumerate(params: InstanceParams) -> Result<EnumerationResult> {
    enumerate_with_limits(params, Limits::default())
}

pub fn enumerate_with_limits(params: InstanceParams, limits: Limits) -> Result<EnumerationResult> {
    if let DegreeCap::AtMost(0) = params.max_degree {
        return domain("max_degree must be positive");
    }
    if !params.is_feasible() {
        return Ok(EnumerationResult {
            params,
            infeasible: true,
            graphs: Vec::new(),
        });
    }
    let limit = limits.limit_for(&params);
    if params.n > limit {
        return Err(Error::EnumerationLimitExceeded { n: params.n, limit });
    }

    let n = params.n;
    let cap = params.max_degree.effective(n);
    let budget = params.edge_budget();

    let mut level: Vec<(u128, Dense)> = vec![Dense::new(n).canonize_keyed()];
    for added in 1..=budget {
        let remaining = budget - added;
        let next = level
            .par_iter()
            .fold(HashMap::new, |mut acc: HashMap<u128, ()>, (_, g)| {
                for (u, v) in child_pairs(g, cap) {
                    let mut child = *g;
                    child.add_edge(u, v);
                    if child.component_count() - 1 > remaining {
                        continue;
                    }
                    acc.insert(child.canonize().0, ());
                }
                acc
            })
            .reduce(HashMap::new, |mut a, b| {
                a.extend(b);
                a
            });
        let mut keys: Vec<u128> = next.into_keys().collect();
        keys.sort_unstable();
        level = keys.into_iter().map(|k| (k, Dense::from_key(n, k))).collect();
    }

    let mut graphs: Vec<EnumeratedGraph> = level
        .into_iter()
        .map(|(_, d)| {
            let graph = d.to_graph();
            let form = CanonicalForm::from_canonical_graph6(graph6::encode(&graph));
            EnumeratedGraph { form, graph }
        })
        .collect();
    graphs.sort_by(|a, b| a.form.cmp(&b.form));
    Ok(EnumerationResult {
        params,
        infeasible: false,
        graphs,
    })
}

/// Non-edges that may be added without breaking the cap, one per orbit of
/// twin-class pairs. Swapping twins is an automorphism, so pairs that differ
/// only by twins give isomorphic children.
fn child_pairs(g: &Dense, cap: usize) -> Vec<(usize, usize)> {
    let n = g.n;
    let mut rep = [usize::MAX; 16];
    let mut second = [usize::MAX; 16];
    for v in 0..n {
        rep[v] = v;
        for u in 0..v {
            if g.adj[u] & !(1 << v) == g.adj[v] & !(1 << u) {
                rep[v] = rep[u];
                if second[rep[u]] == usize::MAX {
                    second[rep[u]] = v;
                }
                break;
            }
        }
    }
    let mut pairs = Vec::new();
    for u in 0..n {
        if g.degree(u) >= cap || rep[u] != u {
            continue;
        }
        for (v, &rv) in rep.iter().enumerate().skip(u + 1) {
            if g.has_edge(u, v) || g.degree(v) >= cap {
                continue;
            }
            let ok = if rv == u { second[u] == v } else { rv == v };
            if ok {
                pairs.push((u, v));
            }
        }
    }
    pairs
}

/// Least index value over an instance, with every graph attaining it.
#[derive(Clone, Debug)]
pub struct Minimum {
    pub minimum: f64,
    pub argmin: Vec<EnumeratedGraph>,
    pub enumeration: EnumerationResult,
}

impl Minimum {
    pub fn argmin_graph6(&self) -> Vec<String> {
        self.argmin.iter().map(|g| g.graph6().to_string()).collect()
    }
}

pub fn minimize_index(params: InstanceParams, w: &dyn EdgeWeight) -> Result<Minimum> {
    minimize_index_with_limits(params, w, Limits::default())
}

/// Argmin membership is `value <= minimum + 1e-9`.
pub fn minimize_index_with_limits(params: InstanceParams, w: &dyn EdgeWeight, limits: Limits) -> Result<Minimum> {
    let enumeration = enumerate_with_limits(params, limits)?;
    minimize_over(enumeration, w)
}

pub fn minimize_over(enumeration: EnumerationResult, w: &dyn EdgeWeight) -> Result<Minimum> {
    let values: Vec<f64> = enumeration.graphs.iter().map(|e| evaluate_index(&e.graph, w)).collect();
    let Some(minimum) = values.iter().copied().reduce(f64::min) else {
        return domain(format!(
            "instance n = {}, ell = {}, max_degree = {} contains no graphs",
            enumeration.params.n, enumeration.params.ell, enumeration.params.max_degree
        ));
    };
    let argmin = enumeration
        .graphs
        .iter()
        .zip(&values)
        .filter(|(_, &v)| v <= minimum + BOUND_TOLERANCE)
        .map(|(g, _)| g.clone())
        .collect();
    Ok(Minimum {
        minimum,
        argmin,
        enumeration,
    })
}
