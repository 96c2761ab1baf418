//! Named graph families: circulants, Möbius ladders, the degree-4 gadget
//! with one degree-2 vertex, and the DSO-extremal graphs.

use crate::error::{domain, Error, Result};
use crate::graph::Graph;

/// Parameters of the circulant `C(r; a₁, …, a_k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CirculantSpec {
    r: usize,
    offsets: Vec<usize>,
}

impl CirculantSpec {
    /// Requires `1 <= a₁ < … < a_k <= ⌊r/2⌋`.
    pub fn new(r: usize, offsets: Vec<usize>) -> Result<Self> {
        if r == 0 {
            return domain("circulant order r must be positive");
        }
        if offsets.is_empty() {
            return domain("circulant needs at least one offset");
        }
        if offsets[0] < 1 {
            return domain("circulant offsets must satisfy a_1 >= 1");
        }
        if offsets.windows(2).any(|w| w[0] >= w[1]) {
            return domain("circulant offsets must be strictly increasing");
        }
        let last = *offsets.last().unwrap();
        if last > r / 2 {
            return domain(format!("circulant offsets must satisfy a_k <= floor(r/2) = {}, got {last}", r / 2));
        }
        Ok(CirculantSpec { r, offsets })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }
}

/// Edges `{i, i+a mod r}` for every vertex and offset. An offset of exactly
/// `r/2` contributes each of its edges once, so the result stays simple.
pub fn circulant(spec: &CirculantSpec) -> Graph {
    let r = spec.r;
    let mut edges: Vec<(usize, usize)> = spec
        .offsets
        .iter()
        .flat_map(|&a| (0..r).map(move |i| (i, (i + a) % r)))
        .map(|(u, v)| (u.min(v), u.max(v)))
        .collect();
    edges.sort_unstable();
    edges.dedup();
    Graph::from_sorted(r, edges)
}

/// Möbius ladder `C(2k; 1, k)`: connected and cubic.
pub fn mobius_ladder(k: usize) -> Result<Graph> {
    if k < 2 {
        return domain(format!("Möbius ladder needs k >= 2, got k = {k}"));
    }
    Ok(circulant(&CirculantSpec::new(2 * k, vec![1, k])?))
}

/// `C(ℓ−1; 1, 2)` with the edge `{0,1}` replaced by a path `0 – x – 1`
/// through a new vertex `x = ℓ−1`. Order ℓ, degree sequence `4^{ℓ−1} 2`.
pub fn c_star(ell: usize) -> Result<Graph> {
    if ell < 6 {
        return domain(format!("c_star needs ell >= 6, got ell = {ell}"));
    }
    let base = circulant(&CirculantSpec::new(ell - 1, vec![1, 2])?);
    let x = ell - 1;
    base.without_edge(0, 1)?.extended(1, [(0, x), (x, 1)])
}

fn check_extremal_params(n: usize, ell: usize) -> Result<()> {
    if ell < 3 {
        return domain(format!("2(ell-1) >= 4 requires ell >= 3, got ell = {ell}"));
    }
    if n < 2 * (ell - 1) {
        return domain(format!("n >= 2(ell-1) requires n >= {}, got n = {n}", 2 * (ell - 1)));
    }
    Ok(())
}

/// A witness attaining the minimum DSO among molecular graphs with order
/// `n` and cyclomatic number `ℓ`.
///
/// For `n = 2(ℓ−1)` this is the Möbius ladder on `n` vertices. Otherwise
/// the ladder loses its edge `{0,1}` and 0 and 1 are rejoined through a path
/// of `n − 2(ℓ−1)` new degree-2 vertices, giving the census
/// `m₂,₂ = n−2ℓ+1`, `m₂,₃ = 2`, `m₃,₃ = 3ℓ−4`.
pub fn extremal_graph(n: usize, ell: usize) -> Result<Graph> {
    check_extremal_params(n, ell)?;
    let ladder = mobius_ladder(ell - 1)?;
    let base = ladder.order();
    let extra = n - base;
    if extra == 0 {
        return Ok(ladder);
    }
    let path = std::iter::once(0)
        .chain(base..base + extra)
        .chain(std::iter::once(1))
        .collect::<Vec<_>>();
    ladder
        .without_edge(0, 1)?
        .extended(extra, path.windows(2).map(|w| (w[0], w[1])))
}

/// The hypothetical minimizer ruled out in the pendant-path argument:
/// `c_star(ℓ)` whose degree-2 vertex `w` grows a pendant path of `n − ℓ`
/// new vertices, so `w` has degree 3 with two degree-4 neighbours.
///
/// Census: `m₁,₂ = 1`, `m₂,₃ = 1`, `m₃,₄ = 2`, `m₄,₄ = 2ℓ−3`,
/// `m₂,₂ = n−ℓ−2`.
pub fn claim1_case22_graph(n: usize, ell: usize) -> Result<Graph> {
    if ell < 6 {
        return domain(format!("claim1_case22_graph needs ell >= 6, got ell = {ell}"));
    }
    if n < ell + 3 {
        return domain(format!("claim1_case22_graph needs n >= ell + 3 = {}, got n = {n}", ell + 3));
    }
    let gadget = c_star(ell)?;
    let w = ell - 1;
    let extra = n - ell;
    let path = std::iter::once(w).chain(ell..ell + extra).collect::<Vec<_>>();
    gadget.extended(extra, path.windows(2).map(|p| (p[0], p[1])))
}

/// Two disjoint cycles `C_a` and `C_b` joined by two edges so that a
/// quadrangle appears: `{0, a}` and `{1, a+1}`.
pub fn quadrangle_linked_cycles(a: usize, b: usize) -> Result<Graph> {
    if a < 3 || b < 3 {
        return Err(Error::Domain(format!("cycle lengths must be >= 3, got ({a}, {b})")));
    }
    let first = (0..a).map(|i| (i, (i + 1) % a));
    let second = (0..b).map(|i| (a + i, a + (i + 1) % b));
    Graph::new(a + b, first.chain(second).chain([(0, a), (1, a + 1)]))
}
