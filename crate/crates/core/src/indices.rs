//! Degree-based edge weights, index evaluation, and the closed forms used to
//! bound the diminished Sombor index.

use std::f64::consts::SQRT_2;

use num_rational::Ratio;

use crate::error::{domain, Result};
use crate::graph::{EdgeTypeCounts, Graph};

/// Absolute tolerance for comparing index values against closed forms.
pub const BOUND_TOLERANCE: f64 = 1e-9;

/// Relative tolerance between the edge-sum and edge-type evaluation routes.
pub const ROUTE_TOLERANCE: f64 = 1e-12;

fn sqrt13() -> f64 {
    13f64.sqrt()
}

/// `2√13/5`, the weight of two (2,3) edges.
pub fn two_sqrt13_over_5() -> f64 {
    2.0 * sqrt13() / 5.0
}

/// `2√13/5 − √2`: the gap between [`paper_bound`] and [`regular_bound`].
pub fn bound_gap() -> f64 {
    two_sqrt13_over_5() - SQRT_2
}

/// A symmetric function of the two endpoint degrees of an edge.
pub trait EdgeWeight: Sync {
    fn weight(&self, i: usize, j: usize) -> f64;

    fn name(&self) -> &str;
}

/// The weights shipped with the crate. Other bond-incident-degree weights
/// plug in by implementing [`EdgeWeight`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Weight {
    /// `√(i²+j²)/(i+j)`
    Dso,
    /// `√(i²+j²)`
    Sombor,
    /// The residual weight `h(i,j)`, see [`h_weight`].
    H,
}

impl EdgeWeight for Weight {
    fn weight(&self, i: usize, j: usize) -> f64 {
        match self {
            Weight::Dso => dso(i, j),
            Weight::Sombor => sombor(i, j),
            Weight::H => h(i, j),
        }
    }

    fn name(&self) -> &str {
        match self {
            Weight::Dso => "dso",
            Weight::Sombor => "sombor",
            Weight::H => "h",
        }
    }
}

impl std::str::FromStr for Weight {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "dso" => Ok(Weight::Dso),
            "sombor" | "so" => Ok(Weight::Sombor),
            "h" => Ok(Weight::H),
            other => Err(format!("unknown index {other:?} (expected dso or sombor)")),
        }
    }
}

fn check_degrees(i: usize, j: usize) -> Result<()> {
    if i == 0 || j == 0 {
        return domain(format!("degrees must be positive, got ({i}, {j})"));
    }
    Ok(())
}

fn dso(i: usize, j: usize) -> f64 {
    let (i, j) = (i as f64, j as f64);
    i.hypot(j) / (i + j)
}

fn sombor(i: usize, j: usize) -> f64 {
    (i as f64).hypot(j as f64)
}

fn h(i: usize, j: usize) -> f64 {
    let s13 = sqrt13();
    let share = 1.0 / i as f64 + 1.0 / j as f64;
    (3.0 * SQRT_2 - 6.0 * s13 / 5.0) * share + dso(i, j) + 4.0 * s13 / 5.0 - 5.0 / SQRT_2
}

/// Diminished Sombor edge weight `√(i²+j²)/(i+j)`.
pub fn dso_weight(i: usize, j: usize) -> Result<f64> {
    check_degrees(i, j)?;
    Ok(dso(i, j))
}

/// Sombor edge weight `√(i²+j²)`.
pub fn sombor_weight(i: usize, j: usize) -> Result<f64> {
    check_degrees(i, j)?;
    Ok(sombor(i, j))
}

/// Coefficient of `m_{i,j}` once `m_{2,3}` and `m_{3,3}` are eliminated from
/// the DSO sum:
/// `(3√2 − 6√13/5)(1/i + 1/j) + √(i²+j²)/(i+j) + 4√13/5 − 5/√2`.
///
/// Vanishes on (2,3) and (3,3) by construction.
pub fn h_weight(i: usize, j: usize) -> Result<f64> {
    check_degrees(i, j)?;
    Ok(h(i, j))
}

/// Σ over edges of `w(d(u), d(v))`.
pub fn evaluate_index(g: &Graph, w: &dyn EdgeWeight) -> f64 {
    g.edges()
        .iter()
        .map(|&(u, v)| w.weight(g.degree(u), g.degree(v)))
        .fold(0.0, |acc, x| acc + x)
}

/// Σ over edge types of `m_{i,j} · w(i,j)`.
pub fn evaluate_counts(counts: &EdgeTypeCounts, w: &dyn EdgeWeight) -> f64 {
    counts
        .iter()
        .map(|(t, m)| m as f64 * w.weight(t.low, t.high))
        .fold(0.0, |acc, x| acc + x)
}

/// Relative disagreement between the two evaluation routes.
pub fn route_discrepancy(g: &Graph, w: &dyn EdgeWeight) -> f64 {
    let direct = evaluate_index(g, w);
    let census = evaluate_counts(&g.edge_type_counts(), w);
    let scale = direct.abs().max(census.abs()).max(f64::MIN_POSITIVE);
    (direct - census).abs() / scale
}

fn check_bound_params(n: usize, ell: usize) -> Result<()> {
    if ell < 3 {
        return domain(format!("2(ell-1) >= 4 requires ell >= 3, got ell = {ell}"));
    }
    if n < 2 * (ell - 1) {
        return domain(format!(
            "n >= 2(ell-1) requires n >= {}, got n = {n}",
            2 * (ell - 1)
        ));
    }
    Ok(())
}

/// `(n+ℓ−3)/√2 + 2√13/5`, the lower bound on DSO over molecular graphs of
/// order `n` and cyclomatic number `ℓ`.
pub fn paper_bound(n: usize, ell: usize) -> Result<f64> {
    check_bound_params(n, ell)?;
    Ok((n + ell - 3) as f64 / SQRT_2 + two_sqrt13_over_5())
}

/// `(n+ℓ−1)/√2`, attained exactly when every edge joins equal degrees.
/// Valid as a lower bound for every connected graph with `n+ℓ−1` edges.
pub fn regular_bound(n: usize, ell: usize) -> f64 {
    (n + ell - 1) as f64 / SQRT_2
}

fn residual_sum(residual: &EdgeTypeCounts, coeff: impl Fn(Ratio<i64>) -> Ratio<i64>) -> Ratio<i64> {
    residual
        .iter()
        .filter(|(t, _)| !t.is_low_cubic())
        .map(|(t, m)| coeff(t.vertex_share()) * Ratio::from_integer(m as i64))
        .sum()
}

/// `m_{2,3} = 2(n − 2ℓ − m_{2,2} + 2) + Σ (4 − 6(1/i+1/j)) m_{i,j}` over the
/// residual types. Entries (2,2), (2,3), (3,3) in `residual` are ignored.
pub fn solved_m23(n: usize, ell: usize, m22: u64, residual: &EdgeTypeCounts) -> Ratio<i64> {
    let base = 2 * (n as i64 - 2 * ell as i64 - m22 as i64 + 2);
    Ratio::from_integer(base)
        + residual_sum(residual, |s| Ratio::from_integer(4) - Ratio::from_integer(6) * s)
}

/// `m_{3,3} = 5(ℓ−1) + m_{2,2} − n + Σ (6(1/i+1/j) − 5) m_{i,j}` over the
/// residual types.
pub fn solved_m33(n: usize, ell: usize, m22: u64, residual: &EdgeTypeCounts) -> Ratio<i64> {
    let base = 5 * (ell as i64 - 1) + m22 as i64 - n as i64;
    Ratio::from_integer(base)
        + residual_sum(residual, |s| Ratio::from_integer(6) * s - Ratio::from_integer(5))
}
