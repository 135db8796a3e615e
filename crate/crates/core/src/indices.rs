//! Wiener-type and Zagreb indices. Everything is exact integer arithmetic.

use serde::Serialize;

use crate::distance::{self, fold_sources, DistanceDistribution};
use crate::error::{Error, Result};
use crate::graph::Graph;

fn checked_sum(a: u64, b: u64, what: &'static str) -> Result<u64> {
    a.checked_add(b).ok_or(Error::Overflow(what))
}

/// Sum of `d(u, v)` over unordered pairs, accumulated pair by pair: from
/// each source only targets with a larger identifier are added.
pub fn wiener_pairwise(g: &Graph) -> Result<u64> {
    fold_sources(
        g,
        || 0u64,
        |acc, source, dist| {
            for &d in &dist[source + 1..] {
                *acc = checked_sum(*acc, u64::from(d), "Wiener index")?;
            }
            Ok(())
        },
        |a, b| checked_sum(a, b, "Wiener index"),
    )
}

/// Half the sum of all vertex transmissions.
pub fn wiener_transmission(g: &Graph) -> Result<u64> {
    let total = distance::transmissions(g)?
        .into_iter()
        .try_fold(0u64, |acc, t| checked_sum(acc, t, "Wiener index"))?;
    debug_assert!(total % 2 == 0);
    Ok(total / 2)
}

/// Number of unordered pairs at distance exactly 3.
pub fn wiener_polarity(g: &Graph) -> Result<u64> {
    generalized_wd(g, 3)
}

/// Number of unordered pairs at distance exactly `d` (zero past the diameter).
pub fn generalized_wd(g: &Graph, d: usize) -> Result<u64> {
    if d == 0 {
        return Err(Error::invalid("distance d must be >= 1"));
    }
    let target = u32::try_from(d).unwrap_or(u32::MAX);
    fold_sources(
        g,
        || 0u64,
        |acc, source, dist| {
            *acc += dist[source + 1..].iter().filter(|&&x| x == target).count() as u64;
            Ok(())
        },
        |a, b| checked_sum(a, b, "W_d"),
    )
}

/// `Σ_d d · W_d` from a distance distribution.
pub fn wiener_from_distribution(dist: &DistanceDistribution) -> Result<u64> {
    dist.counts()
        .iter()
        .enumerate()
        .try_fold(0u64, |acc, (i, &c)| {
            let term = c
                .checked_mul(i as u64 + 1)
                .ok_or(Error::Overflow("Wiener index"))?;
            checked_sum(acc, term, "Wiener index")
        })
}

/// First Zagreb index: sum of squared degrees.
pub fn zagreb_m1(g: &Graph) -> Result<u64> {
    g.degrees().into_iter().try_fold(0u64, |acc, d| {
        let d = d as u64;
        let sq = d.checked_mul(d).ok_or(Error::Overflow("M1"))?;
        checked_sum(acc, sq, "M1")
    })
}

/// Second Zagreb index: sum over edges of the endpoint degree product.
pub fn zagreb_m2(g: &Graph) -> Result<u64> {
    g.edges().try_fold(0u64, |acc, (u, v)| {
        let p = (g.degree(u) as u64)
            .checked_mul(g.degree(v) as u64)
            .ok_or(Error::Overflow("M2"))?;
        checked_sum(acc, p, "M2")
    })
}

/// All indices of one connected graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexReport {
    pub n: usize,
    pub m: usize,
    pub diameter: usize,
    pub wiener: u64,
    pub wiener_polarity: u64,
    /// Entry `d - 1` is `W_d`, for `d = 1..=diameter`.
    pub w_d: Vec<u64>,
    pub m1: u64,
    pub m2: u64,
}

/// Computes every index from a single all-pairs pass.
pub fn full_report(g: &Graph) -> Result<IndexReport> {
    let dist = distance::distance_distribution(g)?;
    Ok(IndexReport {
        n: g.vertex_count(),
        m: g.edge_count(),
        diameter: dist.diameter(),
        wiener: wiener_from_distribution(&dist)?,
        wiener_polarity: dist.at(3),
        m1: zagreb_m1(g)?,
        m2: zagreb_m2(g)?,
        w_d: dist.into_counts(),
    })
}
