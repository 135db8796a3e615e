//! Brute-force reference computations for cross-checking.
//!
//! Floyd–Warshall over intermediate vertices, sharing no traversal code with
//! [`crate::distance`]. Cubic time; meant for graphs of a few hundred
//! vertices at most.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Dense symmetric matrix of hop distances; `None` marks unreachable pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    entries: Vec<Option<u32>>,
}

impl DistanceMatrix {
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        self.entries[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[Option<u32>] {
        &self.entries[u * self.n..(u + 1) * self.n]
    }

    /// First unreachable pair `(u, v)` with `u < v`, in row-major order.
    pub fn first_unreachable(&self) -> Option<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| (u + 1..self.n).map(move |v| (u, v)))
            .find(|&(u, v)| self.get(u, v).is_none())
    }

    pub fn max_entry(&self) -> Option<u32> {
        self.entries.iter().flatten().copied().max()
    }

    /// Distances of all unordered pairs, failing on the first unreachable one.
    pub fn pair_distances(&self) -> Result<Vec<u32>> {
        let mut out = Vec::with_capacity(self.n * self.n.saturating_sub(1) / 2);
        for u in 0..self.n {
            for v in u + 1..self.n {
                match self.get(u, v) {
                    Some(d) => out.push(d),
                    None => {
                        return Err(Error::Disconnected {
                            origin: u,
                            target: v,
                        })
                    }
                }
            }
        }
        Ok(out)
    }
}

pub fn floyd_warshall(g: &Graph) -> DistanceMatrix {
    let n = g.vertex_count();
    let mut entries = vec![None; n * n];
    for u in 0..n {
        entries[u * n + u] = Some(0);
        for &v in g.neighbors(u) {
            entries[u * n + v] = Some(1);
        }
    }
    for via in 0..n {
        for u in 0..n {
            let Some(left) = entries[u * n + via] else {
                continue;
            };
            for v in 0..n {
                if let Some(right) = entries[via * n + v] {
                    let through = left + right;
                    let slot = &mut entries[u * n + v];
                    if !matches!(*slot, Some(cur) if cur <= through) {
                        *slot = Some(through);
                    }
                }
            }
        }
    }
    DistanceMatrix { n, entries }
}

/// Literal sum of `d(u, v)` over unordered pairs.
pub fn wiener_naive(dm: &DistanceMatrix) -> Result<u64> {
    Ok(dm.pair_distances()?.into_iter().map(u64::from).sum())
}

/// Literal count of unordered pairs at distance 3.
pub fn polarity_naive(dm: &DistanceMatrix) -> Result<u64> {
    wd_naive(dm, 3)
}

/// Literal count of unordered pairs at distance `d`.
pub fn wd_naive(dm: &DistanceMatrix, d: u32) -> Result<u64> {
    Ok(dm.pair_distances()?.into_iter().filter(|&x| x == d).count() as u64)
}

/// Sum of distances from `v`.
pub fn transmission_naive(dm: &DistanceMatrix, v: usize) -> Result<u64> {
    dm.row(v)
        .iter()
        .enumerate()
        .map(|(u, d)| {
            d.map(u64::from).ok_or(Error::Disconnected {
                origin: v,
                target: u,
            })
        })
        .sum()
}
