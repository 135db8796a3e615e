//! Breadth-first all-pairs distances.
//!
//! All-pairs work is `n` independent single-source traversals, each holding
//! O(n) scratch space. Sources run in parallel on the rayon pool; per-thread
//! partial results are merged with integer addition, so the outcome does not
//! depend on scheduling.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

const UNSEEN: u32 = u32::MAX;

/// Reusable level-synchronous BFS state for one source at a time.
#[derive(Debug, Clone)]
pub struct Frontier {
    dist: Vec<u32>,
    current: Vec<usize>,
    next: Vec<usize>,
}

impl Frontier {
    pub fn new(n: usize) -> Self {
        Frontier {
            dist: vec![UNSEEN; n],
            current: Vec::new(),
            next: Vec::new(),
        }
    }

    /// Runs a traversal from `source` and returns its eccentricity.
    ///
    /// Fails with [`Error::Disconnected`] naming the smallest unreachable
    /// vertex.
    pub fn run(&mut self, g: &Graph, source: usize) -> Result<u32> {
        let n = g.vertex_count();
        if source >= n {
            return Err(Error::VertexOutOfRange { vertex: source, n });
        }
        self.dist.clear();
        self.dist.resize(n, UNSEEN);
        self.current.clear();
        self.next.clear();

        self.dist[source] = 0;
        self.current.push(source);
        let mut reached = 1usize;
        let mut level = 0u32;
        while !self.current.is_empty() {
            level += 1;
            for &u in &self.current {
                for &w in g.neighbors(u) {
                    if self.dist[w] == UNSEEN {
                        self.dist[w] = level;
                        self.next.push(w);
                    }
                }
            }
            reached += self.next.len();
            std::mem::swap(&mut self.current, &mut self.next);
            self.next.clear();
        }
        if reached != n {
            let target = self
                .dist
                .iter()
                .position(|&d| d == UNSEEN)
                .expect("some vertex unreached");
            return Err(Error::Disconnected {
                origin: source,
                target,
            });
        }
        Ok(level - 1)
    }

    /// Distances from the last source passed to [`Frontier::run`].
    pub fn distances(&self) -> &[u32] {
        &self.dist
    }
}

/// Hop distances from `source` to every vertex.
pub fn bfs_distances(g: &Graph, source: usize) -> Result<Vec<u32>> {
    let mut frontier = Frontier::new(g.vertex_count());
    frontier.run(g, source)?;
    Ok(frontier.dist)
}

/// Fails with [`Error::Disconnected`] unless every vertex is reachable from
/// vertex 0. Graphs with fewer than two vertices are connected.
pub fn ensure_connected(g: &Graph) -> Result<()> {
    if g.vertex_count() > 1 {
        Frontier::new(g.vertex_count()).run(g, 0)?;
    }
    Ok(())
}

/// Runs one traversal per source in parallel and folds the results.
///
/// `visit` sees each source together with its distance vector and updates a
/// per-thread accumulator created by `init`; `merge` combines accumulators.
/// Connectivity is checked up front so a disconnected input always yields the
/// same error.
pub fn fold_sources<T, I, V, M>(g: &Graph, init: I, visit: V, merge: M) -> Result<T>
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    V: Fn(&mut T, usize, &[u32]) -> Result<()> + Sync + Send,
    M: Fn(T, T) -> Result<T> + Sync + Send,
{
    ensure_connected(g)?;
    let n = g.vertex_count();
    (0..n)
        .into_par_iter()
        .try_fold(
            || (Frontier::new(n), init()),
            |(mut frontier, mut acc), source| {
                frontier.run(g, source)?;
                visit(&mut acc, source, frontier.distances())?;
                Ok::<_, Error>((frontier, acc))
            },
        )
        .map(|partial| partial.map(|(_, acc)| acc))
        .try_reduce(&init, &merge)
}

/// Number of unordered vertex pairs at each distance `1..=D`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct DistanceDistribution {
    counts: Vec<u64>,
}

impl DistanceDistribution {
    /// Wraps raw counts, trimming trailing zeros so the last entry is the
    /// diameter level.
    pub fn from_counts(mut counts: Vec<u64>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        DistanceDistribution { counts }
    }

    /// Entry `l - 1` is the number of pairs at distance `l`.
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Pairs at distance exactly `d`; zero for `d == 0` or beyond the diameter.
    pub fn at(&self, d: usize) -> u64 {
        d.checked_sub(1)
            .and_then(|i| self.counts.get(i))
            .copied()
            .unwrap_or(0)
    }

    pub fn diameter(&self) -> usize {
        self.counts.len()
    }

    pub fn total_pairs(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn into_counts(self) -> Vec<u64> {
        self.counts
    }
}

fn add_counts(mut a: Vec<u64>, b: Vec<u64>) -> Result<Vec<u64>> {
    if a.len() < b.len() {
        a.resize(b.len(), 0);
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x = x
            .checked_add(y)
            .ok_or(Error::Overflow("distance distribution"))?;
    }
    Ok(a)
}

/// Pair counts per distance. Each pair `{v, u}` is counted from the source
/// `v` only when `u > v`.
pub fn distance_distribution(g: &Graph) -> Result<DistanceDistribution> {
    let counts = fold_sources(
        g,
        Vec::new,
        |counts: &mut Vec<u64>, source, dist| {
            for &d in &dist[source + 1..] {
                let idx = d as usize - 1;
                if idx >= counts.len() {
                    counts.resize(idx + 1, 0);
                }
                // at most n(n-1)/2 increments in total
                counts[idx] += 1;
            }
            Ok(())
        },
        add_counts,
    )?;
    Ok(DistanceDistribution::from_counts(counts))
}

/// Largest pairwise distance; 0 for graphs with fewer than two vertices.
pub fn diameter(g: &Graph) -> Result<u32> {
    fold_sources(
        g,
        || 0u32,
        |best, _, dist| {
            *best = (*best).max(dist.iter().copied().max().unwrap_or(0));
            Ok(())
        },
        |a, b| Ok(a.max(b)),
    )
}

fn sum_distances(dist: &[u32]) -> Result<u64> {
    dist.iter().try_fold(0u64, |acc, &d| {
        acc.checked_add(u64::from(d))
            .ok_or(Error::Overflow("transmission"))
    })
}

/// Sum of distances from `v` to every other vertex.
pub fn transmission(g: &Graph, v: usize) -> Result<u64> {
    ensure_connected(g)?;
    sum_distances(&bfs_distances(g, v)?)
}

/// Transmission of every vertex, indexed by vertex identifier.
pub fn transmissions(g: &Graph) -> Result<Vec<u64>> {
    let n = g.vertex_count();
    let pairs = fold_sources(
        g,
        Vec::new,
        |acc: &mut Vec<(usize, u64)>, source, dist| {
            acc.push((source, sum_distances(dist)?));
            Ok(())
        },
        |mut a, b| {
            a.extend(b);
            Ok(a)
        },
    )?;
    let mut out = vec![0u64; n];
    for (v, t) in pairs {
        out[v] = t;
    }
    Ok(out)
}
