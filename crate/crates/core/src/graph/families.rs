use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use super::Graph;
use crate::error::{Error, Result};

/// Parameter of a k-sun graph.
///
/// Vertex identifiers: clique vertex `c_i` is `i - 1` and independent vertex
/// `s_i` is `k + i - 1`, for `1 <= i <= k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SunSpec {
    k: usize,
}

impl SunSpec {
    pub fn new(k: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::invalid("k must be >= 3"));
        }
        Ok(SunSpec { k })
    }

    pub fn k(self) -> usize {
        self.k
    }

    pub fn vertex_count(self) -> usize {
        2 * self.k
    }

    /// Identifier of `c_i`, `1 <= i <= k`.
    pub fn clique(self, i: usize) -> usize {
        debug_assert!((1..=self.k).contains(&i));
        i - 1
    }

    /// Identifier of `s_i`, `1 <= i <= k`.
    pub fn independent(self, i: usize) -> usize {
        debug_assert!((1..=self.k).contains(&i));
        self.k + i - 1
    }
}

/// The k-sun: a k-clique `c_1..c_k` plus independent vertices `s_1..s_k`,
/// with `s_i` joined to `c_i` and `c_{i+1}` (`s_k` wraps to `c_1`).
pub fn sun(spec: SunSpec) -> Graph {
    let k = spec.k;
    let mut edges = Vec::with_capacity(k * (k + 3) / 2);
    for i in 0..k {
        for j in i + 1..k {
            edges.push((i, j));
        }
    }
    for i in 1..=k {
        let next = if i == k { 1 } else { i + 1 };
        edges.push((spec.independent(i), spec.clique(i)));
        edges.push((spec.independent(i), spec.clique(next)));
    }
    Graph::from_edges(2 * k, &edges).expect("sun construction is a simple graph")
}

/// Graph families with a canonical labeling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Sun(usize),
    Path(usize),
    Cycle(usize),
    Complete(usize),
}

impl FamilyKind {
    pub fn validate(self) -> Result<()> {
        match self {
            FamilyKind::Sun(k) => SunSpec::new(k).map(|_| ()),
            FamilyKind::Path(n) | FamilyKind::Complete(n) if n < 1 => {
                Err(Error::invalid("n must be >= 1"))
            }
            FamilyKind::Cycle(n) if n < 3 => Err(Error::invalid("n must be >= 3")),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyKind::Sun(k) => write!(f, "sun({k})"),
            FamilyKind::Path(n) => write!(f, "path({n})"),
            FamilyKind::Cycle(n) => write!(f, "cycle({n})"),
            FamilyKind::Complete(n) => write!(f, "complete({n})"),
        }
    }
}

/// Deterministic generator for each [`FamilyKind`]. Paths and cycles use
/// consecutive identifiers.
pub fn generate(kind: FamilyKind) -> Result<Graph> {
    kind.validate()?;
    let graph = match kind {
        FamilyKind::Sun(k) => sun(SunSpec { k }),
        FamilyKind::Path(n) => {
            let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
            Graph::from_edges(n, &edges)?
        }
        FamilyKind::Cycle(n) => {
            let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
            edges.push((0, n - 1));
            Graph::from_edges(n, &edges)?
        }
        FamilyKind::Complete(n) => {
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            Graph::from_edges(n, &edges)?
        }
    };
    Ok(graph)
}

/// A random connected graph on `n` vertices: a uniformly shuffled random
/// recursive tree, plus every remaining pair independently with probability
/// `extra_edge_prob`.
pub fn random_connected<R: Rng + ?Sized>(n: usize, extra_edge_prob: f64, rng: &mut R) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    let mut present = vec![false; n * n];
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        let child = order[i];
        present[parent * n + child] = true;
        present[child * n + parent] = true;
        edges.push((parent, child));
    }
    if extra_edge_prob > 0.0 {
        for u in 0..n {
            for v in u + 1..n {
                if !present[u * n + v] && rng.gen_bool(extra_edge_prob.min(1.0)) {
                    edges.push((u, v));
                }
            }
        }
    }
    Graph::from_edges(n, &edges).expect("random construction is a simple graph")
}
