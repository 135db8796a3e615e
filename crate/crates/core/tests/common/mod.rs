//! Shared test corpus: suns, small families, seeded random connected graphs
//! and trees of diameter 3.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use topoindex::graph::{self, FamilyKind, Graph, SunSpec};

pub const CORPUS_SEED: u64 = 0x5eed_2013;

pub fn sun(k: usize) -> Graph {
    graph::sun(SunSpec::new(k).unwrap())
}

pub fn family(kind: FamilyKind) -> Graph {
    graph::generate(kind).unwrap()
}

pub struct Named {
    pub name: String,
    pub graph: Graph,
}

fn named(name: impl Into<String>, graph: Graph) -> Named {
    Named {
        name: name.into(),
        graph,
    }
}

pub fn suns(max_k: usize) -> Vec<Named> {
    (3..=max_k)
        .map(|k| named(format!("sun({k})"), sun(k)))
        .collect()
}

/// Paths and complete graphs on 1..=30 vertices, cycles on 3..=30.
pub fn families() -> Vec<Named> {
    let mut out = Vec::new();
    for n in 1..=30 {
        out.push(named(format!("path({n})"), family(FamilyKind::Path(n))));
        out.push(named(
            format!("complete({n})"),
            family(FamilyKind::Complete(n)),
        ));
        if n >= 3 {
            out.push(named(format!("cycle({n})"), family(FamilyKind::Cycle(n))));
        }
    }
    out
}

/// 200 seeded random connected graphs with 2..=30 vertices and varying
/// density, so diameters range from 1 to well above 3.
pub fn random_graphs() -> Vec<Named> {
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    let densities = [0.0, 0.03, 0.08, 0.15, 0.3, 0.6];
    (0..200)
        .map(|i| {
            let n = rng.gen_range(2..=30);
            let p = densities[i % densities.len()];
            named(
                format!("random#{i}(n={n},p={p})"),
                graph::random_connected(n, p, &mut rng),
            )
        })
        .collect()
}

/// Double stars: two adjacent centres with `a` and `b` leaves (`a, b >= 1`);
/// every one is a tree of diameter 3.
pub fn double_stars() -> Vec<Named> {
    let mut out = Vec::new();
    for a in 1..=6 {
        for b in a..=6 {
            let n = a + b + 2;
            let mut edges = vec![(0, 1)];
            edges.extend((0..a).map(|i| (0, 2 + i)));
            edges.extend((0..b).map(|i| (1, 2 + a + i)));
            out.push(named(
                format!("double_star({a},{b})"),
                graph::build_graph(n, &edges).unwrap(),
            ));
        }
    }
    out
}

/// Everything above, with suns up to `max_k`.
pub fn corpus(max_k: usize) -> Vec<Named> {
    let mut all = suns(max_k);
    all.extend(families());
    all.extend(random_graphs());
    all.extend(double_stars());
    all
}

/// Same graph under a random relabeling.
pub fn shuffled(g: &Graph, rng: &mut impl Rng) -> Graph {
    use rand::seq::SliceRandom;
    let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
    perm.shuffle(rng);
    g.relabel(&perm).unwrap()
}

pub fn is_tree(g: &Graph) -> bool {
    g.vertex_count() >= 1 && g.edge_count() + 1 == g.vertex_count()
}
