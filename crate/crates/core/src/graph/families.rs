//! Standard graph families and seeded random generators used by the test
//! corpus and the CLI.

use rand::seq::SliceRandom;
use rand::Rng;

use super::GeneralizedGraph;

fn build(n: usize, edges: &[(usize, usize)]) -> GeneralizedGraph {
    GeneralizedGraph::from_standard(n, edges).expect("family edge lists are simple")
}

/// Path on `n` vertices; edge `k` joins `k` and `k + 1`.
pub fn path(n: usize) -> GeneralizedGraph {
    let edges: Vec<_> = (1..n).map(|k| (k - 1, k)).collect();
    build(n, &edges)
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> GeneralizedGraph {
    assert!(n >= 3, "cycles need at least 3 vertices");
    let edges: Vec<_> = (0..n).map(|k| (k, (k + 1) % n)).collect();
    build(n, &edges)
}

pub fn complete_edges(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect()
}

pub fn complete(n: usize) -> GeneralizedGraph {
    build(n, &complete_edges(n))
}

/// Star with centre 0 and `leaves` leaves.
pub fn star(leaves: usize) -> GeneralizedGraph {
    let edges: Vec<_> = (1..=leaves).map(|k| (0, k)).collect();
    build(leaves + 1, &edges)
}

/// Petersen graph: outer 5-cycle 0..5, inner pentagram 5..10, spokes k to k+5.
pub fn petersen() -> GeneralizedGraph {
    let mut edges = Vec::new();
    for k in 0..5 {
        edges.push((k, (k + 1) % 5));
        edges.push((k, k + 5));
        edges.push((5 + k, 5 + (k + 2) % 5));
    }
    build(10, &edges)
}

/// Disjoint union, relabelling `b` after `a`.
pub fn disjoint_union(a: &GeneralizedGraph, b: &GeneralizedGraph) -> GeneralizedGraph {
    let (na, nb) = (a.vertex_count(), b.vertex_count());
    let mut edges: Vec<(usize, usize)> = a
        .edges()
        .map(|e| {
            let ends: Vec<usize> = a.ends(e).collect();
            (ends[0], ends[1])
        })
        .collect();
    edges.extend(b.edges().map(|e| {
        let ends: Vec<usize> = b.ends(e).collect();
        (ends[0] + na, ends[1] + na)
    }));
    build(na + nb, &edges)
}

/// Random simple graph: candidate pairs are visited in shuffled order and
/// each is kept with probability `p` when both ends still have degree below
/// `max_degree`.
pub fn random_bounded_degree<R: Rng>(n: usize, max_degree: usize, p: f64, rng: &mut R) -> GeneralizedGraph {
    let mut pairs = complete_edges(n);
    pairs.shuffle(rng);
    let mut degree = vec![0usize; n];
    let mut edges = Vec::new();
    for (a, b) in pairs {
        if degree[a] < max_degree && degree[b] < max_degree && rng.random_bool(p) {
            degree[a] += 1;
            degree[b] += 1;
            edges.push((a, b));
        }
    }
    edges.sort_unstable();
    build(n, &edges)
}

/// Uniform-ish random `degree`-regular simple graph by the pairing model,
/// retrying until the pairing is simple. Requires `n * degree` even.
pub fn random_regular<R: Rng>(n: usize, degree: usize, rng: &mut R) -> GeneralizedGraph {
    assert!(n * degree % 2 == 0, "n * degree must be even");
    assert!(degree < n, "degree must be below n");
    'retry: loop {
        let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat(v).take(degree)).collect();
        points.shuffle(rng);
        let mut edges = Vec::with_capacity(points.len() / 2);
        for pair in points.chunks(2) {
            let (a, b) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if a == b || edges.contains(&(a, b)) {
                continue 'retry;
            }
            edges.push((a, b));
        }
        edges.sort_unstable();
        return build(n, &edges);
    }
}
