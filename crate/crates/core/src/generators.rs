//! Structured graph families and random generators.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Graph, GraphError};

/// `K_n` on vertices `0..n`.
pub fn complete(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::Empty);
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::new(n, edges)
}

/// `K_{m,n}`: vertices `0..m` form one side, `m..m+n` the other.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph, GraphError> {
    if m == 0 || n == 0 {
        return Err(GraphError::Empty);
    }
    let edges = (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v)));
    Graph::new(m + n, edges)
}

/// Two copies of `K_12` sharing vertex 0; the second block uses labels `12..23`.
pub fn double_k12() -> Graph {
    let block = |offset: usize| {
        let labels: Vec<usize> = std::iter::once(0).chain(offset..offset + 11).collect();
        let mut edges = Vec::with_capacity(66);
        for i in 0..12 {
            for j in i + 1..12 {
                edges.push((labels[i], labels[j]));
            }
        }
        edges
    };
    let mut edges = block(1);
    edges.extend(block(12));
    Graph::new(23, edges).expect("blocks share only vertex 0")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::new(10, edges).unwrap()
}

/// The `d`-dimensional hypercube.
pub fn hypercube(d: u32) -> Graph {
    let n = 1usize << d;
    let edges = (0..n).flat_map(|v| (0..d).map(move |b| (v, v ^ (1 << b)))).filter(|&(u, v)| u < v);
    Graph::new(n, edges).unwrap()
}

/// Random graph with exactly `m` edges (capped at `n(n-1)/2`).
pub fn random_graph<R: Rng + ?Sized>(n: usize, m: usize, rng: &mut R) -> Graph {
    let mut all: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    all.shuffle(rng);
    all.truncate(m);
    Graph::from_edges_lossy(n, all)
}

/// Random graph with maximum degree at most `max_degree`.
pub fn random_bounded_degree<R: Rng + ?Sized>(n: usize, max_degree: usize, rng: &mut R) -> Graph {
    let mut all: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    all.shuffle(rng);
    let mut deg = vec![0; n];
    let mut keep = Vec::new();
    for (u, v) in all {
        if deg[u] < max_degree && deg[v] < max_degree && rng.random_bool(0.7) {
            deg[u] += 1;
            deg[v] += 1;
            keep.push((u, v));
        }
    }
    Graph::from_edges_lossy(n, keep)
}

/// Random planar graph: a stacked triangulation on `n >= 3` vertices with
/// each edge kept independently with probability `keep`.
pub fn random_planar<R: Rng + ?Sized>(n: usize, keep: f64, rng: &mut R) -> Graph {
    assert!(n >= 3);
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    let mut faces = vec![[0, 1, 2], [0, 1, 2]];
    for v in 3..n {
        let i = rng.random_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(i);
        edges.extend([(a, v), (b, v), (c, v)]);
        faces.extend([[a, b, v], [b, c, v], [a, c, v]]);
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let kept = edges.into_iter().filter(|_| rng.random_bool(keep)).map(|(u, v)| (perm[u], perm[v]));
    Graph::from_edges_lossy(n, kept)
}
