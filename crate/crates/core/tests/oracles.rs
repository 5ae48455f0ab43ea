//! Cross-checks against slow, independent oracles on small graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Duration;

use splitthick::bounds::bounds_report;
use splitthick::exact::{find_k_split, split_thickness_exact, ExactThickness, SearchBudget, SearchStatus};
use splitthick::generators;
use splitthick::planarity::is_planar;
use splitthick::splitters::{arboricity_bracket, pseudoarboricity};
use splitthick::Graph;

/// Routes the pairs `pairs[i..]` as internally disjoint paths between branch
/// vertices, using each vertex of `free` at most once.
fn route(g: &Graph, branch: &[usize], pairs: &[(usize, usize)], free: &mut Vec<usize>) -> bool {
    let Some(&(a, b)) = pairs.first() else { return true };
    fn extend(
        g: &Graph,
        at: usize,
        target: usize,
        branch: &[usize],
        rest: &[(usize, usize)],
        free: &mut Vec<usize>,
    ) -> bool {
        if g.has_edge(at, target) && route(g, branch, rest, free) {
            return true;
        }
        for i in 0..free.len() {
            let w = free[i];
            if g.has_edge(at, w) {
                free.swap_remove(i);
                let ok = extend(g, w, target, branch, rest, free);
                free.push(w);
                let last = free.len() - 1;
                free.swap(i, last);
                if ok {
                    return true;
                }
            }
        }
        false
    }
    extend(g, branch[a], branch[b], branch, &pairs[1..], free)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n).filter(|m| m.count_ones() as usize == k).map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect()).collect()
}

/// Searches for a subdivision of `K_5` or `K_{3,3}` directly.
fn has_kuratowski_subdivision(g: &Graph) -> bool {
    let n = g.vertex_count();
    let k5: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    let k33: Vec<(usize, usize)> = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
    for set in subsets(n, 5) {
        if set.iter().any(|&v| g.degree(v) < 4) {
            continue;
        }
        let mut free: Vec<usize> = (0..n).filter(|v| !set.contains(v)).collect();
        if route(g, &set, &k5, &mut free) {
            return true;
        }
    }
    for set in subsets(n, 6) {
        if set.iter().any(|&v| g.degree(v) < 3) {
            continue;
        }
        // sides: set[0] plus two others, against the remaining three
        for side in subsets(5, 2) {
            let mut left = vec![set[0]];
            left.extend(side.iter().map(|&i| set[i + 1]));
            let right: Vec<usize> = set.iter().copied().filter(|v| !left.contains(v)).collect();
            let branch: Vec<usize> = left.into_iter().chain(right).collect();
            let mut free: Vec<usize> = (0..n).filter(|v| !set.contains(v)).collect();
            if route(g, &branch, &k33, &mut free) {
                return true;
            }
        }
    }
    false
}

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

#[test]
fn planarity_matches_kuratowski_search_on_all_six_vertex_graphs() {
    let pairs = all_pairs(6);
    for mask in 0u32..1 << pairs.len() {
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        let g = Graph::new(6, edges).unwrap();
        assert_eq!(is_planar(&g), !has_kuratowski_subdivision(&g), "{g:?}");
    }
}

#[test]
fn planarity_matches_kuratowski_search_on_random_eight_vertex_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut nonplanar = 0;
    for _ in 0..400 {
        let n = rng.random_range(7..=8);
        let m = rng.random_range(8..=20);
        let g = generators::random_graph(n, m, &mut rng);
        let planar = is_planar(&g);
        nonplanar += usize::from(!planar);
        assert_eq!(planar, !has_kuratowski_subdivision(&g), "{g:?}");
    }
    assert!(nonplanar > 50, "sample should mix both answers");
}

/// `max ⌈|E(H)| / |V(H)|⌉` over induced subgraphs.
fn density_oracle(g: &Graph) -> usize {
    let n = g.vertex_count();
    (1u32..1 << n)
        .map(|set| {
            let inside = g.edges().iter().filter(|&&(u, v)| set >> u & 1 == 1 && set >> v & 1 == 1).count();
            inside.div_ceil(set.count_ones() as usize)
        })
        .max()
        .unwrap_or(0)
}

#[test]
fn pseudoarboricity_matches_density_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..500 {
        let n = rng.random_range(2..=8);
        let m = rng.random_range(1..=n * (n - 1) / 2);
        let g = generators::random_graph(n, m, &mut rng);
        assert_eq!(pseudoarboricity(&g), density_oracle(&g), "{g:?}");
    }
}

#[test]
fn arboricity_bracket_contains_nash_williams_value() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..100 {
        let n = rng.random_range(2..=9);
        let m = rng.random_range(1..=n * (n - 1) / 2);
        let g = generators::random_graph(n, m, &mut rng);
        let (lo, hi) = arboricity_bracket(&g);
        let p = pseudoarboricity(&g);
        assert_eq!(lo, hi);
        assert!(p <= lo && lo <= p + 1);
    }
}

fn budget() -> SearchBudget {
    SearchBudget::new(2_000_000, Duration::from_secs(60))
}

#[test]
fn one_split_search_is_a_planarity_test() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..150 {
        let n = rng.random_range(1..=6);
        let m = rng.random_range(0..=(n * (n - 1) / 2).min(10));
        let g = generators::random_graph(n, m, &mut rng);
        let found = find_k_split(&g, 1, budget()).status == SearchStatus::Found;
        assert_eq!(found, is_planar(&g), "{g:?}");
    }
}

#[test]
fn exact_value_lies_within_bounds() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..40 {
        let n = rng.random_range(5..=7);
        let m = rng.random_range(8..=(n * (n - 1) / 2).min(15));
        let g = generators::random_graph(n, m, &mut rng);
        let b = bounds_report(&g);
        let ExactThickness::Exact { k, .. } = split_thickness_exact(&g, 3, budget()) else {
            panic!("small graphs resolve within budget: {g:?}");
        };
        assert!(b.lower <= k, "{g:?}: lower {} > {k}", b.lower);
        if let Some(u) = b.upper {
            assert!(k <= u, "{g:?}: {k} > upper {u}");
        }
    }
}

#[test]
fn search_is_monotone_and_deterministic() {
    for g in [generators::complete(5).unwrap(), generators::complete(6).unwrap(), generators::complete_bipartite(3, 3).unwrap()] {
        let two = find_k_split(&g, 2, budget());
        let three = find_k_split(&g, 3, budget());
        assert_eq!(two.status, SearchStatus::Found);
        assert_eq!(three.status, SearchStatus::Found);
        assert_eq!(find_k_split(&g, 2, budget()), two);
    }
}
