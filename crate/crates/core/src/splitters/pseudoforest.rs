//! Orientations, pseudoarboricity and the pseudoforest split.
//!
//! The pseudoarboricity `p(G)` is the least `p` such that `G` has an
//! orientation with every outdegree at most `p`; the out-edges of such an
//! orientation, coloured `1..=p` at each vertex, split `G` into `p`
//! pseudoforests.

use std::collections::VecDeque;

use crate::certificate::{CopyId, SplitCertificate, SplitEdge};
use crate::graph::Graph;

/// A direction for every edge of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    edges: Vec<(usize, usize)>,
    /// `head[e]` is the endpoint edge `e` points to.
    head: Vec<usize>,
    outdegree: Vec<usize>,
}

impl Orientation {
    pub fn tail(&self, e: usize) -> usize {
        let (u, v) = self.edges[e];
        if self.head[e] == v {
            u
        } else {
            v
        }
    }

    pub fn head(&self, e: usize) -> usize {
        self.head[e]
    }

    pub fn outdegree(&self, v: usize) -> usize {
        self.outdegree[v]
    }

    pub fn max_outdegree(&self) -> usize {
        self.outdegree.iter().copied().max().unwrap_or(0)
    }

    /// Indices of the edges leaving `v`, ascending.
    pub fn out_edges(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len()).filter(|&e| self.tail(e) == v).collect()
    }
}

/// Greedy start: each edge, in canonical order, leaves the endpoint with the
/// smaller current outdegree.
fn greedy(g: &Graph) -> (Vec<usize>, Vec<Vec<usize>>) {
    let mut head = Vec::with_capacity(g.edge_count());
    let mut out = vec![Vec::new(); g.vertex_count()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let (t, h) = if out[v].len() < out[u].len() { (v, u) } else { (u, v) };
        head.push(h);
        out[t].push(e);
    }
    (head, out)
}

/// An orientation with all outdegrees at most `p`, if one exists.
///
/// Repeatedly takes an overloaded vertex and reverses a directed path from it
/// to a vertex with spare capacity. If no such path exists, the vertices
/// reachable from it span more than `p` edges per vertex, so no orientation
/// can meet the bound.
pub fn orient_with_bound(g: &Graph, p: usize) -> Option<Orientation> {
    let n = g.vertex_count();
    let edges = g.edges();
    let (mut head, mut out) = greedy(g);
    let tail_of = |head: &[usize], e: usize| if head[e] == edges[e].1 { edges[e].0 } else { edges[e].1 };

    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    for s in 0..n {
        while out[s].len() > p {
            seen.iter_mut().for_each(|x| *x = false);
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            let mut target = None;
            while let Some(x) = queue.pop_front() {
                if out[x].len() < p {
                    target = Some(x);
                    break;
                }
                for &e in &out[x] {
                    let y = head[e];
                    if !seen[y] {
                        seen[y] = true;
                        parent[y] = e;
                        queue.push_back(y);
                    }
                }
            }
            let mut x = target?;
            while x != s {
                let e = parent[x];
                let t = tail_of(&head, e);
                let pos = out[t].iter().position(|&f| f == e).expect("edge leaves its tail");
                out[t].swap_remove(pos);
                out[x].push(e);
                head[e] = t;
                x = t;
            }
        }
    }
    let outdegree = out.iter().map(Vec::len).collect();
    Some(Orientation { edges: edges.to_vec(), head, outdegree })
}

/// The least `p` admitting an orientation of maximum outdegree `p`; 0 for
/// an edgeless graph.
pub fn pseudoarboricity(g: &Graph) -> usize {
    if g.edge_count() == 0 {
        return 0;
    }
    let (_, out) = greedy(g);
    let mut hi = out.iter().map(Vec::len).max().unwrap_or(0);
    let mut lo = g.edge_count().div_ceil(g.vertex_count()).max(1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if orient_with_bound(g, mid).is_some() {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    lo
}

/// Output of [`split_by_pseudoforests`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PseudoforestSplit {
    pub certificate: SplitCertificate,
    pub orientation: Orientation,
    /// `colors[e]` in `1..=p`: the pseudoforest, and the copy index, of edge `e`.
    pub colors: Vec<usize>,
}

/// Gives every vertex `p = p(G)` copies. Out-edges of each vertex under an
/// optimal orientation get distinct colours in edge order, and an edge of
/// colour `c` joins copy `c` of its tail to copy `c` of its head. Each colour
/// class has outdegree at most 1 and so is a pseudoforest, and different
/// classes share no copies, so the split graph is planar.
pub fn split_by_pseudoforests(g: &Graph) -> PseudoforestSplit {
    let p = pseudoarboricity(g);
    let orientation = orient_with_bound(g, p).expect("pseudoarboricity is attainable");
    let mut next = vec![1; g.vertex_count()];
    let mut colors = Vec::with_capacity(g.edge_count());
    let mut edges = Vec::with_capacity(g.edge_count());
    for e in 0..g.edge_count() {
        let (t, h) = (orientation.tail(e), orientation.head(e));
        let c = next[t];
        next[t] += 1;
        colors.push(c);
        edges.push(SplitEdge::new(CopyId::new(t, c), CopyId::new(h, c)).normalized());
    }
    let certificate = SplitCertificate::new(g.clone(), vec![p.max(1); g.vertex_count()], edges);
    PseudoforestSplit { certificate, orientation, colors }
}

/// Largest `⌈|E(H)| / (|V(H)| - 1)⌉` over vertex subsets `H`, which equals
/// the arboricity. Exponential in `|V|`.
fn arboricity_by_subsets(g: &Graph) -> usize {
    let n = g.vertex_count();
    let masks: Vec<(u32, u32)> = g.edges().iter().map(|&(u, v)| (1 << u, 1 << v)).collect();
    let mut best = 0;
    for set in 1u32..(1 << n) {
        let size = set.count_ones() as usize;
        if size < 2 {
            continue;
        }
        let inside = masks.iter().filter(|&&(a, b)| set & a != 0 && set & b != 0).count();
        best = best.max(inside.div_ceil(size - 1));
    }
    best
}

/// Vertex count up to which [`arboricity_bracket`] enumerates subsets.
const EXACT_ARBORICITY_VERTICES: usize = 12;

/// Bounds `(lower, upper)` on the arboricity: `p(G) <= a(G) <= p(G) + 1`
/// and `a(G) >= ⌈|E| / (|V| - 1)⌉`. For at most 12 vertices the bracket is
/// closed to the exact value.
pub fn arboricity_bracket(g: &Graph) -> (usize, usize) {
    if g.edge_count() == 0 {
        return (0, 0);
    }
    if g.vertex_count() <= EXACT_ARBORICITY_VERTICES {
        let a = arboricity_by_subsets(g);
        return (a, a);
    }
    let p = pseudoarboricity(g);
    let density = g.edge_count().div_ceil(g.vertex_count() - 1);
    (p.max(density), p + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::verify_certificate;
    use crate::generators;

    #[test]
    fn known_values() {
        assert_eq!(pseudoarboricity(&generators::path(6)), 1);
        assert_eq!(pseudoarboricity(&generators::cycle(6)), 1);
        assert_eq!(pseudoarboricity(&generators::complete(4).unwrap()), 2);
        assert_eq!(pseudoarboricity(&generators::complete(12).unwrap()), 6);
        assert_eq!(pseudoarboricity(&Graph::empty(3)), 0);
    }

    #[test]
    fn bound_below_density_is_infeasible() {
        let g = generators::complete(5).unwrap();
        assert!(orient_with_bound(&g, 1).is_none());
        let o = orient_with_bound(&g, 2).unwrap();
        assert!(o.max_outdegree() <= 2);
        assert_eq!((0..5).map(|v| o.outdegree(v)).sum::<usize>(), 10);
    }

    #[test]
    fn split_is_valid() {
        for g in [generators::complete(5).unwrap(), generators::complete(12).unwrap(), generators::petersen()] {
            let s = split_by_pseudoforests(&g);
            let p = pseudoarboricity(&g);
            assert!(verify_certificate(&s.certificate, p).accepted());
            for v in g.vertices() {
                let mut cs: Vec<usize> = s.orientation.out_edges(v).iter().map(|&e| s.colors[e]).collect();
                cs.sort_unstable();
                cs.dedup();
                assert_eq!(cs.len(), s.orientation.outdegree(v));
            }
        }
    }

    #[test]
    fn tree_split_is_single_copy() {
        let s = split_by_pseudoforests(&generators::path(5));
        assert_eq!(s.certificate.copies, vec![1; 5]);
    }

    #[test]
    fn arboricity_examples() {
        assert_eq!(arboricity_bracket(&generators::path(7)), (1, 1));
        assert_eq!(arboricity_bracket(&generators::complete(5).unwrap()), (3, 3));
        assert_eq!(arboricity_bracket(&generators::complete(4).unwrap()), (2, 2));
        let (lo, hi) = arboricity_bracket(&generators::complete(20).unwrap());
        assert!(lo <= 10 && 10 <= hi);
    }
}
