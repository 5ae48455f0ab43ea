//! Exact k-split search for small graphs.
//!
//! Depth-first search assigns every base edge, in a fixed order, to one pair
//! of copies. Only certificates with one split edge per base edge are
//! explored; this loses nothing, since dropping extra split edges from a
//! planar split leaves a planar split. A new copy of a vertex may only be
//! opened after all lower-indexed copies are in use, which removes the
//! symmetry between copies. A partial assignment whose split graph is
//! already non-planar is abandoned, since adding edges cannot restore
//! planarity.

use std::time::{Duration, Instant};

use crate::bounds::lb_euler;
use crate::certificate::{verify_certificate, CopyId, SplitCertificate, SplitEdge};
use crate::graph::Graph;
use crate::planarity::is_planar;

/// Limits on one search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub max_time: Duration,
}

impl SearchBudget {
    pub fn new(max_nodes: u64, max_time: Duration) -> Self {
        assert!(max_nodes > 0 && !max_time.is_zero(), "budget must be positive");
        SearchBudget { max_nodes, max_time }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_nodes: 10_000_000, max_time: Duration::from_secs(60) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStatus {
    Found,
    /// The search space was exhausted without finding a split.
    Unsat,
    /// The budget ran out first.
    Exhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    /// Present exactly when `status` is `Found`.
    pub certificate: Option<SplitCertificate>,
    pub nodes_explored: u64,
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    order: Vec<(usize, usize)>,
    used: Vec<usize>,
    assigned: Vec<(usize, usize)>,
    nodes: u64,
    budget: SearchBudget,
    start: Instant,
    out_of_budget: bool,
}

impl Search<'_> {
    fn split_is_planar(&self) -> bool {
        let k = self.k;
        let edges = self.order.iter().zip(&self.assigned).map(|(&(u, v), &(i, j))| (u * k + i - 1, v * k + j - 1));
        is_planar(&Graph::from_edges_lossy(self.g.vertex_count() * k, edges))
    }

    fn over_budget(&mut self) -> bool {
        if self.nodes >= self.budget.max_nodes || (self.nodes.is_multiple_of(256) && self.start.elapsed() >= self.budget.max_time) {
            self.out_of_budget = true;
        }
        self.out_of_budget
    }

    fn dfs(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let (u, v) = self.order[depth];
        let (cu, cv) = (self.used[u], self.used[v]);
        for i in 1..=(cu + 1).min(self.k) {
            for j in 1..=(cv + 1).min(self.k) {
                self.nodes += 1;
                if self.over_budget() {
                    return false;
                }
                self.assigned.push((i, j));
                let (old_u, old_v) = (self.used[u], self.used[v]);
                self.used[u] = old_u.max(i);
                self.used[v] = old_v.max(j);
                // a fresh copy is a new leaf and cannot break planarity
                let fresh = i > cu || j > cv;
                if (fresh || self.split_is_planar()) && self.dfs(depth + 1) {
                    return true;
                }
                self.used[u] = old_u;
                self.used[v] = old_v;
                self.assigned.pop();
                if self.out_of_budget {
                    return false;
                }
            }
        }
        false
    }

    fn certificate(&self) -> SplitCertificate {
        let copies = self.used.iter().map(|&c| c.max(1)).collect();
        let mut edges: Vec<SplitEdge> = self
            .order
            .iter()
            .zip(&self.assigned)
            .map(|(&(u, v), &(i, j))| SplitEdge(CopyId::new(u, i), CopyId::new(v, j)))
            .collect();
        edges.sort_by_key(|e| e.projection());
        SplitCertificate::new(self.g.clone(), copies, edges).canonical()
    }
}

/// Searches for a planar k-split of `g`.
pub fn find_k_split(g: &Graph, k: usize, budget: SearchBudget) -> SearchOutcome {
    let unsat = |nodes| SearchOutcome { status: SearchStatus::Unsat, certificate: None, nodes_explored: nodes };
    if k == 0 || lb_euler(g) > k {
        return unsat(0);
    }
    let mut order = g.edges().to_vec();
    order.sort_by_key(|&(u, v)| std::cmp::Reverse(g.degree(u).max(g.degree(v))));
    let mut search = Search {
        g,
        k,
        order,
        used: vec![0; g.vertex_count()],
        assigned: Vec::with_capacity(g.edge_count()),
        nodes: 0,
        budget,
        start: Instant::now(),
        out_of_budget: false,
    };
    if search.dfs(0) {
        let cert = search.certificate();
        assert!(verify_certificate(&cert, k).accepted(), "search produced an invalid certificate");
        SearchOutcome { status: SearchStatus::Found, certificate: Some(cert), nodes_explored: search.nodes }
    } else if search.out_of_budget {
        SearchOutcome { status: SearchStatus::Exhausted, certificate: None, nodes_explored: search.nodes }
    } else {
        unsat(search.nodes)
    }
}

/// Result of [`split_thickness_exact`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactThickness {
    /// The split thickness, with a witness.
    Exact { k: usize, certificate: SplitCertificate },
    /// Every `k` up to the limit was refuted.
    AboveLimit,
    /// Some level ran out of budget before any split was found.
    Unknown,
}

/// Smallest `k <= k_max` for which [`find_k_split`] succeeds. Each level gets
/// the full budget.
pub fn split_thickness_exact(g: &Graph, k_max: usize, budget: SearchBudget) -> ExactThickness {
    let mut exhausted = false;
    for k in 1..=k_max {
        let outcome = find_k_split(g, k, budget);
        match outcome.status {
            SearchStatus::Found if !exhausted => {
                return ExactThickness::Exact { k, certificate: outcome.certificate.expect("found") };
            }
            SearchStatus::Found => return ExactThickness::Unknown,
            SearchStatus::Exhausted => exhausted = true,
            SearchStatus::Unsat => {}
        }
    }
    if exhausted {
        ExactThickness::Unknown
    } else {
        ExactThickness::AboveLimit
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn budget() -> SearchBudget {
        SearchBudget::new(1_000_000, Duration::from_secs(30))
    }

    #[test]
    fn small_cases() {
        let k4 = generators::complete(4).unwrap();
        let out = find_k_split(&k4, 1, budget());
        assert_eq!(out.status, SearchStatus::Found);
        assert_eq!(out.certificate.unwrap(), SplitCertificate::identity(&k4));

        let k5 = generators::complete(5).unwrap();
        assert_eq!(find_k_split(&k5, 1, budget()).status, SearchStatus::Unsat);
        assert_eq!(find_k_split(&k5, 2, budget()).status, SearchStatus::Found);
    }

    #[test]
    fn thickness_values() {
        let value = |g: &Graph| match split_thickness_exact(g, 3, budget()) {
            ExactThickness::Exact { k, .. } => k,
            other => panic!("{other:?}"),
        };
        assert_eq!(value(&generators::complete(4).unwrap()), 1);
        assert_eq!(value(&generators::complete_bipartite(3, 3).unwrap()), 2);
        assert_eq!(value(&generators::complete(6).unwrap()), 2);
    }

    #[test]
    fn tiny_budget_is_exhausted() {
        let g = generators::complete(6).unwrap();
        let out = find_k_split(&g, 2, SearchBudget::new(3, Duration::from_secs(5)));
        assert_eq!(out.status, SearchStatus::Exhausted);
        assert!(out.certificate.is_none());
        assert_eq!(split_thickness_exact(&g, 2, SearchBudget::new(3, Duration::from_secs(5))), ExactThickness::Unknown);
    }

    #[test]
    fn refuted_up_to_limit() {
        let g = generators::complete(5).unwrap();
        assert_eq!(split_thickness_exact(&g, 1, budget()), ExactThickness::AboveLimit);
    }
}
