//! Closed forms and edge-count bounds on planar split thickness.
//!
//! All arithmetic is exact integer arithmetic. The bipartite conditions are
//! all instances of one quadratic: a k-split of `K_{m,d-m}` is a planar
//! bipartite graph on at most `kd` vertices, so `m(d - m) <= 2kd - 4`.

use std::fmt;

use crate::graph::Graph;
use crate::planarity::is_planar;
use crate::splitters::pseudoarboricity;

fn div_ceil(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// Smallest `k` for which the planar edge bound on `k|V|` vertices admits
/// `|E|`: `3k|V| - 6`, or `2k|V| - 4` when `g` is bipartite.
pub fn lb_euler(g: &Graph) -> usize {
    let n = g.vertex_count();
    let m = g.edge_count();
    if n < 3 {
        return 1;
    }
    let k = if g.is_bipartite() { div_ceil(m + 4, 2 * n) } else { div_ceil(m + 6, 3 * n) };
    k.max(1)
}

/// Split thickness of `K_n`.
pub fn complete_thickness(n: usize) -> usize {
    match n {
        0..=4 => 1,
        5..=12 => 2,
        _ => div_ceil(n, 6),
    }
}

/// Whether `K_{m,n}` has a planar 2-split: `mn <= 4(m + n) - 4`.
pub fn bipartite_2splittable(m: usize, n: usize) -> bool {
    m * n + 4 <= 4 * (m + n)
}

/// `⌈(mn + 4) / 2(m + n)⌉`, the least `k` not excluded by the bipartite edge bound.
pub fn bipartite_lb(m: usize, n: usize) -> usize {
    div_ceil(m * n + 4, 2 * (m + n)).max(1)
}

/// The bipartite edge condition `m(d - m) <= 2kd - 4` for `K_{m,d-m}`.
pub fn eq2_feasible(m: usize, d: usize, k: usize) -> bool {
    assert!(m >= 1 && m < d, "need 1 <= m < d");
    m * (d - m) + 4 <= 2 * k * d
}

/// Largest `n >= m` passing [`eq2_feasible`] for `K_{m,n}` at `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartnerLimit {
    /// Every `n >= m` passes (checked up to the enumeration limit).
    Unbounded,
    UpTo(usize),
}

/// Enumerates, for each smaller side `m = 1, 2, ...`, the largest partner
/// `n >= m` with `K_{m,n}` passing the bipartite edge condition at `k`.
/// Stops at the first `m` for which no `n >= m` passes. `limit` caps the
/// search over `n`; a family that passes at `limit` is reported unbounded.
pub fn feasible_bipartite_families(k: usize, limit: usize) -> Vec<(usize, PartnerLimit)> {
    let mut rows = Vec::new();
    for m in 1.. {
        let best = (m..=limit).filter(|&n| eq2_feasible(m, m + n, k)).max();
        match best {
            None => break,
            Some(n) if n == limit => rows.push((m, PartnerLimit::Unbounded)),
            Some(n) => rows.push((m, PartnerLimit::UpTo(n))),
        }
    }
    rows
}

/// Why a bound holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Reason {
    /// Planar edge count on `k|V|` vertices.
    Euler,
    /// Planar bipartite edge count on `k|V|` vertices.
    BipartiteEuler,
    /// The graph itself is not planar, so `k = 1` fails.
    NonPlanar,
    /// Closed form for complete graphs.
    Complete,
    /// Characterization of 2-splittable complete bipartite graphs.
    Bipartite2Split,
    /// `k >= (mn + 4) / 2(m + n)` for `K_{m,n}`.
    BipartiteDensity,
    /// `K_{n,n}` is not `⌊n/4⌋`-splittable.
    BalancedBipartite,
    /// `K_{2k+1, 4k²+2k-3}` is not `k`-splittable.
    OddSideBipartite,
    /// The graph is already planar.
    Planar,
    /// `K_{2k,n}` splits into `k` copies of `K_{2,n}`.
    Columns,
    /// Each vertex of degree `d` splits into `⌈d/2⌉` copies of degree at most 2.
    Degree,
    /// One copy per pseudoforest of an optimal decomposition.
    Pseudoforest,
}

impl Reason {
    pub fn tag(self) -> &'static str {
        match self {
            Reason::Euler => "euler",
            Reason::BipartiteEuler => "bipartite-euler",
            Reason::NonPlanar => "nonplanar",
            Reason::Complete => "complete",
            Reason::Bipartite2Split => "bipartite-2split",
            Reason::BipartiteDensity => "bipartite-density",
            Reason::BalancedBipartite => "balanced-bipartite",
            Reason::OddSideBipartite => "odd-side-bipartite",
            Reason::Planar => "planar",
            Reason::Columns => "columns",
            Reason::Degree => "degree",
            Reason::Pseudoforest => "pseudoforest",
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Aggregated bounds on the split thickness of one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThicknessBounds {
    pub lower: usize,
    pub upper: Option<usize>,
    /// Every reason whose bound equals `lower`.
    pub lower_reasons: Vec<Reason>,
    /// Every reason whose bound equals `upper`.
    pub upper_reasons: Vec<Reason>,
}

impl fmt::Display for ThicknessBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tags = |rs: &[Reason]| rs.iter().map(|r| r.tag()).collect::<Vec<_>>().join(",");
        write!(f, "lower {} ({})", self.lower, tags(&self.lower_reasons))?;
        match self.upper {
            Some(u) => write!(f, " upper {} ({})", u, tags(&self.upper_reasons)),
            None => write!(f, " upper unknown"),
        }
    }
}

fn pick(candidates: &[(usize, Reason)], best: usize) -> Vec<Reason> {
    let mut rs: Vec<Reason> = candidates.iter().filter(|c| c.0 == best).map(|c| c.1).collect();
    rs.sort();
    rs.dedup();
    rs
}

/// Collects every applicable lower and upper bound for `g`.
pub fn bounds_report(g: &Graph) -> ThicknessBounds {
    let mut lower: Vec<(usize, Reason)> = Vec::new();
    let mut upper: Vec<(usize, Reason)> = Vec::new();

    let euler_tag = if g.is_bipartite() { Reason::BipartiteEuler } else { Reason::Euler };
    lower.push((lb_euler(g), euler_tag));

    let planar = is_planar(g);
    if planar {
        upper.push((1, Reason::Planar));
    } else {
        lower.push((2, Reason::NonPlanar));
    }

    if g.is_complete() {
        let f = complete_thickness(g.vertex_count());
        lower.push((f, Reason::Complete));
        upper.push((f, Reason::Complete));
    }

    if let Some((a, b)) = g.complete_bipartite_sides() {
        let (m, n) = (a.len(), b.len());
        lower.push((bipartite_lb(m, n), Reason::BipartiteDensity));
        if bipartite_2splittable(m, n) {
            if !planar {
                upper.push((2, Reason::Bipartite2Split));
            }
        } else {
            lower.push((3, Reason::Bipartite2Split));
        }
        if m == n && m >= 4 {
            lower.push((m / 4 + 1, Reason::BalancedBipartite));
        }
        if m % 2 == 1 && m >= 3 {
            let k = (m - 1) / 2;
            if n + 3 >= 4 * k * k + 2 * k {
                lower.push((k + 1, Reason::OddSideBipartite));
            }
        }
        upper.push((m.div_ceil(2), Reason::Columns));
    }

    if g.edge_count() > 0 {
        upper.push((g.max_degree().div_ceil(2), Reason::Degree));
        upper.push((pseudoarboricity(g), Reason::Pseudoforest));
    }

    let lo = lower.iter().map(|c| c.0).max().unwrap_or(1).max(1);
    let up = upper.iter().map(|c| c.0).min();
    ThicknessBounds {
        lower: lo,
        upper: up,
        lower_reasons: pick(&lower, lo),
        upper_reasons: up.map(|u| pick(&upper, u)).unwrap_or_default(),
    }
}
