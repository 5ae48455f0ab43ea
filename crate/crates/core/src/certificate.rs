//! Split certificates: the witness every splitter emits and the verifier checks.
//!
//! A certificate lists, for each base vertex `v`, a copy count `k_v`, and a list
//! of split edges between copies. Copy indices are 1-based, so copy `(v, i)`
//! is valid when `1 <= i <= k_v`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::planarity;

/// Copy `index` (1-based) of base vertex `vertex`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CopyId {
    pub vertex: usize,
    pub index: usize,
}

impl CopyId {
    pub const fn new(vertex: usize, index: usize) -> Self {
        CopyId { vertex, index }
    }
}

impl fmt::Display for CopyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.vertex, self.index)
    }
}

/// An edge of the split graph, joining two copies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SplitEdge(pub CopyId, pub CopyId);

impl SplitEdge {
    pub fn new(a: CopyId, b: CopyId) -> Self {
        SplitEdge(a, b)
    }

    /// Endpoints ordered so that the smaller copy comes first.
    pub fn normalized(self) -> Self {
        if self.1 < self.0 {
            SplitEdge(self.1, self.0)
        } else {
            self
        }
    }

    /// The base edge this split edge realizes, as `(min, max)`.
    pub fn projection(&self) -> (usize, usize) {
        let (u, v) = (self.0.vertex, self.1.vertex);
        (u.min(v), u.max(v))
    }
}

/// A candidate k-split of `base`.
///
/// Fields are public so that malformed certificates can be represented and
/// reported on by [`verify_certificate`]; nothing here is validated on
/// construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitCertificate {
    pub base: Graph,
    /// `copies[v]` is the number of copies `k_v` of base vertex `v`.
    pub copies: Vec<usize>,
    pub edges: Vec<SplitEdge>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("certificate is structurally invalid: {0}")]
    Malformed(Violation),
}

impl SplitCertificate {
    pub fn new(base: Graph, copies: Vec<usize>, edges: Vec<SplitEdge>) -> Self {
        SplitCertificate { base, copies, edges }
    }

    /// One copy per vertex, one split edge per base edge.
    pub fn identity(base: &Graph) -> Self {
        let edges = base
            .edges()
            .iter()
            .map(|&(u, v)| SplitEdge(CopyId::new(u, 1), CopyId::new(v, 1)))
            .collect();
        SplitCertificate { base: base.clone(), copies: vec![1; base.vertex_count()], edges }
    }

    pub fn max_copies(&self) -> usize {
        self.copies.iter().copied().max().unwrap_or(0)
    }

    pub fn total_copies(&self) -> usize {
        self.copies.iter().sum()
    }

    fn copy_in_range(&self, c: CopyId) -> bool {
        c.vertex < self.copies.len() && c.vertex < self.base.vertex_count() && c.index >= 1 && c.index <= self.copies[c.vertex]
    }

    /// Dense label of each copy in the split graph: copies of vertex 0 first,
    /// then vertex 1, and so on, each in index order.
    pub fn copy_offsets(&self) -> Vec<usize> {
        let mut offsets = Vec::with_capacity(self.copies.len() + 1);
        let mut acc = 0;
        offsets.push(0);
        for &k in &self.copies {
            acc += k;
            offsets.push(acc);
        }
        offsets
    }

    /// The copy behind each split-graph vertex, in dense-label order.
    pub fn copy_ids(&self) -> Vec<CopyId> {
        self.copies
            .iter()
            .enumerate()
            .flat_map(|(v, &k)| (1..=k).map(move |i| CopyId::new(v, i)))
            .collect()
    }

    /// Builds the split graph on `Σ k_v` vertices.
    ///
    /// Fails on the first dangling copy reference, copy-level self-loop or
    /// duplicated split edge, since none of these yield a simple graph.
    pub fn split_graph(&self) -> Result<Graph, CertificateError> {
        if self.copies.len() != self.base.vertex_count() {
            return Err(CertificateError::Malformed(Violation::CopyTableMismatch {
                expected: self.base.vertex_count(),
                found: self.copies.len(),
            }));
        }
        let offsets = self.copy_offsets();
        let label = |c: CopyId| offsets[c.vertex] + c.index - 1;
        let mut seen = HashSet::with_capacity(self.edges.len());
        let mut edges = Vec::with_capacity(self.edges.len());
        for (pos, &e) in self.edges.iter().enumerate() {
            for c in [e.0, e.1] {
                if !self.copy_in_range(c) {
                    return Err(CertificateError::Malformed(Violation::DanglingCopy { edge: pos, copy: c }));
                }
            }
            if e.0 == e.1 {
                return Err(CertificateError::Malformed(Violation::SelfLoop { edge: pos }));
            }
            if !seen.insert(e.normalized()) {
                return Err(CertificateError::Malformed(Violation::DuplicateSplitEdge { edge: pos }));
            }
            edges.push((label(e.0), label(e.1)));
        }
        Ok(Graph::from_edges_lossy(offsets[self.copies.len()], edges))
    }

    /// Collapses split edges back onto base vertices.
    ///
    /// Split edges whose endpoints fall outside the base graph or project onto
    /// a loop are ignored.
    pub fn project(&self) -> Graph {
        let n = self.base.vertex_count();
        Graph::from_edges_lossy(n, self.edges.iter().map(SplitEdge::projection))
    }

    /// Renumbers copies of each vertex in first-use order along `edges`,
    /// dropping copies that no edge uses (every vertex keeps at least one).
    pub fn canonical(&self) -> SplitCertificate {
        let mut remap: Vec<Vec<usize>> = self.copies.iter().map(|&k| vec![0; k + 1]).collect();
        let mut used = vec![0usize; self.copies.len()];
        let mut edges = Vec::with_capacity(self.edges.len());
        for &SplitEdge(a, b) in &self.edges {
            let mut map = |c: CopyId| {
                if !self.copy_in_range(c) {
                    return c;
                }
                let slot = &mut remap[c.vertex][c.index];
                if *slot == 0 {
                    used[c.vertex] += 1;
                    *slot = used[c.vertex];
                }
                CopyId::new(c.vertex, *slot)
            };
            let a = map(a);
            let b = map(b);
            edges.push(SplitEdge(a, b));
        }
        let copies = used.iter().map(|&u| u.max(1)).collect();
        SplitCertificate { base: self.base.clone(), copies, edges }
    }

    /// Whether each base edge is realized by exactly one split edge.
    pub fn is_minimal(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges.iter().all(|e| seen.insert(e.projection())) && seen.len() == self.base.edge_count()
    }
}

/// Stable code for each way a certificate can be rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ViolationCode {
    CopyTableMismatch,
    NoCopies,
    DanglingCopy,
    SelfLoop,
    DuplicateSplitEdge,
    NonEdgeProjection,
    UncoveredEdge,
    CopyBudgetExceeded,
    NonPlanar,
}

impl ViolationCode {
    pub fn as_str(self) -> &'static str {
        match self {
            ViolationCode::CopyTableMismatch => "copy-table-mismatch",
            ViolationCode::NoCopies => "no-copies",
            ViolationCode::DanglingCopy => "dangling-copy",
            ViolationCode::SelfLoop => "self-loop",
            ViolationCode::DuplicateSplitEdge => "duplicate-split-edge",
            ViolationCode::NonEdgeProjection => "non-edge-projection",
            ViolationCode::UncoveredEdge => "uncovered-edge",
            ViolationCode::CopyBudgetExceeded => "copy-budget-exceeded",
            ViolationCode::NonPlanar => "non-planar",
        }
    }
}

impl fmt::Display for ViolationCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    CopyTableMismatch { expected: usize, found: usize },
    NoCopies { vertex: usize },
    DanglingCopy { edge: usize, copy: CopyId },
    SelfLoop { edge: usize },
    DuplicateSplitEdge { edge: usize },
    NonEdgeProjection { edge: usize, u: usize, v: usize },
    UncoveredEdge { u: usize, v: usize },
    CopyBudgetExceeded { vertex: usize, copies: usize, budget: usize },
    NonPlanar,
}

impl Violation {
    pub fn code(&self) -> ViolationCode {
        match self {
            Violation::CopyTableMismatch { .. } => ViolationCode::CopyTableMismatch,
            Violation::NoCopies { .. } => ViolationCode::NoCopies,
            Violation::DanglingCopy { .. } => ViolationCode::DanglingCopy,
            Violation::SelfLoop { .. } => ViolationCode::SelfLoop,
            Violation::DuplicateSplitEdge { .. } => ViolationCode::DuplicateSplitEdge,
            Violation::NonEdgeProjection { .. } => ViolationCode::NonEdgeProjection,
            Violation::UncoveredEdge { .. } => ViolationCode::UncoveredEdge,
            Violation::CopyBudgetExceeded { .. } => ViolationCode::CopyBudgetExceeded,
            Violation::NonPlanar => ViolationCode::NonPlanar,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.code())?;
        match self {
            Violation::CopyTableMismatch { expected, found } => {
                write!(f, "copy table has {found} entries, base graph has {expected} vertices")
            }
            Violation::NoCopies { vertex } => write!(f, "vertex {vertex} has no copies"),
            Violation::DanglingCopy { edge, copy } => write!(f, "split edge #{edge} references unknown copy {copy}"),
            Violation::SelfLoop { edge } => write!(f, "split edge #{edge} is a loop"),
            Violation::DuplicateSplitEdge { edge } => write!(f, "split edge #{edge} repeats an earlier edge"),
            Violation::NonEdgeProjection { edge, u, v } => {
                write!(f, "split edge #{edge} projects onto ({u}, {v}), which is not a base edge")
            }
            Violation::UncoveredEdge { u, v } => write!(f, "base edge ({u}, {v}) has no split edge"),
            Violation::CopyBudgetExceeded { vertex, copies, budget } => {
                write!(f, "vertex {vertex} has {copies} copies, budget is {budget}")
            }
            Violation::NonPlanar => write!(f, "split graph is not planar"),
        }
    }
}

/// Outcome of [`verify_certificate`]; accepted iff `violations` is empty.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerifyReport {
    pub violations: Vec<Violation>,
    /// `None` when structural errors prevented building the split graph.
    pub planar: Option<bool>,
}

impl VerifyReport {
    pub fn accepted(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, code: ViolationCode) -> bool {
        self.violations.iter().any(|v| v.code() == code)
    }

    pub fn codes(&self) -> BTreeSet<ViolationCode> {
        self.violations.iter().map(Violation::code).collect()
    }
}

/// Checks that `cert` is a planar k-split of its base graph.
///
/// Every violated condition is reported, not just the first. Planarity is
/// only tested when the split graph is well formed.
pub fn verify_certificate(cert: &SplitCertificate, k: usize) -> VerifyReport {
    let mut violations = Vec::new();
    let base = &cert.base;
    let n = base.vertex_count();
    if cert.copies.len() != n {
        violations.push(Violation::CopyTableMismatch { expected: n, found: cert.copies.len() });
    }
    for (v, &kv) in cert.copies.iter().enumerate().take(n) {
        if kv == 0 {
            violations.push(Violation::NoCopies { vertex: v });
        } else if kv > k {
            violations.push(Violation::CopyBudgetExceeded { vertex: v, copies: kv, budget: k });
        }
    }

    let mut structural = cert.copies.len() == n;
    let mut covered = vec![false; base.edge_count()];
    let mut seen = HashSet::with_capacity(cert.edges.len());
    for (pos, &e) in cert.edges.iter().enumerate() {
        let mut dangling = false;
        for c in [e.0, e.1] {
            if !cert.copy_in_range(c) {
                violations.push(Violation::DanglingCopy { edge: pos, copy: c });
                dangling = true;
            }
        }
        if dangling {
            structural = false;
            continue;
        }
        if e.0 == e.1 {
            violations.push(Violation::SelfLoop { edge: pos });
            structural = false;
            continue;
        }
        if !seen.insert(e.normalized()) {
            violations.push(Violation::DuplicateSplitEdge { edge: pos });
            structural = false;
        }
        let (u, v) = e.projection();
        match base.edge_index(u, v) {
            Some(i) if u != v => covered[i] = true,
            _ => violations.push(Violation::NonEdgeProjection { edge: pos, u, v }),
        }
    }
    for (i, &(u, v)) in base.edges().iter().enumerate() {
        if !covered[i] {
            violations.push(Violation::UncoveredEdge { u, v });
        }
    }

    let planar = if structural {
        cert.split_graph().ok().map(|g| planarity::is_planar(&g))
    } else {
        None
    };
    if planar == Some(false) {
        violations.push(Violation::NonPlanar);
    }
    VerifyReport { violations, planar }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn identity_on_k4_accepted() {
        let g = generators::complete(4).unwrap();
        let report = verify_certificate(&SplitCertificate::identity(&g), 1);
        assert!(report.accepted(), "{:?}", report.violations);
        assert_eq!(report.planar, Some(true));
    }

    #[test]
    fn identity_on_k5_is_non_planar() {
        let g = generators::complete(5).unwrap();
        let report = verify_certificate(&SplitCertificate::identity(&g), 1);
        assert_eq!(report.codes(), [ViolationCode::NonPlanar].into());
    }

    #[test]
    fn dropped_edge_is_uncovered() {
        let g = generators::cycle(5);
        let mut cert = SplitCertificate::identity(&g);
        // edges are sorted, so index 2 is (1, 2)
        cert.edges.remove(2);
        let report = verify_certificate(&cert, 1);
        assert_eq!(report.violations, vec![Violation::UncoveredEdge { u: 1, v: 2 }]);
        assert_eq!(cert.project().edge_count(), 4);
    }

    #[test]
    fn each_structural_fault_has_its_own_code() {
        let g = generators::cycle(4);
        let base = SplitCertificate::identity(&g);

        let mut c = base.clone();
        c.edges.push(SplitEdge(CopyId::new(0, 3), CopyId::new(1, 1)));
        assert!(verify_certificate(&c, 2).has(ViolationCode::DanglingCopy));

        let mut c = base.clone();
        c.edges.push(c.edges[0]);
        assert!(verify_certificate(&c, 1).has(ViolationCode::DuplicateSplitEdge));

        let mut c = base.clone();
        c.copies[0] = 2;
        c.edges.push(SplitEdge(CopyId::new(0, 1), CopyId::new(0, 2)));
        let r = verify_certificate(&c, 2);
        assert!(r.has(ViolationCode::SelfLoop) || r.has(ViolationCode::NonEdgeProjection));

        let mut c = base.clone();
        c.edges[0] = SplitEdge(CopyId::new(0, 1), CopyId::new(2, 1));
        let r = verify_certificate(&c, 1);
        assert!(r.has(ViolationCode::NonEdgeProjection));
        assert!(r.has(ViolationCode::UncoveredEdge));

        let mut c = base.clone();
        c.copies[3] = 3;
        assert_eq!(verify_certificate(&c, 2).codes(), [ViolationCode::CopyBudgetExceeded].into());

        let mut c = base;
        c.copies.pop();
        assert!(verify_certificate(&c, 1).has(ViolationCode::CopyTableMismatch));
    }

    #[test]
    fn canonical_renumbers_in_first_use_order() {
        let g = generators::path(3);
        let cert = SplitCertificate::new(
            g,
            vec![1, 3, 1],
            vec![
                SplitEdge(CopyId::new(0, 1), CopyId::new(1, 3)),
                SplitEdge(CopyId::new(1, 2), CopyId::new(2, 1)),
            ],
        );
        let c = cert.canonical();
        assert_eq!(c.copies, vec![1, 2, 1]);
        assert_eq!(c.edges[0].1, CopyId::new(1, 1));
        assert_eq!(c.edges[1].0, CopyId::new(1, 2));
    }

    #[test]
    fn split_graph_counts() {
        let g = generators::complete(4).unwrap();
        let mut cert = SplitCertificate::identity(&g);
        cert.copies[2] = 2;
        cert.edges[1] = SplitEdge(CopyId::new(0, 1), CopyId::new(2, 2));
        let sg = cert.split_graph().unwrap();
        assert_eq!(sg.vertex_count(), 5);
        assert_eq!(sg.edge_count(), 6);
        assert_eq!(cert.copy_ids()[3], CopyId::new(2, 2));
    }
}
