use crate::certificate::{CopyId, SplitCertificate, SplitEdge};
use crate::graph::Graph;

/// Splits each vertex of degree `d` into `⌈d/2⌉` copies, handing its
/// neighbors out two per copy in adjacency order. The split graph has maximum
/// degree 2, so it is a union of paths and cycles. Isolated vertices keep one copy.
pub fn split_by_degree(g: &Graph) -> SplitCertificate {
    let copy_of = |v: usize, w: usize| {
        let pos = g.neighbors(v).binary_search(&w).expect("edge endpoint");
        CopyId::new(v, pos / 2 + 1)
    };
    let copies = g.vertices().map(|v| g.degree(v).div_ceil(2).max(1)).collect();
    let edges = g.edges().iter().map(|&(u, v)| SplitEdge(copy_of(u, v), copy_of(v, u))).collect();
    SplitCertificate::new(g.clone(), copies, edges)
}
