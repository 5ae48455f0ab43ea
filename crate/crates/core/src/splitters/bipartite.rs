use super::SplitterError;
use crate::certificate::{CopyId, SplitCertificate, SplitEdge};
use crate::generators;
use crate::graph::Graph;

fn columns(g: &Graph, side: &[usize], other: &[usize]) -> SplitCertificate {
    let k = side.len().div_ceil(2);
    let mut copies = vec![1; g.vertex_count()];
    for &b in other {
        copies[b] = k;
    }
    let mut column = vec![0; g.vertex_count()];
    for (i, &a) in side.iter().enumerate() {
        column[a] = i / 2 + 1;
    }
    let edges = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = if column[u] > 0 { (u, v) } else { (v, u) };
            SplitEdge::new(CopyId::new(a, 1), CopyId::new(b, column[a])).normalized()
        })
        .collect();
    SplitCertificate::new(g.clone(), copies, edges)
}

/// Splits `K_{m,n}` (as built by [`generators::complete_bipartite`]) into
/// `m/2` disjoint copies of `K_{2,n}`: the `m`-side is cut into consecutive
/// pairs and every `n`-side vertex gets one copy per pair.
pub fn split_bipartite_columns(m: usize, n: usize) -> Result<SplitCertificate, SplitterError> {
    if m == 0 || n == 0 {
        return Err(SplitterError::EmptyPart);
    }
    if m % 2 == 1 {
        return Err(SplitterError::OddPart(m));
    }
    let g = generators::complete_bipartite(m, n).map_err(|_| SplitterError::EmptyPart)?;
    let a: Vec<usize> = (0..m).collect();
    let b: Vec<usize> = (m..m + n).collect();
    Ok(columns(&g, &a, &b))
}

/// Column split of any labelled complete bipartite graph, pairing up the
/// smaller side. An odd side leaves a final column of one vertex, so the
/// result is valid at `⌈m/2⌉` for smaller side `m`.
pub fn split_complete_bipartite(g: &Graph) -> Result<SplitCertificate, SplitterError> {
    let (a, b) = g.complete_bipartite_sides().ok_or(SplitterError::NotCompleteBipartite)?;
    Ok(columns(g, &a, &b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::verify_certificate;

    #[test]
    fn two_columns_is_identity() {
        let cert = split_bipartite_columns(2, 5).unwrap();
        assert_eq!(cert, SplitCertificate::identity(&generators::complete_bipartite(2, 5).unwrap()));
    }

    #[test]
    fn columns_are_disjoint_k2n() {
        for (m, n) in [(4, 7), (8, 3), (6, 6)] {
            let cert = split_bipartite_columns(m, n).unwrap();
            assert!(verify_certificate(&cert, m / 2).accepted());
            let split = cert.split_graph().unwrap();
            let comps: Vec<_> = split.components().into_iter().filter(|c| c.len() > 1).collect();
            assert_eq!(comps.len(), m / 2);
            assert!(comps.iter().all(|c| c.len() == n + 2));
        }
    }

    #[test]
    fn odd_side_rejected() {
        assert_eq!(split_bipartite_columns(3, 4), Err(SplitterError::OddPart(3)));
        assert_eq!(split_bipartite_columns(0, 4), Err(SplitterError::EmptyPart));
    }

    #[test]
    fn recognized_graph_with_odd_side() {
        let g = generators::complete_bipartite(9, 5).unwrap();
        let cert = split_complete_bipartite(&g).unwrap();
        assert_eq!(cert.max_copies(), 3);
        assert!(verify_certificate(&cert, 3).accepted());
        assert_eq!(split_complete_bipartite(&generators::petersen()), Err(SplitterError::NotCompleteBipartite));
    }
}
