use thiserror::Error;

use super::reduction::{HardnessGraph, KBlock};
use super::sat::Assignment;
use crate::certificate::{verify_certificate, CopyId, SplitCertificate, SplitEdge};
use crate::planarity::{check_empire_conditions, check_quadrangulation_conditions};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("assignment has {found} values for {expected} variables")]
    AssignmentLength { expected: usize, found: usize },
    #[error("assignment falsifies clause {0}")]
    Unsatisfied(usize),
    #[error("block certificate is for a different graph than the {0:?} block")]
    BlockMismatch(KBlock),
    #[error("block certificate is not a separated-empire 2-split: {0}")]
    InvalidBlockCertificate(String),
}

fn check_block(kblock: KBlock, cert: &SplitCertificate) -> Result<(), WitnessError> {
    if cert.base != kblock.graph() {
        return Err(WitnessError::BlockMismatch(kblock));
    }
    let verdict = verify_certificate(cert, 2);
    if !verdict.accepted() {
        let msg = verdict.violations.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ");
        return Err(WitnessError::InvalidBlockCertificate(msg));
    }
    let report = match kblock {
        KBlock::K12 => check_empire_conditions(cert),
        KBlock::K78 => check_quadrangulation_conditions(cert),
    }
    .map_err(|e| WitnessError::InvalidBlockCertificate(e.to_string()))?;
    if !report.passed() {
        return Err(WitnessError::InvalidBlockCertificate(format!("{report:?}")));
    }
    Ok(())
}

/// Builds a planar 2-split of the reduction graph from a satisfying assignment.
///
/// Every block is split as in `kblock_cert`, with copy 1 of its K-vertex
/// keeping all edges outside the block. A literal vertex whose literal is
/// false is split into `{c, port}` and `{variable}`; a true one into
/// `{variable, c}` and `{port}`. All other vertices stay whole.
pub fn build_witness(
    hg: &HardnessGraph,
    a: &Assignment,
    kblock_cert: &SplitCertificate,
) -> Result<SplitCertificate, WitnessError> {
    let inst = &hg.instance;
    if a.0.len() != inst.num_vars {
        return Err(WitnessError::AssignmentLength { expected: inst.num_vars, found: a.0.len() });
    }
    if let Some(j) = inst.first_unsatisfied(a) {
        return Err(WitnessError::Unsatisfied(j));
    }
    check_block(hg.kblock, kblock_cert)?;

    let g = &hg.graph;
    let n = g.vertex_count();
    let mut copies = vec![1; n];
    let mut in_block = vec![false; n];
    let mut edges = Vec::with_capacity(g.edge_count() + hg.blocks.len());

    for block in &hg.blocks {
        for (t, &v) in block.vertices.iter().enumerate() {
            copies[v] = kblock_cert.copies[t];
            in_block[v] = v != block.anchor;
        }
        for &SplitEdge(p, q) in &kblock_cert.edges {
            let map = |c: CopyId| CopyId::new(block.vertices[c.vertex], c.index);
            edges.push(SplitEdge(map(p), map(q)));
        }
    }

    // copy of literal vertex `l` that takes its edge to neighbor `w`
    let mut literal_copy = vec![[0usize; 3]; n];
    let mut is_literal = vec![false; n];
    for (j, cg) in hg.clauses.iter().enumerate() {
        for k in 0..3 {
            let l = cg.literals[k];
            is_literal[l] = true;
            copies[l] = 2;
            let truth = inst.clauses[j][k].value(a);
            // order: variable side, c, port
            literal_copy[l] = if truth { [1, 1, 2] } else { [2, 1, 1] };
        }
    }
    let literal_neighbor_slot = |l: usize, w: usize| -> usize {
        let (j, k) = hg
            .clauses
            .iter()
            .enumerate()
            .find_map(|(j, cg)| cg.literals.iter().position(|&x| x == l).map(|k| (j, k)))
            .expect("literal vertex");
        let cg = &hg.clauses[j];
        if w == cg.c {
            1
        } else if w == cg.ports[k] {
            2
        } else {
            debug_assert_eq!(w, hg.literal_source(j, k));
            0
        }
    };

    for &(u, v) in g.edges() {
        if in_block[u] || in_block[v] {
            continue;
        }
        let copy = |x: usize, other: usize| {
            if is_literal[x] {
                literal_copy[x][literal_neighbor_slot(x, other)]
            } else {
                1
            }
        };
        edges.push(SplitEdge(CopyId::new(u, copy(u, v)), CopyId::new(v, copy(v, u))));
    }
    Ok(SplitCertificate::new(g.clone(), copies, edges))
}
