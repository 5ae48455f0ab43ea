use super::sat::{validate_instance, InstanceError, SatInstance};
use crate::generators;
use crate::graph::Graph;

/// The rigid block glued onto every K-vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KBlock {
    /// `K_12`, glued at its vertex 0.
    K12,
    /// `K_{7,8}`, glued at vertex 7, a vertex of the 8-side (degree 7).
    K78,
}

impl KBlock {
    pub fn graph(self) -> Graph {
        match self {
            KBlock::K12 => generators::complete(12),
            KBlock::K78 => generators::complete_bipartite(7, 8),
        }
        .expect("fixed sizes")
    }

    /// Block vertex identified with the K-vertex.
    pub fn anchor(self) -> usize {
        match self {
            KBlock::K12 => 0,
            KBlock::K78 => 7,
        }
    }

    pub fn size(self) -> usize {
        match self {
            KBlock::K12 => 12,
            KBlock::K78 => 15,
        }
    }
}

/// Vertices of one variable gadget: a 4-cycle `v1 v2 v3 v4` with the paths
/// `v1 - positive - v3` and `v2 - negative - v4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VariableGadget {
    pub positive: usize,
    pub negative: usize,
    pub cycle: [usize; 4],
}

/// Vertices of one clause gadget: a `K_5` on `c, c_prime, ports[0..3]` whose
/// edges `c - ports[k]` are subdivided by `literals[k]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClauseGadget {
    pub c: usize,
    pub c_prime: usize,
    pub ports: [usize; 3],
    pub literals: [usize; 3],
}

/// One copy of the block: `vertices[t]` is the graph vertex playing block vertex `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCopy {
    pub anchor: usize,
    pub vertices: Vec<usize>,
}

/// Output of [`reduce`].
///
/// Labels: variable `i` owns `6i..6i+6` (positive, negative, `v1..v4`);
/// clause `j` owns the next eight per clause (`c`, `c'`, three ports, three
/// literal vertices); block vertices follow, one block per K-vertex in
/// ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HardnessGraph {
    pub graph: Graph,
    pub instance: SatInstance,
    pub kblock: KBlock,
    /// Ascending.
    pub kvertices: Vec<usize>,
    pub variables: Vec<VariableGadget>,
    pub clauses: Vec<ClauseGadget>,
    /// Aligned with `kvertices`.
    pub blocks: Vec<BlockCopy>,
}

impl HardnessGraph {
    /// Graph vertex of literal slot `k` of clause `j`'s variable side.
    pub fn literal_source(&self, j: usize, k: usize) -> usize {
        let l = self.instance.clauses[j][k];
        let g = &self.variables[l.var];
        if l.negated {
            g.negative
        } else {
            g.positive
        }
    }
}

/// Builds the reduction graph for `inst`.
pub fn reduce(inst: &SatInstance, kblock: KBlock) -> Result<HardnessGraph, InstanceError> {
    validate_instance(inst)?;
    let nv = inst.num_vars;
    let variables: Vec<VariableGadget> = (0..nv)
        .map(|i| {
            let b = 6 * i;
            VariableGadget { positive: b, negative: b + 1, cycle: [b + 2, b + 3, b + 4, b + 5] }
        })
        .collect();
    let clauses: Vec<ClauseGadget> = (0..inst.clauses.len())
        .map(|j| {
            let b = 6 * nv + 8 * j;
            ClauseGadget { c: b, c_prime: b + 1, ports: [b + 2, b + 3, b + 4], literals: [b + 5, b + 6, b + 7] }
        })
        .collect();
    let core = 6 * nv + 8 * inst.clauses.len();

    let mut edges = Vec::new();
    for g in &variables {
        let [a, b, c, d] = g.cycle;
        edges.extend([(a, b), (b, c), (c, d), (d, a)]);
        edges.extend([(a, g.positive), (g.positive, c), (b, g.negative), (g.negative, d)]);
    }
    for (j, cg) in clauses.iter().enumerate() {
        edges.push((cg.c, cg.c_prime));
        for k in 0..3 {
            edges.push((cg.c_prime, cg.ports[k]));
            edges.push((cg.ports[k], cg.ports[(k + 1) % 3]));
            edges.push((cg.c, cg.literals[k]));
            edges.push((cg.literals[k], cg.ports[k]));
            let l = inst.clauses[j][k];
            let source = if l.negated { variables[l.var].negative } else { variables[l.var].positive };
            edges.push((source, cg.literals[k]));
        }
    }
    for (a, b) in inst.cycle_pairs() {
        edges.push((clauses[a].c, clauses[b].c));
    }

    let literal_vertices: Vec<usize> = clauses.iter().flat_map(|c| c.literals).collect();
    let kvertices: Vec<usize> = (0..core).filter(|v| !literal_vertices.contains(v)).collect();
    let block = kblock.graph();
    let mut next = core;
    let mut blocks = Vec::with_capacity(kvertices.len());
    for &x in &kvertices {
        let vertices: Vec<usize> = (0..kblock.size())
            .map(|t| {
                if t == kblock.anchor() {
                    x
                } else {
                    next += 1;
                    next - 1
                }
            })
            .collect();
        edges.extend(block.edges().iter().map(|&(s, t)| (vertices[s], vertices[t])));
        blocks.push(BlockCopy { anchor: x, vertices });
    }

    let graph = Graph::new(next, edges).expect("reduction edges are simple");
    debug_assert_eq!(kvertices.len(), 6 * nv + 5 * inst.clauses.len());
    debug_assert_eq!(graph.vertex_count(), core + kvertices.len() * (kblock.size() - 1));
    Ok(HardnessGraph { graph, instance: inst.clone(), kblock, kvertices, variables, clauses, blocks })
}
