//! Planarity testing, combinatorial embeddings and face tracing.

mod empire;
mod lr;

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::Graph;

pub use empire::{check_empire_conditions, check_quadrangulation_conditions, EmpireError, EmpireReport, FaceShape};

/// Above this many vertices the recursive passes run on a dedicated thread
/// with a stack sized to the input.
const DEEP_RECURSION_VERTICES: usize = 4_000;

/// Largest edge count for which `embed` extracts a Kuratowski witness.
const WITNESS_EDGE_LIMIT: usize = 300;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlanarityError {
    #[error("graph is not planar")]
    NonPlanar {
        /// Edge-minimal non-planar subgraph (a subdivision of K5 or K3,3), when computed.
        witness: Option<Graph>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingError {
    #[error("rotation at vertex {vertex} lists {neighbor}, which does not list {vertex} back")]
    Asymmetric { vertex: usize, neighbor: usize },
    #[error("rotation at vertex {vertex} repeats or invents neighbor {neighbor}")]
    BadNeighbor { vertex: usize, neighbor: usize },
}

fn run_deep<T: Send>(n: usize, f: impl FnOnce() -> T + Send) -> T {
    if n < DEEP_RECURSION_VERTICES {
        return f();
    }
    let stack = (8 << 20) + n * 1024;
    std::thread::scope(|s| {
        std::thread::Builder::new()
            .name("lr-planarity".into())
            .stack_size(stack)
            .spawn_scoped(s, f)
            .expect("spawn planarity worker")
            .join()
            .expect("planarity worker panicked")
    })
}

fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    g.vertices().map(|v| g.neighbors(v).to_vec()).collect()
}

/// Whether `g` admits a planar embedding.
pub fn is_planar(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n > 2 && g.edge_count() > 3 * n - 6 {
        return false;
    }
    let adj = adjacency(g);
    run_deep(n, || lr::lr_planarity(&adj, g.edges()).is_some())
}

/// A rotation system: for each vertex, its neighbors in clockwise order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    rotation: Vec<Vec<usize>>,
    components: Vec<Vec<usize>>,
}

impl Embedding {
    /// Wraps a rotation system after checking that it is consistent.
    pub fn from_rotation(rotation: Vec<Vec<usize>>) -> Result<Self, EmbeddingError> {
        let n = rotation.len();
        let mut sorted: Vec<Vec<usize>> = rotation.clone();
        for (v, list) in sorted.iter_mut().enumerate() {
            list.sort_unstable();
            for w in list.windows(2) {
                if w[0] == w[1] {
                    return Err(EmbeddingError::BadNeighbor { vertex: v, neighbor: w[0] });
                }
            }
            if let Some(&bad) = list.iter().find(|&&w| w >= n || w == v) {
                return Err(EmbeddingError::BadNeighbor { vertex: v, neighbor: bad });
            }
        }
        for v in 0..n {
            for &w in &sorted[v] {
                if sorted[w].binary_search(&v).is_err() {
                    return Err(EmbeddingError::Asymmetric { vertex: v, neighbor: w });
                }
            }
        }
        let edges = sorted.iter().enumerate().flat_map(|(v, l)| l.iter().filter(move |&&w| v < w).map(move |&w| (v, w)));
        let components = Graph::from_edges_lossy(n, edges).components();
        Ok(Embedding { rotation, components })
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rotation.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Clockwise neighbor order around `v`.
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }
}

/// Computes a planar embedding of `g`.
pub fn embed(g: &Graph) -> Result<Embedding, PlanarityError> {
    let n = g.vertex_count();
    let adj = adjacency(g);
    let rotation = if n > 2 && g.edge_count() > 3 * n - 6 {
        None
    } else {
        run_deep(n, || lr::lr_planarity(&adj, g.edges()))
    };
    match rotation {
        Some(rotation) => Ok(Embedding { rotation, components: g.components() }),
        None => {
            let witness = (g.edge_count() <= WITNESS_EDGE_LIMIT).then(|| kuratowski_subgraph(g)).flatten();
            Err(PlanarityError::NonPlanar { witness })
        }
    }
}

/// An edge-minimal non-planar subgraph of `g` on the same vertex labels, or
/// `None` if `g` is planar. Costs one planarity test per edge.
pub fn kuratowski_subgraph(g: &Graph) -> Option<Graph> {
    if is_planar(g) {
        return None;
    }
    let mut keep: Vec<(usize, usize)> = g.edges().to_vec();
    let mut i = 0;
    while i < keep.len() {
        let mut trial = keep.clone();
        trial.remove(i);
        if is_planar(&Graph::from_edges_lossy(g.vertex_count(), trial.iter().copied())) {
            i += 1;
        } else {
            keep = trial;
        }
    }
    Some(Graph::from_edges_lossy(g.vertex_count(), keep))
}

/// Faces of an embedding as closed walks of directed edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceList {
    pub faces: Vec<Vec<(usize, usize)>>,
    /// Components of the embedded graph that contain at least one edge.
    pub nontrivial_components: usize,
}

impl FaceList {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Vertices on the boundary of face `i`.
    pub fn boundary(&self, i: usize) -> BTreeSet<usize> {
        self.faces[i].iter().map(|&(u, _)| u).collect()
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    /// Faces of the whole drawing in the plane: outer faces of separate
    /// components merge into one.
    pub fn plane_face_count(&self) -> usize {
        if self.nontrivial_components == 0 {
            1
        } else {
            self.faces.len() + 1 - self.nontrivial_components
        }
    }
}

/// Traces every face: from dart `(u, v)` the walk continues with `(v, w)`
/// where `w` precedes `u` in the clockwise rotation at `v`.
pub fn faces(e: &Embedding) -> FaceList {
    let n = e.vertex_count();
    let mut offset = Vec::with_capacity(n + 1);
    offset.push(0);
    for v in 0..n {
        offset.push(offset[v] + e.rotation[v].len());
    }
    // position of each neighbor within the rotation, for O(log d) lookup
    let position: Vec<Vec<(usize, usize)>> = e
        .rotation
        .iter()
        .map(|list| {
            let mut p: Vec<(usize, usize)> = list.iter().enumerate().map(|(i, &w)| (w, i)).collect();
            p.sort_unstable();
            p
        })
        .collect();
    let index_of = |v: usize, w: usize| {
        let p = &position[v];
        p[p.binary_search_by_key(&w, |&(x, _)| x).expect("consistent rotation")].1
    };

    let mut visited = vec![false; offset[n]];
    let mut faces = Vec::new();
    for u in 0..n {
        for i in 0..e.rotation[u].len() {
            if visited[offset[u] + i] {
                continue;
            }
            let mut walk = Vec::new();
            let (mut a, mut ai) = (u, i);
            while !visited[offset[a] + ai] {
                visited[offset[a] + ai] = true;
                let b = e.rotation[a][ai];
                walk.push((a, b));
                let rot_b = &e.rotation[b];
                let j = index_of(b, a);
                let next = (j + rot_b.len() - 1) % rot_b.len();
                a = b;
                ai = next;
            }
            faces.push(walk);
        }
    }
    let nontrivial_components = e.components.iter().filter(|c| c.len() > 1).count();
    FaceList { faces, nontrivial_components }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn euler_ok(g: &Graph) -> bool {
        let emb = embed(g).expect("planar");
        let f = faces(&emb);
        let c = g.components().len();
        g.vertex_count() + f.plane_face_count() == g.edge_count() + 1 + c
    }

    #[test]
    fn small_decisions() {
        assert!(is_planar(&generators::complete(4).unwrap()));
        assert!(!is_planar(&generators::complete(5).unwrap()));
        assert!(!is_planar(&generators::complete_bipartite(3, 3).unwrap()));
        assert!(is_planar(&generators::complete_bipartite(2, 9).unwrap()));
        assert!(!is_planar(&generators::petersen()));
        assert!(is_planar(&generators::hypercube(3)));
        assert!(!is_planar(&generators::hypercube(4)));
    }

    #[test]
    fn face_counts_of_known_embeddings() {
        let k4 = embed(&generators::complete(4).unwrap()).unwrap();
        let f = faces(&k4);
        assert_eq!(f.len(), 4);
        assert!(f.lengths().iter().all(|&l| l == 3));

        assert_eq!(faces(&embed(&generators::hypercube(3)).unwrap()).len(), 6);
        assert_eq!(faces(&embed(&generators::complete_bipartite(2, 3).unwrap()).unwrap()).len(), 3);

        let tri = faces(&embed(&generators::cycle(3)).unwrap());
        assert_eq!(tri.lengths(), vec![3, 3]);

        let star = Graph::new(5, [(0, 1), (0, 2), (2, 3), (2, 4)]).unwrap();
        let f = faces(&embed(&star).unwrap());
        assert_eq!(f.lengths(), vec![8]);
    }

    #[test]
    fn disconnected_inputs_satisfy_euler() {
        let g = Graph::new(9, [(0, 1), (1, 2), (0, 2), (3, 4), (5, 6), (6, 7), (7, 5), (5, 8)]).unwrap();
        assert!(euler_ok(&g));
        assert!(euler_ok(&Graph::empty(3)));
    }

    #[test]
    fn witness_is_a_kuratowski_subdivision() {
        let g = generators::petersen();
        let Err(PlanarityError::NonPlanar { witness: Some(w) }) = embed(&g) else {
            panic!("expected witness");
        };
        assert!(!is_planar(&w));
        // branch vertices: 5 of degree 4 or 6 of degree 3, the rest degree 2 or isolated
        let degs: Vec<usize> = w.vertices().map(|v| w.degree(v)).filter(|&d| d > 2).collect();
        assert!(degs == vec![4; 5] || degs == vec![3; 6], "{degs:?}");
    }

    #[test]
    fn rejects_inconsistent_rotation() {
        assert!(matches!(
            Embedding::from_rotation(vec![vec![1], vec![]]),
            Err(EmbeddingError::Asymmetric { vertex: 0, neighbor: 1 })
        ));
        assert!(Embedding::from_rotation(vec![vec![1, 1], vec![0]]).is_err());
    }

    #[test]
    fn large_grid_is_planar() {
        let side = 150;
        let id = |r: usize, c: usize| r * side + c;
        let mut edges = Vec::new();
        for r in 0..side {
            for c in 0..side {
                if r + 1 < side {
                    edges.push((id(r, c), id(r + 1, c)));
                }
                if c + 1 < side {
                    edges.push((id(r, c), id(r, c + 1)));
                }
            }
        }
        let g = Graph::new(side * side, edges).unwrap();
        assert!(euler_ok(&g));
    }
}
