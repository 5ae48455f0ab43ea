//! Splits read off embeddings in the torus and the projective plane.

use std::collections::BTreeMap;

use super::SplitterError;
use crate::certificate::{CopyId, SplitCertificate, SplitEdge};
use crate::graph::Graph;
use crate::planarity::is_planar;

fn annotate<T: Copy>(
    g: &Graph,
    items: impl IntoIterator<Item = ((usize, usize), T)>,
    flip: impl Fn(T) -> T,
) -> Result<Vec<T>, SplitterError> {
    let mut by_edge: BTreeMap<usize, T> = BTreeMap::new();
    for ((u, v), value) in items {
        let idx = g.edge_index(u, v).ok_or(SplitterError::UnknownEdge(u, v))?;
        let value = if u < v { value } else { flip(value) };
        if by_edge.insert(idx, value).is_some() {
            return Err(SplitterError::DuplicateAnnotation(u.min(v), u.max(v)));
        }
    }
    g.edges()
        .iter()
        .enumerate()
        .map(|(i, &(u, v))| by_edge.get(&i).copied().ok_or(SplitterError::MissingAnnotation(u, v)))
        .collect()
}

/// A graph drawn in the torus, recorded combinatorially.
///
/// The torus is the unit square with opposite sides identified. For each
/// edge `(u, v)` with `u < v`, `wrap = (wx, wy)` counts signed crossings of
/// the vertical and horizontal sides when walking from `u` to `v`: `wx = +1`
/// means leaving through the right side, `wy = +1` leaving through the top.
#[derive(Debug, Clone, PartialEq)]
pub struct TorusDrawing {
    graph: Graph,
    wrap: Vec<(i8, i8)>,
    coords: Option<Vec<(f64, f64)>>,
}

impl TorusDrawing {
    /// Wraps may be given from either endpoint; a wrap stated from the higher
    /// label is negated. Every edge needs exactly one wrap.
    pub fn new(
        graph: Graph,
        wraps: impl IntoIterator<Item = ((usize, usize), (i8, i8))>,
        coords: Option<Vec<(f64, f64)>>,
    ) -> Result<Self, SplitterError> {
        let wrap = annotate(&graph, wraps, |(x, y)| (-x, -y))?;
        for (&(u, v), &(wx, wy)) in graph.edges().iter().zip(&wrap) {
            if wx.abs() > 1 || wy.abs() > 1 {
                return Err(SplitterError::WrapOutOfRange { u, v, wx, wy });
            }
        }
        if let Some(c) = &coords {
            if c.len() != graph.vertex_count() {
                return Err(SplitterError::BadPosition(c.len().min(graph.vertex_count())));
            }
            let inside = |t: f64| (0.0..1.0).contains(&t);
            if let Some(v) = c.iter().position(|&(x, y)| !inside(x) || !inside(y)) {
                return Err(SplitterError::BadPosition(v));
            }
        }
        Ok(TorusDrawing { graph, wrap, coords })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Wrap of edge `i` of [`Graph::edges`], stated from its lower endpoint.
    pub fn wrap(&self, i: usize) -> (i8, i8) {
        self.wrap[i]
    }

    pub fn coords(&self) -> Option<&[(f64, f64)]> {
        self.coords.as_deref()
    }
}

/// Cuts the torus open along the horizontal side. An edge that crosses it is
/// reattached to a second copy of the endpoint it leaves through the bottom,
/// placed above the top side; horizontal wraps need no change, since the
/// resulting cylinder is drawn in the plane. Each vertex gets at most two
/// copies. The result is checked for planarity before it is returned.
pub fn split_torus(d: &TorusDrawing) -> Result<SplitCertificate, SplitterError> {
    let g = d.graph();
    let mut copies = vec![1; g.vertex_count()];
    let mut edges = Vec::with_capacity(g.edge_count());
    for (&(u, v), &(_, wy)) in g.edges().iter().zip(&d.wrap) {
        let (cu, cv) = match wy {
            -1 => (2, 1),
            1 => (1, 2),
            _ => (1, 1),
        };
        copies[u] = copies[u].max(cu);
        copies[v] = copies[v].max(cv);
        edges.push(SplitEdge(CopyId::new(u, cu), CopyId::new(v, cv)));
    }
    let cert = SplitCertificate::new(g.clone(), copies, edges);
    let split = cert.split_graph().map_err(|_| SplitterError::InvalidEmbedding)?;
    if !is_planar(&split) {
        return Err(SplitterError::InvalidEmbedding);
    }
    Ok(cert)
}

/// A graph with a `±1` sign on every edge; `-1` marks an edge that passes
/// through the crosscap of a projective-plane embedding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedGraph {
    graph: Graph,
    sign: Vec<i8>,
}

impl SignedGraph {
    pub fn new(graph: Graph, signs: impl IntoIterator<Item = ((usize, usize), i8)>) -> Result<Self, SplitterError> {
        let sign = annotate(&graph, signs, |s| s)?;
        for (&(u, v), &s) in graph.edges().iter().zip(&sign) {
            if s != 1 && s != -1 {
                return Err(SplitterError::BadSign { u, v, sign: s });
            }
        }
        Ok(SignedGraph { graph, sign })
    }

    /// Every edge positive.
    pub fn all_positive(graph: Graph) -> Self {
        let sign = vec![1; graph.edge_count()];
        SignedGraph { graph, sign }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Sign of edge `i` of [`Graph::edges`].
    pub fn sign(&self, i: usize) -> i8 {
        self.sign[i]
    }

    /// Negates every edge at `v`. Switching does not change which embeddings
    /// the signature describes.
    pub fn switch(&self, v: usize) -> SignedGraph {
        let mut sign = self.sign.clone();
        for (i, &(a, b)) in self.graph.edges().iter().enumerate() {
            if a == v || b == v {
                sign[i] = -sign[i];
            }
        }
        SignedGraph { graph: self.graph.clone(), sign }
    }
}

/// The canonical double cover: copies `v.1` and `v.2` of every vertex,
/// positive edges staying within a layer and negative edges crossing between
/// layers. For a signature read off a projective-planar embedding the cover
/// is a sphere, so the split graph is planar; this is checked.
pub fn split_projective(sg: &SignedGraph) -> Result<SplitCertificate, SplitterError> {
    let g = sg.graph();
    let mut edges = Vec::with_capacity(2 * g.edge_count());
    for (&(u, v), &s) in g.edges().iter().zip(&sg.sign) {
        let (a, b) = if s > 0 { (1, 2) } else { (2, 1) };
        edges.push(SplitEdge(CopyId::new(u, 1), CopyId::new(v, a)));
        edges.push(SplitEdge(CopyId::new(u, 2), CopyId::new(v, b)));
    }
    let cert = SplitCertificate::new(g.clone(), vec![2; g.vertex_count()], edges);
    let split = cert.split_graph().map_err(|_| SplitterError::InvalidSignature)?;
    if !is_planar(&split) {
        return Err(SplitterError::InvalidSignature);
    }
    Ok(cert)
}
