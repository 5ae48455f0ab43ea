//! Polynomial-time constructions of planar splits.
//!
//! Every splitter returns a [`crate::SplitCertificate`]; callers that need a
//! guarantee run it through [`crate::verify_certificate`]. The degree, column
//! and torus splitters emit one split edge per base edge; the projective
//! double cover realizes every edge twice, and the pseudoforest split may
//! leave copies without edges.

mod bipartite;
mod degree;
mod pseudoforest;
mod surface;

use thiserror::Error;

pub use bipartite::{split_bipartite_columns, split_complete_bipartite};
pub use degree::split_by_degree;
pub use pseudoforest::{
    arboricity_bracket, orient_with_bound, pseudoarboricity, split_by_pseudoforests, Orientation, PseudoforestSplit,
};
pub use surface::{split_projective, split_torus, SignedGraph, TorusDrawing};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SplitterError {
    #[error("column split needs an even part size, got {0}")]
    OddPart(usize),
    #[error("part sizes must be positive")]
    EmptyPart,
    #[error("graph is not complete bipartite")]
    NotCompleteBipartite,
    #[error("edge ({0}, {1}) is not in the graph")]
    UnknownEdge(usize, usize),
    #[error("edge ({0}, {1}) is annotated twice")]
    DuplicateAnnotation(usize, usize),
    #[error("edge ({0}, {1}) has no annotation")]
    MissingAnnotation(usize, usize),
    #[error("wrap ({wx}, {wy}) of edge ({u}, {v}) is outside -1..=1")]
    WrapOutOfRange { u: usize, v: usize, wx: i8, wy: i8 },
    #[error("sign {sign} of edge ({u}, {v}) is not +1 or -1")]
    BadSign { u: usize, v: usize, sign: i8 },
    #[error("position of vertex {0} is outside the unit square or missing")]
    BadPosition(usize),
    #[error("wrap data does not describe a toroidal embedding: the split graph is not planar")]
    InvalidEmbedding,
    #[error("signature does not come from a projective-planar embedding: the double cover is not planar")]
    InvalidSignature,
}
