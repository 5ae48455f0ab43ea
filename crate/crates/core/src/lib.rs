//! Planar k-splits of graphs.
//!
//! A k-split replaces each vertex by at most `k` copies so that every edge is
//! realized between some pair of copies. This crate decides, constructs and
//! verifies planar k-splits:
//!
//! - [`certificate`]: the split witness and its verifier;
//! - [`planarity`]: planarity testing, embeddings, faces and empire checks;
//! - [`bounds`]: closed forms and edge-count lower bounds on split thickness;
//! - [`splitters`]: polynomial-time constructions (degree, bipartite columns,
//!   torus, projective double cover, pseudoforests);
//! - [`exact`]: branch-and-bound search for small graphs;
//! - [`hardness`]: the Planar Cycle 3-SAT reduction and its witness builder;
//! - [`io`]: the text file formats shared with the command-line tool.

pub mod bounds;
pub mod certificate;
pub mod exact;
pub mod fixtures;
pub mod generators;
pub mod graph;
pub mod hardness;
pub mod io;
pub mod planarity;
pub mod splitters;

pub use bounds::{bounds_report, ThicknessBounds};
pub use certificate::{verify_certificate, CopyId, SplitCertificate, SplitEdge, VerifyReport, Violation, ViolationCode};
pub use exact::{find_k_split, ExactThickness, split_thickness_exact, SearchBudget, SearchOutcome, SearchStatus};
pub use graph::{Graph, GraphError};
pub use planarity::{embed, faces, is_planar, Embedding, FaceList};
pub use splitters::{SignedGraph, TorusDrawing};
