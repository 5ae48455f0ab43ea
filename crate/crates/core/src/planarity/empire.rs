//! Empire conditions on 2-splits whose split graph is edge-maximal.
//!
//! A 2-split of `K_12` with 66 edges on 24 vertices is forced to be a
//! triangulation in which every vertex is split and no face meets two copies
//! of the same vertex; a 2-split of `K_{7,8}` is likewise forced to be a
//! quadrangulation. These checks test those properties on the embedding
//! returned by [`super::embed`]. For a triangulation that embedding is unique
//! up to mirror image, so one check covers all; for quadrangulations the
//! report only speaks for the embedding that was tested.

use thiserror::Error;

use super::{embed, faces};
use crate::certificate::{verify_certificate, SplitCertificate};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaceShape {
    Triangulation,
    Quadrangulation,
}

impl FaceShape {
    fn face_len(self) -> usize {
        match self {
            FaceShape::Triangulation => 3,
            FaceShape::Quadrangulation => 4,
        }
    }

    fn max_edges(self, n: usize) -> usize {
        match self {
            FaceShape::Triangulation => (3 * n).saturating_sub(6),
            FaceShape::Quadrangulation => (2 * n).saturating_sub(4),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmpireError {
    #[error("certificate is not a planar 2-split: {0}")]
    NotAPlanarTwoSplit(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmpireReport {
    pub shape: FaceShape,
    /// Every base vertex has exactly two copies.
    pub every_vertex_split: bool,
    /// Edge count is extremal for the shape and every face has the shape's length.
    pub extremal_faces: bool,
    /// No face boundary holds two copies of one base vertex.
    pub empires_separated: bool,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub face_lengths: Vec<usize>,
}

impl EmpireReport {
    pub fn passed(&self) -> bool {
        self.every_vertex_split && self.extremal_faces && self.empires_separated
    }

    pub fn face_count(&self) -> usize {
        self.face_lengths.len()
    }
}

fn check(cert: &SplitCertificate, shape: FaceShape) -> Result<EmpireReport, EmpireError> {
    let verdict = verify_certificate(cert, 2);
    if !verdict.accepted() {
        let msg = verdict.violations.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ");
        return Err(EmpireError::NotAPlanarTwoSplit(msg));
    }
    let split = cert.split_graph().map_err(|e| EmpireError::NotAPlanarTwoSplit(e.to_string()))?;
    let emb = embed(&split).map_err(|e| EmpireError::NotAPlanarTwoSplit(e.to_string()))?;
    let face_list = faces(&emb);
    let owner: Vec<usize> = cert.copy_ids().iter().map(|c| c.vertex).collect();

    let every_vertex_split = cert.copies.iter().all(|&k| k == 2);
    let n = split.vertex_count();
    let face_lengths = face_list.lengths();
    let extremal_faces = split.edge_count() == shape.max_edges(n)
        && face_list.nontrivial_components == 1
        && face_lengths.iter().all(|&l| l == shape.face_len());
    let empires_separated = face_list.faces.iter().enumerate().all(|(i, _)| {
        let boundary = face_list.boundary(i);
        let mut owners: Vec<usize> = boundary.iter().map(|&v| owner[v]).collect();
        owners.sort_unstable();
        owners.windows(2).all(|w| w[0] != w[1])
    });

    Ok(EmpireReport {
        shape,
        every_vertex_split,
        extremal_faces,
        empires_separated,
        vertex_count: n,
        edge_count: split.edge_count(),
        face_lengths,
    })
}

/// Triangulation variant: every vertex split, all faces triangles with
/// `|E| = 3|V| - 6`, and no face containing two copies of one vertex.
pub fn check_empire_conditions(cert: &SplitCertificate) -> Result<EmpireReport, EmpireError> {
    check(cert, FaceShape::Triangulation)
}

/// Quadrangulation variant, for bipartite bases: all faces of length 4 with
/// `|E| = 2|V| - 4`.
pub fn check_quadrangulation_conditions(cert: &SplitCertificate) -> Result<EmpireReport, EmpireError> {
    check(cert, FaceShape::Quadrangulation)
}
