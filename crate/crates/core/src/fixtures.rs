//! Bundled input fixtures.
//!
//! None of these are trusted: each is only as good as the checks run on it
//! (the verifier, the empire checkers, the splitters' planarity checks).

use crate::certificate::SplitCertificate;
use crate::hardness::SatInstance;
use crate::io;
use crate::splitters::{SignedGraph, TorusDrawing};

pub const K12_EMPIRE: &str = include_str!("../fixtures/k12_empire.json");
pub const K78_QUAD: &str = include_str!("../fixtures/k78_quad.json");
pub const K7_TORUS: &str = include_str!("../fixtures/k7.torus");
pub const K5_TORUS: &str = include_str!("../fixtures/k5.torus");
pub const K6_SIGNED: &str = include_str!("../fixtures/k6.signed");
pub const K5_SIGNED: &str = include_str!("../fixtures/k5.signed");
pub const EXAMPLE_CNF: &str = include_str!("../fixtures/example.cnf");

/// A 2-split of `K_12` into a triangulation on 24 vertices.
pub fn k12_empire() -> SplitCertificate {
    io::parse_certificate(K12_EMPIRE).expect("bundled fixture parses")
}

/// A 2-split of `K_{7,8}` into a quadrangulation on 30 vertices.
pub fn k78_quad() -> SplitCertificate {
    io::parse_certificate(K78_QUAD).expect("bundled fixture parses")
}

/// `K_7` triangulating the torus.
pub fn k7_torus() -> TorusDrawing {
    io::parse_torus(K7_TORUS).expect("bundled fixture parses")
}

/// `K_5` in the torus, restricted from [`k7_torus`].
pub fn k5_torus() -> TorusDrawing {
    io::parse_torus(K5_TORUS).expect("bundled fixture parses")
}

/// `K_6` in the projective plane.
pub fn k6_signed() -> SignedGraph {
    io::parse_signed(K6_SIGNED).expect("bundled fixture parses")
}

/// `K_5` in the projective plane, restricted from [`k6_signed`].
pub fn k5_signed() -> SignedGraph {
    io::parse_signed(K5_SIGNED).expect("bundled fixture parses")
}

/// The four-variable, three-clause example formula with clause cycle `1 2 3`.
pub fn example_formula() -> SatInstance {
    io::parse_sat(EXAMPLE_CNF).expect("bundled fixture parses")
}
