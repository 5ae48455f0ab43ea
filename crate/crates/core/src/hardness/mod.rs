//! Planar Cycle 3-SAT, the reduction to 2-splittability, and the witness
//! builder that turns a satisfying assignment into a planar 2-split.
//!
//! Every vertex of the reduction graph except the literal vertices carries a
//! rigid block (`K_12` or `K_{7,8}`), making it a K-vertex. A literal vertex
//! has degree 3: one edge to its variable gadget, one to its clause vertex
//! and one to its port in the clause gadget.

mod reduction;
mod sat;
mod witness;

pub use reduction::{reduce, BlockCopy, ClauseGadget, HardnessGraph, KBlock, VariableGadget};
pub use sat::{
    random_instance, random_planar_cycle_instance, solve_brute_force, validate_instance, Assignment, InstanceError,
    Literal, SatInstance,
};
pub use witness::{build_witness, WitnessError};
