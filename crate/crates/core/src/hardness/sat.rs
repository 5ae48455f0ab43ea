use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

use crate::graph::Graph;
use crate::planarity::is_planar;

/// Variable `var` (0-based), possibly negated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub var: usize,
    pub negated: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal { var, negated: false }
    }

    pub fn neg(var: usize) -> Self {
        Literal { var, negated: true }
    }

    /// From a nonzero DIMACS literal (1-based, sign = polarity).
    pub fn from_dimacs(x: i64) -> Option<Self> {
        if x == 0 {
            return None;
        }
        let var = usize::try_from(x.unsigned_abs()).ok()? - 1;
        Some(Literal { var, negated: x < 0 })
    }

    pub fn to_dimacs(self) -> i64 {
        let v = self.var as i64 + 1;
        if self.negated {
            -v
        } else {
            v
        }
    }

    pub fn value(self, a: &Assignment) -> bool {
        a.0[self.var] != self.negated
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            write!(f, "!x{}", self.var + 1)
        } else {
            write!(f, "x{}", self.var + 1)
        }
    }
}

/// A 3-CNF formula together with a cyclic order on its clauses.
///
/// Fields are unchecked; [`validate_instance`] checks them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatInstance {
    pub num_vars: usize,
    pub clauses: Vec<[Literal; 3]>,
    /// Clause indices (0-based) in cycle order.
    pub cycle: Vec<usize>,
}

/// Truth value per variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment(pub Vec<bool>);

impl SatInstance {
    /// Clause `j` is satisfied by `a`.
    pub fn clause_satisfied(&self, j: usize, a: &Assignment) -> bool {
        self.clauses[j].iter().any(|l| l.value(a))
    }

    /// First clause falsified by `a`, if any.
    pub fn first_unsatisfied(&self, a: &Assignment) -> Option<usize> {
        (0..self.clauses.len()).find(|&j| !self.clause_satisfied(j, a))
    }

    /// Consecutive clause pairs of the cycle. Two clauses are joined once and
    /// a single clause not at all.
    pub fn cycle_pairs(&self) -> Vec<(usize, usize)> {
        let c = self.cycle.len();
        match c {
            0 | 1 => Vec::new(),
            2 => vec![(self.cycle[0], self.cycle[1])],
            _ => (0..c).map(|i| (self.cycle[i], self.cycle[(i + 1) % c])).collect(),
        }
    }

    /// Variables `0..num_vars`, then clauses; variable-clause edges plus the clause cycle.
    pub fn incidence_graph(&self) -> Graph {
        let nv = self.num_vars;
        let literal_edges = self.clauses.iter().enumerate().flat_map(|(j, c)| c.iter().map(move |l| (l.var, nv + j)));
        let cycle_edges = self.cycle_pairs().into_iter().map(|(a, b)| (nv + a, nv + b));
        Graph::from_edges_lossy(nv + self.clauses.len(), literal_edges.chain(cycle_edges))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("clause {clause} uses variable {var}, but there are only {num_vars} variables")]
    VariableOutOfRange { clause: usize, var: usize, num_vars: usize },
    #[error("clause {clause} repeats variable {var}")]
    RepeatedVariable { clause: usize, var: usize },
    #[error("clause order is not a permutation of the {0} clauses")]
    BadCycle(usize),
    #[error("variable-clause incidence graph with the clause cycle is not planar")]
    NonPlanarIncidence,
}

/// Checks the structural invariants, then planarity of the incidence graph
/// with the clause cycle added.
pub fn validate_instance(inst: &SatInstance) -> Result<(), InstanceError> {
    for (j, clause) in inst.clauses.iter().enumerate() {
        for (a, l) in clause.iter().enumerate() {
            if l.var >= inst.num_vars {
                return Err(InstanceError::VariableOutOfRange { clause: j, var: l.var, num_vars: inst.num_vars });
            }
            if clause[..a].iter().any(|m| m.var == l.var) {
                return Err(InstanceError::RepeatedVariable { clause: j, var: l.var });
            }
        }
    }
    let mut order = inst.cycle.clone();
    order.sort_unstable();
    if !order.iter().copied().eq(0..inst.clauses.len()) {
        return Err(InstanceError::BadCycle(inst.clauses.len()));
    }
    if !is_planar(&inst.incidence_graph()) {
        return Err(InstanceError::NonPlanarIncidence);
    }
    Ok(())
}

/// Tries all `2^n` assignments in counting order; the first satisfying one wins.
pub fn solve_brute_force(inst: &SatInstance) -> Option<Assignment> {
    assert!(inst.num_vars < 32, "brute force is for tiny instances");
    (0u32..1 << inst.num_vars)
        .map(|bits| Assignment((0..inst.num_vars).map(|i| bits >> i & 1 == 1).collect()))
        .find(|a| inst.first_unsatisfied(a).is_none())
}

/// Random clauses over three distinct variables each, with a random clause
/// order. No planarity filtering.
pub fn random_instance<R: Rng + ?Sized>(num_vars: usize, num_clauses: usize, rng: &mut R) -> SatInstance {
    assert!(num_vars >= 3, "clauses need three distinct variables");
    let mut vars: Vec<usize> = (0..num_vars).collect();
    let clauses = (0..num_clauses)
        .map(|_| {
            vars.shuffle(rng);
            [0, 1, 2].map(|i| Literal { var: vars[i], negated: rng.random_bool(0.5) })
        })
        .collect();
    let mut cycle: Vec<usize> = (0..num_clauses).collect();
    cycle.shuffle(rng);
    SatInstance { num_vars, clauses, cycle }
}

/// Rejection-samples [`random_instance`] until [`validate_instance`] passes,
/// giving up after `attempts` draws. Some shapes never pass: three variables
/// and three clauses already contain `K_{3,3}`.
pub fn random_planar_cycle_instance<R: Rng + ?Sized>(
    num_vars: usize,
    num_clauses: usize,
    attempts: usize,
    rng: &mut R,
) -> Option<SatInstance> {
    (0..attempts).map(|_| random_instance(num_vars, num_clauses, rng)).find(|inst| validate_instance(inst).is_ok())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn single() -> SatInstance {
        SatInstance { num_vars: 3, clauses: vec![[Literal::pos(0), Literal::pos(1), Literal::pos(2)]], cycle: vec![0] }
    }

    #[test]
    fn dimacs_literals() {
        assert_eq!(Literal::from_dimacs(-3), Some(Literal::neg(2)));
        assert_eq!(Literal::from_dimacs(0), None);
        assert_eq!(Literal::neg(2).to_dimacs(), -3);
        assert_eq!(Literal::neg(2).to_string(), "!x3");
    }

    #[test]
    fn validation_errors_are_distinct() {
        assert_eq!(validate_instance(&single()), Ok(()));
        let mut bad = single();
        bad.clauses[0][2] = Literal::neg(0);
        assert_eq!(validate_instance(&bad), Err(InstanceError::RepeatedVariable { clause: 0, var: 0 }));
        let mut bad = single();
        bad.cycle = vec![1];
        assert_eq!(validate_instance(&bad), Err(InstanceError::BadCycle(1)));
        let mut bad = single();
        bad.clauses[0][1] = Literal::pos(7);
        assert!(matches!(validate_instance(&bad), Err(InstanceError::VariableOutOfRange { .. })));
    }

    #[test]
    fn dense_random_instance_is_not_planar() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let inst = (0..100).map(|_| random_instance(10, 20, &mut rng)).find(|i| !is_planar(&i.incidence_graph()));
        assert_eq!(validate_instance(&inst.expect("non-planar sample")), Err(InstanceError::NonPlanarIncidence));
    }

    #[test]
    fn brute_force() {
        let a = solve_brute_force(&single()).unwrap();
        assert_eq!(a, Assignment(vec![true, false, false]));
        // all eight sign patterns over three variables rule out every assignment
        let unsat = SatInstance {
            num_vars: 3,
            clauses: (0..8)
                .map(|m: usize| [0, 1, 2].map(|i| Literal { var: i, negated: m >> i & 1 == 1 }))
                .collect(),
            cycle: (0..8).collect(),
        };
        assert_eq!(solve_brute_force(&unsat), None);
    }
}
