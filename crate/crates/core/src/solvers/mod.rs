//! Exact Steiner tree solvers.

mod bridge;
mod dreyfus_wagner;
mod oracle;
mod rules;
mod sp1p4;
mod sparse;
mod structured;

pub use bridge::unweighted_bridge;
pub use dreyfus_wagner::{dp_terminals_edge, DP_MAX_TERMINALS};
pub use oracle::{oracle_edge, oracle_vertex, ORACLE_MAX_FREE};
pub use rules::{preprocess_rules123, Preprocessed, RuleStep};
pub use sp1p4::{solve_sp1p4, Sp1P4Budget};
pub use sparse::{in_sparse_class, solve_sparse_class, SPARSE_MAX_BRANCH};
pub use structured::{solve_structured_cases, StructureCase};

use std::fmt;

use crate::error::{Error, Result};
use crate::instance::{SteinerInstance, SteinerSolution, Variant};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Trivial,
    OracleEdge,
    OracleVertex,
    DreyfusWagner,
    Sp1P4,
    Structured,
    Sparse,
    TreewidthDp,
}

impl Algorithm {
    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::Trivial => "trivial",
            Algorithm::OracleEdge => "oracle-edge",
            Algorithm::OracleVertex => "oracle-vertex",
            Algorithm::DreyfusWagner => "dp-terminals",
            Algorithm::Sp1P4 => "sp1p4",
            Algorithm::Structured => "structured",
            Algorithm::Sparse => "sparse",
            Algorithm::TreewidthDp => "treewidth-dp",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveReport {
    pub solution: SteinerSolution,
    pub algorithm: Algorithm,
    /// Subsets, states or branches examined.
    pub explored: u64,
    /// Preprocessing steps, when any ran.
    pub trace: Vec<String>,
    pub warning: Option<String>,
}

impl SolveReport {
    pub(crate) fn new(solution: SteinerSolution, algorithm: Algorithm, explored: u64) -> Self {
        SolveReport {
            solution,
            algorithm,
            explored,
            trace: Vec::new(),
            warning: None,
        }
    }
}

/// Exact optimum with whichever brute-force solver fits its budget: the
/// subset oracle when there are few non-terminals, else the terminal DP.
pub fn solve_exact(inst: &SteinerInstance) -> Result<SolveReport> {
    let free = inst.graph().n() - inst.terminals().len();
    match inst.variant() {
        Variant::Vertex => oracle_vertex(inst),
        Variant::Edge if free <= ORACLE_MAX_FREE => oracle_edge(inst),
        Variant::Edge if inst.terminals().len() <= DP_MAX_TERMINALS => dp_terminals_edge(inst),
        Variant::Edge => Err(Error::BudgetExceeded {
            what: "exact solver (non-terminals and terminals both too many)",
            limit: ORACLE_MAX_FREE,
            actual: free,
        }),
    }
}

/// Lexicographic enumeration of the `k`-subsets of `0..n`.
pub(crate) fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
