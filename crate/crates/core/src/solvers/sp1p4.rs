//! Polynomial algorithm for vertex-weighted Steiner tree on
//! `(sP1 + P4)`-free graphs: only Steiner sets of bounded size are tried.

use crate::error::Result;
use crate::graph::{disjoint_union, Graph};
use crate::instance::SteinerInstance;
use crate::patterns::{find_induced_embedding, MAX_PATTERN_VERTICES};

use super::oracle::{search_steiner_sets, trivial};
use super::{Algorithm, SolveReport};

/// Size cap on the Steiner set for a given `s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sp1P4Budget {
    pub s: usize,
    pub max_extra: usize,
}

impl Sp1P4Budget {
    /// `max_extra = 2s^2 - s + 3`, i.e. `4 + (2s+1)(s-1)` for `s >= 1`; at
    /// `s = 0` the bound is 3, which also covers the single extra vertex
    /// needed when `G[U + R]` is `P4`-free.
    pub fn new(s: usize) -> Sp1P4Budget {
        Sp1P4Budget {
            s,
            max_extra: 2 * s * s + 3 - s,
        }
    }
}

/// The pattern `sP1 + P4`.
pub(crate) fn sp1_p4(s: usize) -> Graph {
    disjoint_union(&Graph::empty(s), &Graph::path(4))
}

/// Tries every Steiner set of size at most [`Sp1P4Budget::max_extra`].
///
/// Optimal on `(sP1 + P4)`-free graphs. The promise is checked when the
/// pattern has at most ten vertices; a violated or unchecked promise is
/// reported in `warning` and the best tree within the cap is still returned.
pub fn solve_sp1p4(inst: &SteinerInstance, s: usize) -> Result<SolveReport> {
    inst.vertex_weights()?;
    let warning = if s + 4 <= MAX_PATTERN_VERTICES {
        find_induced_embedding(inst.graph(), &sp1_p4(s))
            .map(|_| format!("graph contains an induced {s}P1+P4; result may not be optimal"))
    } else {
        Some(format!("{s}P1+P4-freeness not checked (pattern exceeds search budget)"))
    };
    let mut report = if inst.terminals().len() == 1 {
        trivial(inst)?
    } else {
        let budget = Sp1P4Budget::new(s);
        let (solution, explored) = search_steiner_sets(inst, budget.max_extra)?;
        SolveReport::new(solution, Algorithm::Sp1P4, explored)
    };
    report.warning = warning;
    Ok(report)
}
