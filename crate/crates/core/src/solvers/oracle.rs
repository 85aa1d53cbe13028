//! Brute-force oracles: enumerate the Steiner vertex set.
//!
//! A minimum Steiner tree is a minimum spanning tree of `G[U + R]` for the
//! best set `R` of non-terminals with `G[U + R]` connected, so trying every
//! `R` is exact.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::instance::{kruskal_order, kruskal_within, SteinerInstance, SteinerSolution, UnionFind, Weighting};
use crate::rational::Rational;

use super::{next_combination, Algorithm, SolveReport};

/// Largest number of non-terminals the oracles enumerate over.
pub const ORACLE_MAX_FREE: usize = 22;

/// Exact edge-weighted optimum by enumeration.
pub fn oracle_edge(inst: &SteinerInstance) -> Result<SolveReport> {
    inst.edge_weights()?;
    oracle(inst, Algorithm::OracleEdge)
}

/// Exact vertex-weighted optimum by enumeration.
pub fn oracle_vertex(inst: &SteinerInstance) -> Result<SolveReport> {
    inst.vertex_weights()?;
    oracle(inst, Algorithm::OracleVertex)
}

fn oracle(inst: &SteinerInstance, algorithm: Algorithm) -> Result<SolveReport> {
    if inst.terminals().len() == 1 {
        return trivial(inst);
    }
    let free = inst.graph().n() - inst.terminals().len();
    if free > ORACLE_MAX_FREE {
        return Err(Error::BudgetExceeded {
            what: "oracle non-terminal count",
            limit: ORACLE_MAX_FREE,
            actual: free,
        });
    }
    let (solution, explored) = search_steiner_sets(inst, free)?;
    Ok(SolveReport::new(solution, algorithm, explored))
}

pub(crate) fn trivial(inst: &SteinerInstance) -> Result<SolveReport> {
    let t = inst.terminals()[0];
    let solution = SteinerSolution::from_edges(inst, [], t)?;
    Ok(SolveReport::new(solution, Algorithm::Trivial, 1))
}

/// Best tree over all Steiner sets `R` with `|R| <= max_extra`, trying sets
/// by increasing size and then lexicographically. With uniform weights the
/// search stops after the first size that admits a tree.
pub(crate) fn search_steiner_sets(inst: &SteinerInstance, max_extra: usize) -> Result<(SteinerSolution, u64)> {
    let g = inst.graph();
    let free: Vec<usize> = (0..g.n()).filter(|&v| !inst.is_terminal(v)).collect();
    let mut inside = vec![false; g.n()];
    for &t in inst.terminals() {
        inside[t] = true;
    }
    let (order, vertex_w) = match inst.weighting() {
        Weighting::Edge(w) => (kruskal_order(g, w), None),
        Weighting::Vertex(w) => ((0..g.m()).collect(), Some(w)),
    };
    let base_vertex_weight = match vertex_w {
        Some(w) => Rational::checked_sum(inst.terminals().iter().map(|&t| w.get(t)))?,
        None => Rational::ZERO,
    };
    let uniform = inst.is_unweighted();
    let mut best: Option<SteinerSolution> = None;
    let mut explored = 0u64;

    for size in 0..=max_extra.min(free.len()) {
        let mut comb: Vec<usize> = (0..size).collect();
        loop {
            explored += 1;
            for &i in &comb {
                inside[free[i]] = true;
            }
            let count = inst.terminals().len() + size;
            let prune = match (vertex_w, &best) {
                (Some(w), Some(b)) => {
                    let mut s = base_vertex_weight;
                    for &i in &comb {
                        s = s.checked_add(w.get(free[i]))?;
                    }
                    s > b.weight
                }
                _ => false,
            };
            if !prune {
                let mut uf = UnionFind::new(g.n());
                if let Some(chosen) = kruskal_within(g, &order, &inside, &mut uf, count) {
                    let root = inst.terminals()[0];
                    let edges = chosen.iter().map(|&i| g.edges()[i]);
                    let cand = if count == 1 {
                        SteinerSolution::from_edges(inst, [], root)?
                    } else {
                        SteinerSolution::from_edges(inst, edges, root)?
                    };
                    let better = match &best {
                        None => true,
                        Some(b) => cand.tie_break_cmp(b) == Ordering::Less,
                    };
                    if better {
                        best = Some(cand);
                    }
                }
            }
            for &i in &comb {
                inside[free[i]] = false;
            }
            if !next_combination(&mut comb, free.len()) {
                break;
            }
        }
        if uniform && best.is_some() {
            break;
        }
    }
    let best = best.ok_or_else(|| Error::InvalidInstance("no Steiner set within the size cap connects U".into()))?;
    Ok((best, explored))
}
