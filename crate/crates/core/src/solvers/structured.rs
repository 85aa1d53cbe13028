//! Direct solver for the graph shapes forced by the polynomial pair cases.
//!
//! A connected graph in one of these classes is a single vertex, a path, a
//! cycle, a small clique or a graph of bounded size.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::graph::{canon, Edge, Graph};
use crate::instance::{SteinerInstance, SteinerSolution};
use crate::patterns::{find_induced_embedding, MAX_PATTERN_VERTICES};
use crate::rational::Rational;

use super::oracle::{oracle_edge, trivial};
use super::{Algorithm, SolveReport};

/// Claimed structure, matching the four polynomial pair cases.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StructureCase {
    /// `K1`- or `K2`-free: no edges.
    Case1,
    /// `(K3, K_{1,3})`-free: maximum degree at most 2.
    Case2,
    /// `(K_r, P3)`-free: disjoint cliques on fewer than `r` vertices.
    Case3 { r: usize },
    /// `(K_r, sP1)`-free: bounded size.
    Case4 { r: usize, s: usize },
}

fn mismatch(msg: impl Into<String>) -> Error {
    Error::StructureMismatch(msg.into())
}

fn validate(g: &Graph, case: StructureCase) -> Result<()> {
    match case {
        StructureCase::Case1 if g.m() > 0 => Err(mismatch("graph has edges")),
        StructureCase::Case2 if g.max_degree() > 2 => Err(mismatch("a vertex has degree above 2")),
        StructureCase::Case3 { r } => {
            for comp in g.connected_components() {
                let k = comp.len();
                if comp.iter().any(|&v| g.degree(v) != k - 1) {
                    return Err(mismatch("a component is not a clique"));
                }
                if k >= r {
                    return Err(mismatch(format!("clique on {k} vertices, claimed below {r}")));
                }
            }
            Ok(())
        }
        StructureCase::Case4 { r, s } => {
            if r > MAX_PATTERN_VERTICES || s > MAX_PATTERN_VERTICES {
                return Err(mismatch("pattern too large to validate"));
            }
            if find_induced_embedding(g, &Graph::complete(r)).is_some() {
                return Err(mismatch(format!("graph contains K{r}")));
            }
            if find_induced_embedding(g, &Graph::empty(s)).is_some() {
                return Err(mismatch(format!("graph contains {s}P1")));
            }
            Ok(())
        }
        _ => Ok(()),
    }
}

/// Solves an edge instance whose graph has the claimed structure.
pub fn solve_structured_cases(inst: &SteinerInstance, case: StructureCase) -> Result<SolveReport> {
    inst.edge_weights()?;
    let g = inst.graph();
    validate(g, case)?;
    if inst.terminals().len() == 1 {
        return trivial(inst);
    }
    match case {
        StructureCase::Case1 => unreachable!("a connected edgeless graph has one vertex"),
        StructureCase::Case2 => {
            let mut rep = solve_path_or_cycle(inst)?;
            rep.algorithm = Algorithm::Structured;
            Ok(rep)
        }
        StructureCase::Case3 { .. } | StructureCase::Case4 { .. } => {
            let mut rep = oracle_edge(inst)?;
            rep.algorithm = Algorithm::Structured;
            Ok(rep)
        }
    }
}

/// Vertices of a connected max-degree-2 graph in walk order.
fn walk(g: &Graph) -> Vec<usize> {
    let start = (0..g.n()).find(|&v| g.degree(v) <= 1).unwrap_or(0);
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = g.neighbors(cur).iter().copied().find(|&v| v != prev && v != start);
        match next {
            Some(v) if order.len() < g.n() => {
                order.push(v);
                prev = cur;
                cur = v;
            }
            _ => return order,
        }
    }
}

fn solve_path_or_cycle(inst: &SteinerInstance) -> Result<SolveReport> {
    let g = inst.graph();
    let order = walk(g);
    let n = order.len();
    let is_cycle = g.m() == n && n >= 3;
    // step i joins order[i] and order[i+1 mod n]
    let steps = if is_cycle { n } else { n - 1 };
    let step_edge = |i: usize| canon(order[i], order[(i + 1) % n]);
    let step_weight = |i: usize| {
        let (u, v) = step_edge(i);
        inst.weight_of_edge(u, v).unwrap()
    };
    let pos: Vec<usize> = (0..n).filter(|&i| inst.is_terminal(order[i])).collect();
    let root = inst.terminals()[0];

    if !is_cycle {
        let (lo, hi) = (pos[0], *pos.last().unwrap());
        let edges: Vec<Edge> = (lo..hi).map(step_edge).collect();
        let sol = SteinerSolution::from_edges(inst, edges, root)?;
        return Ok(SolveReport::new(sol, Algorithm::Structured, steps as u64));
    }
    // gap j runs from terminal pos[j] to the next terminal around the cycle
    let t = pos.len();
    let gap = |j: usize| -> Vec<usize> {
        let (a, b) = (pos[j], pos[(j + 1) % t]);
        let len = if b > a { b - a } else { b + n - a };
        (0..len).map(|d| (a + d) % n).collect()
    };
    let gap_weight = |j: usize| -> Rational { gap(j).into_iter().map(step_weight).sum() };
    let weights: Vec<Rational> = (0..t).map(gap_weight).collect();
    let heaviest = *weights.iter().max().unwrap();
    let mut best: Option<SteinerSolution> = None;
    for j in (0..t).filter(|&j| weights[j] == heaviest) {
        let dropped = gap(j);
        let edges: Vec<Edge> = (0..steps).filter(|i| !dropped.contains(i)).map(step_edge).collect();
        let cand = SteinerSolution::from_edges(inst, edges, root)?;
        if best.as_ref().is_none_or(|b| cand.tie_break_cmp(b) == Ordering::Less) {
            best = Some(cand);
        }
    }
    Ok(SolveReport::new(best.unwrap(), Algorithm::Structured, t as u64))
}
