//! Exact solver for subcubic graphs whose degree-3 vertices are far apart:
//! reduce with R1-R3, then try edge subsets of the small remainder.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::instance::{spanning_tree_min, SteinerInstance, SteinerSolution};
use crate::rational::{common_scale, Rational};

use super::oracle::trivial;
use super::rules::preprocess_rules123;
use super::{Algorithm, SolveReport};

/// Cap on the number of degree-3 vertices left after preprocessing.
pub const SPARSE_MAX_BRANCH: usize = 8;

/// Maximum degree at most 3, and with `r` degree-3 vertices every path
/// between two of them has at least `2^r` vertices. The shortest path is
/// the one to check: every other path is at least as long.
pub fn in_sparse_class(g: &Graph) -> bool {
    if g.max_degree() > 3 {
        return false;
    }
    let branch: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) == 3).collect();
    let r = branch.len();
    if r < 2 {
        return true;
    }
    let need = if r >= 64 { u64::MAX } else { 1u64 << r };
    branch.iter().all(|&u| {
        let d = g.bfs_distances(u);
        branch
            .iter()
            .filter(|&&v| v != u && d[v] != usize::MAX)
            .all(|&v| d[v] as u64 + 1 >= need)
    })
}

/// Preprocesses with [`preprocess_rules123`] and enumerates edge subsets
/// of the reduced graph, which must have at most `max(4r, 1)` vertices for
/// its `r <= SPARSE_MAX_BRANCH` degree-3 vertices.
pub fn solve_sparse_class(inst: &SteinerInstance) -> Result<SolveReport> {
    inst.edge_weights()?;
    if inst.graph().max_degree() > 3 {
        return Err(Error::StructureMismatch("maximum degree exceeds 3".into()));
    }
    let pre = preprocess_rules123(inst)?;
    let red = &pre.instance;
    let g = red.graph();
    let trace: Vec<String> = pre.trace.iter().map(ToString::to_string).collect();

    let (reduced_sol, explored) = if red.terminals().len() == 1 {
        let rep = trivial(red)?;
        (rep.solution, rep.explored)
    } else {
        let r = (0..g.n()).filter(|&v| g.degree(v) == 3).count();
        if r > SPARSE_MAX_BRANCH {
            return Err(Error::BudgetExceeded {
                what: "degree-3 vertices after preprocessing",
                limit: SPARSE_MAX_BRANCH,
                actual: r,
            });
        }
        if g.n() > (4 * r).max(1) {
            return Err(Error::StructureMismatch(format!(
                "reduced graph has {} vertices but only {r} of degree 3",
                g.n()
            )));
        }
        enumerate_trees(red)?
    };
    let solution = pre.lift(inst, &reduced_sol)?;
    debug_assert_eq!(solution.weight, reduced_sol.weight + pre.offset);
    let mut report = SolveReport::new(solution, Algorithm::Sparse, explored);
    report.trace = trace;
    Ok(report)
}

struct Enum<'a> {
    g: &'a Graph,
    w: Vec<i128>,
    terminal: Vec<bool>,
    chosen: Vec<usize>,
    best: (i128, Vec<usize>),
    explored: u64,
}

impl Enum<'_> {
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            x = parent[x];
        }
        x
    }

    fn go(&mut self, i: usize, weight: i128, parent: &mut Vec<usize>) {
        self.explored += 1;
        if weight >= self.best.0 {
            return;
        }
        if i == self.g.m() {
            if self.is_steiner_tree() {
                self.best = (weight, self.chosen.clone());
            }
            return;
        }
        let (u, v) = self.g.edges()[i];
        let (ru, rv) = (Self::find(parent, u), Self::find(parent, v));
        if ru != rv {
            let (lo, hi) = if ru < rv { (ru, rv) } else { (rv, ru) };
            parent[hi] = lo;
            self.chosen.push(i);
            self.go(i + 1, weight + self.w[i], parent);
            self.chosen.pop();
            parent[hi] = hi;
        }
        self.go(i + 1, weight, parent);
    }

    fn is_steiner_tree(&self) -> bool {
        let mut touched = self.terminal.clone();
        for &i in &self.chosen {
            let (u, v) = self.g.edges()[i];
            touched[u] = true;
            touched[v] = true;
        }
        touched.iter().filter(|&&b| b).count() == self.chosen.len() + 1
    }
}

fn enumerate_trees(inst: &SteinerInstance) -> Result<(SteinerSolution, u64)> {
    let g = inst.graph();
    let w = inst.edge_weights()?;
    let (iw, scale) = common_scale(w.as_slice())?;
    // a spanning tree is always feasible and seeds the bound
    let mst = spanning_tree_min(g, w)?;
    let mst_idx: Vec<usize> = mst.edges.iter().map(|&(u, v)| g.edge_index(u, v).unwrap()).collect();
    let mst_w: i128 = mst_idx.iter().map(|&i| iw[i]).sum();
    let mut e = Enum {
        g,
        w: iw,
        terminal: (0..g.n()).map(|v| inst.is_terminal(v)).collect(),
        chosen: Vec::new(),
        best: (mst_w + 1, Vec::new()),
        explored: 0,
    };
    let mut parent: Vec<usize> = (0..g.n()).collect();
    e.go(0, 0, &mut parent);
    let best_edges: Vec<Edge> = if e.best.0 > mst_w {
        mst.edges.clone()
    } else {
        e.best.1.iter().map(|&i| g.edges()[i]).collect()
    };
    let sol = SteinerSolution::from_edges(inst, best_edges, inst.terminals()[0])?;
    debug_assert_eq!(sol.weight, Rational::new(e.best.0.min(mst_w), scale));
    Ok((sol, e.explored))
}
