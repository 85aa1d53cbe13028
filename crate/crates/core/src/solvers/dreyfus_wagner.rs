//! Dreyfus-Wagner dynamic programming over terminal subsets.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::graph::{canon, Edge};
use crate::instance::{SteinerInstance, SteinerSolution, UnionFind};
use crate::rational::{common_scale, Rational};

use super::oracle::trivial;
use super::{Algorithm, SolveReport};

pub const DP_MAX_TERMINALS: usize = 12;

#[derive(Clone, Copy)]
enum Back {
    None,
    Base,
    Merge(usize),
    Step(usize),
}

/// `dp[S][v]`: cheapest tree containing the terminals in `S` and `v`.
/// One terminal is kept out of the subsets and used as the final root.
pub fn dp_terminals_edge(inst: &SteinerInstance) -> Result<SolveReport> {
    let w = inst.edge_weights()?;
    let ts = inst.terminals();
    if ts.len() > DP_MAX_TERMINALS {
        return Err(Error::BudgetExceeded {
            what: "terminal count for subset DP",
            limit: DP_MAX_TERMINALS,
            actual: ts.len(),
        });
    }
    if ts.len() == 1 {
        return trivial(inst);
    }
    let g = inst.graph();
    let n = g.n();
    let (iw, scale) = common_scale(w.as_slice())?;
    let adj: Vec<Vec<(usize, i128)>> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .map(|&u| (u, iw[g.edge_index(v, u).unwrap()]))
                .collect()
        })
        .collect();

    let k = ts.len() - 1;
    let root = ts[k];
    let full = (1usize << k) - 1;
    const INF: i128 = i128::MAX;
    let mut dp = vec![INF; (full + 1) * n];
    let mut back = vec![Back::None; (full + 1) * n];
    let at = |mask: usize, v: usize| mask * n + v;
    let mut explored = 0u64;

    for mask in 1..=full {
        if mask.is_power_of_two() {
            let t = ts[mask.trailing_zeros() as usize];
            dp[at(mask, t)] = 0;
            back[at(mask, t)] = Back::Base;
        } else {
            let low = mask & mask.wrapping_neg();
            for v in 0..n {
                let mut sub = (mask - 1) & mask;
                while sub > 0 {
                    if sub & low != 0 {
                        explored += 1;
                        let (a, b) = (dp[at(sub, v)], dp[at(mask ^ sub, v)]);
                        if a != INF && b != INF && a + b < dp[at(mask, v)] {
                            dp[at(mask, v)] = a + b;
                            back[at(mask, v)] = Back::Merge(sub);
                        }
                    }
                    sub = (sub - 1) & mask;
                }
            }
        }
        // extend along shortest paths
        let mut heap: BinaryHeap<Reverse<(i128, usize)>> =
            (0..n).filter(|&v| dp[at(mask, v)] != INF).map(|v| Reverse((dp[at(mask, v)], v))).collect();
        while let Some(Reverse((d, v))) = heap.pop() {
            if d > dp[at(mask, v)] {
                continue;
            }
            for &(u, c) in &adj[v] {
                if d + c < dp[at(mask, u)] {
                    dp[at(mask, u)] = d + c;
                    back[at(mask, u)] = Back::Step(v);
                    heap.push(Reverse((d + c, u)));
                }
            }
        }
    }

    let best = dp[at(full, root)];
    if best == INF {
        return Err(Error::Disconnected);
    }
    let mut edges: Vec<Edge> = Vec::new();
    let mut stack = vec![(full, root)];
    while let Some((mask, v)) = stack.pop() {
        match back[at(mask, v)] {
            Back::Base => {}
            Back::Merge(sub) => {
                stack.push((sub, v));
                stack.push((mask ^ sub, v));
            }
            Back::Step(u) => {
                edges.push(canon(u, v));
                stack.push((mask, u));
            }
            Back::None => unreachable!("reconstruction reached an unset state"),
        }
    }
    edges.sort_unstable();
    edges.dedup();
    let edges = spanning_forest(n, &edges);
    let solution = SteinerSolution::from_edges(inst, edges, root)?;
    let expected = Rational::new(best, scale);
    assert_eq!(solution.weight, expected, "reconstructed tree disagrees with the DP value");
    Ok(SolveReport::new(solution, Algorithm::DreyfusWagner, explored))
}

/// Drops cycle-closing edges, keeping the first of each in edge order.
pub(crate) fn spanning_forest(n: usize, edges: &[Edge]) -> Vec<Edge> {
    let mut uf = UnionFind::new(n);
    edges.iter().copied().filter(|&(u, v)| uf.union(u, v)).collect()
}
