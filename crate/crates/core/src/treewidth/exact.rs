//! Exact treewidth by dynamic programming over connected vertex sets.
//!
//! Take an optimal elimination ordering and a connected set `C` whose
//! neighbourhood `N(C)` is eliminated after all of `C`. The last vertex
//! `v` of `C` has `N(C)` among its later neighbours in the filled graph, so
//! `|N(C)| <= k`, and the components of `C - v` satisfy the same property.
//! Conversely such a recursion yields a decomposition whose bags are
//! `N(C) + v`. So `tw <= k` iff every component of `G` is "good":
//!
//! `good(C)` iff some `v` in `C` leaves components `C'` of `C - v`, each
//! with `|N(C')| <= k` and `good(C')`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{mask, Graph};

use super::heuristic::heuristic_decomposition;
use super::TreeDecomposition;

/// Cap on memoised sets across one [`exact_treewidth`] call.
pub const EXACT_MAX_STATES: usize = 2_000_000;

struct Search<'a> {
    adj: &'a [u128],
    k: usize,
    /// Chosen vertex of each good set; `None` marks a bad one.
    memo: HashMap<u128, Option<usize>>,
    budget: usize,
}

impl Search<'_> {
    fn boundary(&self, c: u128) -> u128 {
        mask::iter_bits(c).fold(0, |acc, v| acc | self.adj[v]) & !c
    }

    /// Connected components of the set `s`, in order of least vertex.
    fn components(&self, mut s: u128) -> Vec<u128> {
        let mut out = Vec::new();
        while s != 0 {
            let start = s & s.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let next = mask::iter_bits(frontier).fold(0, |acc, v| acc | self.adj[v]) & s & !comp;
                comp |= next;
                frontier = next;
            }
            out.push(comp);
            s &= !comp;
        }
        out
    }

    fn good(&mut self, c: u128) -> Result<bool> {
        if let Some(r) = self.memo.get(&c) {
            return Ok(r.is_some());
        }
        if self.memo.len() >= self.budget {
            return Err(Error::BudgetExceeded {
                what: "exact treewidth states",
                limit: self.budget,
                actual: self.memo.len(),
            });
        }
        let mut found = None;
        'v: for v in mask::iter_bits(c) {
            let parts = self.components(c & !(1u128 << v));
            if parts.iter().any(|&p| self.boundary(p).count_ones() as usize > self.k) {
                continue;
            }
            for p in parts {
                if !self.good(p)? {
                    continue 'v;
                }
            }
            found = Some(v);
            break;
        }
        self.memo.insert(c, found);
        Ok(found.is_some())
    }

    /// Decomposition subtree for a good set; returns the root bag index.
    fn build(&self, c: u128, bags: &mut Vec<Vec<usize>>, edges: &mut Vec<(usize, usize)>) -> usize {
        let v = self.memo[&c].expect("set is good");
        let bag = self.boundary(c) | (1u128 << v);
        let id = bags.len();
        bags.push(mask::iter_bits(bag).collect());
        for p in self.components(c & !(1u128 << v)) {
            let child = self.build(p, bags, edges);
            edges.push((id, child));
        }
        id
    }
}

fn masks(g: &Graph) -> Result<Vec<u128>> {
    g.adjacency_masks().ok_or(Error::BudgetExceeded {
        what: "exact treewidth vertices",
        limit: 128,
        actual: g.n(),
    })
}

fn search_at_most(g: &Graph, adj: &[u128], k: usize, budget: usize) -> Result<(Option<TreeDecomposition>, usize)> {
    let mut s = Search {
        adj,
        k,
        memo: HashMap::new(),
        budget,
    };
    let all = if g.n() == 0 { 0 } else { u128::MAX >> (128 - g.n()) };
    let comps = s.components(all);
    for &c in &comps {
        if !s.good(c)? {
            return Ok((None, s.memo.len()));
        }
    }
    let (mut bags, mut edges) = (Vec::new(), Vec::new());
    let mut prev: Option<usize> = None;
    for &c in &comps {
        let root = s.build(c, &mut bags, &mut edges);
        if let Some(p) = prev {
            edges.push((p, root));
        }
        prev = Some(root);
    }
    if bags.is_empty() {
        bags.push(Vec::new());
    }
    Ok((Some(TreeDecomposition::new(bags, edges)), s.memo.len()))
}

/// A decomposition of width at most `k`, or `None` if the treewidth is larger.
pub fn treewidth_at_most(g: &Graph, k: usize) -> Result<Option<TreeDecomposition>> {
    let adj = masks(g)?;
    Ok(search_at_most(g, &adj, k, EXACT_MAX_STATES)?.0)
}

/// Exact treewidth and a decomposition attaining it. Tries `k` upward from
/// the degeneracy (a lower bound) to the min-fill width (an upper bound).
pub fn exact_treewidth(g: &Graph) -> Result<(usize, TreeDecomposition)> {
    let adj = masks(g)?;
    let upper = heuristic_decomposition(g);
    let mut budget = EXACT_MAX_STATES;
    for k in degeneracy(g)..upper.width() {
        let (td, used) = search_at_most(g, &adj, k, budget)?;
        if let Some(td) = td {
            debug_assert_eq!(td.width(), k);
            return Ok((td.width(), td));
        }
        budget -= used;
    }
    Ok((upper.width(), upper))
}

/// Largest minimum degree over all subgraphs.
fn degeneracy(g: &Graph) -> usize {
    let mut deg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut gone = vec![false; g.n()];
    let mut best = 0;
    for _ in 0..g.n() {
        let v = (0..g.n()).filter(|&v| !gone[v]).min_by_key(|&v| deg[v]).unwrap();
        best = best.max(deg[v]);
        gone[v] = true;
        for &u in g.neighbors(v) {
            if !gone[u] {
                deg[u] -= 1;
            }
        }
    }
    best
}
