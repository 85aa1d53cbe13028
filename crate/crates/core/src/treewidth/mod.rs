//! Tree decompositions: validation, exact and heuristic construction, nice
//! refinement, PACE-style text format and the Steiner tree DP over them.

mod exact;
mod heuristic;
mod nice;
mod steiner_dp;

pub use exact::{exact_treewidth, treewidth_at_most, EXACT_MAX_STATES};
pub use heuristic::{decomposition_from_order, heuristic_decomposition, min_fill_order};
pub use nice::{NiceDecomposition, NiceKind, NiceNode};
pub use steiner_dp::{steiner_dp_treewidth, DP_MAX_WIDTH};

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Bags (each sorted) and tree edges between bag indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub bags: Vec<Vec<usize>>,
    pub edges: Vec<(usize, usize)>,
}

/// First failed condition found by [`validate_decomposition`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NoBags,
    /// The bag graph has a cycle or is disconnected.
    NotATree,
    BagVertexOutOfRange { bag: usize, vertex: usize },
    VertexUncovered(usize),
    EdgeUncovered(usize, usize),
    /// The bags holding this vertex do not form a subtree.
    Disconnected(usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoBags => write!(f, "no bags"),
            Violation::NotATree => write!(f, "bag edges do not form a tree"),
            Violation::BagVertexOutOfRange { bag, vertex } => write!(f, "bag {bag} holds unknown vertex {vertex}"),
            Violation::VertexUncovered(v) => write!(f, "vertex {v} is in no bag"),
            Violation::EdgeUncovered(u, v) => write!(f, "edge {u}-{v} is in no bag"),
            Violation::Disconnected(v) => write!(f, "bags holding vertex {v} are not connected"),
        }
    }
}

impl TreeDecomposition {
    pub fn new(bags: Vec<Vec<usize>>, edges: Vec<(usize, usize)>) -> Self {
        let bags = bags
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        TreeDecomposition { bags, edges }
    }

    /// All vertices in one bag.
    pub fn trivial(g: &Graph) -> Self {
        TreeDecomposition::new(vec![(0..g.n()).collect()], vec![])
    }

    /// Largest bag size minus one (0 for no bags).
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(1).saturating_sub(1)
    }

    pub fn validate(&self, g: &Graph) -> std::result::Result<(), Violation> {
        validate_decomposition(g, self)
    }

    pub(crate) fn tree_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// PACE `.td` text: `s td <bags> <width+1> <n>`, then `b <id> <v...>`
    /// lines and tree edges, all 1-based.
    pub fn to_pace(&self, n: usize) -> String {
        let mut out = format!("s td {} {} {}\n", self.bags.len(), self.width() + 1, n);
        for (i, b) in self.bags.iter().enumerate() {
            out.push_str(&format!("b {}", i + 1));
            for v in b {
                out.push_str(&format!(" {}", v + 1));
            }
            out.push('\n');
        }
        for &(a, b) in &self.edges {
            out.push_str(&format!("{} {}\n", a + 1, b + 1));
        }
        out
    }

    /// Parses [`to_pace`](Self::to_pace) output; returns the decomposition
    /// and the vertex count from the header. Lines starting with `c` are
    /// comments.
    pub fn from_pace(text: &str) -> Result<(TreeDecomposition, usize)> {
        let mut header: Option<(usize, usize, usize)> = None;
        let mut bags: Vec<Option<Vec<usize>>> = Vec::new();
        let mut edges = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line_no = i + 1;
            let err = |msg: String| Error::Parse { line: line_no, msg };
            let toks: Vec<&str> = line.split_whitespace().collect();
            let num = |t: &str| -> Result<usize> {
                t.parse::<usize>().map_err(|_| err(format!("expected a number, found `{t}`")))
            };
            match toks.first().copied() {
                None | Some("c") => continue,
                Some("s") => {
                    if toks.len() != 5 || toks[1] != "td" {
                        return Err(err("header must be `s td <bags> <width+1> <n>`".into()));
                    }
                    if header.is_some() {
                        return Err(err("duplicate header".into()));
                    }
                    let h = (num(toks[2])?, num(toks[3])?, num(toks[4])?);
                    bags = vec![None; h.0];
                    header = Some(h);
                }
                Some(_) if header.is_none() => return Err(err("content before header".into())),
                Some("b") => {
                    let (nb, _, n) = header.unwrap();
                    let id = toks.get(1).ok_or_else(|| err("bag line needs an id".into()))?;
                    let id = num(id)?;
                    if id == 0 || id > nb {
                        return Err(err(format!("bag id {id} out of range")));
                    }
                    if bags[id - 1].is_some() {
                        return Err(err(format!("bag {id} given twice")));
                    }
                    let mut vs = Vec::new();
                    for t in &toks[2..] {
                        let v = num(t)?;
                        if v == 0 || v > n {
                            return Err(err(format!("vertex {v} out of range")));
                        }
                        vs.push(v - 1);
                    }
                    bags[id - 1] = Some(vs);
                }
                Some(_) => {
                    let (nb, _, _) = header.unwrap();
                    if toks.len() != 2 {
                        return Err(err("tree edge line needs two bag ids".into()));
                    }
                    let (a, b) = (num(toks[0])?, num(toks[1])?);
                    if a == 0 || b == 0 || a > nb || b > nb {
                        return Err(err("tree edge names an unknown bag".into()));
                    }
                    edges.push((a - 1, b - 1));
                }
            }
        }
        let (_, declared, n) = header.ok_or(Error::Parse {
            line: 0,
            msg: "missing header".into(),
        })?;
        let bags = bags
            .into_iter()
            .enumerate()
            .map(|(i, b)| {
                b.ok_or_else(|| Error::Parse {
                    line: 0,
                    msg: format!("bag {} missing", i + 1),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let td = TreeDecomposition::new(bags, edges);
        if td.width() + 1 != declared && !td.bags.is_empty() {
            return Err(Error::Parse {
                line: 0,
                msg: format!("header says bag size {declared}, largest bag has {}", td.width() + 1),
            });
        }
        Ok((td, n))
    }
}

/// Checks the tree shape, vertex coverage, edge coverage and the subtree
/// condition, reporting the first failure in that order.
pub fn validate_decomposition(g: &Graph, td: &TreeDecomposition) -> std::result::Result<(), Violation> {
    let nb = td.bags.len();
    if nb == 0 {
        return if g.n() == 0 { Ok(()) } else { Err(Violation::NoBags) };
    }
    if td.edges.len() != nb - 1 || td.edges.iter().any(|&(a, b)| a >= nb || b >= nb || a == b) {
        return Err(Violation::NotATree);
    }
    let adj = td.tree_adjacency();
    if reach(&adj, 0, |_| true).iter().filter(|&&r| r).count() != nb {
        return Err(Violation::NotATree);
    }
    let mut holders = vec![Vec::new(); g.n()];
    for (i, b) in td.bags.iter().enumerate() {
        for &v in b {
            if v >= g.n() {
                return Err(Violation::BagVertexOutOfRange { bag: i, vertex: v });
            }
            holders[v].push(i);
        }
    }
    if let Some(v) = holders.iter().position(Vec::is_empty) {
        return Err(Violation::VertexUncovered(v));
    }
    for &(u, v) in g.edges() {
        if !holders[u].iter().any(|&i| td.bags[i].binary_search(&v).is_ok()) {
            return Err(Violation::EdgeUncovered(u, v));
        }
    }
    for (v, hs) in holders.iter().enumerate() {
        let inside = |i: usize| td.bags[i].binary_search(&v).is_ok();
        let seen = reach(&adj, hs[0], inside);
        if hs.iter().any(|&i| !seen[i]) {
            return Err(Violation::Disconnected(v));
        }
    }
    Ok(())
}

/// Bags reachable from `start` through bags satisfying `ok`.
fn reach(adj: &[Vec<usize>], start: usize, ok: impl Fn(usize) -> bool) -> Vec<bool> {
    let mut seen = vec![false; adj.len()];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if !seen[y] && ok(y) {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}


#[cfg(test)]
mod tests {
    use super::fixtures::seven_vertex;
    use super::*;

    #[test]
    fn seven_vertex_decomposition() {
        let (g, td) = seven_vertex();
        assert_eq!(td.validate(&g), Ok(()));
        assert_eq!(td.width(), 2);
    }

    #[test]
    fn trivial_is_valid() {
        let g = Graph::cycle(6);
        let td = TreeDecomposition::trivial(&g);
        assert_eq!(td.validate(&g), Ok(()));
        assert_eq!(td.width(), 5);
    }

    #[test]
    fn violations() {
        let (g, td) = seven_vertex();
        // FG is the only bag holding G and the only one covering F-G
        let mut t = td.clone();
        t.bags[4] = vec![5];
        assert_eq!(t.validate(&g), Err(Violation::VertexUncovered(6)));
        let mut t = td.clone();
        t.bags[4] = vec![6];
        assert_eq!(t.validate(&g), Err(Violation::EdgeUncovered(5, 6)));
        let mut t = td.clone();
        t.edges = vec![(0, 1), (1, 2), (2, 3), (0, 4)];
        assert_eq!(t.validate(&g), Err(Violation::Disconnected(5)));
        let mut t = td.clone();
        t.edges.push((0, 4));
        assert_eq!(t.validate(&g), Err(Violation::NotATree));
        let mut t = td;
        t.bags[0].push(9);
        assert_eq!(t.validate(&g), Err(Violation::BagVertexOutOfRange { bag: 0, vertex: 9 }));
    }

    #[test]
    fn pace_round_trip() {
        let (_, td) = seven_vertex();
        let text = td.to_pace(7);
        assert!(text.starts_with("s td 5 3 7\nb 1 1 2 4\n"));
        let (back, n) = TreeDecomposition::from_pace(&format!("c seven\n{text}")).unwrap();
        assert_eq!((back, n), (td, 7));
    }

    #[test]
    fn pace_errors() {
        assert!(matches!(TreeDecomposition::from_pace("b 1 1"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(
            TreeDecomposition::from_pace("s td 1 2 2\nb 1 1 3\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(TreeDecomposition::from_pace("s td 2 2 2\nb 1 1 2\n").is_err());
        assert!(TreeDecomposition::from_pace("s td 1 3 2\nb 1 1 2\n").is_err());
    }
}
