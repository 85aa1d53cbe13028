use crate::graph::{complement, Graph};

use super::{find_induced_embedding, make_named};

/// Structural facts about a pattern, as used by the classifiers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternKind {
    pub vertices: usize,
    pub edges: usize,
    /// `Some(r)` iff the pattern is `K_r`.
    pub complete: Option<usize>,
    /// `Some(s)` iff the pattern is `sP1`.
    pub edgeless: Option<usize>,
    /// `Some(r)` iff the pattern is `P_r`.
    pub path: Option<usize>,
    /// `Some(r)` iff the pattern is `C_r`.
    pub cycle: Option<usize>,
    /// `Some(s)` iff the pattern is `K_{1,s}` with `s >= 1`.
    pub star: Option<usize>,
    pub forest: bool,
    pub linear_forest: bool,
    pub max_degree: usize,
    pub girth: Option<usize>,
    pub has_claw: bool,
    pub has_p1_p2: bool,
    pub has_p4: bool,
    pub has_c3: bool,
    pub has_c4: bool,
    pub has_c5: bool,
    /// Least `s` with the pattern an induced subgraph of `sP1 + P4`.
    pub fits_sp1_p4: Option<usize>,
}

impl PatternKind {
    /// An induced cycle exists iff the pattern is not a forest.
    pub fn has_cycle(&self) -> bool {
        !self.forest
    }

    pub fn is_complete(&self, r: usize) -> bool {
        self.complete == Some(r)
    }

    pub fn is_edgeless(&self, s: usize) -> bool {
        self.edgeless == Some(s)
    }
}

fn has(g: &Graph, text: &str) -> bool {
    let h = make_named(text).expect("built-in pattern");
    find_induced_embedding(g, h.graph()).is_some()
}

pub fn classify_pattern(h: &super::Pattern) -> PatternKind {
    let g = h.graph();
    let n = g.n();
    let m = g.m();
    let comps = g.connected_components();
    let forest = m + comps.len() == n;
    let max_degree = g.max_degree();
    let linear_forest = forest && max_degree <= 2;
    let connected = comps.len() == 1;

    let complete = (m == n * (n - 1) / 2).then_some(n);
    let edgeless = (m == 0).then_some(n);
    let path = (connected && linear_forest).then_some(n);
    let cycle = (n >= 3 && connected && m == n && g.degree_sequence().iter().all(|&d| d == 2)).then_some(n);
    let star = (n >= 2 && connected && forest && g.degree_sequence()[0] == n - 1).then_some(n - 1);

    let fits_sp1_p4 = if linear_forest {
        let sizes: Vec<usize> = comps.iter().map(Vec::len).collect();
        let isolated = sizes.iter().filter(|&&s| s == 1).count();
        let big: Vec<usize> = sizes.iter().copied().filter(|&s| s >= 2).collect();
        match big.as_slice() {
            // P4 itself hosts an independent pair
            [] => Some(isolated.saturating_sub(2)),
            // P2 at one end of the P4 leaves the far end free
            [2] => Some(isolated.saturating_sub(1)),
            [3] | [4] => Some(isolated),
            _ => None,
        }
    } else {
        None
    };

    PatternKind {
        vertices: n,
        edges: m,
        complete,
        edgeless,
        path,
        cycle,
        star,
        forest,
        linear_forest,
        max_degree,
        girth: g.girth(),
        has_claw: has(g, "claw"),
        has_p1_p2: has(g, "P1+P2"),
        has_p4: has(g, "P4"),
        has_c3: has(g, "C3"),
        has_c4: has(g, "C4"),
        has_c5: has(g, "C5"),
        fits_sp1_p4,
    }
}

/// Split graphs are exactly the `(2P2, C4, C5)`-free graphs.
pub fn is_split_graph(g: &Graph) -> bool {
    !has(g, "2P2") && !has(g, "C4") && !has(g, "C5")
}

/// Cographs are exactly the `P4`-free graphs.
pub fn is_cograph(g: &Graph) -> bool {
    !has(g, "P4")
}

/// For a connected graph on at least two vertices whose complement is
/// disconnected, returns `(A, B)` with every vertex of `A` adjacent to every
/// vertex of `B`: `A` is the complement component of vertex 0.
///
/// Connected cographs always qualify.
pub fn spanning_complete_bipartite(g: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    if g.n() < 2 || !g.is_connected() {
        return None;
    }
    let comps = complement(g).connected_components();
    if comps.len() < 2 {
        return None;
    }
    let a = comps[0].clone();
    let b: Vec<usize> = comps[1..].iter().flatten().copied().collect();
    let mut b = b;
    b.sort_unstable();
    Some((a, b))
}
