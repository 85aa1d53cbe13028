//! Simple undirected graphs over dense vertex ids and the elementary
//! constructions every other module builds on.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Unordered edge stored with `u < v`.
pub type Edge = (usize, usize);

pub fn canon(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Finite simple undirected graph on vertices `0..n`.
///
/// The edge list is kept sorted, so iteration order is deterministic and
/// [`Graph::edge_index`] is a binary search.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut es = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { vertex: u.max(v), n });
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            es.push(canon(u, v));
        }
        es.sort_unstable();
        if let Some(w) = es.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!(
                "parallel edge {{{}, {}}}",
                w[0].0, w[0].1
            )));
        }
        Ok(Self::from_sorted_unchecked(n, es))
    }

    /// Like [`Graph::new`] but silently drops duplicate edges.
    pub fn new_dedup(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut es: Vec<Edge> = edges.into_iter().map(|(u, v)| canon(u, v)).collect();
        es.sort_unstable();
        es.dedup();
        Graph::new(n, es)
    }

    fn from_sorted_unchecked(n: usize, edges: Vec<Edge>) -> Graph {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Graph {
        Self::from_sorted_unchecked(n, Vec::new())
    }

    pub fn complete(n: usize) -> Graph {
        let mut es = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                es.push((u, v));
            }
        }
        Self::from_sorted_unchecked(n, es)
    }

    /// Path on `n` vertices `0 - 1 - ... - n-1`.
    pub fn path(n: usize) -> Graph {
        Self::from_sorted_unchecked(n, (1..n).map(|i| (i - 1, i)).collect())
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut es: Vec<Edge> = (1..n).map(|i| (i - 1, i)).collect();
        es.push((0, n - 1));
        es.sort_unstable();
        Self::from_sorted_unchecked(n, es)
    }

    /// `K_{s,t}` with sides `0..s` and `s..s+t`.
    pub fn complete_bipartite(s: usize, t: usize) -> Graph {
        join(&Graph::empty(s), &Graph::empty(t))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Position of `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&canon(u, v)).ok()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Neighbourhood bitmasks; `None` when the graph has more than 128 vertices.
    pub fn adjacency_masks(&self) -> Option<Vec<u128>> {
        if self.n > 128 {
            return None;
        }
        Some(
            self.adj
                .iter()
                .map(|ns| ns.iter().fold(0u128, |m, &v| m | (1u128 << v)))
                .collect(),
        )
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.bfs_order(0).len() == self.n
    }

    /// Components sorted by their minimum vertex; each component sorted.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = self.bfs_order(s);
            for &v in &comp {
                seen[v] = true;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    fn bfs_order(&self, s: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut order = vec![s];
        seen[s] = true;
        let mut i = 0;
        while i < order.len() {
            let u = order[i];
            i += 1;
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    order.push(v);
                }
            }
        }
        order
    }

    /// Hop distances from `s`; `usize::MAX` for unreachable vertices.
    pub fn bfs_distances(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    q.push_back(v);
                }
            }
        }
        dist
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                for &v in &self.adj[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        q.push_back(v);
                    } else if parent[u] != v {
                        let len = dist[u] + dist[v] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    pub fn is_forest(&self) -> bool {
        self.m() + self.connected_components().len() == self.n
    }

    /// A proper 2-colouring (`false`/`true` per vertex) if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                let cu = color[u].unwrap();
                for &v in &self.adj[u] {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            q.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// Result of [`induced_subgraph`]: the subgraph plus both id maps.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub old_to_new: Vec<Option<usize>>,
    pub new_to_old: Vec<usize>,
}

/// Subgraph induced by `s`. New ids follow ascending old ids.
pub fn induced_subgraph(g: &Graph, s: &[usize]) -> Result<InducedSubgraph> {
    let mut keep = vec![false; g.n()];
    for &v in s {
        g.check_vertex(v)?;
        keep[v] = true;
    }
    let new_to_old: Vec<usize> = (0..g.n()).filter(|&v| keep[v]).collect();
    let mut old_to_new = vec![None; g.n()];
    for (i, &v) in new_to_old.iter().enumerate() {
        old_to_new[v] = Some(i);
    }
    let edges: Vec<Edge> = g
        .edges()
        .iter()
        .filter_map(|&(u, v)| Some((old_to_new[u]?, old_to_new[v]?)))
        .collect();
    // Relabelling is monotone, so the edge list stays sorted.
    let graph = Graph::from_sorted_unchecked(new_to_old.len(), edges);
    Ok(InducedSubgraph {
        graph,
        old_to_new,
        new_to_old,
    })
}

pub fn complement(g: &Graph) -> Graph {
    let mut es = Vec::new();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if !g.has_edge(u, v) {
                es.push((u, v));
            }
        }
    }
    Graph::from_sorted_unchecked(g.n(), es)
}

/// `g1 + g2`; vertices of `g2` are shifted by `g1.n()`.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Graph {
    let off = g1.n();
    let mut es = g1.edges().to_vec();
    es.extend(g2.edges().iter().map(|&(u, v)| (u + off, v + off)));
    Graph::from_sorted_unchecked(g1.n() + g2.n(), es)
}

/// Disjoint union plus every edge between the two sides.
pub fn join(g1: &Graph, g2: &Graph) -> Graph {
    let off = g1.n();
    let mut es = g1.edges().to_vec();
    es.extend(g2.edges().iter().map(|&(u, v)| (u + off, v + off)));
    for u in 0..g1.n() {
        for v in 0..g2.n() {
            es.push((u, v + off));
        }
    }
    es.sort_unstable();
    Graph::from_sorted_unchecked(g1.n() + g2.n(), es)
}

/// The `r`-subdivision of `g`.
///
/// Returns the new graph and, per edge of `g` (in edge order), the vertex
/// sequence `u, w_1, .., w_r, v` of the path replacing it. Original vertices
/// keep their ids; fresh vertices are numbered from `g.n()` in edge order.
pub fn subdivide(g: &Graph, r: usize) -> (Graph, Vec<Vec<usize>>) {
    let mut next = g.n();
    let mut es = Vec::with_capacity((r + 1) * g.m());
    let mut paths = Vec::with_capacity(g.m());
    for &(u, v) in g.edges() {
        let mut p = vec![u];
        for _ in 0..r {
            p.push(next);
            next += 1;
        }
        p.push(v);
        for w in p.windows(2) {
            es.push(canon(w[0], w[1]));
        }
        paths.push(p);
    }
    es.sort_unstable();
    (Graph::from_sorted_unchecked(next, es), paths)
}

/// Line graph of `g`: vertex `i` stands for `g.edges()[i]`.
pub fn line_graph(g: &Graph) -> Result<Graph> {
    if g.m() == 0 {
        return Err(Error::Edgeless);
    }
    let mut es = Vec::new();
    for v in 0..g.n() {
        let inc: Vec<usize> = g
            .neighbors(v)
            .iter()
            .map(|&w| g.edge_index(v, w).unwrap())
            .collect();
        for i in 0..inc.len() {
            for j in i + 1..inc.len() {
                es.push(canon(inc[i], inc[j]));
            }
        }
    }
    // Two distinct edges of a simple graph share at most one endpoint.
    es.sort_unstable();
    Ok(Graph::from_sorted_unchecked(g.m(), es))
}

/// Bitmask helpers shared by the subset-enumeration solvers.
pub(crate) mod mask {
    pub fn iter_bits(mut m: u128) -> impl Iterator<Item = usize> {
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                Some(v)
            }
        })
    }
}
