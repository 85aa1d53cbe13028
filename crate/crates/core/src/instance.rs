//! Steiner tree instances, weightings and solutions.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::graph::{canon, Edge, Graph};
use crate::rational::Rational;

/// Strictly positive weight per edge, indexed like [`Graph::edges`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeWeighting(Vec<Rational>);

impl EdgeWeighting {
    pub fn new(g: &Graph, weights: Vec<Rational>) -> Result<EdgeWeighting> {
        if weights.len() != g.m() {
            return Err(Error::InvalidWeight(format!(
                "{} edge weights for {} edges",
                weights.len(),
                g.m()
            )));
        }
        check_positive(&weights)?;
        Ok(EdgeWeighting(weights))
    }

    pub fn uniform(g: &Graph, w: Rational) -> EdgeWeighting {
        assert!(w.is_positive());
        EdgeWeighting(vec![w; g.m()])
    }

    pub fn unit(g: &Graph) -> EdgeWeighting {
        Self::uniform(g, Rational::ONE)
    }

    pub fn get(&self, edge_index: usize) -> Rational {
        self.0[edge_index]
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.0
    }

    pub fn total(&self) -> Rational {
        self.0.iter().sum()
    }

    pub fn is_uniform(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }
}

/// Strictly positive weight per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexWeighting(Vec<Rational>);

impl VertexWeighting {
    pub fn new(g: &Graph, weights: Vec<Rational>) -> Result<VertexWeighting> {
        if weights.len() != g.n() {
            return Err(Error::InvalidWeight(format!(
                "{} vertex weights for {} vertices",
                weights.len(),
                g.n()
            )));
        }
        check_positive(&weights)?;
        Ok(VertexWeighting(weights))
    }

    pub fn uniform(g: &Graph, w: Rational) -> VertexWeighting {
        assert!(w.is_positive());
        VertexWeighting(vec![w; g.n()])
    }

    pub fn unit(g: &Graph) -> VertexWeighting {
        Self::uniform(g, Rational::ONE)
    }

    pub fn get(&self, v: usize) -> Rational {
        self.0[v]
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_uniform(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }
}

fn check_positive(ws: &[Rational]) -> Result<()> {
    match ws.iter().position(|w| !w.is_positive()) {
        Some(i) => Err(Error::InvalidWeight(format!(
            "weight #{i} is {} (must be > 0)",
            ws[i]
        ))),
        None => Ok(()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Weighting {
    Edge(EdgeWeighting),
    Vertex(VertexWeighting),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    Edge,
    Vertex,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Edge => "edge",
            Variant::Vertex => "vertex",
        }
    }
}

/// A connected graph, a non-empty terminal set and exactly one weighting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteinerInstance {
    graph: Graph,
    terminals: Vec<usize>,
    weighting: Weighting,
    threshold: Option<Rational>,
}

impl SteinerInstance {
    pub fn new(
        graph: Graph,
        terminals: impl IntoIterator<Item = usize>,
        weighting: Weighting,
        threshold: Option<Rational>,
    ) -> Result<SteinerInstance> {
        let mut terminals: Vec<usize> = terminals.into_iter().collect();
        terminals.sort_unstable();
        terminals.dedup();
        if terminals.is_empty() {
            return Err(Error::InvalidInstance("terminal set is empty".into()));
        }
        for &t in &terminals {
            graph.check_vertex(t)?;
        }
        if !graph.is_connected() {
            return Err(Error::Disconnected);
        }
        match &weighting {
            Weighting::Edge(w) if w.as_slice().len() != graph.m() => {
                return Err(Error::InvalidWeight("edge weighting size mismatch".into()))
            }
            Weighting::Vertex(w) if w.as_slice().len() != graph.n() => {
                return Err(Error::InvalidWeight("vertex weighting size mismatch".into()))
            }
            _ => {}
        }
        if let Some(k) = threshold {
            if !k.is_positive() {
                return Err(Error::InvalidInstance(format!("threshold {k} is not positive")));
            }
        }
        Ok(SteinerInstance {
            graph,
            terminals,
            weighting,
            threshold,
        })
    }

    pub fn edge(graph: Graph, terminals: impl IntoIterator<Item = usize>, w: EdgeWeighting) -> Result<Self> {
        Self::new(graph, terminals, Weighting::Edge(w), None)
    }

    pub fn vertex(graph: Graph, terminals: impl IntoIterator<Item = usize>, w: VertexWeighting) -> Result<Self> {
        Self::new(graph, terminals, Weighting::Vertex(w), None)
    }

    pub fn unit_edge(graph: Graph, terminals: impl IntoIterator<Item = usize>) -> Result<Self> {
        let w = EdgeWeighting::unit(&graph);
        Self::edge(graph, terminals, w)
    }

    pub fn unit_vertex(graph: Graph, terminals: impl IntoIterator<Item = usize>) -> Result<Self> {
        let w = VertexWeighting::unit(&graph);
        Self::vertex(graph, terminals, w)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn terminals(&self) -> &[usize] {
        &self.terminals
    }

    pub fn is_terminal(&self, v: usize) -> bool {
        self.terminals.binary_search(&v).is_ok()
    }

    pub fn weighting(&self) -> &Weighting {
        &self.weighting
    }

    pub fn threshold(&self) -> Option<Rational> {
        self.threshold
    }

    pub fn with_threshold(mut self, k: Option<Rational>) -> Result<Self> {
        if let Some(k) = k {
            if !k.is_positive() {
                return Err(Error::InvalidInstance(format!("threshold {k} is not positive")));
            }
        }
        self.threshold = k;
        Ok(self)
    }

    pub fn variant(&self) -> Variant {
        match self.weighting {
            Weighting::Edge(_) => Variant::Edge,
            Weighting::Vertex(_) => Variant::Vertex,
        }
    }

    pub fn edge_weights(&self) -> Result<&EdgeWeighting> {
        match &self.weighting {
            Weighting::Edge(w) => Ok(w),
            Weighting::Vertex(_) => Err(Error::WrongVariant { expected: "edge" }),
        }
    }

    pub fn vertex_weights(&self) -> Result<&VertexWeighting> {
        match &self.weighting {
            Weighting::Vertex(w) => Ok(w),
            Weighting::Edge(_) => Err(Error::WrongVariant { expected: "vertex" }),
        }
    }

    /// Weight of `{u, v}` in an edge instance.
    pub fn weight_of_edge(&self, u: usize, v: usize) -> Option<Rational> {
        let w = self.edge_weights().ok()?;
        self.graph.edge_index(u, v).map(|i| w.get(i))
    }

    pub fn is_unweighted(&self) -> bool {
        match &self.weighting {
            Weighting::Edge(w) => w.is_uniform(),
            Weighting::Vertex(w) => w.is_uniform(),
        }
    }

    /// Objective value of a tree given by its vertex and edge sets.
    pub fn tree_weight(&self, vertices: &[usize], edges: &[Edge]) -> Result<Rational> {
        match &self.weighting {
            Weighting::Edge(w) => Rational::checked_sum(edges.iter().map(|&(u, v)| {
                w.get(self.graph.edge_index(u, v).expect("edge of graph"))
            })),
            Weighting::Vertex(w) => Rational::checked_sum(vertices.iter().map(|&v| w.get(v))),
        }
    }
}

/// A tree in the instance graph containing every terminal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteinerSolution {
    pub edges: Vec<Edge>,
    pub vertices: Vec<usize>,
    pub weight: Rational,
}

impl SteinerSolution {
    /// Builds a solution from a tree's edge list. `root` names the single
    /// vertex when the tree has no edges.
    pub fn from_edges(inst: &SteinerInstance, edges: impl IntoIterator<Item = Edge>, root: usize) -> Result<Self> {
        let mut edges: Vec<Edge> = edges.into_iter().map(|(u, v)| canon(u, v)).collect();
        edges.sort_unstable();
        edges.dedup();
        let mut vertices: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        if vertices.is_empty() {
            vertices.push(root);
        }
        vertices.sort_unstable();
        vertices.dedup();
        let weight = inst.tree_weight(&vertices, &edges)?;
        Ok(SteinerSolution {
            edges,
            vertices,
            weight,
        })
    }

    /// Checks tree shape, terminal coverage and the stored weight.
    pub fn validate(&self, inst: &SteinerInstance) -> Result<()> {
        let g = inst.graph();
        let bad = |msg: String| Err(Error::InvalidInstance(format!("invalid solution: {msg}")));
        if self.vertices.is_empty() {
            return bad("no vertices".into());
        }
        for &(u, v) in &self.edges {
            if !g.has_edge(u, v) {
                return bad(format!("edge {{{u}, {v}}} not in graph"));
            }
            if self.vertices.binary_search(&u).is_err() || self.vertices.binary_search(&v).is_err() {
                return bad(format!("edge {{{u}, {v}}} leaves the vertex set"));
            }
        }
        if self.edges.len() + 1 != self.vertices.len() {
            return bad(format!(
                "{} edges on {} vertices is not a tree",
                self.edges.len(),
                self.vertices.len()
            ));
        }
        let sub = Graph::new(g.n(), self.edges.iter().copied())?;
        let reach = sub.bfs_distances(self.vertices[0]);
        if self.vertices.iter().any(|&v| reach[v] == usize::MAX) {
            return bad("not connected".into());
        }
        for &t in inst.terminals() {
            if self.vertices.binary_search(&t).is_err() {
                return bad(format!("terminal {t} not covered"));
            }
        }
        let w = inst.tree_weight(&self.vertices, &self.edges)?;
        if w != self.weight {
            return bad(format!("stored weight {} but recomputed {w}", self.weight));
        }
        Ok(())
    }

    /// Order used for every "minimum" selection: weight, then edge count,
    /// then the canonical edge list.
    pub fn tie_break_cmp(&self, other: &SteinerSolution) -> Ordering {
        self.weight
            .cmp(&other.weight)
            .then(self.edges.len().cmp(&other.edges.len()))
            .then_with(|| self.edges.cmp(&other.edges))
            .then_with(|| self.vertices.cmp(&other.vertices))
    }
}

/// Union-find over `0..n` with path halving.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        // smaller root wins, keeps results independent of call order
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

/// Edge indices sorted by `(weight, canonical edge)`: Kruskal's scan order.
pub(crate) fn kruskal_order(g: &Graph, w: &EdgeWeighting) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.m()).collect();
    order.sort_by(|&a, &b| w.get(a).cmp(&w.get(b)).then(g.edges()[a].cmp(&g.edges()[b])));
    order
}

/// Kruskal restricted to the vertex set `inside`. Returns the chosen edge
/// indices, or `None` if `inside` does not induce a connected subgraph.
pub(crate) fn kruskal_within(
    g: &Graph,
    order: &[usize],
    inside: &[bool],
    uf: &mut UnionFind,
    vertex_count: usize,
) -> Option<Vec<usize>> {
    let mut chosen = Vec::with_capacity(vertex_count.saturating_sub(1));
    if vertex_count <= 1 {
        return Some(chosen);
    }
    for &i in order {
        let (u, v) = g.edges()[i];
        if inside[u] && inside[v] && uf.union(u, v) {
            chosen.push(i);
            if chosen.len() + 1 == vertex_count {
                return Some(chosen);
            }
        }
    }
    None
}

/// Minimum spanning tree under the `(weight, canonical edge)` scan order.
pub fn spanning_tree_min(g: &Graph, w: &EdgeWeighting) -> Result<SteinerSolution> {
    if g.n() == 0 {
        return Err(Error::InvalidGraph("empty graph".into()));
    }
    let order = kruskal_order(g, w);
    let inside = vec![true; g.n()];
    let mut uf = UnionFind::new(g.n());
    let chosen = kruskal_within(g, &order, &inside, &mut uf, g.n()).ok_or(Error::Disconnected)?;
    let mut edges: Vec<Edge> = chosen.iter().map(|&i| g.edges()[i]).collect();
    edges.sort_unstable();
    let weight = Rational::checked_sum(chosen.iter().map(|&i| w.get(i)))?;
    Ok(SteinerSolution {
        edges,
        vertices: (0..g.n()).collect(),
        weight,
    })
}
