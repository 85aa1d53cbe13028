//! Reduction rules for edge-weighted instances of small maximum degree.
//!
//! * R1: a degree-2 non-terminal is replaced by an edge between its
//!   neighbours weighing the sum; of two parallel edges the lighter stays.
//! * R2: a degree-2 terminal whose neighbours are both terminals has its
//!   lighter edge contracted.
//! * R3: a degree-1 non-terminal is deleted; a degree-1 terminal has its
//!   edge contracted.
//!
//! Contractions move the edge weight into an offset, so
//! `opt(original) = opt(reduced) + offset`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Result;
use crate::graph::{canon, Edge, Graph};
use crate::instance::{EdgeWeighting, SteinerInstance, SteinerSolution};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RuleStep {
    /// R1 on `vertex`, joining `between`.
    Bypass { vertex: usize, between: (usize, usize) },
    /// R2: `vertex` contracted into `into`.
    ContractTerminal { vertex: usize, into: usize },
    /// R3 on a non-terminal leaf.
    DeleteLeaf { vertex: usize },
    /// R3 on a terminal leaf.
    ContractLeaf { vertex: usize, into: usize },
}

impl fmt::Display for RuleStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleStep::Bypass { vertex, between: (a, b) } => write!(f, "R1 bypass {vertex} by {a}-{b}"),
            RuleStep::ContractTerminal { vertex, into } => write!(f, "R2 contract {vertex} into {into}"),
            RuleStep::DeleteLeaf { vertex } => write!(f, "R3 delete {vertex}"),
            RuleStep::ContractLeaf { vertex, into } => write!(f, "R3 contract {vertex} into {into}"),
        }
    }
}

/// Outcome of [`preprocess_rules123`]. Vertex ids in `trace` are those of
/// the original instance.
#[derive(Clone, Debug)]
pub struct Preprocessed {
    pub instance: SteinerInstance,
    pub offset: Rational,
    pub trace: Vec<RuleStep>,
    /// Original vertex of each reduced vertex.
    pub vertex_map: Vec<usize>,
    /// Original edges behind each reduced edge.
    pub expansions: Vec<Vec<Edge>>,
    /// Original edges every optimum contains (the contracted ones).
    pub forced: Vec<Edge>,
}

impl Preprocessed {
    /// Turns a tree of the reduced instance into one of the original.
    pub fn lift(&self, original: &SteinerInstance, reduced: &SteinerSolution) -> Result<SteinerSolution> {
        let g = self.instance.graph();
        let mut edges = self.forced.clone();
        for &(u, v) in &reduced.edges {
            edges.extend(&self.expansions[g.edge_index(u, v).unwrap()]);
        }
        let root = self.vertex_map[reduced.vertices[0]];
        SteinerSolution::from_edges(original, edges, root)
    }
}

#[derive(Clone, Debug)]
struct Link {
    w: Rational,
    orig: Vec<usize>,
}

struct Work {
    adj: Vec<BTreeMap<usize, Link>>,
    alive: Vec<bool>,
    terminal: Vec<bool>,
    terminals: usize,
}

impl Work {
    fn remove_vertex(&mut self, x: usize) {
        let nbrs: Vec<usize> = self.adj[x].keys().copied().collect();
        for y in nbrs {
            self.adj[y].remove(&x);
        }
        self.adj[x].clear();
        self.alive[x] = false;
    }

    /// Adds `a-b`, keeping the lighter link if one exists (ties keep the old).
    fn offer(&mut self, a: usize, b: usize, link: Link) {
        let replace = self.adj[a].get(&b).is_none_or(|old| link.w < old.w);
        if replace {
            self.adj[a].insert(b, link.clone());
            self.adj[b].insert(a, link);
        }
    }

    fn find(&self, pred: impl Fn(usize) -> bool) -> Option<usize> {
        (0..self.adj.len()).find(|&v| self.alive[v] && pred(v))
    }
}

/// Applies R1, R2, R3 exhaustively, always taking the first applicable rule
/// in that order at the least vertex, and rescanning after each step.
pub fn preprocess_rules123(inst: &SteinerInstance) -> Result<Preprocessed> {
    let w = inst.edge_weights()?;
    let g = inst.graph();
    let n = g.n();
    let mut work = Work {
        adj: vec![BTreeMap::new(); n],
        alive: vec![true; n],
        terminal: (0..n).map(|v| inst.is_terminal(v)).collect(),
        terminals: inst.terminals().len(),
    };
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        let link = Link {
            w: w.get(i),
            orig: vec![i],
        };
        work.adj[u].insert(v, link.clone());
        work.adj[v].insert(u, link);
    }
    let mut offset = Rational::ZERO;
    let mut forced: Vec<usize> = Vec::new();
    let mut trace = Vec::new();

    loop {
        let deg = |work: &Work, v: usize| work.adj[v].len();
        if let Some(x) = work.find(|v| !work.terminal[v] && deg(&work, v) == 2) {
            let mut it = work.adj[x].iter();
            let (&a, la) = it.next().unwrap();
            let (&b, lb) = it.next().unwrap();
            let mut orig = la.orig.clone();
            orig.extend(&lb.orig);
            let link = Link { w: la.w + lb.w, orig };
            work.remove_vertex(x);
            work.offer(a, b, link);
            trace.push(RuleStep::Bypass { vertex: x, between: (a, b) });
            continue;
        }
        if let Some(x) = work.find(|v| {
            work.terminal[v] && deg(&work, v) == 2 && work.adj[v].keys().all(|&u| work.terminal[u])
        }) {
            let mut it = work.adj[x].iter();
            let (&a, la) = it.next().unwrap();
            let (&b, lb) = it.next().unwrap();
            // lighter edge; ties go to the smaller neighbour
            let ((y, ly), (z, lz)) = if lb.w < la.w { ((b, lb), (a, la)) } else { ((a, la), (b, lb)) };
            let (ly, lz) = (ly.clone(), lz.clone());
            offset = offset + ly.w;
            forced.extend(&ly.orig);
            work.remove_vertex(x);
            work.offer(y, z, lz);
            work.terminals -= 1;
            trace.push(RuleStep::ContractTerminal { vertex: x, into: y });
            continue;
        }
        if let Some(x) = work.find(|v| deg(&work, v) == 1 && (!work.terminal[v] || work.terminals >= 2)) {
            let (&y, ly) = work.adj[x].iter().next().unwrap();
            let ly = ly.clone();
            if work.terminal[x] {
                offset = offset + ly.w;
                forced.extend(&ly.orig);
                if work.terminal[y] {
                    work.terminals -= 1;
                }
                work.terminal[y] = true;
                trace.push(RuleStep::ContractLeaf { vertex: x, into: y });
            } else {
                trace.push(RuleStep::DeleteLeaf { vertex: x });
            }
            work.remove_vertex(x);
            continue;
        }
        break;
    }

    let vertex_map: Vec<usize> = (0..n).filter(|&v| work.alive[v]).collect();
    let mut new_id = vec![usize::MAX; n];
    for (i, &v) in vertex_map.iter().enumerate() {
        new_id[v] = i;
    }
    let mut links: Vec<(Edge, Link)> = Vec::new();
    for &u in &vertex_map {
        for (&v, link) in &work.adj[u] {
            if u < v {
                links.push((canon(new_id[u], new_id[v]), link.clone()));
            }
        }
    }
    links.sort_by_key(|(e, _)| *e);
    let reduced = Graph::new(vertex_map.len(), links.iter().map(|(e, _)| *e))?;
    let weighting = EdgeWeighting::new(&reduced, links.iter().map(|(_, l)| l.w).collect())?;
    let terminals: Vec<usize> = vertex_map
        .iter()
        .enumerate()
        .filter(|&(_, &v)| work.terminal[v])
        .map(|(i, _)| i)
        .collect();
    let instance = SteinerInstance::edge(reduced, terminals, weighting)?;
    let orig_edges = |ids: &[usize]| -> Vec<Edge> { ids.iter().map(|&i| g.edges()[i]).collect() };
    Ok(Preprocessed {
        instance,
        offset,
        trace,
        vertex_map,
        expansions: links.iter().map(|(_, l)| orig_edges(&l.orig)).collect(),
        forced: orig_edges(&forced),
    })
}
