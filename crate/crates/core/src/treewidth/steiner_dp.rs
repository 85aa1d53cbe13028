//! Edge Steiner Tree by dynamic programming over a nice decomposition.
//!
//! One terminal `t0` is added to every bag first. A state at a node marks
//! which bag vertices the partial tree uses and partitions the marked ones
//! into connectivity blocks (labels in restricted-growth order, four bits
//! per bag position, 0 = unmarked). Terminals are always marked. Each edge
//! is paid for once, at the forget node of whichever endpoint is forgotten
//! first; the other endpoint is still in that bag. Because `t0` is in every
//! bag, a block may only lose its last bag vertex when nothing else is
//! marked, which happens once, on the final path to the root.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Edge;
use crate::instance::{SteinerInstance, SteinerSolution};
use crate::rational::common_scale;
use crate::solvers::{Algorithm, SolveReport};

use super::{NiceDecomposition, NiceKind, TreeDecomposition};

/// Largest accepted decomposition width.
pub const DP_MAX_WIDTH: usize = 10;

type State = u64;

#[derive(Clone, Debug)]
enum Back {
    Leaf,
    Intro(State),
    Forget(State, Vec<Edge>),
    Join(State, State),
}

#[derive(Clone, Debug)]
struct Entry {
    cost: i128,
    back: Back,
}

fn decode(s: State, len: usize) -> Vec<u8> {
    (0..len).map(|i| ((s >> (4 * i)) & 0xf) as u8).collect()
}

/// Relabels blocks by first appearance and packs.
fn encode(labels: &[u8]) -> State {
    let mut map = [0u8; 16];
    let mut next = 0u8;
    let mut s = 0;
    for (i, &l) in labels.iter().enumerate() {
        if l == 0 {
            continue;
        }
        if map[l as usize] == 0 {
            next += 1;
            map[l as usize] = next;
        }
        s |= (map[l as usize] as u64) << (4 * i);
    }
    s
}

fn blocks(labels: &[u8]) -> usize {
    labels.iter().copied().max().unwrap_or(0) as usize
}

/// Minimal union-find over block labels `1..=15`.
struct Blocks([u8; 16]);

impl Blocks {
    fn new() -> Self {
        let mut p = [0u8; 16];
        for (i, x) in p.iter_mut().enumerate() {
            *x = i as u8;
        }
        Blocks(p)
    }

    fn find(&mut self, mut x: u8) -> u8 {
        while self.0[x as usize] != x {
            x = self.0[x as usize];
        }
        x
    }

    /// False when already joined (the edge would close a cycle).
    fn union(&mut self, a: u8, b: u8) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra.max(rb) as usize] = ra.min(rb);
        true
    }
}

fn offer(table: &mut HashMap<State, Entry>, s: State, cost: i128, back: Back) {
    match table.get(&s) {
        Some(e) if e.cost <= cost => {}
        _ => {
            table.insert(s, Entry { cost, back });
        }
    }
}

/// Exact optimum over a tree decomposition of the instance graph.
pub fn steiner_dp_treewidth(inst: &SteinerInstance, td: &TreeDecomposition) -> Result<SolveReport> {
    let g = inst.graph();
    let w = inst.edge_weights()?;
    td.validate(g).map_err(|v| Error::InvalidDecomposition(v.to_string()))?;
    if td.width() > DP_MAX_WIDTH {
        return Err(Error::BudgetExceeded {
            what: "decomposition width for the Steiner DP",
            limit: DP_MAX_WIDTH,
            actual: td.width(),
        });
    }
    let t0 = inst.terminals()[0];
    if inst.terminals().len() == 1 {
        let sol = SteinerSolution::from_edges(inst, [], t0)?;
        return Ok(SolveReport::new(sol, Algorithm::TreewidthDp, 1));
    }
    let (iw, _) = common_scale(w.as_slice())?;

    let anchored = TreeDecomposition::new(
        td.bags
            .iter()
            .map(|b| {
                let mut b = b.clone();
                b.push(t0);
                b
            })
            .collect(),
        td.edges.clone(),
    );
    let nice = NiceDecomposition::from_decomposition(&anchored);
    let mut tables: Vec<HashMap<State, Entry>> = Vec::with_capacity(nice.nodes.len());
    let mut explored = 0u64;

    for node in &nice.nodes {
        let bag = &node.bag;
        let mut table: HashMap<State, Entry> = HashMap::new();
        match node.kind {
            NiceKind::Leaf => offer(&mut table, 0, 0, Back::Leaf),
            NiceKind::Introduce(v) => {
                let p = bag.binary_search(&v).unwrap();
                for (&s, e) in &tables[node.children[0]] {
                    let mut labels = decode(s, bag.len() - 1);
                    let fresh = blocks(&labels) as u8 + 1;
                    labels.insert(p, fresh);
                    offer(&mut table, encode(&labels), e.cost, Back::Intro(s));
                    if !inst.is_terminal(v) {
                        labels[p] = 0;
                        offer(&mut table, encode(&labels), e.cost, Back::Intro(s));
                    }
                }
            }
            NiceKind::Forget(v) => {
                let child_bag = &nice.nodes[node.children[0]].bag;
                let p = child_bag.binary_search(&v).unwrap();
                let nbrs: Vec<(usize, usize)> = child_bag
                    .iter()
                    .enumerate()
                    .filter(|&(q, &u)| q != p && g.has_edge(u, v))
                    .map(|(q, &u)| (q, g.edge_index(u, v).unwrap()))
                    .collect();
                for (&s, e) in &tables[node.children[0]] {
                    let labels = decode(s, child_bag.len());
                    if labels[p] == 0 {
                        let mut rest = labels.clone();
                        rest.remove(p);
                        offer(&mut table, encode(&rest), e.cost, Back::Forget(s, vec![]));
                        continue;
                    }
                    let usable: Vec<(usize, usize)> = nbrs.iter().copied().filter(|&(q, _)| labels[q] != 0).collect();
                    'subset: for bits in 0u32..(1 << usable.len()) {
                        let mut uf = Blocks::new();
                        let mut cost = e.cost;
                        let mut added = Vec::new();
                        for (i, &(q, ei)) in usable.iter().enumerate() {
                            if bits >> i & 1 == 1 {
                                if !uf.union(labels[p], labels[q]) {
                                    continue 'subset;
                                }
                                cost += iw[ei];
                                added.push(g.edges()[ei]);
                            }
                        }
                        let mut merged: Vec<u8> = labels.iter().map(|&l| if l == 0 { 0 } else { uf.find(l) }).collect();
                        let mine = merged[p];
                        merged.remove(p);
                        let kept = merged.contains(&mine);
                        let others_marked = merged.iter().any(|&l| l != 0);
                        if !kept && others_marked {
                            continue;
                        }
                        offer(&mut table, encode(&merged), cost, Back::Forget(s, added));
                    }
                }
            }
            NiceKind::Join => {
                let (a, b) = (&tables[node.children[0]], &tables[node.children[1]]);
                let mut by_mark: HashMap<Vec<bool>, Vec<(State, i128)>> = HashMap::new();
                for (&s, e) in b {
                    let mark = decode(s, bag.len()).iter().map(|&l| l != 0).collect();
                    by_mark.entry(mark).or_default().push((s, e.cost));
                }
                for (&s1, e1) in a {
                    let l1 = decode(s1, bag.len());
                    let mark: Vec<bool> = l1.iter().map(|&l| l != 0).collect();
                    let Some(partners) = by_mark.get(&mark) else { continue };
                    let marked = mark.iter().filter(|&&m| m).count();
                    for &(s2, c2) in partners {
                        let l2 = decode(s2, bag.len());
                        // positions as union-find items: join within each block
                        let mut uf = Blocks::new();
                        let mut ok = true;
                        for labels in [&l1, &l2] {
                            let mut first = [0u8; 16];
                            for (q, &l) in labels.iter().enumerate() {
                                if l == 0 {
                                    continue;
                                }
                                if first[l as usize] == 0 {
                                    first[l as usize] = q as u8 + 1;
                                } else if !uf.union(first[l as usize], q as u8 + 1) {
                                    ok = false;
                                }
                            }
                        }
                        // each block is a tree, so every union above that
                        // fails means the two forests together close a cycle
                        if !ok {
                            continue;
                        }
                        debug_assert!(marked >= blocks(&l1));
                        let merged: Vec<u8> =
                            (0..bag.len()).map(|q| if mark[q] { uf.find(q as u8 + 1) } else { 0 }).collect();
                        offer(&mut table, encode(&merged), e1.cost + c2, Back::Join(s1, s2));
                    }
                }
            }
        }
        explored += table.len() as u64;
        tables.push(table);
    }

    let root = nice.root();
    if !tables[root].contains_key(&0) {
        return Err(Error::Disconnected);
    }
    let mut edges = Vec::new();
    let mut stack = vec![(root, 0 as State)];
    while let Some((i, s)) = stack.pop() {
        let e = &tables[i][&s];
        let ch = &nice.nodes[i].children;
        match &e.back {
            Back::Leaf => {}
            Back::Intro(c) => stack.push((ch[0], *c)),
            Back::Forget(c, added) => {
                edges.extend(added);
                stack.push((ch[0], *c));
            }
            Back::Join(c1, c2) => {
                stack.push((ch[0], *c1));
                stack.push((ch[1], *c2));
            }
        }
    }
    let sol = SteinerSolution::from_edges(inst, edges, t0)?;
    Ok(SolveReport::new(sol, Algorithm::TreewidthDp, explored))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::gen_grid;
    use crate::graph::Graph;
    use crate::instance::EdgeWeighting;
    use crate::rational::Rational;
    use crate::solvers::oracle_edge;
    use crate::solvers::test_support::*;
    use crate::treewidth::fixtures::seven_vertex;
    use crate::treewidth::{exact_treewidth, heuristic_decomposition};
    use rand::{Rng, SeedableRng};

    fn r(n: i128) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn path_endpoints() {
        let g = Graph::path(6);
        let w = EdgeWeighting::new(&g, (1..=5).map(|i| Rational::new(i, 2)).collect()).unwrap();
        let inst = SteinerInstance::edge(g.clone(), [0, 5], w).unwrap();
        let td = TreeDecomposition::new((0..5).map(|i| vec![i, i + 1]).collect(), (0..4).map(|i| (i, i + 1)).collect());
        let rep = steiner_dp_treewidth(&inst, &td).unwrap();
        assert_eq!(rep.solution.weight, Rational::new(15, 2));
        assert_eq!(rep.solution.edges.len(), 5);
    }

    #[test]
    fn seven_vertex_graph() {
        let (g, td) = seven_vertex();
        let inst = SteinerInstance::unit_edge(g, [0, 6]).unwrap();
        let rep = steiner_dp_treewidth(&inst, &td).unwrap();
        rep.solution.validate(&inst).unwrap();
        assert_eq!(rep.solution.weight, oracle_edge(&inst).unwrap().solution.weight);
    }

    #[test]
    fn grid_corners() {
        let g = gen_grid(3, 3);
        let (w, td) = exact_treewidth(&g).unwrap();
        assert_eq!(w, 3);
        let inst = SteinerInstance::unit_edge(g, [0, 2, 6, 8]).unwrap();
        let rep = steiner_dp_treewidth(&inst, &td).unwrap();
        assert_eq!(rep.solution.weight, oracle_edge(&inst).unwrap().solution.weight);
        assert_eq!(rep.solution.weight, r(6));
    }

    #[test]
    fn matches_oracle_on_random() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        for _ in 0..80 {
            let n = rng.random_range(2..=10);
            let p = rng.random_range(0.1..0.5);
            let g = random_connected(&mut rng, n, p);
            let w = EdgeWeighting::new(&g, random_weights(&mut rng, g.m())).unwrap();
            let k = rng.random_range(1..=n);
            let inst = SteinerInstance::edge(g.clone(), random_terminals(&mut rng, n, k), w).unwrap();
            let rep = steiner_dp_treewidth(&inst, &heuristic_decomposition(&g)).unwrap();
            rep.solution.validate(&inst).unwrap();
            assert_eq!(rep.solution.weight, oracle_edge(&inst).unwrap().solution.weight);
        }
    }

    #[test]
    fn rejects_bad_input() {
        let (g, mut td) = seven_vertex();
        let inst = SteinerInstance::unit_edge(g.clone(), [0, 6]).unwrap();
        td.bags[4] = vec![6];
        assert!(matches!(steiner_dp_treewidth(&inst, &td), Err(Error::InvalidDecomposition(_))));
        let k = Graph::complete(12);
        let inst = SteinerInstance::unit_edge(k.clone(), [0, 1]).unwrap();
        assert!(matches!(
            steiner_dp_treewidth(&inst, &TreeDecomposition::trivial(&k)),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn disconnected_terminals() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let inst = SteinerInstance::unit_edge(g.clone(), [0, 3]);
        // instances may reject this up front; the DP must not invent a tree
        if let Ok(inst) = inst {
            assert!(steiner_dp_treewidth(&inst, &heuristic_decomposition(&g)).is_err());
        }
    }
}
