use std::fmt;

use crate::graph::Graph;

use super::{validate_decomposition, TreeDecomposition, Violation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NiceKind {
    Leaf,
    Introduce(usize),
    Forget(usize),
    Join,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiceNode {
    pub kind: NiceKind,
    /// Sorted.
    pub bag: Vec<usize>,
    pub children: Vec<usize>,
}

/// Rooted decomposition with empty leaf and root bags in which every node
/// is a leaf, introduces or forgets one vertex, or joins two children with
/// the same bag. Nodes are stored children first; the root is last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiceDecomposition {
    pub nodes: Vec<NiceNode>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NiceViolation {
    Underlying(Violation),
    /// Node index and what is wrong with it.
    Node(usize, &'static str),
}

impl fmt::Display for NiceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NiceViolation::Underlying(v) => write!(f, "{v}"),
            NiceViolation::Node(i, why) => write!(f, "node {i}: {why}"),
        }
    }
}

impl NiceDecomposition {
    /// Refines `td`, rooted at bag 0. The input must be a valid decomposition.
    pub fn from_decomposition(td: &TreeDecomposition) -> NiceDecomposition {
        let mut nice = NiceDecomposition { nodes: Vec::new() };
        if td.bags.is_empty() {
            nice.push(NiceKind::Leaf, Vec::new(), vec![]);
            return nice;
        }
        let adj = td.tree_adjacency();
        let top = nice.build(td, &adj, 0, usize::MAX);
        nice.morph(top, &[]);
        nice
    }

    pub fn root(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn width(&self) -> usize {
        self.nodes.iter().map(|x| x.bag.len()).max().unwrap_or(1).saturating_sub(1)
    }

    fn push(&mut self, kind: NiceKind, bag: Vec<usize>, children: Vec<usize>) -> usize {
        self.nodes.push(NiceNode { kind, bag, children });
        self.nodes.len() - 1
    }

    /// Forgets then introduces single vertices from node `from` up to `target`.
    fn morph(&mut self, mut from: usize, target: &[usize]) -> usize {
        let start = self.nodes[from].bag.clone();
        for &v in start.iter().filter(|v| target.binary_search(v).is_err()) {
            let bag: Vec<usize> = self.nodes[from].bag.iter().copied().filter(|&x| x != v).collect();
            from = self.push(NiceKind::Forget(v), bag, vec![from]);
        }
        for &v in target.iter().filter(|v| start.binary_search(v).is_err()) {
            let mut bag = self.nodes[from].bag.clone();
            let at = bag.binary_search(&v).unwrap_err();
            bag.insert(at, v);
            from = self.push(NiceKind::Introduce(v), bag, vec![from]);
        }
        from
    }

    /// Nice subtree for bag `t`; returns a node whose bag equals bag `t`.
    fn build(&mut self, td: &TreeDecomposition, adj: &[Vec<usize>], t: usize, parent: usize) -> usize {
        let bag = &td.bags[t];
        let mut tops = Vec::new();
        for &c in adj[t].iter().filter(|&&c| c != parent) {
            let sub = self.build(td, adj, c, t);
            tops.push(self.morph(sub, bag));
        }
        if tops.is_empty() {
            let leaf = self.push(NiceKind::Leaf, Vec::new(), vec![]);
            return self.morph(leaf, bag);
        }
        let mut acc = tops[0];
        for &other in &tops[1..] {
            acc = self.push(NiceKind::Join, bag.clone(), vec![acc, other]);
        }
        acc
    }

    /// Plain decomposition with the same bags and parent links.
    pub fn to_decomposition(&self) -> TreeDecomposition {
        let edges = self
            .nodes
            .iter()
            .enumerate()
            .flat_map(|(i, x)| x.children.iter().map(move |&c| (c, i)))
            .collect();
        TreeDecomposition::new(self.nodes.iter().map(|x| x.bag.clone()).collect(), edges)
    }

    pub fn validate(&self, g: &Graph) -> Result<(), NiceViolation> {
        validate_decomposition(g, &self.to_decomposition()).map_err(NiceViolation::Underlying)?;
        if !self.nodes[self.root()].bag.is_empty() {
            return Err(NiceViolation::Node(self.root(), "root bag is not empty"));
        }
        for (i, x) in self.nodes.iter().enumerate() {
            if x.children.iter().any(|&c| c >= i) {
                return Err(NiceViolation::Node(i, "child stored after parent"));
            }
            let child_bag = |k: usize| &self.nodes[x.children[k]].bag;
            let ok = match x.kind {
                NiceKind::Leaf => x.children.is_empty() && x.bag.is_empty(),
                NiceKind::Join => x.children.len() == 2 && *child_bag(0) == x.bag && *child_bag(1) == x.bag,
                NiceKind::Introduce(v) => {
                    x.children.len() == 1 && x.bag.binary_search(&v).is_ok() && {
                        let mut b = child_bag(0).clone();
                        b.push(v);
                        b.sort_unstable();
                        b == x.bag
                    }
                }
                NiceKind::Forget(v) => {
                    x.children.len() == 1 && child_bag(0).binary_search(&v).is_ok() && {
                        let mut b = x.bag.clone();
                        b.push(v);
                        b.sort_unstable();
                        b == *child_bag(0)
                    }
                }
            };
            if !ok {
                return Err(NiceViolation::Node(i, "node does not match its kind"));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solvers::test_support::random_connected;
    use crate::treewidth::fixtures::seven_vertex;
    use crate::treewidth::heuristic_decomposition;
    use rand::{Rng, SeedableRng};

    #[test]
    fn seven_vertex_refinement() {
        let (g, td) = seven_vertex();
        let nice = NiceDecomposition::from_decomposition(&td);
        assert_eq!(nice.validate(&g), Ok(()));
        assert_eq!(nice.width(), td.width());
        let joins = nice.nodes.iter().filter(|x| x.kind == NiceKind::Join).count();
        assert_eq!(joins, 1);
        // each vertex is forgotten exactly once
        for v in 0..7 {
            let f = nice.nodes.iter().filter(|x| x.kind == NiceKind::Forget(v)).count();
            assert_eq!(f, 1);
        }
    }

    #[test]
    fn random_refinements_are_nice() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(8);
        for _ in 0..40 {
            let n = rng.random_range(1..=12);
            let g = random_connected(&mut rng, n, 0.3);
            let td = heuristic_decomposition(&g);
            let nice = NiceDecomposition::from_decomposition(&td);
            assert_eq!(nice.validate(&g), Ok(()));
            assert_eq!(nice.width(), td.width());
            assert!(nice.nodes.len() <= 2 * (td.width() + 2) * td.bags.len() + 1);
        }
    }

    #[test]
    fn detects_bad_node() {
        let (g, td) = seven_vertex();
        let mut nice = NiceDecomposition::from_decomposition(&td);
        let i = nice.nodes.iter().position(|x| matches!(x.kind, NiceKind::Introduce(_))).unwrap();
        nice.nodes[i].kind = NiceKind::Join;
        assert!(matches!(nice.validate(&g), Err(NiceViolation::Node(j, _)) if j == i));
    }
}
