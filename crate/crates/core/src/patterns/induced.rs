//! Induced subgraph search by backtracking.

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::Pattern;

/// Largest pattern accepted by [`contains_induced`].
pub const MAX_PATTERN_VERTICES: usize = 10;

/// Searches `g` for an induced copy of `h.graph`.
///
/// Returns the witness `phi` with `phi[p]` the host vertex of pattern
/// vertex `p`, or `None` if `g` is `h`-free.
pub fn contains_induced(g: &Graph, h: &Pattern) -> Result<Option<Vec<usize>>> {
    let size = h.graph().n();
    if size > MAX_PATTERN_VERTICES {
        return Err(Error::PatternTooLarge {
            size,
            limit: MAX_PATTERN_VERTICES,
        });
    }
    Ok(find_induced_embedding(g, h.graph()))
}

/// True when `g` contains none of `patterns` as an induced subgraph.
pub fn is_free_of(g: &Graph, patterns: &[&Pattern]) -> Result<bool> {
    for h in patterns {
        if contains_induced(g, h)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Induced embedding search without the size budget.
///
/// Pattern vertices are matched in an order where each vertex after the
/// first of its component has an already-placed neighbour, so candidates
/// come from a neighbour list rather than the whole host.
pub fn find_induced_embedding(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if h.n() == 0 {
        return Some(Vec::new());
    }
    if h.n() > g.n() || h.m() > g.m() {
        return None;
    }
    let order = search_order(h);
    let mut anchor = vec![None; h.n()];
    let mut placed = vec![false; h.n()];
    for &p in &order {
        anchor[p] = h.neighbors(p).iter().copied().find(|&q| placed[q]);
        placed[p] = true;
    }
    let mut state = Search {
        g,
        h,
        order: &order,
        anchor: &anchor,
        phi: vec![usize::MAX; h.n()],
        used: vec![false; g.n()],
    };
    if state.extend(0) {
        Some(state.phi)
    } else {
        None
    }
}

/// Isomorphism test built on the induced search.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n()
        && g.m() == h.m()
        && g.degree_sequence() == h.degree_sequence()
        && find_induced_embedding(g, h).is_some()
}

fn search_order(h: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(h.n());
    let mut seen = vec![false; h.n()];
    let mut roots: Vec<usize> = (0..h.n()).collect();
    roots.sort_by_key(|&v| (std::cmp::Reverse(h.degree(v)), v));
    for r in roots {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        let start = order.len();
        order.push(r);
        let mut i = start;
        while i < order.len() {
            let u = order[i];
            i += 1;
            let mut next: Vec<usize> = h.neighbors(u).iter().copied().filter(|&v| !seen[v]).collect();
            next.sort_by_key(|&v| (std::cmp::Reverse(h.degree(v)), v));
            for v in next {
                seen[v] = true;
                order.push(v);
            }
        }
    }
    order
}

struct Search<'a> {
    g: &'a Graph,
    h: &'a Graph,
    order: &'a [usize],
    anchor: &'a [Option<usize>],
    phi: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let p = self.order[depth];
        let candidates: Vec<usize> = match self.anchor[p] {
            Some(q) => self.g.neighbors(self.phi[q]).to_vec(),
            None => (0..self.g.n()).collect(),
        };
        for x in candidates {
            if self.used[x] || self.g.degree(x) < self.h.degree(p) || !self.consistent(depth, p, x) {
                continue;
            }
            self.phi[p] = x;
            self.used[x] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[x] = false;
        }
        self.phi[p] = usize::MAX;
        false
    }

    fn consistent(&self, depth: usize, p: usize, x: usize) -> bool {
        self.order[..depth]
            .iter()
            .all(|&q| self.h.has_edge(p, q) == self.g.has_edge(x, self.phi[q]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::make_named;

    /// Independent check: every |V(h)|-subset, every bijection.
    pub(crate) fn naive_contains(g: &Graph, h: &Graph) -> bool {
        let k = h.n();
        if k > g.n() {
            return false;
        }
        let mut subset: Vec<usize> = (0..k).collect();
        loop {
            if permutations_match(g, h, &subset) {
                return true;
            }
            // next k-combination of 0..n
            let mut i = k;
            loop {
                if i == 0 {
                    return false;
                }
                i -= 1;
                if subset[i] < g.n() - k + i {
                    subset[i] += 1;
                    for j in i + 1..k {
                        subset[j] = subset[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }

    fn permutations_match(g: &Graph, h: &Graph, subset: &[usize]) -> bool {
        let mut perm = subset.to_vec();
        heap_permute(&mut perm, subset.len(), &mut |p| {
            (0..h.n()).all(|a| (a + 1..h.n()).all(|b| h.has_edge(a, b) == g.has_edge(p[a], p[b])))
        })
    }

    fn heap_permute(a: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if k <= 1 {
            return f(a);
        }
        for i in 0..k {
            if heap_permute(a, k - 1, f) {
                return true;
            }
            if k % 2 == 0 {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
        }
        false
    }

    fn check_witness(g: &Graph, h: &Graph, phi: &[usize]) {
        for a in 0..h.n() {
            for b in a + 1..h.n() {
                assert_ne!(phi[a], phi[b]);
                assert_eq!(h.has_edge(a, b), g.has_edge(phi[a], phi[b]));
            }
        }
    }

    #[test]
    fn cycle_contains_p4() {
        let c6 = Graph::cycle(6);
        let p4 = make_named("P4").unwrap();
        let phi = contains_induced(&c6, &p4).unwrap().unwrap();
        check_witness(&c6, p4.graph(), &phi);
    }

    #[test]
    fn budget_enforced() {
        let big = make_named("P11").unwrap();
        assert!(matches!(
            contains_induced(&Graph::path(20), &big),
            Err(Error::PatternTooLarge { size: 11, limit: 10 })
        ));
    }

    #[test]
    fn isomorphism_examples() {
        assert!(is_isomorphic(&Graph::path(4), &crate::graph::complement(&Graph::path(4))));
        assert!(is_isomorphic(&Graph::cycle(5), &crate::graph::complement(&Graph::cycle(5))));
        assert!(!is_isomorphic(&Graph::cycle(6), &crate::graph::disjoint_union(&Graph::cycle(3), &Graph::cycle(3))));
    }

    #[test]
    fn agrees_with_naive_enumeration() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let pats: Vec<Pattern> = ["P4", "claw", "C4", "2P2", "P1+P2", "K3", "C5", "net", "P5", "K1_4", "3P1"]
            .iter()
            .map(|s| make_named(s).unwrap())
            .collect();
        for _ in 0..150 {
            let n = rng.random_range(1..=9);
            let p = rng.random_range(0.2..0.8);
            let mut es = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_bool(p) {
                        es.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, es).unwrap();
            for h in &pats {
                let fast = contains_induced(&g, h).unwrap();
                assert_eq!(fast.is_some(), naive_contains(&g, h.graph()), "{:?} in {:?}", h.name(), g);
                if let Some(phi) = fast {
                    check_witness(&g, h.graph(), &phi);
                }
            }
        }
    }
}
