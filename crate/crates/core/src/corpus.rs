//! Seeded random graphs and instances for tests, examples and the CLI.
//!
//! Everything draws from a `ChaCha8Rng`, so a seed fixes the output on
//! every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{complement, Graph};
use crate::instance::{EdgeWeighting, SteinerInstance, VertexWeighting};
use crate::patterns::{is_free_of, Pattern, MAX_PATTERN_VERTICES};
use crate::rational::Rational;

/// Whole-graph restarts allowed by [`gen_random_in_class`].
pub const REJECTION_BUDGET: usize = 2_000;
/// Neighbourhood redraws per vertex before a restart.
const VERTEX_TRIES: usize = 40;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `G(n, p)`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut es = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                es.push((u, v));
            }
        }
    }
    Graph::new(n, es).unwrap()
}

/// A uniform random recursive tree plus `G(n, p)` edges; always connected.
pub fn random_connected(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut es: Vec<(usize, usize)> = (1..n).map(|v| (rng.random_range(0..v), v)).collect();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                es.push((u, v));
            }
        }
    }
    Graph::new_dedup(n, es).unwrap()
}

/// Connected cograph from a random cotree: leaves are merged by alternating
/// union and join, with the root a join.
pub fn random_cograph(rng: &mut impl Rng, n: usize) -> Graph {
    fn build(rng: &mut impl Rng, vs: &[usize], join: bool, es: &mut Vec<(usize, usize)>) {
        if vs.len() == 1 {
            return;
        }
        let parts = rng.random_range(2..=vs.len().min(3));
        let mut cuts: Vec<usize> = (1..vs.len()).collect();
        cuts.shuffle(rng);
        let mut cuts: Vec<usize> = cuts[..parts - 1].to_vec();
        cuts.sort_unstable();
        let mut groups = Vec::new();
        let mut start = 0;
        for c in cuts.into_iter().chain([vs.len()]) {
            groups.push(&vs[start..c]);
            start = c;
        }
        if join {
            for (i, a) in groups.iter().enumerate() {
                for b in &groups[i + 1..] {
                    for &u in a.iter() {
                        for &v in b.iter() {
                            es.push((u, v));
                        }
                    }
                }
            }
        }
        for grp in groups {
            build(rng, grp, !join, es);
        }
    }
    let mut vs: Vec<usize> = (0..n).collect();
    vs.shuffle(rng);
    let mut es = Vec::new();
    build(rng, &vs, true, &mut es);
    Graph::new(n, es).unwrap()
}

/// Connected graph on `n` vertices avoiding every pattern in `promise`.
///
/// Vertices are added one at a time with a random neighbourhood among the
/// earlier ones (at least one neighbour, edge probability drawn per
/// vertex); a neighbourhood that creates a forbidden pattern is redrawn,
/// and after too many redraws the whole graph restarts. Freeness is
/// rechecked on the result.
pub fn gen_random_in_class(promise: &[&Pattern], n: usize, seed: u64) -> Result<Graph> {
    if let Some(p) = promise.iter().find(|p| p.graph().n() > MAX_PATTERN_VERTICES) {
        return Err(Error::PatternTooLarge {
            size: p.graph().n(),
            limit: MAX_PATTERN_VERTICES,
        });
    }
    if n == 0 {
        return Err(Error::InvalidGraph("need at least one vertex".into()));
    }
    let mut rng = seeded(seed);
    'restart: for _ in 0..REJECTION_BUDGET {
        let mut es: Vec<(usize, usize)> = Vec::new();
        for v in 1..n {
            let mut placed = false;
            for _ in 0..VERTEX_TRIES {
                let p: f64 = rng.random_range(0.15..0.85);
                let mut nb: Vec<usize> = (0..v).filter(|_| rng.random_bool(p)).collect();
                if nb.is_empty() {
                    nb.push(rng.random_range(0..v));
                }
                let trial: Vec<(usize, usize)> = es.iter().copied().chain(nb.iter().map(|&u| (u, v))).collect();
                let g = Graph::new(v + 1, trial.iter().copied())?;
                if is_free_of(&g, promise)? {
                    es = trial;
                    placed = true;
                    break;
                }
            }
            if !placed {
                continue 'restart;
            }
        }
        let g = Graph::new(n, es)?;
        if g.is_connected() && is_free_of(&g, promise)? {
            return Ok(g);
        }
    }
    Err(Error::RejectionExhausted(REJECTION_BUDGET))
}

/// `p/q` with `p` in `1..=9`, `q` in `1..=4`.
pub fn random_weights(rng: &mut impl Rng, k: usize) -> Vec<Rational> {
    (0..k)
        .map(|_| Rational::new(rng.random_range(1..=9), rng.random_range(1..=4)))
        .collect()
}

/// `k` distinct vertices (`1 <= k <= n`), sorted.
pub fn random_terminals(rng: &mut impl Rng, n: usize, k: usize) -> Vec<usize> {
    let mut vs: Vec<usize> = (0..n).collect();
    vs.shuffle(rng);
    let mut ts = vs[..k.clamp(1, n)].to_vec();
    ts.sort_unstable();
    ts
}

pub fn random_edge_instance(rng: &mut impl Rng, g: Graph, k: usize) -> Result<SteinerInstance> {
    let w = EdgeWeighting::new(&g, random_weights(rng, g.m()))?;
    let ts = random_terminals(rng, g.n(), k);
    SteinerInstance::edge(g, ts, w)
}

pub fn random_vertex_instance(rng: &mut impl Rng, g: Graph, k: usize) -> Result<SteinerInstance> {
    let w = VertexWeighting::new(&g, random_weights(rng, g.n()))?;
    let ts = random_terminals(rng, g.n(), k);
    SteinerInstance::vertex(g, ts, w)
}

/// Whether the complement of `g` is disconnected (true for every connected
/// cograph on two or more vertices).
pub fn complement_disconnected(g: &Graph) -> bool {
    !complement(g).is_connected()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{is_cograph, make_named};

    #[test]
    fn cographs_are_p4_free() {
        let mut rng = seeded(3);
        for n in 1..=12 {
            let g = random_cograph(&mut rng, n);
            assert!(g.is_connected());
            assert!(is_cograph(&g));
            if n >= 2 {
                assert!(complement_disconnected(&g));
            }
        }
    }

    #[test]
    fn promise_is_kept() {
        let p4 = make_named("P4").unwrap();
        let g = gen_random_in_class(&[&p4], 8, 1).unwrap();
        assert!(g.is_connected() && is_cograph(&g));
        let p = make_named("P1+P4").unwrap();
        let g = gen_random_in_class(&[&p], 10, 2).unwrap();
        assert!(is_free_of(&g, &[&p]).unwrap());
        assert_eq!(g.n(), 10);
    }

    #[test]
    fn deterministic() {
        let a = random_connected(&mut seeded(7), 6, 0.3);
        let b = random_connected(&mut seeded(7), 6, 0.3);
        assert_eq!(a, b);
        let k2 = make_named("K2").unwrap();
        assert_eq!(gen_random_in_class(&[], 6, 4).unwrap(), gen_random_in_class(&[], 6, 4).unwrap());
        // K2-free connected graphs on 3 vertices do not exist
        assert_eq!(gen_random_in_class(&[&k2], 3, 0).unwrap_err(), Error::RejectionExhausted(REJECTION_BUDGET));
    }

    #[test]
    fn terminals_distinct() {
        let mut rng = seeded(0);
        for _ in 0..20 {
            let ts = random_terminals(&mut rng, 7, 4);
            assert_eq!(ts.len(), 4);
            assert!(ts.windows(2).all(|w| w[0] < w[1]));
        }
    }
}
