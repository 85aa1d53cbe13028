use crate::error::{Error, Result};
use crate::gadgets::{gen_grid, gen_netwall, gen_wall};
use crate::graph::{line_graph, subdivide, Graph};
use crate::patterns::{is_free_of, make_named, Pattern};

use super::{PairVerdict, SingleVerdict, WitnessClass};

/// Emits members of a hard class of every size, together with the
/// patterns they must avoid.
#[derive(Clone, Debug)]
pub struct WitnessGenerator {
    pub class: WitnessClass,
    pub forbidden: Vec<Pattern>,
}

/// Verdicts that name forbidden patterns and possibly a hard class.
pub trait Verdict {
    fn witness_class(&self) -> Option<WitnessClass>;
    fn pattern_names(&self) -> Vec<&str>;
}

impl Verdict for PairVerdict {
    fn witness_class(&self) -> Option<WitnessClass> {
        self.witness
    }

    fn pattern_names(&self) -> Vec<&str> {
        vec![&self.h1, &self.h2]
    }
}

impl Verdict for SingleVerdict {
    fn witness_class(&self) -> Option<WitnessClass> {
        self.hard_class()
    }

    fn pattern_names(&self) -> Vec<&str> {
        vec![&self.h]
    }
}

/// Generator for the hard class of an NP-complete verdict.
pub fn hardness_witness<V: Verdict>(verdict: &V) -> Result<WitnessGenerator> {
    let class = verdict.witness_class().ok_or(Error::NotNpComplete)?;
    let forbidden = verdict
        .pattern_names()
        .into_iter()
        .map(make_named)
        .collect::<Result<Vec<_>>>()?;
    Ok(WitnessGenerator { class, forbidden })
}

impl WitnessGenerator {
    /// A member of the class growing with `size >= 1`.
    pub fn generate(&self, size: usize) -> Graph {
        let n = size.max(1);
        match self.class {
            WitnessClass::Complete => Graph::complete(n),
            WitnessClass::CompleteBipartite => Graph::complete_bipartite(n, n),
            WitnessClass::SubdividedWalls(k) => subdivide(&gen_wall(n), k).0,
            WitnessClass::Walls => gen_wall(n),
            WitnessClass::NetWalls => gen_netwall(n),
            WitnessClass::ChordalBipartite => half_graph(n),
            WitnessClass::Split => split_cycle(n),
            WitnessClass::LineGraphs => line_graph(&grid_with_pendants(n + 1)).expect("grid has edges"),
        }
    }

    /// Whether `generate(size)` avoids every forbidden pattern.
    pub fn check(&self, size: usize) -> Result<bool> {
        let refs: Vec<&Pattern> = self.forbidden.iter().collect();
        is_free_of(&self.generate(size), &refs)
    }
}

/// `a_i ~ b_j` iff `j <= i`: bipartite with nested neighbourhoods, so no
/// induced cycle at all.
fn half_graph(n: usize) -> Graph {
    let es = (0..n).flat_map(|i| (0..=i).map(move |j| (i, n + j)));
    Graph::new(2 * n, es).unwrap()
}

/// Clique `0..n` and independent vertex `n + i` joined to `i` and `i + 1 mod n`.
fn split_cycle(n: usize) -> Graph {
    let mut es: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    for i in 0..n {
        es.push((i, n + i));
        es.push(((i + 1) % n, n + i));
    }
    Graph::new_dedup(2 * n, es).unwrap()
}

/// `n x n` grid with one pendant vertex at each corner.
fn grid_with_pendants(n: usize) -> Graph {
    let g = gen_grid(n, n);
    let corners = [0, n - 1, n * (n - 1), n * n - 1];
    let mut es = g.edges().to_vec();
    es.extend(corners.iter().enumerate().map(|(i, &c)| (c, n * n + i)));
    Graph::new_dedup(n * n + 4, es).unwrap()
}
