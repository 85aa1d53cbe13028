//! Subdivision, completion and line-graph gadgets.

use crate::error::{Error, Result};
use crate::graph::{line_graph, subdivide, Graph};
use crate::instance::{EdgeWeighting, SteinerInstance, VertexWeighting};
use crate::rational::Rational;

use super::{GadgetCertificate, GadgetKind, Relation};

#[derive(Clone, Debug)]
pub struct Reduction {
    pub instance: SteinerInstance,
    pub certificate: GadgetCertificate,
}

fn identity() -> Relation {
    Relation::Affine {
        a: Rational::ONE,
        b: Rational::ZERO,
    }
}

/// Replaces each edge `e` by a path of `r + 1` edges of weight `w(e)/(r+1)`.
pub fn reduce_subdivision(inst: &SteinerInstance, r: usize) -> Result<Reduction> {
    let w = inst.edge_weights()?;
    let g = inst.graph();
    let (sub, paths) = subdivide(g, r);
    let parts = Rational::from(r + 1);
    let mut weights = vec![Rational::ZERO; sub.m()];
    for (i, p) in paths.iter().enumerate() {
        let piece = w.get(i) / parts;
        for step in p.windows(2) {
            weights[sub.edge_index(step[0], step[1]).unwrap()] = piece;
        }
    }
    let weighting = EdgeWeighting::new(&sub, weights)?;
    let instance = SteinerInstance::edge(sub, inst.terminals().iter().copied(), weighting)?
        .with_threshold(inst.threshold())?;
    Ok(Reduction {
        instance,
        certificate: GadgetCertificate {
            gadget: GadgetKind::Subdivision,
            params: vec![("r".into(), r.to_string())],
            relation: identity(),
            forward_map: "edge e -> its path P_e".into(),
        },
    })
}

/// Adds every missing edge with weight `M + 1`, `M` the total weight.
pub fn reduce_complete(inst: &SteinerInstance) -> Result<Reduction> {
    let w = inst.edge_weights()?;
    let g = inst.graph();
    let big_m = w.total();
    let heavy = big_m + Rational::ONE;
    let kn = Graph::complete(g.n());
    let weights = kn
        .edges()
        .iter()
        .map(|&(u, v)| g.edge_index(u, v).map_or(heavy, |i| w.get(i)))
        .collect();
    let weighting = EdgeWeighting::new(&kn, weights)?;
    let instance = SteinerInstance::edge(kn, inst.terminals().iter().copied(), weighting)?
        .with_threshold(inst.threshold())?;
    Ok(Reduction {
        instance,
        certificate: GadgetCertificate {
            gadget: GadgetKind::Complete,
            params: vec![("M".into(), big_m.to_string())],
            relation: identity(),
            forward_map: "identity on edges".into(),
        },
    })
}

/// Checks that `side` 2-colours `g`.
pub fn check_bipartition(g: &Graph, side: &[bool]) -> Result<()> {
    if side.len() != g.n() {
        return Err(Error::InvalidBipartition(format!(
            "{} labels for {} vertices",
            side.len(),
            g.n()
        )));
    }
    if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| side[u] == side[v]) {
        return Err(Error::InvalidBipartition(format!("edge {{{u}, {v}}} inside one side")));
    }
    Ok(())
}

/// Adds every missing cross edge of the bipartition with weight `M + 1`.
/// `side[v]` is true for vertices of the second side. A threshold above
/// `M` is lowered to `M`.
pub fn reduce_complete_bipartite(inst: &SteinerInstance, side: &[bool]) -> Result<Reduction> {
    let w = inst.edge_weights()?;
    let g = inst.graph();
    check_bipartition(g, side)?;
    let big_m = w.total();
    let heavy = big_m + Rational::ONE;
    let mut es = Vec::new();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if side[u] != side[v] {
                es.push((u, v));
            }
        }
    }
    let kst = Graph::new(g.n(), es)?;
    let weights = kst
        .edges()
        .iter()
        .map(|&(u, v)| g.edge_index(u, v).map_or(heavy, |i| w.get(i)))
        .collect();
    let weighting = EdgeWeighting::new(&kst, weights)?;
    let threshold = inst.threshold().map(|k| k.min(big_m));
    let instance = SteinerInstance::edge(kst, inst.terminals().iter().copied(), weighting)?.with_threshold(threshold)?;
    let left = side.iter().filter(|&&b| !b).count();
    Ok(Reduction {
        instance,
        certificate: GadgetCertificate {
            gadget: GadgetKind::CompleteBipartite,
            params: vec![
                ("M".into(), big_m.to_string()),
                ("sides".into(), format!("{left}+{}", g.n() - left)),
            ],
            relation: identity(),
            forward_map: "identity on edges".into(),
        },
    })
}

#[derive(Clone, Debug)]
pub struct LineReduction {
    pub instance: SteinerInstance,
    pub certificate: GadgetCertificate,
    /// `G` plus one pendant per terminal; vertex `i` of the line graph is
    /// `augmented.edges()[i]`.
    pub augmented: Graph,
    /// Pendant vertex of the `i`-th terminal.
    pub pendants: Vec<usize>,
}

/// Unweighted edge instance on `G` to unweighted vertex instance on the
/// line graph of `G` plus a pendant per terminal; the new terminals are the
/// pendant edges.
pub fn reduce_line_graph(inst: &SteinerInstance) -> Result<LineReduction> {
    let w = inst.edge_weights()?;
    if w.as_slice().iter().any(|&x| x != Rational::ONE) {
        return Err(Error::NonUniformWeights);
    }
    let g = inst.graph();
    let n = g.n();
    let pendants: Vec<usize> = (n..n + inst.terminals().len()).collect();
    let mut es = g.edges().to_vec();
    es.extend(inst.terminals().iter().zip(&pendants).map(|(&t, &p)| (t, p)));
    let augmented = Graph::new(n + pendants.len(), es)?;
    let line = line_graph(&augmented)?;
    let terminals: Vec<usize> = inst
        .terminals()
        .iter()
        .zip(&pendants)
        .map(|(&t, &p)| augmented.edge_index(t, p).unwrap())
        .collect();
    let u = Rational::from(terminals.len());
    let weighting = VertexWeighting::unit(&line);
    let instance =
        SteinerInstance::vertex(line, terminals, weighting)?.with_threshold(inst.threshold().map(|k| k + u))?;
    Ok(LineReduction {
        instance,
        certificate: GadgetCertificate {
            gadget: GadgetKind::LineGraph,
            params: vec![("terminals".into(), u.to_string())],
            relation: Relation::Affine { a: Rational::ONE, b: u },
            forward_map: "tree T -> edges of T plus the pendant edges, read as line-graph vertices".into(),
        },
        augmented,
        pendants,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::is_isomorphic;

    fn r(n: i128) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn subdivision_of_single_edge() {
        let g = Graph::path(2);
        let inst = SteinerInstance::edge(g.clone(), [0, 1], EdgeWeighting::uniform(&g, r(3))).unwrap();
        let red = reduce_subdivision(&inst, 2).unwrap();
        assert!(is_isomorphic(red.instance.graph(), &Graph::path(4)));
        assert!(red.instance.edge_weights().unwrap().as_slice().iter().all(|&x| x == r(1)));
        let same = reduce_subdivision(&inst, 0).unwrap();
        assert_eq!(same.instance, inst);
    }

    #[test]
    fn completion_of_p3() {
        let inst = SteinerInstance::unit_edge(Graph::path(3), [0, 2]).unwrap();
        let red = reduce_complete(&inst).unwrap();
        let w = red.instance.edge_weights().unwrap();
        assert_eq!(red.instance.weight_of_edge(0, 2), Some(r(3)));
        assert_eq!(red.certificate.param("M"), Some("2"));
        let mut distinct: Vec<Rational> = w.as_slice().to_vec();
        distinct.sort();
        distinct.dedup();
        assert_eq!(distinct.len(), 2);
    }

    #[test]
    fn completion_keeps_complete_graphs() {
        let inst = SteinerInstance::unit_edge(Graph::complete(4), [0, 3]).unwrap();
        assert_eq!(reduce_complete(&inst).unwrap().instance, inst);
    }

    #[test]
    fn bipartite_completion() {
        let c4 = Graph::cycle(4);
        let side = vec![false, true, false, true];
        let inst = SteinerInstance::unit_edge(c4, [0, 1]).unwrap();
        assert_eq!(reduce_complete_bipartite(&inst, &side).unwrap().instance, inst);

        let (k3s, _) = subdivide(&Graph::complete(3), 1);
        let side = k3s.bipartition().unwrap();
        let inst = SteinerInstance::unit_edge(k3s, [0, 1]).unwrap();
        let red = reduce_complete_bipartite(&inst, &side).unwrap();
        assert!(is_isomorphic(red.instance.graph(), &Graph::complete_bipartite(3, 3)));

        let bad = vec![false, false, true, true];
        let p = SteinerInstance::unit_edge(Graph::path(4), [0]).unwrap();
        assert!(matches!(reduce_complete_bipartite(&p, &bad), Err(Error::InvalidBipartition(_))));
    }

    #[test]
    fn bipartite_threshold_clamped() {
        let p = SteinerInstance::unit_edge(Graph::path(4), [0, 3])
            .unwrap()
            .with_threshold(Some(r(10)))
            .unwrap();
        let side = p.graph().bipartition().unwrap();
        let red = reduce_complete_bipartite(&p, &side).unwrap();
        assert_eq!(red.instance.threshold(), Some(r(3)));
    }

    #[test]
    fn line_gadget_on_k2() {
        let inst = SteinerInstance::unit_edge(Graph::path(2), [0, 1]).unwrap();
        let red = reduce_line_graph(&inst).unwrap();
        assert!(is_isomorphic(&red.augmented, &Graph::path(4)));
        assert!(is_isomorphic(red.instance.graph(), &Graph::path(3)));
        assert_eq!(red.instance.terminals().len(), 2);
        assert_eq!(red.certificate.relation, Relation::Affine { a: r(1), b: r(2) });
        // line graphs are claw-free
        let claw = crate::patterns::make_named("claw").unwrap();
        assert!(crate::patterns::contains_induced(red.instance.graph(), &claw).unwrap().is_none());
    }

    #[test]
    fn line_gadget_rejects_weights() {
        let g = Graph::path(3);
        let inst = SteinerInstance::edge(g.clone(), [0, 2], EdgeWeighting::uniform(&g, r(2))).unwrap();
        assert_eq!(reduce_line_graph(&inst).unwrap_err(), Error::NonUniformWeights);
    }
}
