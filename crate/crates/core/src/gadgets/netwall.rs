//! Wye-net transformation and the wall-to-net-wall gadget.

use crate::error::{Error, Result};
use crate::graph::{canon, Graph};
use crate::instance::{EdgeWeighting, SteinerInstance};
use crate::rational::Rational;

use super::wall::gen_wall;
use super::{GadgetCertificate, GadgetKind, Relation};

/// Where each vertex and edge of the source graph went.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WyeNetMap {
    /// One id for vertices of degree other than 3; the three triangle
    /// vertices otherwise, ordered like the vertex's neighbours.
    pub vertices: Vec<Vec<usize>>,
    /// For each edge of the result: `Some(i)` if it is the image of source
    /// edge `i`, `None` for triangle edges.
    pub edges: Vec<Option<usize>>,
}

impl WyeNetMap {
    pub fn triangle_edge_count(&self) -> usize {
        self.edges.iter().filter(|e| e.is_none()).count()
    }
}

/// Replaces every degree-3 vertex `u` with neighbours `v1 < v2 < v3` by a
/// triangle `u1 u2 u3` with `u_i` adjacent to (the image of) `v_i`.
pub fn wye_net(g: &Graph) -> Result<(Graph, WyeNetMap)> {
    if g.max_degree() > 3 {
        return Err(Error::StructureMismatch(format!(
            "wye-net needs maximum degree 3, found {}",
            g.max_degree()
        )));
    }
    let mut vertices = Vec::with_capacity(g.n());
    let mut next = 0;
    for v in 0..g.n() {
        let k = if g.degree(v) == 3 { 3 } else { 1 };
        vertices.push((next..next + k).collect::<Vec<usize>>());
        next += k;
    }
    let facing = |u: usize, v: usize| -> usize {
        let copies = &vertices[u];
        if copies.len() == 1 {
            copies[0]
        } else {
            copies[g.neighbors(u).binary_search(&v).unwrap()]
        }
    };
    let mut tagged = Vec::new();
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        tagged.push((canon(facing(u, v), facing(v, u)), Some(i)));
    }
    for copies in vertices.iter().filter(|c| c.len() == 3) {
        for (a, b) in [(0, 1), (0, 2), (1, 2)] {
            tagged.push((canon(copies[a], copies[b]), None));
        }
    }
    tagged.sort_unstable();
    let graph = Graph::new(next, tagged.iter().map(|(e, _)| *e))?;
    let map = WyeNetMap {
        vertices,
        edges: tagged.into_iter().map(|(_, t)| t).collect(),
    };
    Ok((graph, map))
}

/// Net-wall of the given height: the wye-net of the wall of that height.
pub fn gen_netwall(height: usize) -> Graph {
    wye_net(&gen_wall(height)).expect("walls are subcubic").0
}

#[derive(Clone, Debug)]
pub struct NetWallReduction {
    pub instance: SteinerInstance,
    pub map: WyeNetMap,
    pub certificate: GadgetCertificate,
}

/// Applies the wye-net transformation to a wall instance.
///
/// Source edges keep their weights; triangle edges weigh
/// `eps' = s / (N' + 1)` with `s` the least source weight and `N'` the
/// number of triangle edges. A terminal maps to all of its copies. The
/// certificate claims `opt' = k + 2(k + 1) eps'` only when every source
/// weight is 1; otherwise the relation is recorded as unasserted.
pub fn reduce_wall_to_netwall(inst: &SteinerInstance) -> Result<NetWallReduction> {
    let w = inst.edge_weights()?;
    let g = inst.graph();
    if g.m() == 0 {
        return Err(Error::Edgeless);
    }
    let (net, map) = wye_net(g)?;
    let s = *w.as_slice().iter().min().unwrap();
    let triangles = map.triangle_edge_count();
    let eps = s / Rational::from(triangles + 1);
    let weights: Vec<Rational> = map
        .edges
        .iter()
        .map(|e| match e {
            Some(i) => w.get(*i),
            None => eps,
        })
        .collect();
    let terminals: Vec<usize> = inst
        .terminals()
        .iter()
        .flat_map(|&t| map.vertices[t].iter().copied())
        .collect();
    let unit = w.as_slice().iter().all(|&x| x == Rational::ONE);
    let two = Rational::from_integer(2);
    let relation = if unit {
        Relation::Affine {
            a: Rational::ONE + two * eps,
            b: two * eps,
        }
    } else {
        Relation::Unasserted("source weights are not all 1".into())
    };
    let threshold = match (inst.threshold(), unit) {
        (Some(k), true) => Some(k + two * (k + Rational::ONE) * eps),
        _ => None,
    };
    let weighting = EdgeWeighting::new(&net, weights)?;
    let instance = SteinerInstance::edge(net, terminals, weighting)?.with_threshold(threshold)?;
    let certificate = GadgetCertificate {
        gadget: GadgetKind::NetWall,
        params: vec![
            ("epsilon".into(), eps.to_string()),
            ("s".into(), s.to_string()),
            ("new_edges".into(), triangles.to_string()),
        ],
        relation,
        forward_map: "wall tree on k+1 vertices -> image edges plus two triangle edges per tree vertex".into(),
    };
    Ok(NetWallReduction {
        instance,
        map,
        certificate,
    })
}
