//! Walls built from grids by splitting vertices, and the grid-to-wall gadget.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::instance::{EdgeWeighting, SteinerInstance};
use crate::rational::Rational;

use super::grid::{gen_grid, grid_dims, grid_id};
use super::{GadgetCertificate, GadgetKind, Relation};

/// Images of one grid vertex `v^{i,j}` in the wall.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitVertex {
    pub exceptional: bool,
    pub up: Option<usize>,
    pub down: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WallEdge {
    /// Joins the two halves of a split grid vertex (grid vertex id).
    New(usize),
    /// Image of a grid edge (index into the grid's edge list).
    Original(usize),
}

/// Correspondence between an `n x m` grid and the wall built from it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WallMap {
    pub rows: usize,
    pub cols: usize,
    /// Indexed by grid vertex id.
    pub vertices: Vec<SplitVertex>,
    /// Indexed like the wall's edge list.
    pub edges: Vec<WallEdge>,
}

impl WallMap {
    pub fn vertex(&self, i: usize, j: usize) -> SplitVertex {
        self.vertices[grid_id(self.cols, i, j)]
    }

    pub fn new_edge_count(&self) -> usize {
        self.edges.iter().filter(|e| matches!(e, WallEdge::New(_))).count()
    }

    /// Wall vertices coming from the outer row/column ring of the grid.
    pub fn outer_ring(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for i in 1..=self.rows {
            for j in 1..=self.cols {
                if i == 1 || j == 1 || i == self.rows || j == self.cols {
                    let s = self.vertex(i, j);
                    out.extend(s.up);
                    out.extend(s.down);
                }
            }
        }
        out.sort_unstable();
        out
    }
}

fn is_exceptional(n: usize, m: usize, i: usize, j: usize) -> bool {
    (i == n && j == 1) || (n % 2 == 1 && i == 1 && j == m) || (n % 2 == 0 && i == 1 && j == 1)
}

/// Wall obtained from the `n x m` grid.
///
/// Every non-exceptional `v^{i,j}` becomes `up - down`. Vertical edges run
/// `down^{i,j} - up^{i+1,j}`; row `i` uses `down^{i,j} - up^{i,j+1}` when
/// `i` and `n` have opposite parity and `up^{i,j} - down^{i,j+1}` otherwise.
pub fn wall_from_grid(n: usize, m: usize) -> (Graph, WallMap) {
    assert!(n >= 2 && m >= 2, "wall needs at least a 2x2 grid");
    let mut vertices = Vec::with_capacity(n * m);
    let mut next = 0;
    for i in 1..=n {
        for j in 1..=m {
            let exceptional = is_exceptional(n, m, i, j);
            let (mut up, mut down) = (None, None);
            if !exceptional || (i == n && j == 1) {
                up = Some(next);
                next += 1;
            }
            if !exceptional || i == 1 {
                down = Some(next);
                next += 1;
            }
            vertices.push(SplitVertex { exceptional, up, down });
        }
    }
    let grid = gen_grid(n, m);
    let at = |i: usize, j: usize| vertices[grid_id(m, i, j)];
    let mut tagged: Vec<(Edge, WallEdge)> = Vec::new();
    for i in 1..=n {
        for j in 1..=m {
            let s = at(i, j);
            if let (Some(u), Some(d)) = (s.up, s.down) {
                tagged.push((crate::graph::canon(u, d), WallEdge::New(grid_id(m, i, j))));
            }
        }
    }
    for i in 1..n {
        for j in 1..=m {
            let a = at(i, j).down.expect("down copy for vertical edge");
            let b = at(i + 1, j).up.expect("up copy for vertical edge");
            let gi = grid.edge_index(grid_id(m, i, j), grid_id(m, i + 1, j)).unwrap();
            tagged.push((crate::graph::canon(a, b), WallEdge::Original(gi)));
        }
    }
    for i in 1..=n {
        let down_to_up = (i % 2 == 1) != (n % 2 == 1);
        for j in 1..m {
            let (a, b) = if down_to_up {
                (at(i, j).down, at(i, j + 1).up)
            } else {
                (at(i, j).up, at(i, j + 1).down)
            };
            let (a, b) = (a.expect("horizontal endpoint"), b.expect("horizontal endpoint"));
            let gi = grid.edge_index(grid_id(m, i, j), grid_id(m, i, j + 1)).unwrap();
            tagged.push((crate::graph::canon(a, b), WallEdge::Original(gi)));
        }
    }
    tagged.sort_unstable_by_key(|(e, _)| *e);
    let graph = Graph::new(next, tagged.iter().map(|(e, _)| *e)).expect("wall is simple");
    let map = WallMap {
        rows: n,
        cols: m,
        vertices,
        edges: tagged.into_iter().map(|(_, t)| t).collect(),
    };
    (graph, map)
}

/// Wall of the given height: the one built from the `(h+1) x (h+1)` grid.
pub fn gen_wall(height: usize) -> Graph {
    wall_from_grid(height + 1, height + 1).0
}

/// Rows/columns added on every side before splitting.
pub const WALL_PADDING: usize = 2;

/// Output of [`reduce_grid_to_wall`].
#[derive(Clone, Debug)]
pub struct WallReduction {
    pub instance: SteinerInstance,
    pub map: WallMap,
    pub certificate: GadgetCertificate,
}

/// Pads an unweighted grid instance by [`WALL_PADDING`] on every side and
/// turns it into a wall instance: original edges weigh 1, new edges weigh
/// `eps = 1 / (N + 1)` with `N` the number of new edges, and each terminal
/// `v^{i,j}` becomes both `up^{i,j}` and `down^{i,j}`.
pub fn reduce_grid_to_wall(inst: &SteinerInstance) -> Result<WallReduction> {
    let (n, m) = grid_dims(inst.graph())
        .ok_or_else(|| Error::StructureMismatch("input graph is not a canonically labelled grid".into()))?;
    let w = inst.edge_weights()?;
    if w.as_slice().iter().any(|&x| x != Rational::ONE) {
        return Err(Error::NonUniformWeights);
    }
    let (pn, pm) = (n + 2 * WALL_PADDING, m + 2 * WALL_PADDING);
    let (wall, map) = wall_from_grid(pn, pm);
    let new_edges = map.new_edge_count();
    let eps = Rational::new(1, new_edges as i128 + 1);
    let weights: Vec<Rational> = map
        .edges
        .iter()
        .map(|e| match e {
            WallEdge::New(_) => eps,
            WallEdge::Original(_) => Rational::ONE,
        })
        .collect();
    let mut terminals = Vec::new();
    for &t in inst.terminals() {
        let (i, j) = (t / m + 1 + WALL_PADDING, t % m + 1 + WALL_PADDING);
        // the two outer rows/columns of the padded grid hold no terminals
        assert!(i > 2 && j > 2 && i + 2 <= pn && j + 2 <= pm, "padding left a terminal on the boundary");
        let s = map.vertex(i, j);
        match (s.up, s.down) {
            (Some(u), Some(d)) => terminals.extend([u, d]),
            _ => unreachable!("interior grid vertices are never exceptional"),
        }
    }
    let weighting = EdgeWeighting::new(&wall, weights)?;
    let threshold = inst.threshold().map(|k| k + (k + Rational::ONE) * eps);
    let instance = SteinerInstance::edge(wall, terminals, weighting)?.with_threshold(threshold)?;
    let certificate = GadgetCertificate {
        gadget: GadgetKind::Wall,
        params: vec![
            ("epsilon".into(), eps.to_string()),
            ("padding".into(), WALL_PADDING.to_string()),
            ("new_edges".into(), new_edges.to_string()),
            ("grid".into(), format!("{n}x{m}")),
        ],
        relation: Relation::Affine {
            a: Rational::ONE + eps,
            b: eps,
        },
        forward_map: "grid tree with k edges -> its original edges plus the new edge of each of its k+1 vertices".into(),
    };
    Ok(WallReduction {
        instance,
        map,
        certificate,
    })
}
