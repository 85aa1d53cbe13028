//! Hardness-reduction gadgets and their optimum certificates.

pub mod grid;
pub mod netwall;
pub mod reductions;
pub mod verify;
pub mod wall;

pub use grid::{gen_grid, grid_dims, grid_id};
pub use netwall::{gen_netwall, reduce_wall_to_netwall, wye_net, NetWallReduction, WyeNetMap};
pub use reductions::{
    reduce_complete, reduce_complete_bipartite, reduce_line_graph, reduce_subdivision, LineReduction, Reduction,
};
pub use verify::{verify_certificate, CertificateVerdict};
pub use wall::{gen_wall, reduce_grid_to_wall, wall_from_grid, SplitVertex, WallEdge, WallMap, WallReduction, WALL_PADDING};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GadgetKind {
    Subdivision,
    Complete,
    CompleteBipartite,
    Wall,
    NetWall,
    LineGraph,
}

impl GadgetKind {
    pub const ALL: [GadgetKind; 6] = [
        GadgetKind::Subdivision,
        GadgetKind::Complete,
        GadgetKind::CompleteBipartite,
        GadgetKind::Wall,
        GadgetKind::NetWall,
        GadgetKind::LineGraph,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            GadgetKind::Subdivision => "subdivision",
            GadgetKind::Complete => "complete",
            GadgetKind::CompleteBipartite => "complete-bipartite",
            GadgetKind::Wall => "wall",
            GadgetKind::NetWall => "net-wall",
            GadgetKind::LineGraph => "line",
        }
    }
}

impl FromStr for GadgetKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<GadgetKind> {
        GadgetKind::ALL
            .into_iter()
            .find(|g| g.as_str() == s)
            .ok_or_else(|| Error::Other(format!("unknown gadget `{s}`")))
    }
}

/// Claimed relation between the optimum of the original instance (`opt`)
/// and of the reduced one (`opt'`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Relation {
    /// `opt' = a * opt + b`.
    Affine { a: Rational, b: Rational },
    /// The construction ran but no exact relation is claimed.
    Unasserted(String),
}

impl Relation {
    pub fn predict(&self, opt: Rational) -> Option<Rational> {
        match self {
            Relation::Affine { a, b } => Some(*a * opt + *b),
            Relation::Unasserted(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetCertificate {
    pub gadget: GadgetKind,
    /// Ordered `(name, value)` pairs; values are integers or `p/q`.
    pub params: Vec<(String, String)>,
    pub relation: Relation,
    pub forward_map: String,
}

impl GadgetCertificate {
    pub fn param(&self, name: &str) -> Option<&str> {
        self.params.iter().find(|(k, _)| k == name).map(|(_, v)| v.as_str())
    }

    /// Line-oriented text form, parsed back by [`FromStr`].
    pub fn render(&self) -> String {
        let mut out = format!("CERT {}\n", self.gadget.as_str());
        for (k, v) in &self.params {
            out.push_str(&format!("PARAM {k} {v}\n"));
        }
        match &self.relation {
            Relation::Affine { a, b } => out.push_str(&format!("RELATION affine {a} {b}\n")),
            Relation::Unasserted(why) => out.push_str(&format!("RELATION unasserted {why}\n")),
        }
        out.push_str(&format!("MAP {}\nEND\n", self.forward_map));
        out
    }
}

impl fmt::Display for GadgetCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl FromStr for GadgetCertificate {
    type Err = Error;

    fn from_str(text: &str) -> Result<GadgetCertificate> {
        let mut gadget = None;
        let mut params = Vec::new();
        let mut relation = None;
        let mut forward_map = String::new();
        let mut ended = false;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let err = |msg: &str| Error::Parse {
                line: i + 1,
                msg: msg.to_string(),
            };
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if ended {
                return Err(err("content after END"));
            }
            let (key, rest) = line.split_once(' ').unwrap_or((line, ""));
            match key {
                "CERT" => gadget = Some(rest.trim().parse::<GadgetKind>().map_err(|e| err(&e.to_string()))?),
                "PARAM" => {
                    let (k, v) = rest.trim().split_once(' ').ok_or_else(|| err("PARAM needs a name and a value"))?;
                    params.push((k.to_string(), v.trim().to_string()));
                }
                "RELATION" => {
                    let (kind, body) = rest.trim().split_once(' ').unwrap_or((rest.trim(), ""));
                    relation = Some(match kind {
                        "affine" => {
                            let parts: Vec<&str> = body.split_whitespace().collect();
                            if parts.len() != 2 {
                                return Err(err("affine relation needs `a b`"));
                            }
                            let a: Rational = parts[0].parse().map_err(|e: Error| err(&e.to_string()))?;
                            let b: Rational = parts[1].parse().map_err(|e: Error| err(&e.to_string()))?;
                            Relation::Affine { a, b }
                        }
                        "unasserted" => Relation::Unasserted(body.trim().to_string()),
                        other => return Err(err(&format!("unknown relation kind `{other}`"))),
                    });
                }
                "MAP" => forward_map = rest.trim().to_string(),
                "END" => ended = true,
                other => return Err(err(&format!("unknown record `{other}`"))),
            }
        }
        let missing = |what: &str| Error::Parse {
            line: text.lines().count(),
            msg: format!("certificate lacks {what}"),
        };
        if !ended {
            return Err(missing("END"));
        }
        Ok(GadgetCertificate {
            gadget: gadget.ok_or_else(|| missing("CERT"))?,
            params,
            relation: relation.ok_or_else(|| missing("RELATION"))?,
            forward_map,
        })
    }
}
