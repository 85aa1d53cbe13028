//! Named small graphs, the pattern DSL and H-freeness tests.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! pattern := term ('+' term)*
//! term    := [count] base
//! base    := 'K'int | 'P'int | 'C'int | 'K'int'_'int | 'S'int'_'int'_'int
//!          | 'claw' | 'net' | 'grid'int'x'int
//! ```
//!
//! A multiplier binds to its own term only: `2P1+P4` is `P1 + P1 + P4`.

mod induced;
mod kind;

pub use induced::{contains_induced, find_induced_embedding, is_free_of, is_isomorphic, MAX_PATTERN_VERTICES};
pub use kind::{classify_pattern, is_cograph, is_split_graph, spanning_complete_bipartite, PatternKind};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gadgets::grid::gen_grid;
use crate::graph::{disjoint_union, Graph};

/// A forbidden induced subgraph together with its DSL name.
#[derive(Clone, PartialEq, Eq)]
pub struct Pattern {
    graph: Graph,
    name: String,
}

impl Pattern {
    pub fn new(graph: Graph, name: impl Into<String>) -> Result<Pattern> {
        if graph.n() == 0 {
            return Err(Error::InvalidPattern {
                text: name.into(),
                reason: "pattern needs at least one vertex".into(),
            });
        }
        Ok(Pattern {
            graph,
            name: name.into(),
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Same graph up to isomorphism (names are ignored).
    pub fn is_isomorphic_to(&self, other: &Pattern) -> bool {
        is_isomorphic(&self.graph, &other.graph)
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pattern({}, {:?})", self.name, self.graph)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

impl FromStr for Pattern {
    type Err = Error;
    fn from_str(s: &str) -> Result<Pattern> {
        make_named(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Base {
    Complete(usize),
    Path(usize),
    Cycle(usize),
    Biclique(usize, usize),
    Spider(usize, usize, usize),
    Claw,
    Net,
    Grid(usize, usize),
}

impl Base {
    fn graph(self) -> Graph {
        match self {
            Base::Complete(r) => Graph::complete(r),
            Base::Path(r) => Graph::path(r),
            Base::Cycle(r) => Graph::cycle(r),
            Base::Biclique(s, t) => Graph::complete_bipartite(s, t),
            Base::Spider(h, i, j) => subdivided_claw(h, i, j),
            Base::Claw => Graph::complete_bipartite(1, 3),
            Base::Net => net(),
            Base::Grid(n, m) => gen_grid(n, m),
        }
    }

    fn name(self) -> String {
        match self {
            Base::Complete(r) => format!("K{r}"),
            Base::Path(r) => format!("P{r}"),
            Base::Cycle(r) => format!("C{r}"),
            Base::Biclique(s, t) => format!("K{s}_{t}"),
            Base::Spider(h, i, j) => format!("S{h}_{i}_{j}"),
            Base::Claw => "claw".into(),
            Base::Net => "net".into(),
            Base::Grid(n, m) => format!("grid{n}x{m}"),
        }
    }
}

/// Triangle `0,1,2` with pendant `3 + i` at vertex `i`.
pub fn net() -> Graph {
    Graph::new(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)]).unwrap()
}

/// `S_{h,i,j}`: centre `0` and three arms of `h`, `i`, `j` edges.
pub fn subdivided_claw(h: usize, i: usize, j: usize) -> Graph {
    let mut es = Vec::new();
    let mut next = 1;
    for len in [h, i, j] {
        let mut prev = 0;
        for _ in 0..len {
            es.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::new(next, es).unwrap()
}

/// Parses a pattern in the DSL.
pub fn make_named(text: &str) -> Result<Pattern> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let err = |reason: &str| Error::InvalidPattern {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    if compact.is_empty() {
        return Err(err("empty pattern"));
    }
    let mut graph: Option<Graph> = None;
    let mut names = Vec::new();
    for term in compact.split('+') {
        let digits = term.chars().take_while(char::is_ascii_digit).count();
        let (count, base_txt) = term.split_at(digits);
        let count: usize = if count.is_empty() {
            1
        } else {
            count.parse().map_err(|_| err("bad multiplier"))?
        };
        if count == 0 {
            return Err(err("multiplier must be positive"));
        }
        let base = parse_base(base_txt).map_err(|r| err(&r))?;
        let g = base.graph();
        for _ in 0..count {
            graph = Some(match graph {
                None => g.clone(),
                Some(acc) => disjoint_union(&acc, &g),
            });
        }
        names.push(if count > 1 {
            format!("{count}{}", base.name())
        } else {
            base.name()
        });
    }
    Pattern::new(graph.unwrap(), names.join("+"))
}

fn parse_base(t: &str) -> std::result::Result<Base, String> {
    let num = |s: &str| -> std::result::Result<usize, String> {
        if s.is_empty() || !s.chars().all(|c| c.is_ascii_digit()) {
            Err(format!("expected a number, found `{s}`"))
        } else {
            s.parse().map_err(|_| format!("number `{s}` out of range"))
        }
    };
    if t == "claw" {
        return Ok(Base::Claw);
    }
    if t == "net" {
        return Ok(Base::Net);
    }
    if let Some(rest) = t.strip_prefix("grid") {
        let (a, b) = rest.split_once('x').ok_or("grid needs `grid<n>x<m>`")?;
        let (n, m) = (num(a)?, num(b)?);
        if n == 0 || m == 0 {
            return Err("grid dimensions must be positive".into());
        }
        return Ok(Base::Grid(n, m));
    }
    let mut chars = t.chars();
    let head = chars.next().ok_or("empty term")?;
    let rest = chars.as_str();
    match head {
        'K' => match rest.split_once('_') {
            Some((s, u)) => {
                let (s, u) = (num(s)?, num(u)?);
                if s == 0 || u == 0 {
                    return Err("complete bipartite sides must be positive".into());
                }
                Ok(Base::Biclique(s, u))
            }
            None => {
                let r = num(rest)?;
                if r == 0 {
                    return Err("K0 has no vertices".into());
                }
                Ok(Base::Complete(r))
            }
        },
        'P' => {
            let r = num(rest)?;
            if r == 0 {
                return Err("P0 has no vertices".into());
            }
            Ok(Base::Path(r))
        }
        'C' => {
            let r = num(rest)?;
            if r < 3 {
                return Err(format!("C{r}: cycles need at least 3 vertices"));
            }
            Ok(Base::Cycle(r))
        }
        'S' => {
            let parts: Vec<&str> = rest.split('_').collect();
            if parts.len() != 3 {
                return Err("subdivided claw needs `S<h>_<i>_<j>`".into());
            }
            let (h, i, j) = (num(parts[0])?, num(parts[1])?, num(parts[2])?);
            if h == 0 {
                return Err("subdivided claw arms must be positive".into());
            }
            if !(h <= i && i <= j) {
                return Err(format!("arms of S{h}_{i}_{j} must satisfy h <= i <= j"));
            }
            Ok(Base::Spider(h, i, j))
        }
        _ => Err(format!("unknown base `{t}`")),
    }
}
