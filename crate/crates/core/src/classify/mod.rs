//! Complexity dichotomies for Steiner Tree on graphs defined by forbidden
//! induced subgraphs.
//!
//! * [`classify_pair`]: Edge Steiner Tree on `(H1, H2)`-free graphs, and
//!   whether that class has bounded treewidth (the two coincide).
//! * [`classify_single`]: Vertex Steiner Tree on `H`-free graphs.

mod witness;

pub use witness::{hardness_witness, WitnessGenerator};

use std::fmt;

use crate::patterns::{classify_pattern, Pattern, PatternKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Complexity {
    Polynomial,
    NpComplete,
}

/// Which branch of the pair dichotomy decided the verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairCase {
    /// One pattern is `K1` or `K2`: the class is edgeless.
    Case1,
    /// `{K3, claw}`: maximum degree 2.
    Case2,
    /// `{K_r, P3}` with `r >= 3`: disjoint cliques of size below `r`.
    Case3 { r: usize },
    /// `{K_r, sP1}` with `r >= 3`: finitely many graphs.
    Case4 { r: usize, s: usize },
    NotBothComplete,
    /// The non-clique pattern has an induced cycle; `cycle` is its girth.
    CycleInH2 { r: usize, cycle: usize },
    P1P2InForest { r: usize },
    /// `{K3, K_{1,s}}` with `s >= 4`.
    ClawR3K1s { s: usize },
    ClawRGe4 { r: usize },
}

impl PairCase {
    pub fn tag(self) -> &'static str {
        match self {
            PairCase::Case1 => "Case1",
            PairCase::Case2 => "Case2",
            PairCase::Case3 { .. } => "Case3",
            PairCase::Case4 { .. } => "Case4",
            PairCase::NotBothComplete => "NotBothComplete",
            PairCase::CycleInH2 { .. } => "CycleInH2",
            PairCase::P1P2InForest { .. } => "P1P2InForest",
            PairCase::ClawR3K1s { .. } => "Claw_r3_K1s",
            PairCase::ClawRGe4 { .. } => "Claw_rGe4",
        }
    }

    pub fn is_polynomial(self) -> bool {
        matches!(
            self,
            PairCase::Case1 | PairCase::Case2 | PairCase::Case3 { .. } | PairCase::Case4 { .. }
        )
    }

    /// Treewidth bound of the class in the polynomial cases.
    pub fn treewidth_bound(self) -> Option<TreewidthBound> {
        match self {
            PairCase::Case1 => Some(TreewidthBound::AtMost(0)),
            PairCase::Case2 => Some(TreewidthBound::AtMost(2)),
            PairCase::Case3 { r } => Some(TreewidthBound::AtMost(r - 2)),
            PairCase::Case4 { r, s } => Some(TreewidthBound::Ramsey { r, s }),
            _ => None,
        }
    }
}

/// `Ramsey` means every member has fewer than `R(r, s)` vertices; the
/// number itself is not computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TreewidthBound {
    AtMost(usize),
    Ramsey { r: usize, s: usize },
}

/// A graph class on which the relevant Steiner Tree variant is NP-complete.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WitnessClass {
    Complete,
    CompleteBipartite,
    /// `k`-subdivisions of walls.
    SubdividedWalls(usize),
    Walls,
    NetWalls,
    ChordalBipartite,
    Split,
    LineGraphs,
}

impl WitnessClass {
    pub fn as_str(self) -> &'static str {
        match self {
            WitnessClass::Complete => "complete",
            WitnessClass::CompleteBipartite => "complete-bipartite",
            WitnessClass::SubdividedWalls(_) => "subdivided-walls",
            WitnessClass::Walls => "walls",
            WitnessClass::NetWalls => "net-walls",
            WitnessClass::ChordalBipartite => "chordal-bipartite",
            WitnessClass::Split => "split",
            WitnessClass::LineGraphs => "line-graphs",
        }
    }
}

impl fmt::Display for WitnessClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairVerdict {
    pub h1: String,
    pub h2: String,
    pub complexity: Complexity,
    pub treewidth_bounded: bool,
    pub case: PairCase,
    pub witness: Option<WitnessClass>,
}

impl PairVerdict {
    /// `PAIR <h1> ; <h2> -> POLY case=<tag>` or
    /// `PAIR <h1> ; <h2> -> NPC case=<tag> witness=<class>`.
    pub fn record(&self) -> String {
        format!("PAIR {} ; {} -> {}", self.h1, self.h2, self.outcome())
    }

    /// The part of [`record`](Self::record) after the arrow.
    pub fn outcome(&self) -> String {
        match self.witness {
            None => format!("POLY case={}", self.case.tag()),
            Some(w) => format!("NPC case={} witness={w}", self.case.tag()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SingleComplexity {
    /// Solvable for `H`-free graphs by the `sP1 + P4` algorithm with this `s`.
    Polynomial(usize),
    NpComplete(WitnessClass),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingleVerdict {
    pub h: String,
    pub complexity: SingleComplexity,
}

impl SingleVerdict {
    pub fn hard_class(&self) -> Option<WitnessClass> {
        match self.complexity {
            SingleComplexity::NpComplete(c) => Some(c),
            SingleComplexity::Polynomial(_) => None,
        }
    }

    /// `SINGLE <h> -> POLY s=<s>` or `SINGLE <h> -> NPC witness=<class>`.
    pub fn record(&self) -> String {
        format!("SINGLE {} -> {}", self.h, self.outcome())
    }

    pub fn outcome(&self) -> String {
        match self.complexity {
            SingleComplexity::Polynomial(s) => format!("POLY s={s}"),
            SingleComplexity::NpComplete(c) => format!("NPC witness={c}"),
        }
    }
}

/// `Some(r)` for `K_r` with `r >= 3`.
fn big_clique(k: &PatternKind) -> Option<usize> {
    k.complete.filter(|&r| r >= 3)
}

fn polynomial_case(a: &PatternKind, b: &PatternKind) -> Option<PairCase> {
    let small = |k: &PatternKind| matches!(k.complete, Some(1 | 2));
    if small(a) || small(b) {
        return Some(PairCase::Case1);
    }
    for (x, y) in [(a, b), (b, a)] {
        let Some(r) = big_clique(x) else { continue };
        if r == 3 && y.star == Some(3) {
            return Some(PairCase::Case2);
        }
        if y.path == Some(3) {
            return Some(PairCase::Case3 { r });
        }
        if let Some(s) = y.edgeless {
            return Some(PairCase::Case4 { r, s });
        }
    }
    None
}

/// Hardness branch with `h1 = K_r`, `r >= 3`, and `h2` arbitrary but not
/// covered by a polynomial case.
fn hardness_case(r: usize, h2: &PatternKind) -> (PairCase, WitnessClass) {
    if let Some(cycle) = h2.girth {
        // shortest cycles are induced; longer subdivisions avoid both C3 and it
        return (PairCase::CycleInH2 { r, cycle }, WitnessClass::SubdividedWalls(cycle + 1));
    }
    if h2.has_p1_p2 {
        return (PairCase::P1P2InForest { r }, WitnessClass::CompleteBipartite);
    }
    assert!(
        h2.has_claw,
        "a (P1+P2)-free linear forest with an edge is P2 or P3, both polynomial"
    );
    if r == 3 {
        let s = h2.star.expect("a (P1+P2)-free tree with a claw is a star");
        (PairCase::ClawR3K1s { s }, WitnessClass::Walls)
    } else {
        (PairCase::ClawRGe4 { r }, WitnessClass::NetWalls)
    }
}

/// Complexity of Edge Steiner Tree on `(h1, h2)`-free graphs. Symmetric in
/// its arguments; `h1 == h2` gives the single-pattern restriction.
pub fn classify_pair(h1: &Pattern, h2: &Pattern) -> PairVerdict {
    let (a, b) = (classify_pattern(h1), classify_pattern(h2));
    let verdict = |case: PairCase, witness: Option<WitnessClass>| {
        let poly = witness.is_none();
        PairVerdict {
            h1: h1.name().to_string(),
            h2: h2.name().to_string(),
            complexity: if poly { Complexity::Polynomial } else { Complexity::NpComplete },
            treewidth_bounded: poly,
            case,
            witness,
        }
    };
    if let Some(case) = polynomial_case(&a, &b) {
        return verdict(case, None);
    }
    let (r, other) = match (big_clique(&a), big_clique(&b)) {
        (None, None) => return verdict(PairCase::NotBothComplete, Some(WitnessClass::Complete)),
        (Some(r), None) => (r, &b),
        (None, Some(r)) => (r, &a),
        // both cliques: the smaller plays K_r so the result is order-free
        (Some(ra), Some(rb)) if ra <= rb => (ra, &b),
        (Some(_), Some(rb)) => (rb, &a),
    };
    let (case, w) = hardness_case(r, other);
    verdict(case, Some(w))
}

/// Complexity of Vertex Steiner Tree on `h`-free graphs.
pub fn classify_single(h: &Pattern) -> SingleVerdict {
    let k = classify_pattern(h);
    let complexity = if let Some(s) = k.fits_sp1_p4 {
        SingleComplexity::Polynomial(s)
    } else if k.has_cycle() {
        // split graphs avoid C4 and C5; chordal bipartite graphs avoid C3
        // and every induced cycle longer than 4
        if !k.has_c3 && (k.has_c4 || k.has_c5) {
            SingleComplexity::NpComplete(WitnessClass::Split)
        } else {
            SingleComplexity::NpComplete(WitnessClass::ChordalBipartite)
        }
    } else if k.max_degree >= 3 {
        SingleComplexity::NpComplete(WitnessClass::LineGraphs)
    } else {
        // a linear forest outside sP1+P4 contains P5 or 2P2
        SingleComplexity::NpComplete(WitnessClass::Split)
    };
    SingleVerdict {
        h: h.name().to_string(),
        complexity,
    }
}
