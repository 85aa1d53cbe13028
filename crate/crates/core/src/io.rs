//! STP-style instance files with exact rational weights.
//!
//! ```text
//! SECTION Comment            (optional)
//! Name "grid 3x3"
//! Remark "reduce wall"       (any number)
//! END
//! SECTION Graph
//! Nodes 4
//! Edges 3
//! E 1 2 7/3                  (weight omitted for vertex-weighted files)
//! ...
//! END
//! SECTION Terminals
//! Terminals 2
//! T 1
//! T 4
//! END
//! SECTION VertexWeights      (optional; selects the vertex variant)
//! VW 1 2
//! ...
//! END
//! SECTION Decision           (optional)
//! Threshold 9/2
//! END
//! EOF
//! ```
//!
//! Indices are 1-based in files. Lines starting with `#` are comments.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{canon, Edge, Graph};
use crate::instance::{EdgeWeighting, SteinerInstance, VertexWeighting, Weighting};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceFile {
    pub instance: SteinerInstance,
    pub name: Option<String>,
    /// Reductions applied so far, oldest first.
    pub remarks: Vec<String>,
}

impl InstanceFile {
    pub fn new(instance: SteinerInstance) -> Self {
        InstanceFile {
            instance,
            name: None,
            remarks: Vec::new(),
        }
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "'"))
}

pub fn render_instance(file: &InstanceFile) -> String {
    let inst = &file.instance;
    let g = inst.graph();
    let mut out = String::new();
    if file.name.is_some() || !file.remarks.is_empty() {
        out.push_str("SECTION Comment\n");
        if let Some(n) = &file.name {
            out.push_str(&format!("Name {}\n", quote(n)));
        }
        for r in &file.remarks {
            out.push_str(&format!("Remark {}\n", quote(r)));
        }
        out.push_str("END\n\n");
    }
    out.push_str(&format!("SECTION Graph\nNodes {}\nEdges {}\n", g.n(), g.m()));
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        match inst.weighting() {
            Weighting::Edge(w) => out.push_str(&format!("E {} {} {}\n", u + 1, v + 1, w.get(i))),
            Weighting::Vertex(_) => out.push_str(&format!("E {} {}\n", u + 1, v + 1)),
        }
    }
    out.push_str("END\n\n");
    out.push_str(&format!("SECTION Terminals\nTerminals {}\n", inst.terminals().len()));
    for t in inst.terminals() {
        out.push_str(&format!("T {}\n", t + 1));
    }
    out.push_str("END\n\n");
    if let Weighting::Vertex(w) = inst.weighting() {
        out.push_str("SECTION VertexWeights\n");
        for v in 0..g.n() {
            out.push_str(&format!("VW {} {}\n", v + 1, w.get(v)));
        }
        out.push_str("END\n\n");
    }
    if let Some(k) = inst.threshold() {
        out.push_str(&format!("SECTION Decision\nThreshold {k}\nEND\n\n"));
    }
    out.push_str("EOF\n");
    out
}

#[derive(Default)]
struct Raw {
    name: Option<String>,
    remarks: Vec<String>,
    nodes: Option<usize>,
    edges_declared: Option<usize>,
    /// Endpoints, optional weight, line.
    edges: Vec<(usize, usize, Option<Rational>, usize)>,
    terminals_declared: Option<usize>,
    terminals: Vec<(usize, usize)>,
    vertex_weights: Option<Vec<(usize, Rational, usize)>>,
    threshold: Option<Rational>,
    seen: Vec<String>,
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_quoted(rest: &str, line: usize) -> Result<String> {
    let t = rest.trim();
    t.strip_prefix('"')
        .and_then(|x| x.strip_suffix('"'))
        .map(str::to_string)
        .ok_or_else(|| perr(line, "expected a quoted string"))
}

fn weight(tok: &str, line: usize) -> Result<Rational> {
    let w: Rational = tok.parse().map_err(|_| perr(line, format!("bad weight `{tok}`")))?;
    if !w.is_positive() {
        return Err(perr(line, format!("weight {w} is not positive")));
    }
    Ok(w)
}

pub fn parse_instance(text: &str) -> Result<InstanceFile> {
    let mut raw = Raw::default();
    let mut section: Option<(String, usize)> = None;
    let mut finished = false;
    let mut last_line = 0;
    for (i, full) in text.lines().enumerate() {
        let ln = i + 1;
        last_line = ln;
        let line = full.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if finished {
            return Err(perr(ln, "content after EOF"));
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let key = toks[0];
        let num = |t: Option<&&str>| -> Result<usize> {
            let t = t.ok_or_else(|| perr(ln, format!("`{key}` needs more fields")))?;
            t.parse().map_err(|_| perr(ln, format!("expected a number, found `{t}`")))
        };
        let vertex = |t: Option<&&str>| -> Result<usize> {
            let v = num(t)?;
            if v == 0 {
                return Err(perr(ln, "vertex indices start at 1"));
            }
            Ok(v - 1)
        };
        match (&section, key) {
            (None, "SECTION") => {
                let name = toks.get(1).ok_or_else(|| perr(ln, "SECTION needs a name"))?.to_string();
                if raw.seen.contains(&name) {
                    return Err(perr(ln, format!("section {name} repeated")));
                }
                if !["Comment", "Graph", "Terminals", "VertexWeights", "Decision"].contains(&name.as_str()) {
                    return Err(perr(ln, format!("unknown section {name}")));
                }
                if name == "VertexWeights" {
                    raw.vertex_weights = Some(Vec::new());
                }
                raw.seen.push(name.clone());
                section = Some((name, ln));
            }
            (None, "EOF") => finished = true,
            (None, _) => return Err(perr(ln, format!("expected SECTION or EOF, found `{key}`"))),
            (Some(_), "END") => section = None,
            (Some((s, _)), _) => match (s.as_str(), key) {
                ("Comment", "Name") => raw.name = Some(parse_quoted(&line[4..], ln)?),
                ("Comment", "Remark") => raw.remarks.push(parse_quoted(&line[6..], ln)?),
                ("Comment", _) => return Err(perr(ln, format!("unknown comment key `{key}`"))),
                ("Graph", "Nodes") => raw.nodes = Some(num(toks.get(1))?),
                ("Graph", "Edges") => raw.edges_declared = Some(num(toks.get(1))?),
                ("Graph", "E") => {
                    if toks.len() != 3 && toks.len() != 4 {
                        return Err(perr(ln, "edge line is `E <u> <v> [<w>]`"));
                    }
                    let (u, v) = (vertex(toks.get(1))?, vertex(toks.get(2))?);
                    let w = toks.get(3).map(|t| weight(t, ln)).transpose()?;
                    raw.edges.push((u, v, w, ln));
                }
                ("Terminals", "Terminals") => raw.terminals_declared = Some(num(toks.get(1))?),
                ("Terminals", "T") => raw.terminals.push((vertex(toks.get(1))?, ln)),
                ("VertexWeights", "VW") => {
                    let v = vertex(toks.get(1))?;
                    let w = weight(toks.get(2).ok_or_else(|| perr(ln, "VW needs a weight"))?, ln)?;
                    raw.vertex_weights.as_mut().unwrap().push((v, w, ln));
                }
                ("Decision", "Threshold") => {
                    let t = toks.get(1).ok_or_else(|| perr(ln, "Threshold needs a value"))?;
                    raw.threshold = Some(weight(t, ln)?);
                }
                (s, _) => return Err(perr(ln, format!("unexpected `{key}` in section {s}"))),
            },
        }
    }
    if let Some((s, ln)) = section {
        return Err(perr(ln, format!("section {s} is not closed")));
    }
    if !finished {
        return Err(perr(last_line, "missing EOF"));
    }
    build(raw, last_line)
}

fn build(raw: Raw, last: usize) -> Result<InstanceFile> {
    let n = raw.nodes.ok_or_else(|| perr(last, "missing Nodes"))?;
    if let Some(m) = raw.edges_declared {
        if m != raw.edges.len() {
            return Err(perr(last, format!("Edges says {m}, found {} edge lines", raw.edges.len())));
        }
    }
    let mut weights: BTreeMap<Edge, Option<Rational>> = BTreeMap::new();
    for &(u, v, w, ln) in &raw.edges {
        if u >= n || v >= n {
            return Err(perr(ln, format!("edge endpoint out of range 1..={n}")));
        }
        if u == v {
            return Err(perr(ln, "loop edge"));
        }
        if weights.insert(canon(u, v), w).is_some() {
            return Err(perr(ln, "parallel edge"));
        }
    }
    let with_w = weights.values().filter(|w| w.is_some()).count();
    let graph = Graph::new(n, weights.keys().copied())?;
    let weighting = match raw.vertex_weights {
        Some(vw) => {
            if with_w > 0 {
                return Err(perr(last, "both edge weights and a VertexWeights section are present"));
            }
            let mut ws: Vec<Option<Rational>> = vec![None; n];
            for (v, w, ln) in vw {
                if v >= n {
                    return Err(perr(ln, format!("vertex out of range 1..={n}")));
                }
                if ws[v].replace(w).is_some() {
                    return Err(perr(ln, "vertex weight given twice"));
                }
            }
            let ws = ws
                .into_iter()
                .enumerate()
                .map(|(v, w)| w.ok_or_else(|| perr(last, format!("vertex {} has no weight", v + 1))))
                .collect::<Result<Vec<_>>>()?;
            Weighting::Vertex(VertexWeighting::new(&graph, ws)?)
        }
        None => {
            if with_w != weights.len() {
                let ln = raw.edges.iter().find(|e| e.2.is_none()).map_or(last, |e| e.3);
                return Err(perr(ln, "edge without weight and no VertexWeights section"));
            }
            Weighting::Edge(EdgeWeighting::new(&graph, weights.values().map(|w| w.unwrap()).collect())?)
        }
    };
    let mut terminals = Vec::new();
    for &(t, ln) in &raw.terminals {
        if t >= n {
            return Err(perr(ln, format!("terminal {} out of range 1..={n}", t + 1)));
        }
        if terminals.contains(&t) {
            return Err(perr(ln, "terminal listed twice"));
        }
        terminals.push(t);
    }
    if let Some(k) = raw.terminals_declared {
        if k != terminals.len() {
            return Err(perr(last, format!("Terminals says {k}, found {}", terminals.len())));
        }
    }
    let instance = SteinerInstance::new(graph, terminals, weighting, raw.threshold)?;
    Ok(InstanceFile {
        instance,
        name: raw.name,
        remarks: raw.remarks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::Variant;
    use proptest::prelude::*;

    const MINIMAL: &str = "SECTION Graph\nNodes 2\nEdges 1\nE 1 2 1\nEND\n\nSECTION Terminals\nTerminals 2\nT 1\nT 2\nEND\n\nEOF\n";

    #[test]
    fn minimal_round_trip() {
        let f = parse_instance(MINIMAL).unwrap();
        assert_eq!(f.instance.graph().m(), 1);
        assert_eq!(render_instance(&f), MINIMAL);
    }

    #[test]
    fn rational_and_metadata() {
        let text = "# hand made\nSECTION Comment\nName \"tri\"\nRemark \"subdivide:1\"\nEND\nSECTION Graph\nNodes 3\nEdges 3\nE 2 3 7/3\nE 1 2 14/6\nE 1 3 2\nEND\nSECTION Terminals\nTerminals 1\nT 3\nEND\nSECTION Decision\nThreshold 5/2\nEND\nEOF\n";
        let f = parse_instance(text).unwrap();
        assert_eq!(f.name.as_deref(), Some("tri"));
        assert_eq!(f.remarks, vec!["subdivide:1".to_string()]);
        assert_eq!(f.instance.weight_of_edge(1, 2), Some(Rational::new(7, 3)));
        assert_eq!(f.instance.weight_of_edge(0, 1), Some(Rational::new(7, 3)));
        assert_eq!(f.instance.threshold(), Some(Rational::new(5, 2)));
        assert_eq!(parse_instance(&render_instance(&f)).unwrap(), f);
    }

    #[test]
    fn vertex_variant() {
        let text = "SECTION Graph\nNodes 3\nEdges 2\nE 1 2\nE 2 3\nEND\nSECTION Terminals\nTerminals 2\nT 1\nT 3\nEND\nSECTION VertexWeights\nVW 1 1\nVW 2 1/2\nVW 3 1\nEND\nEOF\n";
        let f = parse_instance(text).unwrap();
        assert_eq!(f.instance.variant(), Variant::Vertex);
        assert_eq!(render_instance(&f), text.replace("END\nSECTION", "END\n\nSECTION").replace("END\nEOF", "END\n\nEOF"));
    }

    fn line_of(e: Error) -> usize {
        match e {
            Error::Parse { line, .. } => line,
            other => panic!("not a parse error: {other}"),
        }
    }

    #[test]
    fn errors_carry_lines() {
        let bad_weight = MINIMAL.replace("E 1 2 1", "E 1 2 0");
        assert_eq!(line_of(parse_instance(&bad_weight).unwrap_err()), 4);
        let neg = MINIMAL.replace("E 1 2 1", "E 1 2 -3/2");
        assert_eq!(line_of(parse_instance(&neg).unwrap_err()), 4);
        let out_of_range = MINIMAL.replace("T 2", "T 3");
        assert_eq!(line_of(parse_instance(&out_of_range).unwrap_err()), 10);
        let garbage = MINIMAL.replace("Nodes 2", "Nodes two");
        assert_eq!(line_of(parse_instance(&garbage).unwrap_err()), 2);
        let no_eof = MINIMAL.replace("EOF\n", "");
        assert!(parse_instance(&no_eof).is_err());
        let both = MINIMAL.replace("EOF", "SECTION VertexWeights\nVW 1 1\nVW 2 1\nEND\nEOF");
        assert!(matches!(parse_instance(&both), Err(Error::Parse { .. })));
        let neither = MINIMAL.replace("E 1 2 1", "E 1 2");
        assert_eq!(line_of(parse_instance(&neither).unwrap_err()), 4);
        let unclosed = "SECTION Graph\nNodes 1\nEOF\n";
        assert!(parse_instance(unclosed).is_err());
    }

    proptest! {
        #[test]
        fn round_trip_random(
            n in 2usize..9,
            extra in proptest::collection::vec((0usize..9, 0usize..9, 1i128..20, 1i128..5), 0..12),
            ts in proptest::collection::vec(0usize..9, 1..4),
            vertex in any::<bool>(),
        ) {
            let mut es: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
            es.extend(extra.iter().filter(|e| e.0 < n && e.1 < n && e.0 != e.1).map(|e| (e.0, e.1)));
            let g = Graph::new_dedup(n, es).unwrap();
            let ts: Vec<usize> = ts.into_iter().map(|t| t % n).collect();
            let inst = if vertex {
                let w = (0..n).map(|i| Rational::new(i as i128 + 1, 3)).collect();
                SteinerInstance::vertex(g.clone(), ts, VertexWeighting::new(&g, w).unwrap()).unwrap()
            } else {
                let w = (0..g.m()).map(|i| {
                    let e = extra.get(i).map_or((1, 1), |e| (e.2, e.3));
                    Rational::new(e.0, e.1)
                }).collect();
                SteinerInstance::edge(g.clone(), ts, EdgeWeighting::new(&g, w).unwrap()).unwrap()
            };
            let f = InstanceFile::new(inst);
            let text = render_instance(&f);
            prop_assert_eq!(parse_instance(&text).unwrap(), f);
        }
    }
}
