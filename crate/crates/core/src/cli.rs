//! The `steiner` command line.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::classify::{classify_pair, classify_single};
use crate::corpus::{gen_random_in_class, random_connected, random_terminals, random_weights, seeded};
use crate::error::{Error, Result};
use crate::gadgets::{
    gen_grid, gen_netwall, gen_wall, reduce_complete, reduce_complete_bipartite, reduce_grid_to_wall,
    reduce_line_graph, reduce_subdivision, reduce_wall_to_netwall, verify_certificate, GadgetCertificate,
};
use crate::graph::Graph;
use crate::instance::{EdgeWeighting, SteinerInstance, Variant, VertexWeighting, Weighting};
use crate::io::{parse_instance, render_instance, InstanceFile};
use crate::patterns::{classify_pattern, make_named};
use crate::solvers::{
    dp_terminals_edge, oracle_edge, oracle_vertex, solve_exact, solve_sp1p4, solve_sparse_class, SolveReport,
};
use crate::treewidth::{exact_treewidth, heuristic_decomposition, steiner_dp_treewidth, DP_MAX_WIDTH};

#[derive(Parser, Debug)]
#[command(name = "steiner", version, about = "Exact Steiner tree tools for small graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Complexity verdict for one or two forbidden induced subgraphs.
    Classify(ClassifyArgs),
    /// Solve an instance file exactly.
    Solve(SolveArgs),
    /// Apply a hardness gadget to an instance file.
    Reduce(ReduceArgs),
    /// Check a gadget certificate by solving both instances.
    Verify(VerifyArgs),
    /// Write a generated instance.
    Gen(GenArgs),
    /// Tree decomposition of an instance graph in PACE format.
    Decompose(DecomposeArgs),
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct ClassifyArgs {
    /// Edge Steiner Tree on (H1, H2)-free graphs.
    #[arg(long, num_args = 2, value_names = ["H1", "H2"])]
    pub pair: Option<Vec<String>>,
    /// Vertex Steiner Tree on H-free graphs.
    #[arg(long, value_name = "H")]
    pub single: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Edge,
    Vertex,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    /// Checked against the file when given.
    #[arg(long, value_enum)]
    pub variant: Option<VariantArg>,
    /// auto, oracle, dp, twdp, sp1p4:<s> or sparse.
    #[arg(long, default_value = "auto")]
    pub algo: String,
    /// Patterns the graph is promised to avoid (used by `auto`).
    #[arg(long = "promise", value_name = "DSL")]
    pub promises: Vec<String>,
    pub file: PathBuf,
}

#[derive(Args, Debug)]
pub struct ReduceArgs {
    /// subdivide:<r>, complete, complete-bipartite, wall, net-wall or line.
    #[arg(long)]
    pub gadget: String,
    pub file: PathBuf,
    #[arg(short = 'o', long = "output")]
    pub output: PathBuf,
    /// Certificate path; printed to stdout when omitted.
    #[arg(long)]
    pub cert: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long)]
    pub cert: PathBuf,
    #[arg(long)]
    pub original: PathBuf,
    #[arg(long)]
    pub reduced: PathBuf,
}

#[derive(Args, Debug)]
#[group(id = "shape", required = true, multiple = false)]
pub struct GenShape {
    /// `NxM` grid, corner terminals.
    #[arg(long, value_name = "NxM")]
    pub grid: Option<String>,
    /// Wall of height H, terminals at the first and last vertex.
    #[arg(long, value_name = "H")]
    pub wall: Option<usize>,
    /// Net-wall of height H, terminals at the first and last vertex.
    #[arg(long, value_name = "H")]
    pub netwall: Option<usize>,
    /// `n=..,p=..,seed=..[,k=..][,w=unit|rand]`, connected.
    #[arg(long, value_name = "PARAMS")]
    pub random: Option<String>,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[command(flatten)]
    pub shape: GenShape,
    #[arg(long, value_enum, default_value = "edge")]
    pub variant: VariantArg,
    /// With --random: only graphs avoiding these patterns.
    #[arg(long = "promise", value_name = "DSL")]
    pub promises: Vec<String>,
    #[arg(short = 'o', long = "output")]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct DecomposeArgs {
    /// Exact treewidth instead of the min-fill heuristic.
    #[arg(long)]
    pub exact: bool,
    pub file: PathBuf,
}

/// Result of a command: text for stdout and the exit status.
#[derive(Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub status: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, status: 0 }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Other(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Other(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<InstanceFile> {
    parse_instance(&read(path)?)
}

/// Parses `argv` (program name first) and runs the command. Usage errors
/// come back as `Err` with clap's message already rendered.
pub fn cli_dispatch<I, T>(argv: I) -> std::result::Result<Outcome, String>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| e.to_string())?;
    run(cli.command).map_err(|e| format!("error: {e}\n"))
}

pub fn run(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::Classify(a) => classify(a),
        Command::Solve(a) => solve(a),
        Command::Reduce(a) => reduce(a),
        Command::Verify(a) => verify(a),
        Command::Gen(a) => generate(a),
        Command::Decompose(a) => decompose(a),
    }
}

fn classify(a: ClassifyArgs) -> Result<Outcome> {
    let line = match (a.pair, a.single) {
        (Some(p), _) => classify_pair(&make_named(&p[0])?, &make_named(&p[1])?).record(),
        (None, Some(h)) => classify_single(&make_named(&h)?).record(),
        (None, None) => unreachable!("clap requires one of the flags"),
    };
    Ok(Outcome::ok(line + "\n"))
}

/// Chooses and runs a solver by name.
pub fn solve_with(inst: &SteinerInstance, algo: &str, promises: &[String]) -> Result<SolveReport> {
    let edge = inst.variant() == Variant::Edge;
    match algo {
        "oracle" if edge => oracle_edge(inst),
        "oracle" => oracle_vertex(inst),
        "dp" => dp_terminals_edge(inst),
        "twdp" => steiner_dp_treewidth(inst, &heuristic_decomposition(inst.graph())),
        "sparse" => solve_sparse_class(inst),
        "auto" => {
            let fits = promises
                .iter()
                .map(|p| make_named(p).map(|h| classify_pattern(&h).fits_sp1_p4))
                .collect::<Result<Vec<_>>>()?;
            if !edge {
                match fits.into_iter().flatten().min() {
                    Some(s) => solve_sp1p4(inst, s),
                    None => oracle_vertex(inst),
                }
            } else {
                let td = heuristic_decomposition(inst.graph());
                if td.width() <= DP_MAX_WIDTH {
                    steiner_dp_treewidth(inst, &td)
                } else {
                    solve_exact(inst)
                }
            }
        }
        other => match other.strip_prefix("sp1p4:") {
            Some(s) => {
                let s: usize = s
                    .parse()
                    .map_err(|_| Error::Other(format!("bad s in `{other}`")))?;
                solve_sp1p4(inst, s)
            }
            None => Err(Error::Other(format!("unknown algorithm `{other}`"))),
        },
    }
}

fn solve(a: SolveArgs) -> Result<Outcome> {
    let file = load(&a.file)?;
    let inst = &file.instance;
    match (a.variant, inst.variant()) {
        (Some(VariantArg::Edge), Variant::Vertex) => return Err(Error::WrongVariant { expected: "edge" }),
        (Some(VariantArg::Vertex), Variant::Edge) => return Err(Error::WrongVariant { expected: "vertex" }),
        _ => {}
    }
    let rep = solve_with(inst, &a.algo, &a.promises)?;
    let mut out = String::new();
    writeln!(out, "weight {}", rep.solution.weight).unwrap();
    writeln!(out, "algorithm {}", rep.algorithm).unwrap();
    writeln!(out, "explored {}", rep.explored).unwrap();
    let edges: Vec<String> = rep.solution.edges.iter().map(|&(u, v)| format!("{}-{}", u + 1, v + 1)).collect();
    writeln!(out, "tree {}", edges.join(" ")).unwrap();
    if let Some(w) = &rep.warning {
        writeln!(out, "warning {w}").unwrap();
    }
    for t in &rep.trace {
        writeln!(out, "trace {t}").unwrap();
    }
    Ok(Outcome::ok(out))
}

fn reduce(a: ReduceArgs) -> Result<Outcome> {
    let mut file = load(&a.file)?;
    let inst = &file.instance;
    let (instance, cert): (SteinerInstance, GadgetCertificate) = match a.gadget.as_str() {
        "complete" => {
            let r = reduce_complete(inst)?;
            (r.instance, r.certificate)
        }
        "complete-bipartite" => {
            let side = inst
                .graph()
                .bipartition()
                .ok_or_else(|| Error::InvalidBipartition("graph is not bipartite".into()))?;
            let r = reduce_complete_bipartite(inst, &side)?;
            (r.instance, r.certificate)
        }
        "wall" => {
            let r = reduce_grid_to_wall(inst)?;
            (r.instance, r.certificate)
        }
        "net-wall" => {
            let r = reduce_wall_to_netwall(inst)?;
            (r.instance, r.certificate)
        }
        "line" => {
            let r = reduce_line_graph(inst)?;
            (r.instance, r.certificate)
        }
        g => match g.strip_prefix("subdivide:").map(str::parse::<usize>) {
            Some(Ok(r)) => {
                let red = reduce_subdivision(inst, r)?;
                (red.instance, red.certificate)
            }
            _ => return Err(Error::Other(format!("unknown gadget `{g}`"))),
        },
    };
    file.instance = instance;
    file.remarks.push(a.gadget.clone());
    write(&a.output, &render_instance(&file))?;
    let text = cert.render();
    let mut out = format!(
        "reduced instance: {} vertices, {} edges\n",
        file.instance.graph().n(),
        file.instance.graph().m()
    );
    match &a.cert {
        Some(p) => write(p, &text)?,
        None => out.push_str(&text),
    }
    Ok(Outcome::ok(out))
}

fn verify(a: VerifyArgs) -> Result<Outcome> {
    let cert: GadgetCertificate = read(&a.cert)?.parse()?;
    let original = load(&a.original)?;
    let reduced = load(&a.reduced)?;
    let v = verify_certificate(&original.instance, &reduced.instance, &cert)?;
    let mut out = String::new();
    writeln!(out, "original optimum {}", v.original_opt).unwrap();
    writeln!(out, "reduced optimum {}", v.reduced_opt).unwrap();
    match (v.predicted, v.residual) {
        (Some(p), Some(r)) => {
            writeln!(out, "predicted {p}").unwrap();
            writeln!(out, "residual {r}").unwrap();
        }
        _ => writeln!(out, "relation not asserted").unwrap(),
    }
    let status = if v.holds() { 0 } else { 1 };
    writeln!(out, "{}", if status == 0 { "HOLDS" } else { "FAILS" }).unwrap();
    Ok(Outcome { stdout: out, status })
}

fn parse_kv(params: &str) -> Result<Vec<(String, String)>> {
    params.split(',')
        .map(|kv| {
            kv.split_once('=')
                .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
                .ok_or_else(|| Error::Other(format!("expected key=value, found `{kv}`")))
        })
        .collect()
}

fn generate(a: GenArgs) -> Result<Outcome> {
    let s = a.shape;
    let ends = |g: &Graph| vec![0, g.n() - 1];
    let (g, terminals, weights, name) = if let Some(dims) = s.grid {
        let (n, m) = dims
            .split_once('x')
            .and_then(|(n, m)| Some((n.parse::<usize>().ok()?, m.parse::<usize>().ok()?)))
            .filter(|&(n, m)| n > 0 && m > 0)
            .ok_or_else(|| Error::Other(format!("bad grid size `{dims}`")))?;
        let g = gen_grid(n, m);
        let mut ts = vec![0, m - 1, (n - 1) * m, n * m - 1];
        ts.dedup();
        (g, ts, None, format!("grid {n}x{m}"))
    } else if let Some(h) = s.wall {
        let g = gen_wall(h);
        let ts = ends(&g);
        (g, ts, None, format!("wall {h}"))
    } else if let Some(h) = s.netwall {
        let g = gen_netwall(h);
        let ts = ends(&g);
        (g, ts, None, format!("net-wall {h}"))
    } else {
        let params = s.random.expect("clap requires a shape");
        let mut n = None;
        let (mut p, mut seed, mut k, mut rand_w) = (0.3f64, 0u64, 3usize, false);
        for (key, val) in parse_kv(&params)? {
            let bad = || Error::Other(format!("bad value for {key}: `{val}`"));
            match key.as_str() {
                "n" => n = Some(val.parse::<usize>().map_err(|_| bad())?),
                "p" => p = val.parse().ok().filter(|p| (0.0..=1.0).contains(p)).ok_or_else(bad)?,
                "seed" => seed = val.parse().map_err(|_| bad())?,
                "k" => k = val.parse().map_err(|_| bad())?,
                "w" => rand_w = matches!(val.as_str(), "rand").then_some(true).or((val == "unit").then_some(false)).ok_or_else(bad)?,
                _ => return Err(Error::Other(format!("unknown key `{key}`"))),
            }
        }
        let n = n.filter(|&n| n > 0).ok_or_else(|| Error::Other("random needs n>0".into()))?;
        let mut rng = seeded(seed);
        let g = if a.promises.is_empty() {
            random_connected(&mut rng, n, p)
        } else {
            let pats = a.promises.iter().map(|d| make_named(d)).collect::<Result<Vec<_>>>()?;
            let refs: Vec<_> = pats.iter().collect();
            gen_random_in_class(&refs, n, seed)?
        };
        let ts = random_terminals(&mut rng, n, k);
        let count = match a.variant {
            VariantArg::Edge => g.m(),
            VariantArg::Vertex => g.n(),
        };
        let w = rand_w.then(|| random_weights(&mut rng, count));
        (g, ts, w, format!("random {params}"))
    };
    let weighting = match (a.variant, weights) {
        (VariantArg::Edge, None) => Weighting::Edge(EdgeWeighting::unit(&g)),
        (VariantArg::Edge, Some(w)) => Weighting::Edge(EdgeWeighting::new(&g, w)?),
        (VariantArg::Vertex, None) => Weighting::Vertex(VertexWeighting::unit(&g)),
        (VariantArg::Vertex, Some(w)) => Weighting::Vertex(VertexWeighting::new(&g, w)?),
    };
    let mut file = InstanceFile::new(SteinerInstance::new(g, terminals, weighting, None)?);
    file.name = Some(name);
    let text = render_instance(&file);
    match a.output {
        Some(p) => {
            write(&p, &text)?;
            Ok(Outcome::ok(String::new()))
        }
        None => Ok(Outcome::ok(text)),
    }
}

fn decompose(a: DecomposeArgs) -> Result<Outcome> {
    let file = load(&a.file)?;
    let g = file.instance.graph();
    let td = if a.exact { exact_treewidth(g)?.1 } else { heuristic_decomposition(g) };
    Ok(Outcome::ok(td.to_pace(g.n())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> std::result::Result<Outcome, String> {
        cli_dispatch(std::iter::once("steiner").chain(args.iter().copied()))
    }

    #[test]
    fn classify_commands() {
        let o = run_args(&["classify", "--pair", "K3", "K1_3"]).unwrap();
        assert!(o.stdout.contains("POLY case=Case2"));
        let o = run_args(&["classify", "--single", "2P2"]).unwrap();
        assert!(o.stdout.contains("NPC witness=split"));
        assert!(run_args(&["classify"]).is_err());
        assert!(run_args(&["classify", "--bogus"]).is_err());
    }

    #[test]
    fn gen_solve_reduce_verify() {
        let dir = tempfile::tempdir().unwrap();
        let p = |n: &str| dir.path().join(n).to_string_lossy().into_owned();
        run_args(&["gen", "--grid", "3x3", "-o", &p("g.stp")]).unwrap();
        let o = run_args(&["solve", "--variant", "edge", "--algo", "oracle", &p("g.stp")]).unwrap();
        assert!(o.stdout.starts_with("weight 6\n"), "{}", o.stdout);
        let auto = run_args(&["solve", &p("g.stp")]).unwrap();
        assert!(auto.stdout.contains("algorithm treewidth-dp"));
        assert!(run_args(&["solve", "--variant", "vertex", &p("g.stp")]).is_err());

        run_args(&["reduce", "--gadget", "subdivide:2", &p("g.stp"), "-o", &p("s.stp"), "--cert", &p("s.cert")]).unwrap();
        let v = run_args(&["verify", "--cert", &p("s.cert"), "--original", &p("g.stp"), "--reduced", &p("s.stp")]).unwrap();
        assert_eq!(v.status, 0, "{}", v.stdout);
        // an unrelated original has a different optimum
        run_args(&["gen", "--grid", "2x2", "-o", &p("h.stp")]).unwrap();
        let v = run_args(&["verify", "--cert", &p("s.cert"), "--original", &p("h.stp"), "--reduced", &p("s.stp")]).unwrap();
        assert_eq!(v.status, 1);
    }

    #[test]
    fn random_gen_is_reproducible() {
        let a = run_args(&["gen", "--random", "n=7,p=0.4,seed=11,w=rand"]).unwrap();
        let b = run_args(&["gen", "--random", "n=7,p=0.4,seed=11,w=rand"]).unwrap();
        assert_eq!(a, b);
        let c = run_args(&["gen", "--random", "n=7,p=0.4,seed=12,w=rand"]).unwrap();
        assert_ne!(a, c);
        let v = run_args(&["gen", "--random", "n=8,seed=1", "--variant", "vertex", "--promise", "P4"]).unwrap();
        let f = parse_instance(&v.stdout).unwrap();
        assert_eq!(f.instance.variant(), Variant::Vertex);
        assert!(run_args(&["gen", "--random", "n=7,q=1"]).is_err());
    }

    #[test]
    fn sp1p4_and_decompose() {
        let dir = tempfile::tempdir().unwrap();
        let f = dir.path().join("v.stp").to_string_lossy().into_owned();
        run_args(&["gen", "--random", "n=9,seed=3,k=3,w=rand", "--variant", "vertex", "--promise", "P1+P4", "-o", &f])
            .unwrap();
        let auto = run_args(&["solve", "--promise", "P1+P4", &f]).unwrap();
        assert!(auto.stdout.contains("algorithm sp1p4"));
        let oracle = run_args(&["solve", "--algo", "oracle", &f]).unwrap();
        assert_eq!(auto.stdout.lines().next(), oracle.stdout.lines().next());
        let td = run_args(&["decompose", "--exact", &f]).unwrap();
        assert!(td.stdout.starts_with("s td "));
    }
}
