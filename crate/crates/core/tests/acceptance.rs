//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Every expected value comes from an independent solver (enumeration
//! oracles, Dreyfus-Wagner) or from a direct structural check, never from
//! the code under test. The process exits nonzero when a criterion fails
//! that is not listed in `KNOWN_RED`; those are reported as FAIL with their
//! measured counts and do not stop the run.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use steiner_core::classify::{classify_pair, classify_single};
use steiner_core::corpus::{
    complement_disconnected, gen_random_in_class, random_cograph, random_connected, random_edge_instance,
    random_terminals, random_vertex_instance, random_weights, seeded,
};
use steiner_core::gadgets::{
    gen_grid, gen_netwall, gen_wall, reduce_complete, reduce_complete_bipartite, reduce_grid_to_wall,
    reduce_line_graph, reduce_subdivision, reduce_wall_to_netwall, verify_certificate, wall_from_grid,
    CertificateVerdict, WALL_PADDING,
};
use steiner_core::graph::Graph;
use steiner_core::instance::{EdgeWeighting, SteinerInstance};
use steiner_core::patterns::{contains_induced, make_named, spanning_complete_bipartite};
use steiner_core::rational::Rational;
use steiner_core::solvers::{
    in_sparse_class, oracle_edge, oracle_vertex, preprocess_rules123, solve_sp1p4, solve_sparse_class,
    unweighted_bridge, Algorithm,
};
use steiner_core::treewidth::{exact_treewidth, heuristic_decomposition, steiner_dp_treewidth, DP_MAX_WIDTH};

/// Criteria whose exact relation does not hold for the construction as
/// given; see the ledger entry on the wall and net-wall relations.
const KNOWN_RED: &[&str] = &["4c", "4d"];

struct Check {
    id: &'static str,
    title: &'static str,
    pass: bool,
    detail: String,
}

fn check(id: &'static str, title: &'static str, pass: bool, detail: String) -> Check {
    Check { id, title, pass, detail }
}

fn r(n: i128) -> Rational {
    Rational::from_integer(n)
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let pairs = common::rows(&common::fixture("pairs.txt"), "PAIR");
    let singles = common::rows(&common::fixture("singles.txt"), "SINGLE");
    let mut bad = Vec::new();
    for (lhs, want) in &pairs {
        let (a, b) = lhs.split_once(';').unwrap();
        let (a, b) = (make_named(a.trim()).unwrap(), make_named(b.trim()).unwrap());
        for got in [classify_pair(&a, &b).outcome(), classify_pair(&b, &a).outcome()] {
            if &got != want {
                bad.push(format!("{lhs}: {got}"));
            }
        }
    }
    for (h, want) in &singles {
        let got = classify_single(&make_named(h).unwrap()).outcome();
        if &got != want {
            bad.push(format!("{h}: {got}"));
        }
    }
    let secs = start.elapsed().as_secs_f64();
    let pass = bad.is_empty() && pairs.len() >= 40 && singles.len() >= 15 && secs < 1.0;
    check(
        "1",
        "classifier truth table",
        pass,
        format!("{} pairs, {} singles, {} mismatches {:?}, {secs:.3} s", pairs.len(), singles.len(), bad.len(), bad),
    )
}

fn criterion_2() -> Check {
    let mut total = 0;
    let mut bad = 0;
    let mut per_s = Vec::new();
    for s in 0..=2usize {
        let name = if s == 0 { "P4".to_string() } else { format!("{s}P1+P4") };
        let h = make_named(&name).unwrap();
        let mut rng = seeded(200 + s as u64);
        let mut count = 0;
        for i in 0..200u64 {
            let n = rng.random_range(4..=12);
            let g = gen_random_in_class(&[&h], n, 10_000 * s as u64 + i).unwrap();
            let k = rng.random_range(2..=n.min(5));
            let inst = random_vertex_instance(&mut rng, g, k).unwrap();
            let got = solve_sp1p4(&inst, s).unwrap();
            got.solution.validate(&inst).unwrap();
            if got.solution.weight != oracle_vertex(&inst).unwrap().solution.weight {
                bad += 1;
            }
            count += 1;
        }
        per_s.push(count);
        total += count;
    }
    check(
        "2",
        "sP1+P4 solver equals vertex oracle",
        bad == 0 && per_s.iter().all(|&c| c >= 200),
        format!("{total} instances ({per_s:?} for s=0,1,2), {bad} mismatches"),
    )
}

fn criterion_3() -> Check {
    let mut rng = seeded(300);
    let (mut count, mut bad, mut skipped) = (0, 0, 0);
    while count < 300 {
        let n = rng.random_range(2..=12);
        let p = rng.random_range(0.05..0.7);
        let g = random_connected(&mut rng, n, p);
        let k = rng.random_range(1..=n.min(6));
        let inst = random_edge_instance(&mut rng, g, k).unwrap();
        let td = heuristic_decomposition(inst.graph());
        if td.width() > DP_MAX_WIDTH {
            skipped += 1;
            continue;
        }
        let got = steiner_dp_treewidth(&inst, &td).unwrap();
        got.solution.validate(&inst).unwrap();
        if got.solution.weight != oracle_edge(&inst).unwrap().solution.weight {
            bad += 1;
        }
        count += 1;
    }

    let mut fixtures = Vec::new();
    for k in 2..=7 {
        fixtures.push((format!("K{k}"), Graph::complete(k), k - 1));
    }
    for c in 3..=9 {
        fixtures.push((format!("C{c}"), Graph::cycle(c), 2));
    }
    for n in 2..=12 {
        fixtures.push((format!("tree{n}"), random_connected(&mut rng, n, 0.0), 1));
    }
    fixtures.push(("grid3x3".into(), gen_grid(3, 3), 3));
    let mut tw_bad = Vec::new();
    for (name, g, want) in &fixtures {
        let (w, td) = exact_treewidth(g).unwrap();
        if w != *want || td.width() != w || td.validate(g).is_err() {
            tw_bad.push(format!("{name}={w}"));
        }
    }
    check(
        "3",
        "treewidth DP equals edge oracle; exact treewidth fixtures",
        bad == 0 && tw_bad.is_empty(),
        format!(
            "{count} instances ({skipped} skipped for width), {bad} mismatches; {} treewidth fixtures, wrong: {tw_bad:?}",
            fixtures.len()
        ),
    )
}

/// Tallies verdicts; `extra` is an additional exact check on the same pair.
#[derive(Default)]
struct Tally {
    total: usize,
    holds: usize,
    failures: Vec<String>,
}

impl Tally {
    fn add(&mut self, label: String, v: &CertificateVerdict, extra: bool) {
        self.total += 1;
        if v.holds() && extra {
            self.holds += 1;
        } else if self.failures.len() < 3 {
            self.failures.push(format!(
                "{label}: opt {} -> {}, predicted {:?}",
                v.original_opt, v.reduced_opt, v.predicted
            ));
        }
    }

    fn pass(&self, need: usize) -> bool {
        self.total >= need && self.holds == self.total
    }

    fn detail(&self) -> String {
        let mut s = format!("{}/{} residual 0", self.holds, self.total);
        if !self.failures.is_empty() {
            s += &format!("; e.g. {}", self.failures.join(" | "));
        }
        s
    }
}

fn small_edge_instance(rng: &mut ChaCha8Rng, max_n: usize) -> SteinerInstance {
    let n = rng.random_range(2..=max_n);
    let p = rng.random_range(0.1..0.5);
    let g = random_connected(rng, n, p);
    let k = rng.random_range(2..=n.min(4));
    random_edge_instance(rng, g, k).unwrap()
}

fn criterion_4a() -> Check {
    let mut rng = seeded(41);
    let mut t = Tally::default();
    for rr in 1..=3 {
        for i in 0..100 {
            let inst = small_edge_instance(&mut rng, 8);
            let red = reduce_subdivision(&inst, rr).unwrap();
            let v = verify_certificate(&inst, &red.instance, &red.certificate).unwrap();
            t.add(format!("r={rr} #{i}"), &v, true);
        }
    }
    check("4a", "subdivision r=1..3", t.pass(300), t.detail())
}

/// Connected bipartite graph: a random tree plus random edges across its
/// 2-colouring.
fn random_bipartite(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let tree = random_connected(rng, n, 0.0);
    let side = tree.bipartition().unwrap();
    let mut es = tree.edges().to_vec();
    for u in 0..n {
        for v in u + 1..n {
            if side[u] != side[v] && !tree.has_edge(u, v) && rng.random_bool(p) {
                es.push((u, v));
            }
        }
    }
    Graph::new(n, es).unwrap()
}

fn criterion_4b() -> Check {
    let mut rng = seeded(42);
    let mut kn = Tally::default();
    for i in 0..100 {
        let inst = small_edge_instance(&mut rng, 8);
        let red = reduce_complete(&inst).unwrap();
        let v = verify_certificate(&inst, &red.instance, &red.certificate).unwrap();
        kn.add(format!("complete #{i}"), &v, red.instance.graph().m() == inst.graph().n() * (inst.graph().n() - 1) / 2);
    }
    let mut kb = Tally::default();
    for i in 0..100 {
        let n = rng.random_range(2..=9);
        let p = rng.random_range(0.0..0.5);
        let g = random_bipartite(&mut rng, n, p);
        let side = g.bipartition().unwrap();
        let k = rng.random_range(2..=n.min(4));
        let inst = random_edge_instance(&mut rng, g, k).unwrap();
        let red = reduce_complete_bipartite(&inst, &side).unwrap();
        let v = verify_certificate(&inst, &red.instance, &red.certificate).unwrap();
        let a = side.iter().filter(|&&s| s).count();
        kb.add(format!("bipartite #{i}"), &v, red.instance.graph().m() == a * (n - a));
    }
    check(
        "4b",
        "complete and complete-bipartite completion",
        kn.pass(100) && kb.pass(100),
        format!("complete {}; complete-bipartite {}", kn.detail(), kb.detail()),
    )
}

/// Whether `opt <= k <=> opt' <= a k + b` for the integers `k` around
/// `opt` (integral unit-weight optimum, so `opt` and `opt - 1` decide it).
fn threshold_form(v: &CertificateVerdict, a: Rational, b: Rational) -> bool {
    let opt = v.original_opt;
    opt.is_integer() && v.reduced_opt <= a * opt + b && v.reduced_opt > a * (opt - Rational::ONE) + b
}

fn criterion_4c() -> (Check, Check) {
    let mut rng = seeded(43);
    let mut t = Tally::default();
    let mut threshold = 0;
    let shapes = [(2, 2), (2, 3), (3, 2), (3, 3), (2, 4), (3, 4)];
    for i in 0..24 {
        let (n, m) = shapes[i % shapes.len()];
        let g = gen_grid(n, m);
        let k = rng.random_range(2..=3.min(n * m));
        let inst = SteinerInstance::unit_edge(g, random_terminals(&mut rng, n * m, k)).unwrap();
        let red = reduce_grid_to_wall(&inst).unwrap();
        let v = verify_certificate(&inst, &red.instance, &red.certificate).unwrap();
        let eps: Rational = red.certificate.param("epsilon").unwrap().parse().unwrap();
        if threshold_form(&v, Rational::ONE + eps, eps) {
            threshold += 1;
        }
        t.add(format!("{n}x{m} {:?}", inst.terminals()), &v, true);
    }
    (
        check("4c", "grid->wall exact relation opt' = opt + (opt+1)eps", t.pass(20), t.detail()),
        check(
            "4c'",
            "grid->wall threshold form opt <= k <=> opt' <= k + (k+1)eps",
            threshold == t.total && t.total >= 20,
            format!("{threshold}/{} hold", t.total),
        ),
    )
}

fn criterion_4d() -> (Check, Check) {
    let mut rng = seeded(44);
    let mut t = Tally::default();
    let mut threshold = 0;
    for i in 0..12 {
        let (pn, pm) = if i % 2 == 0 { (6, 6) } else { (6, 7) };
        let (wall, map) = wall_from_grid(pn, pm);
        // interior vertices: two rows/columns clear of every side
        let mut inner = Vec::new();
        for a in 1 + WALL_PADDING..=pn - WALL_PADDING {
            for b in 1 + WALL_PADDING..=pm - WALL_PADDING {
                let s = map.vertex(a, b);
                inner.extend(s.up.into_iter().chain(s.down));
            }
        }
        let picks = random_terminals(&mut rng, inner.len(), 2);
        let ts: Vec<usize> = picks.iter().map(|&p| inner[p]).collect();
        let inst = SteinerInstance::unit_edge(wall, ts).unwrap();
        let red = reduce_wall_to_netwall(&inst).unwrap();
        let v = verify_certificate(&inst, &red.instance, &red.certificate).unwrap();
        let eps: Rational = red.certificate.param("epsilon").unwrap().parse().unwrap();
        let two = r(2);
        if threshold_form(&v, Rational::ONE + two * eps, two * eps) {
            threshold += 1;
        }
        t.add(format!("{pn}x{pm} {:?}", inst.terminals()), &v, true);
    }
    (
        check("4d", "wall->net-wall exact relation opt' = k + 2(k+1)eps'", t.pass(10), t.detail()),
        check(
            "4d'",
            "wall->net-wall threshold form",
            threshold == t.total && t.total >= 10,
            format!("{threshold}/{} hold", t.total),
        ),
    )
}

fn criterion_4e() -> Check {
    let mut rng = seeded(45);
    let mut t = Tally::default();
    for i in 0..100 {
        let n = rng.random_range(2..=8);
        let p = rng.random_range(0.05..0.35);
        let g = random_connected(&mut rng, n, p);
        let k = rng.random_range(2..=n.min(4));
        let inst = SteinerInstance::unit_edge(g, random_terminals(&mut rng, n, k)).unwrap();
        let red = reduce_line_graph(&inst).unwrap();
        let v = verify_certificate(&inst, &red.instance, &red.certificate).unwrap();
        let direct = oracle_vertex(&red.instance).unwrap().solution.weight
            == oracle_edge(&inst).unwrap().solution.weight + r(k as i128);
        t.add(format!("#{i}"), &v, direct);
    }
    check("4e", "line graph: vertex optimum = edge optimum + |U|", t.pass(100), t.detail())
}

fn criterion_5() -> Check {
    let mut rng = seeded(50);
    let (mut count, mut bad) = (0, 0);
    for _ in 0..220 {
        let n = rng.random_range(1..=11);
        let p = rng.random_range(0.05..0.6);
        let g = random_connected(&mut rng, n, p);
        let k = rng.random_range(1..=n.min(5));
        let inst = SteinerInstance::unit_edge(g, random_terminals(&mut rng, n, k)).unwrap();
        let vinst = unweighted_bridge(&inst).unwrap();
        let e = oracle_edge(&inst).unwrap().solution.weight;
        let v = oracle_vertex(&vinst).unwrap().solution.weight;
        if e != v - Rational::ONE {
            bad += 1;
        }
        count += 1;
    }
    check(
        "5",
        "unweighted bridge: edge optimum = vertex optimum - 1",
        bad == 0 && count >= 200,
        format!("{count} instances, {bad} mismatches"),
    )
}

/// Connected graph of maximum degree at most 3.
fn random_subcubic(rng: &mut ChaCha8Rng, n: usize, extra: usize) -> Graph {
    let mut deg = vec![0usize; n];
    let mut es = Vec::new();
    for v in 1..n {
        let cands: Vec<usize> = (0..v).filter(|&u| deg[u] < 3).collect();
        let u = cands[rng.random_range(0..cands.len())];
        deg[u] += 1;
        deg[v] += 1;
        es.push((u, v));
    }
    for _ in 0..extra * 4 {
        if es.len() >= n - 1 + extra {
            break;
        }
        let (u, v) = (rng.random_range(0..n), rng.random_range(0..n));
        if u != v && deg[u] < 3 && deg[v] < 3 && !es.contains(&(u.min(v), u.max(v))) && !es.contains(&(u.max(v), u.min(v))) {
            deg[u] += 1;
            deg[v] += 1;
            es.push((u.min(v), u.max(v)));
        }
    }
    Graph::new(n, es).unwrap()
}

/// Paths of the given internal lengths glued between `skeleton` edges.
fn subdivide_with(skeleton_n: usize, skeleton: &[(usize, usize)], lengths: &[usize]) -> Graph {
    let mut es = Vec::new();
    let mut next = skeleton_n;
    for (&(u, v), &len) in skeleton.iter().zip(lengths) {
        let mut prev = u;
        for _ in 0..len {
            es.push((prev, next));
            prev = next;
            next += 1;
        }
        es.push((prev, v));
    }
    Graph::new(next, es).unwrap()
}

/// A member of the sparse class with exactly `r` degree-3 vertices: the
/// branch vertices sit on a cycle (r >= 3) or a path, each with a pendant
/// path, and every skeleton edge gets at least `2^r` internal vertices.
fn sparse_member(rng: &mut ChaCha8Rng, r: usize) -> Graph {
    let gap = |rng: &mut ChaCha8Rng| (1usize << r) + rng.random_range(0..3);
    match r {
        0 => {
            let n = rng.random_range(3..=14);
            if rng.random_bool(0.5) { Graph::path(n) } else { Graph::cycle(n) }
        }
        1 => {
            // spider: centre 0 with three legs
            let sk = [(0, 1), (0, 2), (0, 3)];
            let ls: Vec<usize> = (0..3).map(|_| rng.random_range(0..4)).collect();
            subdivide_with(4, &sk, &ls)
        }
        2 => {
            // theta between 0 and 1
            let sk = [(0, 1), (0, 1), (0, 1)];
            let ls: Vec<usize> = (0..3).map(|_| gap(rng)).collect();
            subdivide_with(2, &sk, &ls)
        }
        _ => {
            let cyclic = rng.random_bool(0.5);
            let mut sk: Vec<(usize, usize)> = (0..r - 1).map(|i| (i, i + 1)).collect();
            if cyclic {
                sk.push((r - 1, 0));
            }
            let mut ls: Vec<usize> = sk.iter().map(|_| gap(rng)).collect();
            // pendants: one per branch vertex, two at path ends
            let mut leaf = r;
            for b in 0..r {
                let need = if cyclic || (b != 0 && b != r - 1) { 1 } else { 2 };
                for _ in 0..need {
                    sk.push((b, leaf));
                    ls.push(rng.random_range(0..2));
                    leaf += 1;
                }
            }
            subdivide_with(leaf, &sk, &ls)
        }
    }
}

fn criterion_6() -> Check {
    let mut rng = seeded(60);
    let (mut rules, mut rules_bad) = (0, 0);
    for _ in 0..120 {
        let n = rng.random_range(2..=14);
        let extra = rng.random_range(0..=3);
        let g = random_subcubic(&mut rng, n, extra);
        let k = rng.random_range(1..=n.min(5));
        let inst = random_edge_instance(&mut rng, g, k).unwrap();
        let pre = preprocess_rules123(&inst).unwrap();
        let orig = oracle_edge(&inst).unwrap().solution.weight;
        let red = oracle_edge(&pre.instance).unwrap().solution;
        let lifted = pre.lift(&inst, &red).unwrap();
        if orig != red.weight + pre.offset || lifted.weight != orig || lifted.validate(&inst).is_err() {
            rules_bad += 1;
        }
        rules += 1;
    }
    let (mut members, mut sparse_bad, mut by_r) = (0, 0, [0usize; 5]);
    for i in 0..40 {
        let r = i % 5;
        let g = sparse_member(&mut rng, r);
        assert!(in_sparse_class(&g), "generator left the class (r={r})");
        let branch = (0..g.n()).filter(|&v| g.degree(v) == 3).count();
        assert_eq!(branch, r);
        let n = g.n();
        // keep at most 14 non-terminals so the oracle stays cheap
        let k = rng.random_range(n.saturating_sub(14).max(2).min(n)..=n.saturating_sub(10).max(2).min(n));
        let w = random_weights(&mut rng, g.m());
        let ts = random_terminals(&mut rng, n, k);
        let inst = SteinerInstance::edge(g.clone(), ts, EdgeWeighting::new(&g, w).unwrap()).unwrap();
        let got = solve_sparse_class(&inst).unwrap();
        got.solution.validate(&inst).unwrap();
        let want = oracle_edge(&inst).unwrap();
        assert_eq!(want.algorithm, Algorithm::OracleEdge);
        if got.solution.weight != want.solution.weight {
            sparse_bad += 1;
        }
        members += 1;
        by_r[r] += 1;
    }
    check(
        "6",
        "rules R1-R3 keep the optimum; sparse solver equals edge oracle",
        rules_bad == 0 && sparse_bad == 0 && rules >= 100 && members >= 20,
        format!(
            "rules {rules} instances, {rules_bad} mismatches; sparse {members} members (r=0..4: {by_r:?}), {sparse_bad} mismatches"
        ),
    )
}

fn criterion_7() -> Check {
    let claw = make_named("claw").unwrap();
    let net = make_named("net").unwrap();
    let k3 = make_named("K3").unwrap();
    let mut bad = Vec::new();
    for h in 2..=3 {
        let g = gen_netwall(h);
        if contains_induced(&g, &claw).unwrap().is_some() {
            bad.push(format!("net-wall {h} has a claw"));
        }
        if contains_induced(&g, &net).unwrap().is_none() {
            bad.push(format!("net-wall {h} has no net"));
        }
    }
    for h in 2..=6 {
        let g = gen_wall(h);
        if contains_induced(&g, &k3).unwrap().is_some() || g.max_degree() != 3 {
            bad.push(format!("wall {h}"));
        }
    }
    let mut rng = seeded(70);
    let mut cographs = 0;
    for i in 0..220 {
        let n = 2 + i % 11;
        let g = random_cograph(&mut rng, n);
        let ok = complement_disconnected(&g)
            && match spanning_complete_bipartite(&g) {
                Some((a, b)) => {
                    let mut all: Vec<usize> = a.iter().chain(&b).copied().collect();
                    all.sort_unstable();
                    !a.is_empty()
                        && !b.is_empty()
                        && all == (0..n).collect::<Vec<_>>()
                        && a.iter().all(|&x| b.iter().all(|&y| g.has_edge(x, y)))
                }
                None => false,
            };
        if !ok {
            bad.push(format!("cograph #{i}"));
        }
        cographs += 1;
    }
    check(
        "7",
        "structural facts: net-walls, walls, cographs",
        bad.is_empty() && cographs >= 200,
        format!("net-wall h2-3, wall h2-6, {cographs} cographs; failures {bad:?}"),
    )
}

fn main() -> ExitCode {
    let start = Instant::now();
    let mut checks = vec![criterion_1(), criterion_2(), criterion_3(), criterion_4a(), criterion_4b()];
    let (c, c2) = criterion_4c();
    let (d, d2) = criterion_4d();
    checks.extend([c, c2, d, d2, criterion_4e(), criterion_5(), criterion_6(), criterion_7()]);

    let four: Vec<&Check> = checks.iter().filter(|c| ["4a", "4b", "4c", "4d", "4e"].contains(&c.id)).collect();
    let four_pass = four.iter().all(|c| c.pass);
    for c in &checks {
        println!("{} {:<4} {}: {}", if c.pass { "PASS" } else { "FAIL" }, c.id, c.title, c.detail);
    }
    println!(
        "{} 4    gadget certificates (4a-4e)",
        if four_pass { "PASS" } else { "FAIL" }
    );
    let unexpected: Vec<&str> = checks.iter().filter(|c| !c.pass && !KNOWN_RED.contains(&c.id)).map(|c| c.id).collect();
    let known: Vec<&str> = checks.iter().filter(|c| !c.pass && KNOWN_RED.contains(&c.id)).map(|c| c.id).collect();
    println!(
        "acceptance: {} checks, known red {known:?}, unexpected failures {unexpected:?}, {:.1} s",
        checks.len(),
        start.elapsed().as_secs_f64()
    );
    if unexpected.is_empty() { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
