//! Reduction rules on a subcubic graph and the solver for graphs whose
//! degree-3 vertices are far apart.

use steiner_core::solvers::{in_sparse_class, oracle_edge, preprocess_rules123, solve_sparse_class};
use steiner_core::{Graph, SteinerInstance};

fn main() -> steiner_core::Result<()> {
    // theta graph: two branch vertices joined by three long paths
    let mut es = vec![];
    let mut next = 2;
    for len in [4, 5, 6] {
        let mut prev = 0;
        for _ in 0..len {
            es.push((prev, next));
            prev = next;
            next += 1;
        }
        es.push((prev, 1));
    }
    let theta = Graph::new(next, es)?;
    println!("in class: {}", in_sparse_class(&theta));
    let inst = SteinerInstance::unit_edge(theta, [2, 7, 13])?;
    let pre = preprocess_rules123(&inst)?;
    for step in &pre.trace {
        println!("  {step}");
    }
    println!("reduced to {} vertices, offset {}", pre.instance.graph().n(), pre.offset);
    let rep = solve_sparse_class(&inst)?;
    println!("sparse {}  oracle {}", rep.solution.weight, oracle_edge(&inst)?.solution.weight);
    Ok(())
}
