//! Exact solvers on the 3x3 grid with the four corners as terminals.

use steiner_core::gadgets::gen_grid;
use steiner_core::solvers::{dp_terminals_edge, oracle_edge, oracle_vertex, unweighted_bridge};
use steiner_core::SteinerInstance;

fn main() -> steiner_core::Result<()> {
    let inst = SteinerInstance::unit_edge(gen_grid(3, 3), [0, 2, 6, 8])?;
    for rep in [oracle_edge(&inst)?, dp_terminals_edge(&inst)?] {
        println!("{:<16} weight {}  explored {}", rep.algorithm.to_string(), rep.solution.weight, rep.explored);
    }
    let tree = oracle_edge(&inst)?.solution;
    println!("tree edges {:?}", tree.edges);
    let vertex = oracle_vertex(&unweighted_bridge(&inst)?)?;
    println!("vertex optimum {} (edge optimum + 1)", vertex.solution.weight);
    Ok(())
}
