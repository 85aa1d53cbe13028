//! Exact treewidth of walls and the Steiner DP over a min-fill
//! decomposition.

use steiner_core::corpus::{random_connected, random_edge_instance, seeded};
use steiner_core::gadgets::gen_wall;
use steiner_core::solvers::oracle_edge;
use steiner_core::treewidth::{exact_treewidth, heuristic_decomposition, steiner_dp_treewidth, NiceDecomposition};

fn main() -> steiner_core::Result<()> {
    for h in 2..=3 {
        let w = gen_wall(h);
        let (tw, _) = exact_treewidth(&w)?;
        println!("wall {h}: {} vertices, treewidth {tw}, min-fill width {}", w.n(), heuristic_decomposition(&w).width());
    }
    let mut rng = seeded(9);
    let g = random_connected(&mut rng, 12, 0.2);
    let inst = random_edge_instance(&mut rng, g, 5)?;
    let td = heuristic_decomposition(inst.graph());
    let nice = NiceDecomposition::from_decomposition(&td);
    println!("random graph: width {}, {} nice nodes", td.width(), nice.nodes.len());
    let dp = steiner_dp_treewidth(&inst, &td)?;
    println!("dp {}  oracle {}", dp.solution.weight, oracle_edge(&inst)?.solution.weight);
    print!("{}", td.to_pace(inst.graph().n()));
    Ok(())
}
