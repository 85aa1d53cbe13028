//! Hardness gadgets with their certificates checked by exact solving.

use steiner_core::gadgets::{
    gen_grid, reduce_complete, reduce_grid_to_wall, reduce_line_graph, reduce_subdivision, verify_certificate,
};
use steiner_core::{Graph, SteinerInstance};

fn main() -> steiner_core::Result<()> {
    let inst = SteinerInstance::unit_edge(Graph::cycle(6), [0, 2, 4])?;
    let sub = reduce_subdivision(&inst, 2)?;
    let comp = reduce_complete(&inst)?;
    let line = reduce_line_graph(&inst)?;
    for (name, red, cert) in [
        ("subdivide:2", &sub.instance, &sub.certificate),
        ("complete", &comp.instance, &comp.certificate),
        ("line", &line.instance, &line.certificate),
    ] {
        let v = verify_certificate(&inst, red, cert)?;
        println!("{name:<12} opt {} -> {}  holds {}", v.original_opt, v.reduced_opt, v.holds());
    }
    print!("{}", sub.certificate.render());

    // the exact wall relation can miss by one new edge per turn
    let grid = SteinerInstance::unit_edge(gen_grid(2, 2), [0, 3])?;
    let wall = reduce_grid_to_wall(&grid)?;
    let v = verify_certificate(&grid, &wall.instance, &wall.certificate)?;
    println!("grid->wall   opt {} -> {}  predicted {:?}", v.original_opt, v.reduced_opt, v.predicted);
    Ok(())
}
