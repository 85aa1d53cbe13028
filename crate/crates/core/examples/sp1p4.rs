//! Vertex Steiner Tree on a random (P1+P4)-free graph, checked against the
//! oracle.

use steiner_core::corpus::{gen_random_in_class, random_vertex_instance, seeded};
use steiner_core::make_named;
use steiner_core::solvers::{oracle_vertex, solve_sp1p4};

fn main() -> steiner_core::Result<()> {
    let h = make_named("P1+P4")?;
    let mut rng = seeded(1);
    for seed in 0..5 {
        let g = gen_random_in_class(&[&h], 11, seed)?;
        let inst = random_vertex_instance(&mut rng, g, 4)?;
        let fast = solve_sp1p4(&inst, 1)?;
        let slow = oracle_vertex(&inst)?;
        println!(
            "seed {seed}: sp1p4 {} ({} explored)  oracle {} ({} explored)",
            fast.solution.weight, fast.explored, slow.solution.weight, slow.explored
        );
    }
    Ok(())
}
