//! Seeded corpus generation and the instance file format.

use steiner_core::corpus::{random_cograph, random_connected, random_edge_instance, seeded};
use steiner_core::io::{parse_instance, render_instance, InstanceFile};
use steiner_core::patterns::{is_cograph, spanning_complete_bipartite};

fn main() -> steiner_core::Result<()> {
    let mut rng = seeded(2024);
    let g = random_connected(&mut rng, 6, 0.3);
    let mut file = InstanceFile::new(random_edge_instance(&mut rng, g, 3)?);
    file.name = Some("demo".into());
    let text = render_instance(&file);
    print!("{text}");
    assert_eq!(parse_instance(&text)?, file);

    let c = random_cograph(&mut rng, 8);
    let (a, b) = spanning_complete_bipartite(&c).expect("connected cograph");
    println!("cograph {} edges, P4-free {}, sides {a:?} | {b:?}", c.m(), is_cograph(&c));
    Ok(())
}
