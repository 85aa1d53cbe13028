//! Verdicts for a few pattern pairs and single patterns, with a hardness
//! witness where one exists.

use steiner_core::classify::{classify_pair, classify_single, hardness_witness};
use steiner_core::make_named;

fn main() -> steiner_core::Result<()> {
    for (a, b) in [("K3", "claw"), ("K4", "P3"), ("K5", "3P1"), ("C4", "P5"), ("K4", "K1_3")] {
        let v = classify_pair(&make_named(a)?, &make_named(b)?);
        println!("{}", v.record());
        if let Ok(w) = hardness_witness(&v) {
            let g = w.generate(3);
            println!("    witness member: {} vertices, free of both: {}", g.n(), w.check(3)?);
        }
    }
    for h in ["P4", "2P1+P4", "2P2", "C3", "claw"] {
        println!("{}", classify_single(&make_named(h)?).record());
    }
    Ok(())
}
