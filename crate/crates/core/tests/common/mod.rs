#![allow(dead_code)]

use std::path::PathBuf;

pub fn fixture(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name);
    std::fs::read_to_string(&p).unwrap_or_else(|e| panic!("{}: {e}", p.display()))
}

/// Fixture rows `<KIND> <lhs> -> <outcome>   # note`, comments dropped.
pub fn rows(text: &str, kind: &str) -> Vec<(String, String)> {
    text.lines()
        .filter_map(|l| l.strip_prefix(kind))
        .map(|l| {
            let body = l.split('#').next().unwrap();
            let (lhs, out) = body.split_once("->").expect("row needs ->");
            (lhs.trim().to_string(), out.trim().to_string())
        })
        .collect()
}
