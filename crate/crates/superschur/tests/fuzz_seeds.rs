//! Runs the checked-in fuzz corpus through the same invariants the fuzz
//! targets assert, so the seeds cannot rot without a fuzzer installed.

use std::fs;
use std::path::PathBuf;

use superschur::catalog::{resolve_key, MAX_KEY_DIM};
use superschur::format::{emit_algebra, parse_algebra, parse_algebra_file};
use superschur::linalg::{format_rational, parse_rational};

fn corpus(target: &str) -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut seeds: Vec<(String, String)> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("corpus dir {} is readable: {e}", dir.display()))
        .map(|entry| {
            let path = entry.unwrap().path();
            let name = path.file_name().unwrap().to_string_lossy().into_owned();
            (name, fs::read_to_string(&path).expect("seeds are UTF-8"))
        })
        .collect();
    seeds.sort();
    assert!(!seeds.is_empty(), "no seeds for {target}");
    seeds
}

#[test]
fn parse_algebra_seeds_round_trip() {
    for (name, text) in corpus("parse_algebra") {
        let file = parse_algebra_file(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        let reparsed = parse_algebra(&emit_algebra(&file.algebra))
            .unwrap_or_else(|e| panic!("{name}: emitted file fails to parse: {e}"));
        assert!(reparsed.structure_equal(&file.algebra), "{name}: round trip drift");
    }
}

#[test]
fn catalog_key_seeds_resolve() {
    for (name, text) in corpus("catalog_key") {
        let algebra = resolve_key(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(algebra.total_dim() <= MAX_KEY_DIM, "{name}: over the size cap");
        assert!(algebra.validate().is_ok(), "{name}: invalid algebra");
    }
}

#[test]
fn rational_seeds_round_trip() {
    for (name, text) in corpus("rational") {
        let value = parse_rational(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        let again = parse_rational(&format_rational(&value)).unwrap();
        assert_eq!(value, again, "{name}: round trip drift");
    }
}
