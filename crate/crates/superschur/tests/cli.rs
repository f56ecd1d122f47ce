//! End-to-end tests of the `superschur` binary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use superschur::catalog::{heisenberg_odd, resolve_key};
use superschur::format::{emit_algebra, parse_algebra_file};
use superschur::superalgebra::{Subspace, SuperVector};

fn superschur(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superschur"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is UTF-8")
}

fn write(path: &Path, text: &str) {
    fs::write(path, text).expect("scratch file writes");
}

#[test]
fn catalog_lists_every_entry() {
    let output = superschur(&["catalog"]);
    assert_eq!(output.status.code(), Some(0));
    let stdout = stdout_of(&output);
    // header plus 33 entries
    assert_eq!(stdout.lines().count(), 34);
    assert!(stdout.contains("H(0,1)"));
    assert!(stdout.contains("L_{2,2}^{a,b}@1/2,1/2"));
    assert!(stdout.contains("L_{2,3}^{d,g}@1,1"));
}

#[test]
fn multiplier_reports_h2() {
    let output = superschur(&["multiplier", "H_2"]);
    assert_eq!(output.status.code(), Some(0));
    let stdout = stdout_of(&output);
    assert!(stdout.contains("dims: (2 | 3)"));
    assert!(stdout.contains("dim M: 7"));
    assert!(stdout.contains("graded M: (4 | 3)"));
    assert!(stdout.contains("t: 6"));
    assert!(stdout.contains("s: 3"));
}

#[test]
fn multiplier_accepts_direct_sum_keys() {
    let output = superschur(&["multiplier", "H(1,0)\u{2295}A(1|0)"]);
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout_of(&output).contains("dim M: 4"));
}

#[test]
fn info_reports_series_and_center() {
    let output = superschur(&["info", "L_{4,0}"]);
    assert_eq!(output.status.code(), Some(0));
    let stdout = stdout_of(&output);
    assert!(stdout.contains("dims: (4 | 0)"));
    assert!(stdout.contains("center: (1 | 0) spanned by w0"));
    assert!(stdout.contains("lower central series: (4 | 0) -> (2 | 0) -> (1 | 0) -> (0 | 0)"));
    assert!(stdout.contains("nilpotency class: 3"));
}

#[test]
fn info_accepts_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h11.toml");
    write(&path, &emit_algebra(&resolve_key("H(1,1)").unwrap()));
    let output = superschur(&["info", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout_of(&output).contains("dims: (3 | 1)"));
}

#[test]
fn unknown_target_is_a_usage_error() {
    let output = superschur(&["multiplier", "Q_7"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr_of(&output).contains("neither a catalog key"));
}

#[test]
fn validate_accepts_a_good_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("heis.toml");
    write(
        &path,
        r#"name = "heis"
even = ["x1", "x2", "z"]
odd = []

[[bracket]]
left = "x1"
right = "x2"
value = [{ basis = "z", coeff = "1" }]
"#,
    );
    let output = superschur(&["validate", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout_of(&output).contains("ok: heis satisfies the structure axioms"));
}

#[test]
fn validate_flags_a_grading_violation() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("graded.toml");
    // [y,y] lands in the even part, so an odd target violates the grading
    write(
        &path,
        r#"name = "bad"
even = []
odd = ["y"]

[[bracket]]
left = "y"
right = "y"
value = [{ basis = "y", coeff = "1" }]
"#,
    );
    let output = superschur(&["validate", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(1));
    let stderr = stderr_of(&output);
    assert!(stderr.contains("violates the structure axioms"));
    assert!(stderr.contains("[grading]"));
}

#[test]
fn duplicate_names_are_a_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dup.toml");
    write(
        &path,
        r#"name = "dup"
even = ["x", "x"]
odd = []
"#,
    );
    let output = superschur(&["validate", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr_of(&output).contains("duplicate basis name"));
}

#[test]
fn missing_file_is_a_usage_error() {
    let output = superschur(&["validate", "/no/such/file.toml"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn cover_round_trips_through_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h2-cover.toml");
    let output = superschur(&["cover", "H_2", "--out", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout_of(&output).contains("kernel of dims (4 | 3)"));

    let file = parse_algebra_file(&fs::read_to_string(&path).unwrap()).unwrap();
    let cover = file.algebra;
    assert!(cover.validate().is_ok());
    assert_eq!(file.kernel.len(), 7);
    let kernel_vectors: Vec<SuperVector> = file
        .kernel
        .iter()
        .map(|name| {
            let i = cover.basis_index(name).expect("kernel names resolve");
            SuperVector::basis(cover.total_dim(), i)
        })
        .collect();
    let w = Subspace::span_graded(cover.dims(), &kernel_vectors);
    let quotient = cover.quotient(&w).unwrap();
    assert!(quotient.structure_equal(&heisenberg_odd(2).unwrap()));
}

#[test]
fn cover_prints_to_stdout_without_out() {
    let output = superschur(&["cover", "H(1,0)"]);
    assert_eq!(output.status.code(), Some(0));
    let file = parse_algebra_file(&stdout_of(&output)).unwrap();
    assert_eq!(file.kernel.len(), 2);
    assert!(file.algebra.validate().is_ok());
}

#[test]
fn verify_paper_is_deterministic_and_flags_the_known_mismatch() {
    let dir = tempfile::tempdir().unwrap();
    let first_path = dir.path().join("first.json");
    let second_path = dir.path().join("second.json");
    let first = superschur(&["verify-paper", "--json", first_path.to_str().unwrap()]);
    let second = superschur(&["verify-paper", "--json", second_path.to_str().unwrap()]);

    // exit 3: exactly one check disagrees with its cited value (see the
    // acceptance suite for the pinned failure set)
    assert_eq!(first.status.code(), Some(3));
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(
        fs::read(&first_path).unwrap(),
        fs::read(&second_path).unwrap()
    );

    let stdout = stdout_of(&first);
    assert!(stdout.contains("FAIL thm4.2/M(L_{2,2}^{a,b}@1/2,1/2)"));
    assert!(stdout.contains(", 1 failed"));

    let json = fs::read_to_string(&first_path).unwrap();
    assert!(json.contains("\"schema_version\": \"verify-report/1\""));
}
