//! Acceptance gate: one test per criterion, each printing a PASS/FAIL line.
//!
//! Criteria 1 and 7 currently fail on a single known mismatch: the
//! L_{2,2}^{a,b} family at parameter product 1/4 computes dim M = 2 where the
//! cited table says 1.  The computation is confirmed by independent solvers;
//! the expected value is kept as cited so the discrepancy stays visible.

use std::fs;
use std::process::Command;

use superschur::catalog::{all_entries, heisenberg_even, heisenberg_odd};
use superschur::multiplier::{
    d2_matrix, d3_matrix, multiplier, multiplier_total_unblocked, s_invariant, stem_cover,
};
use superschur::superalgebra::{GradedDim, LieSuperAlgebra};
use superschur::verify;

fn finish(criterion: &str, failures: Vec<String>) {
    if failures.is_empty() {
        println!("{criterion}: PASS");
    } else {
        println!("{criterion}: FAIL ({} problem(s))", failures.len());
        panic!("{criterion} failed:\n  {}", failures.join("\n  "));
    }
}

/// Criterion 1: the computed multiplier totals reproduce the cited tables for
/// all twenty-seven table instances (six families of named algebras plus the
/// small Heisenberg sums).
#[test]
fn criterion_1_multiplier_table_reproduction() {
    const TABLE_TAGS: [&str; 5] = ["thm4.1", "thm4.2", "thm4.3", "thm4.5", "thm4.6"];
    let mut failures = Vec::new();
    let mut seen = 0;
    for entry in all_entries() {
        let expected = entry.expected.as_ref().unwrap();
        if !TABLE_TAGS.contains(&expected.tag) {
            continue;
        }
        seen += 1;
        let computed = multiplier(&entry.algebra).total();
        if computed != expected.multiplier_total {
            failures.push(format!(
                "{}: cited dim M = {}, computed {}",
                entry.display_key(),
                expected.multiplier_total,
                computed
            ));
        }
    }
    if seen != 27 {
        failures.push(format!("expected 27 table instances, found {seen}"));
    }
    finish("criterion 1 (multiplier table reproduction)", failures);
}

/// Criterion 2: closed-form multiplier dimensions for the Heisenberg
/// families, and the graded kernel dimensions of the cover of H_2.
#[test]
fn criterion_2_closed_form_formulas() {
    let mut failures = Vec::new();
    let even_cases = [
        ((0, 1), 0),
        ((1, 0), 2),
        ((0, 2), 2),
        ((1, 1), 3),
        ((2, 0), 5),
        ((1, 2), 7),
        ((0, 3), 5),
    ];
    for ((m, n), expected) in even_cases {
        let computed = multiplier(&heisenberg_even(m, n).unwrap()).total();
        if computed != expected {
            failures.push(format!("dim M(H({m},{n})): expected {expected}, computed {computed}"));
        }
    }
    for n in 1..=3usize {
        let expected = if n == 1 { 2 } else { 2 * n * n - 1 };
        let computed = multiplier(&heisenberg_odd(n).unwrap()).total();
        if computed != expected {
            failures.push(format!("dim M(H_{n}): expected {expected}, computed {computed}"));
        }
    }
    let h2 = heisenberg_odd(2).unwrap();
    let graded = multiplier(&h2).multiplier;
    if graded != GradedDim::new(4, 3) {
        failures.push(format!("graded M(H_2): expected (4 | 3), computed {graded}"));
    }
    let kernel = stem_cover(&h2).kernel_subspace().dims();
    if kernel != GradedDim::new(4, 3) {
        failures.push(format!("cover kernel of H_2: expected (4 | 3), computed {kernel}"));
    }
    finish("criterion 2 (closed-form formulas)", failures);
}

/// Criterion 3: the classification s-values on the catalog's representative
/// instances: s = 1 exactly at L_{5,0}^2, s = 2 at the eleven listed
/// representatives, s = 0 exactly at the H(1,0) (+ abelian) instances.
#[test]
fn criterion_3_classification_s_values() {
    let mut failures = Vec::new();
    let mut by_value: Vec<(String, i64)> = Vec::new();
    for entry in all_entries() {
        let Some(expected) = entry.expected.as_ref().unwrap().s_value else {
            continue;
        };
        let computed = s_invariant(&entry.algebra);
        if computed != expected {
            failures.push(format!(
                "s({}): expected {expected}, computed {computed}",
                entry.display_key()
            ));
        }
        by_value.push((entry.display_key(), computed));
    }
    if by_value.len() != 15 {
        failures.push(format!("expected 15 instances with cited s, found {}", by_value.len()));
    }
    let keys_with = |v: i64| -> Vec<&str> {
        by_value
            .iter()
            .filter(|(_, s)| *s == v)
            .map(|(k, _)| k.as_str())
            .collect()
    };
    if keys_with(1) != vec!["L_{5,0}^2"] {
        failures.push(format!("s = 1 set: expected [L_{{5,0}}^2], got {:?}", keys_with(1)));
    }
    if keys_with(2).len() != 11 {
        failures.push(format!("s = 2 set has {} members, expected 11", keys_with(2).len()));
    }
    let zeros = keys_with(0);
    if zeros != vec!["H(1,0)", "H(1,0)+A(1|0)", "H(1,0)+A(0|1)"] {
        failures.push(format!("s = 0 set: expected the H(1,0) instances, got {zeros:?}"));
    }
    finish("criterion 3 (classification s-values)", failures);
}

/// Criterion 4: structural properties over the catalog, all pairwise direct
/// sums, and the central quotients of all of those: the degree-3 differential
/// composes to zero with the degree-2 one, and the parity-blocked homology
/// total agrees with the unblocked computation.  Additivity over direct sums
/// and the dimension bounds are asserted from the verification suite.
#[test]
fn criterion_4_property_suite() {
    let mut failures = Vec::new();
    let entries = all_entries();
    let mut targets: Vec<(String, LieSuperAlgebra)> = Vec::new();
    for entry in &entries {
        targets.push((entry.display_key(), entry.algebra.clone()));
    }
    for i in 0..entries.len() {
        for j in i..entries.len() {
            let label = format!("{}+{}", entries[i].display_key(), entries[j].display_key());
            let sum = LieSuperAlgebra::direct_sum(&entries[i].algebra, &entries[j].algebra);
            targets.push((label, sum));
        }
    }
    let mut quotients: Vec<(String, LieSuperAlgebra)> = Vec::new();
    for (label, l) in &targets {
        let q = l.quotient(&l.center()).expect("the center is a graded ideal");
        quotients.push((format!("({label})/Z"), q));
    }
    targets.extend(quotients);
    for (label, l) in &targets {
        if !d2_matrix(l).mul(&d3_matrix(l)).is_zero() {
            failures.push(format!("{label}: d2 . d3 != 0"));
        }
        let blocked = multiplier(l).total();
        let unblocked = multiplier_total_unblocked(l);
        if blocked != unblocked {
            failures.push(format!(
                "{label}: blocked homology total {blocked} != unblocked {unblocked}"
            ));
        }
    }
    for r in verify::check_direct_sum_additivity() {
        if !r.pass {
            failures.push(format!("{}: expected {}, computed {}", r.id, r.expected, r.computed));
        }
    }
    for r in verify::check_bounds() {
        if !r.pass {
            failures.push(format!("{}: expected {}, computed {}", r.id, r.expected, r.computed));
        }
    }
    finish("criterion 4 (property suite)", failures);
}

/// Criterion 5: stem cover postconditions for every catalog entry.
#[test]
fn criterion_5_stem_covers() {
    let mut failures = Vec::new();
    for entry in all_entries() {
        let key = entry.display_key();
        let l = &entry.algebra;
        let m = multiplier(l);
        let cover = stem_cover(l);
        let k = &cover.cover;
        let w = cover.kernel_subspace();
        if !k.validate().is_ok() {
            failures.push(format!("{key}: cover violates the structure axioms"));
        }
        if w.dims() != m.multiplier {
            failures.push(format!(
                "{key}: kernel dims {} != multiplier dims {}",
                w.dims(),
                m.multiplier
            ));
        }
        if !k.center().contains_subspace(&w) {
            failures.push(format!("{key}: kernel is not central in the cover"));
        }
        if !k.derived_subalgebra().contains_subspace(&w) {
            failures.push(format!("{key}: kernel is not inside the derived subalgebra"));
        }
        match k.quotient(&w) {
            Ok(q) if q.structure_equal(l) => {}
            _ => failures.push(format!("{key}: cover quotient does not reproduce the algebra")),
        }
        if k.total_dim() != l.total_dim() + m.total() {
            failures.push(format!(
                "{key}: dim K = {} but dim L + dim M = {}",
                k.total_dim(),
                l.total_dim() + m.total()
            ));
        }
    }
    finish("criterion 5 (stem covers)", failures);
}

/// Criterion 6: completeness of the s-value classifications and the
/// nonexistence statements cannot be established by finite computation, and
/// this artifact does not pretend otherwise.  Their place is taken by the
/// property suites (criteria 4 and 5) and representative-instance checks
/// (criterion 3).  This test pins that substitution: no check id claims
/// completeness or nonexistence, and the substitute machinery is present at
/// the expected sizes.
#[test]
fn criterion_6_nonreproducible_content_acknowledged() {
    let mut failures = Vec::new();
    let report = verify::run_all();
    let ids: Vec<&str> = report.results.iter().map(|r| r.id.as_str()).collect();
    for banned in ["completeness", "nonexistence", "classification-complete"] {
        if ids.iter().any(|id| id.contains(banned)) {
            failures.push(format!("a check id claims `{banned}`"));
        }
    }
    let count_prefix = |prefix: &str| ids.iter().filter(|id| id.starts_with(prefix)).count();
    let expected_counts = [
        ("thm4.9/s(", 1),
        ("thm4.10/s(", 11),
        ("thm3.4/additivity(", 595),
        ("complex/d2d3(", 33),
        ("complex/blocked(", 33),
        ("cover/postconditions(", 33),
        ("thm3.9/bound(", 33),
        ("thm3.1/equality-iff-abelian(", 54),
    ];
    for (prefix, expected) in expected_counts {
        let got = count_prefix(prefix);
        if got != expected {
            failures.push(format!("{prefix}...): expected {expected} checks, found {got}"));
        }
    }
    finish("criterion 6 (nonreproducible content acknowledged)", failures);
}

/// Criterion 7: the command-line contract: `verify-paper` exits 0 with zero
/// failures, emit/parse round-trips every catalog entry, and reports are
/// byte-identical across runs.
#[test]
fn criterion_7_cli_contract() {
    let mut failures = Vec::new();
    for entry in all_entries() {
        let text = superschur::format::emit_algebra(&entry.algebra);
        match superschur::format::parse_algebra(&text) {
            Ok(parsed) if parsed.structure_equal(&entry.algebra) => {}
            Ok(_) => failures.push(format!(
                "{}: parse(emit) is not structure-equal",
                entry.display_key()
            )),
            Err(e) => failures.push(format!("{}: emitted file fails to parse: {e}", entry.display_key())),
        }
    }
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let path = dir.path().join(name);
        let output = Command::new(env!("CARGO_BIN_EXE_superschur"))
            .arg("verify-paper")
            .arg("--json")
            .arg(&path)
            .output()
            .expect("binary runs");
        (output, fs::read(&path).expect("report written"))
    };
    let (first, first_json) = run("a.json");
    let (second, second_json) = run("b.json");
    if first_json != second_json {
        failures.push("verify-paper --json is not byte-identical across runs".to_string());
    }
    if first.stdout != second.stdout {
        failures.push("verify-paper stdout differs across runs".to_string());
    }
    match first.status.code() {
        Some(0) => {}
        code => failures.push(format!(
            "verify-paper exit code: expected 0, got {code:?} \
             (the L_{{2,2}}^{{a,b}} table value at parameter product 1/4 does not reproduce)"
        )),
    }
    finish("criterion 7 (CLI contract)", failures);
}

/// The two red criteria come from one root cause.  Pin that equivalence so a
/// regression elsewhere cannot hide behind the known mismatch.
#[test]
fn known_failures_are_exactly_the_quarter_product_entry() {
    let report = verify::run_all();
    let failing: Vec<&str> = report
        .results
        .iter()
        .filter(|r| !r.pass)
        .map(|r| r.id.as_str())
        .collect();
    assert_eq!(failing, ["thm4.2/M(L_{2,2}^{a,b}@1/2,1/2)"]);
}
