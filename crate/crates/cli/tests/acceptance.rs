//! The acceptance suite. Each test is one release criterion, pinned at its
//! stated bound and tolerance, and prints a single PASS line with the
//! measured runtime when it holds. Run with
//! `cargo test -p berggren-cli --test acceptance`.

use std::process::{Command, Output};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use berggren_core::radii::{chain_circumradius, chain_inradius};
use berggren_core::tree::{descend_path, path_of, Letter, TreePath};
use berggren_core::verify::{
    check_chain_radii, check_descendant_geometry, check_descent_action, check_f_parametrization,
    check_inradius_count, check_matrix_powers, check_radius_recurrences, check_tree_coverage,
    CheckOutcome, Mutation,
};
use berggren_core::Rational;

fn berggren(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_berggren"))
        .args(args)
        .env_remove("BERGGREN_FORMAT")
        .output()
        .expect("binary runs")
}

fn report(criterion: &str, started: Instant, budget: Option<Duration>, detail: &str) {
    let elapsed = started.elapsed();
    println!("criterion {criterion}: PASS in {elapsed:.2?} — {detail}");
    if let Some(budget) = budget {
        assert!(
            elapsed <= budget,
            "criterion {criterion} exceeded its {budget:?} budget: {elapsed:?}"
        );
    }
}

fn assert_outcome(criterion: &str, outcome: &CheckOutcome) {
    assert!(
        outcome.passed,
        "criterion {criterion} failed — {}: {}",
        outcome.name, outcome.detail
    );
}

#[test]
fn criterion_01_inradius_35_reproduction() {
    let started = Instant::now();
    let out = berggren(&["inradius", "--r", "35"]);
    assert!(out.status.success());
    let triples: Vec<(String, String, String)> = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|line| {
            let v: Value = serde_json::from_str(line).unwrap();
            (
                v["x"].as_str().unwrap().to_string(),
                v["y"].as_str().unwrap().to_string(),
                v["z"].as_str().unwrap().to_string(),
            )
        })
        .collect();
    assert_eq!(
        triples,
        vec![
            ("119".into(), "120".into(), "169".into()),
            ("95".into(), "168".into(), "193".into()),
            ("1295".into(), "72".into(), "1297".into()),
            ("71".into(), "2520".into(), "2521".into()),
        ]
    );
    let count = berggren(&["inradius", "--r", "35", "--count-only"]);
    assert_eq!(String::from_utf8(count.stdout).unwrap().trim(), "4");
    report(
        "01 inradius-35",
        started,
        Some(Duration::from_secs(1)),
        "the four expected triples in z order, count 4",
    );
}

#[test]
fn criterion_02_inradius_count_theorem_to_2000() {
    let started = Instant::now();
    let outcome = check_inradius_count(2000);
    assert_outcome("02 inradius-count", &outcome);
    report(
        "02 inradius-count",
        started,
        Some(Duration::from_secs(30)),
        &outcome.detail,
    );
}

#[test]
fn criterion_03_tree_coverage_to_100_000() {
    let started = Instant::now();
    let outcome = check_tree_coverage(100_000);
    assert_outcome("03 tree-coverage", &outcome);
    report(
        "03 tree-coverage",
        started,
        Some(Duration::from_secs(30)),
        &outcome.detail,
    );
}

#[test]
fn criterion_04_closed_form_powers_to_60() {
    let started = Instant::now();
    let outcome = check_matrix_powers(60, None);
    assert_outcome("04 matrix-powers", &outcome);
    report("04 matrix-powers", started, None, &outcome.detail);
}

#[test]
fn criterion_05_f_parametrization_to_500() {
    let started = Instant::now();
    let outcome = check_f_parametrization(500);
    assert_outcome("05 f-parametrization", &outcome);
    report("05 f-parametrization", started, None, &outcome.detail);
}

#[test]
fn criterion_06_radius_recurrences_to_100_000() {
    let started = Instant::now();
    let outcome = check_radius_recurrences(100_000);
    assert_outcome("06 radius-recurrences", &outcome);
    report(
        "06 radius-recurrences",
        started,
        Some(Duration::from_secs(30)),
        &outcome.detail,
    );
}

#[test]
fn criterion_07_chain_formulas_to_50() {
    let started = Instant::now();
    let outcome = check_chain_radii(50);
    assert_outcome("07 chain-radii", &outcome);
    for n in 1..=50u64 {
        assert_eq!(chain_inradius(Letter::A, n), BigInt::from(n + 1));
        assert_eq!(chain_inradius(Letter::C, n), BigInt::from(2 * n + 1));
    }
    assert_eq!(chain_inradius(Letter::B, 1), BigInt::from(6));
    assert_eq!(
        chain_circumradius(Letter::B, 1),
        Rational::new(BigInt::from(29), BigInt::from(2))
    );
    report("07 chain-radii", started, None, &outcome.detail);
}

#[test]
fn criterion_08_descendant_geometry_to_10_000() {
    let started = Instant::now();
    let outcome = check_descendant_geometry(10_000);
    assert_outcome("08 descendant-geometry", &outcome);
    report(
        "08 descendant-geometry",
        started,
        Some(Duration::from_secs(60)),
        &outcome.detail,
    );
}

#[test]
fn criterion_09_path_roundtrip_10_000_samples() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce_97a9);
    let mut max_z = BigInt::from(0);
    for _ in 0..10_000 {
        let len = rng.gen_range(0..=25);
        let path = TreePath::from_letters(
            (0..len).map(|_| Letter::ALL[rng.gen_range(0..3)]).collect(),
        );
        let node = descend_path(&path);
        max_z = max_z.max(node.z().clone());
        let recovered = path_of(&node).expect("every node climbs back to the root");
        assert_eq!(recovered, path, "path mismatch for {node}");
        assert_eq!(descend_path(&recovered), node);
    }
    // Depth-25 words push hypotenuses past 10^15, so the squares checked
    // during validation exceed 10^30: the arithmetic is far outside u64/f64.
    assert!(max_z > BigInt::from(10u64.pow(15)), "largest z was {max_z}");
    report(
        "09 path-roundtrip",
        started,
        None,
        &format!("10000 random words round-trip exactly; largest hypotenuse {max_z}"),
    );
}

#[test]
fn criterion_10_verify_subcommand_and_mutation_sensitivity() {
    let started = Instant::now();

    let clean = berggren(&["verify"]);
    assert_eq!(
        clean.status.code(),
        Some(0),
        "verify at default bounds must exit 0: {}",
        String::from_utf8_lossy(&clean.stdout)
    );
    let text = String::from_utf8(clean.stdout).unwrap();
    assert!(text.contains("10/10 checks passed"), "{text}");

    // A single perturbed matrix entry must flip the suite to exit 1 and name
    // the broken proposition.
    let mutated = berggren(&[
        "verify", "--max-z", "300", "--max-n", "4", "--max-r", "20", "--paths", "20",
        "--mutate", "A,0,1,1",
    ]);
    assert_eq!(mutated.status.code(), Some(1));
    let text = String::from_utf8(mutated.stdout).unwrap();
    assert!(text.contains("FAIL"), "{text}");
    assert!(
        text.contains("FAIL matrix-powers") || text.contains("FAIL descent-action"),
        "the failing proposition must be named: {text}"
    );

    // Exhaustively: every entry of every matrix is load-bearing.
    for letter in Letter::ALL {
        for row in 0..3 {
            for col in 0..3 {
                let mutation = Mutation {
                    letter,
                    row,
                    col,
                    delta: 1,
                };
                let powers = check_matrix_powers(2, Some(mutation));
                let action = check_descent_action(50, Some(mutation));
                assert!(
                    !powers.passed || !action.passed,
                    "mutation of {letter}[{row}][{col}] went unnoticed"
                );
            }
        }
    }
    report(
        "10 verify-and-mutation",
        started,
        None,
        "verify exits 0 clean, 1 under any single-entry matrix mutation",
    );
}
