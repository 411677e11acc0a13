//! The cross-check suite: every closed form and construction in this crate
//! compared against the brute-force [`crate::oracle`] routes over bounded
//! ranges, reported one named check at a time.
//!
//! The suite accepts an optional fault injection ([`Mutation`]) that perturbs
//! a single entry of one descent matrix in the matrix data the checks consume.
//! With a fault injected the matrix-driven checks must fail; this is how the
//! suite demonstrates it is actually sensitive to the matrices.

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geometry::{
    check_non_right, descendant_area, descendant_plane, descendant_points,
    descendant_triangle_metrics, triangle_radii_from_vectors,
};
use crate::inradius::{count_with_inradius, enumerate_with_inradius};
use crate::oracle;
use crate::ppt::{validate_triple, Ppt};
use crate::quad::silver_power;
use crate::radii::{chain_circumradius, chain_inradius, child_circumradius, child_inradius};
use crate::tree::{
    self, a_chain_matches_f1n, descend, descend_path, enumerate_tree, matrix_power, parent,
    path_of, Letter, Mat3, TreePath,
};
use crate::Rational;

/// Ranges the suite sweeps. The defaults keep a full run in the seconds.
#[derive(Debug, Clone, Copy)]
pub struct Bounds {
    /// Hypotenuse bound for tree-wide sweeps.
    pub max_z: u64,
    /// Exponent bound for matrix powers and chain formulas.
    pub max_n: u64,
    /// Inradius bound for the counting theorem.
    pub max_r: u64,
    /// Number of random paths for the round-trip check.
    pub path_samples: usize,
    /// Maximum length of those paths.
    pub max_path_len: usize,
}

impl Default for Bounds {
    fn default() -> Bounds {
        Bounds {
            max_z: 10_000,
            max_n: 30,
            max_r: 500,
            path_samples: 10_000,
            max_path_len: 25,
        }
    }
}

/// A single-entry perturbation of one descent matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mutation {
    pub letter: Letter,
    pub row: usize,
    pub col: usize,
    pub delta: i64,
}

fn matrix_with_mutation(letter: Letter, mutation: Option<Mutation>) -> Mat3 {
    let base = tree::base_matrix(letter);
    match mutation {
        Some(m) if m.letter == letter => {
            let mut rows = base.rows().clone();
            rows[m.row][m.col] += BigInt::from(m.delta);
            Mat3::from_rows(rows)
        }
        _ => base,
    }
}

/// Outcome of one named check.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn pass(name: &'static str, detail: String) -> CheckOutcome {
        CheckOutcome {
            name,
            passed: true,
            detail,
        }
    }

    fn fail(name: &'static str, detail: String) -> CheckOutcome {
        CheckOutcome {
            name,
            passed: false,
            detail,
        }
    }
}

/// A named, independently runnable check.
pub struct Check {
    pub name: &'static str,
    runner: Box<dyn Fn() -> CheckOutcome + Send + Sync>,
}

impl Check {
    pub fn run(&self) -> CheckOutcome {
        (self.runner)()
    }
}

/// Build the full suite for the given bounds.
pub fn all_checks(bounds: Bounds, mutation: Option<Mutation>) -> Vec<Check> {
    vec![
        Check {
            name: "tree-coverage",
            runner: Box::new(move || check_tree_coverage(bounds.max_z)),
        },
        Check {
            name: "descent-action",
            runner: Box::new(move || check_descent_action(bounds.max_z.min(2_000), mutation)),
        },
        Check {
            name: "matrix-powers",
            runner: Box::new(move || check_matrix_powers(bounds.max_n, mutation)),
        },
        Check {
            name: "silver-powers",
            runner: Box::new(move || check_silver_powers(200)),
        },
        Check {
            name: "f-parametrization",
            runner: Box::new(move || check_f_parametrization(500)),
        },
        Check {
            name: "radius-recurrences",
            runner: Box::new(move || check_radius_recurrences(bounds.max_z)),
        },
        Check {
            name: "chain-radii",
            runner: Box::new(move || check_chain_radii(bounds.max_n)),
        },
        Check {
            name: "inradius-count",
            runner: Box::new(move || check_inradius_count(bounds.max_r)),
        },
        Check {
            name: "descendant-geometry",
            runner: Box::new(move || check_descendant_geometry(bounds.max_z)),
        },
        Check {
            name: "path-roundtrip",
            runner: Box::new(move || {
                check_path_roundtrip(bounds.path_samples, bounds.max_path_len)
            }),
        },
    ]
}

/// Run the whole suite in order.
pub fn run_all(bounds: Bounds, mutation: Option<Mutation>) -> Vec<CheckOutcome> {
    all_checks(bounds, mutation).iter().map(Check::run).collect()
}

/// Breadth-first tree enumeration reproduces the Euclid-pair scan exactly,
/// with no duplicates.
pub fn check_tree_coverage(max_z: u64) -> CheckOutcome {
    const NAME: &str = "tree-coverage";
    let mut seen = std::collections::BTreeSet::new();
    let mut nodes = 0usize;
    for (path, node) in enumerate_tree(max_z) {
        nodes += 1;
        if !seen.insert(node.clone()) {
            return CheckOutcome::fail(NAME, format!("duplicate node {node} at path {path}"));
        }
    }
    let expected: std::collections::BTreeSet<Ppt> =
        oracle::scan_ppt_by_hypotenuse(max_z).into_iter().collect();
    if expected.len() != nodes {
        return CheckOutcome::fail(
            NAME,
            format!(
                "tree found {nodes} triples with z <= {max_z}, the Euclid scan found {}",
                expected.len()
            ),
        );
    }
    if let Some(missing) = expected.difference(&seen).next() {
        return CheckOutcome::fail(NAME, format!("Euclid-scan triple {missing} missing from tree"));
    }
    CheckOutcome::pass(
        NAME,
        format!("BFS over z <= {max_z} matches the Euclid-pair scan, {nodes} nodes, no duplicates"),
    )
}

/// `descend` is exactly the action of the descent matrices, and climbing back
/// with `parent` returns to the starting node with the same letter.
pub fn check_descent_action(max_z: u64, mutation: Option<Mutation>) -> CheckOutcome {
    const NAME: &str = "descent-action";
    let matrices = Letter::ALL.map(|l| matrix_with_mutation(l, mutation));
    let mut nodes = 0usize;
    for (_, node) in enumerate_tree(max_z) {
        nodes += 1;
        for letter in Letter::ALL {
            let raw = matrices[letter as usize].apply(&node.coords());
            let child = descend(&node, letter);
            if raw != child.coords() {
                return CheckOutcome::fail(
                    NAME,
                    format!("{letter}·{node} = {raw:?} does not match descend -> {child}"),
                );
            }
            match parent(&child) {
                Ok(Some((up, l))) if up == node && l == letter => {}
                other => {
                    return CheckOutcome::fail(
                        NAME,
                        format!("parent({child}) = {other:?}, expected ({node}, {letter})"),
                    )
                }
            }
        }
    }
    CheckOutcome::pass(
        NAME,
        format!("descent equals the matrix action and parent inverts it on {nodes} nodes"),
    )
}

/// Closed-form Aⁿ, Bⁿ, Cⁿ match n-fold exact products; determinants are
/// +1, −1, +1 and the inverses are integral.
pub fn check_matrix_powers(max_n: u64, mutation: Option<Mutation>) -> CheckOutcome {
    const NAME: &str = "matrix-powers";
    for letter in Letter::ALL {
        let base = matrix_with_mutation(letter, mutation);
        let expected_det = BigInt::from(match letter {
            Letter::B => -1,
            _ => 1,
        });
        if base.det() != expected_det {
            return CheckOutcome::fail(
                NAME,
                format!("det {letter} = {}, expected {expected_det}", base.det()),
            );
        }
        if base.inverse_unimodular().is_none() {
            return CheckOutcome::fail(NAME, format!("{letter} has no integer inverse"));
        }
        let mut product = Mat3::identity();
        for n in 0..=max_n {
            let closed = matrix_power(letter, n);
            if closed != product {
                return CheckOutcome::fail(
                    NAME,
                    format!("{letter}^{n} closed form disagrees with the repeated product"),
                );
            }
            product = product.mul(&base);
        }
    }
    CheckOutcome::pass(
        NAME,
        format!("closed forms equal repeated products for n <= {max_n}, B^n entries integral"),
    )
}

/// Binary exponentiation in Z[√2] agrees with the Pell linear recurrence and
/// all powers are units.
pub fn check_silver_powers(max_n: u64) -> CheckOutcome {
    const NAME: &str = "silver-powers";
    for n in 0..=max_n {
        let u = silver_power(n);
        let (p, q) = oracle::pell_recurrence(n);
        if u.a != p || u.b != q {
            return CheckOutcome::fail(
                NAME,
                format!("(3+2*sqrt(2))^{n} = {u} but the recurrence gives ({p}, {q})"),
            );
        }
        if u.norm() != BigInt::one() {
            return CheckOutcome::fail(NAME, format!("norm of (3+2*sqrt(2))^{n} is {}", u.norm()));
        }
    }
    CheckOutcome::pass(
        NAME,
        format!("binary exponentiation matches the Pell recurrence for n <= {max_n}"),
    )
}

/// Aⁿ⁻¹·(3,4,5) = F(1, n).
pub fn check_f_parametrization(max_n: u64) -> CheckOutcome {
    const NAME: &str = "f-parametrization";
    for n in 1..=max_n {
        if !a_chain_matches_f1n(n) {
            return CheckOutcome::fail(NAME, format!("A^{}·(3,4,5) != F(1,{n})", n - 1));
        }
    }
    CheckOutcome::pass(NAME, format!("A^(n-1)·(3,4,5) = F(1,n) for n <= {max_n}"))
}

/// The affine child-radius recurrences match radii computed directly on the
/// children, across the whole tree up to the bound.
pub fn check_radius_recurrences(max_z: u64) -> CheckOutcome {
    const NAME: &str = "radius-recurrences";
    let mut nodes = 0usize;
    for (_, node) in enumerate_tree(max_z) {
        nodes += 1;
        for letter in Letter::ALL {
            let child = descend(&node, letter);
            if child_inradius(&node, letter) != child.inradius() {
                return CheckOutcome::fail(
                    NAME,
                    format!("inradius recurrence fails at {node} letter {letter}"),
                );
            }
            if child_circumradius(&node, letter) != child.circumradius() {
                return CheckOutcome::fail(
                    NAME,
                    format!("circumradius recurrence fails at {node} letter {letter}"),
                );
            }
        }
    }
    CheckOutcome::pass(
        NAME,
        format!("child radii recurrences hold on {nodes} nodes (z <= {max_z}), all letters"),
    )
}

/// Chain closed forms match radii computed on naive matrix powers of the
/// root, and the B chain obeys its Pell-type recurrence.
pub fn check_chain_radii(max_n: u64) -> CheckOutcome {
    const NAME: &str = "chain-radii";
    for letter in Letter::ALL {
        let base = oracle::base_matrix(letter);
        let mut power = Mat3::identity();
        for n in 0..=max_n {
            let [x, y, z] = power.apply(&Ppt::root().coords());
            let triple = match validate_triple(x, y, z) {
                Ok(v) if !v.swapped => v.ppt,
                other => {
                    return CheckOutcome::fail(
                        NAME,
                        format!("{letter}^{n}·(3,4,5) failed validation: {other:?}"),
                    )
                }
            };
            if chain_inradius(letter, n) != triple.inradius() {
                return CheckOutcome::fail(
                    NAME,
                    format!(
                        "chain inradius formula for {letter}, n={n}: {} vs direct {}",
                        chain_inradius(letter, n),
                        triple.inradius()
                    ),
                );
            }
            if chain_circumradius(letter, n) != triple.circumradius() {
                return CheckOutcome::fail(
                    NAME,
                    format!("chain circumradius formula fails for {letter}, n={n}"),
                );
            }
            power = power.mul(&base);
        }
    }
    // Pinned small values.
    if chain_inradius(Letter::A, 7) != BigInt::from(8)
        || chain_inradius(Letter::C, 7) != BigInt::from(15)
        || chain_inradius(Letter::B, 1) != BigInt::from(6)
        || chain_circumradius(Letter::B, 1) != Rational::new(BigInt::from(29), BigInt::from(2))
    {
        return CheckOutcome::fail(NAME, "pinned chain values changed".into());
    }
    for n in 1..=max_n {
        let lhs = chain_inradius(Letter::B, n + 1);
        let rhs = BigInt::from(6) * chain_inradius(Letter::B, n) - chain_inradius(Letter::B, n - 1);
        if lhs != rhs {
            return CheckOutcome::fail(NAME, format!("B-chain Pell recurrence fails at n={n}"));
        }
    }
    CheckOutcome::pass(
        NAME,
        format!("chain formulas match naive powers for n <= {max_n}, all letters"),
    )
}

/// The divisor-count formula and the unitary-divisor construction agree with
/// the exhaustive inradius scan for every r up to the bound.
pub fn check_inradius_count(max_r: u64) -> CheckOutcome {
    const NAME: &str = "inradius-count";
    for r in 1..=max_r {
        let big_r = BigUint::from(r);
        let constructed = match enumerate_with_inradius(&big_r) {
            Ok(v) => v,
            Err(e) => return CheckOutcome::fail(NAME, format!("r={r}: {e}")),
        };
        let scanned = oracle::scan_ppt_by_inradius(r);
        if constructed != scanned {
            return CheckOutcome::fail(
                NAME,
                format!(
                    "r={r}: construction gives {} triples, the scan gives {}",
                    constructed.len(),
                    scanned.len()
                ),
            );
        }
        if BigUint::from(constructed.len()) != count_with_inradius(&big_r) {
            return CheckOutcome::fail(NAME, format!("r={r}: count formula disagrees"));
        }
    }
    CheckOutcome::pass(
        NAME,
        format!("2^omega counting and construction match the scan for r <= {max_r}"),
    )
}

/// The full exact package for descendant triangles, plus agreement between
/// the exact floats and the generic vector-formula floats within 1e-12.
pub fn check_descendant_geometry(max_z: u64) -> CheckOutcome {
    const NAME: &str = "descendant-geometry";
    let mut nodes = 0usize;
    for (_, node) in enumerate_tree(max_z) {
        nodes += 1;
        let x = node.x().clone();
        let y = node.y().clone();
        let xy = &x * &y;

        let points = descendant_points(&node);
        let plane = descendant_plane(&node);
        if plane.coeffs[..3] != [BigInt::from(2), BigInt::from(2), BigInt::from(-3)]
            || &plane.coeffs[3] != node.z()
        {
            return CheckOutcome::fail(NAME, format!("plane of {node} has the wrong coefficients"));
        }
        if !points.iter().all(|p| plane.contains(p)) {
            return CheckOutcome::fail(NAME, format!("a descendant point of {node} is off-plane"));
        }

        let u = points[1].sub(&points[0]);
        let v = points[2].sub(&points[0]);
        let cross = u.cross(&v);
        let expected_cross = [
            BigInt::from(8) * &xy,
            BigInt::from(8) * &xy,
            BigInt::from(-12) * &xy,
        ];
        if cross.0 != expected_cross {
            return CheckOutcome::fail(
                NAME,
                format!("edge cross product of {node} is not (8xy, 8xy, -12xy)"),
            );
        }

        let area = descendant_area(&node);
        if area.coeff != Rational::from_integer(BigInt::from(2) * &xy)
            || area.radicand != BigUint::from(17u32)
        {
            return CheckOutcome::fail(NAME, format!("area of {node} is not 2xy*sqrt(17)"));
        }

        let dots = check_non_right(&node);
        if dots.iter().any(|d| d == &BigInt::from(0)) {
            return CheckOutcome::fail(NAME, format!("right descendant triangle at {node}"));
        }

        let m = descendant_triangle_metrics(&node);
        if &m.inradius.p * &m.inradius.p - &m.d != BigInt::from(34) * &xy {
            return CheckOutcome::fail(NAME, format!("rationalization identity fails at {node}"));
        }
        if m.circumradius_sq.clone() * Rational::from_integer(BigInt::from(17))
            != Rational::from_integer(BigInt::from(81) * &m.d)
        {
            return CheckOutcome::fail(NAME, format!("17R^2 != 81D at {node}"));
        }

        let (r_f, big_r_f, area_f) =
            match triangle_radii_from_vectors(&m.points[0], &m.points[1], &m.points[2]) {
                Ok(v) => v,
                Err(e) => return CheckOutcome::fail(NAME, format!("{node}: {e}")),
            };
        let rel = |a: f64, b: f64| (a - b).abs() / b.abs().max(f64::MIN_POSITIVE);
        if rel(r_f, m.inradius_f64) > 1e-12 {
            return CheckOutcome::fail(
                NAME,
                format!("inradius floats diverge at {node}: {r_f} vs {}", m.inradius_f64),
            );
        }
        if rel(big_r_f, m.circumradius_f64) > 1e-12 {
            return CheckOutcome::fail(NAME, format!("circumradius floats diverge at {node}"));
        }
        if rel(area_f, m.area.to_f64()) > 1e-12 {
            return CheckOutcome::fail(NAME, format!("area floats diverge at {node}"));
        }
    }
    CheckOutcome::pass(
        NAME,
        format!("plane/area/angles/radii exact on {nodes} nodes (z <= {max_z}), floats within 1e-12"),
    )
}

/// Seeded random words round-trip through `descend_path` and `path_of`.
pub fn check_path_roundtrip(samples: usize, max_len: usize) -> CheckOutcome {
    const NAME: &str = "path-roundtrip";
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_9e37);
    let mut max_coord = BigInt::from(0);
    for _ in 0..samples {
        let len = rng.gen_range(0..=max_len);
        let letters: Vec<Letter> = (0..len)
            .map(|_| Letter::ALL[rng.gen_range(0..3)])
            .collect();
        let path = TreePath::from_letters(letters);
        let node = descend_path(&path);
        max_coord = max_coord.max(node.z().clone());
        let recovered = match path_of(&node) {
            Ok(p) => p,
            Err(e) => return CheckOutcome::fail(NAME, format!("path_of({node}): {e}")),
        };
        if recovered != path {
            return CheckOutcome::fail(
                NAME,
                format!("path {path} reached {node} but climbs back as {recovered}"),
            );
        }
        if descend_path(&recovered) != node {
            return CheckOutcome::fail(NAME, format!("round trip through {path} lost {node}"));
        }
    }
    CheckOutcome::pass(
        NAME,
        format!(
            "{samples} random words (len <= {max_len}) round-trip; largest hypotenuse {max_coord}"
        ),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_bounds() -> Bounds {
        Bounds {
            max_z: 500,
            max_n: 6,
            max_r: 40,
            path_samples: 50,
            max_path_len: 10,
        }
    }

    #[test]
    fn clean_suite_passes_on_small_bounds() {
        for outcome in run_all(small_bounds(), None) {
            assert!(outcome.passed, "{}: {}", outcome.name, outcome.detail);
        }
    }

    #[test]
    fn any_single_entry_mutation_is_detected() {
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
                    let action = check_descent_action(30, Some(mutation));
                    assert!(
                        !powers.passed || !action.passed,
                        "mutation of {letter}[{row}][{col}] went unnoticed"
                    );
                }
            }
        }
    }
}
