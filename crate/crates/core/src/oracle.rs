//! Brute-force reference implementations for the cross-check suite.
//!
//! Nothing here reuses the closed forms or constructions it is meant to
//! check: matrix powers are repeated products of locally defined base
//! matrices, inradius scans test every factorization through full triple
//! validation, and Pell numbers come from the plain linear recurrence.
//! Oracles may be slow; exhaustiveness is their only contract.

use num_bigint::BigInt;
use num_integer::Integer;

use crate::ppt::{validate_triple, EuclidPair, Ppt};
use crate::tree::{Letter, Mat3};

/// All primitive triples with hypotenuse ≤ `z_bound`, generated from an
/// exhaustive Euclid-pair scan and sorted by (z, x).
pub fn scan_ppt_by_hypotenuse(z_bound: u64) -> Vec<Ppt> {
    let mut out = Vec::new();
    let bound = z_bound as u128;
    let mut m: u128 = 2;
    while m * m < bound {
        for n in 1..m {
            if (m - n) % 2 == 1 && m.gcd(&n) == 1 && m * m + n * n <= bound {
                let pair = EuclidPair::new(BigInt::from(m), BigInt::from(n))
                    .expect("scanned pair satisfies the Euclid conditions");
                out.push(pair.to_ppt());
            }
        }
        m += 1;
    }
    out.sort_by(|a, b| (a.z(), a.x()).cmp(&(b.z(), b.x())));
    out
}

/// All primitive triples with inradius exactly `r`, found by testing every
/// splitting r = n·d with no coprimality or parity shortcuts: each candidate
/// (m, n) = (n + d, n) goes through full validation instead.
pub fn scan_ppt_by_inradius(r: u64) -> Vec<Ppt> {
    assert!(r >= 1);
    let mut out = Vec::new();
    for n in 1..=r {
        if !r.is_multiple_of(n) {
            continue;
        }
        let d = r / n;
        let m = n as u128 + d as u128;
        let n = n as u128;
        let x = BigInt::from(m * m - n * n);
        let y = BigInt::from(2 * m * n);
        let z = BigInt::from(m * m + n * n);
        if let Ok(v) = validate_triple(x, y, z) {
            if v.ppt.inradius() == BigInt::from(r) {
                out.push(v.ppt);
            }
        }
    }
    out.sort_by(|a, b| (a.z(), a.x()).cmp(&(b.z(), b.x())));
    out
}

/// Local copies of the descent matrices, kept independent of the main tree
/// module on purpose.
pub fn base_matrix(letter: Letter) -> Mat3 {
    match letter {
        Letter::A => Mat3::from_i64([[1, -2, 2], [2, -1, 2], [2, -2, 3]]),
        Letter::B => Mat3::from_i64([[1, 2, 2], [2, 1, 2], [2, 2, 3]]),
        Letter::C => Mat3::from_i64([[-1, 2, 2], [-2, 1, 2], [-2, 2, 3]]),
    }
}

/// n-fold exact product of the base matrix of `letter`.
pub fn naive_matrix_power(letter: Letter, n: u64) -> Mat3 {
    naive_matrix_power_from(&base_matrix(letter), n)
}

/// n-fold exact product of an arbitrary base matrix.
pub fn naive_matrix_power_from(base: &Mat3, n: u64) -> Mat3 {
    let mut acc = Mat3::identity();
    for _ in 0..n {
        acc = acc.mul(base);
    }
    acc
}

/// (pₙ, qₙ) with (3 + 2√2)ⁿ = pₙ + qₙ√2, from the linear recurrence
/// pₖ₊₁ = 3pₖ + 4qₖ, qₖ₊₁ = 2pₖ + 3qₖ starting at (1, 0).
pub fn pell_recurrence(n: u64) -> (BigInt, BigInt) {
    let mut p = BigInt::from(1);
    let mut q = BigInt::from(0);
    for _ in 0..n {
        let next_p = BigInt::from(3) * &p + BigInt::from(4) * &q;
        let next_q = BigInt::from(2) * &p + BigInt::from(3) * &q;
        p = next_p;
        q = next_q;
    }
    (p, q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coords(t: &Ppt) -> (i64, i64, i64) {
        let [x, y, z] = t.coords();
        (
            i64::try_from(&x).unwrap(),
            i64::try_from(&y).unwrap(),
            i64::try_from(&z).unwrap(),
        )
    }

    #[test]
    fn hypotenuse_scan_small_bounds() {
        let got: Vec<_> = scan_ppt_by_hypotenuse(30).iter().map(coords).collect();
        assert_eq!(
            got,
            vec![(3, 4, 5), (5, 12, 13), (15, 8, 17), (7, 24, 25), (21, 20, 29)]
        );

        assert_eq!(scan_ppt_by_hypotenuse(5).len(), 1);
        let under_100 = scan_ppt_by_hypotenuse(100);
        assert_eq!(under_100.len(), 16);
        assert!(under_100.iter().map(coords).any(|t| t == (13, 84, 85)));
    }

    #[test]
    fn inradius_scan_examples() {
        let got: Vec<_> = scan_ppt_by_inradius(35).iter().map(coords).collect();
        assert_eq!(
            got,
            vec![
                (119, 120, 169),
                (95, 168, 193),
                (1295, 72, 1297),
                (71, 2520, 2521)
            ]
        );
        assert_eq!(
            scan_ppt_by_inradius(1).iter().map(coords).collect::<Vec<_>>(),
            vec![(3, 4, 5)]
        );
        assert_eq!(
            scan_ppt_by_inradius(2).iter().map(coords).collect::<Vec<_>>(),
            vec![(5, 12, 13)]
        );
    }

    #[test]
    fn naive_powers_base_cases() {
        assert_eq!(naive_matrix_power(Letter::A, 0), Mat3::identity());
        assert_eq!(naive_matrix_power(Letter::B, 1), base_matrix(Letter::B));
        let a = base_matrix(Letter::A);
        assert_eq!(naive_matrix_power(Letter::A, 2), a.mul(&a));
    }

    #[test]
    fn pell_recurrence_base_cases() {
        assert_eq!(pell_recurrence(0), (BigInt::from(1), BigInt::from(0)));
        assert_eq!(pell_recurrence(1), (BigInt::from(3), BigInt::from(2)));
        assert_eq!(pell_recurrence(2), (BigInt::from(17), BigInt::from(12)));
    }
}
