//! Enumeration of all primitive triples with a prescribed inradius.
//!
//! Under Euclid's formula the inradius of (m² − n², 2mn, m² + n²) is
//! n(m − n), so triples with inradius r correspond exactly to splittings
//! r = n·d with d odd and gcd(n, d) = 1: d ranges over the odd unitary
//! divisors of r and m = n + d. Counting those divisors gives the number of
//! triples with inradius r as 2^ω(r) for odd r and 2^(ω(r)−1) for even r,
//! with ω the number of distinct prime factors.
//!
//! Factorization is fully deterministic below 2⁶⁴ (trial division plus
//! Miller–Rabin with a proven witness set and Pollard–Brent splitting).
//! Larger inputs are supported with the usual caveats: primality checking
//! becomes strongly probabilistic and splitting large semiprimes has a real
//! performance cliff.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::ppt::{EuclidPair, Ppt};
use crate::InvariantViolation;

/// A prime factorization, pairs (prime, exponent) with ascending primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<(BigUint, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(BigUint, u32)] {
        &self.factors
    }

    /// Number of distinct prime divisors, ω. ω(1) = 0.
    pub fn omega(&self) -> usize {
        self.factors.len()
    }

    /// Multiply the factorization back out.
    pub fn value(&self) -> BigUint {
        self.factors
            .iter()
            .fold(BigUint::one(), |acc, (p, e)| acc * p.pow(*e))
    }
}

/// Exact prime factorization of n ≥ 1.
pub fn factorize(n: &BigUint) -> Factorization {
    assert!(!n.is_zero(), "factorize requires n >= 1");
    let mut factors: Vec<(BigUint, u32)> = Vec::new();
    let mut rest = n.clone();

    let strip = |rest: &mut BigUint, p: u64, factors: &mut Vec<(BigUint, u32)>| {
        let big_p = BigUint::from(p);
        let mut e = 0u32;
        while (&*rest % &big_p).is_zero() {
            *rest /= &big_p;
            e += 1;
        }
        if e > 0 {
            factors.push((big_p, e));
        }
    };

    strip(&mut rest, 2, &mut factors);
    strip(&mut rest, 3, &mut factors);
    // Remaining small primes via the 6k ± 1 wheel; complete for rest < 2^32.
    let mut cand: u64 = 5;
    while cand < 1 << 16 && BigUint::from(cand) * cand <= rest {
        strip(&mut rest, cand, &mut factors);
        strip(&mut rest, cand + 2, &mut factors);
        cand += 6;
    }

    if !rest.is_one() {
        if BigUint::from(cand) * cand > rest {
            factors.push((rest, 1));
        } else {
            let mut large: Vec<BigUint> = Vec::new();
            split_into_primes(rest, &mut large);
            large.sort();
            let mut it = large.into_iter().peekable();
            while let Some(p) = it.next() {
                let mut e = 1u32;
                while it.peek() == Some(&p) {
                    it.next();
                    e += 1;
                }
                factors.push((p, e));
            }
        }
    }

    factors.sort_by(|a, b| a.0.cmp(&b.0));
    let result = Factorization { factors };
    debug_assert_eq!(&result.value(), n);
    result
}

fn split_into_primes(n: BigUint, out: &mut Vec<BigUint>) {
    if n.is_one() {
        return;
    }
    if is_probable_prime(&n) {
        out.push(n);
        return;
    }
    let d = pollard_brent(&n);
    let q = &n / &d;
    split_into_primes(d, out);
    split_into_primes(q, out);
}

/// Miller–Rabin. The first twelve prime bases are a proven deterministic
/// witness set for n < 3.2·10²³ (far beyond 2⁶⁴); above that the same bases
/// make the test strongly probabilistic.
fn is_probable_prime(n: &BigUint) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    let two = BigUint::from(2u32);
    if n < &two {
        return false;
    }
    if n.is_even() {
        return *n == two;
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'base: for b in BASES {
        let base = BigUint::from(b) % n;
        if base.is_zero() || base.is_one() || base == n_minus_1 {
            continue;
        }
        let mut x = base.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'base;
            }
        }
        return false;
    }
    true
}

/// Pollard's rho with Brent's cycle detection; returns a nontrivial factor
/// of an odd composite with no prime factor below 2^16.
fn pollard_brent(n: &BigUint) -> BigUint {
    let abs_diff = |a: &BigUint, b: &BigUint| if a > b { a - b } else { b - a };
    const BATCH: u64 = 128;
    for c in 1u64.. {
        let c = BigUint::from(c);
        let f = |v: &BigUint| (v * v + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut x = y.clone();
        let mut ys = y.clone();
        let mut cycle_len = 1u64;
        let mut g = BigUint::one();
        while g.is_one() {
            x = y.clone();
            for _ in 0..cycle_len {
                y = f(&y);
            }
            let mut done = 0u64;
            while done < cycle_len && g.is_one() {
                ys = y.clone();
                let batch = (cycle_len - done).min(BATCH);
                let mut product = BigUint::one();
                for _ in 0..batch {
                    y = f(&y);
                    product = product * abs_diff(&x, &y) % n;
                }
                g = product.gcd(n);
                done += batch;
            }
            cycle_len *= 2;
        }
        if &g == n {
            // The batched gcd jumped past the factor; replay one step at a time.
            loop {
                ys = f(&ys);
                g = abs_diff(&x, &ys).gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if &g != n {
            return g;
        }
        // g == n: this polynomial found the trivial divisor, try the next c.
    }
    unreachable!("pollard_brent exhausted its polynomial family")
}

/// Number of primitive triples with inradius r: 2^ω(r) for odd r,
/// 2^(ω(r)−1) for even r.
pub fn count_with_inradius(r: &BigUint) -> BigUint {
    let fact = factorize(r);
    let omega = fact.omega();
    let exponent = if r.is_even() { omega - 1 } else { omega };
    BigUint::one() << exponent
}

/// Every primitive triple with inradius exactly `r`, sorted by ascending
/// hypotenuse. For each odd unitary divisor d of r the pair
/// (m, n) = (r/d + d, r/d) contributes one triple through Euclid's formula.
/// The length is checked against [`count_with_inradius`] before returning.
pub fn enumerate_with_inradius(r: &BigUint) -> Result<Vec<Ppt>, InvariantViolation> {
    if r.is_zero() {
        return Err(InvariantViolation("inradius must be >= 1".into()));
    }
    let fact = factorize(r);
    let odd_blocks: Vec<BigUint> = fact
        .factors()
        .iter()
        .filter(|(p, _)| p != &BigUint::from(2u32))
        .map(|(p, e)| p.pow(*e))
        .collect();

    let mut divisors = Vec::with_capacity(1 << odd_blocks.len().min(20));
    collect_unitary_products(&odd_blocks, BigUint::one(), &mut divisors);

    let mut triples = Vec::with_capacity(divisors.len());
    for d in divisors {
        let n = r / &d;
        let m = &n + &d;
        let pair = EuclidPair::new(m.into(), n.into()).map_err(|e| {
            InvariantViolation(format!("unitary splitting of {r} produced a bad pair: {e}"))
        })?;
        let t = pair.to_ppt();
        if t.inradius().magnitude() != r {
            return Err(InvariantViolation(format!(
                "constructed triple {t} has the wrong inradius"
            )));
        }
        triples.push(t);
    }
    triples.sort_by(|a, b| (a.z(), a.x()).cmp(&(b.z(), b.x())));

    let expected = count_with_inradius(r);
    if BigUint::from(triples.len()) != expected {
        return Err(InvariantViolation(format!(
            "found {} triples with inradius {r}, the divisor count predicts {expected}",
            triples.len()
        )));
    }
    Ok(triples)
}

fn collect_unitary_products(blocks: &[BigUint], acc: BigUint, out: &mut Vec<BigUint>) {
    match blocks.split_first() {
        None => out.push(acc),
        Some((head, tail)) => {
            collect_unitary_products(tail, acc.clone(), out);
            collect_unitary_products(tail, acc * head, out);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bu(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn coords(t: &Ppt) -> (u64, u64, u64) {
        let [x, y, z] = t.coords();
        (
            u64::try_from(x.magnitude()).unwrap(),
            u64::try_from(y.magnitude()).unwrap(),
            u64::try_from(z.magnitude()).unwrap(),
        )
    }

    #[test]
    fn factorize_examples() {
        let f = factorize(&bu(35));
        assert_eq!(f.factors(), &[(bu(5), 1), (bu(7), 1)]);
        assert_eq!(f.omega(), 2);

        assert_eq!(factorize(&bu(1)).factors(), &[]);
        assert_eq!(factorize(&bu(12)).factors(), &[(bu(2), 2), (bu(3), 1)]);
    }

    #[test]
    fn factorize_larger_inputs() {
        // 1000003 and 1000033 are both prime and beyond the trial bound.
        let n = bu(1_000_003) * bu(1_000_033);
        let f = factorize(&n);
        assert_eq!(f.factors(), &[(bu(1_000_003), 1), (bu(1_000_033), 1)]);

        let p = bu(4_294_967_311); // smallest prime above 2^32
        let f = factorize(&(&p * &p));
        assert_eq!(f.factors(), &[(p, 2)]);

        let f = factorize(&(bu(1) << 40));
        assert_eq!(f.factors(), &[(bu(2), 40)]);
    }

    #[test]
    fn factorize_reconstructs_random_values() {
        // Deterministic pseudo-random walk over 64-bit values.
        let mut state = 0x9e3779b97f4a7c15u64;
        for _ in 0..40 {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let n = bu(state >> 8 | 1);
            let f = factorize(&n);
            assert_eq!(f.value(), n);
            for (p, _) in f.factors() {
                assert!(is_probable_prime(p), "{p} must be prime");
            }
        }
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_with_inradius(&bu(35)), bu(4));
        assert_eq!(count_with_inradius(&bu(6)), bu(2));
        assert_eq!(count_with_inradius(&bu(1)), bu(1));
        assert_eq!(count_with_inradius(&bu(4)), bu(1));
    }

    #[test]
    fn enumerate_inradius_35_gives_the_four_triples() {
        let got: Vec<_> = enumerate_with_inradius(&bu(35))
            .unwrap()
            .iter()
            .map(coords)
            .collect();
        assert_eq!(
            got,
            vec![
                (119, 120, 169),
                (95, 168, 193),
                (1295, 72, 1297),
                (71, 2520, 2521)
            ]
        );
    }

    #[test]
    fn enumerate_small_inradii() {
        let got: Vec<_> = enumerate_with_inradius(&bu(1)).unwrap().iter().map(coords).collect();
        assert_eq!(got, vec![(3, 4, 5)]);

        let got: Vec<_> = enumerate_with_inradius(&bu(6)).unwrap().iter().map(coords).collect();
        assert_eq!(got, vec![(21, 20, 29), (13, 84, 85)]);
    }

    #[test]
    fn enumeration_matches_the_brute_scan() {
        for r in 1..=200u64 {
            let got = enumerate_with_inradius(&bu(r)).unwrap();
            let expect = crate::oracle::scan_ppt_by_inradius(r);
            assert_eq!(got, expect, "r={r}");
            assert_eq!(BigUint::from(got.len()), count_with_inradius(&bu(r)), "r={r}");
        }
    }
}
