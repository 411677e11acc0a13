//! Exact arithmetic in the ring Z[√2].
//!
//! The unit u = 3 + 2√2 has norm 1, so with uⁿ = pₙ + qₙ√2 the conjugate
//! power (3 − 2√2)ⁿ is exactly pₙ − qₙ√2. Conjugate sums and differences
//! therefore collapse to 2pₙ and 2qₙ√2, which turns every radical
//! expression attached to powers of the Berggren B matrix into plain
//! integers and half-integers:
//!
//! ```text
//! b₁(n) = ((3 − 2√2)ⁿ + (3 + 2√2)ⁿ)/4 = pₙ/2
//! b₂(n) = ((3 + 2√2)ⁿ − (3 − 2√2)ⁿ)/(2√2) = qₙ
//! ```
//!
//! Floating-point evaluation of (3 + 2√2)ⁿ loses all precision past n ≈ 30;
//! working in Z[√2] keeps the closed forms exact at any exponent.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::bigfloat::big_to_f64;
use crate::Rational;

/// An element a + b√2 of Z[√2]. The representation is unique.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadInt {
    /// Rational part.
    pub a: BigInt,
    /// Coefficient of √2.
    pub b: BigInt,
}

impl QuadInt {
    pub fn new(a: BigInt, b: BigInt) -> QuadInt {
        QuadInt { a, b }
    }

    pub fn from_int(a: i64) -> QuadInt {
        QuadInt {
            a: BigInt::from(a),
            b: BigInt::zero(),
        }
    }

    pub fn one() -> QuadInt {
        QuadInt::from_int(1)
    }

    /// Conjugation a + b√2 ↦ a − b√2.
    pub fn conj(&self) -> QuadInt {
        QuadInt {
            a: self.a.clone(),
            b: -self.b.clone(),
        }
    }

    /// Field norm a² − 2b².
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - BigInt::from(2) * &self.b * &self.b
    }

    /// Floating approximation a + b·√2. Only meant for sanity cross-checks
    /// against the radical forms at small exponents.
    pub fn to_f64(&self) -> f64 {
        big_to_f64(&self.a) + big_to_f64(&self.b) * std::f64::consts::SQRT_2
    }
}

impl Add for &QuadInt {
    type Output = QuadInt;
    fn add(self, rhs: &QuadInt) -> QuadInt {
        QuadInt {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Sub for &QuadInt {
    type Output = QuadInt;
    fn sub(self, rhs: &QuadInt) -> QuadInt {
        QuadInt {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl Mul for &QuadInt {
    type Output = QuadInt;
    fn mul(self, rhs: &QuadInt) -> QuadInt {
        // (a + b√2)(c + d√2) = (ac + 2bd) + (ad + bc)√2
        QuadInt {
            a: &self.a * &rhs.a + BigInt::from(2) * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
}

impl Neg for &QuadInt {
    type Output = QuadInt;
    fn neg(self) -> QuadInt {
        QuadInt {
            a: -self.a.clone(),
            b: -self.b.clone(),
        }
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*sqrt(2)", self.a, self.b)
    }
}

/// (3 + 2√2)ⁿ by binary exponentiation. p₀ = 1, q₀ = 0; pₙ is always odd
/// and qₙ always even.
pub fn silver_power(n: u64) -> QuadInt {
    let mut result = QuadInt::one();
    let mut base = QuadInt::new(BigInt::from(3), BigInt::from(2));
    let mut e = n;
    while e > 0 {
        if e & 1 == 1 {
            result = &result * &base;
        }
        base = &base * &base;
        e >>= 1;
    }
    result
}

/// An exact half-integer, stored as twice its value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HalfInt {
    twice: BigInt,
}

impl HalfInt {
    pub fn from_twice(twice: BigInt) -> HalfInt {
        HalfInt { twice }
    }

    pub fn twice(&self) -> &BigInt {
        &self.twice
    }

    pub fn as_rational(&self) -> Rational {
        Rational::new(self.twice.clone(), BigInt::from(2))
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/2", self.twice)
    }
}

/// The pair (b₁, b₂) entering the closed form of Bⁿ: b₁ = pₙ/2 as an exact
/// half-integer and b₂ = qₙ as an exact integer, where
/// (3 + 2√2)ⁿ = pₙ + qₙ√2.
pub fn b1_b2(n: u64) -> (HalfInt, BigInt) {
    let u = silver_power(n);
    debug_assert!(u.a.is_odd() && u.b.is_even());
    (HalfInt::from_twice(u.a), u.b)
}
