//! Primitive Pythagorean triples and their parametrizations.
//!
//! A primitive Pythagorean triple (PPT) is a triple of positive integers
//! (x, y, z) with x² + y² = z², gcd(x, y) = 1 and x odd; y is then even and
//! z odd. Values are stored in that canonical (odd leg, even leg,
//! hypotenuse) order, which is the order the Berggren matrices act on.
//!
//! Two parametrizations are provided. Euclid's formula
//! (m, n) ↦ (m² − n², 2mn, m² + n²) is a bijection between coprime pairs
//! m > n ≥ 1 of opposite parity and PPTs. The F(m, n) form
//! x = ((3 − (−1)^m)/2)·mn + m, y = (x² − m²)/(2m), z = (x² + m²)/(2m)
//! yields Pythagorean triples that are not necessarily primitive, so it
//! returns a raw coordinate triple rather than a [`Ppt`].

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::Rational;

/// Why a candidate triple is not a primitive Pythagorean triple.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TripleError {
    #[error("components must all be positive")]
    NonPositive,
    #[error("{x}^2 + {y}^2 != {z}^2")]
    NotPythagorean { x: BigInt, y: BigInt, z: BigInt },
    #[error("legs share the common factor {0}")]
    NotPrimitive(BigInt),
    #[error("legs must have opposite parity")]
    BothLegsSameParity,
}

/// Why a pair (m, n) is not admissible for Euclid's formula.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EuclidPairError {
    #[error("require m > n >= 1")]
    NotOrdered,
    #[error("m and n share the common factor {0}")]
    NotCoprime(BigInt),
    #[error("m and n must have opposite parity")]
    SameParity,
}

/// Raised when an F(m, n) division does not come out exact.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FParamError {
    #[error("(x^2 - m^2) is not divisible by 2m for m={m}, n={n}")]
    NonIntegralResult { m: BigInt, n: BigInt },
}

/// A primitive Pythagorean triple in canonical (odd leg, even leg,
/// hypotenuse) order. Construction goes through [`validate_triple`] or one
/// of the parametrizations, so a value of this type always satisfies the
/// defining invariants.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ppt {
    x: BigInt,
    y: BigInt,
    z: BigInt,
}

impl Ppt {
    /// The root of the Berggren tree, (3, 4, 5).
    pub fn root() -> Ppt {
        Ppt {
            x: BigInt::from(3),
            y: BigInt::from(4),
            z: BigInt::from(5),
        }
    }

    pub fn is_root(&self) -> bool {
        self.x == BigInt::from(3) && self.y == BigInt::from(4) && self.z == BigInt::from(5)
    }

    /// Odd leg.
    pub fn x(&self) -> &BigInt {
        &self.x
    }

    /// Even leg.
    pub fn y(&self) -> &BigInt {
        &self.y
    }

    /// Hypotenuse.
    pub fn z(&self) -> &BigInt {
        &self.z
    }

    pub fn coords(&self) -> [BigInt; 3] {
        [self.x.clone(), self.y.clone(), self.z.clone()]
    }

    /// Inradius of the corresponding right triangle, (x + y − z)/2.
    /// Always a positive integer for a primitive triple.
    pub fn inradius(&self) -> BigInt {
        let twice = &self.x + &self.y - &self.z;
        debug_assert!(twice.is_even() && twice.is_positive());
        twice / BigInt::from(2)
    }

    /// Circumradius of the corresponding right triangle, z/2.
    pub fn circumradius(&self) -> Rational {
        Rational::new(self.z.clone(), BigInt::from(2))
    }

    /// The unique Euclid pair generating this triple:
    /// m = √((z + x)/2), n = √((z − x)/2).
    pub fn to_euclid(&self) -> EuclidPair {
        let two = BigInt::from(2);
        let m2 = (&self.z + &self.x) / &two;
        let n2 = (&self.z - &self.x) / &two;
        let m = m2.sqrt();
        let n = n2.sqrt();
        debug_assert!(&m * &m == m2 && &n * &n == n2);
        let pair = EuclidPair { m, n };
        debug_assert_eq!(&pair.to_ppt(), self);
        pair
    }
}

impl fmt::Display for Ppt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}

/// Outcome of [`validate_triple`]: the canonical triple plus a flag telling
/// whether the two legs had to be swapped into (odd, even) order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidatedTriple {
    pub ppt: Ppt,
    pub swapped: bool,
}

/// Check an arbitrary integer triple and promote it to a [`Ppt`].
///
/// Inputs with the even leg first are normalized into canonical order and
/// reported through the `swapped` flag rather than rejected.
pub fn validate_triple(x: BigInt, y: BigInt, z: BigInt) -> Result<ValidatedTriple, TripleError> {
    if !x.is_positive() || !y.is_positive() || !z.is_positive() {
        return Err(TripleError::NonPositive);
    }
    if &x * &x + &y * &y != &z * &z {
        return Err(TripleError::NotPythagorean { x, y, z });
    }
    let g = x.gcd(&y);
    if !g.is_one() {
        return Err(TripleError::NotPrimitive(g));
    }
    match (x.is_odd(), y.is_odd()) {
        (true, false) => Ok(ValidatedTriple {
            ppt: Ppt { x, y, z },
            swapped: false,
        }),
        (false, true) => Ok(ValidatedTriple {
            ppt: Ppt { x: y, y: x, z },
            swapped: true,
        }),
        // Coprime legs of equal parity can never be Pythagorean, so the
        // earlier checks always fire first; kept as a final guard.
        _ => Err(TripleError::BothLegsSameParity),
    }
}

/// A pair (m, n) with m > n ≥ 1, gcd(m, n) = 1 and m − n odd; in bijection
/// with primitive Pythagorean triples through Euclid's formula.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EuclidPair {
    m: BigInt,
    n: BigInt,
}

impl EuclidPair {
    pub fn new(m: BigInt, n: BigInt) -> Result<EuclidPair, EuclidPairError> {
        if !n.is_positive() || m <= n {
            return Err(EuclidPairError::NotOrdered);
        }
        let g = m.gcd(&n);
        if !g.is_one() {
            return Err(EuclidPairError::NotCoprime(g));
        }
        if m.is_odd() == n.is_odd() {
            return Err(EuclidPairError::SameParity);
        }
        Ok(EuclidPair { m, n })
    }

    pub fn m(&self) -> &BigInt {
        &self.m
    }

    pub fn n(&self) -> &BigInt {
        &self.n
    }

    /// Euclid's formula: (m² − n², 2mn, m² + n²).
    pub fn to_ppt(&self) -> Ppt {
        let m2 = &self.m * &self.m;
        let n2 = &self.n * &self.n;
        let x = &m2 - &n2;
        let y = BigInt::from(2) * &self.m * &self.n;
        let z = m2 + n2;
        debug_assert!(x.is_odd() && y.is_even());
        Ppt { x, y, z }
    }
}

impl fmt::Display for EuclidPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(m={}, n={})", self.m, self.n)
    }
}

/// The F(m, n) parametrization. The result is a Pythagorean triple but not
/// necessarily primitive; promote it with [`validate_triple`] when needed.
pub fn f_param(m: &BigInt, n: &BigInt) -> Result<(BigInt, BigInt, BigInt), FParamError> {
    assert!(m.is_positive() && n.is_positive(), "f_param requires m, n >= 1");
    // (3 − (−1)^m)/2 is 2 for odd m and 1 for even m.
    let coeff = if m.is_odd() { 2 } else { 1 };
    let x = BigInt::from(coeff) * m * n + m;
    let x2 = &x * &x;
    let m2 = m * m;
    let two_m = BigInt::from(2) * m;
    let (y, ry) = (&x2 - &m2).div_rem(&two_m);
    let (z, rz) = (&x2 + &m2).div_rem(&two_m);
    if !ry.is_zero() || !rz.is_zero() {
        return Err(FParamError::NonIntegralResult {
            m: m.clone(),
            n: n.clone(),
        });
    }
    Ok((x, y, z))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn validate_accepts_the_root() {
        let v = validate_triple(bi(3), bi(4), bi(5)).unwrap();
        assert_eq!(v.ppt, Ppt::root());
        assert!(!v.swapped);
    }

    #[test]
    fn validate_rejects_non_primitive() {
        assert_eq!(
            validate_triple(bi(6), bi(8), bi(10)),
            Err(TripleError::NotPrimitive(bi(2)))
        );
    }

    #[test]
    fn validate_normalizes_swapped_legs() {
        let v = validate_triple(bi(4), bi(3), bi(5)).unwrap();
        assert_eq!(v.ppt, Ppt::root());
        assert!(v.swapped);
    }

    #[test]
    fn validate_rejects_non_pythagorean_and_non_positive() {
        assert!(matches!(
            validate_triple(bi(3), bi(4), bi(6)),
            Err(TripleError::NotPythagorean { .. })
        ));
        assert_eq!(
            validate_triple(bi(0), bi(4), bi(5)),
            Err(TripleError::NonPositive)
        );
        assert_eq!(
            validate_triple(bi(-3), bi(4), bi(5)),
            Err(TripleError::NonPositive)
        );
    }

    #[test]
    fn euclid_formula_examples() {
        let p = EuclidPair::new(bi(2), bi(1)).unwrap();
        assert_eq!(p.to_ppt(), Ppt::root());

        let p = EuclidPair::new(bi(36), bi(1)).unwrap();
        assert_eq!(p.to_ppt().coords(), [bi(1295), bi(72), bi(1297)]);

        let p = EuclidPair::new(bi(12), bi(5)).unwrap();
        assert_eq!(p.to_ppt().coords(), [bi(119), bi(120), bi(169)]);
    }

    #[test]
    fn euclid_pair_rejects_bad_input() {
        assert_eq!(EuclidPair::new(bi(1), bi(1)), Err(EuclidPairError::NotOrdered));
        assert_eq!(EuclidPair::new(bi(2), bi(0)), Err(EuclidPairError::NotOrdered));
        assert_eq!(
            EuclidPair::new(bi(4), bi(2)),
            Err(EuclidPairError::NotCoprime(bi(2)))
        );
        assert_eq!(EuclidPair::new(bi(3), bi(1)), Err(EuclidPairError::SameParity));
    }

    #[test]
    fn to_euclid_inverts_the_formula() {
        let p = validate_triple(bi(119), bi(120), bi(169)).unwrap().ppt.to_euclid();
        assert_eq!((p.m(), p.n()), (&bi(12), &bi(5)));

        let p = validate_triple(bi(5), bi(12), bi(13)).unwrap().ppt.to_euclid();
        assert_eq!((p.m(), p.n()), (&bi(3), &bi(2)));

        assert_eq!(Ppt::root().to_euclid(), EuclidPair::new(bi(2), bi(1)).unwrap());
    }

    #[test]
    fn f_param_examples() {
        assert_eq!(f_param(&bi(1), &bi(1)).unwrap(), (bi(3), bi(4), bi(5)));
        assert_eq!(f_param(&bi(1), &bi(2)).unwrap(), (bi(5), bi(12), bi(13)));
    }

    #[test]
    fn f_param_first_row_formula() {
        // F(1, n) = (2n+1, 2n²+2n, 2n²+2n+1), which is also from_euclid(n+1, n).
        for n in 1i64..=100 {
            let (x, y, z) = f_param(&bi(1), &bi(n)).unwrap();
            assert_eq!(x, bi(2 * n + 1));
            assert_eq!(y, bi(2 * n * n + 2 * n));
            assert_eq!(z, bi(2 * n * n + 2 * n + 1));
            let pair = EuclidPair::new(bi(n + 1), bi(n)).unwrap();
            assert_eq!(pair.to_ppt().coords(), [x, y, z]);
        }
    }

    #[test]
    fn f_param_even_m_is_pythagorean_but_not_primitive_in_general() {
        let (x, y, z) = f_param(&bi(2), &bi(1)).unwrap();
        assert_eq!(&x * &x + &y * &y, &z * &z);
        assert_eq!((x, y, z), (bi(4), bi(3), bi(5)));
    }

    #[test]
    fn inradius_examples() {
        assert_eq!(Ppt::root().inradius(), bi(1));
        let t = validate_triple(bi(21), bi(20), bi(29)).unwrap().ppt;
        assert_eq!(t.inradius(), bi(6));
        let t = validate_triple(bi(13), bi(84), bi(85)).unwrap().ppt;
        assert_eq!(t.inradius(), bi(6));
    }

    #[test]
    fn circumradius_examples() {
        assert_eq!(Ppt::root().circumradius(), Rational::new(bi(5), bi(2)));
        let t = validate_triple(bi(21), bi(20), bi(29)).unwrap().ppt;
        assert_eq!(t.circumradius(), Rational::new(bi(29), bi(2)));
        let t = validate_triple(bi(15), bi(8), bi(17)).unwrap().ppt;
        assert_eq!(t.circumradius(), Rational::new(bi(17), bi(2)));
    }
}
