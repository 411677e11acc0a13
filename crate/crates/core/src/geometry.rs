//! Exact geometry of the triangle formed by a triple's three children.
//!
//! Read the children A·P, B·P, C·P of a primitive triple P = (x, y, z) as
//! points of Z³. With ū, v̄, w̄ the edge vectors B·P − A·P, C·P − A·P,
//! C·P − B·P one computes, entirely in integers,
//!
//! ```text
//! ū = (4y, 2y, 4y)            |ū| = 6y
//! v̄ = (−2x+4y, −4x+2y, −4x+4y)    |v̄| = 2√D,  D = 9x² − 16xy + 9y²
//! w̄ = (−2x, −4x, −4x)         |w̄| = 6x
//! ū × v̄ = (8xy, 8xy, −12xy)
//! ```
//!
//! so the three points are never collinear, they lie on the plane
//! 2a + 2b − 3c + z = 0, the triangle has area 2xy√17 and is never
//! right-angled (the pairwise dot products −32xy + 36y², −32xy, 36x² − 32xy
//! cannot vanish on a primitive triple). Its inradius and circumradius are
//! single surds in D:
//!
//! ```text
//! r = (3(x+y) − √D) / √17        (the quotient form 2xy√17/(3x+3y+√D)
//!                                 rationalized with (3x+3y)² − D = 34xy)
//! R² = 81·D / 17
//! ```
//!
//! The pair (p, D) with p = 3(x+y) represents r exactly and admits
//! radical-free verification; nested-radical quotients do not.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::bigfloat::{big_ratio_f64, big_sqrt_f64};
use crate::ppt::Ppt;
use crate::tree::{base_matrix, Letter};
use crate::Rational;

/// A point of Z³ with exact integer coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point3(pub [BigInt; 3]);

/// A displacement between two points of Z³.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vec3(pub [BigInt; 3]);

impl Point3 {
    /// self − other.
    pub fn sub(&self, other: &Point3) -> Vec3 {
        Vec3(std::array::from_fn(|i| &self.0[i] - &other.0[i]))
    }
}

impl Vec3 {
    pub fn dot(&self, other: &Vec3) -> BigInt {
        (0..3).map(|i| &self.0[i] * &other.0[i]).sum()
    }

    pub fn cross(&self, other: &Vec3) -> Vec3 {
        let a = &self.0;
        let b = &other.0;
        Vec3([
            &a[1] * &b[2] - &a[2] * &b[1],
            &a[2] * &b[0] - &a[0] * &b[2],
            &a[0] * &b[1] - &a[1] * &b[0],
        ])
    }

    pub fn norm_sq(&self) -> BigInt {
        self.dot(self)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }
}

/// The plane α·a + β·b + γ·c + δ = 0 with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Plane {
    pub coeffs: [BigInt; 4],
}

impl Plane {
    pub fn contains(&self, p: &Point3) -> bool {
        let [a, b, c, d] = &self.coeffs;
        (a * &p.0[0] + b * &p.0[1] + c * &p.0[2] + d).is_zero()
    }
}

impl fmt::Display for Plane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.coeffs;
        write!(f, "{a}a + {b}b + {c}c + {d} = 0")
    }
}

/// An exact value coeff·√radicand. The radicand is not reduced to
/// square-free form automatically (that would require factoring); radicand 1
/// means the value is rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Surd {
    pub coeff: Rational,
    pub radicand: BigUint,
}

impl Surd {
    pub fn new(coeff: Rational, radicand: BigUint) -> Surd {
        Surd { coeff, radicand }
    }

    pub fn is_rational(&self) -> bool {
        self.radicand.is_one() || self.coeff.is_zero()
    }

    /// Pull square factors out of the radicand, leaving it square-free.
    /// This factors the radicand, so it is only practical when the radicand
    /// is small or smooth; the descendant-triangle D grows with the triple
    /// and is intentionally stored unreduced.
    pub fn normalize(&self) -> Surd {
        if self.radicand.is_zero() {
            return Surd::new(Rational::from_integer(BigInt::from(0)), BigUint::one());
        }
        let factorization = crate::inradius::factorize(&self.radicand);
        let mut outside = BigUint::one();
        let mut inside = BigUint::one();
        for (p, e) in factorization.factors() {
            outside *= p.pow(e / 2);
            if e % 2 == 1 {
                inside *= p;
            }
        }
        Surd::new(
            self.coeff.clone() * Rational::from_integer(BigInt::from(outside)),
            inside,
        )
    }

    pub fn to_f64(&self) -> f64 {
        big_ratio_f64(self.coeff.numer(), self.coeff.denom())
            * big_sqrt_f64(&BigInt::from(self.radicand.clone()))
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*sqrt({})", self.coeff, self.radicand)
    }
}

/// The inradius of a descendant triangle, held exactly as the pair (p, d)
/// with value (p − √d)/√17.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactInradius {
    pub p: BigInt,
    pub d: BigInt,
}

impl ExactInradius {
    /// Accurate `f64` evaluation: p·2⁶⁴ − ⌊√(d·2¹²⁸)⌋ is computed exactly, so
    /// the subtraction never cancels in floating point and a single division
    /// by √17 remains.
    pub fn to_f64(&self) -> f64 {
        let scaled_sqrt = (&self.d << 128usize).sqrt();
        let numer = (&self.p << 64usize) - scaled_sqrt;
        big_ratio_f64(&numer, &(BigInt::one() << 64usize)) / 17f64.sqrt()
    }
}

impl fmt::Display for ExactInradius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} - sqrt({}))/sqrt(17)", self.p, self.d)
    }
}

/// Everything exact about the triangle of a triple's three children.
#[derive(Debug, Clone, PartialEq)]
pub struct DescTriangleMetrics {
    /// A·P, B·P, C·P in letter order.
    pub points: [Point3; 3],
    /// 2a + 2b − 3c + z = 0.
    pub plane: Plane,
    /// 2xy√17.
    pub area: Surd,
    /// |ū| = 6y, the side between the A and B points.
    pub side_ab: BigInt,
    /// |w̄| = 6x, the side between the B and C points.
    pub side_bc: BigInt,
    /// |v̄| = 2√D, the side between the A and C points.
    pub side_ac: Surd,
    /// D = 9x² − 16xy + 9y².
    pub d: BigInt,
    /// (ū·v̄, ū·w̄, v̄·w̄) = (−32xy + 36y², −32xy, 36x² − 32xy), all nonzero.
    pub dot_products: [BigInt; 3],
    /// r = (3(x+y) − √D)/√17.
    pub inradius: ExactInradius,
    /// R² = 81·D/17.
    pub circumradius_sq: Rational,
    pub inradius_f64: f64,
    pub circumradius_f64: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("points are collinear")]
pub struct CollinearPoints;

/// The three children of `t` as integer points, in letter order A, B, C.
pub fn descendant_points(t: &Ppt) -> [Point3; 3] {
    let coords = t.coords();
    Letter::ALL.map(|l| Point3(base_matrix(l).apply(&coords)))
}

fn edge_vectors(points: &[Point3; 3]) -> (Vec3, Vec3, Vec3) {
    let u = points[1].sub(&points[0]);
    let v = points[2].sub(&points[0]);
    let w = points[2].sub(&points[1]);
    (u, v, w)
}

/// The three descendant points are never collinear; their edge cross product
/// is (8xy, 8xy, −12xy).
pub fn check_noncollinear(t: &Ppt) -> bool {
    let points = descendant_points(t);
    let (u, v, _) = edge_vectors(&points);
    !u.cross(&v).is_zero()
}

/// The plane 2a + 2b − 3c + z = 0 containing all three descendant points.
/// The coefficients are already in lowest terms since gcd(2, 3) = 1.
pub fn descendant_plane(t: &Ppt) -> Plane {
    Plane {
        coeffs: [
            BigInt::from(2),
            BigInt::from(2),
            BigInt::from(-3),
            t.z().clone(),
        ],
    }
}

/// The area of the descendant triangle, 2xy√17. Cross-checked against the
/// independent route |ū × v̄|/2, whose squared norm must be exactly 272x²y².
pub fn descendant_area(t: &Ppt) -> Surd {
    let points = descendant_points(t);
    let (u, v, _) = edge_vectors(&points);
    let cross_sq = u.cross(&v).norm_sq();
    let xy = t.x() * t.y();
    assert_eq!(
        cross_sq,
        BigInt::from(272) * &xy * &xy,
        "cross product norm must be 272x^2y^2"
    );
    Surd::new(
        Rational::from_integer(BigInt::from(2) * xy),
        BigUint::from(17u32),
    )
}

/// The pairwise dot products (ū·v̄, ū·w̄, v̄·w̄). All three are nonzero for
/// every primitive triple, so the descendant triangle is never right-angled.
pub fn check_non_right(t: &Ppt) -> [BigInt; 3] {
    let points = descendant_points(t);
    let (u, v, w) = edge_vectors(&points);
    [u.dot(&v), u.dot(&w), v.dot(&w)]
}

/// Assemble the full exact record for the descendant triangle of `t`.
pub fn descendant_triangle_metrics(t: &Ppt) -> DescTriangleMetrics {
    let x = t.x();
    let y = t.y();
    let points = descendant_points(t);
    let (u, v, w) = edge_vectors(&points);

    let plane = descendant_plane(t);
    for p in &points {
        assert!(plane.contains(p), "descendant point off the plane for {t}");
    }

    let xy = x * y;
    let d = BigInt::from(9) * x * x - BigInt::from(16) * &xy + BigInt::from(9) * y * y;
    assert!(d.is_positive(), "D = (3x-3y)^2 + 2xy must be positive");
    assert_eq!(v.norm_sq(), BigInt::from(4) * &d, "|v|^2 must be 4D");
    assert_eq!(u.norm_sq(), BigInt::from(36) * y * y, "|u|^2 must be 36y^2");
    assert_eq!(w.norm_sq(), BigInt::from(36) * x * x, "|w|^2 must be 36x^2");

    let p = BigInt::from(3) * (x + y);
    // The rationalization that turns the quotient form of r into (p − √D)/√17.
    assert_eq!(&p * &p - &d, BigInt::from(34) * &xy, "(3x+3y)^2 - D must be 34xy");

    let dot_products = [u.dot(&v), u.dot(&w), v.dot(&w)];
    for dp in &dot_products {
        assert!(!dp.is_zero(), "descendant triangle of {t} must not be right");
    }

    let area = descendant_area(t);
    let inradius = ExactInradius { p, d: d.clone() };
    let circumradius_sq = Rational::new(BigInt::from(81) * &d, BigInt::from(17));
    let inradius_f64 = inradius.to_f64();
    let circumradius_f64 = 9.0 * big_sqrt_f64(&d) / 17f64.sqrt();

    DescTriangleMetrics {
        points,
        plane,
        area,
        side_ab: BigInt::from(6) * y,
        side_bc: BigInt::from(6) * x,
        side_ac: Surd::new(
            Rational::from_integer(BigInt::from(2)),
            d.magnitude().clone(),
        ),
        d,
        dot_products,
        inradius,
        circumradius_sq,
        inradius_f64,
        circumradius_f64,
    }
}

/// Generic floating inradius, circumradius and area of the triangle spanned
/// by three integer points, from the textbook identities
/// r = |ū×v̄| / (|ū| + |v̄| + |w̄|), R = |ū||v̄||w̄| / (2|ū×v̄|),
/// S = |ū×v̄| / 2. Serves as the independent numeric cross-check for
/// [`descendant_triangle_metrics`].
pub fn triangle_radii_from_vectors(
    p1: &Point3,
    p2: &Point3,
    p3: &Point3,
) -> Result<(f64, f64, f64), CollinearPoints> {
    let u = p2.sub(p1);
    let v = p3.sub(p1);
    let w = p3.sub(p2);
    let cross = u.cross(&v);
    if cross.is_zero() {
        return Err(CollinearPoints);
    }
    let cross_len = big_sqrt_f64(&cross.norm_sq());
    let u_len = big_sqrt_f64(&u.norm_sq());
    let v_len = big_sqrt_f64(&v.norm_sq());
    let w_len = big_sqrt_f64(&w.norm_sq());
    let r = cross_len / (u_len + v_len + w_len);
    let big_r = u_len * v_len * w_len / (2.0 * cross_len);
    let area = cross_len / 2.0;
    Ok((r, big_r, area))
}
