//! Inradius and circumradius along Berggren descent.
//!
//! For a primitive triple with inradius r = (x + y − z)/2 and circumradius
//! R = z/2, the children's radii follow affine recurrences:
//!
//! ```text
//! r_A = r − y + z      R_A = x − y + 3R
//! r_B = r + z          R_B = x + y + 3R
//! r_C = r − x + z      R_C = −x + y + 3R
//! ```
//!
//! Along the pure chains from the root the radii close up: the A chain has
//! rₙ = n + 1 and Rₙ = n² + 3n + 5/2, the C chain rₙ = 2n + 1 and
//! Rₙ = 2n² + 4n + 5/2, and the B chain runs through the Pell numbers of
//! (3 + 2√2)ⁿ = pₙ + qₙ√2 as rₙ = qₙ₊₁/2 and Rₙ = (5pₙ + 7qₙ)/2. The chain
//! formulas are stated for n ≥ 1 but extend naturally to n = 0, where they
//! return the root's radii r = 1, R = 5/2.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::ppt::{validate_triple, Ppt};
use crate::quad::silver_power;
use crate::tree::{matrix_power, Letter};
use crate::{InvariantViolation, Rational};

/// A node of a pure A/B/C chain together with its exact radii.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainPoint {
    pub n: u64,
    pub triple: Ppt,
    pub inradius: BigInt,
    pub circumradius: Rational,
}

/// Inradius of the child of `t` along `letter`, straight from the
/// recurrence. Equals `descend(t, letter).inradius()`.
pub fn child_inradius(t: &Ppt, letter: Letter) -> BigInt {
    let r = t.inradius();
    match letter {
        Letter::A => r - t.y() + t.z(),
        Letter::B => r + t.z(),
        Letter::C => r - t.x() + t.z(),
    }
}

/// Circumradius of the child of `t` along `letter`. Equals
/// `descend(t, letter).circumradius()`.
pub fn child_circumradius(t: &Ppt, letter: Letter) -> Rational {
    let linear = match letter {
        Letter::A => t.x() - t.y(),
        Letter::B => t.x() + t.y(),
        Letter::C => t.y() - t.x(),
    };
    // linear + 3z/2, assembled over the common denominator 2
    Rational::new(BigInt::from(2) * linear + BigInt::from(3) * t.z(), BigInt::from(2))
}

/// Closed-form inradius of the n-th node of the pure chain of `letter`.
pub fn chain_inradius(letter: Letter, n: u64) -> BigInt {
    match letter {
        Letter::A => BigInt::from(n) + BigInt::one(),
        Letter::C => BigInt::from(2) * BigInt::from(n) + BigInt::one(),
        Letter::B => {
            let q = silver_power(n.checked_add(1).expect("chain index overflow")).b;
            assert!(q.is_even(), "Pell number q_{} must be even", n + 1);
            q / BigInt::from(2)
        }
    }
}

/// Closed-form circumradius of the n-th node of the pure chain of `letter`.
pub fn chain_circumradius(letter: Letter, n: u64) -> Rational {
    let big = BigInt::from(n);
    let numer = match letter {
        Letter::A => BigInt::from(2) * &big * &big + BigInt::from(6) * &big + BigInt::from(5),
        Letter::C => BigInt::from(4) * &big * &big + BigInt::from(8) * &big + BigInt::from(5),
        Letter::B => {
            let u = silver_power(n);
            BigInt::from(5) * &u.a + BigInt::from(7) * &u.b
        }
    };
    Rational::new(numer, BigInt::from(2))
}

/// The full chain record: the triple from the closed-form matrix power plus
/// both radii from the chain formulas. The radii are cross-checked against
/// direct computation on the triple before being returned.
pub fn chain_point(letter: Letter, n: u64) -> Result<ChainPoint, InvariantViolation> {
    let [x, y, z] = matrix_power(letter, n).apply(&Ppt::root().coords());
    let v = validate_triple(x, y, z).map_err(|e| {
        InvariantViolation(format!("{letter}^{n}·(3,4,5) is not a primitive triple: {e}"))
    })?;
    if v.swapped {
        return Err(InvariantViolation(format!(
            "{letter}^{n}·(3,4,5) left canonical order"
        )));
    }
    let triple = v.ppt;
    let inradius = chain_inradius(letter, n);
    let circumradius = chain_circumradius(letter, n);
    if inradius != triple.inradius() || circumradius != triple.circumradius() {
        return Err(InvariantViolation(format!(
            "chain radii for {letter}^{n} disagree with direct computation on {triple}"
        )));
    }
    Ok(ChainPoint {
        n,
        triple,
        inradius,
        circumradius,
    })
}
