//! Conversions from arbitrary-precision integers to `f64` that stay accurate
//! (a few ulp) regardless of operand size, saturating to infinity only when
//! the final value itself exceeds the `f64` range.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

pub(crate) fn big_to_f64(n: &BigInt) -> f64 {
    // num-bigint rounds to nearest and saturates to infinity.
    n.to_f64().expect("BigInt -> f64 is total")
}

/// √n for n ≥ 0, computed from a 104-bit prefix when n itself is too wide.
pub(crate) fn big_sqrt_f64(n: &BigInt) -> f64 {
    debug_assert!(!n.is_negative());
    let bits = n.bits();
    if bits <= 1000 {
        return big_to_f64(n).sqrt();
    }
    // Even shift so the power of two comes back out of the square root exactly.
    let mut s = bits - 104;
    if s % 2 == 1 {
        s += 1;
    }
    let head = n >> s;
    big_to_f64(&head).sqrt() * 2f64.powi((s / 2) as i32)
}

/// num / den with the quotient formed from ~55 significant bits.
pub(crate) fn big_ratio_f64(num: &BigInt, den: &BigInt) -> f64 {
    debug_assert!(!den.is_zero());
    if num.is_zero() {
        return 0.0;
    }
    let shift = den.bits() as i64 - num.bits() as i64 + 55;
    let scaled = if shift >= 0 {
        num << shift as usize
    } else {
        num >> (-shift) as usize
    };
    let q = scaled / den;
    big_to_f64(&q) * 2f64.powi(i32::try_from(-shift).unwrap_or(if shift > 0 { i32::MIN } else { i32::MAX }))
}
