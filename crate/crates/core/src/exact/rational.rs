//! Arbitrary-precision rational helpers.
//!
//! The rational type itself is `num_rational::BigRational`, which already
//! maintains the canonical form we rely on everywhere: fully reduced, with a
//! strictly positive denominator and zero stored as 0/1.

use num_bigint::BigInt;

pub use num_rational::BigRational;

/// Rational n/d from machine integers. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Exact factorial n!.
///
/// Panics on negative input; every call site works with counts derived from
/// valid (j, m) labels, where the arguments are non-negative by construction.
pub fn factorial(n: i64) -> BigInt {
    assert!(n >= 0, "factorial of negative integer {n}");
    let mut acc = BigInt::from(1);
    for k in 2..=n {
        acc *= k;
    }
    acc
}
