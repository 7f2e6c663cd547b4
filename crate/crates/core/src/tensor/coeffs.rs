//! The coupling coefficients of the tensor-product eigenbasis.
//!
//! With doubled weights x = 2m₁, y = 2m₂ kept integral throughout:
//!
//! ```text
//! (a)_n = a(a+1)⋯(a+n−1),  (a)_0 = 1
//! b^{m1,m2}_{k,l} = (−2m1−k)_l (−2m2−l)_k / (k! l!)   for k, l ≥ 0, else 0
//! a^{m1,m2}_{k,l} = (−1)^k (h/2)^{k+l} (b^{m1,m2}_{k,l} − b^{m1,m2}_{k−1,l−1})
//! ```
//!
//! a^{m1,m2}_{k,l} is a monomial of degree exactly k+l in h, or zero.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{factorial, BigRational, HPoly, HalfInt};

/// Rising factorial (a)_n.
pub fn pochhammer(a: &BigRational, n: usize) -> BigRational {
    let mut acc = BigRational::one();
    for i in 0..n {
        acc *= a + BigRational::from_integer(BigInt::from(i));
    }
    acc
}

/// b^{m1,m2}_{k,l}; zero whenever k < 0 or l < 0.
pub fn b_coeff(m1: HalfInt, m2: HalfInt, k: i64, l: i64) -> BigRational {
    if k < 0 || l < 0 {
        return BigRational::zero();
    }
    let first = pochhammer(
        &BigRational::from_integer(BigInt::from(-m1.twice() - k)),
        l as usize,
    );
    let second = pochhammer(
        &BigRational::from_integer(BigInt::from(-m2.twice() - l)),
        k as usize,
    );
    first * second / BigRational::from_integer(factorial(k) * factorial(l))
}

/// a^{m1,m2}_{k,l} as an exact polynomial in h.
pub fn a_coeff(m1: HalfInt, m2: HalfInt, k: i64, l: i64) -> HPoly {
    if k < 0 || l < 0 {
        return HPoly::zero();
    }
    let diff = b_coeff(m1, m2, k, l) - b_coeff(m1, m2, k - 1, l - 1);
    if diff.is_zero() {
        return HPoly::zero();
    }
    let degree = (k + l) as u32;
    let mut coeff = diff / BigRational::from_integer(BigInt::from(2).pow(degree));
    if k % 2 == 1 {
        coeff = -coeff;
    }
    HPoly::rat_monomial(degree, coeff)
}
