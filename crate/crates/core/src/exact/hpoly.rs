//! Polynomials in the deformation parameter h with [`Radical`] coefficients.
//!
//! Stored as a map from exponent to nonzero coefficient, ascending; the zero
//! polynomial is the empty map and its degree is `None`. Every matrix entry
//! in the crate lives here.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed};

use super::radical::Radical;
use super::rational::BigRational;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HPoly {
    coeffs: BTreeMap<u32, Radical>,
}

impl HPoly {
    pub fn zero() -> Self {
        HPoly { coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        HPoly::constant(Radical::one())
    }

    /// The monomial coeff·hⁿ.
    pub fn monomial(power: u32, coeff: Radical) -> Self {
        let mut p = HPoly::zero();
        p.add_term(power, coeff);
        p
    }

    /// The monomial q·hⁿ with a rational coefficient.
    pub fn rat_monomial(power: u32, q: BigRational) -> Self {
        HPoly::monomial(power, Radical::from_rational(q))
    }

    pub fn constant(c: Radical) -> Self {
        HPoly::monomial(0, c)
    }

    pub fn rat_constant(q: BigRational) -> Self {
        HPoly::rat_monomial(0, q)
    }

    pub fn from_int(n: i64) -> Self {
        HPoly::constant(Radical::from_int(n))
    }

    /// The indeterminate h.
    pub fn h() -> Self {
        HPoly::monomial(1, Radical::one())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, power: u32) -> Radical {
        self.coeffs.get(&power).cloned().unwrap_or_else(Radical::zero)
    }

    /// The constant term, i.e. the classical h → 0 limit.
    pub fn eval_at_zero(&self) -> Radical {
        self.coeff(0)
    }

    pub fn is_constant(&self) -> bool {
        self.degree().map_or(true, |d| d == 0)
    }

    /// Iterates (power, coefficient) pairs in ascending power order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &Radical)> {
        self.coeffs.iter().map(|(p, c)| (*p, c))
    }

    fn add_term(&mut self, power: u32, coeff: Radical) {
        if coeff.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&power) {
            Some(c) => {
                let sum = &*c + &coeff;
                if sum.is_zero() {
                    self.coeffs.remove(&power);
                } else {
                    *c = sum;
                }
            }
            None => {
                self.coeffs.insert(power, coeff);
            }
        }
    }

    pub fn scale(&self, c: &Radical) -> HPoly {
        let mut out = HPoly::zero();
        for (p, q) in &self.coeffs {
            out.add_term(*p, q * c);
        }
        out
    }

    pub fn scale_rat(&self, q: &BigRational) -> HPoly {
        self.scale(&Radical::from_rational(q.clone()))
    }
}

impl Add<&HPoly> for &HPoly {
    type Output = HPoly;
    fn add(self, rhs: &HPoly) -> HPoly {
        let mut out = self.clone();
        for (p, c) in &rhs.coeffs {
            out.add_term(*p, c.clone());
        }
        out
    }
}

impl Sub<&HPoly> for &HPoly {
    type Output = HPoly;
    fn sub(self, rhs: &HPoly) -> HPoly {
        let mut out = self.clone();
        for (p, c) in &rhs.coeffs {
            out.add_term(*p, -c);
        }
        out
    }
}

impl Mul<&HPoly> for &HPoly {
    type Output = HPoly;
    fn mul(self, rhs: &HPoly) -> HPoly {
        let mut out = HPoly::zero();
        for (p1, c1) in &self.coeffs {
            for (p2, c2) in &rhs.coeffs {
                out.add_term(p1 + p2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &HPoly {
    type Output = HPoly;
    fn neg(self) -> HPoly {
        let mut out = HPoly::zero();
        for (p, c) in &self.coeffs {
            out.add_term(*p, -c);
        }
        out
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<HPoly> for HPoly {
            type Output = HPoly;
            fn $method(self, rhs: HPoly) -> HPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&HPoly> for HPoly {
            type Output = HPoly;
            fn $method(self, rhs: &HPoly) -> HPoly {
                (&self).$method(rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for HPoly {
    type Output = HPoly;
    fn neg(self) -> HPoly {
        -&self
    }
}

/// Renders one monomial |q|·√r·hⁿ (sign handled by the caller) in the
/// compact form used for matrix entries: `h^2/12`, `3h^2/4`, `sqrt(2)h/2`.
fn fmt_abs_term(
    f: &mut fmt::Formatter<'_>,
    abs: &BigRational,
    radicand: &num_bigint::BigInt,
    power: u32,
) -> fmt::Result {
    let mut head = String::new();
    if !abs.numer().is_one() || (radicand.is_one() && power == 0) {
        head.push_str(&abs.numer().to_string());
    }
    if !radicand.is_one() {
        head.push_str(&format!("sqrt({radicand})"));
    }
    if power == 1 {
        head.push('h');
    } else if power > 1 {
        head.push_str(&format!("h^{power}"));
    }
    write!(f, "{head}")?;
    if !abs.denom().is_one() {
        write!(f, "/{}", abs.denom())?;
    }
    Ok(())
}

impl fmt::Display for HPoly {
    /// Paper-style entries: `0`, `1`, `h`, `h^2/12`, `-3h^2/4`,
    /// `4 - 5h^2/4`, `(1 + sqrt(2))h`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (power, coeff) in self.terms() {
            if coeff.num_terms() == 1 {
                let (radicand, q) = coeff.terms().next().unwrap();
                let neg = q.is_negative();
                if first {
                    if neg {
                        write!(f, "-")?;
                    }
                } else if neg {
                    write!(f, " - ")?;
                } else {
                    write!(f, " + ")?;
                }
                fmt_abs_term(f, &q.abs(), radicand, power)?;
            } else {
                if !first {
                    write!(f, " + ")?;
                }
                write!(f, "({coeff})")?;
                if power == 1 {
                    write!(f, "h")?;
                } else if power > 1 {
                    write!(f, "h^{power}")?;
                }
            }
            first = false;
        }
        Ok(())
    }
}
