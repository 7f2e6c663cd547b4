//! The radical ring: finite ℚ-linear combinations of square roots of
//! distinct squarefree positive integers.
//!
//! A value Σ qᵣ·√r is stored as a map from the squarefree radicand r to its
//! rational coefficient qᵣ; the radicand 1 holds the rational part. Normal
//! form (squarefree keys, no zero coefficients) is restored after every
//! operation, so `==` is mathematical equality. This field fragment is
//! exactly large enough for the α-factors √((j+m)!/(j−m)!) and for su(2)
//! Clebsch-Gordan coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::BigRational;
use super::ExactError;

/// Writes n ≥ 1 as outer² × radicand with radicand squarefree.
///
/// Plain trial division; every input in this crate is a product of small
/// factorials, so all prime factors are tiny.
pub fn squarefree_decompose(n: &BigInt) -> Result<(BigInt, BigInt), ExactError> {
    if !n.is_positive() {
        return Err(ExactError::NonPositive(n.to_string()));
    }
    let mut rest = n.clone();
    let mut outer = BigInt::one();
    let mut radicand = BigInt::one();
    let mut d = BigInt::from(2);
    while &d * &d <= rest {
        let mut exp = 0u64;
        while (&rest % &d).is_zero() {
            rest /= &d;
            exp += 1;
        }
        if exp > 0 {
            outer *= d.pow((exp / 2) as u32);
            if exp % 2 == 1 {
                radicand *= &d;
            }
        }
        d += 1;
    }
    if rest > BigInt::one() {
        radicand *= rest; // leftover prime
    }
    Ok((outer, radicand))
}

/// Σ qᵣ·√r over squarefree positive radicands r.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Radical {
    terms: BTreeMap<BigInt, BigRational>,
}

impl Radical {
    pub fn zero() -> Self {
        Radical { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Radical::from_rational(BigRational::one())
    }

    pub fn from_rational(q: BigRational) -> Self {
        let mut r = Radical::zero();
        r.add_term(BigInt::one(), q);
        r
    }

    pub fn from_int(n: i64) -> Self {
        Radical::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// √n for a non-negative integer n, in normal form.
    pub fn sqrt_nat(n: &BigInt) -> Result<Self, ExactError> {
        if n.is_negative() {
            return Err(ExactError::NegativeRadicand(n.to_string()));
        }
        if n.is_zero() {
            return Ok(Radical::zero());
        }
        let (outer, radicand) = squarefree_decompose(n)?;
        let mut r = Radical::zero();
        r.add_term(radicand, BigRational::from_integer(outer));
        Ok(r)
    }

    /// √(p/q) for a non-negative rational, via √(p/q) = √(pq)/q.
    pub fn sqrt_rational(q: &BigRational) -> Result<Self, ExactError> {
        if q.is_negative() {
            return Err(ExactError::NegativeRadicand(q.to_string()));
        }
        let pq = q.numer() * q.denom();
        let mut root = Radical::sqrt_nat(&pq)?;
        root.scale_assign(&BigRational::new(BigInt::one(), q.denom().clone()));
        Ok(root)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient of √1, i.e. the rational part.
    pub fn rational_part(&self) -> BigRational {
        self.terms.get(&BigInt::one()).cloned().unwrap_or_else(BigRational::zero)
    }

    /// The value as a plain rational, if no genuine radical term is present.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&BigInt::one()).cloned(),
            _ => None,
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterates (radicand, coefficient) pairs in ascending radicand order.
    pub fn terms(&self) -> impl Iterator<Item = (&BigInt, &BigRational)> {
        self.terms.iter()
    }

    /// Multiplicative inverse of a single-term radical q·√r:
    /// 1/(q√r) = (1/(q·r))·√r. Returns None for zero or multi-term values.
    pub fn inv_single_term(&self) -> Option<Radical> {
        if self.terms.len() != 1 {
            return None;
        }
        let (r, q) = self.terms.iter().next().unwrap();
        let mut out = Radical::zero();
        out.add_term(
            r.clone(),
            BigRational::new(BigInt::one(), BigInt::one())
                / (q * BigRational::from_integer(r.clone())),
        );
        Some(out)
    }

    fn add_term(&mut self, radicand: BigInt, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(radicand.clone()).or_insert_with(BigRational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&radicand);
        }
    }

    pub fn scale_assign(&mut self, q: &BigRational) {
        if q.is_zero() {
            self.terms.clear();
            return;
        }
        for coeff in self.terms.values_mut() {
            *coeff *= q;
        }
    }

    pub fn scaled(&self, q: &BigRational) -> Radical {
        let mut out = self.clone();
        out.scale_assign(q);
        out
    }
}

impl Add<&Radical> for &Radical {
    type Output = Radical;
    fn add(self, rhs: &Radical) -> Radical {
        let mut out = self.clone();
        for (r, q) in &rhs.terms {
            out.add_term(r.clone(), q.clone());
        }
        out
    }
}

impl Sub<&Radical> for &Radical {
    type Output = Radical;
    fn sub(self, rhs: &Radical) -> Radical {
        let mut out = self.clone();
        for (r, q) in &rhs.terms {
            out.add_term(r.clone(), -q.clone());
        }
        out
    }
}

impl Neg for &Radical {
    type Output = Radical;
    fn neg(self) -> Radical {
        let mut out = self.clone();
        for coeff in out.terms.values_mut() {
            *coeff = -coeff.clone();
        }
        out
    }
}

impl Mul<&Radical> for &Radical {
    type Output = Radical;

    /// Product of √r₁ and √r₂ for squarefree r₁, r₂: with g = gcd(r₁, r₂),
    /// √r₁·√r₂ = g·√(r₁r₂/g²), and r₁r₂/g² is squarefree again. No
    /// factorization is needed here.
    fn mul(self, rhs: &Radical) -> Radical {
        let mut out = Radical::zero();
        for (r1, q1) in &self.terms {
            for (r2, q2) in &rhs.terms {
                let g = r1.gcd(r2);
                let radicand = (r1 / &g) * (r2 / &g);
                out.add_term(radicand, q1 * q2 * BigRational::from_integer(g));
            }
        }
        out
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Radical> for Radical {
            type Output = Radical;
            fn $method(self, rhs: Radical) -> Radical {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Radical> for Radical {
            type Output = Radical;
            fn $method(self, rhs: &Radical) -> Radical {
                (&self).$method(rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for Radical {
    type Output = Radical;
    fn neg(self) -> Radical {
        -&self
    }
}

impl fmt::Display for Radical {
    /// Renders e.g. `2`, `-1/2`, `sqrt(2)`, `-sqrt(2)/2`, `3sqrt(5)/4`,
    /// `1 + sqrt(2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (radicand, coeff)) in self.terms.iter().enumerate() {
            let neg = coeff.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = coeff.abs();
            if radicand.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.numer().is_one() {
                    write!(f, "{}", abs.numer())?;
                }
                write!(f, "sqrt({radicand})")?;
                if !abs.denom().is_one() {
                    write!(f, "/{}", abs.denom())?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    /// Independent oracle: largest o with o² | n, by exhaustive search.
    fn squarefree_oracle(n: u64) -> (u64, u64) {
        let mut outer = 1;
        for o in 1..=n {
            if o * o > n {
                break;
            }
            if n % (o * o) == 0 {
                outer = o;
            }
        }
        (outer, n / (outer * outer))
    }

    fn decompose_u64(n: u64) -> (BigInt, BigInt) {
        squarefree_decompose(&BigInt::from(n)).unwrap()
    }

    #[test]
    fn squarefree_identity_case() {
        assert_eq!(decompose_u64(1), (BigInt::from(1), BigInt::from(1)));
    }

    #[test]
    fn squarefree_twelve() {
        assert_eq!(decompose_u64(12), (BigInt::from(2), BigInt::from(3)));
    }

    #[test]
    fn squarefree_720_matches_brute_force_oracle() {
        assert_eq!(squarefree_oracle(720), (12, 5));
        assert_eq!(decompose_u64(720), (BigInt::from(12), BigInt::from(5)));
    }

    #[test]
    fn squarefree_rejects_nonpositive() {
        assert!(squarefree_decompose(&BigInt::from(0)).is_err());
        assert!(squarefree_decompose(&BigInt::from(-4)).is_err());
    }

    #[test]
    fn squarefree_round_trip_to_ten_thousand() {
        for n in 1u64..=10_000 {
            let (outer, radicand) = decompose_u64(n);
            assert_eq!(&outer * &outer * &radicand, BigInt::from(n));
            // radicand squarefree: its own decomposition has outer 1
            let (o2, r2) = squarefree_decompose(&radicand).unwrap();
            assert!(o2.is_one());
            assert_eq!(r2, radicand);
        }
    }

    #[test]
    fn sqrt_two_squares_to_two() {
        let s2 = Radical::sqrt_nat(&BigInt::from(2)).unwrap();
        assert_eq!(&s2 * &s2, Radical::from_int(2));
    }

    #[test]
    fn difference_of_squares() {
        let one = Radical::one();
        let s3 = Radical::sqrt_nat(&BigInt::from(3)).unwrap();
        let prod = &(&one + &s3) * &(&one - &s3);
        assert_eq!(prod, Radical::from_int(-2));
    }

    #[test]
    fn product_renormalizes_radicands() {
        // (1/2)√6 × (1/3)√10 = (1/6)√60 = (1/6)·2√15 = (1/3)√15,
        // cross-checked against squarefree_decompose(60) = (2, 15).
        assert_eq!(decompose_u64(60), (BigInt::from(2), BigInt::from(15)));
        let a = Radical::sqrt_nat(&BigInt::from(6)).unwrap().scaled(&rat(1, 2));
        let b = Radical::sqrt_nat(&BigInt::from(10)).unwrap().scaled(&rat(1, 3));
        let expected = Radical::sqrt_nat(&BigInt::from(15)).unwrap().scaled(&rat(1, 3));
        assert_eq!(&a * &b, expected);
    }

    #[test]
    fn sqrt_rational_normalizes() {
        // √(1/2) = √2/2
        let v = Radical::sqrt_rational(&rat(1, 2)).unwrap();
        let expected = Radical::sqrt_nat(&BigInt::from(2)).unwrap().scaled(&rat(1, 2));
        assert_eq!(v, expected);
        assert!(Radical::sqrt_rational(&rat(-1, 2)).is_err());
    }

    #[test]
    fn inverse_of_single_term() {
        let v = Radical::sqrt_nat(&BigInt::from(8)).unwrap().scaled(&rat(-3, 5));
        let inv = v.inv_single_term().unwrap();
        assert_eq!(&v * &inv, Radical::one());
        let multi = &Radical::one() + &Radical::sqrt_nat(&BigInt::from(2)).unwrap();
        assert!(multi.inv_single_term().is_none());
        assert!(Radical::zero().inv_single_term().is_none());
    }

    #[test]
    fn display_forms() {
        let s2 = Radical::sqrt_nat(&BigInt::from(2)).unwrap();
        assert_eq!(s2.to_string(), "sqrt(2)");
        assert_eq!(s2.scaled(&rat(-1, 2)).to_string(), "-sqrt(2)/2");
        assert_eq!(s2.scaled(&rat(3, 4)).to_string(), "3sqrt(2)/4");
        assert_eq!(Radical::from_rational(rat(-1, 2)).to_string(), "-1/2");
        assert_eq!((&Radical::one() + &s2).to_string(), "1 + sqrt(2)");
        assert_eq!((&Radical::from_int(-1) - &s2).to_string(), "-1 - sqrt(2)");
        assert_eq!(Radical::zero().to_string(), "0");
    }
}
