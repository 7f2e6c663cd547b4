//! Half-integer spin and weight labels.
//!
//! Every j and m label in the crate is a [`HalfInt`], stored as its doubled
//! value so that all label arithmetic stays in exact integers. This is the
//! only index currency: 2j and 2m never leave `i64` range at desk scale.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use thiserror::Error;

/// A half-integer stored as twice its value.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };

    /// Builds the half-integer t/2 from its doubled value t.
    pub fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    /// Builds the integer value n.
    pub fn from_int(n: i64) -> Self {
        HalfInt { twice: 2 * n }
    }

    pub fn twice(self) -> i64 {
        self.twice
    }

    pub fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    /// The value as an ordinary integer, when it is one.
    pub fn as_integer(self) -> Option<i64> {
        if self.is_integer() {
            Some(self.twice / 2)
        } else {
            None
        }
    }

    /// Integer value, panicking on a genuine half-odd-integer.
    ///
    /// Used where validity of the surrounding labels already guarantees
    /// integrality (sums like j + m).
    pub fn expect_integer(self) -> i64 {
        self.as_integer()
            .unwrap_or_else(|| panic!("{self} is not an integer"))
    }

    pub fn abs(self) -> Self {
        HalfInt { twice: self.twice.abs() }
    }

    pub fn is_negative(self) -> bool {
        self.twice < 0
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt { twice: self.twice + rhs.twice }
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt { twice: self.twice - rhs.twice }
    }
}

impl Add<i64> for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: i64) -> HalfInt {
        HalfInt { twice: self.twice + 2 * rhs }
    }
}

impl Sub<i64> for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: i64) -> HalfInt {
        HalfInt { twice: self.twice - 2 * rhs }
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt { twice: -self.twice }
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("`{0}` is not a half-integer (expected forms like \"2\", \"1/2\", \"-3/2\")")]
pub struct ParseHalfIntError(pub String);

impl FromStr for HalfInt {
    type Err = ParseHalfIntError;

    /// Accepts "2", "-1", "1/2", "-3/2" and any fraction that reduces to a
    /// half-integer; rejects everything else ("5/3", "0.5", ...).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseHalfIntError(s.to_string());
        match s.split_once('/') {
            None => {
                let n: i64 = s.trim().parse().map_err(|_| bad())?;
                Ok(HalfInt::from_int(n))
            }
            Some((num, den)) => {
                let n: i64 = num.trim().parse().map_err(|_| bad())?;
                let d: i64 = den.trim().parse().map_err(|_| bad())?;
                if d == 0 || (2 * n) % d != 0 {
                    return Err(bad());
                }
                Ok(HalfInt::from_twice(2 * n / d))
            }
        }
    }
}
