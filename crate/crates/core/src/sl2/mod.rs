//! Classical sl(2) representation theory.
//!
//! Irreducible representations V^(j) are labeled by a half-integer j ≥ 0
//! and carried here in two bases:
//!
//! - the e-basis, with the familiar symmetric matrix elements
//!   Z± e_m = √((j∓m)(j±m+1)) e_{m±1};
//! - the v-basis v_m = α_{j,m} e_m with α_{j,m} = √((j+m)!/(j−m)!), in which
//!   Z₊ v_m = v_{m+1} and Z₋ v_m = (j+m)(j−m+1) v_{m−1}, so all matrix
//!   elements are rational.
//!
//! The internal basis ordering is always ascending in m (m = −j … j);
//! descending displays are a presentation-time flip.

mod coupling;

pub use coupling::{su2_cgc, su2_cgc_matrix, su2_cgc_oracle, CoupledIndex};

use num_bigint::BigInt;
use thiserror::Error;

use crate::exact::{factorial, BigRational, HPoly, HalfInt, PolyMatrix, Radical};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelError {
    #[error("2j = {twice_j} must be a non-negative integer")]
    InvalidJ { twice_j: i64 },
    #[error("m = {m} is not a weight of the representation with j = {j}")]
    InvalidM { j: HalfInt, m: HalfInt },
    #[error("(j1, j2, j) = ({j1}, {j2}, {j}) violates the triangle condition")]
    Triangle { j1: HalfInt, j2: HalfInt, j: HalfInt },
}

/// A validated representation label j (2j a non-negative integer).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RepLabel {
    j: HalfInt,
}

impl RepLabel {
    pub fn new(j: HalfInt) -> Result<Self, LabelError> {
        if j.twice() < 0 {
            return Err(LabelError::InvalidJ { twice_j: j.twice() });
        }
        Ok(RepLabel { j })
    }

    pub fn from_twice(twice_j: i64) -> Result<Self, LabelError> {
        RepLabel::new(HalfInt::from_twice(twice_j))
    }

    pub fn j(&self) -> HalfInt {
        self.j
    }

    /// dim V^(j) = 2j + 1.
    pub fn dim(&self) -> usize {
        (self.j.twice() + 1) as usize
    }

    /// Whether m is a valid weight: |m| ≤ j and m ≡ j (mod 1).
    pub fn contains(&self, m: HalfInt) -> bool {
        m.abs().twice() <= self.j.twice() && (m.twice() - self.j.twice()) % 2 == 0
    }

    pub fn check_weight(&self, m: HalfInt) -> Result<(), LabelError> {
        if self.contains(m) {
            Ok(())
        } else {
            Err(LabelError::InvalidM { j: self.j, m })
        }
    }

    /// Weights in ascending order, m = −j … j.
    pub fn weights(&self) -> impl Iterator<Item = HalfInt> {
        let j = self.j;
        (0..self.dim() as i64).map(move |i| HalfInt::from_twice(-j.twice() + 2 * i))
    }

    /// Position of m in the ascending ordering.
    pub fn index_of(&self, m: HalfInt) -> Option<usize> {
        if self.contains(m) {
            Some(((m.twice() + self.j.twice()) / 2) as usize)
        } else {
            None
        }
    }

    pub fn weight_at(&self, index: usize) -> HalfInt {
        debug_assert!(index < self.dim());
        HalfInt::from_twice(-self.j.twice() + 2 * index as i64)
    }
}

/// dim V^(j) = 2j + 1, rejecting negative 2j.
pub fn dim(j: HalfInt) -> Result<usize, LabelError> {
    Ok(RepLabel::new(j)?.dim())
}

/// The two bases of V^(j).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    /// Symmetric square-root matrix elements.
    E,
    /// Rational matrix elements, v_m = α_{j,m} e_m.
    V,
}

/// A labeled basis vector e^j_m or v^j_m.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BasisVectorId {
    pub j: HalfInt,
    pub m: HalfInt,
    pub flavor: Basis,
}

impl BasisVectorId {
    pub fn new(j: HalfInt, m: HalfInt, flavor: Basis) -> Result<Self, LabelError> {
        RepLabel::new(j)?.check_weight(m)?;
        Ok(BasisVectorId { j, m, flavor })
    }
}

impl std::fmt::Display for BasisVectorId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let tag = match self.flavor {
            Basis::E => 'e',
            Basis::V => 'v',
        };
        write!(f, "{tag}[{},{}]", self.j, self.m)
    }
}

/// α_{j,m}² = (j+m)!/(j−m)! as an exact rational.
pub fn alpha_sq(j: HalfInt, m: HalfInt) -> Result<BigRational, LabelError> {
    RepLabel::new(j)?.check_weight(m)?;
    let plus = (j + m).expect_integer();
    let minus = (j - m).expect_integer();
    Ok(BigRational::new(factorial(plus), factorial(minus)))
}

/// α_{j,m} = √((j+m)!/(j−m)!), the e-basis/v-basis scaling factor.
pub fn alpha(j: HalfInt, m: HalfInt) -> Result<Radical, LabelError> {
    let sq = alpha_sq(j, m)?;
    Ok(Radical::sqrt_rational(&sq).expect("alpha_sq is non-negative"))
}

/// α_{j,a}/α_{j,b} = √((j+a)!(j−b)! / ((j−a)!(j+b)!)), kept as a single
/// square root so no radical division is ever performed.
pub fn alpha_ratio(j: HalfInt, a: HalfInt, b: HalfInt) -> Result<Radical, LabelError> {
    let label = RepLabel::new(j)?;
    label.check_weight(a)?;
    label.check_weight(b)?;
    let num = factorial((j + a).expect_integer()) * factorial((j - b).expect_integer());
    let den = factorial((j - a).expect_integer()) * factorial((j + b).expect_integer());
    Ok(Radical::sqrt_rational(&BigRational::new(num, den)).expect("ratio is non-negative"))
}

/// The generators H, Z₊, Z₋ of one classical irreducible representation, as
/// constant matrices in the ascending-m ordering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Triple {
    pub h: PolyMatrix,
    pub z_plus: PolyMatrix,
    pub z_minus: PolyMatrix,
}

/// Classical matrices on V^(j) in the requested basis flavor.
pub fn sl2_matrices(j: RepLabel, flavor: Basis) -> Sl2Triple {
    let n = j.dim();
    let mut h = PolyMatrix::zero(n, n);
    let mut z_plus = PolyMatrix::zero(n, n);
    let mut z_minus = PolyMatrix::zero(n, n);
    for (col, m) in j.weights().enumerate() {
        h.set(col, col, HPoly::rat_constant(BigRational::from_integer(BigInt::from(m.twice()))));
        // raising: m -> m+1
        if let Some(row) = j.index_of(m + 1) {
            let coeff = match flavor {
                Basis::V => Radical::one(),
                Basis::E => e_basis_step(j.j(), m, true),
            };
            z_plus.set(row, col, HPoly::constant(coeff));
        }
        // lowering: m -> m-1
        if let Some(row) = j.index_of(m - 1) {
            let coeff = match flavor {
                Basis::V => {
                    let c = (j.j() + m).expect_integer() * (j.j() - m + 1).expect_integer();
                    Radical::from_int(c)
                }
                Basis::E => e_basis_step(j.j(), m, false),
            };
            z_minus.set(row, col, HPoly::constant(coeff));
        }
    }
    Sl2Triple { h, z_plus, z_minus }
}

/// √((j∓m)(j±m+1)) for Z± in the e-basis.
fn e_basis_step(j: HalfInt, m: HalfInt, raising: bool) -> Radical {
    let product = if raising {
        (j - m).expect_integer() * (j + m + 1).expect_integer()
    } else {
        (j + m).expect_integer() * (j - m + 1).expect_integer()
    };
    Radical::sqrt_nat(&BigInt::from(product)).expect("non-negative step product")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn h(t: i64) -> HalfInt {
        HalfInt::from_twice(t)
    }

    fn rep(t: i64) -> RepLabel {
        RepLabel::from_twice(t).unwrap()
    }

    #[test]
    fn dimensions() {
        assert_eq!(dim(h(0)).unwrap(), 1);
        assert_eq!(dim(h(1)).unwrap(), 2);
        assert_eq!(dim(h(4)).unwrap(), 5);
        assert!(matches!(dim(h(-2)), Err(LabelError::InvalidJ { twice_j: -2 })));
    }

    #[test]
    fn weight_validation() {
        let j = rep(2); // j = 1
        assert!(j.contains(h(0)));
        assert!(!j.contains(h(1))); // wrong parity
        assert!(!j.contains(h(4))); // out of range
        assert_eq!(j.index_of(h(-2)), Some(0));
        assert_eq!(j.index_of(h(2)), Some(2));
        assert!(BasisVectorId::new(h(1), h(3), Basis::E).is_err());
    }

    #[test]
    fn alpha_values() {
        // α_{1/2,−1/2} = √(0!/1!) = 1
        assert_eq!(alpha(h(1), h(-1)).unwrap(), Radical::one());
        // α_{1,1} = √(2!/0!) = √2
        let s2 = Radical::sqrt_nat(&BigInt::from(2)).unwrap();
        assert_eq!(alpha(h(2), h(2)).unwrap(), s2);
        // α_{2,0} = √(2!/2!) = 1, cross-checked against the brute-force
        // factorial quotient
        assert_eq!(alpha_sq(h(4), h(0)).unwrap(), rat(2, 2));
        assert_eq!(alpha(h(4), h(0)).unwrap(), Radical::one());
        assert!(alpha(h(2), h(4)).is_err());
    }

    #[test]
    fn alpha_sq_matches_explicit_products() {
        // (j+m)!/(j−m)! computed by direct multiplication for all 2j ≤ 6
        for tj in 0..=6 {
            let j = rep(tj);
            for m in j.weights() {
                let plus = (j.j() + m).expect_integer();
                let minus = (j.j() - m).expect_integer();
                let mut expected = rat(1, 1);
                if plus >= minus {
                    for k in (minus + 1)..=plus {
                        expected *= rat(k, 1);
                    }
                } else {
                    for k in (plus + 1)..=minus {
                        expected /= rat(k, 1);
                    }
                }
                assert_eq!(alpha_sq(j.j(), m).unwrap(), expected);
            }
        }
    }

    #[test]
    fn v_basis_matrices_for_spin_half() {
        let t = sl2_matrices(rep(1), Basis::V);
        // Z₊ v_{−1/2} = v_{1/2}
        assert_eq!(t.z_plus.get(1, 0), &HPoly::one());
        assert_eq!(t.z_plus.get(0, 1), &HPoly::zero());
        // Z₋ v_{1/2} = 1·v_{−1/2}
        assert_eq!(t.z_minus.get(0, 1), &HPoly::one());
        // Z₊ v_{j} = 0: top column is zero
        assert!(t.z_plus.get(0, 0).is_zero() && t.z_plus.get(1, 1).is_zero());
    }

    #[test]
    fn h_is_ascending_weight_diagonal() {
        let t = sl2_matrices(rep(4), Basis::V);
        for (i, expected) in [-4i64, -2, 0, 2, 4].into_iter().enumerate() {
            assert_eq!(t.h.get(i, i), &HPoly::from_int(expected));
        }
    }

    #[test]
    fn commutation_relations_both_flavors_through_2j_8() {
        for tj in 0..=8 {
            let j = rep(tj);
            for flavor in [Basis::V, Basis::E] {
                let t = sl2_matrices(j, flavor);
                let two_zp = t.z_plus.scale(&HPoly::from_int(2));
                let two_zm = t.z_minus.scale(&HPoly::from_int(2));
                assert_eq!(t.h.commutator(&t.z_plus), two_zp, "2j={tj} [H,Z+]");
                assert_eq!(t.h.commutator(&t.z_minus), -&two_zm, "2j={tj} [H,Z-]");
                assert_eq!(t.z_plus.commutator(&t.z_minus), t.h, "2j={tj} [Z+,Z-]");
            }
        }
    }

    #[test]
    fn alpha_conjugation_turns_v_flavor_into_e_flavor() {
        for tj in 0..=8 {
            let j = rep(tj);
            let v = sl2_matrices(j, Basis::V);
            let e = sl2_matrices(j, Basis::E);
            let conjugate = |m: &PolyMatrix| {
                PolyMatrix::from_fn(j.dim(), j.dim(), |r, c| {
                    let ratio = alpha_ratio(j.j(), j.weight_at(r), j.weight_at(c)).unwrap();
                    m.get(r, c).scale(&ratio)
                })
            };
            assert_eq!(conjugate(&v.z_plus), e.z_plus, "2j={tj}");
            assert_eq!(conjugate(&v.z_minus), e.z_minus, "2j={tj}");
            assert_eq!(conjugate(&v.h), e.h, "2j={tj}");
        }
    }
}
