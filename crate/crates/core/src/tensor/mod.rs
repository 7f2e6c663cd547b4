//! Tensor products of two irreducible representations.
//!
//! The uncoupled basis of V^(j₁) ⊗ V^(j₂) is v^{j₁}_{m₁} ⊗ v^{j₂}_{m₂} in
//! lexicographic ascending (m₁, m₂) order. The w-basis
//!
//! ```text
//! w_{m1,m2} = Σ_{k=0}^{j1−m1} Σ_{l=0}^{j2−m2} a^{m1,m2}_{k,l} · v_{m1+k} ⊗ v_{m2+l}
//! ```
//!
//! diagonalizes Δ(H), and the coproducts of H, Z₊, Z₋ act on it exactly like
//! the classical Lie coproducts act on the uncoupled vectors. Its matrix is
//! unipotent upper triangular, its inverse is its skew-transpose, and at
//! h = 0 it degenerates to the identity.

pub mod coeffs;
mod coproduct;
mod verify;

pub use coeffs::{a_coeff, b_coeff, pochhammer};
pub use coproduct::{coproduct_matrix, CoprodGen};
pub use verify::{
    check_skew_inverse_matrix, check_w_action, verify_classical_conjugation,
    verify_coproduct_relations, verify_skew_inverse, verify_w_action, xy_identity_check,
};

use crate::exact::{HPoly, HalfInt, PolyMatrix};
use crate::sl2::RepLabel;

/// The canonical bijection between pairs (m₁, m₂) and flat indices,
/// lexicographic ascending in (m₁, m₂).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TensorIndex {
    pub j1: RepLabel,
    pub j2: RepLabel,
}

impl TensorIndex {
    pub fn new(j1: RepLabel, j2: RepLabel) -> Self {
        TensorIndex { j1, j2 }
    }

    pub fn size(&self) -> usize {
        self.j1.dim() * self.j2.dim()
    }

    pub fn flat(&self, m1: HalfInt, m2: HalfInt) -> Option<usize> {
        Some(self.j1.index_of(m1)? * self.j2.dim() + self.j2.index_of(m2)?)
    }

    pub fn pair_at(&self, index: usize) -> (HalfInt, HalfInt) {
        let d2 = self.j2.dim();
        (self.j1.weight_at(index / d2), self.j2.weight_at(index % d2))
    }

    /// All pairs in flat order.
    pub fn pairs(&self) -> impl Iterator<Item = (HalfInt, HalfInt)> + '_ {
        (0..self.size()).map(|i| self.pair_at(i))
    }
}

/// The w-basis of V^(j₁) ⊗ V^(j₂): row (m₁, m₂) holds the expansion of
/// w_{m1,m2} over the uncoupled basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WBasis {
    pub j1: RepLabel,
    pub j2: RepLabel,
    pub matrix: PolyMatrix,
}

impl WBasis {
    pub fn index(&self) -> TensorIndex {
        TensorIndex::new(self.j1, self.j2)
    }
}

/// Builds the w-basis matrix from the a-coefficients.
pub fn w_basis(j1: RepLabel, j2: RepLabel) -> WBasis {
    let index = TensorIndex::new(j1, j2);
    let n = index.size();
    let mut matrix = PolyMatrix::zero(n, n);
    for (row, (m1, m2)) in index.pairs().enumerate() {
        let k_max = (j1.j() - m1).expect_integer();
        let l_max = (j2.j() - m2).expect_integer();
        for k in 0..=k_max {
            for l in 0..=l_max {
                let value = a_coeff(m1, m2, k, l);
                if value.is_zero() {
                    continue;
                }
                let col = index
                    .flat(m1 + k, m2 + l)
                    .expect("shifted labels stay in range");
                matrix.set(row, col, value);
            }
        }
    }
    WBasis { j1, j2, matrix }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn rep(t: i64) -> RepLabel {
        RepLabel::from_twice(t).unwrap()
    }

    fn hp(n: i64, d: i64, pow: u32) -> HPoly {
        HPoly::rat_monomial(pow, rat(n, d))
    }

    /// The 6×6 w-matrix of V^(1) ⊗ V^(1/2), transcribed by hand from the
    /// a-coefficient formula.
    pub(crate) fn w_6x6_expected() -> PolyMatrix {
        let o = HPoly::one;
        let z = HPoly::zero;
        PolyMatrix::from_rows(vec![
            vec![o(), hp(1, 1, 1), hp(-1, 2, 1), hp(1, 4, 2), hp(1, 4, 2), hp(-1, 8, 3)],
            vec![z(), o(), z(), hp(1, 2, 1), z(), z()],
            vec![z(), z(), o(), z(), hp(-1, 2, 1), hp(1, 4, 2)],
            vec![z(), z(), z(), o(), z(), hp(1, 2, 1)],
            vec![z(), z(), z(), z(), o(), hp(-1, 1, 1)],
            vec![z(), z(), z(), z(), z(), o()],
        ])
    }

    /// Its inverse, i.e. its reflection along the second diagonal.
    pub(crate) fn w_6x6_inverse_expected() -> PolyMatrix {
        let o = HPoly::one;
        let z = HPoly::zero;
        PolyMatrix::from_rows(vec![
            vec![o(), hp(-1, 1, 1), hp(1, 2, 1), hp(1, 4, 2), z(), hp(-1, 8, 3)],
            vec![z(), o(), z(), hp(-1, 2, 1), z(), hp(1, 4, 2)],
            vec![z(), z(), o(), z(), hp(1, 2, 1), hp(1, 4, 2)],
            vec![z(), z(), z(), o(), z(), hp(-1, 2, 1)],
            vec![z(), z(), z(), z(), o(), hp(1, 1, 1)],
            vec![z(), z(), z(), z(), z(), o()],
        ])
    }

    #[test]
    fn tensor_index_round_trips() {
        let index = TensorIndex::new(rep(2), rep(1));
        assert_eq!(index.size(), 6);
        for i in 0..index.size() {
            let (m1, m2) = index.pair_at(i);
            assert_eq!(index.flat(m1, m2), Some(i));
        }
        assert_eq!(index.flat(HalfInt::from_int(2), HalfInt::from_twice(1)), None);
    }

    #[test]
    fn w_basis_1_half_matches_golden_matrix() {
        let w = w_basis(rep(2), rep(1));
        assert_eq!(w.matrix, w_6x6_expected());
    }

    #[test]
    fn w_basis_trivial_cases() {
        assert_eq!(w_basis(rep(0), rep(0)).matrix, PolyMatrix::identity(1));
        // at h = 0 only the k = l = 0 term survives
        for (t1, t2) in [(1, 1), (2, 1), (3, 2), (4, 4)] {
            let w = w_basis(rep(t1), rep(t2));
            let n = w.matrix.rows();
            assert_eq!(w.matrix.eval_at_zero(), PolyMatrix::identity(n));
        }
    }

    #[test]
    fn w_basis_is_unipotent_upper_triangular() {
        for t1 in 0..=6 {
            for t2 in 0..=6 {
                let w = w_basis(rep(t1), rep(t2)).matrix;
                for r in 0..w.rows() {
                    assert_eq!(w.get(r, r), &HPoly::one(), "({t1},{t2}) diagonal");
                    for c in 0..r {
                        assert!(w.get(r, c).is_zero(), "({t1},{t2}) below diagonal");
                    }
                }
            }
        }
    }
}
