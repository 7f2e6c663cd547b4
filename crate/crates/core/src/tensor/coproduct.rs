//! Coproduct matrices on V^(j₁) ⊗ V^(j₂).
//!
//! The comultiplication acts by
//!
//! ```text
//! Δ(X) = X ⊗ 1 + 1 ⊗ X
//! Δ(H) = H ⊗ e^{hX} + e^{−hX} ⊗ H
//! Δ(Y) = Y ⊗ e^{hX} + e^{−hX} ⊗ Y
//! ```
//!
//! and Δ(Z±) is obtained by feeding Δ(X), Δ(Y) through the nonlinear map,
//! which terminates because Δ(X) strictly raises the total weight and is
//! therefore nilpotent on the finite tensor space.

use crate::exact::PolyMatrix;
use crate::rep::{cosh_hx_half, exp_hx, exp_neg_hx, z_plus_series, UhRep};
use crate::sl2::RepLabel;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoprodGen {
    H,
    X,
    Y,
    ZPlus,
    ZMinus,
}

/// The matrix of Δ(gen) on V^(j₁) ⊗ V^(j₂) in the uncoupled v ⊗ v basis.
pub fn coproduct_matrix(gen: CoprodGen, j1: RepLabel, j2: RepLabel) -> PolyMatrix {
    let r1 = UhRep::new(j1);
    let r2 = UhRep::new(j2);
    let id1 = PolyMatrix::identity(j1.dim());
    let id2 = PolyMatrix::identity(j2.dim());
    match gen {
        CoprodGen::X => &r1.x.kron(&id2) + &id1.kron(&r2.x),
        CoprodGen::H => {
            let e_plus = exp_hx(&r2.x).expect("X nilpotent");
            let e_minus = exp_neg_hx(&r1.x).expect("X nilpotent");
            &r1.h.kron(&e_plus) + &e_minus.kron(&r2.h)
        }
        CoprodGen::Y => {
            let e_plus = exp_hx(&r2.x).expect("X nilpotent");
            let e_minus = exp_neg_hx(&r1.x).expect("X nilpotent");
            &r1.y.kron(&e_plus) + &e_minus.kron(&r2.y)
        }
        CoprodGen::ZPlus => {
            let dx = coproduct_matrix(CoprodGen::X, j1, j2);
            z_plus_series(&dx).expect("Δ(X) nilpotent on the tensor space")
        }
        CoprodGen::ZMinus => {
            let dx = coproduct_matrix(CoprodGen::X, j1, j2);
            let dy = coproduct_matrix(CoprodGen::Y, j1, j2);
            let c = cosh_hx_half(&dx).expect("Δ(X) nilpotent on the tensor space");
            &(&c * &dy) * &c
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::HPoly;
    use crate::rep::{h_matrix, x_matrix};
    use crate::sl2::{sl2_matrices, Basis};
    use crate::tensor::TensorIndex;

    fn rep(t: i64) -> RepLabel {
        RepLabel::from_twice(t).unwrap()
    }

    #[test]
    fn coproduct_x_is_constant_triangular_sum() {
        let (j1, j2) = (rep(1), rep(1));
        let dx = coproduct_matrix(CoprodGen::X, j1, j2);
        let id = PolyMatrix::identity(2);
        let x = x_matrix(rep(1));
        assert_eq!(dx, &x.kron(&id) + &id.kron(&x));
        assert_eq!(dx.max_degree(), Some(0));
    }

    #[test]
    fn coproduct_h_at_zero_is_lie_coproduct() {
        let (j1, j2) = (rep(2), rep(1));
        let dh = coproduct_matrix(CoprodGen::H, j1, j2);
        let lie = &h_matrix(j1).kron(&PolyMatrix::identity(2))
            + &PolyMatrix::identity(3).kron(&h_matrix(j2));
        assert_eq!(dh.eval_at_zero(), lie);
    }

    #[test]
    fn coproduct_h_weights_on_w_vectors() {
        // Δ(H)·w vectors have eigenvalues 2(m1+m2); checked via the w-basis
        // rows as eigenvector candidates: Δ(H)·Wᵀ = Wᵀ·diag(2(m1+m2)).
        let (j1, j2) = (rep(2), rep(1));
        let dh = coproduct_matrix(CoprodGen::H, j1, j2);
        let w = crate::tensor::w_basis(j1, j2);
        let wt = w.matrix.transpose();
        let index = TensorIndex::new(j1, j2);
        let mut diag = PolyMatrix::zero(index.size(), index.size());
        for (i, (m1, m2)) in index.pairs().enumerate() {
            diag.set(i, i, HPoly::from_int((m1 + m2).twice()));
        }
        assert_eq!(&dh * &wt, &wt * &diag);
    }

    #[test]
    fn coproduct_zplus_reduces_to_sum_at_spin_half() {
        // X² = 0 on each factor but Δ(X)² ≠ 0; still the series terminates
        // and at h = 0 the classical coproduct of Z₊ emerges.
        let (j1, j2) = (rep(1), rep(1));
        let dz = coproduct_matrix(CoprodGen::ZPlus, j1, j2);
        let classical = sl2_matrices(j1, Basis::V);
        let id = PolyMatrix::identity(2);
        let lie = &classical.z_plus.kron(&id) + &id.kron(&classical.z_plus);
        assert_eq!(dz.eval_at_zero(), lie);
    }

    #[test]
    fn expansion_of_exp_through_zplus_geometric_series() {
        // e^{hX} = 1 + 2·Σ_{n≥1} ((h/2)Z₊)ⁿ, the expansion used to write
        // Δ(H) in terms of Z₊ powers.
        use crate::exact::rat;
        use crate::rep::{exp_hx, nilpotent_series};
        for tj in 0..=6 {
            let j = rep(tj);
            let x = x_matrix(j);
            let z = sl2_matrices(j, Basis::V).z_plus;
            let half_z = z.scale(&HPoly::rat_monomial(1, rat(1, 2)));
            let tail = nilpotent_series(&half_z, |k| {
                if k == 0 {
                    HPoly::zero()
                } else {
                    HPoly::from_int(2)
                }
            })
            .unwrap();
            let rhs = &PolyMatrix::identity(j.dim()) + &tail;
            assert_eq!(exp_hx(&x).unwrap(), rhs, "2j={tj}");
        }
    }
}
