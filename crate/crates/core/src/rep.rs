//! Irreducible representations of U_h(sl(2)).
//!
//! The generators act on V^(j) in the v-basis (ascending m) by
//!
//! ```text
//! H v_m = 2m v_m
//! X v_m = Σ_{k=0}^{⌊(j−m−1)/2⌋} (h/2)^{2k}/(2k+1) · v_{m+1+2k}
//! Y v_m = (j+m)(j−m+1) v_{m−1} − (j−m)(j+m+1)(h/2)² v_{m+1}
//!         + Σ_{s=1}^{⌊(j−m+1)/2⌋} (h/2)^{2s} · v_{m−1+2s}
//! ```
//!
//! X raises the weight, so it is nilpotent: X^{2j+1} = 0. Every analytic
//! function of X used here (exp, tanh, cosh, sinh) is therefore a
//! terminating Taylor series evaluated by [`nilpotent_series`] — exact, with
//! no convergence questions. Setting h = 0 recovers the classical v-basis
//! triple.
//!
//! The nonlinear map back to classical sl(2) is
//! Z₊ = (2/h)·tanh(hX/2) and Z₋ = cosh(hX/2)·Y·cosh(hX/2); on every finite
//! dimensional representation these reproduce the classical matrices
//! exactly, and e^{hX} = (1 + (h/2)Z₊)(1 − (h/2)Z₊)⁻¹.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{factorial, rat, BigRational, ExactError, HPoly, HalfInt, PolyMatrix};
use crate::report::{check_matrix_eq, CheckItem, Report};
use crate::sl2::{sl2_matrices, Basis, RepLabel};

/// The generator matrices of one irreducible representation, v-basis,
/// ascending-m ordering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UhRep {
    pub j: RepLabel,
    pub h: PolyMatrix,
    pub x: PolyMatrix,
    pub y: PolyMatrix,
}

impl UhRep {
    pub fn new(j: RepLabel) -> Self {
        UhRep {
            j,
            h: h_matrix(j),
            x: x_matrix(j),
            y: y_matrix(j),
        }
    }
}

/// (h/2)ⁿ as a rational monomial of degree n.
fn half_h_pow(n: u32) -> HPoly {
    HPoly::rat_monomial(n, BigRational::new(BigInt::one(), BigInt::from(2).pow(n)))
}

/// H = diag(−2j, …, 2j).
pub fn h_matrix(j: RepLabel) -> PolyMatrix {
    let n = j.dim();
    let mut m = PolyMatrix::zero(n, n);
    for (i, w) in j.weights().enumerate() {
        m.set(i, i, HPoly::from_int(w.twice()));
    }
    m
}

/// The matrix of X: column m carries (h/2)^{2k}/(2k+1) at row m+1+2k.
pub fn x_matrix(j: RepLabel) -> PolyMatrix {
    let n = j.dim();
    let mut m = PolyMatrix::zero(n, n);
    for (col, w) in j.weights().enumerate() {
        let bound = (j.j() - w).expect_integer() - 1; // 2k ≤ j−m−1
        let mut k = 0i64;
        while 2 * k <= bound {
            let row = j
                .index_of(w + (1 + 2 * k))
                .expect("target weight within range");
            let coeff = half_h_pow(2 * k as u32)
                .scale_rat(&BigRational::new(BigInt::one(), BigInt::from(2 * k + 1)));
            m.set(row, col, coeff);
            k += 1;
        }
    }
    m
}

/// The matrix of Y; the s-sum can land on the same target as the
/// −(j−m)(j+m+1)(h/2)² term, in which case the contributions add.
pub fn y_matrix(j: RepLabel) -> PolyMatrix {
    let n = j.dim();
    let mut m = PolyMatrix::zero(n, n);
    for (col, w) in j.weights().enumerate() {
        let down = (j.j() + w).expect_integer() * (j.j() - w + 1).expect_integer();
        if down != 0 {
            if let Some(row) = j.index_of(w - 1) {
                m.add_to(row, col, &HPoly::from_int(down));
            }
        }
        let up = (j.j() - w).expect_integer() * (j.j() + w + 1).expect_integer();
        if up != 0 {
            if let Some(row) = j.index_of(w + 1) {
                m.add_to(row, col, &-&half_h_pow(2).scale_rat(&rat(up, 1)));
            }
        }
        let s_bound = (j.j() - w).expect_integer() + 1; // 2s ≤ j−m+1
        let mut s = 1i64;
        while 2 * s <= s_bound {
            if let Some(row) = j.index_of(w + (2 * s - 1)) {
                m.add_to(row, col, &half_h_pow(2 * s as u32));
            }
            s += 1;
        }
    }
    m
}

/// Σ_k coeff(k)·Mᵏ for a nilpotent M, truncated at the nilpotency index.
///
/// Rejects matrices with no vanishing power up to their dimension.
pub fn nilpotent_series(
    m: &PolyMatrix,
    coeff: impl Fn(usize) -> HPoly,
) -> Result<PolyMatrix, ExactError> {
    assert!(m.is_square(), "series of a non-square matrix");
    let dim = m.rows();
    let mut acc = PolyMatrix::zero(dim, dim);
    let mut power = PolyMatrix::identity(dim);
    let mut k = 0usize;
    while !power.is_zero() {
        if k > dim {
            return Err(ExactError::NotNilpotent { dim });
        }
        let c = coeff(k);
        if !c.is_zero() {
            acc = &acc + &power.scale(&c);
        }
        power = &power * m;
        k += 1;
    }
    Ok(acc)
}

/// Taylor coefficients of tanh u through u^order, by exact division of the
/// sinh series by the cosh series.
fn tanh_coeffs(order: usize) -> Vec<BigRational> {
    let sinh = |k: usize| {
        if k % 2 == 1 {
            BigRational::new(BigInt::one(), factorial(k as i64))
        } else {
            BigRational::zero()
        }
    };
    let cosh = |k: usize| {
        if k % 2 == 0 {
            BigRational::new(BigInt::one(), factorial(k as i64))
        } else {
            BigRational::zero()
        }
    };
    let mut t: Vec<BigRational> = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let mut v = sinh(k);
        for (i, ti) in t.iter().enumerate() {
            v -= ti * cosh(k - i);
        }
        t.push(v); // cosh(0) = 1, so no division is needed
    }
    t
}

/// e^{hX} = Σ hᵏXᵏ/k!.
pub fn exp_hx(x: &PolyMatrix) -> Result<PolyMatrix, ExactError> {
    nilpotent_series(x, |k| {
        HPoly::rat_monomial(k as u32, BigRational::new(BigInt::one(), factorial(k as i64)))
    })
}

/// e^{−hX}.
pub fn exp_neg_hx(x: &PolyMatrix) -> Result<PolyMatrix, ExactError> {
    nilpotent_series(x, |k| {
        let sign = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        HPoly::rat_monomial(k as u32, BigRational::new(sign, factorial(k as i64)))
    })
}

/// cosh(hX/2) = Σ (h/2)^{2k} X^{2k}/(2k)!.
pub fn cosh_hx_half(x: &PolyMatrix) -> Result<PolyMatrix, ExactError> {
    nilpotent_series(x, |k| {
        if k % 2 == 0 {
            half_h_pow(k as u32).scale_rat(&BigRational::new(BigInt::one(), factorial(k as i64)))
        } else {
            HPoly::zero()
        }
    })
}

/// cosh(hX).
pub fn cosh_hx(x: &PolyMatrix) -> Result<PolyMatrix, ExactError> {
    nilpotent_series(x, |k| {
        if k % 2 == 0 {
            HPoly::rat_monomial(k as u32, BigRational::new(BigInt::one(), factorial(k as i64)))
        } else {
            HPoly::zero()
        }
    })
}

/// sinh(hX)/h read as the everywhere-defined series Σ h^{2k} X^{2k+1}/(2k+1)!,
/// so no division by h ever occurs.
pub fn sinh_hx_over_h(x: &PolyMatrix) -> Result<PolyMatrix, ExactError> {
    nilpotent_series(x, |k| {
        if k % 2 == 1 {
            HPoly::rat_monomial(
                (k - 1) as u32,
                BigRational::new(BigInt::one(), factorial(k as i64)),
            )
        } else {
            HPoly::zero()
        }
    })
}

/// (2/h)·tanh(hX/2) = Σ_{k odd} t_k 2^{1−k} h^{k−1} Xᵏ, with t_k the tanh
/// Taylor coefficients; polynomial in h because t_k = 0 for even k.
pub fn z_plus_series(x: &PolyMatrix) -> Result<PolyMatrix, ExactError> {
    let t = tanh_coeffs(x.rows() + 1);
    nilpotent_series(x, |k| {
        if k == 0 || t[k].is_zero() {
            return HPoly::zero();
        }
        let two_pow = BigRational::new(BigInt::from(2), BigInt::from(2).pow(k as u32));
        HPoly::rat_monomial((k - 1) as u32, &t[k] * two_pow)
    })
}

/// (1 − M)⁻¹ = Σ Mᵏ for nilpotent M.
pub fn geometric_inverse(m: &PolyMatrix) -> Result<PolyMatrix, ExactError> {
    nilpotent_series(m, |_| HPoly::one())
}

/// The nonlinear map applied to a representation:
/// Z₊ = (2/h)tanh(hX/2), Z₋ = cosh(hX/2)·Y·cosh(hX/2).
pub fn z_from_xy(rep: &UhRep) -> Result<(PolyMatrix, PolyMatrix), ExactError> {
    let z_plus = z_plus_series(&rep.x)?;
    let c = cosh_hx_half(&rep.x)?;
    let z_minus = &(&c * &rep.y) * &c;
    Ok((z_plus, z_minus))
}

/// Checks the defining relations on an arbitrary triple of matrices:
///
/// ```text
/// [H, X] = 2 sinh(hX)/h
/// [X, Y] = H
/// [H, Y] = −Y cosh(hX) − cosh(hX) Y
/// ```
///
/// Each relation is one report item; a failing item pinpoints the first
/// offending entry.
pub fn check_relations_on(h: &PolyMatrix, x: &PolyMatrix, y: &PolyMatrix) -> Report {
    let mut report = Report::new();
    match sinh_hx_over_h(x) {
        Ok(sinh) => {
            report.push(check_matrix_eq(
                "[H,X] = 2 sinh(hX)/h",
                &h.commutator(x),
                &sinh.scale(&HPoly::from_int(2)),
            ));
        }
        Err(e) => report.push(CheckItem::fail("[H,X] = 2 sinh(hX)/h", e.to_string())),
    }
    report.push(check_matrix_eq("[X,Y] = H", &x.commutator(y), h));
    match cosh_hx(x) {
        Ok(cosh) => {
            let rhs = -&(&(y * &cosh) + &(&cosh * y));
            report.push(check_matrix_eq("[H,Y] = -Y cosh(hX) - cosh(hX) Y", &h.commutator(y), &rhs));
        }
        Err(e) => report.push(CheckItem::fail("[H,Y] = -Y cosh(hX) - cosh(hX) Y", e.to_string())),
    }
    report
}

/// Verifies the defining relations on V^(j).
pub fn verify_uh_relations(j: RepLabel) -> Report {
    let rep = UhRep::new(j);
    check_relations_on(&rep.h, &rep.x, &rep.y)
}

/// Verifies the nonlinear map on V^(j): both Z matrices must equal the
/// classical v-basis matrices, and the inversion formula
/// e^{hX} = (1 + (h/2)Z₊)(1 − (h/2)Z₊)⁻¹ must hold.
pub fn verify_nonlinear_map(j: RepLabel) -> Report {
    let rep = UhRep::new(j);
    let classical = sl2_matrices(j, Basis::V);
    let mut report = Report::new();
    match z_from_xy(&rep) {
        Ok((z_plus, z_minus)) => {
            report.push(check_matrix_eq(
                "(2/h) tanh(hX/2) = classical Z+",
                &z_plus,
                &classical.z_plus,
            ));
            report.push(check_matrix_eq(
                "cosh(hX/2) Y cosh(hX/2) = classical Z-",
                &z_minus,
                &classical.z_minus,
            ));
            let half_z = z_plus.scale(&HPoly::rat_monomial(1, rat(1, 2)));
            let lhs = exp_hx(&rep.x).expect("X is nilpotent");
            let inv = geometric_inverse(&half_z).expect("Z+ is nilpotent");
            let rhs = &(&PolyMatrix::identity(j.dim()) + &half_z) * &inv;
            report.push(check_matrix_eq(
                "exp(hX) = (1 + (h/2)Z+)(1 - (h/2)Z+)^{-1}",
                &lhs,
                &rhs,
            ));
        }
        Err(e) => report.push(CheckItem::fail("nonlinear map", e.to_string())),
    }
    report
}
