//! su(2) Clebsch-Gordan coefficients, exactly.
//!
//! Two independent routes are provided:
//!
//! - [`su2_cgc`] evaluates the standard single-sum (Racah) formula with the
//!   Condon–Shortley phase, entirely over exact rationals under one square
//!   root;
//! - [`su2_cgc_oracle`] constructs the whole coupled basis from scratch:
//!   the highest-weight vector of each V^(j) is found as the kernel of the
//!   raising operator on a weight space, the Condon–Shortley sign is fixed,
//!   and the rest of the multiplet is generated with the lowering operator.
//!
//! The two must agree entry for entry; the test suites compare them.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exact::{factorial, BigRational, HPoly, HalfInt, PolyMatrix, Radical};

use super::{alpha_sq, LabelError, RepLabel};

/// Row ordering of a coupled basis: j ascending over |j₁−j₂| … j₁+j₂, then
/// m ascending within each j. Columns of coupled-basis matrices use the
/// lexicographic (m₁, m₂) ordering of the tensor factors.
#[derive(Clone, Copy, Debug)]
pub struct CoupledIndex {
    j1: RepLabel,
    j2: RepLabel,
}

impl CoupledIndex {
    pub fn new(j1: RepLabel, j2: RepLabel) -> Self {
        CoupledIndex { j1, j2 }
    }

    pub fn size(&self) -> usize {
        self.j1.dim() * self.j2.dim()
    }

    /// |j₁−j₂|, |j₁−j₂|+1, …, j₁+j₂.
    pub fn j_values(&self) -> Vec<HalfInt> {
        let lo = (self.j1.j() - self.j2.j()).abs();
        let hi = self.j1.j() + self.j2.j();
        let mut out = Vec::new();
        let mut t = lo.twice();
        while t <= hi.twice() {
            out.push(HalfInt::from_twice(t));
            t += 2;
        }
        out
    }

    /// All (j, m) row labels in canonical order.
    pub fn rows(&self) -> Vec<(HalfInt, HalfInt)> {
        let mut out = Vec::with_capacity(self.size());
        for j in self.j_values() {
            let rep = RepLabel::new(j).expect("coupled j is non-negative");
            for m in rep.weights() {
                out.push((j, m));
            }
        }
        out
    }

    pub fn index_of(&self, j: HalfInt, m: HalfInt) -> Option<usize> {
        let mut idx = 0;
        for jv in self.j_values() {
            let rep = RepLabel::new(jv).ok()?;
            if jv == j {
                return rep.index_of(m).map(|k| idx + k);
            }
            idx += rep.dim();
        }
        None
    }

    /// Flat tensor index of the pair (m₁, m₂).
    pub fn pair_index(&self, m1: HalfInt, m2: HalfInt) -> Option<usize> {
        let i1 = self.j1.index_of(m1)?;
        let i2 = self.j2.index_of(m2)?;
        Some(i1 * self.j2.dim() + i2)
    }

    pub fn pair_at(&self, index: usize) -> (HalfInt, HalfInt) {
        let d2 = self.j2.dim();
        (self.j1.weight_at(index / d2), self.j2.weight_at(index % d2))
    }
}

fn check_triangle(j1: RepLabel, j2: RepLabel, j: HalfInt) -> Result<RepLabel, LabelError> {
    let rep = RepLabel::new(j)?;
    let lo = (j1.j() - j2.j()).abs();
    let hi = j1.j() + j2.j();
    // j must lie in [|j1-j2|, j1+j2] and step integrally from the bounds
    if j.twice() < lo.twice() || j.twice() > hi.twice() || (hi - j).twice() % 2 != 0 {
        return Err(LabelError::Triangle { j1: j1.j(), j2: j2.j(), j });
    }
    Ok(rep)
}

/// The su(2) Clebsch-Gordan coefficient C^{j1,j2,j}_{m1,m2,m} with the
/// Condon–Shortley phase, as an exact radical. Zero when m ≠ m₁ + m₂.
pub fn su2_cgc(
    j1: RepLabel,
    j2: RepLabel,
    j: HalfInt,
    m1: HalfInt,
    m2: HalfInt,
    m: HalfInt,
) -> Result<Radical, LabelError> {
    let rep = check_triangle(j1, j2, j)?;
    j1.check_weight(m1)?;
    j2.check_weight(m2)?;
    rep.check_weight(m)?;
    if m1 + m2 != m {
        return Ok(Radical::zero());
    }

    let f = |x: HalfInt| factorial(x.expect_integer());
    let ja = j1.j();
    let jb = j2.j();

    // rational square of the prefactor
    let mut n = BigRational::new(
        BigInt::from(j.twice() + 1) * f(ja + jb - j) * f(ja - jb + j) * f(jb - ja + j),
        f(ja + jb + j + 1),
    );
    n *= BigRational::from_integer(
        f(rep.j() + m) * f(rep.j() - m) * f(ja + m1) * f(ja - m1) * f(jb + m2) * f(jb - m2),
    );

    // alternating sum over all k with non-negative factorial arguments
    let int = |x: HalfInt| x.expect_integer();
    let k_min = [0, int(jb - j - m1), int(ja + m2 - j)]
        .into_iter()
        .max()
        .unwrap();
    let k_max = [int(ja + jb - j), int(ja - m1), int(jb + m2)]
        .into_iter()
        .min()
        .unwrap();
    let mut sum = BigRational::zero();
    for k in k_min..=k_max {
        let den = factorial(k)
            * f(ja + jb - j - HalfInt::from_int(k))
            * f(ja - m1 - HalfInt::from_int(k))
            * f(jb + m2 - HalfInt::from_int(k))
            * f(j - jb + m1 + HalfInt::from_int(k))
            * f(j - ja - m2 + HalfInt::from_int(k));
        let term = BigRational::new(BigInt::one(), den);
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }

    let root = Radical::sqrt_rational(&n).expect("prefactor square is non-negative");
    Ok(root.scaled(&sum))
}

/// The full su(2) Clebsch-Gordan matrix: rows (j, m) in canonical coupled
/// order, columns (m₁, m₂) lexicographic, entries from [`su2_cgc`].
pub fn su2_cgc_matrix(j1: RepLabel, j2: RepLabel) -> PolyMatrix {
    let index = CoupledIndex::new(j1, j2);
    let rows = index.rows();
    let n = index.size();
    PolyMatrix::from_fn(n, n, |r, c| {
        let (j, m) = rows[r];
        let (m1, m2) = index.pair_at(c);
        let value = su2_cgc(j1, j2, j, m1, m2, m).expect("labels in range");
        HPoly::constant(value)
    })
}

/// Independent coupled-basis construction by highest weight and lowering.
///
/// For each j the highest-weight vector is the (one-dimensional) kernel of
/// the raising operator Z₊⊗1 + 1⊗Z₊ restricted to the weight-j subspace,
/// with the sign fixed so that the coefficient of e^{j1}_{j1} ⊗ e^{j2}_{j−j1}
/// is positive. Lowering with Z₋⊗1 + 1⊗Z₋ and exact normalization fills in
/// the rest. The returned matrix has orthonormal rows.
pub fn su2_cgc_oracle(j1: RepLabel, j2: RepLabel) -> PolyMatrix {
    let index = CoupledIndex::new(j1, j2);
    let size = index.size();
    let mut out = PolyMatrix::zero(size, size);

    // rational α² per tensor position, for v-coords -> e-coords and norms
    let alpha2: Vec<BigRational> = (0..size)
        .map(|p| {
            let (m1, m2) = index.pair_at(p);
            alpha_sq(j1.j(), m1).unwrap() * alpha_sq(j2.j(), m2).unwrap()
        })
        .collect();

    for j in index.j_values() {
        let rep = RepLabel::new(j).expect("non-negative coupled j");
        let mut coords = highest_weight_vector(j1, j2, &index, j);

        // Condon–Shortley: coefficient of the (j1, j−j1) pair positive
        let anchor = index
            .pair_index(j1.j(), j - j1.j())
            .expect("anchor pair is in range");
        let s = &coords[anchor];
        assert!(!s.is_zero(), "vanishing Condon–Shortley anchor coefficient");
        if s.is_negative() {
            for c in coords.iter_mut() {
                *c = -c.clone();
            }
        }

        // walk down the multiplet, normalizing each weight vector exactly
        let mut m = j;
        loop {
            let norm_sq: BigRational = coords
                .iter()
                .zip(&alpha2)
                .map(|(c, a2)| c * c * a2)
                .fold(BigRational::zero(), |acc, t| acc + t);
            let inv_norm = Radical::sqrt_rational(&norm_sq.recip())
                .expect("norm square is positive");
            let row = index.index_of(j, m).expect("coupled label in range");
            for (p, c) in coords.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (m1, m2) = index.pair_at(p);
                let a1 = Radical::sqrt_rational(&alpha_sq(j1.j(), m1).unwrap()).unwrap();
                let a2 = Radical::sqrt_rational(&alpha_sq(j2.j(), m2).unwrap()).unwrap();
                let e_coord = Radical::from_rational(c.clone());
                out.set(row, p, HPoly::constant(&(&(&e_coord * &a1) * &a2) * &inv_norm));
            }

            if m == -rep.j() {
                break;
            }
            coords = lower(j1, j2, &index, &coords);
            m = m - 1;
        }
    }
    out
}

/// Kernel of the raising operator on the weight-j subspace, embedded into
/// full tensor coordinates. Panics if the kernel is not one-dimensional,
/// which would contradict the multiplicity-free decomposition.
fn highest_weight_vector(
    j1: RepLabel,
    j2: RepLabel,
    index: &CoupledIndex,
    j: HalfInt,
) -> Vec<BigRational> {
    let size = index.size();
    let weight_space: Vec<usize> = (0..size)
        .filter(|&p| {
            let (m1, m2) = index.pair_at(p);
            m1 + m2 == j
        })
        .collect();
    let above: Vec<usize> = (0..size)
        .filter(|&p| {
            let (m1, m2) = index.pair_at(p);
            (m1 + m2).twice() == j.twice() + 2
        })
        .collect();

    // raising matrix in v-coordinates: all nonzero entries are 1
    let mut matrix = vec![vec![BigRational::zero(); weight_space.len()]; above.len()];
    for (col, &p) in weight_space.iter().enumerate() {
        let (m1, m2) = index.pair_at(p);
        for target in [index.pair_index(m1 + 1, m2), index.pair_index(m1, m2 + 1)] {
            if let Some(t) = target {
                if let Some(row) = above.iter().position(|&q| q == t) {
                    matrix[row][col] += BigRational::one();
                }
            }
        }
    }

    let kernel = rational_kernel(matrix, weight_space.len());
    assert_eq!(kernel.len(), 1, "highest-weight space must be one-dimensional");
    let mut coords = vec![BigRational::zero(); size];
    for (col, &p) in weight_space.iter().enumerate() {
        coords[p] = kernel[0][col].clone();
    }
    coords
}

/// Applies Z₋⊗1 + 1⊗Z₋ in v-coordinates.
fn lower(
    j1: RepLabel,
    j2: RepLabel,
    index: &CoupledIndex,
    coords: &[BigRational],
) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); coords.len()];
    for (p, c) in coords.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (m1, m2) = index.pair_at(p);
        if let Some(t) = index.pair_index(m1 - 1, m2) {
            let coeff = (j1.j() + m1).expect_integer() * (j1.j() - m1 + 1).expect_integer();
            out[t] += c * BigRational::from_integer(BigInt::from(coeff));
        }
        if let Some(t) = index.pair_index(m1, m2 - 1) {
            let coeff = (j2.j() + m2).expect_integer() * (j2.j() - m2 + 1).expect_integer();
            out[t] += c * BigRational::from_integer(BigInt::from(coeff));
        }
    }
    out
}

/// Nullspace basis of a rational matrix by Gauss-Jordan elimination.
fn rational_kernel(mut a: Vec<Vec<BigRational>>, cols: usize) -> Vec<Vec<BigRational>> {
    let rows = a.len();
    let mut pivot_cols = Vec::new();
    let mut pivot_row = 0;
    for col in 0..cols {
        let Some(p) = (pivot_row..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(pivot_row, p);
        let inv = a[pivot_row][col].recip();
        for x in a[pivot_row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..rows {
            if r != pivot_row && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in 0..cols {
                    let delta = &factor * &a[pivot_row][c];
                    a[r][c] -= delta;
                }
            }
        }
        pivot_cols.push(col);
        pivot_row += 1;
        if pivot_row == rows {
            break;
        }
    }
    let free_cols: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    free_cols
        .into_iter()
        .map(|free| {
            let mut v = vec![BigRational::zero(); cols];
            v[free] = BigRational::one();
            for (i, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -a[i][free].clone();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn rep(t: i64) -> RepLabel {
        RepLabel::from_twice(t).unwrap()
    }

    fn h(t: i64) -> HalfInt {
        HalfInt::from_twice(t)
    }

    fn sqrt_half() -> Radical {
        Radical::sqrt_rational(&rat(1, 2)).unwrap()
    }

    #[test]
    fn stretched_state_is_one() {
        for (tj1, tj2) in [(1, 1), (2, 1), (4, 3), (6, 6)] {
            let j = h(tj1 + tj2);
            let c = su2_cgc(rep(tj1), rep(tj2), j, h(tj1), h(tj2), j).unwrap();
            assert_eq!(c, Radical::one());
        }
    }

    #[test]
    fn singlet_coefficients_carry_condon_shortley_signs() {
        let c_plus = su2_cgc(rep(1), rep(1), h(0), h(1), h(-1), h(0)).unwrap();
        assert_eq!(c_plus, sqrt_half());
        let c_minus = su2_cgc(rep(1), rep(1), h(0), h(-1), h(1), h(0)).unwrap();
        assert_eq!(c_minus, -&sqrt_half());
    }

    #[test]
    fn weight_conservation_gives_zero() {
        let c = su2_cgc(rep(1), rep(1), h(2), h(1), h(1), h(0)).unwrap();
        assert!(c.is_zero());
    }

    #[test]
    fn invalid_labels_are_rejected() {
        assert!(matches!(
            su2_cgc(rep(1), rep(1), h(4), h(1), h(1), h(2)),
            Err(LabelError::Triangle { .. })
        ));
        assert!(su2_cgc(rep(1), rep(1), h(3), h(1), h(1), h(1)).is_err());
        assert!(su2_cgc(rep(1), rep(1), h(2), h(3), h(-1), h(2)).is_err());
    }

    #[test]
    fn oracle_spin_half_pair() {
        let m = su2_cgc_oracle(rep(1), rep(1));
        // singlet row (j=0, m=0): (0, -1/√2, 1/√2, 0)
        assert_eq!(m.get(0, 1), &HPoly::constant(-&sqrt_half()));
        assert_eq!(m.get(0, 2), &HPoly::constant(sqrt_half()));
        // triplet rows contain (1,0,0,0) and (0, 1/√2, 1/√2, 0)
        assert_eq!(m.get(1, 0), &HPoly::one());
        assert_eq!(m.get(2, 1), &HPoly::constant(sqrt_half()));
        assert_eq!(m.get(2, 2), &HPoly::constant(sqrt_half()));
        assert_eq!(m.get(3, 3), &HPoly::one());
    }

    #[test]
    fn oracle_rows_are_orthonormal() {
        for (tj1, tj2) in [(0, 0), (1, 1), (2, 1), (3, 2), (4, 4)] {
            let m = su2_cgc_oracle(rep(tj1), rep(tj2));
            let gram = &m * &m.transpose();
            assert_eq!(gram, PolyMatrix::identity(m.rows()), "({tj1},{tj2})");
        }
    }

    #[test]
    fn formula_matches_oracle_through_2j_6() {
        for tj1 in 0..=6 {
            for tj2 in 0..=6 {
                let (j1, j2) = (rep(tj1), rep(tj2));
                assert_eq!(
                    su2_cgc_matrix(j1, j2),
                    su2_cgc_oracle(j1, j2),
                    "2j1={tj1} 2j2={tj2}"
                );
            }
        }
    }

    #[test]
    fn formula_orthogonality_rows_and_columns() {
        for (tj1, tj2) in [(1, 1), (2, 2), (3, 1), (4, 2)] {
            let m = su2_cgc_matrix(rep(tj1), rep(tj2));
            let n = m.rows();
            assert_eq!(&m * &m.transpose(), PolyMatrix::identity(n));
            assert_eq!(&m.transpose() * &m, PolyMatrix::identity(n));
        }
    }
}
