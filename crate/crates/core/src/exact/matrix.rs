//! Dense matrices over [`HPoly`] with exact ring operations.
//!
//! Everything here is desk scale (dimension ≤ ~50), so the storage is a
//! plain row-major `Vec` and products are schoolbook. Shape mismatches in
//! the ring operations are programming errors and panic; the two operations
//! with genuine preconditions (`unipotent_inverse`, `skew_transpose`) return
//! errors instead.

use std::ops::{Add, Mul, Neg, Sub};

use super::hpoly::HPoly;
use super::radical::Radical;
use super::ExactError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<HPoly>,
}

impl PolyMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            entries: vec![HPoly::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = PolyMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, HPoly::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> HPoly) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        PolyMatrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<HPoly>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        PolyMatrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &HPoly {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: HPoly) {
        self.entries[r * self.cols + c] = value;
    }

    /// Adds `value` into entry (r, c).
    pub fn add_to(&mut self, r: usize, c: usize, value: &HPoly) {
        let e = &mut self.entries[r * self.cols + c];
        *e = &*e + value;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(HPoly::is_zero)
    }

    pub fn transpose(&self) -> PolyMatrix {
        PolyMatrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    /// Entrywise h → 0 specialization (a constant matrix).
    pub fn eval_at_zero(&self) -> PolyMatrix {
        self.map(|p| HPoly::constant(p.eval_at_zero()))
    }

    pub fn map(&self, f: impl Fn(&HPoly) -> HPoly) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, factor: &HPoly) -> PolyMatrix {
        self.map(|p| p * factor)
    }

    pub fn scale_radical(&self, factor: &Radical) -> PolyMatrix {
        self.map(|p| p.scale(factor))
    }

    /// Largest entry degree, or `None` for the zero matrix.
    pub fn max_degree(&self) -> Option<u32> {
        self.entries.iter().filter_map(HPoly::degree).max()
    }

    /// First entry where the two matrices differ, if any.
    pub fn first_mismatch(&self, other: &PolyMatrix) -> Option<(usize, usize)> {
        if self.rows != other.rows || self.cols != other.cols {
            return Some((0, 0));
        }
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) != other.get(r, c) {
                    return Some((r, c));
                }
            }
        }
        None
    }

    /// Kronecker product; block (i1, i2) of the result is
    /// `self[i1][i2] · other`. Row index (r1, r2) flattens to
    /// r1·other.rows + r2, matching the lexicographic pair ordering used for
    /// tensor product bases.
    pub fn kron(&self, other: &PolyMatrix) -> PolyMatrix {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        PolyMatrix::from_fn(rows, cols, |r, c| {
            let (r1, r2) = (r / other.rows, r % other.rows);
            let (c1, c2) = (c / other.cols, c % other.cols);
            self.get(r1, c1) * other.get(r2, c2)
        })
    }

    /// A·B − B·A.
    pub fn commutator(&self, other: &PolyMatrix) -> PolyMatrix {
        &(self * other) - &(other * self)
    }
}

impl Add<&PolyMatrix> for &PolyMatrix {
    type Output = PolyMatrix;
    fn add(self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in +");
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub<&PolyMatrix> for &PolyMatrix {
    type Output = PolyMatrix;
    fn sub(self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in -");
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul<&PolyMatrix> for &PolyMatrix {
    type Output = PolyMatrix;
    fn mul(self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in *");
        let mut out = PolyMatrix::zero(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    out.add_to(r, c, &(a * b));
                }
            }
        }
        out
    }
}

impl Neg for &PolyMatrix {
    type Output = PolyMatrix;
    fn neg(self) -> PolyMatrix {
        self.map(|p| -p)
    }
}

/// Inverse of a unipotent upper triangular matrix by exact back
/// substitution. The result is unipotent upper triangular again.
pub fn unipotent_inverse(m: &PolyMatrix) -> Result<PolyMatrix, ExactError> {
    let n = check_unipotent_upper(m)?;
    let mut inv = PolyMatrix::identity(n);
    // Solve M·N = I one column at a time, from the bottom row upwards.
    for c in 0..n {
        for r in (0..c).rev() {
            let mut acc = HPoly::zero();
            for k in (r + 1)..=c {
                acc = &acc + &(m.get(r, k) * inv.get(k, c));
            }
            inv.set(r, c, -&acc);
        }
    }
    Ok(inv)
}

fn check_unipotent_upper(m: &PolyMatrix) -> Result<usize, ExactError> {
    if !m.is_square() {
        return Err(ExactError::NotSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    for r in 0..n {
        if m.get(r, r) != &HPoly::one() {
            return Err(ExactError::NotUnipotent { row: r, col: r });
        }
        for c in 0..r {
            if !m.get(r, c).is_zero() {
                return Err(ExactError::NotUnipotent { row: r, col: c });
            }
        }
    }
    Ok(n)
}

/// Reflection along the second (anti-) diagonal: with 1-based indices,
/// result[i][j] = m[N+1−j][N+1−i]. Involutive.
pub fn skew_transpose(m: &PolyMatrix) -> Result<PolyMatrix, ExactError> {
    if !m.is_square() {
        return Err(ExactError::NotSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    Ok(PolyMatrix::from_fn(n, n, |r, c| {
        m.get(n - 1 - c, n - 1 - r).clone()
    }))
}
