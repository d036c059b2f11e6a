//! Dense complex matrix storage and arithmetic.
//!
//! `ComplexMatrix` is the universal carrier for every operator in the crate:
//! full operators, blocks of an operator matrix, compressions, and column
//! vectors (as `cols == 1` matrices). Entries are row-major `Complex64`.

use num_complex::Complex64;

use crate::error::{NumradError, Result};

/// Dense row-major complex matrix with at least one row and one column.
///
/// All entries are finite by construction; every constructor rejects
/// NaN/Inf input.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Builds a matrix from a row-major entry buffer.
    pub fn new(rows: usize, cols: usize, entries: Vec<Complex64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(NumradError::DimensionMismatch(format!(
                "matrix dimensions must be positive, got {rows}x{cols}"
            )));
        }
        if entries.len() != rows * cols {
            return Err(NumradError::DimensionMismatch(format!(
                "entry buffer has length {}, expected {}x{} = {}",
                entries.len(),
                rows,
                cols,
                rows * cols
            )));
        }
        for (k, z) in entries.iter().enumerate() {
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(NumradError::NonFinite {
                    row: k / cols,
                    col: k % cols,
                });
            }
        }
        Ok(Self { rows, cols, entries })
    }

    /// Builds a matrix from nested rows.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let r = rows.len();
        if r == 0 {
            return Err(NumradError::DimensionMismatch("no rows given".into()));
        }
        let c = rows[0].len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != c {
                return Err(NumradError::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {c}",
                    row.len()
                )));
            }
        }
        Self::new(r, c, rows.iter().flatten().copied().collect())
    }

    /// Builds a matrix from nested real rows.
    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let mapped: Vec<Vec<Complex64>> = rows
            .iter()
            .map(|row| row.iter().map(|&x| Complex64::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&mapped)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::new(rows, cols, vec![Complex64::new(0.0, 0.0); rows * cols])
            .expect("positive dimensions")
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Diagonal matrix from real values.
    pub fn diag(values: &[f64]) -> Self {
        let n = values.len();
        let mut m = Self::zeros(n, n);
        for (i, &v) in values.iter().enumerate() {
            m.entries[i * n + i] = Complex64::new(v, 0.0);
        }
        m
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

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, z: Complex64) {
        self.entries[i * self.cols + j] = z;
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.entries
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.entries[j * self.rows + i] = self.get(i, j).conj();
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other, "add")?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Self::new(self.rows, self.cols, entries)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other, "sub")?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        Self::new(self.rows, self.cols, entries)
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        let entries = self.entries.iter().map(|a| a * factor).collect();
        Self {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(NumradError::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let (m, k, n) = (self.rows, self.cols, other.cols);
        let mut out = vec![Complex64::new(0.0, 0.0); m * n];
        for i in 0..m {
            for p in 0..k {
                let a = self.entries[i * k + p];
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                let brow = &other.entries[p * n..(p + 1) * n];
                let orow = &mut out[i * n..(i + 1) * n];
                for j in 0..n {
                    orow[j] += a * brow[j];
                }
            }
        }
        Self::new(m, n, out)
    }

    /// Hermitian part `(A + A*)/2`; requires a square matrix.
    pub fn hermitian_part(&self) -> Result<Self> {
        self.check_square("hermitian_part")?;
        let adj = self.adjoint();
        Ok(self.add(&adj)?.scale(Complex64::new(0.5, 0.0)))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Frobenius distance to the adjoint, used by Hermitian-ness checks.
    pub fn hermitian_defect(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let mut sum = 0.0;
        for i in 0..self.rows {
            for j in 0..self.cols {
                let d = self.get(i, j) - self.get(j, i).conj();
                sum += d.norm_sqr();
            }
        }
        sum.sqrt()
    }

    /// Relative Hermitian-ness test: `‖A − A*‖_F ≤ tol · (1 + ‖A‖_F)`.
    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.is_square() && self.hermitian_defect() <= tol * (1.0 + self.frobenius_norm())
    }

    /// Entrywise real and nonnegative up to `tol` on both parts.
    pub fn is_nonnegative(&self, tol: f64) -> bool {
        self.entries
            .iter()
            .all(|z| z.im.abs() <= tol && z.re >= -tol)
    }

    /// True when every entry strictly below the diagonal is zero up to `tol`.
    pub fn is_upper_triangular(&self, tol: f64) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 1..self.rows {
            for j in 0..i {
                if self.get(i, j).norm() > tol {
                    return false;
                }
            }
        }
        true
    }

    pub(crate) fn check_square(&self, what: &str) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(NumradError::DimensionMismatch(format!(
                "{what} requires a square matrix, got {}x{}",
                self.rows, self.cols
            )))
        }
    }

    pub(crate) fn check_same_shape(&self, other: &Self, what: &str) -> Result<()> {
        if self.rows == other.rows && self.cols == other.cols {
            Ok(())
        } else {
            Err(NumradError::DimensionMismatch(format!(
                "{what} requires equal shapes, got {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )))
        }
    }
}

/// Euclidean inner product, conjugate-linear in the first argument:
/// `⟨x, y⟩ = Σ conj(x_i) y_i` over `cols == 1` matrices.
pub fn inner_product(x: &ComplexMatrix, y: &ComplexMatrix) -> Result<Complex64> {
    if x.cols() != 1 || y.cols() != 1 || x.rows() != y.rows() {
        return Err(NumradError::DimensionMismatch(format!(
            "inner product requires equal-length column vectors, got {}x{} and {}x{}",
            x.rows(),
            x.cols(),
            y.rows(),
            y.cols()
        )));
    }
    Ok(x.as_slice()
        .iter()
        .zip(y.as_slice())
        .map(|(a, b)| a.conj() * b)
        .sum())
}

/// Euclidean norm of a column vector.
pub fn vector_norm(x: &ComplexMatrix) -> f64 {
    x.frobenius_norm()
}
