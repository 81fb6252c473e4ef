//! Dense complex matrices.
//!
//! Storage is row-major with 0-based indices internally. The only public
//! constructors that take indices from users ([`DenseMatrix::elementary`])
//! use 1-based indices, matching the usual `E_ij` notation.
//!
//! Kronecker products use the composite-index convention
//! `composite = outer * inner_dim + inner`, so the entry of `A ⊗ B` at
//! composite row `(i1, i2)` and composite column `(j1, j2)` is
//! `A[i1, j1] * B[i2, j2]`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const ZERO: C64 = C64 { re: 0.0, im: 0.0 };
pub const ONE: C64 = C64 { re: 1.0, im: 0.0 };
pub const I: C64 = C64 { re: 0.0, im: 1.0 };

/// Absolute per-entry tolerance used for approximate comparisons.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct Tolerance {
    abs_eps: f64,
}

impl Tolerance {
    pub const DEFAULT_ABS_EPS: f64 = 1e-10;

    pub fn new(abs_eps: f64) -> Result<Self> {
        if abs_eps.is_finite() && abs_eps >= 0.0 {
            Ok(Tolerance { abs_eps })
        } else {
            Err(Error::InvalidTolerance(abs_eps))
        }
    }

    pub fn abs_eps(self) -> f64 {
        self.abs_eps
    }

    /// True when `err` is within this tolerance.
    pub fn accepts(self, err: f64) -> bool {
        err <= self.abs_eps
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            abs_eps: Self::DEFAULT_ABS_EPS,
        }
    }
}

/// A rectangular matrix of double-precision complex numbers.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            data: vec![ZERO; rows * cols],
        }
    }

    /// The `n x n` unit matrix.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m.data[k * n + k] = ONE;
        }
        m
    }

    /// The `r x r` elementary matrix `E_ij` with a single 1 at row `i`,
    /// column `j` (both 1-based).
    pub fn elementary(r: usize, i: usize, j: usize) -> Result<Self> {
        if i == 0 || j == 0 || i > r || j > r {
            return Err(Error::IndexOutOfRange { size: r, i, j });
        }
        let mut m = Self::zeros(r, r);
        m.data[(i - 1) * r + (j - 1)] = ONE;
        Ok(m)
    }

    /// Builds a matrix from row-major entries.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<C64>) -> Result<Self> {
        let expected = rows
            .checked_mul(cols)
            .ok_or(Error::DimensionOverflow("rows * cols"))?;
        if data.len() != expected {
            return Err(Error::LengthMismatch {
                what: "matrix entries",
                expected,
                found: data.len(),
            });
        }
        if data.iter().any(|z| !z.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(DenseMatrix { rows, cols, data })
    }

    /// Builds a matrix from nested rows. All rows must have the same length.
    pub fn from_rows<R: AsRef<[C64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::LengthMismatch {
                    what: "matrix row",
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend_from_slice(r);
        }
        Self::from_vec(rows.len(), cols, data)
    }

    /// Builds a real matrix from nested rows.
    pub fn from_real_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let rows: Vec<Vec<C64>> = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| C64::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        DenseMatrix { rows, cols, data }
    }

    /// A diagonal matrix with the given real diagonal.
    pub fn diagonal(diag: &[f64]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (k, &x) in diag.iter().enumerate() {
            m.data[k * n + k] = C64::new(x, 0.0);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Row-major entries.
    pub fn as_slice(&self) -> &[C64] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<C64> {
        self.data
    }

    /// Entry at 0-based `(row, col)`. Panics when out of range.
    pub fn get(&self, row: usize, col: usize) -> C64 {
        assert!(row < self.rows && col < self.cols, "index out of range");
        self.data[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: C64) {
        assert!(row < self.rows && col < self.cols, "index out of range");
        self.data[row * self.cols + col] = value;
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        let rows = self
            .rows
            .checked_mul(other.rows)
            .ok_or(Error::DimensionOverflow("kron rows"))?;
        let cols = self
            .cols
            .checked_mul(other.cols)
            .ok_or(Error::DimensionOverflow("kron cols"))?;
        rows.checked_mul(cols)
            .ok_or(Error::DimensionOverflow("kron entries"))?;

        let mut out = Self::zeros(rows, cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.data[i1 * self.cols + j1];
                if a == ZERO {
                    continue;
                }
                for i2 in 0..other.rows {
                    let row = i1 * other.rows + i2;
                    let src = &other.data[i2 * other.cols..(i2 + 1) * other.cols];
                    let dst = &mut out.data[row * cols + j1 * other.cols..][..other.cols];
                    for (d, &b) in dst.iter_mut().zip(src) {
                        *d = a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Ordinary matrix product `self * other`.
    pub fn matmul(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch {
                op: "matmul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            let dst = &mut out.data[r * other.cols..(r + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.data[r * self.cols + k];
                if a == ZERO {
                    continue;
                }
                let src = &other.data[k * other.cols..(k + 1) * other.cols];
                for (d, &b) in dst.iter_mut().zip(src) {
                    *d += a * b;
                }
            }
        }
        Ok(out)
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> DenseMatrix {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).conj())
    }

    pub fn transpose(&self) -> DenseMatrix {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r))
    }

    pub fn trace(&self) -> Result<C64> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                op: "trace",
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok((0..self.rows).map(|k| self.data[k * self.cols + k]).sum())
    }

    /// Hilbert-Schmidt inner product `Tr(self† · other)`.
    ///
    /// Evaluated as `Σ conj(a_ij) b_ij`, which is the same sum without
    /// forming the product.
    pub fn hs_inner(&self, other: &DenseMatrix) -> Result<C64> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                op: "hs_inner",
                rows: self.rows,
                cols: self.cols,
            });
        }
        if self.shape() != other.shape() {
            return Err(Error::ShapeMismatch {
                op: "hs_inner",
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &DenseMatrix) -> Result<f64> {
        if self.shape() != other.shape() {
            return Err(Error::ShapeMismatch {
                op: "max_abs_diff",
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    pub fn approx_eq(&self, other: &DenseMatrix, tol: Tolerance) -> bool {
        self.max_abs_diff(other).is_ok_and(|e| tol.accepts(e))
    }

    pub fn is_hermitian(&self, tol: Tolerance) -> bool {
        self.is_square() && self.approx_eq(&self.dagger(), tol)
    }

    pub fn scale(&self, s: C64) -> DenseMatrix {
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    /// `self += s * other`, in place.
    pub fn add_scaled(&mut self, s: C64, other: &DenseMatrix) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::ShapeMismatch {
                op: "add_scaled",
                left: self.shape(),
                right: other.shape(),
            });
        }
        for (d, &b) in self.data.iter_mut().zip(&other.data) {
            *d += s * b;
        }
        Ok(())
    }

    /// Positions `(row, col)` (0-based) of entries with modulus above `threshold`.
    pub fn support(&self, threshold: f64) -> Vec<(usize, usize)> {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, z)| z.norm() > threshold)
            .map(|(k, _)| (k / self.cols, k % self.cols))
            .collect()
    }
}

fn assert_same_shape(op: &str, a: &DenseMatrix, b: &DenseMatrix) {
    assert_eq!(
        a.shape(),
        b.shape(),
        "{op}: shape mismatch ({}x{} vs {}x{})",
        a.rows,
        a.cols,
        b.rows,
        b.cols
    );
}

// Operator impls panic on shape mismatch; use `add_scaled` for a checked form.
impl Add for &DenseMatrix {
    type Output = DenseMatrix;

    fn add(self, rhs: &DenseMatrix) -> DenseMatrix {
        assert_same_shape("add", self, rhs);
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Add for DenseMatrix {
    type Output = DenseMatrix;

    fn add(self, rhs: DenseMatrix) -> DenseMatrix {
        &self + &rhs
    }
}

impl Sub for &DenseMatrix {
    type Output = DenseMatrix;

    fn sub(self, rhs: &DenseMatrix) -> DenseMatrix {
        assert_same_shape("sub", self, rhs);
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Sub for DenseMatrix {
    type Output = DenseMatrix;

    fn sub(self, rhs: DenseMatrix) -> DenseMatrix {
        &self - &rhs
    }
}

impl Neg for &DenseMatrix {
    type Output = DenseMatrix;

    fn neg(self) -> DenseMatrix {
        self.scale(-ONE)
    }
}

impl Mul<&DenseMatrix> for C64 {
    type Output = DenseMatrix;

    fn mul(self, rhs: &DenseMatrix) -> DenseMatrix {
        rhs.scale(self)
    }
}

impl Mul<DenseMatrix> for C64 {
    type Output = DenseMatrix;

    fn mul(self, rhs: DenseMatrix) -> DenseMatrix {
        rhs.scale(self)
    }
}

impl Mul<&DenseMatrix> for f64 {
    type Output = DenseMatrix;

    fn mul(self, rhs: &DenseMatrix) -> DenseMatrix {
        rhs.scale(C64::new(self, 0.0))
    }
}

impl Mul<DenseMatrix> for f64 {
    type Output = DenseMatrix;

    fn mul(self, rhs: DenseMatrix) -> DenseMatrix {
        rhs.scale(C64::new(self, 0.0))
    }
}

impl fmt::Display for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", format_complex(self.get(r, c), 10))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Compact human-readable rendering: `0.5`, `-i`, `0.5+0.25i`.
pub fn format_complex(z: C64, digits: usize) -> String {
    let fmt_real = |x: f64| {
        let s = format!("{x:.digits$}");
        let s = if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        };
        if s == "-0" {
            "0".to_string()
        } else {
            s
        }
    };
    let re = fmt_real(z.re);
    let im = fmt_real(z.im);
    match (re.as_str(), im.as_str()) {
        (_, "0") => re,
        ("0", "1") => "i".to_string(),
        ("0", "-1") => "-i".to_string(),
        ("0", _) => format!("{im}i"),
        (_, _) if im.starts_with('-') => format!("{re}{im}i"),
        _ => format!("{re}+{im}i"),
    }
}
