//! Decomposition of `pq x pq` operators over the product basis
//! `{I_p, Λ^(p)_1, …} ⊗ {I_q, Λ^(q)_1, …}`, and the swap-matrix identities
//! built on it.
//!
//! The grid index 0 on either axis stands for the identity; indices
//! `1..n²` follow the canonical Gell-Mann ordering. For `n x n` factors,
//! `U_{n⊗n} = (1/n) I ⊗ I + (1/2) Σ_k Λ_k ⊗ Λ_k`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gellmann::{basis, GeneratorLabel};
use crate::matrix::{DenseMatrix, Tolerance, C64, I, ZERO};
use crate::swap::swap_by_formula;

/// One factor of a product-basis element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FactorLabel {
    Identity,
    Generator(GeneratorLabel),
}

impl fmt::Display for FactorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorLabel::Identity => write!(f, "I"),
            FactorLabel::Generator(g) => g.fmt(f),
        }
    }
}

/// `[I, Λ_1, …, Λ_{n²-1}]` labels for one factor.
pub fn factor_labels(n: usize) -> Result<Vec<FactorLabel>> {
    let b = basis(n)?;
    Ok(std::iter::once(FactorLabel::Identity)
        .chain(b.iter().map(|(l, _)| FactorLabel::Generator(l)))
        .collect())
}

/// Extended factor basis with HS norms²: `I_n` has `n`, generators have 2.
fn extended_factors(n: usize) -> Result<Vec<(DenseMatrix, f64)>> {
    let b = basis(n)?;
    Ok(std::iter::once((DenseMatrix::identity(n), n as f64))
        .chain(b.matrices().map(|m| (m.clone(), 2.0)))
        .collect())
}

/// Nonzero grid cell with its labels.
#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    pub a: usize,
    pub b: usize,
    pub left: FactorLabel,
    pub right: FactorLabel,
    pub value: C64,
}

/// `p² x q²` coefficient grid over the product basis.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductCoefficients {
    p: usize,
    q: usize,
    grid: Vec<C64>,
}

impl ProductCoefficients {
    pub fn zeros(p: usize, q: usize) -> Result<Self> {
        check_dimension("factor dimension p", p)?;
        check_dimension("factor dimension q", q)?;
        Ok(ProductCoefficients {
            p,
            q,
            grid: vec![ZERO; p * p * q * q],
        })
    }

    /// Wraps a row-major grid of `p²` rows by `q²` columns.
    pub fn from_grid(p: usize, q: usize, grid: Vec<C64>) -> Result<Self> {
        let mut c = Self::zeros(p, q)?;
        if grid.len() != c.grid.len() {
            return Err(Error::LengthMismatch {
                what: "product coefficient grid",
                expected: c.grid.len(),
                found: grid.len(),
            });
        }
        c.grid = grid;
        Ok(c)
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// `(p², q²)`.
    pub fn shape(&self) -> (usize, usize) {
        (self.p * self.p, self.q * self.q)
    }

    pub fn grid(&self) -> &[C64] {
        &self.grid
    }

    pub fn get(&self, a: usize, b: usize) -> C64 {
        let (rows, cols) = self.shape();
        assert!(a < rows && b < cols, "grid index out of range");
        self.grid[a * cols + b]
    }

    pub fn set(&mut self, a: usize, b: usize, value: C64) {
        let (rows, cols) = self.shape();
        assert!(a < rows && b < cols, "grid index out of range");
        self.grid[a * cols + b] = value;
    }

    /// Grid rows as nested vectors.
    pub fn rows(&self) -> Vec<Vec<C64>> {
        self.grid
            .chunks(self.q * self.q)
            .map(<[C64]>::to_vec)
            .collect()
    }

    /// Cells with modulus above `threshold`, in row-major order.
    pub fn terms(&self, threshold: f64) -> Result<Vec<Term>> {
        let left = factor_labels(self.p)?;
        let right = factor_labels(self.q)?;
        let cols = right.len();
        Ok(self
            .grid
            .iter()
            .enumerate()
            .filter(|(_, z)| z.norm() > threshold)
            .map(|(k, &value)| {
                let (a, b) = (k / cols, k % cols);
                Term {
                    a,
                    b,
                    left: left[a],
                    right: right[b],
                    value,
                }
            })
            .collect())
    }

    /// Largest entrywise modulus difference between two grids of equal shape.
    pub fn max_abs_diff(&self, other: &ProductCoefficients) -> Result<f64> {
        if (self.p, self.q) != (other.p, other.q) {
            return Err(Error::ShapeMismatch {
                op: "ProductCoefficients::max_abs_diff",
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(self
            .grid
            .iter()
            .zip(&other.grid)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    /// Largest |imaginary part| over the grid.
    pub fn max_imag(&self) -> f64 {
        self.grid.iter().map(|z| z.im.abs()).fold(0.0, f64::max)
    }

    pub fn reconstruct(&self) -> Result<DenseMatrix> {
        reconstruct_product(self)
    }
}

fn check_dimension(what: &'static str, n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidDimension {
            what,
            value: n,
            min: 2,
        });
    }
    Ok(())
}

/// Projects `m` onto every product-basis element:
/// `grid[a][b] = ⟨A_a ⊗ B_b, m⟩ / (‖A_a‖² ‖B_b‖²)`.
///
/// The inner product is evaluated by first contracting the `q`-factor
/// (`T_b = Σ conj(B_b[i2,j2]) m[(·,i2),(·,j2)]`, a `p x p` block sum) and
/// then pairing `T_b` with each `A_a`. Each cell depends only on `m`, `A_a`
/// and `B_b`.
pub fn decompose_product(m: &DenseMatrix, p: usize, q: usize) -> Result<ProductCoefficients> {
    let mut out = ProductCoefficients::zeros(p, q)?;
    let size = p * q;
    if m.shape() != (size, size) {
        return Err(Error::ShapeMismatch {
            op: "decompose_product",
            left: m.shape(),
            right: (size, size),
        });
    }
    let left = extended_factors(p)?;
    let right = extended_factors(q)?;
    let cols = right.len();

    let mut block = vec![ZERO; p * p];
    for (b, (bm, bnorm)) in right.iter().enumerate() {
        block.fill(ZERO);
        let support: Vec<(usize, usize, C64)> = (0..q)
            .flat_map(|i2| (0..q).map(move |j2| (i2, j2)))
            .map(|(i2, j2)| (i2, j2, bm.get(i2, j2).conj()))
            .filter(|&(_, _, z)| z != ZERO)
            .collect();
        for i1 in 0..p {
            for j1 in 0..p {
                block[i1 * p + j1] = support
                    .iter()
                    .map(|&(i2, j2, w)| w * m.get(i1 * q + i2, j1 * q + j2))
                    .sum();
            }
        }
        for (a, (am, anorm)) in left.iter().enumerate() {
            let pairing: C64 = am
                .as_slice()
                .iter()
                .zip(&block)
                .map(|(x, t)| x.conj() * t)
                .sum();
            out.grid[a * cols + b] = pairing / (anorm * bnorm);
        }
    }
    Ok(out)
}

/// `Σ_{a,b} grid[a][b] · A_a ⊗ B_b`, grouped as `Σ_a A_a ⊗ (Σ_b grid[a][b] B_b)`.
pub fn reconstruct_product(c: &ProductCoefficients) -> Result<DenseMatrix> {
    let left = extended_factors(c.p)?;
    let right = extended_factors(c.q)?;
    let expected = left.len() * right.len();
    if c.grid.len() != expected {
        return Err(Error::LengthMismatch {
            what: "product coefficient grid",
            expected,
            found: c.grid.len(),
        });
    }
    let size = c.p * c.q;
    let mut out = DenseMatrix::zeros(size, size);
    for (a, (am, _)) in left.iter().enumerate() {
        let row = &c.grid[a * right.len()..(a + 1) * right.len()];
        if row.iter().all(|&z| z == ZERO) {
            continue;
        }
        let mut inner = DenseMatrix::zeros(c.q, c.q);
        for (&w, (bm, _)) in row.iter().zip(&right) {
            if w != ZERO {
                inner.add_scaled(w, bm)?;
            }
        }
        out = out + am.kron(&inner)?;
    }
    Ok(out)
}

/// Closed-form coefficients of `U_{n⊗n}`: `1/n` on `I ⊗ I`, `1/2` on each
/// `Λ_k ⊗ Λ_k`, zero elsewhere.
pub fn theorem32_coefficients(n: usize) -> Result<ProductCoefficients> {
    let mut c = ProductCoefficients::zeros(n, n)?;
    c.set(0, 0, C64::new(1.0 / n as f64, 0.0));
    for k in 1..n * n {
        c.set(k, k, C64::new(0.5, 0.0));
    }
    Ok(c)
}

/// `Σ_k Λ_k ⊗ Λ_k` over the whole basis of dimension `n`.
pub fn generator_square_sum(n: usize) -> Result<DenseMatrix> {
    let b = basis(n)?;
    let mut out = DenseMatrix::zeros(n * n, n * n);
    for g in b.matrices() {
        out = out + g.kron(g)?;
    }
    Ok(out)
}

/// `2 U_{n⊗n} - (2/n) I_{n²}`, the value `Σ_k Λ_k ⊗ Λ_k` must take.
pub fn generator_square_target(n: usize) -> Result<DenseMatrix> {
    check_dimension("dimension n", n)?;
    let u = swap_by_formula(n, n)?.dense();
    Ok(2.0 * &u - (2.0 / n as f64) * DenseMatrix::identity(n * n))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub n: usize,
    pub max_error: f64,
    pub pass: bool,
}

/// Compares `Σ Λ_k ⊗ Λ_k` with `2 U_{n⊗n} - (2/n) I` entrywise.
pub fn verify_theorem32(n: usize, tol: Tolerance) -> Result<TheoremReport> {
    let max_error = generator_square_sum(n)?.max_abs_diff(&generator_square_target(n)?)?;
    Ok(TheoremReport {
        n,
        max_error,
        pass: tol.accepts(max_error),
    })
}

fn family_sum(n: usize, keep: impl Fn(GeneratorLabel) -> bool) -> Result<DenseMatrix> {
    let b = basis(n)?;
    let mut out = DenseMatrix::zeros(n * n, n * n);
    for (label, g) in b.iter() {
        if keep(label) {
            out = out + g.kron(g)?;
        }
    }
    Ok(out)
}

/// `Σ_{i<j} [Λ^(ij) ⊗ Λ^(ij) + Λ^[ij] ⊗ Λ^[ij]]`.
pub fn offdiag_family_sum(n: usize) -> Result<DenseMatrix> {
    family_sum(n, |l| !matches!(l, GeneratorLabel::Diagonal { .. }))
}

/// `Σ_d Λ^(d) ⊗ Λ^(d)`.
pub fn diagonal_family_sum(n: usize) -> Result<DenseMatrix> {
    family_sum(n, |l| matches!(l, GeneratorLabel::Diagonal { .. }))
}

/// `2 Σ_{i≠j} E_ij ⊗ E_ji`, the closed form of [`offdiag_family_sum`].
pub fn offdiag_condensed(n: usize) -> Result<DenseMatrix> {
    check_dimension("dimension n", n)?;
    let mut out = DenseMatrix::zeros(n * n, n * n);
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                let term =
                    DenseMatrix::elementary(n, i, j)?.kron(&DenseMatrix::elementary(n, j, i)?)?;
                out.add_scaled(C64::new(2.0, 0.0), &term)?;
            }
        }
    }
    Ok(out)
}

/// `-(2/n) I_{n²} + 2 Σ_i E_ii ⊗ E_ii`, the closed form of [`diagonal_family_sum`].
pub fn diagonal_condensed(n: usize) -> Result<DenseMatrix> {
    check_dimension("dimension n", n)?;
    let mut out = DenseMatrix::identity(n * n).scale(C64::new(-2.0 / n as f64, 0.0));
    for i in 1..=n {
        let e = DenseMatrix::elementary(n, i, i)?;
        out.add_scaled(C64::new(2.0, 0.0), &e.kron(&e)?)?;
    }
    Ok(out)
}

/// Errors of every identity checked for one dimension.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub n: usize,
    /// `Σ Λ⊗Λ` vs `2U - (2/n)I`.
    pub theorem_error: f64,
    /// Off-diagonal families vs `2 Σ E_ij ⊗ E_ji`.
    pub offdiag_error: f64,
    /// Diagonal family vs `-(2/n) I + 2 Σ E_ii ⊗ E_ii`.
    pub diagonal_error: f64,
    /// Sum of both family sums vs `2U - (2/n)I`.
    pub assembly_error: f64,
    pub pass: bool,
}

pub fn check_identities(n: usize, tol: Tolerance) -> Result<IdentityReport> {
    let theorem = verify_theorem32(n, tol)?;
    let offdiag = offdiag_family_sum(n)?;
    let diagonal = diagonal_family_sum(n)?;
    let offdiag_error = offdiag.max_abs_diff(&offdiag_condensed(n)?)?;
    let diagonal_error = diagonal.max_abs_diff(&diagonal_condensed(n)?)?;
    let assembly_error = (&offdiag + &diagonal).max_abs_diff(&generator_square_target(n)?)?;
    let pass = [
        theorem.max_error,
        offdiag_error,
        diagonal_error,
        assembly_error,
    ]
    .iter()
    .all(|&e| tol.accepts(e));
    Ok(IdentityReport {
        n,
        theorem_error: theorem.max_error,
        offdiag_error,
        diagonal_error,
        assembly_error,
        pass,
    })
}

/// The two worked rectangular swap expansions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PaperExpression {
    /// `U_{3⊗2}` as six products of (Gell-Mann part) ⊗ (Pauli part).
    U32,
    /// `U_{2⊗3}` as six products of (Pauli part) ⊗ (Gell-Mann part).
    U23,
}

/// Evaluates the six-term expansion of `U_{3⊗2}` or `U_{2⊗3}` term by term.
pub fn build_paper_expression(which: PaperExpression) -> DenseMatrix {
    let gm = basis(3).expect("dimension 3 is valid");
    let pauli = basis(2).expect("dimension 2 is valid");
    let lambda = |k: usize| gm.get(k - 1).expect("λ index in 1..=8").clone();
    let sigma = |k: usize| pauli.get(k - 1).expect("σ index in 1..=3").clone();
    let i3 = DenseMatrix::identity(3);
    let i2 = DenseMatrix::identity(2);
    let r = |x: f64| C64::new(x, 0.0);
    let half = r(0.5);
    let half_i = I * 0.5;
    let sqrt3 = 3f64.sqrt();

    // Gell-Mann factors
    let e11_3 = r(1.0 / 3.0) * &i3 + half * &lambda(3) + r(sqrt3 / 6.0) * &lambda(8);
    let e12_3 = half * &lambda(1) + half_i * &lambda(2);
    let e21_3 = half * &lambda(1) - half_i * &lambda(2);
    let e23_3 = half * &lambda(6) + half_i * &lambda(7);
    let e32_3 = half * &lambda(6) - half_i * &lambda(7);
    let e33_3 = r(1.0 / 3.0) * &i3 - r(sqrt3 / 3.0) * &lambda(8);
    // Pauli factors
    let e11_2 = half * &i2 + half * &sigma(3);
    let e22_2 = half * &i2 - half * &sigma(3);
    let e12_2 = half * &sigma(1) + half_i * &sigma(2);
    let e21_2 = half * &sigma(1) - half_i * &sigma(2);

    let terms: [(&DenseMatrix, &DenseMatrix); 6] = match which {
        PaperExpression::U32 => [
            (&e11_3, &e11_2),
            (&e12_3, &e21_2),
            (&e23_3, &e11_2),
            (&e21_3, &e22_2),
            (&e32_3, &e12_2),
            (&e33_3, &e22_2),
        ],
        PaperExpression::U23 => [
            (&e11_2, &e11_3),
            (&e12_2, &e21_3),
            (&e11_2, &e32_3),
            (&e22_2, &e12_3),
            (&e21_2, &e23_3),
            (&e22_2, &e33_3),
        ],
    };
    terms
        .iter()
        .map(|(l, rgt)| l.kron(rgt).expect("small factors"))
        .reduce(|acc, t| acc + t)
        .expect("six terms")
}
