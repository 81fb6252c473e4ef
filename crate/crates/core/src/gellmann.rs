//! Generalized Gell-Mann matrices.
//!
//! For dimension `n >= 2` there are `n² - 1` traceless hermitian generators
//! split into three families, all normalized so that `Tr(Λ_a Λ_b) = 2 δ_ab`:
//!
//! * symmetric `S(i,j)`: 1 at `(i,j)` and `(j,i)`;
//! * antisymmetric `A(i,j)`: `-i` at `(i,j)` and `+i` at `(j,i)`;
//! * diagonal `D(d)`: `d` leading entries `1/√(d(d+1)/2)` followed by
//!   `-d/√(d(d+1)/2)`.
//!
//! [`basis`] fixes the ordering: for `j = 2..=n`, every pair `(i, j)` with
//! `i < j` contributes `S(i,j)` then `A(i,j)`, and the group closes with
//! `D(j-1)`. This gives the Pauli matrices at `n = 2` and the classical
//! `λ1..λ8` at `n = 3`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{DenseMatrix, C64, I, ONE, ZERO};

/// Identity of one generator. Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GeneratorLabel {
    Symmetric { i: usize, j: usize },
    Antisymmetric { i: usize, j: usize },
    Diagonal { d: usize },
}

impl GeneratorLabel {
    /// Checks the label against dimension `n`.
    pub fn validate(self, n: usize) -> Result<()> {
        check_dimension(n)?;
        match self {
            GeneratorLabel::Symmetric { i, j } | GeneratorLabel::Antisymmetric { i, j } => {
                if i == 0 || i >= j || j > n {
                    return Err(Error::InvalidPair { n, i, j });
                }
            }
            GeneratorLabel::Diagonal { d } => {
                if d == 0 || d >= n {
                    return Err(Error::InvalidDiagonal { n, d });
                }
            }
        }
        Ok(())
    }

    /// The generator matrix this label names in dimension `n`.
    pub fn matrix(self, n: usize) -> Result<DenseMatrix> {
        match self {
            GeneratorLabel::Symmetric { i, j } => symmetric_generator(n, i, j),
            GeneratorLabel::Antisymmetric { i, j } => antisymmetric_generator(n, i, j),
            GeneratorLabel::Diagonal { d } => diagonal_generator(n, d),
        }
    }

    pub fn kind_name(self) -> &'static str {
        match self {
            GeneratorLabel::Symmetric { .. } => "symmetric",
            GeneratorLabel::Antisymmetric { .. } => "antisymmetric",
            GeneratorLabel::Diagonal { .. } => "diagonal",
        }
    }
}

impl fmt::Display for GeneratorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GeneratorLabel::Symmetric { i, j } => write!(f, "S({i},{j})"),
            GeneratorLabel::Antisymmetric { i, j } => write!(f, "A({i},{j})"),
            GeneratorLabel::Diagonal { d } => write!(f, "D({d})"),
        }
    }
}

fn check_dimension(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidDimension {
            what: "Gell-Mann dimension n",
            value: n,
            min: 2,
        });
    }
    Ok(())
}

/// `E_ij + E_ji`.
pub fn symmetric_generator(n: usize, i: usize, j: usize) -> Result<DenseMatrix> {
    GeneratorLabel::Symmetric { i, j }.validate(n)?;
    let mut m = DenseMatrix::zeros(n, n);
    m.set(i - 1, j - 1, ONE);
    m.set(j - 1, i - 1, ONE);
    Ok(m)
}

/// `-i E_ij + i E_ji`.
pub fn antisymmetric_generator(n: usize, i: usize, j: usize) -> Result<DenseMatrix> {
    GeneratorLabel::Antisymmetric { i, j }.validate(n)?;
    let mut m = DenseMatrix::zeros(n, n);
    m.set(i - 1, j - 1, -I);
    m.set(j - 1, i - 1, I);
    Ok(m)
}

pub fn diagonal_generator(n: usize, d: usize) -> Result<DenseMatrix> {
    GeneratorLabel::Diagonal { d }.validate(n)?;
    let norm = ((d * (d + 1)) as f64 / 2.0).sqrt();
    let mut diag = vec![0.0; n];
    for x in diag.iter_mut().take(d) {
        *x = 1.0 / norm;
    }
    diag[d] = -(d as f64) / norm;
    Ok(DenseMatrix::diagonal(&diag))
}

/// Labels of the `n² - 1` generators in canonical order.
pub fn canonical_labels(n: usize) -> Result<Vec<GeneratorLabel>> {
    check_dimension(n)?;
    let mut labels = Vec::with_capacity(n * n - 1);
    for j in 2..=n {
        for i in 1..j {
            labels.push(GeneratorLabel::Symmetric { i, j });
            labels.push(GeneratorLabel::Antisymmetric { i, j });
        }
        labels.push(GeneratorLabel::Diagonal { d: j - 1 });
    }
    Ok(labels)
}

/// The ordered generalized Gell-Mann basis of dimension `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct GellMannBasis {
    n: usize,
    elements: Vec<(GeneratorLabel, DenseMatrix)>,
}

impl GellMannBasis {
    /// Builds the basis without going through the shared cache.
    pub fn new(n: usize) -> Result<Self> {
        let elements = canonical_labels(n)?
            .into_iter()
            .map(|label| label.matrix(n).map(|m| (label, m)))
            .collect::<Result<Vec<_>>>()?;
        Ok(GellMannBasis { n, elements })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of generators, `n² - 1`.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Generator at 0-based position `k`.
    pub fn get(&self, k: usize) -> Option<&DenseMatrix> {
        self.elements.get(k).map(|(_, m)| m)
    }

    pub fn label(&self, k: usize) -> Option<GeneratorLabel> {
        self.elements.get(k).map(|(l, _)| *l)
    }

    /// 0-based position of `label`, if it belongs to this basis.
    pub fn position(&self, label: GeneratorLabel) -> Option<usize> {
        self.elements.iter().position(|(l, _)| *l == label)
    }

    pub fn iter(&self) -> impl Iterator<Item = (GeneratorLabel, &DenseMatrix)> + '_ {
        self.elements.iter().map(|(l, m)| (*l, m))
    }

    pub fn matrices(&self) -> impl Iterator<Item = &DenseMatrix> + '_ {
        self.elements.iter().map(|(_, m)| m)
    }

    /// Hilbert-Schmidt Gram matrix of the generators.
    pub fn gram(&self) -> DenseMatrix {
        let len = self.len();
        let mut g = DenseMatrix::zeros(len, len);
        for (a, (_, ma)) in self.elements.iter().enumerate() {
            for (b, (_, mb)) in self.elements.iter().enumerate() {
                // same shape by construction
                g.set(a, b, ma.hs_inner(mb).expect("basis elements share a shape"));
            }
        }
        g
    }
}

/// The basis for dimension `n`, shared through a process-wide cache.
pub fn basis(n: usize) -> Result<Arc<GellMannBasis>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<GellMannBasis>>>> = OnceLock::new();
    check_dimension(n)?;
    let cache = CACHE.get_or_init(Default::default);
    if let Some(b) = cache.read().unwrap_or_else(|e| e.into_inner()).get(&n) {
        return Ok(Arc::clone(b));
    }
    let built = Arc::new(GellMannBasis::new(n)?);
    let mut guard = cache.write().unwrap_or_else(|e| e.into_inner());
    Ok(Arc::clone(guard.entry(n).or_insert(built)))
}

/// Coefficients of an `n x n` operator over `{I_n, Λ_1, …, Λ_{n²-1}}`.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisCoefficients {
    pub n: usize,
    /// Identity coefficient.
    pub c0: C64,
    /// Generator coefficients in canonical basis order.
    pub c: Vec<C64>,
}

impl BasisCoefficients {
    /// Coefficient of the generator named by `label`.
    pub fn coefficient(&self, label: GeneratorLabel) -> Option<C64> {
        let pos = basis(self.n).ok()?.position(label)?;
        self.c.get(pos).copied()
    }

    /// `c0 I_n + Σ c_k Λ_k`.
    pub fn reconstruct(&self) -> Result<DenseMatrix> {
        reconstruct(self)
    }
}

/// Projects `m` onto the extended basis: `c0 = Tr(m)/n`, `c_k = ⟨Λ_k, m⟩/2`.
///
/// Works for any square complex matrix; coefficients are complex in general.
pub fn expand_in_basis(m: &DenseMatrix, n: usize) -> Result<BasisCoefficients> {
    let b = basis(n)?;
    if m.shape() != (n, n) {
        return Err(Error::ShapeMismatch {
            op: "expand_in_basis",
            left: m.shape(),
            right: (n, n),
        });
    }
    let c0 = m.trace()? / n as f64;
    let c = b
        .matrices()
        .map(|g| g.hs_inner(m).map(|z| z / 2.0))
        .collect::<Result<Vec<_>>>()?;
    Ok(BasisCoefficients { n, c0, c })
}

pub fn reconstruct(coeffs: &BasisCoefficients) -> Result<DenseMatrix> {
    let b = basis(coeffs.n)?;
    if coeffs.c.len() != b.len() {
        return Err(Error::LengthMismatch {
            what: "generator coefficients",
            expected: b.len(),
            found: coeffs.c.len(),
        });
    }
    let mut out = DenseMatrix::identity(coeffs.n).scale(coeffs.c0);
    for (&ck, g) in coeffs.c.iter().zip(b.matrices()) {
        if ck != ZERO {
            out.add_scaled(ck, g)?;
        }
    }
    Ok(out)
}
