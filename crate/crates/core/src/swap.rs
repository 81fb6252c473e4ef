//! Tensor commutation (swap) matrices `U_{p⊗q}`.
//!
//! `U_{p⊗q}` is the `pq x pq` permutation matrix with `U (a ⊗ b) = b ⊗ a`
//! for every `a` of length `p` and `b` of length `q`. It is stored as an
//! index map: `perm[col]` is the row holding the single 1 of column `col`.
//!
//! Two constructions are provided. [`swap_by_formula`] evaluates the delta
//! formula `δ^{i1}_{j2} δ^{i2}_{j1}` directly. [`swap_by_rule`] walks the
//! columns left to right, stepping down `p` rows at a time and restarting
//! one row lower each time the column runs out. The two must agree exactly.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{DenseMatrix, ONE};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SwapMatrix {
    p: usize,
    q: usize,
    perm: Vec<usize>,
}

fn check_factors(p: usize, q: usize) -> Result<usize> {
    if p == 0 {
        return Err(Error::InvalidDimension {
            what: "swap factor p",
            value: p,
            min: 1,
        });
    }
    if q == 0 {
        return Err(Error::InvalidDimension {
            what: "swap factor q",
            value: q,
            min: 1,
        });
    }
    p.checked_mul(q)
        .ok_or(Error::DimensionOverflow("swap size p * q"))
}

/// `U_{p⊗q}` from the delta formula.
///
/// Column `(j1, j2)` with `j1 < p`, `j2 < q` sits at composite index
/// `j1*q + j2`; its 1 lands on row `(j2, j1)`, i.e. `j2*p + j1`.
/// `p = 1` or `q = 1` gives the identity.
pub fn swap_by_formula(p: usize, q: usize) -> Result<SwapMatrix> {
    let size = check_factors(p, q)?;
    let mut perm = vec![0; size];
    for j1 in 0..p {
        for j2 in 0..q {
            perm[j1 * q + j2] = j2 * p + j1;
        }
    }
    Ok(SwapMatrix { p, q, perm })
}

/// `U_{p⊗q}` from the column walk.
///
/// Start with a 1 at the top-left corner. Each following column gets its 1
/// `p` rows below the previous one; when that would leave the matrix, the
/// walk restarts at the next unused top row instead. Group `k` (0-based) of
/// `q` ones therefore starts in column `k*q` at row `k`, and the walk ends
/// at the bottom-right corner.
pub fn swap_by_rule(p: usize, q: usize) -> Result<SwapMatrix> {
    let size = check_factors(p, q)?;
    let mut perm = vec![0; size];
    let mut start_row = 0;
    let mut row = 0;
    for (col, slot) in perm.iter_mut().enumerate() {
        if col > 0 {
            if row + p < size {
                row += p;
            } else {
                start_row += 1;
                row = start_row;
                debug_assert_eq!(
                    col,
                    start_row * q,
                    "group {start_row} starts in the wrong column"
                );
            }
        }
        *slot = row;
    }
    debug_assert_eq!(perm[size - 1], size - 1, "walk must end at the last row");
    Ok(SwapMatrix { p, q, perm })
}

impl SwapMatrix {
    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// Side length `p*q`.
    pub fn size(&self) -> usize {
        self.perm.len()
    }

    /// `perm[col]` = row of the 1 in column `col` (0-based).
    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// Whether the index map is a bijection on `0..p*q`.
    pub fn is_permutation(&self) -> bool {
        let mut seen = vec![false; self.perm.len()];
        for &r in &self.perm {
            if r >= seen.len() || seen[r] {
                return false;
            }
            seen[r] = true;
        }
        true
    }

    /// Applies the matrix to a vector of length `p*q`: `out[perm[c]] = v[c]`.
    pub fn apply<T: Clone>(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.size() {
            return Err(Error::LengthMismatch {
                what: "swap input vector",
                expected: self.size(),
                found: v.len(),
            });
        }
        let mut out = v.to_vec();
        for (c, x) in v.iter().enumerate() {
            out[self.perm[c]] = x.clone();
        }
        Ok(out)
    }

    /// `U_{q⊗p}`, which is both the transpose and the inverse.
    pub fn inverse(&self) -> SwapMatrix {
        let mut perm = vec![0; self.size()];
        for (c, &r) in self.perm.iter().enumerate() {
            perm[r] = c;
        }
        SwapMatrix {
            p: self.q,
            q: self.p,
            perm,
        }
    }

    /// Dense 0/1 rendering.
    pub fn dense(&self) -> DenseMatrix {
        let n = self.size();
        let mut m = DenseMatrix::zeros(n, n);
        for (c, &r) in self.perm.iter().enumerate() {
            m.set(r, c, ONE);
        }
        m
    }

    /// 1-based `(row, col)` positions of the ones, sorted by row.
    pub fn positions(&self) -> Vec<(usize, usize)> {
        let mut pos: Vec<_> = self
            .perm
            .iter()
            .enumerate()
            .map(|(c, &r)| (r + 1, c + 1))
            .collect();
        pos.sort_unstable();
        pos
    }

    /// Number of fixed composite indices, which is the trace.
    pub fn fixed_points(&self) -> usize {
        self.perm
            .iter()
            .enumerate()
            .filter(|(c, &r)| *c == r)
            .count()
    }
}
