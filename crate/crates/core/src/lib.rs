//! Tensor commutation matrices and generalized Gell-Mann operator bases.
//!
//! * [`matrix`]: dense complex matrices, Kronecker products, Hilbert-Schmidt
//!   inner products.
//! * [`gellmann`]: the `n² - 1` generalized Gell-Mann generators and
//!   expansion of `n x n` operators over `{I, Λ_k}`.
//! * [`swap`]: the swap matrix `U_{p⊗q}` with `U (a ⊗ b) = b ⊗ a`, built by
//!   two independent constructions.
//! * [`product`]: decomposition over `{I, Λ^(p)} ⊗ {I, Λ^(q)}`, the closed
//!   form `U_{n⊗n} = (1/n) I ⊗ I + (1/2) Σ Λ_k ⊗ Λ_k` and the identities
//!   behind it.
//! * [`cli`]: the `tcm` command-line front end.
//!
//! ```
//! use tcm::{product, swap, Tolerance};
//!
//! let report = product::verify_theorem32(4, Tolerance::default()).unwrap();
//! assert!(report.pass);
//!
//! let u = swap::swap_by_formula(3, 2).unwrap();
//! assert_eq!(u.positions(), [(1, 1), (2, 3), (3, 5), (4, 2), (5, 4), (6, 6)]);
//! ```

pub mod cli;
pub mod error;
pub mod gellmann;
pub mod matrix;
pub mod product;
pub mod swap;

pub use error::{Error, Result};
pub use gellmann::{basis, expand_in_basis, BasisCoefficients, GellMannBasis, GeneratorLabel};
pub use matrix::{DenseMatrix, Tolerance, C64};
pub use product::{decompose_product, reconstruct_product, PaperExpression, ProductCoefficients};
pub use swap::{swap_by_formula, swap_by_rule, SwapMatrix};
