#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;
use tcm::{DenseMatrix, C64};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_complex(rng: &mut impl Rng) -> C64 {
    C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> DenseMatrix {
    DenseMatrix::from_fn(rows, cols, |_, _| random_complex(rng))
}

pub fn random_vector(rng: &mut impl Rng, len: usize) -> DenseMatrix {
    random_matrix(rng, len, 1)
}

pub fn random_hermitian(rng: &mut impl Rng, n: usize) -> DenseMatrix {
    let m = random_matrix(rng, n, n);
    0.5 * (&m + &m.dagger())
}

pub fn schema_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("schema")
        .join(format!("{name}.schema.json"))
}

pub fn load_schema(name: &str) -> Value {
    let text = std::fs::read_to_string(schema_path(name)).expect("schema file");
    serde_json::from_str(&text).expect("schema is JSON")
}

/// Validation errors of `instance` against `schema/<name>.schema.json`.
pub fn schema_errors(name: &str, instance: &Value) -> Vec<String> {
    let schema = load_schema(name);
    let validator = jsonschema::validator_for(&schema).expect("schema compiles");
    validator
        .iter_errors(instance)
        .map(|e| e.to_string())
        .collect()
}

pub fn tcm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tcm"))
        .args(args)
        .env_remove("TCM_TOLERANCE")
        .output()
        .expect("run tcm")
}

/// `2 Σ_{i≠j} E_ij ⊗ E_ji` evaluated entry by entry over `(l1 l2, k1 k2)`.
pub fn offdiag_delta_oracle(n: usize) -> DenseMatrix {
    let mut m = DenseMatrix::zeros(n * n, n * n);
    for l1 in 0..n {
        for l2 in 0..n {
            for k1 in 0..n {
                for k2 in 0..n {
                    let mut v = 0.0;
                    for i in 0..n {
                        for j in 0..n {
                            if i != j && i == l1 && j == k1 && j == l2 && i == k2 {
                                v += 2.0;
                            }
                        }
                    }
                    m.set(l1 * n + l2, k1 * n + k2, C64::new(v, 0.0));
                }
            }
        }
    }
    m
}

/// `-(2/n) δ^{l1}_{k1} δ^{l2}_{k2} + 2 Σ_i δ^{i l1} δ^i_{k1} δ^{i l2} δ^i_{k2}`.
pub fn diagonal_delta_oracle(n: usize) -> DenseMatrix {
    let mut m = DenseMatrix::zeros(n * n, n * n);
    let delta = |a: usize, b: usize| if a == b { 1.0 } else { 0.0 };
    for l1 in 0..n {
        for l2 in 0..n {
            for k1 in 0..n {
                for k2 in 0..n {
                    let mut v = -2.0 / n as f64 * delta(l1, k1) * delta(l2, k2);
                    for i in 0..n {
                        v += 2.0 * delta(i, l1) * delta(i, k1) * delta(i, l2) * delta(i, k2);
                    }
                    m.set(l1 * n + l2, k1 * n + k2, C64::new(v, 0.0));
                }
            }
        }
    }
    m
}

/// `(p²) x (q²)` grid of a sum of outer products of sparse factor
/// coefficient lists, i.e. the distributive expansion of
/// `Σ_t (Σ_a x_ta A_a) ⊗ (Σ_b y_tb B_b)`.
pub fn expand_by_distributivity(p: usize, q: usize, terms: &[FactorTerm]) -> Vec<Vec<C64>> {
    let mut grid = vec![vec![C64::new(0.0, 0.0); q * q]; p * p];
    for (left, right) in terms {
        for &(a, x) in left {
            for &(b, y) in right {
                grid[a][b] += x * y;
            }
        }
    }
    grid
}

fn r(x: f64) -> C64 {
    C64::new(x, 0.0)
}

fn im(x: f64) -> C64 {
    C64::new(0.0, x)
}

/// Printed Gell-Mann coefficients (index 0 = I_3, k = λ_k) of the 3x3
/// elementary matrices appearing in the six-term expansions.
pub fn gm_elementary(i: usize, j: usize) -> Vec<(usize, C64)> {
    let s3 = 3f64.sqrt();
    match (i, j) {
        (1, 1) => vec![(0, r(1.0 / 3.0)), (3, r(0.5)), (8, r(s3 / 6.0))],
        (1, 2) => vec![(1, r(0.5)), (2, im(0.5))],
        (2, 1) => vec![(1, r(0.5)), (2, im(-0.5))],
        (2, 3) => vec![(6, r(0.5)), (7, im(0.5))],
        (3, 2) => vec![(6, r(0.5)), (7, im(-0.5))],
        (3, 3) => vec![(0, r(1.0 / 3.0)), (8, r(-s3 / 3.0))],
        _ => panic!("not used by the expansions"),
    }
}

/// Printed Pauli coefficients (index 0 = I_2, k = σ_k) of 2x2 elementary matrices.
pub fn pauli_elementary(i: usize, j: usize) -> Vec<(usize, C64)> {
    match (i, j) {
        (1, 1) => vec![(0, r(0.5)), (3, r(0.5))],
        (2, 2) => vec![(0, r(0.5)), (3, r(-0.5))],
        (1, 2) => vec![(1, r(0.5)), (2, im(0.5))],
        (2, 1) => vec![(1, r(0.5)), (2, im(-0.5))],
        _ => unreachable!(),
    }
}

pub type FactorTerm = (Vec<(usize, C64)>, Vec<(usize, C64)>);

/// The six printed terms of `U_{3⊗2}`.
pub fn u32_printed_terms() -> Vec<FactorTerm> {
    vec![
        (gm_elementary(1, 1), pauli_elementary(1, 1)),
        (gm_elementary(1, 2), pauli_elementary(2, 1)),
        (gm_elementary(2, 3), pauli_elementary(1, 1)),
        (gm_elementary(2, 1), pauli_elementary(2, 2)),
        (gm_elementary(3, 2), pauli_elementary(1, 2)),
        (gm_elementary(3, 3), pauli_elementary(2, 2)),
    ]
}

/// The six printed terms of `U_{2⊗3}`.
pub fn u23_printed_terms() -> Vec<FactorTerm> {
    vec![
        (pauli_elementary(1, 1), gm_elementary(1, 1)),
        (pauli_elementary(1, 2), gm_elementary(2, 1)),
        (pauli_elementary(1, 1), gm_elementary(3, 2)),
        (pauli_elementary(2, 2), gm_elementary(1, 2)),
        (pauli_elementary(2, 1), gm_elementary(2, 3)),
        (pauli_elementary(2, 2), gm_elementary(3, 3)),
    ]
}
