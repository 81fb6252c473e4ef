//! Checks against independently computed references: brute-force delta
//! sums, direct Kronecker projections, and distributive expansion of the
//! printed six-term swap formulas.

mod common;

use common::*;
use tcm::gellmann::{antisymmetric_generator, diagonal_generator, symmetric_generator};
use tcm::matrix::{I, ONE, ZERO};
use tcm::product::{
    build_paper_expression, diagonal_family_sum, offdiag_family_sum, theorem32_coefficients,
    verify_theorem32,
};
use tcm::{
    basis, decompose_product, swap_by_formula, swap_by_rule, DenseMatrix, PaperExpression,
    ProductCoefficients, Tolerance, C64,
};

fn grid_of(c: &ProductCoefficients) -> Vec<Vec<C64>> {
    c.rows()
}

fn max_grid_diff(a: &[Vec<C64>], b: &[Vec<C64>]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .flat_map(|(ra, rb)| {
            assert_eq!(ra.len(), rb.len());
            ra.iter().zip(rb).map(|(x, y)| (x - y).norm())
        })
        .fold(0.0, f64::max)
}

#[test]
fn classical_listings_entrywise() {
    let z = ZERO;
    let o = ONE;
    let s = C64::new(1.0 / 3f64.sqrt(), 0.0);
    let sigma = [
        vec![vec![z, o], vec![o, z]],
        vec![vec![z, -I], vec![I, z]],
        vec![vec![o, z], vec![z, -o]],
    ];
    let lambda = [
        vec![vec![z, o, z], vec![o, z, z], vec![z, z, z]],
        vec![vec![z, -I, z], vec![I, z, z], vec![z, z, z]],
        vec![vec![o, z, z], vec![z, -o, z], vec![z, z, z]],
        vec![vec![z, z, o], vec![z, z, z], vec![o, z, z]],
        vec![vec![z, z, -I], vec![z, z, z], vec![I, z, z]],
        vec![vec![z, z, z], vec![z, z, o], vec![z, o, z]],
        vec![vec![z, z, z], vec![z, z, -I], vec![z, I, z]],
        vec![vec![s, z, z], vec![z, s, z], vec![z, z, s * -2.0]],
    ];
    let tol = Tolerance::new(1e-12).unwrap();
    let b2 = basis(2).unwrap();
    for (k, rows) in sigma.iter().enumerate() {
        let want = DenseMatrix::from_rows(rows).unwrap();
        assert!(b2.get(k).unwrap().approx_eq(&want, tol), "σ{}", k + 1);
    }
    let b3 = basis(3).unwrap();
    for (k, rows) in lambda.iter().enumerate() {
        let want = DenseMatrix::from_rows(rows).unwrap();
        assert!(b3.get(k).unwrap().approx_eq(&want, tol), "λ{}", k + 1);
    }
}

#[test]
fn basis_invariants_up_to_16() {
    let eps = 1e-12;
    let tol = Tolerance::new(eps).unwrap();
    for n in 2..=16 {
        let b = basis(n).unwrap();
        assert_eq!(b.len(), n * n - 1);
        for m in b.matrices() {
            assert!(m.is_hermitian(tol));
            assert!(m.trace().unwrap().norm() <= eps);
        }
        let want = 2.0 * DenseMatrix::identity(b.len());
        assert!(b.gram().max_abs_diff(&want).unwrap() <= eps, "n={n}");
    }
}

#[test]
fn kron_matches_double_loop_on_random_inputs() {
    let mut g = rng(11);
    for _ in 0..20 {
        let a = random_matrix(&mut g, 2, 3);
        let b = random_matrix(&mut g, 3, 2);
        let k = a.kron(&b).unwrap();
        for r in 0..6 {
            for c in 0..6 {
                let (i1, i2) = (r / 3, r % 3);
                let (j1, j2) = (c / 2, c % 2);
                assert_eq!(k.get(r, c), a.get(i1, j1) * b.get(i2, j2));
            }
        }
    }
}

#[test]
fn family_sums_match_delta_oracles() {
    for n in 2..=12 {
        let off = offdiag_family_sum(n).unwrap();
        assert!(
            off.max_abs_diff(&offdiag_delta_oracle(n)).unwrap() <= 1e-10,
            "n={n}"
        );
        let diag = diagonal_family_sum(n).unwrap();
        assert!(
            diag.max_abs_diff(&diagonal_delta_oracle(n)).unwrap() <= 1e-10,
            "n={n}"
        );
    }
    assert!(
        diagonal_family_sum(6)
            .unwrap()
            .max_abs_diff(&diagonal_delta_oracle(6))
            .unwrap()
            <= 1e-12
    );
}

#[test]
fn per_pair_products_match_expanded_delta_products() {
    // (Λ^(ij)⊗Λ^(ij)) and (Λ^[ij]⊗Λ^[ij]) entry by entry, n = 3
    let n = 3;
    let d = |a: usize, b: usize| if a == b { 1.0 } else { 0.0 };
    for i in 0..n {
        for j in (i + 1)..n {
            let s = symmetric_generator(n, i + 1, j + 1).unwrap();
            let a = antisymmetric_generator(n, i + 1, j + 1).unwrap();
            let ss = s.kron(&s).unwrap();
            let aa = a.kron(&a).unwrap();
            for l1 in 0..n {
                for l2 in 0..n {
                    for k1 in 0..n {
                        for k2 in 0..n {
                            let t1 = d(i, l1) * d(j, k1) * d(i, l2) * d(j, k2);
                            let t2 = d(i, l1) * d(j, k1) * d(j, l2) * d(i, k2);
                            let t3 = d(j, l1) * d(i, k1) * d(i, l2) * d(j, k2);
                            let t4 = d(j, l1) * d(i, k1) * d(j, l2) * d(i, k2);
                            let (r, c) = (l1 * n + l2, k1 * n + k2);
                            assert_eq!(ss.get(r, c), C64::new(t1 + t2 + t3 + t4, 0.0));
                            assert_eq!(aa.get(r, c), C64::new(-t1 + t2 + t3 - t4, 0.0));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn family_summands_are_hermitian() {
    let tol = Tolerance::new(1e-12).unwrap();
    for n in 2..=5 {
        for g in basis(n).unwrap().matrices() {
            assert!(g.kron(g).unwrap().is_hermitian(tol));
        }
    }
}

#[test]
fn diagonal_generators_against_closed_form() {
    for n in 2..=9 {
        for d in 1..n {
            let norm = ((d * (d + 1)) as f64 / 2.0).sqrt();
            let g = diagonal_generator(n, d).unwrap();
            for k in 0..n {
                // (Σ_{p<=d} δ_pk - d δ_{d+1,k}) / √(C(d+1, 2)), 1-based k
                let kk = k + 1;
                let v = ((kk <= d) as u8 as f64 - d as f64 * (kk == d + 1) as u8 as f64) / norm;
                assert!((g.get(k, k).re - v).abs() <= 1e-15);
            }
        }
    }
}

#[test]
fn rectangular_swap_grids_match_distributive_expansion() {
    let u32 = swap_by_formula(3, 2).unwrap().dense();
    let got = grid_of(&decompose_product(&u32, 3, 2).unwrap());
    let want = expand_by_distributivity(3, 2, &u32_printed_terms());
    assert!(max_grid_diff(&got, &want) <= 1e-12);
    assert!((got[0][0] - C64::new(1.0 / 3.0, 0.0)).norm() <= 1e-15);

    let u23 = swap_by_formula(2, 3).unwrap().dense();
    let got = grid_of(&decompose_product(&u23, 2, 3).unwrap());
    let want = expand_by_distributivity(2, 3, &u23_printed_terms());
    assert!(max_grid_diff(&got, &want) <= 1e-12);
}

#[test]
fn printed_expressions_reproduce_swaps() {
    let u32 = build_paper_expression(PaperExpression::U32);
    let u23 = build_paper_expression(PaperExpression::U23);
    assert!(
        u32.max_abs_diff(&swap_by_formula(3, 2).unwrap().dense())
            .unwrap()
            <= 1e-12
    );
    assert!(
        u23.max_abs_diff(&swap_by_formula(2, 3).unwrap().dense())
            .unwrap()
            <= 1e-12
    );
    assert!(u32.transpose().max_abs_diff(&u23).unwrap() <= 1e-12);
}

#[test]
fn theorem_coefficients_match_projection() {
    for n in [2, 3, 7] {
        let projected = decompose_product(&swap_by_formula(n, n).unwrap().dense(), n, n).unwrap();
        let closed = theorem32_coefficients(n).unwrap();
        let err = projected.max_abs_diff(&closed).unwrap();
        let bound = if n == 2 { 0.0 } else { 1e-10 };
        assert!(err <= bound, "n={n} err={err}");
    }
}

#[test]
fn theorem_holds_through_twelve() {
    let tol = Tolerance::default();
    for n in 2..=12 {
        let r = verify_theorem32(n, tol).unwrap();
        assert!(r.pass, "n={n} err={}", r.max_error);
    }
    assert!(verify_theorem32(2, tol).unwrap().max_error <= 1e-14);
}

#[test]
fn rule_and_formula_agree_exhaustively() {
    for p in 2..=8 {
        for q in 2..=8 {
            assert_eq!(swap_by_rule(p, q).unwrap(), swap_by_formula(p, q).unwrap());
        }
    }
}

#[test]
fn swap_trace_counts_coincident_indices() {
    for (p, q) in [(3, 2), (2, 3), (4, 6), (5, 5)] {
        let brute = (0..p)
            .flat_map(|j1| (0..q).map(move |j2| (j1, j2)))
            .filter(|&(j1, j2)| j1 * q + j2 == j2 * p + j1)
            .count();
        let tr = swap_by_formula(p, q).unwrap().dense().trace().unwrap();
        assert_eq!(tr, C64::new(brute as f64, 0.0));
    }
}
