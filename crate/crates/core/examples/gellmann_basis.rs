// Generalized Gell-Mann bases: the canonical listing, the Gram matrix
// check, and expansion of an operator over `{I, Λ_k}`.
//
// Run with `cargo run --example gellmann_basis`.

use std::error::Error;

use tcm::matrix::{format_complex, DenseMatrix, Tolerance};
use tcm::{basis, expand_in_basis};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let b3 = basis(3)?;
    println!("dimension 3: {} generators", b3.len());
    for (k, (label, m)) in b3.iter().enumerate() {
        println!("λ{} = {label}", k + 1);
        print!("{m}");
    }

    let tol = Tolerance::new(1e-12)?;
    for n in 2..=8 {
        let b = basis(n)?;
        let two_id = DenseMatrix::identity(b.len()).scale((2.0).into());
        let gram_err = b.gram().max_abs_diff(&two_id)?;
        let hermitian = b.matrices().all(|m| m.is_hermitian(tol));
        println!(
            "n={n}: {} generators, hermitian={hermitian}, |Gram - 2I| = {gram_err:.1e}",
            b.len()
        );
        if !hermitian || !tol.accepts(gram_err) {
            return Err(format!("basis({n}) is malformed").into());
        }
    }

    let e11 = DenseMatrix::elementary(3, 1, 1)?;
    let coeffs = expand_in_basis(&e11, 3)?;
    println!("E11 = {} I", format_complex(coeffs.c0, 10));
    for (k, c) in coeffs.c.iter().enumerate() {
        if c.norm() > 1e-12 {
            println!("      + {} λ{}", format_complex(*c, 10), k + 1);
        }
    }
    let err = coeffs.reconstruct()?.max_abs_diff(&e11)?;
    println!("reconstruction error {err:.1e}");
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
