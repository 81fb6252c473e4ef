// Decomposing an arbitrary operator on a qubit ⊗ qutrit space: a
// qubit-controlled cyclic shift of the qutrit.
//
// Run with `cargo run --example decompose_operator`.

use std::error::Error;

use tcm::matrix::{format_complex, DenseMatrix, ONE, ZERO};
use tcm::{decompose_product, reconstruct_product};

/// `|0⟩⟨0| ⊗ I_3 + |1⟩⟨1| ⊗ X_3`, with `X_3 |k⟩ = |k+1 mod 3⟩`.
fn controlled_shift() -> Result<DenseMatrix, tcm::Error> {
    let shift = DenseMatrix::from_fn(3, 3, |r, c| if r == (c + 1) % 3 { ONE } else { ZERO });
    let p0 = DenseMatrix::elementary(2, 1, 1)?;
    let p1 = DenseMatrix::elementary(2, 2, 2)?;
    Ok(p0.kron(&DenseMatrix::identity(3))? + p1.kron(&shift)?)
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let m = controlled_shift()?;
    let unitary = m
        .matmul(&m.dagger())?
        .max_abs_diff(&DenseMatrix::identity(6))?;
    println!("controlled shift, |U U† - I| = {unitary:.1e}");

    let grid = decompose_product(&m, 2, 3)?;
    for t in grid.terms(1e-12)? {
        println!("  {}⊗{}: {}", t.left, t.right, format_complex(t.value, 10));
    }
    let err = reconstruct_product(&grid)?.max_abs_diff(&m)?;
    println!("reconstruction error {err:.1e}");
    if err > 1e-12 {
        return Err("reconstruction failed".into());
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
