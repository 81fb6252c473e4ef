// Numerical check of `U_{n⊗n} = (1/n) I⊗I + (1/2) Σ Λ_k⊗Λ_k` together with
// the two family-sum identities it is assembled from.
//
// Run with `cargo run --release --example theorem_check`.

use std::error::Error;

use tcm::product::{check_identities, reconstruct_product, theorem32_coefficients};
use tcm::{swap_by_formula, Tolerance};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let tol = Tolerance::default();
    println!(" n   Σ ΛΛ vs 2U-(2/n)I   offdiag    diagonal   synthesis");
    for n in 2..=12 {
        let report = check_identities(n, tol)?;
        let synth = reconstruct_product(&theorem32_coefficients(n)?)?
            .max_abs_diff(&swap_by_formula(n, n)?.dense())?;
        println!(
            "{n:>2}   {:>17.2e}   {:>8.2e}   {:>8.2e}   {:>9.2e}",
            report.theorem_error, report.offdiag_error, report.diagonal_error, synth
        );
        if !report.pass || !tol.accepts(synth) {
            return Err(format!("identity check failed at n = {n}").into());
        }
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
