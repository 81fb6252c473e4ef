// Swap matrices `U_{p⊗q}`: both constructions, the index-map form, and
// the defining action `U (a ⊗ b) = b ⊗ a`.
//
// Run with `cargo run --example swap_matrices`.

use std::error::Error;

use tcm::{swap_by_formula, swap_by_rule, DenseMatrix, C64};

fn column(values: &[C64]) -> Result<DenseMatrix, tcm::Error> {
    DenseMatrix::from_vec(values.len(), 1, values.to_vec())
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let u22 = swap_by_formula(2, 2)?;
    println!("U_{{2⊗2}} =");
    print!("{}", u22.dense());

    let u32 = swap_by_rule(3, 2)?;
    println!("U_{{3⊗2}} ones at {:?}", u32.positions());
    println!("perm (0-based col -> row): {:?}", u32.perm());

    let mut mismatches = 0;
    for p in 2..=8 {
        for q in 2..=8 {
            if swap_by_rule(p, q)? != swap_by_formula(p, q)? {
                mismatches += 1;
            }
        }
    }
    println!("rule vs formula for 2 <= p,q <= 8: {mismatches} mismatches");
    if mismatches != 0 {
        return Err("constructions disagree".into());
    }

    let a = column(&[C64::new(1.0, 0.0), C64::new(0.0, 2.0), C64::new(-1.0, 0.5)])?;
    let b = column(&[C64::new(3.0, -1.0), C64::new(0.25, 0.0)])?;
    let swapped = u32.apply(a.kron(&b)?.as_slice())?;
    let expected = b.kron(&a)?;
    println!("U (a⊗b) == b⊗a: {}", swapped == expected.as_slice());
    if swapped != expected.as_slice() {
        return Err("swap did not exchange the factors".into());
    }

    let back = u32.inverse().apply(&swapped)?;
    println!("U_{{2⊗3}} undoes it: {}", back == a.kron(&b)?.as_slice());
    println!("trace U_{{3⊗2}} = {}", u32.fixed_points());
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
