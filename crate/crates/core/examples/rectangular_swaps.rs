// `U_{3⊗2}` and `U_{2⊗3}` written as six products of Gell-Mann and Pauli
// expansions, compared with the constructed swap matrices, and their
// coefficient grids over the product basis.
//
// Run with `cargo run --example rectangular_swaps`.

use std::error::Error;

use tcm::matrix::format_complex;
use tcm::product::build_paper_expression;
use tcm::{decompose_product, swap_by_formula, PaperExpression};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for (which, p, q) in [(PaperExpression::U32, 3, 2), (PaperExpression::U23, 2, 3)] {
        let expr = build_paper_expression(which);
        let u = swap_by_formula(p, q)?.dense();
        let err = expr.max_abs_diff(&u)?;
        println!("{which:?}: six-term expansion vs U_{{{p}⊗{q}}}: {err:.1e}");
        if err > 1e-12 {
            return Err(format!("{which:?} expansion does not match").into());
        }

        let grid = decompose_product(&u, p, q)?;
        let terms = grid.terms(1e-12)?;
        println!("  {} nonzero product-basis coefficients:", terms.len());
        for t in terms {
            println!(
                "    {}⊗{}: {}",
                t.left,
                t.right,
                format_complex(t.value, 10)
            );
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
