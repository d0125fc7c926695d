//! The second-order correction summed term by term against its closed form,
//! and the effect of the −28n misprint in the level polynomial.

use varpert::anharmonic::{second_order_closed_form, second_order_closed_form_with, second_order_sum, solve_omega, ClosedForm};
use varpert::model::AnharmonicSpec;

fn main() -> varpert::Result<()> {
    for b in [0.001, 0.05, 1.0] {
        let spec = AnharmonicSpec::with_default_stiffness(b)?;
        for n in [0, 1, 5, 12] {
            let u = solve_omega(&spec, n).hbar_omega_n;
            let sum = second_order_sum(&spec, n, u)?;
            let closed = second_order_closed_form(&spec, n, u)?;
            let printed = second_order_closed_form_with(&spec, n, u, ClosedForm::AsPrinted)?;
            println!(
                "b={b:<5} n={n:<2} sum {sum:>14.9e}  rel.err {:>9.2e}  misprint off by {:>9.2e}",
                (closed - sum) / sum.abs(),
                printed - sum
            );
        }
    }
    Ok(())
}
