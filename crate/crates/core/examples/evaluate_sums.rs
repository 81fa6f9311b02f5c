//! Evaluates the sine sums at a few points and compares the fast recurrence
//! with a term-by-term sum.
//!
//!     cargo run --example evaluate_sums

use std::f64::consts::PI;

use turan::kernel::turan_coeff_vector;
use turan::sine_sums::{eval_s, eval_s_star, eval_theta, fejer_phi, fejer_phi_closed, sine_sum};
use turan::TuranParams;

fn main() -> turan::Result<()> {
    let p = TuranParams::new(3, 1.0)?;
    println!(
        "coefficients of S_3,1: {:?}",
        turan_coeff_vector(p).as_slice()
    );
    println!(
        "S_3,1(2π/3)   = {:.12} (√3/2 = {:.12})",
        eval_s(p, 2.0 * PI / 3.0),
        3f64.sqrt() / 2.0
    );

    let p = TuranParams::new(7, 2.5)?;
    for x in [0.3, 1.5, 3.0] {
        println!(
            "n=7 a=2.5 x={x}: S = {:.10}, S* = {:.10}, Θ(x, π-x) = {:.10}",
            eval_s(p, x),
            eval_s_star(p, x),
            eval_theta(p, x, PI - x)
        );
    }

    println!(
        "φ_6(π/2) direct = {}, closed = {}",
        fejer_phi(6, PI / 2.0),
        fejer_phi_closed(6, PI / 2.0)?
    );

    let big = turan_coeff_vector(TuranParams::new(100_000, 1.5)?);
    let x = 1.0;
    let naive: f64 = big
        .as_slice()
        .iter()
        .enumerate()
        .map(|(i, c)| c * ((i + 1) as f64 * x).sin())
        .sum();
    let fast = sine_sum(&big, x);
    println!(
        "n=1e5: recurrence {fast:.6e}, naive {naive:.6e}, relative gap {:.1e}",
        ((fast - naive) / fast).abs()
    );
    Ok(())
}
