//! Below a = 1 the positivity of S_{n,a} and Θ_{n,a} fails; this finds the
//! counterexamples and locates the boundary.
//!
//!     cargo run --release --example sharpness_boundary

use turan::verifier::{sharpness_probe_s, sharpness_probe_theta, sweep_a, SweepTarget};

fn main() -> turan::Result<()> {
    for a in [0.5, 0.9, 0.99] {
        if let Some(c) = sharpness_probe_s(a)? {
            println!("a={a}: S_{},a({:.6}) = {:.3e}", c.n, c.x, c.value);
        }
        if let Some(c) = sharpness_probe_theta(a)? {
            println!(
                "a={a}: Θ_{},a({:.1e}, {:.6}) = {:.3e}",
                c.n, c.x, c.y, c.value
            );
        }
    }
    for target in [SweepTarget::S, SweepTarget::Theta] {
        let r = sweep_a(target, 0.5, 1.5, 20)?;
        println!(
            "{target:?}: last a with a counterexample {:?}, first without {:?}, boundary ≈ {:?}",
            r.largest_a_with_counterexample,
            r.smallest_a_without_counterexample,
            r.boundary_estimate
        );
    }
    Ok(())
}
