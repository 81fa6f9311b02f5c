//! Weighted Chebyshev integrals by closed form and by quadrature, and the
//! sign changes of the odd-degree gap functions.
//!
//!     cargo run --example chebyshev_integrals

use std::f64::consts::PI;

use turan::chebyshev::{
    eval_lambda, integral_tu_weighted, integral_u_weighted, odd_degree_sign_change, GapSide,
    QuadratureConfig,
};

fn main() -> turan::Result<()> {
    let closed = QuadratureConfig::closed_form();
    let quad = QuadratureConfig::gauss_legendre();
    for n in [1, 5, 20] {
        for x in [-0.9, 0.0, 0.6] {
            let c = integral_u_weighted(n, x, closed)?;
            let q = integral_u_weighted(n, x, quad)?;
            let z: f64 = x.acos();
            println!(
                "∫ U_{:<2} from {x:>4}: {c:.12} (quadrature off by {:.1e}); bounds {:.6} / {:.6}",
                2 * n,
                (c - q).abs(),
                z.min(PI - z),
                z.max(PI - z)
            );
        }
    }
    println!(
        "∫ T_1 U_0 from 0 = {}",
        integral_tu_weighted(0, 0.0, closed)?
    );
    println!("Λ_2,1(-1/2) = {}", eval_lambda(2, 1.0, -0.5)?);

    for (n, side) in [
        (1, GapSide::UpperGap),
        (3, GapSide::LowerGap),
        (5, GapSide::UpperGap),
        (7, GapSide::LowerGap),
    ] {
        let s = odd_degree_sign_change(n, side)?;
        println!(
            "degree {n} {side:?}: {:.2e} at x={:.4}, {:.2e} at x={:.4}",
            s.negative_value, s.negative_at, s.positive_value, s.positive_at
        );
    }
    Ok(())
}
