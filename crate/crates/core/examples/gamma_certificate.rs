//! Builds γ certificates: a positive verdict proves Σ c_j sin(jx) ≥ 0 on (0, π).
//!
//!     cargo run --example gamma_certificate

use turan::certificates::{
    convexity_check, difference_coeffs, reconstruct_from_gamma, steinig_certify,
};
use turan::kernel::turan_coeff_vector;
use turan::sine_sums::sine_sum;
use turan::{CoeffVector, TuranParams};

fn show(label: &str, c: &CoeffVector) {
    let cert = steinig_certify(c);
    println!("{label}: γ = {:?}", cert.gammas);
    println!(
        "    verdict {:?}, min γ {} at index {}",
        cert.verdict, cert.min_gamma, cert.argmin_index
    );
    let x = 2.5;
    println!(
        "    sum at x={x}: {:.12}, rebuilt from γ: {:.12}",
        sine_sum(c, x),
        reconstruct_from_gamma(&cert.gammas, x)
    );
}

fn main() -> turan::Result<()> {
    show("[3, 2, 1]", &CoeffVector::new(vec![3.0, 2.0, 1.0])?);
    show("[1, 1]", &CoeffVector::new(vec![1.0, 1.0])?);
    show("S_6,1.5", &turan_coeff_vector(TuranParams::new(6, 1.5)?));

    // The convexity conditions give a certificate for the difference sum.
    for a in [0.5, 1.0, 2.0] {
        let av = turan_coeff_vector(TuranParams::new(8, a)?);
        let diff = difference_coeffs(&av)?;
        println!(
            "n=8 a={a}: coefficient conditions {:?}, difference-sum verdict {:?}",
            convexity_check(&av)?,
            steinig_certify(&diff).verdict
        );
    }
    Ok(())
}
