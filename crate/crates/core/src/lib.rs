//! Turán-type sine sums and the inequalities around them.
//!
//! The crate evaluates the sine polynomials
//!
//! ```text
//! S_{n,a}(x)     = Σ_{j=1}^n C(n+a-j, n-j) sin(jx)
//! Θ_{n,a}(x, y)  = Σ_{j=1}^n C(n+a-j, n-j) sin(jx) sin(jy) / j
//! ```
//!
//! for real `a`, together with their odd-index variants, the Fejér sums
//! `φ_n`, the Chebyshev sums `Λ_{n,a}` and two weighted Chebyshev integrals.
//! On top of the evaluators sit constructive nonnegativity certificates
//! ([`certificates`]) and a grid verifier ([`verifier`]) holding a registry
//! of the known inequalities, their equality cases and the `a = 1`
//! sharpness boundary.
//!
//! Every capability has a runnable program under `examples/`; the `turan`
//! binary is a thin wrapper around [`cli::run`].

pub mod certificates;
pub mod chebyshev;
pub mod cli;
mod error;
pub mod kernel;
pub mod sine_sums;
pub mod verifier;

pub use error::{Error, Result};
pub use kernel::{CoeffVector, TuranParams};
