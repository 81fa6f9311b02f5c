//! Nonnegativity certificates for sine polynomials.
//!
//! Every sine polynomial `Σ c_j sin(jx)` can be rewritten as `Σ γ_j φ_j(x)`
//! with Fejér sums `φ_j ≥ 0` on `(0, π)`. When all `γ_j ≥ 0` the polynomial
//! is nonnegative there (Steinig's criterion). The γ vector is the
//! certificate; a negative entry only means the criterion is silent.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kernel::{turan_coeff, CoeffVector, TuranParams};
use crate::sine_sums::{fejer_phi, sine_sum};

/// Threshold used by [`equality_diagnostics`] to call `φ_i(x0)` zero.
pub const VANISHING_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    CertifiedNonnegative,
    Indeterminate,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GammaCertificate {
    pub gammas: Vec<f64>,
    pub verdict: Verdict,
    pub min_gamma: f64,
    /// 1-based index of the smallest γ (first one on ties).
    pub argmin_index: usize,
}

/// `γ_k = c_k + 2 Σ_{j=1}^{n-k} (-1)^j c_{j+k}`.
///
/// Uses the running tail `T_k = -c_{k+1} - T_{k+1}`, `T_n = 0`, so the cost
/// is linear. The verdict is exact: any `γ_k < 0` gives `Indeterminate`.
pub fn gamma_transform(c: &CoeffVector) -> GammaCertificate {
    let c = c.as_slice();
    let n = c.len();
    let mut gammas = vec![0.0; n];
    let mut tail = 0.0;
    for k in (0..n).rev() {
        gammas[k] = c[k] + 2.0 * tail;
        tail = -c[k] - tail;
    }
    let (argmin, min_gamma) =
        gammas
            .iter()
            .copied()
            .enumerate()
            .fold(
                (0, f64::INFINITY),
                |best, (i, g)| if g < best.1 { (i, g) } else { best },
            );
    let verdict = if min_gamma >= 0.0 {
        Verdict::CertifiedNonnegative
    } else {
        Verdict::Indeterminate
    };
    GammaCertificate {
        gammas,
        verdict,
        min_gamma,
        argmin_index: argmin + 1,
    }
}

/// Steinig's criterion. `CertifiedNonnegative` guarantees `Σ c_j sin(jx) ≥ 0`
/// on `(0, π)`; `Indeterminate` proves nothing either way.
pub fn steinig_certify(c: &CoeffVector) -> GammaCertificate {
    gamma_transform(c)
}

/// `Σ γ_j φ_j(x)`, building each `φ_j` from a running prefix sum of sines.
pub fn reconstruct_from_gamma(gammas: &[f64], x: f64) -> f64 {
    let mut prefix = 0.0;
    let mut total = 0.0;
    for (i, &g) in gammas.iter().enumerate() {
        let s = ((i + 1) as f64 * x).sin();
        total += g * (2.0 * prefix + s);
        prefix += s;
    }
    total
}

/// The first of the convexity and tail conditions that fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ConvexityViolation {
    /// `2 a_k ≤ a_{k-1} + a_{k+1}` fails at this `k`.
    Convexity { k: usize },
    /// `a_n ≥ 0` fails.
    TailNegative,
    /// `2 a_n ≤ a_{n-1}` fails.
    TailTooLarge,
}

/// Checks `2a_k ≤ a_{k-1} + a_{k+1}` for `k = 2..n-1` and `0 ≤ 2a_n ≤ a_{n-1}`
/// with exact comparisons. `Ok(None)` means every condition holds.
pub fn convexity_check(av: &CoeffVector) -> Result<Option<ConvexityViolation>> {
    let a = av.as_slice();
    let n = a.len();
    if n < 3 {
        return Err(Error::domain(format!(
            "coefficient conditions need n >= 3, got {n}"
        )));
    }
    for k in 2..n {
        // 1-based a_k is a[k-1]
        if 2.0 * a[k - 1] > a[k - 2] + a[k] {
            return Ok(Some(ConvexityViolation::Convexity { k }));
        }
    }
    if a[n - 1] < 0.0 {
        return Ok(Some(ConvexityViolation::TailNegative));
    }
    if 2.0 * a[n - 1] > a[n - 2] {
        return Ok(Some(ConvexityViolation::TailTooLarge));
    }
    Ok(None)
}

/// Coefficients of `L_n(x) = Σ_{j≤n} a_j sin(jx) - Σ_{j≤n-2} a_{j+2} sin(jx)`:
/// `c̃_j = a_j - a_{j+2}` for `j ≤ n-2`, then `a_{n-1}, a_n`.
pub fn difference_coeffs(av: &CoeffVector) -> Result<CoeffVector> {
    let a = av.as_slice();
    let n = a.len();
    if n < 3 {
        return Err(Error::domain(format!(
            "difference coefficients need n >= 3, got {n}"
        )));
    }
    let mut c: Vec<f64> = (0..n - 2).map(|j| a[j] - a[j + 2]).collect();
    c.push(a[n - 2]);
    c.push(a[n - 1]);
    CoeffVector::new(c)
}

/// Closed form of `ã_{j-1} - 2ã_j + ã_{j+1}` for `ã_j = C(n+a-j, n-j)`:
/// `a(a-1)/(n-j+1)! · ∏_{ν=1}^{n-j-1} (n+a-j-ν)`.
pub fn turan_second_difference(p: TuranParams, j: usize) -> Result<f64> {
    let n = p.n();
    if n < 3 || j < 2 || j > n - 1 {
        return Err(Error::domain(format!(
            "second difference needs n >= 3 and 2 <= j <= n-1, got n={n}, j={j}"
        )));
    }
    let a = p.a();
    let m = n - j;
    // interleave the factorial with the product to stay in range
    let mut acc = a * (a - 1.0) / ((m * (m + 1)) as f64);
    for nu in 1..m {
        acc *= (m - nu) as f64 + a;
        acc /= nu as f64;
    }
    Ok(acc)
}

/// Second difference by brute force from the coefficients themselves.
pub fn turan_second_difference_direct(p: TuranParams, j: usize) -> Result<f64> {
    let n = p.n();
    if n < 3 || j < 2 || j > n - 1 {
        return Err(Error::domain(format!(
            "second difference needs n >= 3 and 2 <= j <= n-1, got n={n}, j={j}"
        )));
    }
    Ok(turan_coeff(p, j - 1)? - 2.0 * turan_coeff(p, j)? + turan_coeff(p, j + 1)?)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EqualityDiagnostics {
    pub x0: f64,
    /// `L_n(x0)`, required to be within [`VANISHING_TOL`] of zero.
    pub value: f64,
    /// Indices `i` with `|φ_i(x0)| ≤ VANISHING_TOL`.
    pub vanishing_phi_indices: Vec<usize>,
    /// `a_2 - 2a_3` for `n = 3`, `a_2 - 2a_3 + a_4` for `n ≥ 4`.
    pub second_diff_at_2: f64,
}

/// Diagnoses a zero `x0` of the difference polynomial `L_n` built from `av`.
///
/// At such a zero every `φ_i` with `γ̃_i > 0` must vanish. Since `φ_2 > 0`
/// on `(0, π)`, this forces `γ̃_2 = 0`, which is the reported combination.
pub fn equality_diagnostics(av: &CoeffVector, x0: f64) -> Result<EqualityDiagnostics> {
    if !(x0 > 0.0 && x0 < std::f64::consts::PI) {
        return Err(Error::domain(format!("x0 must lie in (0, pi), got {x0}")));
    }
    let diff = difference_coeffs(av)?;
    let value = sine_sum(&diff, x0);
    if value.abs() > VANISHING_TOL {
        return Err(Error::domain(format!(
            "L_n(x0) = {value:e} is not an equality point (tolerance {VANISHING_TOL:e})"
        )));
    }
    let a = av.as_slice();
    let n = a.len();
    let vanishing_phi_indices = (1..=n)
        .filter(|&i| fejer_phi(i, x0).abs() <= VANISHING_TOL)
        .collect();
    let second_diff_at_2 = if n == 3 {
        a[1] - 2.0 * a[2]
    } else {
        a[1] - 2.0 * a[2] + a[3]
    };
    Ok(EqualityDiagnostics {
        x0,
        value,
        vanishing_phi_indices,
        second_diff_at_2,
    })
}
