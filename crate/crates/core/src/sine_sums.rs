//! Evaluators for the sine sums.
//!
//! The shared kernel [`sine_sum`] evaluates `Σ c_j sin(jx)` with a backward
//! three-term recurrence in Reinsch's difference form, which keeps the
//! error growth bounded near `x = 0` and `x = π`. Very close to a multiple
//! of π the recurrence is skipped in favour of direct compensated summation.

use crate::error::{Error, Result};
use crate::kernel::{turan_coeff_vector, CoeffVector, TuranParams};

/// Below this `|sin x|` the recurrence is replaced by direct summation.
pub const DIRECT_FALLBACK_SIN: f64 = 1e-8;

/// Neumaier's variant of Kahan summation.
#[derive(Debug, Default, Clone, Copy)]
pub struct CompensatedSum {
    sum: f64,
    comp: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut s = CompensatedSum::new();
        for v in iter {
            s.add(v);
        }
        s
    }
}

/// `Σ_{j=1}^n c_j sin(jx)`, O(n).
pub fn sine_sum(c: &CoeffVector, x: f64) -> f64 {
    sine_sum_slice(c.as_slice(), x)
}

pub(crate) fn sine_sum_slice(c: &[f64], x: f64) -> f64 {
    let (s, cx) = x.sin_cos();
    if s.abs() < DIRECT_FALLBACK_SIN {
        return direct_compensated(c, x);
    }
    // b_k = c_k + 2cos(x) b_{k+1} - b_{k+2}, result b_1 sin(x), tracked
    // through d_k = b_k ∓ b_{k+1} to avoid cancellation in 2cos(x) ≈ ±2.
    let mut b = 0.0;
    let mut d = 0.0;
    if cx >= 0.0 {
        let half = (0.5 * x).sin();
        let lambda = -4.0 * half * half;
        for &ck in c.iter().rev() {
            d += ck + lambda * b;
            b += d;
        }
    } else {
        let half = (0.5 * x).cos();
        let lambda = 4.0 * half * half;
        for &ck in c.iter().rev() {
            d = ck + lambda * b - d;
            b = d - b;
        }
    }
    b * s
}

pub(crate) fn direct_compensated(c: &[f64], x: f64) -> f64 {
    c.iter()
        .enumerate()
        .map(|(i, &cj)| cj * ((i + 1) as f64 * x).sin())
        .collect::<CompensatedSum>()
        .value()
}

/// Fejér's sum `φ_n(x) = 2 Σ_{j=1}^{n-1} sin(jx) + sin(nx)`, summed directly.
pub fn fejer_phi(n: usize, x: f64) -> f64 {
    let mut acc: CompensatedSum = (1..n).map(|j| 2.0 * (j as f64 * x).sin()).collect();
    acc.add((n as f64 * x).sin());
    acc.value()
}

/// `φ_n(x) = cos(x/2)(1 - cos(nx)) / sin(x/2)` on `(0, π)`.
pub fn fejer_phi_closed(n: usize, x: f64) -> Result<f64> {
    if !(x > 0.0 && x < std::f64::consts::PI) {
        return Err(Error::domain(format!(
            "closed-form phi needs x in (0, pi), got {x}"
        )));
    }
    let (s, c) = (0.5 * x).sin_cos();
    // 1 - cos(nx) = 2 sin^2(nx/2), free of cancellation
    let h = (0.5 * n as f64 * x).sin();
    Ok(c * 2.0 * h * h / s)
}

/// Coefficients of `S_{n,a}`, cached for repeated evaluation.
#[derive(Debug, Clone)]
pub struct TuranSum {
    params: TuranParams,
    coeffs: CoeffVector,
    odd: Vec<f64>,
}

impl TuranSum {
    pub fn new(params: TuranParams) -> Self {
        let coeffs = turan_coeff_vector(params);
        let odd = coeffs
            .as_slice()
            .iter()
            .enumerate()
            .map(|(i, &c)| if i % 2 == 0 { c } else { 0.0 })
            .collect();
        TuranSum {
            params,
            coeffs,
            odd,
        }
    }

    pub fn params(&self) -> TuranParams {
        self.params
    }

    pub fn coeffs(&self) -> &CoeffVector {
        &self.coeffs
    }

    pub fn s(&self, x: f64) -> f64 {
        sine_sum(&self.coeffs, x)
    }

    pub fn s_star(&self, x: f64) -> f64 {
        sine_sum_slice(&self.odd, x)
    }

    pub fn theta(&self, x: f64, y: f64) -> f64 {
        theta_sum(self.coeffs.as_slice(), x, y, 1)
    }

    pub fn theta_star(&self, x: f64, y: f64) -> f64 {
        theta_sum(self.coeffs.as_slice(), x, y, 2)
    }
}

fn theta_sum(c: &[f64], x: f64, y: f64, stride: usize) -> f64 {
    c.iter()
        .enumerate()
        .step_by(stride)
        .map(|(i, &cj)| {
            let j = (i + 1) as f64;
            cj * (j * x).sin() * (j * y).sin() / j
        })
        .collect::<CompensatedSum>()
        .value()
}

/// `S_{n,a}(x)`.
pub fn eval_s(p: TuranParams, x: f64) -> f64 {
    sine_sum(&turan_coeff_vector(p), x)
}

/// `S*_{n,a}(x)`, the odd-index part of `S_{n,a}`.
pub fn eval_s_star(p: TuranParams, x: f64) -> f64 {
    TuranSum::new(p).s_star(x)
}

/// `Θ_{n,a}(x, y)`.
pub fn eval_theta(p: TuranParams, x: f64, y: f64) -> f64 {
    theta_sum(turan_coeff_vector(p).as_slice(), x, y, 1)
}

/// `Θ*_{n,a}(x, y)`, odd indices only.
pub fn eval_theta_star(p: TuranParams, x: f64, y: f64) -> f64 {
    theta_sum(turan_coeff_vector(p).as_slice(), x, y, 2)
}

/// `Σ_{j=1}^n sin(jx)/j`.
pub fn fejer_jackson_sum(n: usize, x: f64) -> f64 {
    (1..=n)
        .map(|j| (j as f64 * x).sin() / j as f64)
        .collect::<CompensatedSum>()
        .value()
}

/// `Σ_{j=0}^n sin((2j+1)x)/(2j+1)`.
pub fn carslaw_sum(n: usize, x: f64) -> f64 {
    (0..=n)
        .map(|j| {
            let k = (2 * j + 1) as f64;
            (k * x).sin() / k
        })
        .collect::<CompensatedSum>()
        .value()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};

    fn p(n: usize, a: f64) -> TuranParams {
        TuranParams::new(n, a).unwrap()
    }

    fn coeffs(v: &[f64]) -> CoeffVector {
        CoeffVector::new(v.to_vec()).unwrap()
    }

    const HALF_SQRT3: f64 = 0.866_025_403_784_438_6;

    #[test]
    fn sine_sum_examples() {
        assert!((sine_sum(&coeffs(&[1.0]), FRAC_PI_3) - HALF_SQRT3).abs() < 1e-15);
        assert!((sine_sum(&coeffs(&[3.0, 2.0, 1.0]), 2.0 * PI / 3.0) - HALF_SQRT3).abs() < 1e-14);
    }

    #[test]
    fn sine_sum_both_branches_and_fallback() {
        let c = coeffs(&[0.3, -1.2, 2.5, 0.7, -0.4]);
        for &x in &[1e-9, 1e-5, 0.4, 1.2, FRAC_PI_2, 2.0, 3.1, PI - 1e-9] {
            let got = sine_sum(&c, x);
            let want = direct_compensated(c.as_slice(), x);
            assert!((got - want).abs() < 1e-14, "x={x}: {got} vs {want}");
        }
    }

    #[test]
    fn compensated_sum_recovers_cancellation() {
        let s: CompensatedSum = [1e16, 1.0, -1e16].into_iter().collect();
        assert_eq!(s.value(), 1.0);
    }

    #[test]
    fn phi_pinned_values() {
        assert!(fejer_phi(3, 2.0 * PI / 3.0).abs() < 1e-12);
        assert!((fejer_phi(5, 2.0 * PI / 3.0) - HALF_SQRT3).abs() < 1e-12);
        assert!((fejer_phi(6, FRAC_PI_2) - 2.0).abs() < 1e-12);
        assert!((fejer_phi(1, 0.9) - 0.9f64.sin()).abs() < 1e-15);
    }

    #[test]
    fn phi_closed_examples() {
        assert!(fejer_phi_closed(4, FRAC_PI_2).unwrap().abs() < 1e-15);
        assert!((fejer_phi_closed(2, FRAC_PI_2).unwrap() - 2.0).abs() < 1e-15);
        assert!(fejer_phi_closed(3, 2.0 * PI / 3.0).unwrap().abs() < 1e-15);
        assert!(matches!(fejer_phi_closed(3, 0.0), Err(Error::Domain(_))));
        assert!(matches!(fejer_phi_closed(3, PI), Err(Error::Domain(_))));
        // φ_4 = 8 sin x (1 + cos x) cos^2 x
        for &x in &[0.3f64, 1.1, 2.7] {
            let f = 8.0 * x.sin() * (1.0 + x.cos()) * x.cos().powi(2);
            assert!((fejer_phi_closed(4, x).unwrap() - f).abs() < 1e-13);
        }
    }

    #[test]
    fn s_examples() {
        for &a in &[0.3, 1.0, 2.5] {
            for &x in &[0.4f64, 1.7, 2.9] {
                let want = (1.0 + a) * x.sin() + (2.0 * x).sin();
                assert!((eval_s(p(2, a), x) - want).abs() < 1e-14);
            }
        }
        assert!((eval_s(p(2, 1.0), FRAC_PI_2) - 2.0).abs() < 1e-15);
        assert!((eval_s(p(3, 1.0), 2.0 * PI / 3.0) - HALF_SQRT3).abs() < 1e-14);
        let neg = eval_s(p(2, 0.9), 3.0);
        assert!(neg < 0.0);
        assert!((neg - (1.9 * 3.0f64.sin() + 6.0f64.sin())).abs() < 1e-15);
        assert!((neg + 0.0113).abs() < 1e-4);
    }

    #[test]
    fn s_star_examples() {
        assert!((eval_s_star(p(1, 4.2), 1.3) - 1.3f64.sin()).abs() < 1e-15);
        for &x in &[0.2, 1.0, 2.2] {
            assert!((eval_s_star(p(2, 1.0), x) - 2.0 * x.sin()).abs() < 1e-14);
        }
        assert!((eval_s_star(p(4, 1.0), FRAC_PI_2) - 2.0).abs() < 1e-14);
    }

    #[test]
    fn theta_examples() {
        for &a in &[0.5, 1.0, 3.0] {
            let (x, y) = (0.8f64, 2.1f64);
            let want = 2.0 * x.sin() * y.sin() * ((a + 1.0) / 2.0 + x.cos() * y.cos());
            assert!((eval_theta(p(2, a), x, y) - want).abs() < 1e-14);
        }
        assert!((eval_theta(p(2, 1.0), FRAC_PI_2, FRAC_PI_2) - 2.0).abs() < 1e-15);
        assert!((eval_theta(p(1, 2.0), FRAC_PI_3, FRAC_PI_3) - 0.75).abs() < 1e-15);
    }

    #[test]
    fn theta_star_examples() {
        let (x, y) = (0.6, 2.4);
        assert!((eval_theta_star(p(1, 3.0), x, y) - x.sin() * y.sin()).abs() < 1e-15);
        assert!((eval_theta_star(p(2, 1.0), x, y) - 2.0 * x.sin() * y.sin()).abs() < 1e-15);
        // n=5, a=2: coefficients [15, 10, 6, 3, 1]
        let want = 15.0 + 6.0 / 3.0 + 1.0 / 5.0;
        assert!((eval_theta_star(p(5, 2.0), FRAC_PI_2, FRAC_PI_2) - want).abs() < 1e-14);
    }

    #[test]
    fn classical_sums() {
        assert!((fejer_jackson_sum(1, FRAC_PI_2) - 1.0).abs() < 1e-15);
        assert!((fejer_jackson_sum(2, FRAC_PI_2) - 1.0).abs() < 1e-15);
        let v = fejer_jackson_sum(50, 0.1);
        assert!(v > 0.0 && v < PI - 0.1);
        assert!((carslaw_sum(0, FRAC_PI_2) - 1.0).abs() < 1e-15);
        assert!((carslaw_sum(0, PI / 6.0) - 0.5).abs() < 1e-15);
        let v = carslaw_sum(20, 1.0);
        assert!(v > 0.0 && v <= 1.0);
    }
}
