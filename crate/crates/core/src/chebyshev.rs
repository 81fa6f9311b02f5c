//! Chebyshev polynomials and the Chebyshev forms of the Turán sums.
//!
//! With `x = cos θ`, `T_n(x) = cos(nθ)` and `U_n(x) sin θ = sin((n+1)θ)`,
//! so `Λ_{n,a}(cos θ) sin θ = S_{n+1,a}(θ)` and the weighted integrals
//! `∫_x^1 f(t)/√(1-t²) dt` become `∫_0^{arccos x} f(cos θ) dθ`. The
//! integrals are available both as finite sine sums and by composite
//! Gauss–Legendre quadrature in θ.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kernel::{turan_coeff_vector, TuranParams};
use crate::sine_sums::{carslaw_sum, CompensatedSum};

/// `T_n(x)` by `T_{k+1} = 2x T_k - T_{k-1}`.
pub fn cheb_t(n: usize, x: f64) -> f64 {
    match n {
        0 => 1.0,
        _ => {
            let (mut prev, mut cur) = (1.0, x);
            for _ in 1..n {
                let next = 2.0 * x * cur - prev;
                prev = cur;
                cur = next;
            }
            cur
        }
    }
}

/// `U_n(x)` by `U_{k+1} = 2x U_k - U_{k-1}`.
pub fn cheb_u(n: usize, x: f64) -> f64 {
    let (mut prev, mut cur) = (0.0, 1.0);
    for _ in 0..n {
        let next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `Λ_{n,a}(x) = Σ_{j=0}^n C(n+a-j, n-j) U_j(x)`, by Clenshaw's recurrence
/// for `U` series.
pub fn eval_lambda(n: usize, a: f64, x: f64) -> Result<f64> {
    // the coefficient of U_j is the coefficient of sin((j+1)θ) in S_{n+1,a}
    let coeffs = turan_coeff_vector(TuranParams::new(n + 1, a)?);
    Ok(u_series(coeffs.as_slice(), x))
}

/// `Σ_j c_j U_j(x)` with `c[0]` the coefficient of `U_0`.
///
/// `b_k = c_k + 2x b_{k+1} - b_{k+2}` is run on `d_k = b_k ∓ b_{k+1}` with
/// `λ = 2(x ∓ 1)`, which is exact for `|x| ≥ 1/2` and keeps the recurrence
/// accurate near `x = ±1`, where plain Clenshaw loses digits.
fn u_series(c: &[f64], x: f64) -> f64 {
    let mut b = 0.0;
    let mut d = 0.0;
    if x >= 0.0 {
        let lambda = 2.0 * (x - 1.0);
        for &ck in c.iter().rev() {
            d += ck + lambda * b;
            b += d;
        }
    } else {
        let lambda = 2.0 * (x + 1.0);
        for &ck in c.iter().rev() {
            d = ck + lambda * b - d;
            b = d - b;
        }
    }
    b
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum QuadratureScheme {
    GaussLegendreOnTheta,
    ClosedForm,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadratureConfig {
    node_count: usize,
    scheme: QuadratureScheme,
}

impl QuadratureConfig {
    pub const DEFAULT_NODES: usize = 64;

    pub fn new(node_count: usize, scheme: QuadratureScheme) -> Result<Self> {
        if node_count < 4 {
            return Err(Error::domain(format!(
                "node_count must be at least 4, got {node_count}"
            )));
        }
        Ok(QuadratureConfig { node_count, scheme })
    }

    pub fn closed_form() -> Self {
        QuadratureConfig {
            node_count: Self::DEFAULT_NODES,
            scheme: QuadratureScheme::ClosedForm,
        }
    }

    pub fn gauss_legendre() -> Self {
        QuadratureConfig {
            node_count: Self::DEFAULT_NODES,
            scheme: QuadratureScheme::GaussLegendreOnTheta,
        }
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn scheme(&self) -> QuadratureScheme {
        self.scheme
    }
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self::closed_form()
    }
}

/// Gauss–Legendre nodes and weights on `[-1, 1]`, by Newton iteration on
/// `P_m` from Chebyshev-like initial guesses.
pub fn gauss_legendre(m: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; m];
    let mut weights = vec![0.0; m];
    let mf = m as f64;
    for i in 0..m.div_ceil(2) {
        let mut z = (PI * (i as f64 + 0.75) / (mf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // P_m(z) and P_m'(z)
            let (mut p0, mut p1) = (1.0, z);
            for k in 2..=m {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * z * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = mf * (z * p1 - p0) / (z * z - 1.0);
            let dz = p1 / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - z * z) * dp * dp);
        nodes[i] = -z;
        nodes[m - 1 - i] = z;
        weights[i] = w;
        weights[m - 1 - i] = w;
    }
    (nodes, weights)
}

/// Composite Gauss–Legendre on `[0, z]` for an integrand whose highest
/// frequency in θ is `freq`: enough panels that each spans at most 32/freq.
fn integrate_theta(z: f64, freq: usize, nodes_per_panel: usize, f: impl Fn(f64) -> f64) -> f64 {
    let (nodes, weights) = gauss_legendre(nodes_per_panel);
    let panels = ((freq.max(1) as f64 * z / 32.0).ceil() as usize).max(1);
    let h = z / panels as f64;
    let mut acc = CompensatedSum::new();
    for p in 0..panels {
        let mid = (p as f64 + 0.5) * h;
        for (t, w) in nodes.iter().zip(&weights) {
            acc.add(0.5 * h * w * f(mid + 0.5 * h * t));
        }
    }
    acc.value()
}

fn check_open_unit(x: f64) -> Result<()> {
    if x.is_nan() || x.abs() >= 1.0 {
        return Err(Error::domain(format!("x must lie in (-1, 1), got {x}")));
    }
    Ok(())
}

/// `∫_x^1 U_d(t)/√(1-t²) dt` for any degree `d`.
///
/// Closed forms in `z = arccos x`: `z + Σ_{j=1}^m sin(2jz)/j` for `d = 2m`,
/// `2 Σ_{k=1}^m sin((2k-1)z)/(2k-1)` for `d = 2m-1`.
pub fn weighted_u_integral(degree: usize, x: f64, cfg: QuadratureConfig) -> Result<f64> {
    check_open_unit(x)?;
    let z = x.acos();
    Ok(match cfg.scheme {
        QuadratureScheme::ClosedForm => {
            let m = degree.div_ceil(2);
            if degree.is_multiple_of(2) {
                let mut acc: CompensatedSum = (1..=m)
                    .map(|j| (2.0 * j as f64 * z).sin() / j as f64)
                    .collect();
                acc.add(z);
                acc.value()
            } else {
                2.0 * carslaw_sum(m - 1, z)
            }
        }
        QuadratureScheme::GaussLegendreOnTheta => {
            integrate_theta(z, degree + 1, cfg.node_count, |th| cheb_u(degree, th.cos()))
        }
    })
}

/// `∫_x^1 U_{2n}(t)/√(1-t²) dt`.
pub fn integral_u_weighted(n: usize, x: f64, cfg: QuadratureConfig) -> Result<f64> {
    weighted_u_integral(2 * n, x, cfg)
}

/// `∫_x^1 T_{n+1}(t) U_n(t)/√(1-t²) dt`; the closed form is
/// `Σ_{j=0}^n sin((2j+1)z)/(2j+1)` with `z = arccos x`.
pub fn integral_tu_weighted(n: usize, x: f64, cfg: QuadratureConfig) -> Result<f64> {
    check_open_unit(x)?;
    let z = x.acos();
    Ok(match cfg.scheme {
        QuadratureScheme::ClosedForm => carslaw_sum(n, z),
        QuadratureScheme::GaussLegendreOnTheta => {
            integrate_theta(z, 2 * n + 1, cfg.node_count, |th| {
                let c = th.cos();
                cheb_t(n + 1, c) * cheb_u(n, c)
            })
        }
    })
}

/// Which side of the even-degree integral bounds is probed for odd degrees.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GapSide {
    /// `∫_x^1 U_n/√(1-t²) dt - arccos x`
    LowerGap,
    /// `π - arccos x - ∫_x^1 U_n/√(1-t²) dt`
    UpperGap,
}

pub fn odd_degree_gap(n: usize, side: GapSide, x: f64) -> Result<f64> {
    let integral = weighted_u_integral(n, x, QuadratureConfig::closed_form())?;
    let z = x.acos();
    Ok(match side {
        GapSide::LowerGap => integral - z,
        GapSide::UpperGap => PI - z - integral,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SignChange {
    pub negative_at: f64,
    pub negative_value: f64,
    pub positive_at: f64,
    pub positive_value: f64,
}

/// Points of `(0, 1)` where the gap function for odd degree `n` takes both
/// signs, found on the grid `x_i = i/2049`, `i = 1..=2048`.
pub fn odd_degree_sign_change(n: usize, side: GapSide) -> Result<SignChange> {
    if n.is_multiple_of(2) {
        return Err(Error::domain(format!("degree must be odd, got {n}")));
    }
    const STEPS: usize = 2048;
    let mut neg = None;
    let mut pos = None;
    for i in 1..=STEPS {
        let x = i as f64 / (STEPS + 1) as f64;
        let g = odd_degree_gap(n, side, x)?;
        if g < 0.0 && neg.is_none() {
            neg = Some((x, g));
        } else if g > 0.0 && pos.is_none() {
            pos = Some((x, g));
        }
        if neg.is_some() && pos.is_some() {
            break;
        }
    }
    match (neg, pos) {
        (Some((nx, nv)), Some((px, pv))) => Ok(SignChange {
            negative_at: nx,
            negative_value: nv,
            positive_at: px,
            positive_value: pv,
        }),
        _ => Err(Error::SearchFailure(format!(
            "no sign change of the {side:?} function for degree {n} on a {STEPS}-point grid"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn t_examples() {
        assert_eq!(cheb_t(1, 0.37), 0.37);
        assert!((cheb_t(3, 0.5) + 1.0).abs() < 1e-15);
        assert!((cheb_t(10, 0.7f64.cos()) - 7.0f64.cos()).abs() < 1e-12);
        assert_eq!(cheb_t(0, 5.0), 1.0);
    }

    #[test]
    fn u_examples() {
        assert_eq!(cheb_u(0, 0.3), 1.0);
        assert_eq!(cheb_u(2, 0.0), -1.0);
        assert!((cheb_u(7, 0.3f64.cos()) - 2.4f64.sin() / 0.3f64.sin()).abs() < 1e-11);
        assert_eq!(cheb_u(5, 1.0), 6.0);
        assert_eq!(cheb_u(5, -1.0), -6.0);
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(eval_lambda(0, 2.7, 0.4).unwrap(), 1.0);
        assert!((eval_lambda(2, 1.0, -0.5).unwrap() - 1.0).abs() < 1e-15);
        assert!((eval_lambda(3, 1.0, 0.0).unwrap() - 2.0).abs() < 1e-15);
        assert!(eval_lambda(3, f64::NAN, 0.0).is_err());
    }

    #[test]
    fn gauss_legendre_integrates_polynomials() {
        for m in [4, 5, 16, 64] {
            let (x, w) = gauss_legendre(m);
            assert!((w.iter().sum::<f64>() - 2.0).abs() < 1e-13);
            // exact up to degree 2m - 1
            let deg = 2 * m - 1;
            let got: f64 = x
                .iter()
                .zip(&w)
                .map(|(x, w)| w * x.powi(deg as i32 - 1))
                .sum();
            let want = 2.0 / deg as f64;
            assert!((got - want).abs() < 1e-13, "m={m}");
        }
    }

    #[test]
    fn quadrature_config_validation() {
        assert!(QuadratureConfig::new(3, QuadratureScheme::ClosedForm).is_err());
        assert_eq!(QuadratureConfig::default().node_count(), 64);
    }

    #[test]
    fn u_integral_examples() {
        for n in 0..=10 {
            let v = integral_u_weighted(n, 0.0, QuadratureConfig::closed_form()).unwrap();
            assert!((v - FRAC_PI_2).abs() < 1e-14);
        }
        let v = integral_u_weighted(1, 0.5, QuadratureConfig::closed_form()).unwrap();
        assert!((v - (PI / 3.0 + 3f64.sqrt() / 2.0)).abs() < 1e-14);
        let z = 0.5f64.acos();
        assert!(v > z && v < PI - z);
        let x = -0.4;
        let v = integral_u_weighted(3, x, QuadratureConfig::closed_form()).unwrap();
        let z = x.acos();
        assert!(v < z && v > PI - z);
        assert!(integral_u_weighted(1, 1.0, QuadratureConfig::closed_form()).is_err());
        assert!(integral_u_weighted(1, -1.2, QuadratureConfig::gauss_legendre()).is_err());
    }

    #[test]
    fn odd_degree_closed_form_matches_quadrature() {
        for d in 0..=25 {
            for &x in &[-0.9, -0.3, 0.0, 0.45, 0.93] {
                let c = weighted_u_integral(d, x, QuadratureConfig::closed_form()).unwrap();
                let q = weighted_u_integral(d, x, QuadratureConfig::gauss_legendre()).unwrap();
                assert!((c - q).abs() < 1e-12, "d={d} x={x}");
            }
        }
    }

    #[test]
    fn tu_integral_examples() {
        for &x in &[-0.8, 0.0, 0.3, 0.9] {
            let v = integral_tu_weighted(0, x, QuadratureConfig::closed_form()).unwrap();
            assert!((v - (1.0 - x * x).sqrt()).abs() < 1e-15);
        }
        assert_eq!(
            integral_tu_weighted(0, 0.0, QuadratureConfig::closed_form()).unwrap(),
            1.0
        );
        let v = integral_tu_weighted(4, 0.3, QuadratureConfig::closed_form()).unwrap();
        assert!(v > 0.0 && v < 1.0);
    }

    #[test]
    fn sign_change_examples() {
        let s = odd_degree_sign_change(3, GapSide::LowerGap).unwrap();
        assert!(s.negative_value < 0.0 && s.positive_value > 0.0);
        let s = odd_degree_sign_change(1, GapSide::UpperGap).unwrap();
        assert!(s.negative_value < 0.0 && s.positive_value > 0.0);
        assert!(matches!(
            odd_degree_sign_change(2, GapSide::UpperGap),
            Err(Error::Domain(_))
        ));
    }
}
