//! Probes of the `a = 1` boundary and the crossing point of two lower bounds.
//!
//! `S_{2,a}(π) = 0` and `d/dx S_{2,a}(π) = 1 - a`, so for `a < 1` the sum
//! is negative just left of `π`. Likewise `∂_x Θ_{2,a}(0, y)` equals
//! `sin y (1 + a + 2cos y)`, which turns negative for `y` close enough to
//! `π`. The searches below look exactly there, on grids refined
//! geometrically towards the endpoint.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kernel::TuranParams;
use crate::sine_sums::TuranSum;

/// A probe value must be below this to count as a counterexample.
pub const COUNTEREXAMPLE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CounterexampleS {
    pub n: usize,
    pub a: f64,
    pub x: f64,
    pub value: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CounterexampleTheta {
    pub n: usize,
    pub a: f64,
    pub x: f64,
    pub y: f64,
    pub value: f64,
}

/// Offsets from an endpoint: a uniform grid on `(0, width]` plus
/// `width · 2^-k` for `k = 1..=45`.
fn endpoint_offsets(width: f64, uniform: usize) -> Vec<f64> {
    let mut eps: Vec<f64> = (1..=uniform)
        .map(|i| width * i as f64 / uniform as f64)
        .collect();
    eps.extend((1..=45).map(|k| width * 0.5f64.powi(k)));
    eps
}

fn check_sub_unit(a: f64) -> Result<()> {
    if a.is_nan() || a >= 1.0 {
        return Err(Error::domain(format!(
            "sharpness probes need a < 1, got {a}"
        )));
    }
    Ok(())
}

/// Smallest `S_{n,a}(π - ε)` found for the first `n = 2..=8` that goes
/// below `-COUNTEREXAMPLE_TOL`. Works for any finite `a`.
pub fn search_counterexample_s(a: f64) -> Result<Option<CounterexampleS>> {
    let offsets = endpoint_offsets(0.5, 1024);
    for n in 2..=8 {
        let sum = TuranSum::new(TuranParams::new(n, a)?);
        let best = offsets
            .iter()
            .map(|&e| {
                let x = PI - e;
                (x, sum.s(x))
            })
            .fold(None, |best: Option<(f64, f64)>, cur| match best {
                Some(b) if b.1 <= cur.1 => Some(b),
                _ => Some(cur),
            });
        if let Some((x, value)) = best {
            if value < -COUNTEREXAMPLE_TOL {
                return Ok(Some(CounterexampleS { n, a, x, value }));
            }
        }
    }
    Ok(None)
}

/// Smallest `Θ_{2,a}(x, π - ε)` over small `x` and `ε ≤ 0.1`, if negative
/// enough. Works for any finite `a`.
pub fn search_counterexample_theta(a: f64) -> Result<Option<CounterexampleTheta>> {
    const XS: [f64; 8] = [0.1, 0.03, 0.01, 3e-3, 1e-3, 3e-4, 1e-4, 1e-5];
    let n = 2;
    let sum = TuranSum::new(TuranParams::new(n, a)?);
    let offsets = endpoint_offsets(0.1, 256);
    let mut best: Option<CounterexampleTheta> = None;
    for &x in &XS {
        for &e in &offsets {
            let y = PI - e;
            let value = sum.theta(x, y);
            if best.is_none_or(|b| value < b.value) {
                best = Some(CounterexampleTheta { n, a, x, y, value });
            }
        }
    }
    Ok(best.filter(|b| b.value < -COUNTEREXAMPLE_TOL))
}

/// Counterexample to `S_{n,a} > 0` for `a < 1`.
pub fn sharpness_probe_s(a: f64) -> Result<Option<CounterexampleS>> {
    check_sub_unit(a)?;
    search_counterexample_s(a)
}

/// Counterexample to `Θ_{n,a} > 0` for `a < 1`.
pub fn sharpness_probe_theta(a: f64) -> Result<Option<CounterexampleTheta>> {
    check_sub_unit(a)?;
    search_counterexample_theta(a)
}

/// `x(π-x)/π - sin(x) min{1, 2(1+cos x)}`: negative left of the crossing
/// point and positive right of it.
pub fn crossing_gap(x: f64) -> f64 {
    x * (PI - x) / PI - x.sin() * f64::min(1.0, 2.0 * (1.0 + x.cos()))
}

/// Root of [`crossing_gap`] on `(1.5, 2.8)` by bisection to width `1e-10`.
pub fn crossing_point() -> Result<f64> {
    let (mut lo, mut hi) = (1.5, 2.8);
    if !(crossing_gap(lo) < 0.0 && crossing_gap(hi) > 0.0) {
        return Err(Error::Internal(
            "crossing gap does not change sign on (1.5, 2.8)".into(),
        ));
    }
    while hi - lo > 1e-10 {
        let mid = 0.5 * (lo + hi);
        if crossing_gap(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SweepTarget {
    /// `S_{n,a} > 0`
    S,
    /// `Θ_{n,a} > 0`
    Theta,
}

impl SweepTarget {
    fn has_counterexample(self, a: f64) -> Result<Option<f64>> {
        Ok(match self {
            SweepTarget::S => search_counterexample_s(a)?.map(|c| c.value),
            SweepTarget::Theta => search_counterexample_theta(a)?.map(|c| c.value),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepEntry {
    pub a: f64,
    /// Most negative value found, if any.
    pub counterexample_value: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepReport {
    pub target: SweepTarget,
    pub entries: Vec<SweepEntry>,
    pub largest_a_with_counterexample: Option<f64>,
    pub smallest_a_without_counterexample: Option<f64>,
    /// Bisection between the two values above, when both exist.
    pub boundary_estimate: Option<f64>,
}

/// Runs the counterexample search on `a_i = a_min + (a_max - a_min) i/steps`
/// and bisects the last sign change of the outcome.
pub fn sweep_a(target: SweepTarget, a_min: f64, a_max: f64, steps: usize) -> Result<SweepReport> {
    if !(a_min.is_finite() && a_max.is_finite()) || a_max < a_min || steps == 0 {
        return Err(Error::domain(format!(
            "sweep needs finite a_min <= a_max and steps >= 1, got [{a_min}, {a_max}] / {steps}"
        )));
    }
    let entries = (0..=steps)
        .map(|i| {
            let a = a_min + (a_max - a_min) * i as f64 / steps as f64;
            Ok(SweepEntry {
                a,
                counterexample_value: target.has_counterexample(a)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let largest = entries
        .iter()
        .rev()
        .find(|e| e.counterexample_value.is_some())
        .map(|e| e.a);
    let smallest_without = largest.and_then(|l| {
        entries
            .iter()
            .find(|e| e.a > l && e.counterexample_value.is_none())
            .map(|e| e.a)
    });
    let boundary_estimate = match (largest, smallest_without) {
        (Some(mut lo), Some(mut hi)) => {
            for _ in 0..40 {
                let mid = 0.5 * (lo + hi);
                if target.has_counterexample(mid)?.is_some() {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            Some(0.5 * (lo + hi))
        }
        _ => None,
    };
    Ok(SweepReport {
        target,
        entries,
        largest_a_with_counterexample: largest,
        smallest_a_without_counterexample: smallest_without,
        boundary_estimate,
    })
}
