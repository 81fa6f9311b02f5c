//! Generalized binomial coefficients of the Turán family.
//!
//! For real `a` the coefficient of `sin(jx)` in `S_{n,a}` is
//! `C(n+a-j, n-j) = ∏_{i=1}^{n-j} (a+i)/i`. The finite product is used
//! directly; no gamma functions are involved, so `a = 0` and `a = 1` stay
//! exact and negative `a` needs no pole handling.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Work budget for [`sigma_imag_oracle`], in units of `n * k`.
pub const SIGMA_ORACLE_BUDGET: usize = 10_000_000;

/// Selects `S_{n,a}` (and its relatives) inside the Turán family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TuranParams {
    n: usize,
    a: f64,
}

impl TuranParams {
    pub fn new(n: usize, a: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("sum length n must be at least 1"));
        }
        if !a.is_finite() {
            return Err(Error::domain(format!(
                "parameter a must be finite, got {a}"
            )));
        }
        Ok(TuranParams { n, a })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> f64 {
        self.a
    }
}

/// Coefficients `c_1..c_n` of a sine polynomial `Σ c_j sin(jx)`.
///
/// Index 0 of [`CoeffVector::as_slice`] holds `c_1`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffVector(Vec<f64>);

impl CoeffVector {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::domain("coefficient vector must not be empty"));
        }
        if let Some(pos) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::domain(format!(
                "coefficient c_{} is not finite",
                pos + 1
            )));
        }
        Ok(CoeffVector(values))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    /// `c_j` with 1-based `j`.
    pub fn get(&self, j: usize) -> Option<f64> {
        j.checked_sub(1).and_then(|i| self.0.get(i).copied())
    }

    /// Sum of absolute values, the scale used by error bounds.
    pub fn l1_norm(&self) -> f64 {
        self.0.iter().map(|c| c.abs()).sum()
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }
}

/// `C(n+a-j, n-j)` for `1 <= j <= n`.
///
/// Each step multiplies before dividing so that integer `a` yields exact
/// integers as long as the intermediate values stay below 2^53.
pub fn turan_coeff(p: TuranParams, j: usize) -> Result<f64> {
    if j == 0 || j > p.n {
        return Err(Error::domain(format!(
            "coefficient index j={j} outside 1..={}",
            p.n
        )));
    }
    let mut acc = 1.0;
    for i in 1..=(p.n - j) {
        let i = i as f64;
        acc = acc * (p.a + i) / i;
    }
    Ok(acc)
}

/// All coefficients of `S_{n,a}` in O(n) by the downward recurrence
/// `c_{j-1} = c_j (a+n-j+1)/(n-j+1)`, starting from `c_n = 1`.
///
/// The operation order matches [`turan_coeff`], so both agree bit for bit.
pub fn turan_coeff_vector(p: TuranParams) -> CoeffVector {
    let n = p.n;
    let mut values = vec![0.0; n];
    let mut acc = 1.0;
    values[n - 1] = acc;
    for j in (2..=n).rev() {
        let m = (n - j + 1) as f64;
        acc = acc * (p.a + m) / m;
        values[j - 2] = acc;
    }
    CoeffVector(values)
}

/// Imaginary part of `σ_{n,k}(e^{ix})` by the literal recursion
/// `σ_{n,0}(z) = Σ_{j=0}^n z^j`, `σ_{n,k}(z) = Σ_{j=0}^n σ_{j,k-1}(z)`.
///
/// This equals `Σ_{j=1}^n C(n+k-j, k) sin(jx)`; it is kept as an oracle for
/// the product-formula path and costs O(n k).
pub fn sigma_imag_oracle(n: usize, k: usize, x: f64) -> Result<f64> {
    if n.saturating_mul(k) > SIGMA_ORACLE_BUDGET {
        return Err(Error::Resource(format!(
            "sigma recursion with n={n}, k={k} exceeds budget n*k <= {SIGMA_ORACLE_BUDGET}"
        )));
    }
    // level[j] = σ_{j,0}(z)
    let mut level = Vec::with_capacity(n + 1);
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..=n {
        let (s, c) = (j as f64 * x).sin_cos();
        acc += Complex64::new(c, s);
        level.push(acc);
    }
    for _ in 0..k {
        let mut run = Complex64::new(0.0, 0.0);
        for v in level.iter_mut() {
            run += *v;
            *v = run;
        }
    }
    Ok(level[n].im)
}
