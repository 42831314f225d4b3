//! Reciprocity-type decomposition of `S_N(x, θ)` for `x ∈ (0,1)`, `θ ∈ (−1/2, 1/2]`:
//!
//! ```text
//! S_N(x,θ) = e^{−πiθ²/x+πi/4}/√x · S_M(−1/x, θ/x) + (μ−1)/2
//!          + e^{πi/4}/(2√x) · (E*(x,θ) − μ·E*(x,ε))
//!          + (i/2)·(g(θ) − μ·g(ε)) + R,          |R| < x
//! ```
//!
//! where `Nx + θ = M + ε` with `ε ∈ (−1/2, 1/2]`, `μ = e^{πixN² + 2πiθN}` and
//! `g(t) = cot(πt) − 1/(πt)`. The error-function term `E*` is taken on the
//! `e^{−iπ/4}` ray (see [`e_term_antidiag`]); on the `e^{iπ/4}` ray the remainder
//! does not stay below `x`.

use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_4, PI};

use super::erfc::erfc_diag_scaled;
use super::sum::{coefs, gauss_sum_direct, quadratic_exp_sum, GaussParams, MAX_TERMS};
use crate::error::{Error, Result};
use crate::numeric::{exp_i_pi, Coef};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Below this `|t|`, [`g`] switches to its Maclaurin series.
pub const G_SERIES_MAX: f64 = 1e-3;

fn check_x(x: f64) -> Result<()> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::InvalidArgument(format!("x must be positive, got {x}")));
    }
    Ok(())
}

/// `(e^{it²}·erfc(e^{iπ/4}|t|), e^{−iπθ²/x})` for `t = θ√(π/x)`.
fn e_parts(x: f64, theta: f64) -> (Complex64, Complex64) {
    let t = theta.abs() * (PI / x).sqrt();
    let phi = Coef::square_over(theta, x).times_mod2(1.0);
    (erfc_diag_scaled(t), exp_i_pi(-phi))
}

/// `E(x, θ) = e^{−πiθ²/x}·erfc(e^{iπ/4}·θ·√(π/x))`, for `x > 0`.
pub fn e_term(x: f64, theta: f64) -> Result<Complex64> {
    check_x(x)?;
    if theta == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let (scaled, rot) = e_parts(x, theta);
    // erfc(e^{iπ/4}t) = e^{−it²}·scaled and e^{−it²} = rot
    let v = rot * rot * scaled;
    Ok(if theta > 0.0 { v } else { 2.0 * rot - v })
}

/// `E*(x, θ) = e^{−πiθ²/x}·erfc(e^{−iπ/4}·θ·√(π/x))`, the form that enters the
/// decomposition. Same modulus asymptotics as [`e_term`].
pub fn e_term_antidiag(x: f64, theta: f64) -> Result<Complex64> {
    check_x(x)?;
    if theta == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let (scaled, rot) = e_parts(x, theta);
    // erfc(e^{−iπ/4}t) = conj(e^{−it²}·scaled) = conj(scaled)/rot
    let v = scaled.conj();
    Ok(if theta > 0.0 { v } else { 2.0 * rot - v })
}

/// `g(t) = cot(πt) − 1/(πt)` on `[−1/2, 1/2]`, `g(0) = 0`.
pub fn g(t: f64) -> Result<f64> {
    if !(t.abs() <= 0.5) {
        return Err(Error::InvalidArgument(format!("g is defined on [-1/2, 1/2], got {t}")));
    }
    let a = t.abs();
    let v = if a < G_SERIES_MAX {
        g_series(a)
    } else {
        let x = PI * a;
        x.cos() / x.sin() - 1.0 / x
    };
    Ok(if t < 0.0 { -v } else { v })
}

/// `−x/3 − x³/45 − 2x⁵/945 − x⁷/4725` with `x = πt`.
pub fn g_series(t: f64) -> f64 {
    let x = PI * t;
    let x2 = x * x;
    -x * (1.0 / 3.0 + x2 * (1.0 / 45.0 + x2 * (2.0 / 945.0 + x2 / 4725.0)))
}

/// Every named term of the decomposition of `S_N(x, θ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParisDecomposition {
    /// integer part `M` of `Nx + θ = M + ε`
    pub m: i64,
    pub epsilon: f64,
    pub mu: Complex64,
    pub main_term: Complex64,
    /// `(μ − 1)/2`
    pub half_mu_term: Complex64,
    pub e_terms: Complex64,
    pub g_terms: Complex64,
    pub remainder: Complex64,
    pub total: Complex64,
    /// `S_N(x, θ)` by direct summation
    pub direct: Complex64,
}

impl ParisDecomposition {
    pub fn explicit_terms(&self) -> Complex64 {
        self.main_term + self.half_mu_term + self.e_terms + self.g_terms
    }
}

/// `(M, ε)` with `Nx + θ = M + ε`, `ε ∈ (−1/2, 1/2]`.
fn split_nearest(n: u64, x: f64, theta: f64) -> (i64, f64) {
    let nf = n as f64;
    let p = nf * x;
    let e = nf.mul_add(x, -p);
    let y = p + theta + e;
    let mut m = (y - 0.5).ceil();
    let mut eps = (p - m) + theta + e;
    if eps > 0.5 {
        m += 1.0;
        eps -= 1.0;
    } else if eps <= -0.5 {
        m -= 1.0;
        eps += 1.0;
    }
    (m as i64, eps)
}

pub fn paris_decompose(p: &GaussParams) -> Result<ParisDecomposition> {
    let (n, x, theta) = (p.n, p.x, p.theta);
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::InvalidArgument(format!("x must lie in (0,1), got {x}")));
    }
    if !(theta > -0.5 && theta <= 0.5) {
        return Err(Error::InvalidArgument(format!(
            "theta must lie in (-1/2, 1/2], got {theta}"
        )));
    }
    if n == 0 || n > MAX_TERMS {
        return Err(Error::InvalidArgument(format!("N must lie in [1, {MAX_TERMS}], got {n}")));
    }
    let (xc, tc) = coefs(p);
    let (m, epsilon) = split_nearest(n, x, theta);
    let nf = n as f64;
    let mu = exp_i_pi(xc.times_mod2(nf * nf) + tc.times_mod2(nf));

    let sqrt_x = x.sqrt();
    let dual = if m > 0 {
        // S_M(−1/x, θ/x)
        quadratic_exp_sum(m as u64, Coef::quotient(-1.0, x), Coef::quotient(2.0 * theta, x))
    } else {
        Complex64::new(0.0, 0.0)
    };
    let lead_phase = 0.25 - Coef::square_over(theta, x).times_mod2(1.0);
    let main_term = exp_i_pi(lead_phase) * dual / sqrt_x;
    let half_mu_term = (mu - 1.0) / 2.0;
    let e_terms = Complex64::from_polar(1.0 / (2.0 * sqrt_x), FRAC_PI_4)
        * (e_term_antidiag(x, theta)? - mu * e_term_antidiag(x, epsilon)?);
    let g_terms = I / 2.0 * (g(theta)? - mu * g(epsilon)?);

    let direct = gauss_sum_direct(p);
    let explicit = main_term + half_mu_term + e_terms + g_terms;
    let remainder = direct - explicit;
    Ok(ParisDecomposition {
        m,
        epsilon,
        mu,
        main_term,
        half_mu_term,
        e_terms,
        g_terms,
        remainder,
        total: explicit + remainder,
        direct,
    })
}
