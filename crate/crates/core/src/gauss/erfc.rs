//! Complementary error function on the rays `e^{±iπ/4}·t`, built from the
//! Fresnel integrals `C(τ) = ∫₀^τ cos(πs²/2) ds`, `S(τ) = ∫₀^τ sin(πs²/2) ds`
//! with `τ = t·√(2/π)`:
//!
//! ```text
//! erfc(e^{iπ/4} t) = 1 − √2·e^{iπ/4}·(C(τ) − i·S(τ))
//! ```
//!
//! Small arguments use the power series of `C − iS`; beyond the switchover the
//! Fresnel auxiliary functions come from a continued fraction for `e^{z²}erfc(z)`.

use num_complex::Complex64;
use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_4, PI, SQRT_2};

/// Switchover between power series and continued fraction, in units of `t`.
pub const SERIES_MAX_T: f64 = 2.5;

const CF_TOL: f64 = 1e-16;
const CF_MAX_ITER: usize = 10_000;

fn tau_of_t(t: f64) -> f64 {
    t * (2.0 / PI).sqrt()
}

/// `C(τ) − i·S(τ)` by its Maclaurin series `Σ (−iπ/2)^k τ^{2k+1} / (k!(2k+1))`.
fn fresnel_series(tau: f64) -> Complex64 {
    let w = Complex64::new(0.0, -FRAC_PI_2 * tau * tau);
    let mut term = Complex64::new(tau, 0.0);
    let mut sum = term;
    for k in 1..200 {
        term *= w / k as f64;
        let add = term / (2 * k + 1) as f64;
        sum += add;
        if add.norm() <= 1e-17 * sum.norm() {
            break;
        }
    }
    sum
}

/// `e^{z²}·erfc(z)` for `z = e^{iπ/4}·t`, `t > 0`, via
/// `√π e^{z²} erfc(z) = 2z / (2z²+1 − 1·2/(2z²+5 − 3·4/(2z²+9 − …)))`.
fn scaled_erfc_cf(t: f64) -> Complex64 {
    let z = Complex64::from_polar(t, FRAC_PI_4);
    let z2 = Complex64::new(0.0, 2.0 * t * t);
    let tiny = 1e-300;
    let mut f = z2 + 1.0;
    let mut c = f;
    let mut d = Complex64::new(0.0, 0.0);
    for k in 1..CF_MAX_ITER {
        let a = -(((2 * k - 1) * (2 * k)) as f64);
        let b = z2 + (1 + 4 * k) as f64;
        d = b + a * d;
        if d.norm() < tiny {
            d = Complex64::new(tiny, 0.0);
        }
        d = d.inv();
        c = b + a / c;
        if c.norm() < tiny {
            c = Complex64::new(tiny, 0.0);
        }
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).norm() < CF_TOL {
            break;
        }
    }
    2.0 * z / (f * PI.sqrt())
}

/// Fresnel auxiliary functions `(f(τ), g(τ))` for `τ > 0`, defined by
/// `C = 1/2 + f·sin(πτ²/2) − g·cos(πτ²/2)` and `S = 1/2 − f·cos(πτ²/2) − g·sin(πτ²/2)`.
pub fn fresnel_aux(tau: f64) -> (f64, f64) {
    debug_assert!(tau > 0.0);
    let t = tau * (PI / 2.0).sqrt();
    // g − i·f = e^{−iπ/4} · e^{z²}erfc(z) / √2
    let h = Complex64::from_polar(FRAC_1_SQRT_2, -FRAC_PI_4) * scaled_erfc_cf(t);
    (-h.im, h.re)
}

/// Fresnel integrals `(C(τ), S(τ))`; both are odd in `τ`.
pub fn fresnel(tau: f64) -> (f64, f64) {
    let a = tau.abs();
    let (c, s) = if tau_of_t(SERIES_MAX_T) >= a {
        let v = fresnel_series(a);
        (v.re, -v.im)
    } else {
        let (f, g) = fresnel_aux(a);
        let (sn, cs) = (FRAC_PI_2 * a * a).sin_cos();
        (0.5 + f * sn - g * cs, 0.5 - f * cs - g * sn)
    };
    if tau < 0.0 {
        (-c, -s)
    } else {
        (c, s)
    }
}

/// `e^{it²}·erfc(e^{iπ/4}·t)` for `t ≥ 0`. Free of the fast phase rotation, so it
/// stays accurate for large `t` where `t²` itself cannot be reduced mod 2π exactly.
pub fn erfc_diag_scaled(t: f64) -> Complex64 {
    debug_assert!(t >= 0.0);
    if t <= SERIES_MAX_T {
        Complex64::from_polar(1.0, t * t) * erfc_diag_small(t)
    } else {
        scaled_erfc_cf(t)
    }
}

fn erfc_diag_small(t: f64) -> Complex64 {
    let v = fresnel_series(tau_of_t(t));
    Complex64::new(1.0, 0.0) - Complex64::from_polar(SQRT_2, FRAC_PI_4) * v
}

/// `erfc(e^{iπ/4}·t)` for real `t` of either sign.
pub fn erfc_diag(t: f64) -> Complex64 {
    if t < 0.0 {
        return Complex64::new(2.0, 0.0) - erfc_diag(-t);
    }
    if t <= SERIES_MAX_T {
        erfc_diag_small(t)
    } else {
        let (f, g) = fresnel_aux(tau_of_t(t));
        // erfc = √2·e^{iπ/4}·(g − i·f)·e^{−it²}
        Complex64::from_polar(SQRT_2, FRAC_PI_4 - t * t) * Complex64::new(g, -f)
    }
}

/// `erfc(e^{−iπ/4}·t) = conj(erfc(e^{iπ/4}·t))` for real `t`.
pub fn erfc_antidiag(t: f64) -> Complex64 {
    erfc_diag(t).conj()
}
