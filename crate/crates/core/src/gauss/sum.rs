use num_complex::Complex64;

use crate::numeric::{exp_i_pi, Coef, ComplexSum};

/// Largest term count for which `j²` is exact in an `f64`.
pub const MAX_TERMS: u64 = 1 << 26;

/// Parameters of `S_N(x, θ) = Σ_{j=1}^N exp(πi·x·j² + 2πi·θ·j)`.
///
/// Besides the `f64` values, the phase coefficients `x` and `2θ` are kept in
/// double-double form so that rational parameters like `2/m` are honoured to
/// far below one ulp when `x·j²` is large.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussParams {
    pub n: u64,
    pub x: f64,
    pub theta: f64,
    x_coef: Coef,
    two_theta_coef: Coef,
}

impl GaussParams {
    pub fn new(n: u64, x: f64, theta: f64) -> Self {
        GaussParams {
            n,
            x,
            theta,
            x_coef: Coef::exact(x),
            two_theta_coef: Coef::exact(2.0 * theta),
        }
    }

    /// `x = x_num/x_den`, `θ = theta_num/theta_den` with the quotients carried
    /// to double-double precision.
    pub fn rational(n: u64, x_num: i64, x_den: i64, theta_num: i64, theta_den: i64) -> Self {
        let (xn, xd) = (x_num as f64, x_den as f64);
        let (tn, td) = (theta_num as f64, theta_den as f64);
        GaussParams {
            n,
            x: xn / xd,
            theta: tn / td,
            x_coef: Coef::quotient(xn, xd),
            two_theta_coef: Coef::quotient(2.0 * tn, td),
        }
    }

    /// `x = x_num/x_den` carried to double-double precision, `θ` as given.
    pub fn rational_x(n: u64, x_num: i64, x_den: i64, theta: f64) -> Self {
        let (xn, xd) = (x_num as f64, x_den as f64);
        GaussParams {
            n,
            x: xn / xd,
            theta,
            x_coef: Coef::quotient(xn, xd),
            two_theta_coef: Coef::exact(2.0 * theta),
        }
    }
}

/// `Σ_{j=1}^{n} exp(πi·(xc·j² + tc·j))` with per-term phase reduction mod 2.
pub(crate) fn quadratic_exp_sum(n: u64, xc: Coef, tc: Coef) -> Complex64 {
    assert!(n <= MAX_TERMS, "term count {n} exceeds {MAX_TERMS}");
    let mut acc = ComplexSum::new();
    for j in 1..=n {
        let jf = j as f64;
        let t = xc.times_mod2(jf * jf) + tc.times_mod2(jf);
        acc += exp_i_pi(t);
    }
    acc.value()
}

/// `S_N(x, θ)` by direct compensated summation; the empty sum (`N = 0`) is 0.
pub fn gauss_sum_direct(p: &GaussParams) -> Complex64 {
    quadratic_exp_sum(p.n, p.x_coef, p.two_theta_coef)
}

pub(crate) fn coefs(p: &GaussParams) -> (Coef, Coef) {
    (p.x_coef, p.two_theta_coef)
}
