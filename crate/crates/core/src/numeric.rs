//! Small numerical building blocks shared by the correlation and Gauss-sum code:
//! compensated summation and phase reduction that stays accurate when the
//! unreduced phase is many orders of magnitude larger than 2π.

use num_complex::Complex64;
use std::f64::consts::PI;
use std::ops::AddAssign;

/// Neumaier-compensated running sum.
#[derive(Debug, Default, Clone, Copy)]
pub struct NeumaierSum {
    sum: f64,
    comp: f64,
}

impl NeumaierSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

impl AddAssign<f64> for NeumaierSum {
    #[inline]
    fn add_assign(&mut self, rhs: f64) {
        let t = self.sum + rhs;
        if self.sum.abs() >= rhs.abs() {
            self.comp += (self.sum - t) + rhs;
        } else {
            self.comp += (rhs - t) + self.sum;
        }
        self.sum = t;
    }
}

impl FromIterator<f64> for NeumaierSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = NeumaierSum::new();
        for x in iter {
            acc += x;
        }
        acc
    }
}

/// Componentwise compensated sum of complex values.
#[derive(Debug, Default, Clone, Copy)]
pub struct ComplexSum {
    re: NeumaierSum,
    im: NeumaierSum,
}

impl ComplexSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }
}

impl AddAssign<Complex64> for ComplexSum {
    #[inline]
    fn add_assign(&mut self, rhs: Complex64) {
        self.re += rhs.re;
        self.im += rhs.im;
    }
}

impl FromIterator<Complex64> for ComplexSum {
    fn from_iter<I: IntoIterator<Item = Complex64>>(iter: I) -> Self {
        let mut acc = ComplexSum::new();
        for z in iter {
            acc += z;
        }
        acc
    }
}

/// A real coefficient carried as an unevaluated sum `hi + lo` (double-double).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Coef {
    pub hi: f64,
    pub lo: f64,
}

impl Coef {
    pub fn exact(x: f64) -> Self {
        Coef { hi: x, lo: 0.0 }
    }

    /// `num / den` to roughly twice double precision.
    pub fn quotient(num: f64, den: f64) -> Self {
        let hi = num / den;
        let lo = -hi.mul_add(den, -num) / den;
        Coef { hi, lo }
    }

    /// `θ² / x` with the square formed exactly.
    pub fn square_over(theta: f64, x: f64) -> Self {
        let p = theta * theta;
        let e = theta.mul_add(theta, -p);
        let hi = p / x;
        let lo = (-hi.mul_add(x, -p) + e) / x;
        Coef { hi, lo }
    }

    /// `(self · k) mod 2`, for an integer-valued `k` with `|k| < 2^53`.
    #[inline]
    pub fn times_mod2(self, k: f64) -> f64 {
        let p = self.hi * k;
        let e = self.hi.mul_add(k, -p);
        let t = (p % 2.0) + (e + self.lo * k);
        t.rem_euclid(2.0)
    }
}

/// `e^{iπt}`. The argument is reduced to a quarter turn plus an offset in
/// `[-1/4, 1/4]`, so multiples of `1/2` map exactly onto `±1, ±i`.
#[inline]
pub fn exp_i_pi(t: f64) -> Complex64 {
    let r = t.rem_euclid(2.0);
    let q = (2.0 * r).round();
    let f = r - 0.5 * q;
    let (s, c) = (PI * f).sin_cos();
    match q as u8 & 3 {
        0 => Complex64::new(c, s),
        1 => Complex64::new(-s, c),
        2 => Complex64::new(-c, -s),
        _ => Complex64::new(s, -c),
    }
}

/// 17 significant digits, enough to round-trip any `f64`.
pub fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}
