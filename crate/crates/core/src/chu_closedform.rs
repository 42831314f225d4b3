//! Closed-form autocorrelation of Chu sequences.
//!
//! With `d = gcd(a, n)`, `a = d·b`, `n = d·m`, the autocorrelation magnitude at a
//! shift `u` that is not a multiple of `m` is `|sin(πbu²/m) / sin(πbu/m)|`, and
//! `n − u` when it is. Summing over shifts gives
//!
//! ```text
//! adf(Z_n^(a)) = (4d/n²) Σ_{1≤u≤n/(2d)} (sin(πau²/n)/sin(πau/n))²
//!              + (d−1)(2d−1)/(3d) − 2d·ε/n²,      ε = [n/d ≡ 2 (mod 4)]
//! ```
//!
//! This is independent of the FFT/naive correlation code and serves as its oracle.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::numeric::NeumaierSum;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChuAdfBreakdown {
    /// `gcd(a, n)`
    pub d: u64,
    /// `n / d`
    pub m: u64,
    /// `Σ_{1≤u≤⌊m/2⌋} (sin(πau²/n)/sin(πau/n))²`, unscaled.
    pub sine_sum: f64,
    /// `(d−1)(2d−1)/(3d)`
    pub gcd_term: f64,
    /// `2d·ε/n²`
    pub epsilon_term: f64,
    pub adf: f64,
}

impl ChuAdfBreakdown {
    pub fn epsilon(&self) -> u8 {
        epsilon(self.m)
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn epsilon(m: u64) -> u8 {
    u8::from(m % 4 == 2)
}

/// `(d, m, b mod 2m)` for the Chu parameters.
fn reduce(n: u64, a: i64) -> (u64, u64, u64) {
    let a_mod_n = (a as i128).rem_euclid(n as i128) as u64;
    let d = if a_mod_n == 0 { n } else { gcd(a_mod_n, n) };
    let m = n / d;
    // a = d·b exactly as integers; b mod 2m is what the phases need
    let b = (a as i128) / d as i128;
    let b = b.rem_euclid(2 * m as i128) as u64;
    (d, m, b)
}

/// `sin(π · (b·k mod 2m) / m)`
#[inline]
fn sin_frac(b: u64, k: u128, m: u64) -> f64 {
    let r = (b as u128 * (k % (2 * m as u128))) % (2 * m as u128);
    (PI * r as f64 / m as f64).sin()
}

pub fn chu_adf_closed(n: u64, a: i64) -> Result<ChuAdfBreakdown> {
    if n == 0 {
        return Err(Error::InvalidSpec("Chu length must be >= 1".into()));
    }
    let (d, m, b) = reduce(n, a);
    let mut sum = NeumaierSum::new();
    for u in 1..=(m / 2) {
        let u = u as u128;
        let den = sin_frac(b, u, m);
        assert!(
            den != 0.0,
            "vanishing denominator at u={u} for n={n}, a={a}: b and m not coprime"
        );
        let ratio = sin_frac(b, u * u, m) / den;
        sum += ratio * ratio;
    }
    let sine_sum = sum.value();
    let nf = n as f64;
    let df = d as f64;
    let gcd_term = (df - 1.0) * (2.0 * df - 1.0) / (3.0 * df);
    let epsilon_term = 2.0 * df * f64::from(epsilon(m)) / (nf * nf);
    let adf = 4.0 * df / (nf * nf) * sine_sum + gcd_term - epsilon_term;
    Ok(ChuAdfBreakdown {
        d,
        m,
        sine_sum,
        gcd_term,
        epsilon_term,
        adf,
    })
}

/// `|C_{Z,Z}(u)|` for `Z = Z_n^{(a)}` and `0 ≤ u < n`.
pub fn chu_acf_magnitude(n: u64, a: i64, u: i64) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidSpec("Chu length must be >= 1".into()));
    }
    if u < 0 || u as u64 >= n {
        return Err(Error::InvalidShift {
            shift: u,
            len: n as usize,
        });
    }
    let u = u as u64;
    let (_, m, b) = reduce(n, a);
    if u % m == 0 {
        return Ok((n - u) as f64);
    }
    let uu = u as u128;
    Ok((sin_frac(b, uu * uu, m) / sin_frac(b, uu, m)).abs())
}

/// `n^{-3/2} Σ_{1≤u≤n/2} (sin(πu²/n)/sin(πu/n))²` and the same sum with the
/// denominator replaced by `πu/n`. Both tend to `1/(2π)`.
pub fn lemma22_partial_sums(n: u64) -> (f64, f64) {
    let mut s1 = NeumaierSum::new();
    let mut s2 = NeumaierSum::new();
    let nf = n as f64;
    for u in 1..=(n / 2) {
        let uu = u as u128;
        let num = sin_frac(1, uu * uu, n);
        let r1 = num / sin_frac(1, uu, n);
        let r2 = num / (PI * u as f64 / nf);
        s1 += r1 * r1;
        s2 += r2 * r2;
    }
    let scale = nf.powf(-1.5);
    (s1.value() * scale, s2.value() * scale)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn breakdown_n2_a1() {
        let b = chu_adf_closed(2, 1).unwrap();
        assert_eq!((b.d, b.m, b.epsilon()), (1, 2, 1));
        assert!((b.sine_sum - 1.0).abs() < 1e-15);
        assert!((b.epsilon_term - 0.5).abs() < 1e-15);
        assert!((b.adf - 0.5).abs() < 1e-15);
    }

    #[test]
    fn small_values() {
        assert!((chu_adf_closed(4, 1).unwrap().adf - 0.25).abs() < 1e-15);
        assert_eq!(chu_adf_closed(1, 1).unwrap().adf, 0.0);
        // Z_2^{(2)} = (1, -1)
        let b = chu_adf_closed(2, 2).unwrap();
        assert_eq!((b.d, b.m), (2, 1));
        assert!((b.adf - 0.5).abs() < 1e-15);
        // a ≡ 0 (mod n): d = n
        assert_eq!(chu_adf_closed(6, 0).unwrap().d, 6);
        assert_eq!(chu_adf_closed(6, -12).unwrap().d, 6);
        assert!(chu_adf_closed(0, 1).is_err());
    }

    #[test]
    fn magnitudes() {
        assert!(chu_acf_magnitude(4, 1, 2).unwrap().abs() < 1e-15);
        assert!((chu_acf_magnitude(4, 1, 1).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(chu_acf_magnitude(9, 3, 0).unwrap(), 9.0);
        // d = 3, m = 3: shift 3 = 1·m gives n − 3
        assert_eq!(chu_acf_magnitude(9, 3, 3).unwrap(), 6.0);
        assert!(matches!(
            chu_acf_magnitude(4, 1, 4),
            Err(Error::InvalidShift { .. })
        ));
        assert!(chu_acf_magnitude(4, 1, -1).is_err());
    }

    #[test]
    fn lemma22_small() {
        let (a, b) = lemma22_partial_sums(2);
        let s = 2f64.powf(-1.5);
        assert!((a - s).abs() < 1e-15);
        assert!((b - s * (2.0 / PI).powi(2)).abs() < 1e-15);
        assert!((a - 0.353_553_390_593_273_8).abs() < 1e-12);
        assert!((b - 0.143_289_792_062_689_08).abs() < 1e-15);
        let (a3, _) = lemma22_partial_sums(3);
        assert!((a3 - 3f64.powf(-1.5)).abs() < 1e-15);
    }
}
