//! Plain reference implementations used as oracles by the integration tests.
//! Deliberately straightforward: no FFT, no compensated sums, no shared code
//! with the library.
#![allow(dead_code)]

use num_complex::Complex64;
use std::f64::consts::PI;

pub fn cis_pi(t: f64) -> Complex64 {
    Complex64::new((PI * t).cos(), (PI * t).sin())
}

/// `exp(πi·a·j²/n)` for `j = 0..n`, with the exponent reduced in integers.
pub fn chu_entries(n: u64, a: i64) -> Vec<Complex64> {
    let two_n = 2 * n as i128;
    (0..n as i128)
        .map(|j| {
            let p = (a as i128 * j * j).rem_euclid(two_n);
            cis_pi(p as f64 / n as f64)
        })
        .collect()
}

/// Rudin-Shapiro pair of length `2^m` as real `±1` vectors.
pub fn rudin_shapiro(m: u32) -> (Vec<f64>, Vec<f64>) {
    let (mut a, mut b) = (vec![1.0], vec![1.0]);
    for _ in 0..m {
        let na: Vec<f64> = a.iter().chain(b.iter()).copied().collect();
        let nb: Vec<f64> = a.iter().copied().chain(b.iter().map(|v| -v)).collect();
        a = na;
        b = nb;
    }
    (a, b)
}

pub fn to_complex(v: &[f64]) -> Vec<Complex64> {
    v.iter().map(|&r| Complex64::new(r, 0.0)).collect()
}

/// `C_{A,B}(u) = Σ_j a_j·conj(b_{j+u})`.
pub fn corr(a: &[Complex64], b: &[Complex64], u: i64) -> Complex64 {
    let n = a.len() as i64;
    let mut s = Complex64::new(0.0, 0.0);
    for j in 0..n {
        let k = j + u;
        if (0..n).contains(&k) {
            s += a[j as usize] * b[k as usize].conj();
        }
    }
    s
}

fn energy(a: &[Complex64]) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum()
}

pub fn adf(a: &[Complex64]) -> f64 {
    let n = a.len() as i64;
    let e = energy(a);
    (1 - n..n)
        .filter(|&u| u != 0)
        .map(|u| corr(a, a, u).norm_sqr())
        .sum::<f64>()
        / (e * e)
}

pub fn cdf(a: &[Complex64], b: &[Complex64]) -> f64 {
    let n = a.len() as i64;
    (1 - n..n).map(|u| corr(a, b, u).norm_sqr()).sum::<f64>() / (energy(a) * energy(b))
}

/// `Σ_{j=1}^{N} exp(πi·x·j² + 2πi·θ·j)` for rational `x = xn/xd`, `θ = tn/td`,
/// with the exponent reduced exactly in integers.
pub fn gauss_sum_rational(big_n: u64, xn: i64, xd: i64, tn: i64, td: i64) -> Complex64 {
    // exponent / π = (xn·td·j² + 2·tn·xd·j) / (xd·td)
    let den = xd as i128 * td as i128;
    let modulus = 2 * den.abs();
    (1..=big_n as i128)
        .map(|j| {
            let num = xn as i128 * td as i128 * j * j + 2 * tn as i128 * xd as i128 * j;
            let num = if den < 0 { -num } else { num };
            cis_pi(num.rem_euclid(modulus) as f64 / den.abs() as f64)
        })
        .sum()
}

/// Same sum for real parameters, reducing `x·j²` modulo 2 in `f64`.
pub fn gauss_sum_f64(big_n: u64, x: f64, theta: f64) -> Complex64 {
    (1..=big_n)
        .map(|j| {
            let jf = j as f64;
            cis_pi((x * jf * jf).rem_euclid(2.0) + (2.0 * theta * jf).rem_euclid(2.0))
        })
        .sum()
}
