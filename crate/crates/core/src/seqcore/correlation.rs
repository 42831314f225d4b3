use num_complex::Complex64;
use rustfft::FftPlanner;

use super::sequence::Sequence;
use crate::error::{Error, Result};
use crate::numeric::ComplexSum;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorrelationMethod {
    Naive,
    Fft,
}

/// Aperiodic correlation values `C(u)` for `u ∈ [-(n-1), n-1]`,
/// stored flat at index `u + n - 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationProfile {
    values: Vec<Complex64>,
    n: usize,
    method: CorrelationMethod,
}

impl CorrelationProfile {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn method(&self) -> CorrelationMethod {
        self.method
    }

    /// Values ordered by increasing shift.
    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn max_shift(&self) -> i64 {
        self.n as i64 - 1
    }

    pub fn get(&self, u: i64) -> Option<Complex64> {
        let idx = u + self.max_shift();
        if idx < 0 {
            return None;
        }
        self.values.get(idx as usize).copied()
    }

    /// # Panics
    /// If `|u| >= n`.
    pub fn at(&self, u: i64) -> Complex64 {
        self.get(u)
            .unwrap_or_else(|| panic!("shift {u} out of range for length {}", self.n))
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        let off = self.max_shift();
        self.values
            .iter()
            .enumerate()
            .map(move |(i, &c)| (i as i64 - off, c))
    }
}

fn check_lengths(a: &Sequence, b: &Sequence) -> Result<usize> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(a.len())
}

/// `C_{A,B}(u) = Σ_j a_j · conj(b_{j+u})` by direct summation.
pub fn crosscorrelation_naive(a: &Sequence, b: &Sequence) -> Result<CorrelationProfile> {
    let n = check_lengths(a, b)?;
    let (xa, xb) = (a.entries(), b.entries());
    let mut values = Vec::with_capacity(2 * n - 1);
    for u in -(n as i64 - 1)..=(n as i64 - 1) {
        let (lo, hi) = if u >= 0 {
            (0, n - u as usize)
        } else {
            ((-u) as usize, n)
        };
        let acc: ComplexSum = (lo..hi)
            .map(|j| xa[j] * xb[(j as i64 + u) as usize].conj())
            .collect();
        values.push(acc.value());
    }
    Ok(CorrelationProfile {
        values,
        n,
        method: CorrelationMethod::Naive,
    })
}

/// Transform length used by the FFT path: smallest power of two `>= 2n - 1`.
pub fn fft_len(n: usize) -> usize {
    (2 * n - 1).next_power_of_two()
}

/// Zero-padded forward transforms of sequences sharing one length.
pub(crate) struct Spectra {
    planner: FftPlanner<f64>,
    len: usize,
    n: usize,
}

impl Spectra {
    pub(crate) fn new(n: usize) -> Self {
        Spectra {
            planner: FftPlanner::new(),
            len: fft_len(n),
            n,
        }
    }

    pub(crate) fn forward(&mut self, s: &Sequence) -> Vec<Complex64> {
        let mut buf = vec![Complex64::new(0.0, 0.0); self.len];
        buf[..s.len()].copy_from_slice(s.entries());
        self.planner.plan_fft_forward(self.len).process(&mut buf);
        buf
    }

    /// Profile from the spectra of `a` and `b`:
    /// `C(u) = (1/L) Σ_k A_k conj(B_k) e^{-2πiku/L}`, a second forward transform.
    pub(crate) fn correlate(&mut self, fa: &[Complex64], fb: &[Complex64]) -> CorrelationProfile {
        let len = self.len;
        let mut prod: Vec<Complex64> = fa.iter().zip(fb).map(|(x, y)| x * y.conj()).collect();
        self.planner.plan_fft_forward(len).process(&mut prod);
        let scale = 1.0 / len as f64;
        let n = self.n;
        let values = (-(n as i64 - 1)..=(n as i64 - 1))
            .map(|u| prod[u.rem_euclid(len as i64) as usize] * scale)
            .collect();
        CorrelationProfile {
            values,
            n,
            method: CorrelationMethod::Fft,
        }
    }
}

/// Same values as [`crosscorrelation_naive`], computed in `O(n log n)`.
pub fn crosscorrelation_fft(a: &Sequence, b: &Sequence) -> Result<CorrelationProfile> {
    let n = check_lengths(a, b)?;
    let mut sp = Spectra::new(n);
    let fa = sp.forward(a);
    if std::ptr::eq(a, b) {
        return Ok(sp.correlate(&fa, &fa));
    }
    let fb = sp.forward(b);
    Ok(sp.correlate(&fa, &fb))
}

pub fn crosscorrelation(
    a: &Sequence,
    b: &Sequence,
    method: CorrelationMethod,
) -> Result<CorrelationProfile> {
    match method {
        CorrelationMethod::Naive => crosscorrelation_naive(a, b),
        CorrelationMethod::Fft => crosscorrelation_fft(a, b),
    }
}
