use rayon::prelude::*;

use super::sum::{gauss_sum_direct, GaussParams};
use crate::error::{Error, Result};
use crate::generators::{theorem1_pair, theorem2_pair};
use crate::seqcore::{crosscorrelation, CorrelationMethod};

/// `m^{2/3} ≤ w ≤ m/2 − m^{2/3}`, decided in exact integer arithmetic
/// (`w³ ≥ m²` and `(m − 2w)³ ≥ 8m²`).
pub fn in_lemma33_range(m: u64, w: i64) -> bool {
    if w < 0 {
        return false;
    }
    let (m, w) = (m as i128, w as i128);
    let m2 = m * m;
    let gap = m - 2 * w;
    w * w * w >= m2 && gap >= 0 && gap * gap * gap >= 8 * m2
}

/// Shift `u` is admissible when `u` or `m − u` lies in [`in_lemma33_range`].
pub fn lemma33_admissible(m: u64, u: i64) -> bool {
    in_lemma33_range(m, u) || in_lemma33_range(m, m as i64 - u)
}

/// `(|S_{m−u}(2/m, u/m)|, √(m/2))`; the two differ by `O(m^{1/3})`.
pub fn lemma33_estimate(m: u64, u: i64) -> Result<(f64, f64)> {
    if m == 0 || !lemma33_admissible(m, u) {
        return Err(Error::InvalidArgument(format!(
            "shift {u} is outside the admissible range for m = {m}"
        )));
    }
    let mi = m as i64;
    let s = gauss_sum_direct(&GaussParams::rational(m - u as u64, 2, mi, u, mi));
    Ok((s.norm(), (m as f64 / 2.0).sqrt()))
}

/// Which Chu pair a correlation/Gauss-sum identity refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairKind {
    /// `(Z_n^{(1)}, Z_n^{(−1)})`, shifts `0 ≤ u < n`
    Thm1,
    /// `(Z_{2n}^{(n+1)}, Z_{2n}^{(n−1)})`, shifts `0 ≤ u < 2n`
    Thm2,
}

impl PairKind {
    pub fn seq_len(self, n: u64) -> u64 {
        match self {
            PairKind::Thm1 => n,
            PairKind::Thm2 => 2 * n,
        }
    }
}

/// Gauss-sum side of the identity at shift `u`.
fn gauss_side(kind: PairKind, n: u64, u: u64) -> f64 {
    let ni = n as i64;
    match kind {
        PairKind::Thm1 => gauss_sum_direct(&GaussParams::rational(n - u, 2, ni, u as i64, ni)).norm(),
        PairKind::Thm2 if u % 2 == 1 => 1.0,
        PairKind::Thm2 => {
            let v = u / 2;
            gauss_sum_direct(&GaussParams::rational(2 * n - 2 * v, 1, ni, v as i64, ni)).norm()
        }
    }
}

/// `(u, |C_{X,Y}(u)|, Gauss-sum side)` for every shift `0 ≤ u < len`.
///
/// Thm1: `|C(u)| = |S_{n−u}(2/n, u/n)|`. Thm2: `|C(2v)| = |S_{2n−2v}(1/n, v/n)|`
/// and `|C(u)| = 1` for odd `u`.
pub fn correlation_gauss_sweep(kind: PairKind, n: u64) -> Result<Vec<(u64, f64, f64)>> {
    let (x, y) = match kind {
        PairKind::Thm1 => theorem1_pair(n)?,
        PairKind::Thm2 => theorem2_pair(n)?,
    };
    let method = if x.len() <= 64 {
        CorrelationMethod::Naive
    } else {
        CorrelationMethod::Fft
    };
    let profile = crosscorrelation(&x, &y, method)?;
    let len = kind.seq_len(n);
    Ok((0..len)
        .into_par_iter()
        .map(|u| (u, profile.at(u as i64).norm(), gauss_side(kind, n, u)))
        .collect())
}

/// `(lhs, rhs)` of the identity at one shift; see [`correlation_gauss_sweep`].
pub fn correlation_gauss_identity(kind: PairKind, n: u64, u: i64) -> Result<(f64, f64)> {
    if n == 0 {
        return Err(Error::InvalidSpec("pair parameter n must be >= 1".into()));
    }
    let len = kind.seq_len(n);
    if u < 0 || u as u64 >= len {
        return Err(Error::InvalidShift {
            shift: u,
            len: len as usize,
        });
    }
    let (x, y) = match kind {
        PairKind::Thm1 => theorem1_pair(n)?,
        PairKind::Thm2 => theorem2_pair(n)?,
    };
    let lhs = crate::seqcore::crosscorrelation_naive(&x, &y)?.at(u).norm();
    Ok((lhs, gauss_side(kind, n, u as u64)))
}

/// `max |S_N(k/m, θ)| / √m` over `samples` deterministic draws of odd `k` with
/// `2m ∤ k`, `1 ≤ N ≤ 2m` and `θ ∈ [0, 1)`.
///
/// Draws follow additive recurrences with irrational steps, so repeated calls
/// return the same value.
pub fn lemma32_max_ratio(m: u64, samples: usize) -> f64 {
    const STEP_K: f64 = 0.618_033_988_749_894_8; // golden ratio conjugate
    const STEP_N: f64 = 0.754_877_666_246_692_7; // plastic number conjugate
    const STEP_T: f64 = 0.569_840_290_998_053_3;
    let mi = m as i64;
    (0..samples)
        .into_par_iter()
        .map(|i| {
            let i = i as f64 + 1.0;
            // odd k in [1, 2m); 2m never divides an odd k
            let k = 2 * ((i * STEP_K).fract() * m as f64) as i64 + 1;
            let big_n = 1 + ((i * STEP_N).fract() * (2 * m) as f64) as u64;
            let theta = (i * STEP_T).fract();
            let p = GaussParams::rational_x(big_n, k, mi, theta);
            gauss_sum_direct(&p).norm()
        })
        .reduce(|| 0.0, f64::max)
        / (m as f64).sqrt()
}
