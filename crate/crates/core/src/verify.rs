//! Oracle-equivalence suites: each check compares two independent routes (or a
//! computed value against an exact statement) and reports its worst error.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::chu_closedform::{chu_acf_magnitude, chu_adf_closed};
use crate::error::Result;
use crate::gauss::{correlation_gauss_sweep, erfc_diag, paris_decompose, GaussParams, PairKind};
use crate::generators::{chu, rudin_shapiro_pair, theorem2_pair, ChuSpec};
use crate::numeric::fmt17;
use crate::seqcore::{crosscorrelation_naive, pair_profiles, report_from_profiles, Method};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Lemma21,
    Prop31,
    Identities,
    All,
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "lemma21" => Ok(Suite::Lemma21),
            "prop31" => Ok(Suite::Prop31),
            "identities" => Ok(Suite::Identities),
            "all" => Ok(Suite::All),
            _ => Err(format!("unknown suite {s:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub suite: &'static str,
    pub check: &'static str,
    pub worst: f64,
    pub tolerance: f64,
    /// `worst < tolerance` when strict, `worst ≤ tolerance` otherwise.
    pub strict: bool,
}

impl CheckOutcome {
    fn new(suite: &'static str, check: &'static str, worst: f64, tolerance: f64) -> Self {
        CheckOutcome {
            suite,
            check,
            worst,
            tolerance,
            strict: false,
        }
    }

    fn strict(mut self) -> Self {
        self.strict = true;
        self
    }

    pub fn passed(&self) -> bool {
        if self.strict {
            self.worst < self.tolerance
        } else {
            self.worst <= self.tolerance
        }
    }

    pub fn csv_header() -> &'static str {
        "suite,check,status,worst,tolerance"
    }

    pub fn to_csv_line(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.suite,
            self.check,
            if self.passed() { "pass" } else { "fail" },
            fmt17(self.worst),
            fmt17(self.tolerance)
        )
    }
}

fn max_of(it: impl ParallelIterator<Item = f64>) -> f64 {
    it.reduce(|| 0.0, f64::max)
}

pub const LEMMA21_MAX_N: u64 = 128;
pub const PROP31_SAMPLES: usize = 1000;
pub const PROP31_MAX_TERMS: u64 = 10_000;
pub const IDENTITY_MAX_N: u64 = 512;

/// Closed-form Chu adf and shift magnitudes against direct summation,
/// `1 ≤ n ≤ 128`, `1 ≤ a ≤ 2n`.
pub fn lemma21_suite() -> Result<Vec<CheckOutcome>> {
    let per_n: Vec<(f64, f64)> = (1..=LEMMA21_MAX_N)
        .into_par_iter()
        .map(|n| {
            let mut worst_adf: f64 = 0.0;
            let mut worst_mag: f64 = 0.0;
            for a in 1..=(2 * n as i64) {
                let z = chu(ChuSpec::new(n, a))?;
                let p = crosscorrelation_naive(&z, &z)?;
                let brute = p
                    .iter()
                    .filter(|&(u, _)| u != 0)
                    .map(|(_, c)| c.norm_sqr())
                    .sum::<f64>()
                    / (n * n) as f64;
                worst_adf = worst_adf.max((chu_adf_closed(n, a)?.adf - brute).abs());
                for u in 0..n as i64 {
                    let m = chu_acf_magnitude(n, a, u)?;
                    worst_mag = worst_mag.max((m - p.at(u).norm()).abs());
                }
            }
            Ok((worst_adf, worst_mag))
        })
        .collect::<Result<_>>()?;
    let adf = per_n.iter().map(|p| p.0).fold(0.0, f64::max);
    let mag = per_n.iter().map(|p| p.1).fold(0.0, f64::max);
    Ok(vec![
        CheckOutcome::new("lemma21", "adf_closed_vs_naive", adf, 1e-9),
        CheckOutcome::new("lemma21", "acf_magnitude_closed_vs_naive", mag, 1e-9),
    ])
}

/// Random decomposition parameters `(N, x, θ)` with `N ≤ max_terms`,
/// `x ∈ (0, 1)`, `θ ∈ (−1/2, 1/2]`.
pub fn prop31_samples(count: usize, max_terms: u64, seed: u64) -> Vec<GaussParams> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_terms);
            let x = loop {
                let x: f64 = rng.gen();
                if x > 0.0 {
                    break x;
                }
            };
            let theta = 0.5 - rng.gen::<f64>();
            GaussParams::new(n, x, theta)
        })
        .collect()
}

/// Remainder bound `|R| < x` and exactness of the reconstruction over a random sweep.
pub fn prop31_suite() -> Result<Vec<CheckOutcome>> {
    let samples = prop31_samples(PROP31_SAMPLES, PROP31_MAX_TERMS, 0x5eed_0031);
    let decomps: Vec<(GaussParams, _)> = samples
        .par_iter()
        .map(|p| Ok((*p, paris_decompose(p)?)))
        .collect::<Result<_>>()?;
    let ratio = max_of(decomps.par_iter().map(|(p, d)| d.remainder.norm() / p.x));
    let recon = max_of(
        decomps
            .par_iter()
            .map(|(p, d)| (d.total - d.direct).norm() / p.n as f64),
    );
    let d = paris_decompose(&GaussParams::rational(48, 2, 64, 16, 64))?;
    let lemma_case = if d.m == 2 && (d.epsilon + 0.25).abs() < 1e-12 && (d.mu - 1.0).norm() < 1e-12 {
        d.remainder.norm() / (2.0 / 64.0)
    } else {
        f64::INFINITY
    };
    Ok(vec![
        CheckOutcome::new("prop31", "remainder_over_x", ratio, 1.0).strict(),
        CheckOutcome::new("prop31", "total_vs_direct_per_term", recon, 1e-9),
        CheckOutcome::new("prop31", "lemma33_parameters_remainder_over_x", lemma_case, 1.0)
            .strict(),
    ])
}

/// Exact identities: correlation ↔ Gauss sums, odd shifts of the second pair,
/// symmetry facts of that pair, Rudin-Shapiro values and erfc reflection.
pub fn identities_suite() -> Result<Vec<CheckOutcome>> {
    let sweep = |kind: PairKind, parity: Option<u64>| -> Result<f64> {
        let per_n: Vec<f64> = (1..=IDENTITY_MAX_N)
            .into_par_iter()
            .map(|n| {
                Ok(correlation_gauss_sweep(kind, n)?
                    .into_iter()
                    .filter(|(u, _, _)| parity.is_none_or(|p| u % 2 == p))
                    .map(|(_, l, r)| (l - r).abs())
                    .fold(0.0, f64::max))
            })
            .collect::<Result<_>>()?;
        Ok(per_n.into_iter().fold(0.0, f64::max))
    };
    let thm1 = sweep(PairKind::Thm1, None)?;
    let thm2_even = sweep(PairKind::Thm2, Some(0))?;
    let thm2_odd = sweep(PairKind::Thm2, Some(1))?;

    let sym: Vec<(f64, f64)> = (1..=IDENTITY_MAX_N)
        .into_par_iter()
        .map(|n| {
            let (x, y) = theorem2_pair(n)?;
            let p = pair_profiles(&x, &y, Method::Auto)?;
            if n % 2 == 1 {
                let r = report_from_profiles(&x, &y, &p)?;
                Ok(((r.adf_a - r.adf_b).abs(), 0.0))
            } else {
                let m = p
                    .aa
                    .values()
                    .iter()
                    .zip(p.bb.values())
                    .map(|(a, b)| (a.norm() - b.norm()).abs())
                    .fold(0.0, f64::max);
                Ok((0.0, m))
            }
        })
        .collect::<Result<_>>()?;
    let adf_equal = sym.iter().map(|s| s.0).fold(0.0, f64::max);
    let mag_equal = sym.iter().map(|s| s.1).fold(0.0, f64::max);

    let mut rs_worst: f64 = 0.0;
    let mut rs_defect: f64 = 0.0;
    for m in 0..=12 {
        let (a, b) = rudin_shapiro_pair(m)?;
        let r = report_from_profiles(&a, &b, &pair_profiles(&a, &b, Method::Auto)?)?;
        let q = (-0.5f64).powi(m as i32);
        let adf = (1.0 - q) / 3.0;
        let cdf = (2.0 + q) / 3.0;
        rs_worst = rs_worst
            .max((r.adf_a - adf).abs())
            .max((r.adf_b - adf).abs())
            .max((r.cdf - cdf).abs())
            .max((r.psc - 1.0).abs());
        rs_defect = rs_defect.max(r.golay_defect);
    }

    let reflection = (0..=5000)
        .map(|i| {
            let t = i as f64 * 0.01;
            (erfc_diag(t) + erfc_diag(-t) - 2.0).norm()
        })
        .fold(0.0, f64::max);

    Ok(vec![
        CheckOutcome::new("identities", "thm1_ccf_vs_gauss_sum", thm1, 1e-9),
        CheckOutcome::new("identities", "thm2_even_shift_ccf_vs_gauss_sum", thm2_even, 1e-9),
        CheckOutcome::new("identities", "thm2_odd_shift_unit_magnitude", thm2_odd, 1e-9),
        CheckOutcome::new("identities", "thm2_odd_n_adf_equal", adf_equal, 1e-9),
        CheckOutcome::new("identities", "thm2_even_n_acf_magnitudes_equal", mag_equal, 1e-9),
        CheckOutcome::new("identities", "rudin_shapiro_exact_values", rs_worst, 1e-10),
        CheckOutcome::new("identities", "rudin_shapiro_golay_defect", rs_defect, 1e-9),
        CheckOutcome::new("identities", "erfc_reflection", reflection, 1e-10),
    ])
}

pub fn run_suite(suite: Suite) -> Result<Vec<CheckOutcome>> {
    match suite {
        Suite::Lemma21 => lemma21_suite(),
        Suite::Prop31 => prop31_suite(),
        Suite::Identities => identities_suite(),
        Suite::All => {
            let mut out = lemma21_suite()?;
            out.extend(prop31_suite()?);
            out.extend(identities_suite()?);
            Ok(out)
        }
    }
}
