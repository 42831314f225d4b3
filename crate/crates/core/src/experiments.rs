//! Convergence studies for the asymptotic limits of Chu-pair demerit factors.
//!
//! Each study evaluates one grid of lengths, possibly in parallel, and returns
//! rows sorted by `(quantity, n)` so the CSV output does not depend on
//! scheduling.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::chu_closedform::{chu_adf_closed, lemma22_partial_sums};
use crate::error::{Error, Result};
use crate::gauss::{lemma33_admissible, lemma33_estimate};
use crate::generators::{chu, theorem1_pair, theorem2_pair, ChuSpec};
use crate::numeric::fmt17;
use crate::seqcore::{adf_with, pair_profiles, report_from_profiles, DemeritReport, Method};

/// Tolerated violation of the Pursley-Sarwate bound before a study aborts.
pub const BOUND_SLACK_TOL: f64 = 1e-9;

pub const CSV_HEADER: &str = "n,quantity,measured,target,deviation";

/// One grid point of a convergence study.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceRow {
    pub n: u64,
    pub quantity: String,
    pub measured: f64,
    pub target: f64,
    /// `|measured − target|`
    pub deviation: f64,
    /// Wall-clock time of the grid point that produced this row.
    pub elapsed: Duration,
}

impl ConvergenceRow {
    pub fn new(n: u64, quantity: impl Into<String>, measured: f64, target: f64) -> Self {
        ConvergenceRow {
            n,
            quantity: quantity.into(),
            measured,
            target,
            deviation: (measured - target).abs(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn to_csv_line(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.n,
            self.quantity,
            fmt17(self.measured),
            fmt17(self.target),
            fmt17(self.deviation)
        )
    }
}

/// Rows as CSV with header, one row per line.
pub fn to_csv(rows: &[ConvergenceRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&r.to_csv_line());
        out.push('\n');
    }
    out
}

/// `64, 256, …, 16384`, or up to `2^20` when `large`.
pub fn default_grid(large: bool) -> Vec<u64> {
    let top = if large { 1 << 20 } else { 1 << 14 };
    std::iter::successors(Some(64u64), |&n| Some(n * 4))
        .take_while(|&n| n <= top)
        .collect()
}

/// [`default_grid`] with each point preceded by its odd neighbour `n − 1`.
pub fn default_thm2_grid(large: bool) -> Vec<u64> {
    default_grid(large).into_iter().flat_map(|n| [n - 1, n]).collect()
}

fn check_grid(grid: &[u64], min: u64) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::InvalidArgument("empty grid".into()));
    }
    if let Some(&n) = grid.iter().find(|&&n| n < min) {
        return Err(Error::InvalidArgument(format!("grid point {n} is below {min}")));
    }
    if grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument("grid must be strictly increasing".into()));
    }
    Ok(())
}

fn finish(mut rows: Vec<ConvergenceRow>) -> Vec<ConvergenceRow> {
    rows.sort_by(|a, b| a.quantity.cmp(&b.quantity).then(a.n.cmp(&b.n)));
    rows
}

fn timed<F>(grid: &[u64], f: F) -> Result<Vec<ConvergenceRow>>
where
    F: Fn(u64) -> Result<Vec<ConvergenceRow>> + Sync,
{
    let chunks: Vec<Vec<ConvergenceRow>> = grid
        .par_iter()
        .map(|&n| {
            let start = Instant::now();
            let mut rows = f(n)?;
            let elapsed = start.elapsed();
            rows.iter_mut().for_each(|r| r.elapsed = elapsed);
            Ok(rows)
        })
        .collect::<Result<_>>()?;
    Ok(finish(chunks.into_iter().flatten().collect()))
}

fn check_bound(n: u64, r: &DemeritReport) -> Result<()> {
    if r.min_bound_slack() < -BOUND_SLACK_TOL {
        return Err(Error::CheckFailed(format!(
            "Pursley-Sarwate bound violated at n = {n}: slack {:e}",
            r.min_bound_slack()
        )));
    }
    Ok(())
}

/// `√n·adf(Z_n^{(1)})` against `2/π`, from the closed form. The FFT path is
/// cross-checked at the smallest grid point.
pub fn run_eq2_study(grid: &[u64]) -> Result<Vec<ConvergenceRow>> {
    check_grid(grid, 2)?;
    let n0 = grid[0];
    let closed = chu_adf_closed(n0, 1)?.adf;
    let fft = adf_with(&chu(ChuSpec::new(n0, 1))?, Method::Fft)?;
    if (closed - fft).abs() > 1e-9 {
        return Err(Error::CheckFailed(format!(
            "closed-form adf {closed} disagrees with FFT adf {fft} at n = {n0}"
        )));
    }
    timed(grid, |n| {
        let adf = chu_adf_closed(n, 1)?.adf;
        Ok(vec![ConvergenceRow::new(
            n,
            "sqrt_n_adf_chu1",
            (n as f64).sqrt() * adf,
            2.0 / PI,
        )])
    })
}

/// Both normalized sine sums against `1/(2π)`.
pub fn run_lemma22_study(grid: &[u64]) -> Result<Vec<ConvergenceRow>> {
    check_grid(grid, 2)?;
    timed(grid, |n| {
        let (sine, linear) = lemma22_partial_sums(n);
        let target = 1.0 / (2.0 * PI);
        Ok(vec![
            ConvergenceRow::new(n, "lemma22_sine_ratio", sine, target),
            ConvergenceRow::new(n, "lemma22_linear_ratio", linear, target),
        ])
    })
}

/// `(Z_n^{(1)}, Z_n^{(−1)})`: adf → 0, cdf → 1, psc → 1, via the FFT path.
pub fn run_thm1_study(grid: &[u64]) -> Result<Vec<ConvergenceRow>> {
    check_grid(grid, 1)?;
    timed(grid, |n| {
        let (x, y) = theorem1_pair(n)?;
        let profiles = pair_profiles(&x, &y, Method::Fft)?;
        let r = report_from_profiles(&x, &y, &profiles)?;
        check_bound(n, &r)?;
        Ok(vec![
            ConvergenceRow::new(n, "adf_x", r.adf_a, 0.0),
            ConvergenceRow::new(n, "cdf", r.cdf, 1.0),
            ConvergenceRow::new(n, "psc", r.psc, 1.0),
        ])
    })
}

/// `(Z_{2n}^{(n+1)}, Z_{2n}^{(n−1)})`: adf and cdf → 1/2, psc → 1, plus exact
/// checks with target 0:
/// * `adf_xy_mismatch` (odd n): `|adf_x − adf_y|`
/// * `acf_magnitude_mismatch` (even n): `max_u ||C_XX(u)| − |C_YY(u)||`
/// * `odd_shift_ccf_defect`: `max_{u odd} ||C_XY(u)| − 1|`
pub fn run_thm2_study(grid: &[u64]) -> Result<Vec<ConvergenceRow>> {
    check_grid(grid, 1)?;
    timed(grid, |n| {
        let (x, y) = theorem2_pair(n)?;
        let p = pair_profiles(&x, &y, Method::Fft)?;
        let r = report_from_profiles(&x, &y, &p)?;
        check_bound(n, &r)?;
        let mut rows = vec![
            ConvergenceRow::new(n, "adf_x", r.adf_a, 0.5),
            ConvergenceRow::new(n, "adf_y", r.adf_b, 0.5),
            ConvergenceRow::new(n, "cdf", r.cdf, 0.5),
            ConvergenceRow::new(n, "psc", r.psc, 1.0),
        ];
        if n % 2 == 1 {
            rows.push(ConvergenceRow::new(
                n,
                "adf_xy_mismatch",
                (r.adf_a - r.adf_b).abs(),
                0.0,
            ));
        } else {
            let mismatch = p
                .aa
                .values()
                .iter()
                .zip(p.bb.values())
                .map(|(a, b)| (a.norm() - b.norm()).abs())
                .fold(0.0, f64::max);
            rows.push(ConvergenceRow::new(n, "acf_magnitude_mismatch", mismatch, 0.0));
        }
        let odd = p
            .ab
            .iter()
            .filter(|(u, _)| u.rem_euclid(2) == 1)
            .map(|(_, c)| (c.norm() - 1.0).abs())
            .fold(0.0, f64::max);
        rows.push(ConvergenceRow::new(n, "odd_shift_ccf_defect", odd, 0.0));
        Ok(rows)
    })
}

/// Quantity name for one shift fraction `u/m` of the ratio study.
pub fn lemma33_quantity(fraction: f64) -> String {
    format!("lemma33_ratio_f{fraction}")
}

/// `|S_{m−u}(2/m, u/m)| / √(m/2)` with `u = ⌊f·m⌋`, against 1.
pub fn run_lemma33_study(grid: &[u64], fractions: &[f64]) -> Result<Vec<ConvergenceRow>> {
    check_grid(grid, 1)?;
    if fractions.is_empty() {
        return Err(Error::InvalidArgument("no fractions given".into()));
    }
    for &m in grid {
        for &f in fractions {
            let u = (f * m as f64).floor() as i64;
            if !lemma33_admissible(m, u) {
                return Err(Error::InvalidArgument(format!(
                    "fraction {f} gives shift {u} outside the admissible range for m = {m}"
                )));
            }
        }
    }
    timed(grid, |m| {
        fractions
            .iter()
            .map(|&f| {
                let u = (f * m as f64).floor() as i64;
                let (value, target) = lemma33_estimate(m, u)?;
                Ok(ConvergenceRow::new(m, lemma33_quantity(f), value / target, 1.0))
            })
            .collect()
    })
}

/// `(n, deviation)` of one quantity, in grid order.
pub fn deviations(rows: &[ConvergenceRow], quantity: &str) -> Vec<(u64, f64)> {
    rows.iter()
        .filter(|r| r.quantity == quantity)
        .map(|r| (r.n, r.deviation))
        .collect()
}

pub fn is_strictly_decreasing(values: &[f64]) -> bool {
    values.windows(2).all(|w| w[1] < w[0])
}

/// Non-increasing, allowing each step to rise by at most `floor` (round-off level).
pub fn is_non_increasing(values: &[f64], floor: f64) -> bool {
    values.windows(2).all(|w| w[1] <= w[0] + floor)
}

/// Least-squares fit of `deviation ≈ c·n^{−α}` in log-log space, returning `(c, α)`.
/// Points with zero deviation are skipped; `None` with fewer than two usable points.
pub fn fit_power_law(points: &[(u64, f64)]) -> Option<(f64, f64)> {
    let pts: Vec<(f64, f64)> = points
        .iter()
        .filter(|&&(n, d)| n > 0 && d > 0.0)
        .map(|&(n, d)| ((n as f64).ln(), d.ln()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = sxy / sxx;
    Some(((my - slope * mx).exp(), -slope))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grids() {
        assert_eq!(default_grid(false), vec![64, 256, 1024, 4096, 16384]);
        assert_eq!(*default_grid(true).last().unwrap(), 1 << 20);
        assert_eq!(&default_thm2_grid(false)[..4], &[63, 64, 255, 256]);
        assert!(check_grid(&[4, 4], 1).is_err());
        assert!(check_grid(&[], 1).is_err());
        assert!(run_eq2_study(&[1, 4]).is_err());
    }

    #[test]
    fn eq2_n2() {
        let rows = run_eq2_study(&[2]).unwrap();
        assert!((rows[0].measured - 2f64.sqrt() / 2.0).abs() < 1e-15);
        assert!(rows[0].measured > 0.0);
    }

    #[test]
    fn thm1_n1() {
        let rows = run_thm1_study(&[1]).unwrap();
        let get = |q: &str| rows.iter().find(|r| r.quantity == q).unwrap().measured;
        assert_eq!(get("adf_x"), 0.0);
        assert!((get("cdf") - 1.0).abs() < 1e-15);
        assert!((get("psc") - 1.0).abs() < 1e-15);
    }

    #[test]
    fn rows_sorted_by_quantity_then_n() {
        let rows = run_thm1_study(&[3, 8, 20]).unwrap();
        let keys: Vec<(String, u64)> = rows.iter().map(|r| (r.quantity.clone(), r.n)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn csv_layout() {
        let rows = vec![ConvergenceRow::new(4, "psc", 1.25, 1.0)];
        assert_eq!(
            to_csv(&rows),
            "n,quantity,measured,target,deviation\n\
             4,psc,1.2500000000000000e0,1.0000000000000000e0,2.5000000000000000e-1\n"
        );
    }

    #[test]
    fn lemma33_rejects_inadmissible_fraction() {
        assert!(matches!(
            run_lemma33_study(&[1024], &[0.01]),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn power_law_fit_recovers_exponent() {
        let pts: Vec<(u64, f64)> = [64u64, 256, 1024]
            .iter()
            .map(|&n| (n, 3.0 * (n as f64).powf(-0.5)))
            .collect();
        let (c, a) = fit_power_law(&pts).unwrap();
        assert!((c - 3.0).abs() < 1e-9 && (a - 0.5).abs() < 1e-12);
        assert!(fit_power_law(&pts[..1]).is_none());
    }

    #[test]
    fn trend_helpers() {
        assert!(is_strictly_decreasing(&[3.0, 2.0, 1.0]));
        assert!(!is_strictly_decreasing(&[3.0, 3.0]));
        assert!(is_non_increasing(&[0.0, 1e-16, 0.0], 1e-12));
        assert!(!is_non_increasing(&[1.0, 1.1], 1e-12));
    }
}
