use num_complex::Complex64;

use super::correlation::{
    crosscorrelation_naive, CorrelationMethod, CorrelationProfile, Spectra,
};
use super::sequence::Sequence;
use crate::error::{Error, Result};
use crate::numeric::{fmt17, NeumaierSum};

/// Sequences up to this length use direct summation under [`Method::Auto`].
pub const AUTO_NAIVE_MAX_LEN: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    Naive,
    Fft,
    #[default]
    Auto,
}

impl Method {
    fn resolve(self, n: usize) -> CorrelationMethod {
        match self {
            Method::Naive => CorrelationMethod::Naive,
            Method::Fft => CorrelationMethod::Fft,
            Method::Auto if n <= AUTO_NAIVE_MAX_LEN => CorrelationMethod::Naive,
            Method::Auto => CorrelationMethod::Fft,
        }
    }
}

/// Demerit factors of a pair together with the Pursley-Sarwate bound residuals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DemeritReport {
    pub adf_a: f64,
    pub adf_b: f64,
    pub cdf: f64,
    pub psc: f64,
    /// `cdf - 1 + sqrt(adf_a·adf_b)`, nonnegative when the lower bound holds.
    pub bound_lower_slack: f64,
    /// `sqrt(adf_a·adf_b) - (cdf - 1)`, nonnegative when the upper bound holds.
    pub bound_upper_slack: f64,
    pub golay_defect: f64,
}

impl DemeritReport {
    pub const KEYS: [&'static str; 7] = [
        "adf_a",
        "adf_b",
        "cdf",
        "psc",
        "bound_lower_slack",
        "bound_upper_slack",
        "golay_defect",
    ];

    pub fn fields(&self) -> [f64; 7] {
        [
            self.adf_a,
            self.adf_b,
            self.cdf,
            self.psc,
            self.bound_lower_slack,
            self.bound_upper_slack,
            self.golay_defect,
        ]
    }

    /// Flat JSON object, every number printed with 17 significant digits.
    pub fn to_json(&self) -> String {
        let body: Vec<String> = Self::KEYS
            .iter()
            .zip(self.fields())
            .map(|(k, v)| format!("\"{k}\":{}", fmt17(v)))
            .collect();
        format!("{{{}}}", body.join(","))
    }

    pub fn min_bound_slack(&self) -> f64 {
        self.bound_lower_slack.min(self.bound_upper_slack)
    }
}

fn checked_energy(s: &Sequence) -> Result<f64> {
    let energy: NeumaierSum = s.entries().iter().map(|z| z.norm_sqr()).collect();
    let energy = energy.value();
    if energy < 1e-12 * s.len() as f64 {
        return Err(Error::DegenerateSequence { energy });
    }
    Ok(energy)
}

fn check_pair(a: &Sequence, b: &Sequence) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(())
}

fn energy_off_zero(p: &CorrelationProfile) -> f64 {
    p.iter()
        .filter(|&(u, _)| u != 0)
        .map(|(_, c)| c.norm_sqr())
        .collect::<NeumaierSum>()
        .value()
}

fn energy_all(p: &CorrelationProfile) -> f64 {
    p.values()
        .iter()
        .map(|c| c.norm_sqr())
        .collect::<NeumaierSum>()
        .value()
}

fn autocorrelations(
    a: &Sequence,
    b: &Sequence,
    method: CorrelationMethod,
) -> Result<(CorrelationProfile, CorrelationProfile, CorrelationProfile)> {
    match method {
        CorrelationMethod::Naive => Ok((
            crosscorrelation_naive(a, a)?,
            crosscorrelation_naive(b, b)?,
            crosscorrelation_naive(a, b)?,
        )),
        CorrelationMethod::Fft => {
            let mut sp = Spectra::new(a.len());
            let fa = sp.forward(a);
            let fb = sp.forward(b);
            Ok((
                sp.correlate(&fa, &fa),
                sp.correlate(&fb, &fb),
                sp.correlate(&fa, &fb),
            ))
        }
    }
}

fn defect(aa: &CorrelationProfile, bb: &CorrelationProfile) -> f64 {
    aa.iter()
        .zip(bb.values())
        .filter(|&((u, _), _)| u != 0)
        .map(|((_, x), y)| (x + y).norm())
        .fold(0.0, f64::max)
}

/// Autocorrelation demerit factor `Σ_{u≠0} |C_{A,A}(u)|² / C_{A,A}(0)²`.
pub fn adf(a: &Sequence) -> Result<f64> {
    adf_with(a, Method::Auto)
}

pub fn adf_with(a: &Sequence, method: Method) -> Result<f64> {
    let energy = checked_energy(a)?;
    let profile = match method.resolve(a.len()) {
        CorrelationMethod::Naive => crosscorrelation_naive(a, a)?,
        CorrelationMethod::Fft => {
            let mut sp = Spectra::new(a.len());
            let fa = sp.forward(a);
            sp.correlate(&fa, &fa)
        }
    };
    Ok(energy_off_zero(&profile) / (energy * energy))
}

/// Crosscorrelation demerit factor `Σ_u |C_{A,B}(u)|² / (C_{A,A}(0)·C_{B,B}(0))`,
/// the zero shift included.
pub fn cdf(a: &Sequence, b: &Sequence) -> Result<f64> {
    cdf_with(a, b, Method::Auto)
}

pub fn cdf_with(a: &Sequence, b: &Sequence, method: Method) -> Result<f64> {
    check_pair(a, b)?;
    let (ea, eb) = (checked_energy(a)?, checked_energy(b)?);
    let profile = match method.resolve(a.len()) {
        CorrelationMethod::Naive => crosscorrelation_naive(a, b)?,
        CorrelationMethod::Fft => {
            let mut sp = Spectra::new(a.len());
            let fa = sp.forward(a);
            let fb = sp.forward(b);
            sp.correlate(&fa, &fb)
        }
    };
    Ok(energy_all(&profile) / (ea * eb))
}

/// Full [`DemeritReport`] for the pair, including the Pursley-Sarwate criterion.
pub fn psc(a: &Sequence, b: &Sequence) -> Result<DemeritReport> {
    psc_with(a, b, Method::Auto)
}

pub fn psc_with(a: &Sequence, b: &Sequence, method: Method) -> Result<DemeritReport> {
    let profiles = pair_profiles(a, b, method)?;
    report_from_profiles(a, b, &profiles)
}

/// Autocorrelations of both members and their crosscorrelation.
#[derive(Debug, Clone)]
pub struct PairProfiles {
    pub aa: CorrelationProfile,
    pub bb: CorrelationProfile,
    pub ab: CorrelationProfile,
}

pub fn pair_profiles(a: &Sequence, b: &Sequence, method: Method) -> Result<PairProfiles> {
    check_pair(a, b)?;
    let (aa, bb, ab) = autocorrelations(a, b, method.resolve(a.len()))?;
    Ok(PairProfiles { aa, bb, ab })
}

/// [`DemeritReport`] from already computed profiles of the pair `(a, b)`.
pub fn report_from_profiles(
    a: &Sequence,
    b: &Sequence,
    profiles: &PairProfiles,
) -> Result<DemeritReport> {
    check_pair(a, b)?;
    let (ea, eb) = (checked_energy(a)?, checked_energy(b)?);
    let adf_a = energy_off_zero(&profiles.aa) / (ea * ea);
    let adf_b = energy_off_zero(&profiles.bb) / (eb * eb);
    let cdf = energy_all(&profiles.ab) / (ea * eb);
    let geo = (adf_a * adf_b).sqrt();
    Ok(DemeritReport {
        adf_a,
        adf_b,
        cdf,
        psc: geo + cdf,
        bound_lower_slack: cdf - 1.0 + geo,
        bound_upper_slack: geo - (cdf - 1.0),
        golay_defect: defect(&profiles.aa, &profiles.bb),
    })
}

/// `max_{u≠0} |C_{A,A}(u) + C_{B,B}(u)|`; zero exactly for Golay pairs.
pub fn golay_defect(a: &Sequence, b: &Sequence) -> Result<f64> {
    golay_defect_with(a, b, Method::Auto)
}

pub fn golay_defect_with(a: &Sequence, b: &Sequence, method: Method) -> Result<f64> {
    check_pair(a, b)?;
    let (aa, bb) = match method.resolve(a.len()) {
        CorrelationMethod::Naive => (crosscorrelation_naive(a, a)?, crosscorrelation_naive(b, b)?),
        CorrelationMethod::Fft => {
            let mut sp = Spectra::new(a.len());
            let fa = sp.forward(a);
            let fb = sp.forward(b);
            (sp.correlate(&fa, &fa), sp.correlate(&fb, &fb))
        }
    };
    Ok(defect(&aa, &bb))
}

/// Largest per-shift difference of two profiles of equal length.
pub fn max_profile_difference(p: &CorrelationProfile, q: &CorrelationProfile) -> f64 {
    assert_eq!(p.n(), q.n(), "profiles of different lengths");
    p.values()
        .iter()
        .zip(q.values())
        .map(|(x, y): (&Complex64, &Complex64)| (x - y).norm())
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs2() -> (Sequence, Sequence) {
        (
            Sequence::from_real(&[1.0, 1.0, 1.0, -1.0]).unwrap(),
            Sequence::from_real(&[1.0, 1.0, -1.0, 1.0]).unwrap(),
        )
    }

    #[test]
    fn adf_small_cases() {
        let (a, _) = rs2();
        for m in [Method::Naive, Method::Fft] {
            assert!((adf_with(&a, m).unwrap() - 0.25).abs() < 1e-14);
        }
        let one = Sequence::from_real(&[1.0]).unwrap();
        assert_eq!(adf(&one).unwrap(), 0.0);
        let chu2 = Sequence::from_phases(2, &[0, 1]).unwrap();
        assert!((adf(&chu2).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn cdf_small_cases() {
        let (a, b) = rs2();
        assert!((cdf(&a, &b).unwrap() - 0.75).abs() < 1e-14);
        let one = Sequence::from_real(&[1.0]).unwrap();
        assert_eq!(cdf(&one, &one).unwrap(), 1.0);
    }

    #[test]
    fn psc_of_golay_pair_is_one() {
        let (a, b) = rs2();
        let r = psc(&a, &b).unwrap();
        assert!((r.psc - 1.0).abs() < 1e-14);
        assert!(r.golay_defect < 1e-14);
        assert!(r.bound_lower_slack.abs() < 1e-14);
    }

    #[test]
    fn trivial_pair_report() {
        let one = Sequence::from_real(&[1.0]).unwrap();
        let r = psc(&one, &one).unwrap();
        assert_eq!((r.adf_a, r.adf_b, r.cdf, r.psc), (0.0, 0.0, 1.0, 1.0));
        assert_eq!(r.golay_defect, 0.0);
    }

    #[test]
    fn identical_pair_defect() {
        let a = Sequence::from_real(&[1.0, 1.0]).unwrap();
        assert!((golay_defect(&a, &a).unwrap() - 2.0).abs() < 1e-15);
    }

    #[test]
    fn degenerate_rejected() {
        let tiny = Sequence::from_real(&[1e-9, 0.0]).unwrap();
        assert!(matches!(adf(&tiny), Err(Error::DegenerateSequence { .. })));
        let ok = Sequence::from_real(&[1.0, 0.0]).unwrap();
        assert!(matches!(cdf(&ok, &tiny), Err(Error::DegenerateSequence { .. })));
    }

    #[test]
    fn length_mismatch_rejected() {
        let a = Sequence::from_real(&[1.0]).unwrap();
        let b = Sequence::from_real(&[1.0, 1.0]).unwrap();
        assert!(matches!(cdf(&a, &b), Err(Error::LengthMismatch { .. })));
        assert!(matches!(psc(&a, &b), Err(Error::LengthMismatch { .. })));
        assert!(matches!(golay_defect(&a, &b), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn json_layout() {
        let (a, b) = rs2();
        let js = psc(&a, &b).unwrap().to_json();
        assert!(js.starts_with("{\"adf_a\":2.5000000000000000e-1,\"adf_b\":"));
        for k in DemeritReport::KEYS {
            assert!(js.contains(&format!("\"{k}\":")));
        }
    }
}
