use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numeric::exp_i_pi;

/// Integer phase representation of a unimodular sequence:
/// entry `j` is `exp(πi · phases[j] / modulus)`, phases kept in `[0, 2·modulus)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhaseExact {
    modulus: u64,
    phases: Vec<u64>,
}

impl PhaseExact {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn phases(&self) -> &[u64] {
        &self.phases
    }
}

/// A finite complex sequence with at least one nonzero entry.
#[derive(Debug, Clone, PartialEq)]
pub struct Sequence {
    entries: Vec<Complex64>,
    phase: Option<PhaseExact>,
}

impl Sequence {
    pub fn new(entries: Vec<Complex64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidSpec("sequence must have length >= 1".into()));
        }
        if entries.iter().all(|z| *z == Complex64::new(0.0, 0.0)) {
            return Err(Error::DegenerateSequence { energy: 0.0 });
        }
        if entries.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidArgument("non-finite sequence entry".into()));
        }
        Ok(Sequence {
            entries,
            phase: None,
        })
    }

    pub fn from_real(values: &[f64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| Complex64::new(v, 0.0)).collect())
    }

    /// Builds a unimodular sequence from integer phases in units of `π/modulus`.
    /// Phases are reduced to the canonical range `[0, 2·modulus)`.
    pub fn from_phases(modulus: u64, phases: &[i64]) -> Result<Self> {
        if modulus == 0 || modulus > (1 << 62) {
            return Err(Error::InvalidSpec(format!("phase modulus {modulus} out of range")));
        }
        let period = 2 * modulus as i128;
        let canon: Vec<u64> = phases
            .iter()
            .map(|&p| (p as i128).rem_euclid(period) as u64)
            .collect();
        Self::from_canonical_phases(modulus, canon)
    }

    /// Like [`Sequence::from_phases`] but the caller guarantees `p < 2·modulus`.
    pub(crate) fn from_canonical_phases(modulus: u64, phases: Vec<u64>) -> Result<Self> {
        if phases.is_empty() {
            return Err(Error::InvalidSpec("sequence must have length >= 1".into()));
        }
        debug_assert!(phases.iter().all(|&p| p < 2 * modulus));
        let l = modulus as f64;
        let entries = phases.iter().map(|&p| exp_i_pi(p as f64 / l)).collect();
        Ok(Sequence {
            entries,
            phase: Some(PhaseExact { modulus, phases }),
        })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn phase_exact(&self) -> Option<&PhaseExact> {
        self.phase.as_ref()
    }

    /// `C_{A,A}(0)`, the sum of squared magnitudes.
    pub fn energy(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn is_unimodular(&self, tol: f64) -> bool {
        self.entries.iter().all(|z| (z.norm() - 1.0).abs() <= tol)
    }

    /// Entrywise complex conjugate; keeps the phase representation when present.
    pub fn conj(&self) -> Sequence {
        match &self.phase {
            Some(pe) => {
                let period = 2 * pe.modulus;
                let phases = pe.phases.iter().map(|&p| (period - p) % period).collect();
                Self::from_canonical_phases(pe.modulus, phases).expect("nonempty")
            }
            None => Sequence {
                entries: self.entries.iter().map(|z| z.conj()).collect(),
                phase: None,
            },
        }
    }

    /// Multiplies every entry by `c`; drops any phase representation.
    pub fn scaled(&self, c: Complex64) -> Result<Sequence> {
        Sequence::new(self.entries.iter().map(|z| z * c).collect())
    }
}
