//! Sequence families: Chu sequences, Rudin-Shapiro pairs and the two Chu pair
//! constructions whose Pursley-Sarwate criterion tends to 1.

use crate::error::{Error, Result};
use crate::seqcore::Sequence;

/// Largest Rudin-Shapiro order accepted (length `2^24`).
pub const RUDIN_SHAPIRO_MAX_ORDER: u32 = 24;

const CHU_MAX: u64 = 1 << 31;

/// Parameters of the Chu sequence `Z_n^{(a)}`, `z_j = exp(πi·a·j²/n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChuSpec {
    pub n: u64,
    pub a: i64,
}

impl ChuSpec {
    pub fn new(n: u64, a: i64) -> Self {
        ChuSpec { n, a }
    }

    /// `a` reduced into `[0, 2n)`; Chu sequences are periodic in `a` with period `2n`.
    pub fn canonical_a(&self) -> u64 {
        (self.a as i128).rem_euclid(2 * self.n as i128) as u64
    }

    pub fn phases(&self) -> Result<Vec<u64>> {
        if self.n == 0 {
            return Err(Error::InvalidSpec("Chu length must be >= 1".into()));
        }
        if self.n > CHU_MAX || self.a.unsigned_abs() > CHU_MAX {
            return Err(Error::InvalidSpec(format!(
                "Chu parameters (n={}, a={}) exceed 2^31",
                self.n, self.a
            )));
        }
        let period = 2 * self.n as u128;
        let a = self.canonical_a() as u128;
        Ok((0..self.n as u128)
            .map(|j| ((a * ((j * j) % period)) % period) as u64)
            .collect())
    }
}

/// Phase-exact Chu sequence `Z_n^{(a)}` with modulus `L = n`.
pub fn chu(spec: ChuSpec) -> Result<Sequence> {
    let phases = spec.phases()?;
    Sequence::from_canonical_phases(spec.n, phases)
}

/// Binary Golay pair of length `2^m` from `A' = A‖B`, `B' = A‖(−B)`, starting at `((1), (1))`.
/// Both members are phase-exact with modulus 1 (phase 0 ↦ +1, phase 1 ↦ −1).
pub fn rudin_shapiro_pair(m: u32) -> Result<(Sequence, Sequence)> {
    if m > RUDIN_SHAPIRO_MAX_ORDER {
        return Err(Error::InvalidSpec(format!(
            "Rudin-Shapiro order {m} exceeds {RUDIN_SHAPIRO_MAX_ORDER}"
        )));
    }
    let mut a: Vec<u64> = vec![0];
    let mut b: Vec<u64> = vec![0];
    for _ in 0..m {
        let mut na = a.clone();
        na.extend_from_slice(&b);
        let mut nb = a;
        nb.extend(b.iter().map(|&p| p ^ 1));
        a = na;
        b = nb;
    }
    Ok((
        Sequence::from_canonical_phases(1, a)?,
        Sequence::from_canonical_phases(1, b)?,
    ))
}

/// `(Z_n^{(1)}, Z_n^{(-1)})`.
pub fn theorem1_pair(n: u64) -> Result<(Sequence, Sequence)> {
    Ok((chu(ChuSpec::new(n, 1))?, chu(ChuSpec::new(n, -1))?))
}

/// `(Z_{2n}^{(n+1)}, Z_{2n}^{(n-1)})`, each of length `2n`.
pub fn theorem2_pair(n: u64) -> Result<(Sequence, Sequence)> {
    if n == 0 {
        return Err(Error::InvalidSpec("pair parameter n must be >= 1".into()));
    }
    let a = i64::try_from(n).map_err(|_| Error::InvalidSpec("n too large".into()))?;
    Ok((
        chu(ChuSpec::new(2 * n, a + 1))?,
        chu(ChuSpec::new(2 * n, a - 1))?,
    ))
}
