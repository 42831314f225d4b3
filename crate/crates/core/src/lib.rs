//! Aperiodic correlation analysis of Chu-sequence pairs.
//!
//! * [`seqcore`]: sequences, correlation profiles (direct and FFT), demerit
//!   factors and the Pursley-Sarwate criterion.
//! * [`generators`]: Chu sequences, Rudin-Shapiro pairs and the two Chu pair
//!   constructions.
//! * [`chu_closedform`]: closed-form autocorrelation demerit factor of Chu
//!   sequences, used as an independent oracle.
//! * [`gauss`]: generalized Gauss sums and their decomposition.
//! * [`experiments`]: convergence studies of the asymptotic limits.
//! * [`verify`]: oracle-equivalence suites with pass/fail outcomes.

pub mod chu_closedform;
pub mod error;
pub mod experiments;
pub mod gauss;
pub mod generators;
pub mod numeric;
pub mod seqcore;
pub mod verify;

pub use error::{Error, Result};
pub use num_complex::Complex64;
