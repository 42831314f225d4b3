//! Sequences, aperiodic correlation and demerit factors.

mod correlation;
mod demerit;
mod sequence;
mod text;

pub use correlation::{
    crosscorrelation, crosscorrelation_fft, crosscorrelation_naive, fft_len, CorrelationMethod,
    CorrelationProfile,
};
pub use demerit::{
    adf, adf_with, cdf, cdf_with, golay_defect, golay_defect_with, max_profile_difference, pair_profiles,
    psc, psc_with, report_from_profiles, PairProfiles, DemeritReport, Method, AUTO_NAIVE_MAX_LEN,
};
pub use sequence::{PhaseExact, Sequence};
pub use text::{parse_text, write_text};
