//! Generalized Gauss sums `S_N(x, θ)`: direct evaluation, the error-function
//! based decomposition, asymptotic estimates, and their link to the
//! crosscorrelations of Chu pairs.

mod erfc;
mod estimates;
mod paris;
mod sum;

pub use erfc::{erfc_antidiag, erfc_diag, erfc_diag_scaled, fresnel, fresnel_aux, SERIES_MAX_T};
pub use estimates::{
    correlation_gauss_identity, correlation_gauss_sweep, in_lemma33_range, lemma32_max_ratio,
    lemma33_admissible, lemma33_estimate, PairKind,
};
pub use paris::{
    e_term, e_term_antidiag, g, g_series, paris_decompose, ParisDecomposition, G_SERIES_MAX,
};
pub use sum::{gauss_sum_direct, GaussParams, MAX_TERMS};
