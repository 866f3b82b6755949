//! Truncated q-series with sparse multivariate Laurent coefficients.

pub mod coeff;
pub mod format;
pub mod monomial;
pub mod pochhammer;
pub mod qseries;
pub mod varset;

pub use coeff::MultiCoeff;
pub use format::{coeff_to_string, series_to_string};
pub use monomial::Monomial;
pub use pochhammer::{
    div_poch, gaussian_coefficients, mul_poch, poch_inverse, pochhammer, q_binomial, triple_product, PochLength,
    PochSpec,
};
pub use qseries::{EqualityReport, QSeries, EXACT};
pub use varset::{Exps, VarSet, MAX_VARS};
