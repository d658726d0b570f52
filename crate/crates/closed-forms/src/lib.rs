//! Closed-form evaluations in log space: the Selberg family of gamma products,
//! q-gamma and elliptic gamma kernels.

mod error;
pub mod elliptic;
pub mod gamma;
pub mod jackf;
pub mod qseries;
pub mod selberg;
mod value;

pub use elliptic::{
    askey_wilson_rhs, elliptic_beta_rhs, elliptic_gamma, q_pochhammer_complex, spiridonov_rhs, theta,
    EllipticParams,
};
pub use error::{ClosedFormError, Result};
pub use gamma::{digamma, gamma, gamma_complex, log_gamma, log_gamma_complex, log_gamma_signed, trigamma};
pub use qseries::{q_gamma, q_gamma_value, q_pochhammer, q_selberg_rhs, QOrder};
pub use selberg::*;
pub use value::GammaProductValue;
