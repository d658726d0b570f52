//! Independent numerical evaluation of Selberg-type integrals and sums: endpoint-singular
//! quadrature, importance-sampled Monte Carlo, Jackson q-sums, torus trapezoid rules and
//! a handful of exact combinatorial and residual checks.
//!
//! Every parallel computation is an indexed map with an in-order reduction, so the
//! sequential and parallel executors give bit-identical results.

mod checks;
mod discrete;
mod error;
mod gelfond;
mod jackson;
mod mc;
mod pde;
mod poly;
mod quad;
pub mod tanh_sinh;
mod torus;

pub use checks::{okounkov_olshanski_check, si_identity_check, SiCheck};
pub use discrete::{
    hankel_hyperdet, hankel_hyperdet_with_ceiling, selberg_exact, stanley_probability, stanley_probability_with,
    StanleyEstimate, StanleyMode, HYPERDET_TERM_CEILING, STANLEY_STATE_CEILING,
};
pub use error::{NumericError, Result};
pub use gelfond::{gelfond_min, GelfondMin};
pub use jackson::{jackson_sum, jackson_sum_with};
pub use mc::{mc_integrate, mc_integrate_with, KURTOSIS_GUARD};
pub use pde::{pde_residual_2f1, PdeResidual};
pub use poly::DensePoly;
pub use quad::{
    complex_selberg_n1, dixon_anderson_determinant, quad_integrate, quad_integrate_with, DensitySpec,
    IntegrationResult, Method,
};
pub use selberg_par::Exec;
pub use torus::{torus_quadrature, torus_quadrature_with, TorusIntegrand, COARSE_GRID_TOL};
