//! Samplers for the random point processes behind Selberg-type integrals: random rational
//! functions with Dirichlet weights, random three-term recurrences, tridiagonal beta
//! ensembles and random-walk Metropolis chains, plus moment and KS checks.
//!
//! Batches of draws use per-index seeds and chains use derived seeds, so output does not
//! depend on the executor.

mod dirichlet;
mod error;
mod metropolis;
mod recurrence;
mod roots;
mod sample;
mod stats;

pub use dirichlet::dirichlet_sample;
pub use error::{EnsembleError, Result};
pub use metropolis::{
    metropolis_sample, metropolis_sample_with, MetropolisConfig, MetropolisRun, TargetDensity, TuningWarning,
    ACCEPTANCE_RANGE, TARGET_ACCEPTANCE,
};
pub use recurrence::{crystallized_roots, hermite_beta_sample, jacobi_zeros, selberg_density_sample, HermiteMethod};
pub use roots::{rational_roots, RationalShape};
pub use sample::{EnsembleSample, Family, RandomRecurrenceState, SampleMeta};
pub use selberg_par::Exec;
pub use stats::{
    circular_gap, draw_many, ks_two_sample, moment_report, write_csv, KsResult, MomentRow, MIN_REPORT_SAMPLES,
    REPORT_BATCHES,
};
