//! Partitions, symmetric polynomials in the monomial basis and Jack polynomials
//! `P_lambda^{(1/gamma)}` computed exactly over the rationals.

mod error;
mod hyper;
mod jack;
mod partition;
mod symmetric;

pub use error::{JackError, Result};
pub use hyper::{hyper_layers, hyper_series, hyper_series_poly, HyperSum};
pub use jack::{cs_apply, ct_inner_product, jack, jack_eval, jack_eval_ones, jack_norm_exact, jack_norm_rhs, JackParams};
pub use partition::{dominance_leq, gen_pochhammer, hook_products, partitions_of, partitions_up_to, Partition};
pub use symmetric::{distinct_permutations, SymmetricPoly};
