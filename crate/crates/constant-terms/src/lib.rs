//! Root systems and exact verification of constant-term identities.

mod error;
mod identity;
mod roots;

pub use error::{CtError, Result};
pub use identity::{dyson_product, verify_bcs, verify_ct, verify_ct_with_ceiling, CtIdentitySpec, CtReport, CtValue};
pub use roots::{RootKind, RootSystem};
