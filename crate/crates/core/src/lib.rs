//! Exact divisor theory for monadic submonoids of Int(Z), the ring of
//! integer-valued polynomials over the integers.

pub mod cones;
pub mod divisor;
pub mod error;
pub mod invariants;
pub mod linalg;
pub mod monoid;
pub mod numtheory;
pub mod pipeline;
pub mod profiles;
pub mod report;
pub mod submonoid;
pub mod zerosum;
pub mod zpoly;

pub use error::{Error, Result};
