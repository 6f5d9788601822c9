//! Exact and certified-precision evaluation of generalized hypergeometric
//! series, together with a catalog of verifiable summation and
//! transformation identities.
//!
//! The crate works over arbitrary-precision rationals throughout. Numeric
//! answers come back as an exact rational estimate plus a rigorous bound on
//! its distance from the true value, so every reported digit is certified
//! rather than heuristic. Formal identities between power series are checked
//! by exact coefficient comparison at a configurable truncation order.
//!
//! See the `examples/` directory for runnable tours of each capability, and
//! the `hypersum` binary for a command-line interface.

pub mod certified;
pub mod cli;
pub mod closed_forms;
pub mod error;
pub mod exact;
pub mod hyper;
pub mod km;
pub mod ramanujan;
pub mod registry;
pub mod special;

pub use certified::CertifiedReal;
pub use error::{Error, Result};
pub use exact::series::TruncatedSeries;
pub use exact::Rational;
pub use hyper::{HyperSpec, NumericValue};
pub use special::PrecisionContext;
