//! Exact q-series machinery for the g-gonal generalization of the Pentagonal
//! Number Theorem: truncated integer power series, gonal sign series,
//! restricted partition and divisor-sum tables, the recurrences and
//! convolutions connecting them, and Bell-polynomial identities. Every
//! identity can be checked coefficient-exactly up to a chosen order.

pub mod bellpoly;
pub mod cli;
pub mod divisors;
pub mod error;
pub mod gonal;
pub mod identities;
pub mod partitions;
pub mod qseries;

pub use error::{Error, Result};
pub use gonal::GonalSpec;
pub use identities::{verify_identity, IdentityId, IdentityParams, VerificationReport};
pub use qseries::{ExponentClass, TruncatedSeries};
