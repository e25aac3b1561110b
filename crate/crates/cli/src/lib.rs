//! IO, serialization and verification-suite layer over the core calculus.
//!
//! The `picard-weights` binary is a thin dispatcher over these modules; the
//! acceptance tests drive the same suite runners directly.

pub mod ledger;
pub mod output;
pub mod parallel;
pub mod verify;
