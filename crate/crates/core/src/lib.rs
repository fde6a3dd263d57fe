//! Partitions with a prescribed minimal excludant, singular overpartitions,
//! and exact verification of their arithmetic-progression congruences.
//!
//! All arithmetic is exact: counting functions are coefficients of truncated
//! power series with arbitrary-precision integer coefficients.

pub mod congruence;
pub mod error;
pub mod mex;
pub mod overpartition;
pub mod partition;
pub mod qseries;
pub mod report;
pub mod stats;
pub mod suite;

pub use error::{Error, Result};
pub use qseries::TruncatedSeries;
pub use report::VerificationReport;
