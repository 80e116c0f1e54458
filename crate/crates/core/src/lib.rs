//! Signed permutations (the hyperoctahedral group, Coxeter type B), their
//! peak sets, and the Hamming, l∞ and word distances between them.
//!
//! The [`extremal`] module enumerates whole peak classes and checks the
//! closed-form minimum and maximum distances by brute force.

pub mod cli;
pub mod constructions;
pub mod error;
pub mod extremal;
pub mod metrics;
pub mod peaks;
pub mod perm;
pub mod report;

pub use error::{Error, Result};
pub use metrics::{DistanceTable, MetricKind};
pub use peaks::PeakSet;
pub use perm::{GeneratorIndex, SignedPermutation};
