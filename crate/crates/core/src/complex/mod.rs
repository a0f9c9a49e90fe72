//! Bounded cochain complexes of finite free modules: validation, cones,
//! tensor products, base change, cohomology presentations and
//! quasi-isomorphism certification; weight-graded complexes as block families.

mod cochain;
mod chain_map;
mod cohomology;
mod weight;

pub use chain_map::{cone, quasi_iso, ChainMap, QuasiIsoMode, QuasiIsoVerdict};
pub use cochain::CochainComplex;
pub use cohomology::{
    cohomology, cohomology_at, CohomologyModule, CohomologyReport, CohomologySummary,
    PresentedComplex,
};
pub use weight::WeightGradedComplex;

use crate::linalg::LinalgError;
use crate::ring::RingError;
use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComplexError {
    /// `d . d != 0`, with the first failing degree.
    NotAComplex { degree: i64 },
    /// Shape or ring inconsistency.
    Malformed(String),
    /// A chain map fails to commute at the given degree.
    NotChainMap { degree: i64 },
    Ring(RingError),
    Linalg(LinalgError),
    Unsupported(&'static str),
    /// A produced weight left the declared band.
    WeightOverflow(String),
}

impl fmt::Display for ComplexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexError::NotAComplex { degree } => {
                write!(f, "d.d != 0 at degree {degree}")
            }
            ComplexError::Malformed(s) => write!(f, "malformed complex: {s}"),
            ComplexError::NotChainMap { degree } => {
                write!(f, "map does not commute with differentials at degree {degree}")
            }
            ComplexError::Ring(e) => write!(f, "{e}"),
            ComplexError::Linalg(e) => write!(f, "{e}"),
            ComplexError::Unsupported(s) => write!(f, "unsupported: {s}"),
            ComplexError::WeightOverflow(s) => write!(f, "weight band overflow: {s}"),
        }
    }
}

impl From<RingError> for ComplexError {
    fn from(e: RingError) -> Self {
        ComplexError::Ring(e)
    }
}

impl From<LinalgError> for ComplexError {
    fn from(e: LinalgError) -> Self {
        ComplexError::Linalg(e)
    }
}

impl core::error::Error for ComplexError {}
