//! Exact linear algebra over Euclidean domains and `Z/p^n`.
//!
//! Hermite (column-echelon) forms drive kernels, exact solving and lattice
//! normal forms; Smith normal forms with verified certificates drive module
//! presentations, elementary divisors and Fitting ideals.

mod matrix;
mod hermite;
mod smith;
mod presentation;

pub use matrix::Matrix;
pub use hermite::{
    col_hermite, kernel, lattice_canonical, solve_in_submodule, solve_matrix, solve_vec, Hermite,
};
pub use presentation::{elementary_divisors, fitting_ideal, ModulePresentation};
pub use smith::{smith_form, SmithForm};

use crate::ring::RingError;
use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinalgError {
    Ring(RingError),
    Shape(String),
    Unsupported(&'static str),
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinalgError::Ring(e) => write!(f, "{e}"),
            LinalgError::Shape(s) => write!(f, "shape mismatch: {s}"),
            LinalgError::Unsupported(s) => write!(f, "unsupported: {s}"),
        }
    }
}

impl From<RingError> for LinalgError {
    fn from(e: RingError) -> Self {
        LinalgError::Ring(e)
    }
}

impl core::error::Error for LinalgError {}
