//! Exact-arithmetic homological algebra at desk scale.
//!
//! The crate provides computable coefficient rings (including the finite-level
//! cyclotomic tower model of the Witt-vector period ring, with Frobenius and the
//! distinguished elements `mu`, `xi`, `xi_r`), exact linear algebra over Euclidean
//! domains (Hermite and Smith normal forms, module presentations, Fitting ideals),
//! bounded cochain complexes with cohomology presentations, the decalage functor
//! `L-eta_f` together with Bockstein complexes, truncated p-typical Witt vectors,
//! q-de Rham complexes and finite-level Koszul models of the torus, and the two
//! processes producing F-V-procomplex towers from a suitable dga.
//!
//! Everything is exact: no floating point anywhere. All values are immutable
//! after construction and safe to share between threads.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod ring;
pub mod linalg;
pub mod complex;
pub mod decalage;
pub mod witt;
pub mod qtorus;
pub mod fvproc;

pub use ring::{Ring, RingDescriptor, RingElement};
