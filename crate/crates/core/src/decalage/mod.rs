//! The decalage functor `L-eta_f`, its natural map to the identity, Bockstein
//! complexes, and the identities relating them.
//!
//! For a complex `N` of finite free modules (so no torsion-free replacement
//! is needed; kernels of maps of free modules over a domain are torsion-free)
//! and a regular scalar `f`, the subcomplex has degree-`n` part
//! `{x in f^n N^n : dx in f^(n+1) N^(n+1)}`, with the `f`-power weighting
//! starting at the lowest support degree.

mod eta;
mod bockstein;
mod identities;

pub use bockstein::{bockstein, BocksteinComplex};
pub use eta::{eta, eta_nat, eta_nat_check, EtaResult};
pub use identities::{
    eta_bockstein_compare, eta_identities, BaseChangeVerdict, EtaIdentitiesReport,
};
