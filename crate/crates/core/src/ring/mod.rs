//! Computable commutative coefficient rings with exact arithmetic.
//!
//! The central objects are [`RingDescriptor`] (a runtime description of a ring),
//! [`Ring`] (a shared handle to a descriptor, through which all arithmetic is
//! dispatched) and [`RingElement`] (a descriptor paired with canonical-form data).
//!
//! Besides the familiar rings (integers, rationals, residue rings, prime fields,
//! univariate polynomials), the module implements the *tower ring*
//! `base[q_k]` with the convention `q = q_k^(p^k)`: the level-`k` stage of the
//! cyclotomic model of the Witt-vector period ring. Frobenius acts by
//! `q_k -> q_k^p`; its inverse raises the level. The distinguished elements
//! `mu = q - 1`, `xi = mu / phi^{-1}(mu)` and `xi_r = mu / phi^{-r}(mu)` are
//! exact polynomials at any sufficiently high level.

mod descriptor;
mod element;
mod poly;
mod tower;
mod gcd;

pub use descriptor::{Ring, RingDescriptor};
pub use element::{Coeffs, ElementData, PolyData, RingElement};
pub use gcd::{cyclo_factor, cyclotomic_element, CycloFactors};
pub use tower::Distinguished;

use alloc::string::String;
use core::fmt;

/// Frobenius `phi^power` on a tower element; negative powers raise the level.
pub fn frobenius(a: &RingElement, power: i64) -> Result<RingElement, RingError> {
    let (ring, data) = tower::frobenius(a.ring(), a.data(), power)?;
    Ok(RingElement::new(ring, data))
}

/// The q-analogue `[j]_q` in a tower ring.
pub fn q_int(ring: &Ring, j: i64) -> Result<RingElement, RingError> {
    Ok(RingElement::new(ring.clone(), tower::q_int(ring, j)?))
}

/// A distinguished element (`mu`, `xi`, `xi_r`, `phi(xi)`) at the ring's level.
pub fn distinguished(ring: &Ring, which: Distinguished) -> Result<RingElement, RingError> {
    Ok(RingElement::new(ring.clone(), tower::distinguished(ring, which)?))
}

/// `phi^{-r}(mu)`, representable at level `k >= r` without raising the level.
pub fn phi_inv_mu(ring: &Ring, r: u32) -> Result<RingElement, RingError> {
    Ok(RingElement::new(ring.clone(), tower::phi_inv_mu(ring, r)?))
}

/// `phi^{-i}(xi)`, representable at level `k >= i + 1`.
pub fn phi_inv_xi(ring: &Ring, i: u32) -> Result<RingElement, RingError> {
    Ok(RingElement::new(ring.clone(), tower::phi_inv_xi(ring, i)?))
}

/// Evaluate a tower element at `q_k = value` (a base-ring element).
pub fn specialize_q(a: &RingElement, value: &RingElement) -> Result<RingElement, RingError> {
    let base = a
        .ring()
        .base_ring()
        .ok_or(RingError::Unsupported("tower element expected"))?
        .clone();
    if value.ring() != &base {
        return Err(RingError::Mismatch(base.name(), value.ring().name()));
    }
    Ok(RingElement::new(base, tower::specialize_q(a.ring(), a.data(), value.data())?))
}

/// Unit test in the `(p, q_k - 1)`-adic truncation with exponents `(n, M)`.
pub fn unit_in_truncation(a: &RingElement, p_exp: u32, adic_exp: u32) -> Result<bool, RingError> {
    tower::unit_in_truncation(a.ring(), a.data(), p_exp, adic_exp)
}

/// Substitute `q_k -> q_k^s`, `s >= 1`.
pub fn subst_power(a: &RingElement, s: u64) -> Result<RingElement, RingError> {
    Ok(RingElement::new(a.ring().clone(), tower::subst_power(a.ring(), a.data(), s)?))
}

/// Embed a tower element into the same tower at a higher level.
pub fn embed_to_level(a: &RingElement, level: u32) -> Result<RingElement, RingError> {
    let target = Ring::tower(
        a.ring()
            .base_ring()
            .ok_or(RingError::Unsupported("tower element expected"))?
            .clone(),
        a.ring().tower_params().unwrap().1,
        level,
    )?;
    Ok(RingElement::new(target, tower::embed_to_level(a.ring(), a.data(), level)?))
}

/// Ring of the same tower at a shifted level.
pub fn level_shift_ring(ring: &Ring, delta: i64) -> Result<Ring, RingError> {
    tower::level_shift_ring(ring, delta)
}

/// Evaluate a tower element at `q_k = 1`.
pub fn eval_at_one(a: &RingElement) -> Result<RingElement, RingError> {
    let base = a
        .ring()
        .base_ring()
        .ok_or(RingError::Unsupported("tower element expected"))?
        .clone();
    Ok(RingElement::new(base, tower::eval_at_one(a.ring(), a.data())?))
}

/// Errors raised by ring operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingError {
    /// Two elements from incompatible rings were combined.
    Mismatch(String, String),
    /// Division by zero.
    DivisionByZero,
    /// The divisor is a zero divisor in a non-domain.
    ZeroDivisor,
    /// The ring (or the shape of the inputs) is not supported by the operation.
    Unsupported(&'static str),
    /// A tower-ring operation needs a higher level than the ring provides.
    LevelTooLow { needed: u32, have: u32 },
}

impl fmt::Display for RingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingError::Mismatch(a, b) => write!(f, "ring mismatch: {a} vs {b}"),
            RingError::DivisionByZero => write!(f, "division by zero"),
            RingError::ZeroDivisor => write!(f, "divisor is a zero divisor"),
            RingError::Unsupported(what) => write!(f, "unsupported: {what}"),
            RingError::LevelTooLow { needed, have } => {
                write!(f, "tower level too low: need {needed}, have {have}")
            }
        }
    }
}

impl core::error::Error for RingError {}
