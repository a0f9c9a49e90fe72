//! Tower-ring operations: level embeddings, Frobenius, the distinguished
//! elements, q-integers, specialization and truncation units.

use alloc::vec::Vec;

use super::element::{Coeffs, ElementData, PolyData};
use super::poly;
use super::{Ring, RingError};

/// The distinguished elements of the tower model.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Distinguished {
    /// `mu = q - 1 = q_k^(p^k) - 1`.
    Mu,
    /// `xi = mu / phi^{-1}(mu)`; needs level >= 1.
    Xi,
    /// `xi_r = mu / phi^{-r}(mu)`; needs level >= r.
    XiR(u32),
    /// `phi(xi) = [p]_q`.
    PhiXi,
}

fn params(ring: &Ring) -> Result<(Ring, u64, u32), RingError> {
    ring.tower_params()
        .map(|(b, p, l)| (b.clone(), p, l))
        .ok_or(RingError::Unsupported("operation needs a tower ring"))
}

/// Embed into the same tower at a higher level (`q_k = q_{k+1}^p`).
pub fn embed_to_level(ring: &Ring, a: &ElementData, new_level: u32) -> Result<ElementData, RingError> {
    let (base, p, level) = params(ring)?;
    if new_level < level {
        return Err(RingError::LevelTooLow { needed: level, have: new_level });
    }
    let target = Ring::tower(base.clone(), p, new_level)?;
    let s = p.pow(new_level - level);
    match a {
        ElementData::Poly(pd) => {
            let stretched = poly::stretch(&base, &pd.coeffs, s as usize);
            Ok(target.make_poly(pd.unit_exp * s as i64, stretched))
        }
        _ => Err(RingError::Unsupported("tower element expected")),
    }
}

/// Ring of the same tower at a shifted level.
pub fn level_shift_ring(ring: &Ring, delta: i64) -> Result<Ring, RingError> {
    let (base, p, level) = params(ring)?;
    let new = level as i64 + delta;
    if new < 0 {
        return Err(RingError::LevelTooLow { needed: (-delta) as u32, have: level });
    }
    Ring::tower(base, p, new as u32)
}

/// Frobenius `phi^power`.
///
/// `power >= 0` is the endomorphism `q_k -> q_k^(p^power)` of the same ring;
/// `power < 0` relabels into the level-`k+|power|` ring (an injective map,
/// with `phi . phi^{-1}` equal to the level embedding).
pub fn frobenius(ring: &Ring, a: &ElementData, power: i64) -> Result<(Ring, ElementData), RingError> {
    let (base, p, _level) = params(ring)?;
    let pd = match a {
        ElementData::Poly(pd) => pd,
        _ => return Err(RingError::Unsupported("tower element expected")),
    };
    if power >= 0 {
        let s = p.pow(power as u32);
        let stretched = poly::stretch(&base, &pd.coeffs, s as usize);
        Ok((ring.clone(), ring.make_poly(pd.unit_exp * s as i64, stretched)))
    } else {
        let target = level_shift_ring(ring, -power)?;
        Ok((target.clone(), ElementData::Poly(PolyData { unit_exp: pd.unit_exp, coeffs: pd.coeffs.clone() })))
    }
}

/// Substitute `q_k -> q_k^s` for `s >= 1` (used for q-integer identities).
pub fn subst_power(ring: &Ring, a: &ElementData, s: u64) -> Result<ElementData, RingError> {
    let (base, _, _) = params(ring)?;
    match a {
        ElementData::Poly(pd) => {
            let stretched = poly::stretch(&base, &pd.coeffs, s as usize);
            Ok(ring.make_poly(pd.unit_exp * s as i64, stretched))
        }
        _ => Err(RingError::Unsupported("tower element expected")),
    }
}

fn ones_at_stride(ring: &Ring, base: &Ring, count: u64, stride: u64) -> ElementData {
    let n = ((count - 1) * stride + 1) as usize;
    let mut items: Vec<ElementData> = (0..n).map(|_| base.zero()).collect();
    for i in 0..count {
        items[(i * stride) as usize] = base.one();
    }
    ring.make_poly(0, Coeffs::from_elements(base, items))
}

/// The distinguished elements as exact polynomials at the ring's level.
pub fn distinguished(ring: &Ring, which: Distinguished) -> Result<ElementData, RingError> {
    let (base, p, level) = params(ring)?;
    let qk = p.pow(level);
    match which {
        Distinguished::Mu => {
            // q_k^(p^k) - 1
            let hi = ring.monomial(qk as i64, base.one());
            Ok(ring.sub(&hi, &ring.one()))
        }
        Distinguished::Xi => {
            if level < 1 {
                return Err(RingError::LevelTooLow { needed: 1, have: level });
            }
            Ok(ones_at_stride(ring, &base, p, p.pow(level - 1)))
        }
        Distinguished::XiR(r) => {
            if level < r {
                return Err(RingError::LevelTooLow { needed: r, have: level });
            }
            if r == 0 {
                return Ok(ring.one());
            }
            Ok(ones_at_stride(ring, &base, p.pow(r), p.pow(level - r)))
        }
        Distinguished::PhiXi => Ok(ones_at_stride(ring, &base, p, qk)),
    }
}

/// `phi^{-r}(mu) = q_k^(p^(k-r)) - 1`, representable at level `k >= r`.
pub fn phi_inv_mu(ring: &Ring, r: u32) -> Result<ElementData, RingError> {
    let (base, p, level) = params(ring)?;
    if level < r {
        return Err(RingError::LevelTooLow { needed: r, have: level });
    }
    let hi = ring.monomial(p.pow(level - r) as i64, base.one());
    Ok(ring.sub(&hi, &ring.one()))
}

/// `phi^{-i}(xi) = xi_{i+1} / xi_i`, representable at level `k >= i + 1`.
pub fn phi_inv_xi(ring: &Ring, i: u32) -> Result<ElementData, RingError> {
    let (base, p, level) = params(ring)?;
    if level < i + 1 {
        return Err(RingError::LevelTooLow { needed: i + 1, have: level });
    }
    Ok(ones_at_stride(ring, &base, p, p.pow(level - i - 1)))
}

/// The q-analogue `[j]_q = (q^j - 1)/(q - 1)` of an integer.
///
/// For `j >= 0` this is the polynomial `1 + q + ... + q^(j-1)`; for `j < 0`
/// it is `-q^j [−j]_q` with the monomial unit tracked exactly.
pub fn q_int(ring: &Ring, j: i64) -> Result<ElementData, RingError> {
    let (base, p, level) = params(ring)?;
    let qk = p.pow(level);
    if j == 0 {
        return Ok(ring.zero());
    }
    if j > 0 {
        Ok(ones_at_stride(ring, &base, j as u64, qk))
    } else {
        let pos = ones_at_stride(ring, &base, (-j) as u64, qk);
        let shift = ring.monomial(j * qk as i64, base.one());
        Ok(ring.neg(&ring.mul(&shift, &pos)))
    }
}

/// Evaluate at `q_k = value` (a base-ring element), so `q` maps to
/// `value^(p^k)`. Negative tracked exponents need `value` to be a unit.
pub fn specialize_q(ring: &Ring, a: &ElementData, value: &ElementData) -> Result<ElementData, RingError> {
    let (base, _, _) = params(ring)?;
    let pd = match a {
        ElementData::Poly(pd) => pd,
        _ => return Err(RingError::Unsupported("tower element expected")),
    };
    if pd.coeffs.is_empty() {
        return Ok(base.zero());
    }
    let body = poly::eval(&base, &pd.coeffs, value);
    if pd.unit_exp == 0 {
        return Ok(body);
    }
    if pd.unit_exp > 0 {
        Ok(base.mul(&base.pow(value, pd.unit_exp as u64), &body))
    } else {
        let inv = base
            .inverse(value)
            .ok_or(RingError::Unsupported("specializing a Laurent unit at a non-unit"))?;
        Ok(base.mul(&base.pow(&inv, (-pd.unit_exp) as u64), &body))
    }
}

/// Evaluate at `q_k = 1` (always defined).
pub fn eval_at_one(ring: &Ring, a: &ElementData) -> Result<ElementData, RingError> {
    let (base, _, _) = params(ring)?;
    specialize_q(ring, a, &base.one())
}

/// Is `h` a unit in the truncation `(base/p^n)[q_k] / ((q_k - 1)^M)`?
///
/// That ring is local with maximal ideal `(p, q_k - 1)` and residue field
/// `F_p`, so for `n, M >= 1` the verdict depends only on `h(1) mod p`; the
/// exponents are accepted to keep the truncation explicit in reports. With
/// `n = 0` or `M = 0` the truncation is the zero ring and everything is a
/// unit.
pub fn unit_in_truncation(ring: &Ring, h: &ElementData, p_exp: u32, adic_exp: u32) -> Result<bool, RingError> {
    let (_base, p, _) = params(ring)?;
    if p_exp == 0 || adic_exp == 0 {
        return Ok(true);
    }
    let v = eval_at_one(ring, h)?;
    match v {
        ElementData::Int(x) => {
            use num_bigint::BigInt;
            use num_integer::Integer as _;
            use num_traits::Zero as _;
            Ok(!x.mod_floor(&BigInt::from(p)).is_zero())
        }
        ElementData::Mod(x) => Ok(x != 0),
        _ => Err(RingError::Unsupported("tower base must be Z or F_p")),
    }
}


