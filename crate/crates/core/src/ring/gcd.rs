//! Greatest common divisors.
//!
//! Euclidean rings use the Euclidean algorithm with normalized output. The
//! tower ring over the integers is not Euclidean; there, gcds are restricted
//! to elements of cyclotomic-monomial shape `unit * q_k^e * prod(q_k^a - 1)`,
//! which factor exactly into cyclotomic polynomials, so the gcd is read off
//! from multiplicities. On pure `q^a - 1` inputs this reproduces
//! `gcd(q^a - 1, q^b - 1) = q^(gcd(a,b)) - 1`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::element::{Coeffs, ElementData};
use super::{Ring, RingDescriptor, RingError};

pub fn gcd(ring: &Ring, a: &ElementData, b: &ElementData) -> Result<ElementData, RingError> {
    if ring.is_zero(a) {
        return Ok(ring.normalize_associate(b).0);
    }
    if ring.is_zero(b) {
        return Ok(ring.normalize_associate(a).0);
    }
    match ring.descriptor() {
        RingDescriptor::Integers => {
            if let (ElementData::Int(x), ElementData::Int(y)) = (a, b) {
                Ok(ElementData::Int(x.gcd(y)))
            } else {
                unreachable!()
            }
        }
        _ if ring.is_field() => Ok(ring.one()),
        _ if ring.is_euclidean() => {
            let (mut r0, mut r1) = (a.clone(), b.clone());
            while !ring.is_zero(&r1) {
                let (_, r) = ring.euclid_divmod(&r0, &r1).expect("euclidean ring");
                r0 = r1;
                r1 = r;
            }
            Ok(ring.normalize_associate(&r0).0)
        }
        RingDescriptor::Tower { base, .. } if matches!(base.descriptor(), RingDescriptor::Integers) => {
            let fa = cyclo_factor(ring, a).ok_or(RingError::Unsupported(
                "gcd over Z[q_k] needs cyclotomic-monomial inputs",
            ))?;
            let fb = cyclo_factor(ring, b).ok_or(RingError::Unsupported(
                "gcd over Z[q_k] needs cyclotomic-monomial inputs",
            ))?;
            let mut out = ring.one();
            for (d, ma) in fa.phi_mult.iter() {
                if let Some(mb) = fb.phi_mult.get(d) {
                    let m = core::cmp::min(*ma, *mb);
                    let phi = cyclotomic_element(ring, *d);
                    out = ring.mul(&out, &ring.pow(&phi, m as u64));
                }
            }
            Ok(ring.normalize_associate(&out).0)
        }
        _ => Err(RingError::Unsupported("gcd not available over this ring")),
    }
}

/// Cyclotomic-monomial factorization data: `sign * q_k^e * prod Phi_d^m_d`.
pub struct CycloFactors {
    pub unit_exp: i64,
    pub negative: bool,
    pub phi_mult: BTreeMap<u64, u32>,
}

/// Factor a tower-over-Z element as a cyclotomic monomial, if it has that shape.
pub fn cyclo_factor(_ring: &Ring, a: &ElementData) -> Option<CycloFactors> {
    let pd = match a {
        ElementData::Poly(pd) => pd,
        _ => return None,
    };
    if pd.coeffs.is_empty() {
        return None;
    }
    let mut body: Vec<BigInt> = match &pd.coeffs {
        Coeffs::Gen(v) => v
            .iter()
            .map(|e| match e {
                ElementData::Int(x) => Some(x.clone()),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()?,
        Coeffs::Mod(_) => return None,
    };
    let mut mult: BTreeMap<u64, u32> = BTreeMap::new();
    let mut memo: BTreeMap<u64, Vec<BigInt>> = BTreeMap::new();
    // every cyclotomic factor Phi_d of prod (q^a - 1) has d <= a <= deg
    let deg0 = (body.len() - 1) as u64;
    for d in 1..=deg0 {
        if body.len() == 1 {
            break;
        }
        let phi = cyclotomic_coeffs(d, &mut memo);
        let mut m = 0u32;
        while let Some(q) = zpoly_div_exact(&body, &phi) {
            body = q;
            m += 1;
        }
        if m > 0 {
            mult.insert(d, m);
        }
    }
    if body.len() > 1 {
        return None;
    }
    let c = &body[0];
    if c.magnitude().is_one() {
        Some(CycloFactors {
            unit_exp: pd.unit_exp,
            negative: c.is_negative(),
            phi_mult: mult,
        })
    } else {
        None
    }
}

/// The `d`-th cyclotomic polynomial as a tower element.
pub fn cyclotomic_element(ring: &Ring, d: u64) -> ElementData {
    let base = ring.base_ring().expect("tower ring");
    let mut memo = BTreeMap::new();
    let coeffs = cyclotomic_coeffs(d, &mut memo);
    let items: Vec<ElementData> = coeffs
        .iter()
        .map(|c| base.from_bigint(c))
        .collect();
    ring.make_poly(0, Coeffs::from_elements(base, items))
}

/// Coefficients of the `n`-th cyclotomic polynomial over `Z`, by recursive
/// division of `x^n - 1` by the proper-divisor cyclotomics.
pub fn cyclotomic_coeffs(n: u64, memo: &mut BTreeMap<u64, Vec<BigInt>>) -> Vec<BigInt> {
    if let Some(v) = memo.get(&n) {
        return v.clone();
    }
    let mut body = x_pow_minus_one(n);
    let mut d = 1u64;
    while d < n {
        if n % d == 0 {
            let phi = cyclotomic_coeffs(d, memo);
            body = zpoly_div_exact(&body, &phi).expect("cyclotomic division is exact");
        }
        d += 1;
    }
    memo.insert(n, body.clone());
    body
}

fn x_pow_minus_one(n: u64) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n as usize + 1];
    v[0] = -BigInt::one();
    v[n as usize] = BigInt::one();
    v
}

/// Exact division of integer polynomials (coefficient vectors, ascending).
fn zpoly_div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    if b.is_empty() || a.len() < b.len() {
        return None;
    }
    let lb = b.last().unwrap();
    let mut rem: Vec<BigInt> = a.to_vec();
    let mut quo = vec![BigInt::zero(); a.len() - b.len() + 1];
    for k in (0..quo.len()).rev() {
        let top = rem[k + b.len() - 1].clone();
        if top.is_zero() {
            continue;
        }
        let (c, r) = top.div_rem(lb);
        if !r.is_zero() {
            return None;
        }
        for (j, bj) in b.iter().enumerate() {
            let t = &c * bj;
            rem[k + j] -= t;
        }
        quo[k] = c;
    }
    if rem.iter().all(|x| x.is_zero()) {
        Some(quo)
    } else {
        None
    }
}
