//! Dense coefficient-vector arithmetic shared by polynomial and tower rings.
//!
//! Coefficient vectors come in two lanes: a fast `u64` lane for residue-ring
//! bases (the hot path of the torus computations over `F_p[q_k]`) and a
//! general lane of boxed elements for every other base.

use alloc::vec;
use alloc::vec::Vec;

use super::element::{Coeffs, ElementData};
use super::Ring;

#[inline]
fn addm(a: u64, b: u64, m: u64) -> u64 {
    let s = a + b;
    if s >= m {
        s - m
    } else {
        s
    }
}

#[inline]
fn subm(a: u64, b: u64, m: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + m - b
    }
}

#[inline]
fn mulm(a: u64, b: u64, m: u64) -> u64 {
    // residues are < 2^32, so the product fits in u64
    (a * b) % m
}

fn inv_mod(a: u64, m: u64) -> Option<u64> {
    // extended Euclid on i128
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        let r = r0 - q * r1;
        r0 = r1;
        r1 = r;
        let s = s0 - q * s1;
        s0 = s1;
        s1 = s;
    }
    if r0 != 1 {
        return None;
    }
    let mut s = s0 % m as i128;
    if s < 0 {
        s += m as i128;
    }
    Some(s as u64)
}

pub(crate) fn inv_mod_u64(a: u64, m: u64) -> Option<u64> {
    inv_mod(a, m)
}

impl Coeffs {
    pub fn len(&self) -> usize {
        match self {
            Coeffs::Mod(v) => v.len(),
            Coeffs::Gen(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn empty_for(base: &Ring) -> Coeffs {
        if base.modulus_u64().is_some() {
            Coeffs::Mod(Vec::new())
        } else {
            Coeffs::Gen(Vec::new())
        }
    }

    pub fn get(&self, base: &Ring, i: usize) -> ElementData {
        match self {
            Coeffs::Mod(v) => ElementData::Mod(v.get(i).copied().unwrap_or(0)),
            Coeffs::Gen(v) => v.get(i).cloned().unwrap_or_else(|| base.zero()),
        }
    }

    pub fn from_elements(base: &Ring, items: Vec<ElementData>) -> Coeffs {
        if base.modulus_u64().is_some() {
            Coeffs::Mod(
                items
                    .into_iter()
                    .map(|e| match e {
                        ElementData::Mod(x) => x,
                        _ => panic!("coefficient lane mismatch"),
                    })
                    .collect(),
            )
        } else {
            Coeffs::Gen(items)
        }
    }

    pub fn to_elements(&self, base: &Ring) -> Vec<ElementData> {
        (0..self.len()).map(|i| self.get(base, i)).collect()
    }
}

fn trimmed_mod(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn trimmed_gen(base: &Ring, mut v: Vec<ElementData>) -> Vec<ElementData> {
    while v.last().map(|c| base.is_zero(c)) == Some(true) {
        v.pop();
    }
    v
}

pub(crate) fn trim(base: &Ring, c: Coeffs) -> Coeffs {
    match c {
        Coeffs::Mod(v) => Coeffs::Mod(trimmed_mod(v)),
        Coeffs::Gen(v) => Coeffs::Gen(trimmed_gen(base, v)),
    }
}

/// `a * x^sa + b * x^sb`, trimmed.
pub(crate) fn add_shifted(base: &Ring, a: &Coeffs, sa: usize, b: &Coeffs, sb: usize) -> Coeffs {
    let n = core::cmp::max(a.len() + sa, b.len() + sb);
    match (a, b) {
        (Coeffs::Mod(va), Coeffs::Mod(vb)) => {
            let m = base.modulus_u64().expect("mod lane");
            let mut out = vec![0u64; n];
            for (i, &x) in va.iter().enumerate() {
                out[i + sa] = addm(out[i + sa], x, m);
            }
            for (i, &x) in vb.iter().enumerate() {
                out[i + sb] = addm(out[i + sb], x, m);
            }
            Coeffs::Mod(trimmed_mod(out))
        }
        _ => {
            let mut out: Vec<ElementData> = (0..n).map(|_| base.zero()).collect();
            for i in 0..a.len() {
                out[i + sa] = base.add(&out[i + sa], &a.get(base, i));
            }
            for i in 0..b.len() {
                out[i + sb] = base.add(&out[i + sb], &b.get(base, i));
            }
            Coeffs::Gen(trimmed_gen(base, out))
        }
    }
}

pub(crate) fn neg(base: &Ring, a: &Coeffs) -> Coeffs {
    match a {
        Coeffs::Mod(v) => {
            let m = base.modulus_u64().expect("mod lane");
            Coeffs::Mod(v.iter().map(|&x| if x == 0 { 0 } else { m - x }).collect())
        }
        Coeffs::Gen(v) => Coeffs::Gen(v.iter().map(|x| base.neg(x)).collect()),
    }
}

pub(crate) fn mul(base: &Ring, a: &Coeffs, b: &Coeffs) -> Coeffs {
    if a.is_empty() || b.is_empty() {
        return Coeffs::empty_for(base);
    }
    match (a, b) {
        (Coeffs::Mod(va), Coeffs::Mod(vb)) => {
            let m = base.modulus_u64().expect("mod lane");
            let mut out = vec![0u64; va.len() + vb.len() - 1];
            for (i, &x) in va.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (j, &y) in vb.iter().enumerate() {
                    out[i + j] = addm(out[i + j], mulm(x, y, m), m);
                }
            }
            Coeffs::Mod(trimmed_mod(out))
        }
        _ => {
            let mut out: Vec<ElementData> = (0..a.len() + b.len() - 1).map(|_| base.zero()).collect();
            for i in 0..a.len() {
                let x = a.get(base, i);
                if base.is_zero(&x) {
                    continue;
                }
                for j in 0..b.len() {
                    let y = b.get(base, j);
                    let t = base.mul(&x, &y);
                    out[i + j] = base.add(&out[i + j], &t);
                }
            }
            Coeffs::Gen(trimmed_gen(base, out))
        }
    }
}

pub(crate) fn scale(base: &Ring, a: &Coeffs, c: &ElementData) -> Coeffs {
    match (a, c) {
        (Coeffs::Mod(v), ElementData::Mod(x)) => {
            let m = base.modulus_u64().expect("mod lane");
            Coeffs::Mod(trimmed_mod(v.iter().map(|&y| mulm(*x, y, m)).collect()))
        }
        _ => {
            let v: Vec<ElementData> = (0..a.len()).map(|i| base.mul(c, &a.get(base, i))).collect();
            Coeffs::Gen(trimmed_gen(base, v))
        }
    }
}

/// Substitute `x -> x^s` (exponent stretch), `s >= 1`.
pub(crate) fn stretch(base: &Ring, a: &Coeffs, s: usize) -> Coeffs {
    if a.is_empty() || s == 1 {
        return a.clone();
    }
    match a {
        Coeffs::Mod(v) => {
            let mut out = vec![0u64; (v.len() - 1) * s + 1];
            for (i, &x) in v.iter().enumerate() {
                out[i * s] = x;
            }
            Coeffs::Mod(out)
        }
        Coeffs::Gen(v) => {
            let mut out: Vec<ElementData> = (0..(v.len() - 1) * s + 1).map(|_| base.zero()).collect();
            for (i, x) in v.iter().enumerate() {
                out[i * s] = x.clone();
            }
            Coeffs::Gen(out)
        }
    }
}

/// Division with remainder; requires the divisor's leading coefficient to be a
/// unit of the base. Returns `(quotient, remainder)`.
pub(crate) fn divmod(base: &Ring, a: &Coeffs, b: &Coeffs) -> Option<(Coeffs, Coeffs)> {
    if b.is_empty() {
        return None;
    }
    if a.len() < b.len() {
        return Some((Coeffs::empty_for(base), a.clone()));
    }
    match (a, b) {
        (Coeffs::Mod(va), Coeffs::Mod(vb)) => {
            let m = base.modulus_u64().expect("mod lane");
            let lb = *vb.last().unwrap();
            let linv = inv_mod(lb, m)?;
            let mut rem = va.clone();
            let mut quo = vec![0u64; va.len() - vb.len() + 1];
            for k in (0..quo.len()).rev() {
                let top = rem[k + vb.len() - 1];
                if top == 0 {
                    continue;
                }
                let c = mulm(top, linv, m);
                quo[k] = c;
                for (j, &y) in vb.iter().enumerate() {
                    rem[k + j] = subm(rem[k + j], mulm(c, y, m), m);
                }
            }
            Some((Coeffs::Mod(trimmed_mod(quo)), Coeffs::Mod(trimmed_mod(rem))))
        }
        _ => {
            let lb = b.get(base, b.len() - 1);
            let linv = base.inverse(&lb)?;
            let mut rem = a.to_elements(base);
            let mut quo: Vec<ElementData> = (0..a.len() - b.len() + 1).map(|_| base.zero()).collect();
            for k in (0..quo.len()).rev() {
                let top = rem[k + b.len() - 1].clone();
                if base.is_zero(&top) {
                    continue;
                }
                let c = base.mul(&top, &linv);
                for j in 0..b.len() {
                    let t = base.mul(&c, &b.get(base, j));
                    rem[k + j] = base.sub(&rem[k + j], &t);
                }
                quo[k] = c;
            }
            Some((
                Coeffs::Gen(trimmed_gen(base, quo)),
                Coeffs::Gen(trimmed_gen(base, rem)),
            ))
        }
    }
}

/// Exact division over a domain base: `Some(q)` with `a = q*b`, else `None`.
///
/// Top-down long division, refusing any step whose leading-coefficient
/// division is inexact. Over a domain the quotient in the fraction field is
/// unique, so an inexact step or non-zero remainder certifies `b` does not
/// divide `a`.
pub(crate) fn div_exact(base: &Ring, a: &Coeffs, b: &Coeffs) -> Option<Coeffs> {
    if b.is_empty() {
        return None;
    }
    if a.is_empty() {
        return Some(Coeffs::empty_for(base));
    }
    if a.len() < b.len() {
        return None;
    }
    if let (Coeffs::Mod(_), Coeffs::Mod(_)) = (a, b) {
        // field base: plain division with remainder
        let (q, r) = divmod(base, a, b)?;
        return if r.is_empty() { Some(q) } else { None };
    }
    let lb = b.get(base, b.len() - 1);
    let mut rem = a.to_elements(base);
    let mut quo: Vec<ElementData> = (0..a.len() - b.len() + 1).map(|_| base.zero()).collect();
    for k in (0..quo.len()).rev() {
        let top = rem[k + b.len() - 1].clone();
        if base.is_zero(&top) {
            continue;
        }
        let c = base.try_divide(&top, &lb)?;
        for j in 0..b.len() {
            let t = base.mul(&c, &b.get(base, j));
            rem[k + j] = base.sub(&rem[k + j], &t);
        }
        quo[k] = c;
    }
    if rem.iter().all(|x| base.is_zero(x)) {
        Some(Coeffs::Gen(trimmed_gen(base, quo)))
    } else {
        None
    }
}

/// Horner evaluation at `x` (an element of the base ring).
pub(crate) fn eval(base: &Ring, a: &Coeffs, x: &ElementData) -> ElementData {
    let mut acc = base.zero();
    for i in (0..a.len()).rev() {
        acc = base.mul(&acc, x);
        acc = base.add(&acc, &a.get(base, i));
    }
    acc
}
