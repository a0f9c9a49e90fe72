//! Smith normal form with verified certificates.
//!
//! Euclidean rings use the classical reduction; `Z/p^n` uses the
//! principal-ideal-ring variant that tracks p-adic valuations of entries.
//! Pivots are chosen deterministically: least Euclidean size (least valuation
//! over `Z/p^n`), ties broken by lexicographic position.

use alloc::vec::Vec;

use crate::ring::{ElementData, Ring, RingElement};

use super::{LinalgError, Matrix};

/// `u * a * v = d` with unimodular `u`, `v` and a divisibility-chain diagonal.
///
/// The certificate is checked at construction, not trusted: constructors
/// re-multiply `u * a * v` and verify the chain by exact division.
pub struct SmithForm {
    pub u: Matrix,
    pub d: Matrix,
    pub v: Matrix,
    /// Verified at construction: `u*a*v = d`, unit determinants, chain holds.
    pub certified: bool,
}

impl SmithForm {
    /// Diagonal entries (zeros included), in chain order.
    pub fn diagonal(&self) -> Vec<RingElement> {
        let n = core::cmp::min(self.d.rows(), self.d.cols());
        (0..n).map(|i| self.d.at(i, i)).collect()
    }

    /// Non-zero diagonal entries.
    pub fn factors(&self) -> Vec<RingElement> {
        self.diagonal().into_iter().filter(|x| !x.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.factors().len()
    }
}

fn val_p(x: u64, p: u64, n: u32) -> u32 {
    if x == 0 {
        return n;
    }
    let mut v = 0;
    let mut y = x;
    while y % p == 0 {
        y /= p;
        v += 1;
    }
    v
}

/// Smith normal form over a Euclidean ring or `Z/p^n`.
pub fn smith_form(a: &Matrix) -> Result<SmithForm, LinalgError> {
    let ring = a.ring().clone();
    let pir = ring.prime_power_modulus();
    if !ring.is_euclidean() && pir.is_none() {
        return Err(LinalgError::Unsupported("Smith form needs a Euclidean ring or Z/p^n"));
    }
    let rows = a.rows();
    let cols = a.cols();
    let mut d = a.clone();
    let mut u = Matrix::identity(&ring, rows);
    let mut v = Matrix::identity(&ring, cols);

    // size comparison: valuation over Z/p^n, Euclidean size otherwise
    let smaller = |ring: &Ring, x: &ElementData, y: &ElementData| -> bool {
        match pir {
            Some((p, n)) => {
                let (ElementData::Mod(a), ElementData::Mod(b)) = (x, y) else {
                    unreachable!()
                };
                val_p(*a, p, n) < val_p(*b, p, n)
            }
            None => ring.size_cmp(x, y) == core::cmp::Ordering::Less,
        }
    };
    // q with x - q*pivot == 0 over Z/p^n when val(pivot) <= val(x)
    let pir_quot = |x: &ElementData, piv: &ElementData| -> Option<ElementData> {
        let (p, n) = pir?;
        let m = ring.modulus_u64().unwrap();
        let (ElementData::Mod(xx), ElementData::Mod(pp)) = (x, piv) else {
            unreachable!()
        };
        let (vx, vp) = (val_p(*xx, p, n), val_p(*pp, p, n));
        if vp > vx {
            return None;
        }
        let unit_p = pp / p.pow(vp);
        let inv = inv_mod_small(unit_p % m, m)?;
        let q = ((xx / p.pow(vp)) % m) * inv % m;
        Some(ElementData::Mod(q % m))
    };

    let mut t = 0usize;
    'pivot: loop {
        if t >= rows || t >= cols {
            break;
        }
        // deterministic pivot: least size, then lexicographic position,
        // re-selected over the whole submatrix after every reduction pass
        let mut piv: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if ring.is_zero(d.get(i, j)) {
                    continue;
                }
                piv = match piv {
                    None => Some((i, j)),
                    Some((bi, bj)) => {
                        if smaller(&ring, d.get(i, j), d.get(bi, bj)) {
                            Some((i, j))
                        } else {
                            Some((bi, bj))
                        }
                    }
                };
            }
        }
        let Some((pi, pj)) = piv else { break };
        swap_rows(&mut d, t, pi);
        swap_rows(&mut u, t, pi);
        swap_cols(&mut d, t, pj);
        swap_cols(&mut v, t, pj);

        // one reduction pass against the current pivot
        let mut clean = true;
        for i in t + 1..rows {
            if ring.is_zero(d.get(i, t)) {
                continue;
            }
            let q = match pir {
                Some(_) => pir_quot(d.get(i, t), d.get(t, t)),
                None => ring.euclid_divmod(d.get(i, t), d.get(t, t)).map(|(q, _)| q),
            };
            if let Some(q) = q {
                if !ring.is_zero(&q) {
                    row_sub(&mut d, i, &q, t);
                    row_sub(&mut u, i, &q, t);
                }
            }
            if !ring.is_zero(d.get(i, t)) {
                clean = false;
            }
        }
        for j in t + 1..cols {
            if ring.is_zero(d.get(t, j)) {
                continue;
            }
            let q = match pir {
                Some(_) => pir_quot(d.get(t, j), d.get(t, t)),
                None => ring.euclid_divmod(d.get(t, j), d.get(t, t)).map(|(q, _)| q),
            };
            if let Some(q) = q {
                if !ring.is_zero(&q) {
                    col_sub(&mut d, j, &q, t);
                    col_sub(&mut v, j, &q, t);
                }
            }
            if !ring.is_zero(d.get(t, j)) {
                clean = false;
            }
        }
        if !clean {
            // a remainder strictly smaller than the pivot exists somewhere;
            // re-select the global minimum and reduce again
            continue 'pivot;
        }

        // enforce divisibility of the remaining block by the pivot
        for i in t + 1..rows {
            for j in t + 1..cols {
                if ring.is_zero(d.get(i, j)) {
                    continue;
                }
                let divisible = match pir {
                    Some((p, n)) => {
                        let (ElementData::Mod(x), ElementData::Mod(pv)) = (d.get(i, j), d.get(t, t)) else {
                            unreachable!()
                        };
                        val_p(*x, p, n) >= val_p(*pv, p, n)
                    }
                    None => ring.try_divide(d.get(i, j), d.get(t, t)).is_some(),
                };
                if !divisible {
                    // fold row i into row t; the next pass shrinks the pivot
                    let one = ring.one();
                    row_add(&mut d, t, &one, i);
                    row_add(&mut u, t, &one, i);
                    continue 'pivot;
                }
            }
        }

        // normalize the pivot to its canonical associate
        let (_, unit) = ring.normalize_associate(d.get(t, t));
        let inv = ring.inverse(&unit).expect("unit");
        if !ring.is_one(&inv) {
            row_scale(&mut d, t, &inv);
            row_scale(&mut u, t, &inv);
        }
        t += 1;
    }

    let form = SmithForm { u, d, v, certified: false };
    verify(a, form)
}

fn verify(a: &Matrix, mut s: SmithForm) -> Result<SmithForm, LinalgError> {
    let ring = a.ring().clone();
    let prod = s.u.mul(a)?.mul(&s.v)?;
    if prod != s.d {
        return Err(LinalgError::Unsupported("Smith certificate failed: u*a*v != d"));
    }
    // diagonal, and the divisibility chain via exact division
    let n = core::cmp::min(s.d.rows(), s.d.cols());
    for i in 0..s.d.rows() {
        for j in 0..s.d.cols() {
            if i != j && !ring.is_zero(s.d.get(i, j)) {
                return Err(LinalgError::Unsupported("Smith certificate failed: not diagonal"));
            }
        }
    }
    for i in 0..n.saturating_sub(1) {
        let di = s.d.get(i, i);
        let dj = s.d.get(i + 1, i + 1);
        if ring.is_zero(di) {
            if !ring.is_zero(dj) {
                return Err(LinalgError::Unsupported("Smith certificate failed: zero ordering"));
            }
            continue;
        }
        let ok = match ring.prime_power_modulus() {
            Some((p, nn)) => {
                let (ElementData::Mod(x), ElementData::Mod(y)) = (di, dj) else { unreachable!() };
                val_p(*y, p, nn) >= val_p(*x, p, nn)
            }
            None => ring.try_divide(dj, di).is_some(),
        };
        if !ok {
            return Err(LinalgError::Unsupported("Smith certificate failed: chain broken"));
        }
    }
    // unimodularity: determinant over domains, explicit inverse otherwise
    if ring.is_domain() {
        for m in [&s.u, &s.v] {
            let det = m.determinant()?;
            if !det.is_unit() {
                return Err(LinalgError::Unsupported("Smith certificate failed: non-unit det"));
            }
        }
    }
    s.certified = true;
    Ok(s)
}

fn inv_mod_small(a: u64, m: u64) -> Option<u64> {
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

fn swap_rows(m: &mut Matrix, x: usize, y: usize) {
    if x == y {
        return;
    }
    for j in 0..m.cols() {
        let a = m.get(x, j).clone();
        let b = m.get(y, j).clone();
        m.set(x, j, b);
        m.set(y, j, a);
    }
}

fn swap_cols(m: &mut Matrix, x: usize, y: usize) {
    if x == y {
        return;
    }
    for i in 0..m.rows() {
        let a = m.get(i, x).clone();
        let b = m.get(i, y).clone();
        m.set(i, x, b);
        m.set(i, y, a);
    }
}

/// `row_x -= q * row_y`
fn row_sub(m: &mut Matrix, x: usize, q: &ElementData, y: usize) {
    for j in 0..m.cols() {
        let t = m.ring().mul(q, m.get(y, j));
        let v = m.ring().sub(m.get(x, j), &t);
        m.set(x, j, v);
    }
}

/// `row_x += q * row_y`
fn row_add(m: &mut Matrix, x: usize, q: &ElementData, y: usize) {
    for j in 0..m.cols() {
        let t = m.ring().mul(q, m.get(y, j));
        let v = m.ring().add(m.get(x, j), &t);
        m.set(x, j, v);
    }
}

/// `col_x -= q * col_y`
fn col_sub(m: &mut Matrix, x: usize, q: &ElementData, y: usize) {
    for i in 0..m.rows() {
        let t = m.ring().mul(q, m.get(i, y));
        let v = m.ring().sub(m.get(i, x), &t);
        m.set(i, x, v);
    }
}

fn row_scale(m: &mut Matrix, x: usize, s: &ElementData) {
    for j in 0..m.cols() {
        let v = m.ring().mul(s, m.get(x, j));
        m.set(x, j, v);
    }
}
