use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::descriptor::{Ring, RingDescriptor};
use super::poly;
use super::RingError;

/// Canonical-form payload of a ring element (without its descriptor).
///
/// The variant in use is determined by the ring kind: `Int` for the integers,
/// `Rat` for the rationals, `Mod` for residue rings and prime fields, `Poly`
/// for polynomial and tower rings, `Quot` for quotient rings (holding the
/// reduced representative in the base ring).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ElementData {
    Int(BigInt),
    Rat(BigRational),
    Mod(u64),
    Poly(PolyData),
    Quot(Box<ElementData>),
}

/// Dense polynomial data with a tracked monomial unit.
///
/// In a tower ring the canonical form has a non-zero constant coefficient and
/// the Laurent monomial factor `q_k^unit_exp` tracked separately; in a plain
/// polynomial ring `unit_exp` is always 0.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyData {
    pub unit_exp: i64,
    pub coeffs: Coeffs,
}

/// Coefficient vector of a polynomial, in one of two lanes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Coeffs {
    /// Residues modulo the base modulus.
    Mod(Vec<u64>),
    /// Elements of an arbitrary base ring.
    Gen(Vec<ElementData>),
}

impl Ring {
    fn is_tower(&self) -> bool {
        matches!(self.descriptor(), RingDescriptor::Tower { .. })
    }

    /// Canonicalize polynomial data for this (polynomial or tower) ring.
    pub(crate) fn make_poly(&self, unit_exp: i64, coeffs: Coeffs) -> ElementData {
        let base = self.base_ring().expect("polynomial ring").clone();
        let coeffs = poly::trim(&base, coeffs);
        if coeffs.is_empty() {
            return ElementData::Poly(PolyData {
                unit_exp: 0,
                coeffs: Coeffs::empty_for(&base),
            });
        }
        if self.is_tower() {
            // strip low-order zero coefficients into the tracked unit
            let mut low = 0usize;
            while base.is_zero(&coeffs.get(&base, low)) {
                low += 1;
            }
            if low > 0 {
                let items = coeffs.to_elements(&base)[low..].to_vec();
                let coeffs = Coeffs::from_elements(&base, items);
                return ElementData::Poly(PolyData {
                    unit_exp: unit_exp + low as i64,
                    coeffs,
                });
            }
            ElementData::Poly(PolyData { unit_exp, coeffs })
        } else {
            assert!(unit_exp == 0, "monomial units are tracked only in tower rings");
            ElementData::Poly(PolyData { unit_exp: 0, coeffs })
        }
    }

    pub fn zero(&self) -> ElementData {
        match self.descriptor() {
            RingDescriptor::Integers => ElementData::Int(BigInt::zero()),
            RingDescriptor::Rationals => ElementData::Rat(BigRational::zero()),
            RingDescriptor::IntegersMod(_) | RingDescriptor::PrimeField(_) => ElementData::Mod(0),
            RingDescriptor::PolynomialOver(base, _) | RingDescriptor::Tower { base, .. } => {
                ElementData::Poly(PolyData {
                    unit_exp: 0,
                    coeffs: Coeffs::empty_for(base),
                })
            }
            RingDescriptor::Quotient { base, .. } => ElementData::Quot(Box::new(base.zero())),
        }
    }

    pub fn one(&self) -> ElementData {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> ElementData {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> ElementData {
        match self.descriptor() {
            RingDescriptor::Integers => ElementData::Int(n.clone()),
            RingDescriptor::Rationals => ElementData::Rat(BigRational::from_integer(n.clone())),
            RingDescriptor::IntegersMod(m) | RingDescriptor::PrimeField(m) => {
                let r = n.mod_floor(&BigInt::from(*m));
                ElementData::Mod(r.to_u64().expect("reduced residue fits in u64"))
            }
            RingDescriptor::PolynomialOver(base, _) | RingDescriptor::Tower { base, .. } => {
                let c = base.from_bigint(n);
                if base.is_zero(&c) {
                    self.zero()
                } else {
                    self.make_poly(0, Coeffs::from_elements(base, vec![c]))
                }
            }
            RingDescriptor::Quotient { base, .. } => {
                let rep = base.from_bigint(n);
                self.quot_from_base(rep)
            }
        }
    }

    /// Constant polynomial from a base element (polynomial/tower rings).
    pub fn constant(&self, c: ElementData) -> ElementData {
        let base = self.base_ring().expect("polynomial ring");
        if base.is_zero(&c) {
            self.zero()
        } else {
            self.make_poly(0, Coeffs::from_elements(base, vec![c]))
        }
    }

    /// The monomial `unit * x^exp` (negative `exp` only in tower rings).
    pub fn monomial(&self, exp: i64, c: ElementData) -> ElementData {
        let base = self.base_ring().expect("polynomial ring");
        if base.is_zero(&c) {
            return self.zero();
        }
        if self.is_tower() {
            self.make_poly(exp, Coeffs::from_elements(base, vec![c]))
        } else {
            assert!(exp >= 0);
            let mut items: Vec<ElementData> = (0..exp as usize).map(|_| base.zero()).collect();
            items.push(c);
            self.make_poly(0, Coeffs::from_elements(base, items))
        }
    }

    /// The variable `x` (or `q_k`) itself.
    pub fn var(&self) -> ElementData {
        let base = self.base_ring().expect("polynomial ring");
        self.monomial(1, base.one())
    }

    /// Image of a base-ring element in a quotient ring.
    pub fn quot_from_base(&self, rep: ElementData) -> ElementData {
        let (base, modulus) = match self.descriptor() {
            RingDescriptor::Quotient { base, modulus } => (base, modulus),
            _ => panic!("not a quotient ring"),
        };
        ElementData::Quot(Box::new(quot_reduce(base, modulus.data(), rep)))
    }

    pub fn is_zero(&self, a: &ElementData) -> bool {
        match a {
            ElementData::Int(x) => x.is_zero(),
            ElementData::Rat(x) => x.is_zero(),
            ElementData::Mod(x) => *x == 0,
            ElementData::Poly(p) => p.coeffs.is_empty(),
            ElementData::Quot(x) => self.base_ring().expect("quotient").is_zero(x),
        }
    }

    pub fn is_one(&self, a: &ElementData) -> bool {
        *a == self.one()
    }

    pub fn add(&self, a: &ElementData, b: &ElementData) -> ElementData {
        match (self.descriptor(), a, b) {
            (RingDescriptor::Integers, ElementData::Int(x), ElementData::Int(y)) => {
                ElementData::Int(x + y)
            }
            (RingDescriptor::Rationals, ElementData::Rat(x), ElementData::Rat(y)) => {
                ElementData::Rat(x + y)
            }
            (RingDescriptor::IntegersMod(m), ElementData::Mod(x), ElementData::Mod(y))
            | (RingDescriptor::PrimeField(m), ElementData::Mod(x), ElementData::Mod(y)) => {
                ElementData::Mod((x + y) % m)
            }
            (
                RingDescriptor::PolynomialOver(base, _) | RingDescriptor::Tower { base, .. },
                ElementData::Poly(pa),
                ElementData::Poly(pb),
            ) => {
                if pa.coeffs.is_empty() {
                    return b.clone();
                }
                if pb.coeffs.is_empty() {
                    return a.clone();
                }
                let e = core::cmp::min(pa.unit_exp, pb.unit_exp);
                let sa = (pa.unit_exp - e) as usize;
                let sb = (pb.unit_exp - e) as usize;
                let sum = poly::add_shifted(base, &pa.coeffs, sa, &pb.coeffs, sb);
                self.make_poly(e, sum)
            }
            (RingDescriptor::Quotient { base, modulus }, ElementData::Quot(x), ElementData::Quot(y)) => {
                ElementData::Quot(Box::new(quot_reduce(base, modulus.data(), base.add(x, y))))
            }
            _ => panic!("element data does not match ring {}", self.name()),
        }
    }

    pub fn neg(&self, a: &ElementData) -> ElementData {
        match (self.descriptor(), a) {
            (RingDescriptor::Integers, ElementData::Int(x)) => ElementData::Int(-x),
            (RingDescriptor::Rationals, ElementData::Rat(x)) => ElementData::Rat(-x),
            (RingDescriptor::IntegersMod(m), ElementData::Mod(x))
            | (RingDescriptor::PrimeField(m), ElementData::Mod(x)) => {
                ElementData::Mod(if *x == 0 { 0 } else { m - x })
            }
            (
                RingDescriptor::PolynomialOver(base, _) | RingDescriptor::Tower { base, .. },
                ElementData::Poly(p),
            ) => ElementData::Poly(PolyData {
                unit_exp: p.unit_exp,
                coeffs: poly::neg(base, &p.coeffs),
            }),
            (RingDescriptor::Quotient { base, .. }, ElementData::Quot(x)) => {
                ElementData::Quot(Box::new(base.neg(x)))
            }
            _ => panic!("element data does not match ring {}", self.name()),
        }
    }

    pub fn sub(&self, a: &ElementData, b: &ElementData) -> ElementData {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &ElementData, b: &ElementData) -> ElementData {
        match (self.descriptor(), a, b) {
            (RingDescriptor::Integers, ElementData::Int(x), ElementData::Int(y)) => {
                ElementData::Int(x * y)
            }
            (RingDescriptor::Rationals, ElementData::Rat(x), ElementData::Rat(y)) => {
                ElementData::Rat(x * y)
            }
            (RingDescriptor::IntegersMod(m), ElementData::Mod(x), ElementData::Mod(y))
            | (RingDescriptor::PrimeField(m), ElementData::Mod(x), ElementData::Mod(y)) => {
                ElementData::Mod((x * y) % m)
            }
            (
                RingDescriptor::PolynomialOver(base, _) | RingDescriptor::Tower { base, .. },
                ElementData::Poly(pa),
                ElementData::Poly(pb),
            ) => {
                let prod = poly::mul(base, &pa.coeffs, &pb.coeffs);
                self.make_poly(pa.unit_exp + pb.unit_exp, prod)
            }
            (RingDescriptor::Quotient { base, modulus }, ElementData::Quot(x), ElementData::Quot(y)) => {
                ElementData::Quot(Box::new(quot_reduce(base, modulus.data(), base.mul(x, y))))
            }
            _ => panic!("element data does not match ring {}", self.name()),
        }
    }

    pub fn pow(&self, a: &ElementData, e: u64) -> ElementData {
        let mut acc = self.one();
        let mut b = a.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            e >>= 1;
            if e > 0 {
                b = self.mul(&b, &b);
            }
        }
        acc
    }

    /// Integer multiple `n * a`.
    pub fn mul_i64(&self, a: &ElementData, n: i64) -> ElementData {
        self.mul(a, &self.from_i64(n))
    }

    /// Internal exact division: `Some(c)` with `a = c*b`, `None` otherwise
    /// (including `b = 0` and unsupported shapes).
    pub(crate) fn try_divide(&self, a: &ElementData, b: &ElementData) -> Option<ElementData> {
        if self.is_zero(b) {
            return None;
        }
        if self.is_zero(a) {
            return Some(self.zero());
        }
        match (self.descriptor(), a, b) {
            (RingDescriptor::Integers, ElementData::Int(x), ElementData::Int(y)) => {
                let (q, r) = x.div_rem(y);
                if r.is_zero() {
                    Some(ElementData::Int(q))
                } else {
                    None
                }
            }
            (RingDescriptor::Rationals, ElementData::Rat(x), ElementData::Rat(y)) => {
                Some(ElementData::Rat(x / y))
            }
            (RingDescriptor::IntegersMod(m), ElementData::Mod(x), ElementData::Mod(y))
            | (RingDescriptor::PrimeField(m), ElementData::Mod(x), ElementData::Mod(y)) => {
                let inv = poly::inv_mod_u64(*y, *m)?;
                Some(ElementData::Mod((x * inv) % m))
            }
            (
                RingDescriptor::PolynomialOver(base, _) | RingDescriptor::Tower { base, .. },
                ElementData::Poly(pa),
                ElementData::Poly(pb),
            ) => {
                let q = poly::div_exact(base, &pa.coeffs, &pb.coeffs)?;
                let e = pa.unit_exp - pb.unit_exp;
                if !self.is_tower() && e != 0 {
                    return None;
                }
                Some(self.make_poly(e, q))
            }
            (RingDescriptor::Quotient { base, modulus }, ElementData::Quot(x), ElementData::Quot(y)) => {
                // division only by units of the quotient
                let inv = self.inverse(&ElementData::Quot(y.clone()))?;
                let prod = match inv {
                    ElementData::Quot(i) => base.mul(x, &i),
                    _ => unreachable!(),
                };
                Some(ElementData::Quot(Box::new(quot_reduce(base, modulus.data(), prod))))
            }
            _ => panic!("element data does not match ring {}", self.name()),
        }
    }

    /// Exact division with the error semantics of the public operation:
    /// `Ok(Some(c))` with `bc = a`, `Ok(None)` when `b` does not divide `a`,
    /// errors for zero or zero-divisor divisors.
    pub fn divide_exact(&self, a: &ElementData, b: &ElementData) -> Result<Option<ElementData>, RingError> {
        if self.is_zero(b) {
            return Err(RingError::DivisionByZero);
        }
        if !self.is_domain() && !self.is_regular(b) {
            return Err(RingError::ZeroDivisor);
        }
        Ok(self.try_divide(a, b))
    }

    /// Is `b` a regular element (multiplication by `b` injective)?
    pub fn is_regular(&self, b: &ElementData) -> bool {
        if self.is_zero(b) {
            return false;
        }
        if self.is_domain() {
            return true;
        }
        match (self.descriptor(), b) {
            (RingDescriptor::IntegersMod(m), ElementData::Mod(x)) => {
                BigInt::from(*x).gcd(&BigInt::from(*m)).is_one()
            }
            // finite-dimensional quotients of a PID: regular == unit
            (RingDescriptor::Quotient { .. }, _) => self.is_unit(b),
            _ => false,
        }
    }

    pub fn is_unit(&self, a: &ElementData) -> bool {
        self.inverse(a).is_some()
    }

    /// Multiplicative inverse, when `a` is a unit.
    pub fn inverse(&self, a: &ElementData) -> Option<ElementData> {
        if self.is_zero(a) {
            return None;
        }
        match (self.descriptor(), a) {
            (RingDescriptor::Integers, ElementData::Int(x)) => {
                if x.magnitude().is_one() {
                    Some(a.clone())
                } else {
                    None
                }
            }
            (RingDescriptor::Rationals, ElementData::Rat(x)) => {
                Some(ElementData::Rat(x.recip()))
            }
            (RingDescriptor::IntegersMod(m), ElementData::Mod(x))
            | (RingDescriptor::PrimeField(m), ElementData::Mod(x)) => {
                poly::inv_mod_u64(*x, *m).map(ElementData::Mod)
            }
            (
                RingDescriptor::PolynomialOver(base, _) | RingDescriptor::Tower { base, .. },
                ElementData::Poly(p),
            ) => {
                if p.coeffs.len() != 1 {
                    return None;
                }
                let c = base.inverse(&p.coeffs.get(base, 0))?;
                Some(self.monomial(-p.unit_exp, c))
            }
            (RingDescriptor::Quotient { base, modulus }, ElementData::Quot(x)) => {
                // Bezout against the modulus in the covering PID
                let (g, s, _) = base.gcd_ext(x, modulus.data()).ok()?;
                let ginv = base.inverse(&g)?;
                let inv = base.mul(&s, &ginv);
                Some(ElementData::Quot(Box::new(quot_reduce(base, modulus.data(), inv))))
            }
            _ => panic!("element data does not match ring {}", self.name()),
        }
    }

    /// Writes `a = unit * normal` with a canonical associate `normal`:
    /// non-negative integers, monic polynomials over fields, positive leading
    /// coefficient over the integers, canonical `p^v` in `Z/p^n`.
    pub fn normalize_associate(&self, a: &ElementData) -> (ElementData, ElementData) {
        if self.is_zero(a) {
            return (self.zero(), self.one());
        }
        match (self.descriptor(), a) {
            (RingDescriptor::Integers, ElementData::Int(x)) => {
                if x.is_negative() {
                    (ElementData::Int(-x), self.from_i64(-1))
                } else {
                    (a.clone(), self.one())
                }
            }
            (RingDescriptor::Rationals, _) => (self.one(), a.clone()),
            (RingDescriptor::PrimeField(_), _) => (self.one(), a.clone()),
            (RingDescriptor::IntegersMod(m), ElementData::Mod(x)) => {
                match self.prime_power_modulus() {
                    Some((p, _)) => {
                        let mut v = 0u64;
                        let mut y = *x;
                        while y % p == 0 {
                            y /= p;
                            v += 1;
                        }
                        let pv = ElementData::Mod({
                            let mut t = 1u64;
                            for _ in 0..v {
                                t = (t * p) % m;
                            }
                            t
                        });
                        let u = ElementData::Mod(y % m);
                        (pv, u)
                    }
                    None => (a.clone(), self.one()),
                }
            }
            (
                RingDescriptor::PolynomialOver(base, _) | RingDescriptor::Tower { base, .. },
                ElementData::Poly(p),
            ) => {
                let lc = p.coeffs.get(base, p.coeffs.len() - 1);
                let (_, bu) = base.normalize_associate(&lc);
                // unit part: base unit times the tracked monomial
                let inv = base.inverse(&bu).expect("unit");
                let normal = self.make_poly(0, poly::scale(base, &p.coeffs, &inv));
                let unit = self.monomial(p.unit_exp, bu);
                (normal, unit)
            }
            _ => (a.clone(), self.one()),
        }
    }

    // ----- Euclidean structure -----

    /// Division with remainder in a Euclidean ring: `a = q*b + r` with
    /// `size(r) < size(b)`. In tower rings the monomial units are absorbed
    /// into the quotient, so the remainder size is the polynomial degree.
    pub fn euclid_divmod(&self, a: &ElementData, b: &ElementData) -> Option<(ElementData, ElementData)> {
        if self.is_zero(b) {
            return None;
        }
        match (self.descriptor(), a, b) {
            (RingDescriptor::Integers, ElementData::Int(x), ElementData::Int(y)) => {
                let (q, r) = x.div_mod_floor(y);
                // canonical remainder in [0, |b|)
                if r.is_negative() {
                    let (q2, r2) = if y.is_negative() {
                        (q + BigInt::one(), r - y)
                    } else {
                        (q - BigInt::one(), r + y)
                    };
                    Some((ElementData::Int(q2), ElementData::Int(r2)))
                } else {
                    Some((ElementData::Int(q), ElementData::Int(r)))
                }
            }
            _ if self.is_field() => {
                let q = self.try_divide(a, b)?;
                Some((q, self.zero()))
            }
            (
                RingDescriptor::PolynomialOver(base, _) | RingDescriptor::Tower { base, .. },
                ElementData::Poly(pa),
                ElementData::Poly(pb),
            ) => {
                let (q, r) = poly::divmod(base, &pa.coeffs, &pb.coeffs)?;
                let qe = pa.unit_exp - pb.unit_exp;
                if !self.is_tower() && qe != 0 {
                    // cannot happen: plain polynomial rings always carry exp 0
                    return None;
                }
                Some((self.make_poly(qe, q), self.make_poly(pa.unit_exp, r)))
            }
            _ => None,
        }
    }

    /// Compare Euclidean sizes (for deterministic pivoting).
    pub fn size_cmp(&self, a: &ElementData, b: &ElementData) -> Ordering {
        match (self.is_zero(a), self.is_zero(b)) {
            (true, true) => return Ordering::Equal,
            (true, false) => return Ordering::Greater, // zero sorts last
            (false, true) => return Ordering::Less,
            _ => {}
        }
        match (a, b) {
            (ElementData::Int(x), ElementData::Int(y)) => x.abs().cmp(&y.abs()),
            (ElementData::Poly(x), ElementData::Poly(y)) => x.coeffs.len().cmp(&y.coeffs.len()),
            _ => Ordering::Equal,
        }
    }

    /// Extended gcd `(g, s, t)` with `g = s*a + t*b`, `g` normalized.
    pub fn gcd_ext(&self, a: &ElementData, b: &ElementData) -> Result<(ElementData, ElementData, ElementData), RingError> {
        if !self.is_euclidean() {
            return Err(RingError::Unsupported("extended gcd needs a Euclidean ring"));
        }
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (self.one(), self.zero());
        let (mut t0, mut t1) = (self.zero(), self.one());
        while !self.is_zero(&r1) {
            let (q, r) = self.euclid_divmod(&r0, &r1).expect("euclidean");
            r0 = r1;
            r1 = r;
            let s = self.sub(&s0, &self.mul(&q, &s1));
            s0 = s1;
            s1 = s;
            let t = self.sub(&t0, &self.mul(&q, &t1));
            t0 = t1;
            t1 = t;
        }
        let (normal, unit) = self.normalize_associate(&r0);
        let uinv = self.inverse(&unit).expect("unit");
        Ok((normal, self.mul(&s0, &uinv), self.mul(&t0, &uinv)))
    }

    /// Leading coefficient of polynomial data is a unit (scalars: unit).
    pub(crate) fn lc_is_unit(&self, a: &ElementData) -> bool {
        match (self.descriptor(), a) {
            (
                RingDescriptor::PolynomialOver(base, _) | RingDescriptor::Tower { base, .. },
                ElementData::Poly(p),
            ) => {
                if p.coeffs.is_empty() {
                    false
                } else {
                    base.is_unit(&p.coeffs.get(base, p.coeffs.len() - 1))
                }
            }
            _ => self.is_unit(a),
        }
    }
}

/// Reduce a base-ring representative modulo `m` (unit leading coefficient).
///
/// Tower representatives may carry a negative monomial unit; since the
/// constant term of a canonical modulus generator is handled via the
/// invertibility of the variable modulo `m`, negative exponents are cleared by
/// multiplying with the inverse of `q` modulo `m`.
pub(crate) fn quot_reduce(base: &Ring, modulus: &ElementData, x: ElementData) -> ElementData {
    if base.is_zero(&x) {
        return x;
    }
    let (px, pm) = match (&x, modulus) {
        (ElementData::Poly(px), ElementData::Poly(pm)) => (px.clone(), pm),
        _ => panic!("quotient over non-polynomial base"),
    };
    assert!(pm.unit_exp == 0, "canonical modulus expected");
    let mut data = px;
    if data.unit_exp < 0 {
        // q^{-1} mod m exists iff the constant term of m is a unit
        let c0 = pm.coeffs.get(base.base_ring().unwrap(), 0);
        let bb = base.base_ring().unwrap();
        let c0inv = bb
            .inverse(&c0)
            .expect("variable not invertible modulo this modulus");
        // m = c0 + q*h  =>  q^{-1} = -h * c0^{-1} (mod m)
        let h_items = pm.coeffs.to_elements(bb)[1..].to_vec();
        let h = Coeffs::from_elements(bb, h_items);
        let qinv_coeffs = poly::scale(bb, &poly::neg(bb, &h), &c0inv);
        let qinv = base.make_poly(0, qinv_coeffs);
        let qinv_pow = base.pow(&qinv, (-data.unit_exp) as u64);
        let cleared = base.mul(
            &base.make_poly(0, data.coeffs.clone()),
            &qinv_pow,
        );
        return quot_reduce(base, modulus, cleared);
    }
    // clear the positive monomial unit into the coefficients, then divide
    let bb = base.base_ring().unwrap();
    let shifted = poly::add_shifted(
        bb,
        &data.coeffs,
        data.unit_exp as usize,
        &Coeffs::empty_for(bb),
        0,
    );
    data = PolyData { unit_exp: 0, coeffs: shifted };
    let (_, r) = poly::divmod(bb, &data.coeffs, &pm.coeffs).expect("unit leading coefficient");
    // the remainder is kept with exponent 0 (no unit stripping inside quotients)
    ElementData::Poly(PolyData { unit_exp: 0, coeffs: r })
}

/// A ring element: a descriptor together with canonical-form data.
///
/// Equality is decidable by data comparison; elements of one tower at
/// different levels are compared after embedding into the higher level.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingElement {
    ring: Ring,
    data: ElementData,
}

impl RingElement {
    pub fn new(ring: Ring, data: ElementData) -> RingElement {
        RingElement { ring, data }
    }

    pub fn from_i64(ring: &Ring, n: i64) -> RingElement {
        RingElement { ring: ring.clone(), data: ring.from_i64(n) }
    }

    /// Polynomial `x^unit_exp * (c_0 + c_1 x + ...)` from integer coefficients.
    pub fn poly_from_i64(ring: &Ring, unit_exp: i64, coeffs: &[i64]) -> RingElement {
        let base = ring.base_ring().expect("polynomial ring");
        let items: Vec<ElementData> = coeffs.iter().map(|&c| base.from_i64(c)).collect();
        RingElement {
            ring: ring.clone(),
            data: ring.make_poly(unit_exp, Coeffs::from_elements(base, items)),
        }
    }

    /// The polynomial variable of a polynomial or tower ring.
    pub fn var(ring: &Ring) -> RingElement {
        RingElement { ring: ring.clone(), data: ring.var() }
    }

    /// The monomial `c * x^exp`.
    pub fn monomial(ring: &Ring, exp: i64, c: RingElement) -> RingElement {
        RingElement { ring: ring.clone(), data: ring.monomial(exp, c.into_data()) }
    }

    pub fn zero(ring: &Ring) -> RingElement {
        RingElement { ring: ring.clone(), data: ring.zero() }
    }

    pub fn one(ring: &Ring) -> RingElement {
        RingElement { ring: ring.clone(), data: ring.one() }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn data(&self) -> &ElementData {
        &self.data
    }

    pub fn into_data(self) -> ElementData {
        self.data
    }

    pub fn is_zero(&self) -> bool {
        self.ring.is_zero(&self.data)
    }

    pub fn is_unit(&self) -> bool {
        self.ring.is_unit(&self.data)
    }

    /// Unifies the rings of two elements (automatic level embedding within one
    /// tower) and returns the operands over the common ring.
    pub fn unify(a: &RingElement, b: &RingElement) -> Result<(Ring, ElementData, ElementData), RingError> {
        if a.ring == b.ring {
            return Ok((a.ring.clone(), a.data.clone(), b.data.clone()));
        }
        if let (Some((ba, pa, la)), Some((bb, pb, lb))) = (a.ring.tower_params(), b.ring.tower_params()) {
            if ba == bb && pa == pb {
                return if la < lb {
                    let lifted = super::tower::embed_to_level(&a.ring, &a.data, lb)?;
                    Ok((b.ring.clone(), lifted, b.data.clone()))
                } else {
                    let lifted = super::tower::embed_to_level(&b.ring, &b.data, la)?;
                    Ok((a.ring.clone(), a.data.clone(), lifted))
                };
            }
        }
        Err(RingError::Mismatch(a.ring.name(), b.ring.name()))
    }

    pub fn add(&self, other: &RingElement) -> Result<RingElement, RingError> {
        let (ring, a, b) = RingElement::unify(self, other)?;
        let data = ring.add(&a, &b);
        Ok(RingElement { ring, data })
    }

    pub fn sub(&self, other: &RingElement) -> Result<RingElement, RingError> {
        let (ring, a, b) = RingElement::unify(self, other)?;
        let data = ring.sub(&a, &b);
        Ok(RingElement { ring, data })
    }

    pub fn mul(&self, other: &RingElement) -> Result<RingElement, RingError> {
        let (ring, a, b) = RingElement::unify(self, other)?;
        let data = ring.mul(&a, &b);
        Ok(RingElement { ring, data })
    }

    pub fn neg(&self) -> RingElement {
        RingElement { ring: self.ring.clone(), data: self.ring.neg(&self.data) }
    }

    pub fn pow(&self, e: u64) -> RingElement {
        RingElement { ring: self.ring.clone(), data: self.ring.pow(&self.data, e) }
    }

    pub fn eq_elem(&self, other: &RingElement) -> Result<bool, RingError> {
        let (_, a, b) = RingElement::unify(self, other)?;
        Ok(a == b)
    }

    /// Exact division; `Ok(None)` is the "not divisible" refusal marker.
    pub fn divide_exact(&self, other: &RingElement) -> Result<Option<RingElement>, RingError> {
        let (ring, a, b) = RingElement::unify(self, other)?;
        Ok(ring.divide_exact(&a, &b)?.map(|data| RingElement { ring: ring.clone(), data }))
    }

    pub fn gcd(&self, other: &RingElement) -> Result<RingElement, RingError> {
        let (ring, a, b) = RingElement::unify(self, other)?;
        let data = super::gcd::gcd(&ring, &a, &b)?;
        Ok(RingElement { ring, data })
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_data(&self.ring, &self.data, f)
    }
}

pub(crate) fn fmt_data(ring: &Ring, a: &ElementData, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match a {
        ElementData::Int(x) => write!(f, "{x}"),
        ElementData::Rat(x) => write!(f, "{x}"),
        ElementData::Mod(x) => write!(f, "{x}"),
        ElementData::Quot(x) => fmt_data(ring.base_ring().expect("quotient"), x, f),
        ElementData::Poly(p) => {
            if p.coeffs.is_empty() {
                return write!(f, "0");
            }
            let base = ring.base_ring().expect("polynomial ring");
            let var = ring.var_name().unwrap_or_else(|| "x".into());
            let mut first = true;
            for i in 0..p.coeffs.len() {
                let c = p.coeffs.get(base, i);
                if base.is_zero(&c) {
                    continue;
                }
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                let e = p.unit_exp + i as i64;
                let celem = RingElement { ring: base.clone(), data: c.clone() };
                if e == 0 {
                    write!(f, "{celem}")?;
                } else {
                    if !base.is_one(&c) {
                        write!(f, "{celem}*")?;
                    }
                    if e == 1 {
                        write!(f, "{var}")?;
                    } else {
                        write!(f, "{var}^{e}")?;
                    }
                }
            }
            Ok(())
        }
    }
}
