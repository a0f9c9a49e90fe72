use alloc::boxed::Box;
use alloc::string::String;
use alloc::sync::Arc;
use core::fmt;

use super::element::RingElement;
use super::RingError;

/// Runtime description of a computable commutative ring.
///
/// Capability predicates (domain, Euclidean, field, ...) are derived from the
/// kind and never stored, so they cannot contradict it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RingDescriptor {
    /// The ring of integers.
    Integers,
    /// The field of rational numbers.
    Rationals,
    /// The residue ring `Z/m`, `2 <= m < 2^32`.
    IntegersMod(u64),
    /// The prime field `F_p` (p checked prime, `p < 2^32`).
    PrimeField(u64),
    /// Univariate polynomials over a base ring, with a named variable.
    PolynomialOver(Ring, String),
    /// Level-`k` tower ring `base[q_k]` with `q = q_k^(p^k)`.
    ///
    /// The base is `Integers` or `PrimeField(p)`. Elements are Laurent
    /// polynomials in `q_k`: a tracked monomial unit `q_k^e` times a polynomial
    /// with non-zero constant term.
    Tower { base: Ring, p: u64, level: u32 },
    /// Quotient of a polynomial or tower ring by a principal ideal whose
    /// generator has unit leading coefficient.
    Quotient { base: Ring, modulus: Box<RingElement> },
}

/// Shared handle to a [`RingDescriptor`]; all arithmetic dispatches through it.
#[derive(Clone, Eq)]
pub struct Ring(pub(crate) Arc<RingDescriptor>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) const MAX_MODULUS: u64 = u32::MAX as u64;

impl Ring {
    pub fn descriptor(&self) -> &RingDescriptor {
        &self.0
    }

    pub fn integers() -> Ring {
        Ring(Arc::new(RingDescriptor::Integers))
    }

    pub fn rationals() -> Ring {
        Ring(Arc::new(RingDescriptor::Rationals))
    }

    pub fn integers_mod(m: u64) -> Result<Ring, RingError> {
        if m < 2 || m > MAX_MODULUS {
            return Err(RingError::Unsupported("modulus must satisfy 2 <= m < 2^32"));
        }
        Ok(Ring(Arc::new(RingDescriptor::IntegersMod(m))))
    }

    pub fn prime_field(p: u64) -> Result<Ring, RingError> {
        if p > MAX_MODULUS || !is_prime(p) {
            return Err(RingError::Unsupported("prime field needs a prime p < 2^32"));
        }
        Ok(Ring(Arc::new(RingDescriptor::PrimeField(p))))
    }

    pub fn polynomial_over(base: Ring, var: &str) -> Ring {
        Ring(Arc::new(RingDescriptor::PolynomialOver(base, String::from(var))))
    }

    /// The level-`k` tower ring `base[q_k]`, `q = q_k^(p^k)`.
    pub fn tower(base: Ring, p: u64, level: u32) -> Result<Ring, RingError> {
        match base.descriptor() {
            RingDescriptor::Integers => {}
            RingDescriptor::PrimeField(q) if *q == p => {}
            _ => {
                return Err(RingError::Unsupported(
                    "tower base must be Integers or PrimeField(p)",
                ))
            }
        }
        if !is_prime(p) {
            return Err(RingError::Unsupported("tower prime must be prime"));
        }
        // q_k exponents of q = q_k^(p^k) must stay representable.
        if p.checked_pow(level).is_none() || p.pow(level) > (1 << 40) {
            return Err(RingError::Unsupported("tower level too large"));
        }
        Ok(Ring(Arc::new(RingDescriptor::Tower { base, p, level })))
    }

    /// Quotient of a polynomial/tower ring by `(modulus)`.
    ///
    /// The modulus must be non-zero with unit leading coefficient, so that
    /// reduction by long division is well defined over any base.
    pub fn quotient(base: Ring, modulus: RingElement) -> Result<Ring, RingError> {
        if modulus.ring() != &base {
            return Err(RingError::Mismatch(base.name(), modulus.ring().name()));
        }
        match base.descriptor() {
            RingDescriptor::PolynomialOver(..) | RingDescriptor::Tower { .. } => {}
            _ => return Err(RingError::Unsupported("quotient base must be a polynomial ring")),
        }
        if modulus.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        if !base.lc_is_unit(modulus.data()) {
            return Err(RingError::Unsupported(
                "quotient modulus must have unit leading coefficient",
            ));
        }
        Ok(Ring(Arc::new(RingDescriptor::Quotient {
            base,
            modulus: Box::new(modulus),
        })))
    }

    /// Human-readable name of the ring.
    pub fn name(&self) -> String {
        use alloc::format;
        match self.descriptor() {
            RingDescriptor::Integers => String::from("Z"),
            RingDescriptor::Rationals => String::from("Q"),
            RingDescriptor::IntegersMod(m) => format!("Z/{m}"),
            RingDescriptor::PrimeField(p) => format!("F_{p}"),
            RingDescriptor::PolynomialOver(base, v) => format!("{}[{}]", base.name(), v),
            RingDescriptor::Tower { base, p, level } => {
                format!("{}[{}] (tower p={p})", base.name(), tower_var_name(*level))
            }
            RingDescriptor::Quotient { base, modulus } => {
                format!("{}/({})", base.name(), modulus)
            }
        }
    }

    // ----- capability predicates, derived from the kind -----

    pub fn is_field(&self) -> bool {
        match self.descriptor() {
            RingDescriptor::Rationals | RingDescriptor::PrimeField(_) => true,
            RingDescriptor::IntegersMod(m) => is_prime(*m),
            _ => false,
        }
    }

    pub fn is_domain(&self) -> bool {
        match self.descriptor() {
            RingDescriptor::Integers | RingDescriptor::Rationals | RingDescriptor::PrimeField(_) => true,
            RingDescriptor::IntegersMod(m) => is_prime(*m),
            RingDescriptor::PolynomialOver(base, _) => base.is_domain(),
            RingDescriptor::Tower { .. } => true,
            RingDescriptor::Quotient { .. } => false,
        }
    }

    /// Euclidean domains: the rings where division with remainder, Hermite and
    /// Smith forms are available.
    pub fn is_euclidean(&self) -> bool {
        match self.descriptor() {
            RingDescriptor::Integers => true,
            _ if self.is_field() => true,
            RingDescriptor::PolynomialOver(base, _) => base.is_field(),
            RingDescriptor::Tower { base, .. } => base.is_field(),
            _ => false,
        }
    }

    /// `Z/p^n` with `n >= 2`: the principal-ideal-ring case of Smith forms.
    pub fn prime_power_modulus(&self) -> Option<(u64, u32)> {
        if let RingDescriptor::IntegersMod(m) = self.descriptor() {
            let mut p = 2u64;
            while p * p <= *m {
                if *m % p == 0 {
                    let mut n = 0u32;
                    let mut v = *m;
                    while v % p == 0 {
                        v /= p;
                        n += 1;
                    }
                    return if v == 1 { Some((p, n)) } else { None };
                }
                p += 1;
            }
            return Some((*m, 1)); // m prime
        }
        None
    }

    /// Presents the ring as `P` or `P/(m)` for a Euclidean `P`, when possible.
    ///
    /// Module presentations and cohomology over quotient coefficient rings are
    /// computed over the covering `P`, with `m` joining the relation lattices.
    pub fn pid_cover(&self) -> Option<(Ring, Option<RingElement>)> {
        match self.descriptor() {
            _ if self.is_euclidean() => Some((self.clone(), None)),
            RingDescriptor::IntegersMod(m) => {
                let z = Ring::integers();
                let modulus = RingElement::from_i64(&z, *m as i64);
                Some((z, Some(modulus)))
            }
            RingDescriptor::Quotient { base, modulus } => {
                if base.is_euclidean() {
                    Some((base.clone(), Some((**modulus).clone())))
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    /// Tower parameters `(base, p, level)`, if this is a tower ring.
    pub fn tower_params(&self) -> Option<(&Ring, u64, u32)> {
        if let RingDescriptor::Tower { base, p, level } = self.descriptor() {
            Some((base, *p, *level))
        } else {
            None
        }
    }

    /// Base ring of a polynomial, tower, or quotient ring.
    pub fn base_ring(&self) -> Option<&Ring> {
        match self.descriptor() {
            RingDescriptor::PolynomialOver(base, _) => Some(base),
            RingDescriptor::Tower { base, .. } => Some(base),
            RingDescriptor::Quotient { base, .. } => Some(base),
            _ => None,
        }
    }

    /// Modulus of a quotient ring.
    pub fn quotient_modulus(&self) -> Option<&RingElement> {
        if let RingDescriptor::Quotient { modulus, .. } = self.descriptor() {
            Some(modulus)
        } else {
            None
        }
    }

    /// Characteristic prime for residue / prime-field / tower-over-F_p rings.
    pub fn char_prime(&self) -> Option<u64> {
        match self.descriptor() {
            RingDescriptor::PrimeField(p) => Some(*p),
            RingDescriptor::IntegersMod(m) if is_prime(*m) => Some(*m),
            RingDescriptor::PolynomialOver(base, _) => base.char_prime(),
            RingDescriptor::Tower { base, .. } => base.char_prime(),
            RingDescriptor::Quotient { base, .. } => base.char_prime(),
            _ => None,
        }
    }

    pub(crate) fn modulus_u64(&self) -> Option<u64> {
        match self.descriptor() {
            RingDescriptor::IntegersMod(m) => Some(*m),
            RingDescriptor::PrimeField(p) => Some(*p),
            _ => None,
        }
    }

    /// Name of the polynomial variable, if any (`q` at tower level 0, `q{k}` above).
    pub fn var_name(&self) -> Option<String> {
        match self.descriptor() {
            RingDescriptor::PolynomialOver(_, v) => Some(v.clone()),
            RingDescriptor::Tower { level, .. } => Some(tower_var_name(*level)),
            RingDescriptor::Quotient { base, .. } => base.var_name(),
            _ => None,
        }
    }
}

pub(crate) fn tower_var_name(level: u32) -> String {
    use alloc::format;
    if level == 0 {
        String::from("q")
    } else {
        format!("q{level}")
    }
}
