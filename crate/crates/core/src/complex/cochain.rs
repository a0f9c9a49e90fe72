use alloc::vec;
use alloc::vec::Vec;

use crate::linalg::Matrix;
use crate::ring::{ElementData, Ring, RingDescriptor, RingElement};

use super::ComplexError;

/// A bounded cochain complex of finite free modules.
///
/// `ranks[i]` is the rank in degree `min_deg + i`; `diffs[i]` is the
/// differential out of that degree (a `ranks[i+1] x ranks[i]` matrix acting on
/// column vectors). `d . d = 0` is checked at construction.
#[derive(Clone, PartialEq)]
pub struct CochainComplex {
    ring: Ring,
    min_deg: i64,
    ranks: Vec<usize>,
    diffs: Vec<Matrix>,
}

impl CochainComplex {
    pub fn new(ring: Ring, min_deg: i64, ranks: Vec<usize>, diffs: Vec<Matrix>) -> Result<CochainComplex, ComplexError> {
        let c = CochainComplex { ring, min_deg, ranks, diffs };
        c.validate()?;
        Ok(c)
    }

    /// The empty complex.
    pub fn empty(ring: &Ring) -> CochainComplex {
        CochainComplex { ring: ring.clone(), min_deg: 0, ranks: Vec::new(), diffs: Vec::new() }
    }

    /// A single free module placed in one degree.
    pub fn concentrated(ring: &Ring, degree: i64, rank: usize) -> CochainComplex {
        CochainComplex { ring: ring.clone(), min_deg: degree, ranks: vec![rank], diffs: Vec::new() }
    }

    /// The two-term complex `[A -> A]` in degrees (0, 1) with scalar `c`.
    pub fn two_term(c: &RingElement) -> CochainComplex {
        let ring = c.ring().clone();
        let d = Matrix::from_fn(&ring, 1, 1, |_, _| c.data().clone());
        CochainComplex { ring, min_deg: 0, ranks: vec![1, 1], diffs: vec![d] }
    }

    /// Confirms shapes, ring consistency and `d.d = 0`; reports the first
    /// failing degree otherwise.
    pub fn validate(&self) -> Result<(), ComplexError> {
        if self.ranks.is_empty() {
            if !self.diffs.is_empty() {
                return Err(ComplexError::Malformed("differentials without modules".into()));
            }
            return Ok(());
        }
        if self.diffs.len() + 1 != self.ranks.len() {
            return Err(ComplexError::Malformed(alloc::format!(
                "{} ranks need {} differentials, got {}",
                self.ranks.len(),
                self.ranks.len() - 1,
                self.diffs.len()
            )));
        }
        for (i, d) in self.diffs.iter().enumerate() {
            if d.ring() != &self.ring {
                return Err(ComplexError::Malformed("differential over a different ring".into()));
            }
            if d.rows() != self.ranks[i + 1] || d.cols() != self.ranks[i] {
                return Err(ComplexError::Malformed(alloc::format!(
                    "differential {} has shape {}x{}, expected {}x{}",
                    i, d.rows(), d.cols(), self.ranks[i + 1], self.ranks[i]
                )));
            }
        }
        for i in 0..self.diffs.len().saturating_sub(1) {
            let prod = self.diffs[i + 1].mul(&self.diffs[i])?;
            if !prod.is_zero() {
                return Err(ComplexError::NotAComplex { degree: self.min_deg + i as i64 });
            }
        }
        Ok(())
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn min_deg(&self) -> i64 {
        self.min_deg
    }

    pub fn max_deg(&self) -> i64 {
        self.min_deg + self.ranks.len() as i64 - 1
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn rank_at(&self, degree: i64) -> usize {
        let i = degree - self.min_deg;
        if i < 0 || i as usize >= self.ranks.len() {
            0
        } else {
            self.ranks[i as usize]
        }
    }

    /// Differential out of `degree` (zero matrix when out of range).
    pub fn diff_at(&self, degree: i64) -> Matrix {
        let i = degree - self.min_deg;
        if i >= 0 && (i as usize) < self.diffs.len() {
            self.diffs[i as usize].clone()
        } else {
            Matrix::zero(&self.ring, self.rank_at(degree + 1), self.rank_at(degree))
        }
    }

    pub fn diffs(&self) -> &[Matrix] {
        &self.diffs
    }

    /// Shift: `(C[s])^n = C^(n+s)`; differentials keep their matrices.
    pub fn shift(&self, s: i64) -> CochainComplex {
        CochainComplex {
            ring: self.ring.clone(),
            min_deg: self.min_deg - s,
            ranks: self.ranks.clone(),
            diffs: self.diffs.clone(),
        }
    }

    /// Euler characteristic (alternating sum of ranks).
    pub fn euler_characteristic(&self) -> i64 {
        let mut chi = 0i64;
        for (i, &r) in self.ranks.iter().enumerate() {
            let deg = self.min_deg + i as i64;
            if deg.rem_euclid(2) == 0 {
                chi += r as i64;
            } else {
                chi -= r as i64;
            }
        }
        chi
    }

    /// Direct sum, blockwise per degree.
    pub fn direct_sum(&self, other: &CochainComplex) -> Result<CochainComplex, ComplexError> {
        if self.ring != other.ring {
            return Err(ComplexError::Malformed("direct sum over different rings".into()));
        }
        if self.is_empty() {
            return Ok(other.clone());
        }
        if other.is_empty() {
            return Ok(self.clone());
        }
        let lo = core::cmp::min(self.min_deg, other.min_deg);
        let hi = core::cmp::max(self.max_deg(), other.max_deg());
        let ranks: Vec<usize> = (lo..=hi).map(|d| self.rank_at(d) + other.rank_at(d)).collect();
        let diffs: Vec<Matrix> = (lo..hi)
            .map(|d| self.diff_at(d).block_diag(&other.diff_at(d)))
            .collect();
        CochainComplex::new(self.ring.clone(), lo, ranks, diffs)
    }

    /// Signed tensor product with the Koszul sign rule.
    ///
    /// Degree-`n` basis vectors are pairs `(x_i, y_j)` with `deg x + deg y = n`,
    /// ordered by ascending left degree, then row-major.
    pub fn tensor_product(&self, other: &CochainComplex) -> Result<CochainComplex, ComplexError> {
        if self.ring != other.ring {
            return Err(ComplexError::Malformed("tensor over different rings".into()));
        }
        if self.is_empty() || other.is_empty() {
            return Ok(CochainComplex::empty(&self.ring));
        }
        let ring = self.ring.clone();
        let lo = self.min_deg + other.min_deg;
        let hi = self.max_deg() + other.max_deg();
        let ranks: Vec<usize> = (lo..=hi)
            .map(|n| {
                let mut r = 0usize;
                for a in self.min_deg..=self.max_deg() {
                    r += self.rank_at(a) * other.rank_at(n - a);
                }
                r
            })
            .collect();
        // offset of the (a, n-a) block within degree n
        let offset = |n: i64, a: i64| -> usize {
            let mut off = 0usize;
            for aa in self.min_deg..a {
                off += self.rank_at(aa) * other.rank_at(n - aa);
            }
            off
        };
        let mut diffs = Vec::new();
        for n in lo..hi {
            let mut m = Matrix::zero(&ring, ranks[(n + 1 - lo) as usize], ranks[(n - lo) as usize]);
            for a in self.min_deg..=self.max_deg() {
                let b = n - a;
                let ra = self.rank_at(a);
                let rb = other.rank_at(b);
                if ra == 0 || rb == 0 {
                    continue;
                }
                let src_off = offset(n, a);
                // d_left x tensor y : block (a+1, b)
                let dl = self.diff_at(a);
                if dl.rows() > 0 {
                    let dst_off = offset(n + 1, a + 1);
                    for i2 in 0..dl.rows() {
                        for i in 0..ra {
                            if ring.is_zero(dl.get(i2, i)) {
                                continue;
                            }
                            for j in 0..rb {
                                m.set(dst_off + i2 * rb + j, src_off + i * rb + j, dl.get(i2, i).clone());
                            }
                        }
                    }
                }
                // (-1)^a x tensor d_right y : block (a, b+1)
                let dr = other.diff_at(b);
                if dr.rows() > 0 {
                    let dst_off = offset(n + 1, a);
                    let rb2 = dr.rows();
                    for i in 0..ra {
                        for j2 in 0..rb2 {
                            for j in 0..rb {
                                if ring.is_zero(dr.get(j2, j)) {
                                    continue;
                                }
                                let v = if a.rem_euclid(2) == 0 {
                                    dr.get(j2, j).clone()
                                } else {
                                    ring.neg(dr.get(j2, j))
                                };
                                m.set(dst_off + i * rb2 + j2, src_off + i * rb + j, v);
                            }
                        }
                    }
                }
            }
            diffs.push(m);
        }
        CochainComplex::new(ring, lo, ranks, diffs)
    }

    /// Base change `C tensor A/(f)` for a regular `f`: same ranks, entries
    /// reduced into the canonical quotient ring (`Z/(f)` over the integers,
    /// `A/(f)` otherwise).
    pub fn tensor_reduce(&self, f: &RingElement) -> Result<CochainComplex, ComplexError> {
        if f.ring() != &self.ring {
            return Err(ComplexError::Malformed("scalar from a different ring".into()));
        }
        if f.is_zero() || !self.ring.is_regular(f.data()) {
            return Err(ComplexError::Ring(crate::ring::RingError::ZeroDivisor));
        }
        let (target, map): (Ring, alloc::boxed::Box<dyn Fn(&ElementData) -> ElementData>) =
            match self.ring.descriptor() {
                RingDescriptor::Integers => {
                    let m = match f.data() {
                        ElementData::Int(x) => {
                            use num_traits::{Signed, ToPrimitive};
                            x.abs().to_u64().ok_or(ComplexError::Unsupported("modulus too large"))?
                        }
                        _ => unreachable!(),
                    };
                    let t = Ring::integers_mod(m).map_err(ComplexError::Ring)?;
                    let t2 = t.clone();
                    (
                        t,
                        alloc::boxed::Box::new(move |e: &ElementData| match e {
                            ElementData::Int(x) => t2.from_bigint(x),
                            _ => unreachable!(),
                        }),
                    )
                }
                RingDescriptor::PolynomialOver(..) | RingDescriptor::Tower { .. } => {
                    let t = Ring::quotient(self.ring.clone(), f.clone()).map_err(ComplexError::Ring)?;
                    let t2 = t.clone();
                    (
                        t,
                        alloc::boxed::Box::new(move |e: &ElementData| t2.quot_from_base(e.clone())),
                    )
                }
                _ => return Err(ComplexError::Unsupported("tensor_reduce needs Z or a polynomial ring")),
            };
        let diffs: Vec<Matrix> = self.diffs.iter().map(|d| d.convert(&target, &map)).collect();
        CochainComplex::new(target, self.min_deg, self.ranks.clone(), diffs)
    }

    /// Is every differential monomial-supported (at most one non-zero entry
    /// per row and per column)?
    pub fn monomial_supported(&self) -> bool {
        for d in &self.diffs {
            for i in 0..d.rows() {
                let nz = (0..d.cols()).filter(|&j| !self.ring.is_zero(d.get(i, j))).count();
                if nz > 1 {
                    return false;
                }
            }
            for j in 0..d.cols() {
                let nz = (0..d.rows()).filter(|&i| !self.ring.is_zero(d.get(i, j))).count();
                if nz > 1 {
                    return false;
                }
            }
        }
        true
    }
}

impl core::fmt::Debug for CochainComplex {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(
            f,
            "CochainComplex[{}..{}] ranks {:?} over {}",
            self.min_deg,
            self.max_deg(),
            self.ranks,
            self.ring.name()
        )
    }
}
