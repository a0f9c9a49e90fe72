use alloc::string::String;
use alloc::vec::Vec;

use crate::linalg::Matrix;
use crate::ring::{Ring, RingElement};

use super::{cohomology_at, CochainComplex, ComplexError};

/// A degreewise map of complexes commuting exactly with the differentials.
#[derive(Clone)]
pub struct ChainMap {
    pub source: CochainComplex,
    pub target: CochainComplex,
    /// Component in each degree of the combined support range.
    components: Vec<Matrix>,
    min_deg: i64,
}

impl ChainMap {
    pub fn new(source: CochainComplex, target: CochainComplex, min_deg: i64, components: Vec<Matrix>) -> Result<ChainMap, ComplexError> {
        let m = ChainMap { source, target, components, min_deg };
        m.validate()?;
        Ok(m)
    }

    /// The zero map.
    pub fn zero(source: CochainComplex, target: CochainComplex) -> ChainMap {
        ChainMap { source, target, components: Vec::new(), min_deg: 0 }
    }

    /// The identity on `c`.
    pub fn identity(c: &CochainComplex) -> ChainMap {
        let comps = (c.min_deg()..=c.max_deg())
            .map(|d| Matrix::identity(c.ring(), c.rank_at(d)))
            .collect();
        ChainMap {
            source: c.clone(),
            target: c.clone(),
            components: comps,
            min_deg: c.min_deg(),
        }
    }

    pub fn component(&self, degree: i64) -> Matrix {
        let i = degree - self.min_deg;
        if i >= 0 && (i as usize) < self.components.len() {
            self.components[i as usize].clone()
        } else {
            Matrix::zero(self.source.ring(), self.target.rank_at(degree), self.source.rank_at(degree))
        }
    }

    pub fn validate(&self) -> Result<(), ComplexError> {
        if self.source.ring() != self.target.ring() {
            return Err(ComplexError::Malformed("chain map across different rings".into()));
        }
        for (i, c) in self.components.iter().enumerate() {
            let d = self.min_deg + i as i64;
            if c.rows() != self.target.rank_at(d) || c.cols() != self.source.rank_at(d) {
                return Err(ComplexError::Malformed(alloc::format!(
                    "component at degree {d} has wrong shape"
                )));
            }
        }
        let lo = core::cmp::min(self.source.min_deg(), self.target.min_deg());
        let hi = core::cmp::max(self.source.max_deg(), self.target.max_deg());
        for d in lo..hi {
            let left = self.target.diff_at(d).mul(&self.component(d))?;
            let right = self.component(d + 1).mul(&self.source.diff_at(d))?;
            let diff = left.add(&right.neg())?;
            if !diff.is_zero() {
                return Err(ComplexError::NotChainMap { degree: d });
            }
        }
        Ok(())
    }
}

/// Mapping cone: `Cone(f)^n = C^{n+1} (+) D^n`, `d(c, x) = (-dc, f(c) + dx)`.
pub fn cone(f: &ChainMap) -> Result<CochainComplex, ComplexError> {
    let ring = f.source.ring().clone();
    if f.source.is_empty() && f.target.is_empty() {
        return Ok(CochainComplex::empty(&ring));
    }
    let lo = core::cmp::min(f.source.min_deg() - 1, f.target.min_deg());
    let hi = core::cmp::max(f.source.max_deg() - 1, f.target.max_deg());
    let ranks: Vec<usize> = (lo..=hi)
        .map(|n| f.source.rank_at(n + 1) + f.target.rank_at(n))
        .collect();
    let mut diffs = Vec::new();
    for n in lo..hi {
        let sc = f.source.rank_at(n + 1);
        let tc = f.target.rank_at(n);
        let sr = f.source.rank_at(n + 2);
        let tr = f.target.rank_at(n + 1);
        let ds = f.source.diff_at(n + 1);
        let dt = f.target.diff_at(n);
        let fc = f.component(n + 1);
        let mut m = Matrix::zero(&ring, sr + tr, sc + tc);
        for i in 0..sr {
            for j in 0..sc {
                m.set(i, j, ring.neg(ds.get(i, j)));
            }
        }
        for i in 0..tr {
            for j in 0..sc {
                m.set(sr + i, j, fc.get(i, j).clone());
            }
        }
        for i in 0..tr {
            for j in 0..tc {
                m.set(sr + i, sc + j, dt.get(i, j).clone());
            }
        }
        diffs.push(m);
    }
    CochainComplex::new(ring, lo, ranks, diffs)
}

/// Certification mode for quasi-isomorphisms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuasiIsoMode {
    /// The cone must be exactly acyclic.
    Exact,
    /// Every non-zero elementary divisor of the cone cohomology must be a
    /// unit in the `(p, q_k - 1)`-adic truncation with these exponents.
    UpToJunk { p_exp: u32, adic_exp: u32 },
}

/// Verdict with the witnessing divisors per degree.
#[derive(Clone, Debug)]
pub struct QuasiIsoVerdict {
    pub is_quasi_iso: bool,
    /// Non-unit divisors (or free ranks rendered as "0") found in the cone
    /// cohomology, per degree, as display strings.
    pub witnesses: Vec<(i64, Vec<String>)>,
}

/// Decide quasi-isomorphism via cone acyclicity.
pub fn quasi_iso(f: &ChainMap, mode: QuasiIsoMode) -> Result<QuasiIsoVerdict, ComplexError> {
    let c = cone(f)?;
    cone_acyclicity(&c, mode)
}

pub(crate) fn cone_acyclicity(c: &CochainComplex, mode: QuasiIsoMode) -> Result<QuasiIsoVerdict, ComplexError> {
    let mut ok = true;
    let mut witnesses = Vec::new();
    for n in c.min_deg()..=c.max_deg() {
        let h = cohomology_at(c, n)?;
        let mut bad: Vec<String> = Vec::new();
        for d in h.divisors() {
            if d.is_unit() {
                continue;
            }
            let pass = match mode {
                QuasiIsoMode::Exact => false,
                QuasiIsoMode::UpToJunk { p_exp, adic_exp } => {
                    if d.is_zero() {
                        false
                    } else {
                        junk_unit(&d, p_exp, adic_exp)?
                    }
                }
            };
            if !pass {
                ok = false;
                bad.push(alloc::format!("{d}"));
            }
        }
        if !bad.is_empty() {
            witnesses.push((n, bad));
        }
    }
    Ok(QuasiIsoVerdict { is_quasi_iso: ok, witnesses })
}

fn junk_unit(d: &RingElement, p_exp: u32, adic_exp: u32) -> Result<bool, ComplexError> {
    let ring: &Ring = d.ring();
    if ring.tower_params().is_some() {
        Ok(crate::ring::unit_in_truncation(d, p_exp, adic_exp)?)
    } else {
        // outside tower rings "junk" degenerates to ordinary units
        Ok(d.is_unit())
    }
}
