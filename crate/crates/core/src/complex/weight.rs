use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::ring::Ring;

use super::{CochainComplex, ComplexError};

/// A complex graded by weights `w` in `(p^{-k} Z)^d` with `|w|_inf <= B`.
///
/// Weights are stored by their numerator vectors `a` (so `w = a / p^k`),
/// `|a_i| <= B * p^k`. Differentials preserve weight by construction: the
/// family is simply a block per weight. Any operation that would produce a
/// weight outside the band must fail loudly rather than truncate.
#[derive(Clone, Debug)]
pub struct WeightGradedComplex {
    pub ring: Ring,
    pub dim: usize,
    /// Grid denominator `p^k`.
    pub denom: i64,
    /// Band bound `B` (on the weight itself, not the numerator).
    pub band: i64,
    pub blocks: BTreeMap<Vec<i64>, CochainComplex>,
}

impl WeightGradedComplex {
    pub fn new(ring: Ring, dim: usize, denom: i64, band: i64) -> WeightGradedComplex {
        WeightGradedComplex { ring, dim, denom, band, blocks: BTreeMap::new() }
    }

    pub fn numerator_bound(&self) -> i64 {
        self.band * self.denom
    }

    pub fn in_band(&self, numerator: &[i64]) -> bool {
        numerator.iter().all(|a| a.abs() <= self.numerator_bound())
    }

    pub fn insert(&mut self, numerator: Vec<i64>, block: CochainComplex) -> Result<(), ComplexError> {
        if numerator.len() != self.dim {
            return Err(ComplexError::Malformed("weight dimension mismatch".into()));
        }
        if !self.in_band(&numerator) {
            return Err(ComplexError::WeightOverflow(alloc::format!("{numerator:?}")));
        }
        self.blocks.insert(numerator, block);
        Ok(())
    }

    pub fn block(&self, numerator: &[i64]) -> Option<&CochainComplex> {
        self.blocks.get(numerator)
    }

    /// Weights with all numerators divisible by `p^k` (integral weights).
    pub fn is_integral(&self, numerator: &[i64]) -> bool {
        numerator.iter().all(|a| a.rem_euclid(self.denom) == 0)
    }

    /// Every block validates; differentials are block-diagonal by
    /// construction, so this is the whole complex-structure check.
    pub fn validate(&self) -> Result<(), ComplexError> {
        for b in self.blocks.values() {
            b.validate()?;
        }
        Ok(())
    }

    /// Assemble the direct sum over all blocks (sorted by weight) into a
    /// single flat complex; block offsets are returned alongside.
    pub fn assemble(&self) -> Result<CochainComplex, ComplexError> {
        let mut acc = CochainComplex::empty(&self.ring);
        for b in self.blocks.values() {
            acc = acc.direct_sum(b)?;
        }
        Ok(acc)
    }

    /// Sorted list of weight numerators.
    pub fn weights(&self) -> Vec<Vec<i64>> {
        self.blocks.keys().cloned().collect()
    }
}
