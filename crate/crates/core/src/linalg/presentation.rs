//! Finitely presented modules: elementary divisors and Fitting ideals.

use alloc::vec::Vec;

use crate::ring::{Ring, RingElement};

use super::{smith_form, LinalgError, Matrix};

/// Cokernel presentation of a finitely generated module.
///
/// `relations` is an `m x n` matrix whose rows are relation vectors among `n`
/// generators; the module is `R^n / rowspan`. Elementary divisors are cached
/// when the ring permits their computation.
#[derive(Clone, Debug)]
pub struct ModulePresentation {
    pub ring: Ring,
    pub relations: Matrix,
    divisors: Option<(Vec<RingElement>, usize)>,
}

impl ModulePresentation {
    pub fn new(relations: Matrix) -> ModulePresentation {
        ModulePresentation {
            ring: relations.ring().clone(),
            relations,
            divisors: None,
        }
    }

    /// Number of generators.
    pub fn generators(&self) -> usize {
        self.relations.cols()
    }

    /// The trivial (zero) module on zero generators.
    pub fn zero_module(ring: &Ring) -> ModulePresentation {
        ModulePresentation::new(Matrix::zero(ring, 0, 0))
    }

    /// Free module of a given rank.
    pub fn free(ring: &Ring, rank: usize) -> ModulePresentation {
        ModulePresentation::new(Matrix::zero(ring, 0, rank))
    }

    /// Elementary divisors (units removed) and free rank; cached.
    pub fn elementary_divisors(&mut self) -> Result<(Vec<RingElement>, usize), LinalgError> {
        if let Some(d) = &self.divisors {
            return Ok(d.clone());
        }
        let d = elementary_divisors(&self.relations)?;
        self.divisors = Some(d.clone());
        Ok(d)
    }

    /// Is this the zero module? (No free part, no non-unit divisor.)
    pub fn is_trivial(&mut self) -> Result<bool, LinalgError> {
        let (div, free) = self.elementary_divisors()?;
        Ok(free == 0 && div.is_empty())
    }
}

/// Elementary divisors of the cokernel of `relations`, with units removed,
/// plus the free rank (`generators - #nonzero diagonal entries`).
pub fn elementary_divisors(relations: &Matrix) -> Result<(Vec<RingElement>, usize), LinalgError> {
    let s = smith_form(relations)?;
    let nonzero = s.factors();
    let free = relations.cols() - nonzero.len();
    let divisors: Vec<RingElement> = nonzero.into_iter().filter(|d| !d.is_unit()).collect();
    Ok((divisors, free))
}

/// The `i`-th Fitting ideal of the presented module, as a principal generator.
///
/// With the divisor chain `d_1 | d_2 | ...` (units included) on `n`
/// generators, `Fitt_i` is generated by the product of the first `n - i`
/// chain entries, zero when fewer than `n - i` non-zero entries exist, and
/// the unit ideal for `i >= n`.
pub fn fitting_ideal(presentation: &Matrix, i: usize) -> Result<RingElement, LinalgError> {
    let ring = presentation.ring().clone();
    let n = presentation.cols();
    if i >= n {
        return Ok(RingElement::one(&ring));
    }
    let s = smith_form(presentation)?;
    let chain = s.factors(); // nonzero, ascending divisibility, units included
    let need = n - i;
    if need > chain.len() {
        return Ok(RingElement::zero(&ring));
    }
    let mut prod = RingElement::one(&ring);
    for d in chain.iter().take(need) {
        prod = prod.mul(d).map_err(LinalgError::Ring)?;
    }
    Ok(prod)
}
