use alloc::vec::Vec;

use crate::complex::{cohomology_at, cone, ChainMap, CochainComplex, ComplexError};
use crate::linalg::{solve_in_submodule, solve_matrix, Matrix};
use crate::ring::RingElement;

/// The decalage subcomplex in a chosen basis, with bookkeeping.
#[derive(Clone)]
pub struct EtaResult {
    /// The subcomplex in its new bases (same ranks as the input).
    pub complex: CochainComplex,
    /// Per-degree basis matrices: columns are the basis vectors in the
    /// coordinates of the input complex.
    pub basis: Vec<Matrix>,
    /// The inclusion as a chain map into the input complex.
    pub inclusion: ChainMap,
    /// The scalar and the degree where the `f`-power weighting starts.
    pub f: RingElement,
    pub base_degree: i64,
}

impl EtaResult {
    /// `f`-power used in the given degree.
    pub fn weight(&self, degree: i64) -> u32 {
        (degree - self.base_degree).max(0) as u32
    }

    pub fn basis_at(&self, degree: i64) -> Matrix {
        let i = degree - self.complex.min_deg();
        if i >= 0 && (i as usize) < self.basis.len() {
            self.basis[i as usize].clone()
        } else {
            Matrix::zero(self.complex.ring(), 0, 0)
        }
    }
}

/// Compute `L-eta_f` of a free complex.
///
/// Degreewise, with `w = n - base`: a basis of the lattice
/// `{y : d y in f N}` is computed (by Hermite reduction over a Euclidean
/// ring, or diagonally for a monomial-supported complex over a tower domain),
/// and the degree-`n` part is `f^w` times that lattice. The differentials are
/// re-expressed in the new bases by exact solving.
pub fn eta(n_complex: &CochainComplex, f: &RingElement) -> Result<EtaResult, ComplexError> {
    let ring = n_complex.ring().clone();
    if f.ring() != &ring {
        return Err(ComplexError::Malformed("scalar from a different ring".into()));
    }
    if f.is_zero() || !ring.is_regular(f.data()) {
        return Err(ComplexError::Ring(crate::ring::RingError::ZeroDivisor));
    }
    if n_complex.is_empty() {
        return Ok(EtaResult {
            complex: n_complex.clone(),
            basis: Vec::new(),
            inclusion: ChainMap::identity(n_complex),
            f: f.clone(),
            base_degree: 0,
        });
    }
    let base = (n_complex.min_deg()..=n_complex.max_deg())
        .find(|&d| n_complex.rank_at(d) > 0)
        .unwrap_or(n_complex.min_deg());

    let euclidean = ring.is_euclidean();
    if !euclidean && !(ring.is_domain() && n_complex.monomial_supported()) {
        return Err(ComplexError::Unsupported(
            "eta needs a Euclidean ring or a monomial-supported complex over a domain",
        ));
    }

    // lattice bases Y_n of {y : d y in f N^{n+1}}
    let mut lattices: Vec<Matrix> = Vec::new();
    for deg in n_complex.min_deg()..=n_complex.max_deg() {
        let d = n_complex.diff_at(deg);
        let y = if euclidean {
            solve_in_submodule(&d, f)?
        } else {
            diagonal_preimage_lattice(&d, f)?
        };
        lattices.push(y);
    }

    // scale by f^w and rewrite differentials
    let mut basis: Vec<Matrix> = Vec::new();
    for (i, y) in lattices.iter().enumerate() {
        let deg = n_complex.min_deg() + i as i64;
        let w = (deg - base).max(0) as u64;
        let fw = f.pow(w);
        basis.push(y.scale(fw.data()));
    }
    let mut diffs: Vec<Matrix> = Vec::new();
    for i in 0..basis.len().saturating_sub(1) {
        let deg = n_complex.min_deg() + i as i64;
        let db = n_complex.diff_at(deg).mul(&basis[i])?;
        let x = if euclidean {
            solve_matrix(&basis[i + 1], &db)
                .ok_or(ComplexError::Malformed("eta image outside the next lattice".into()))?
        } else {
            diagonal_solve(&basis[i + 1], &db)?
        };
        diffs.push(x);
    }
    let ranks: Vec<usize> = basis.iter().map(|b| b.cols()).collect();
    let complex = CochainComplex::new(ring.clone(), n_complex.min_deg(), ranks, diffs)?;
    // defining property: basis vectors lie in f^w N and map into f^(w+1) N
    debug_assert!(defining_property_holds(n_complex, f, base, &basis));
    let inclusion = ChainMap::new(
        complex.clone(),
        n_complex.clone(),
        complex.min_deg(),
        basis.clone(),
    )?;
    Ok(EtaResult { complex, basis, inclusion, f: f.clone(), base_degree: base })
}

fn defining_property_holds(n_complex: &CochainComplex, f: &RingElement, base: i64, basis: &[Matrix]) -> bool {
    let ring = n_complex.ring();
    for (i, b) in basis.iter().enumerate() {
        let deg = n_complex.min_deg() + i as i64;
        let w = (deg - base).max(0) as u64;
        let fw = f.pow(w);
        let fw1 = f.pow(w + 1);
        for j in 0..b.cols() {
            for r in 0..b.rows() {
                let e = RingElement::new(ring.clone(), b.get(r, j).clone());
                if e.divide_exact(&fw).map(|o| o.is_none()).unwrap_or(true) {
                    return false;
                }
            }
            let img = n_complex.diff_at(deg).mul_vec(&b.col(j));
            for v in img {
                let e = RingElement::new(ring.clone(), v);
                if e.divide_exact(&fw1).map(|o| o.is_none()).unwrap_or(true) {
                    return false;
                }
            }
        }
    }
    true
}

/// `{y : d y in f A^rows}` for a monomial-supported `d` over a domain with
/// gcds: each coordinate decouples to `y_j in (f / gcd(f, c_j)) A`.
fn diagonal_preimage_lattice(d: &Matrix, f: &RingElement) -> Result<Matrix, ComplexError> {
    let ring = d.ring().clone();
    let mut out = Matrix::zero(&ring, d.cols(), d.cols());
    for j in 0..d.cols() {
        let c = (0..d.rows()).find(|&i| !ring.is_zero(d.get(i, j)));
        let gen = match c {
            None => RingElement::one(&ring),
            Some(i) => {
                let cj = d.at(i, j);
                let g = cj.gcd(f)?;
                f.divide_exact(&g)?
                    .ok_or(ComplexError::Malformed("gcd does not divide f".into()))?
            }
        };
        out.set(j, j, gen.into_data());
    }
    Ok(out)
}

/// Solve `B X = T` when `B` is diagonal (monomial path), by exact division.
fn diagonal_solve(b: &Matrix, t: &Matrix) -> Result<Matrix, ComplexError> {
    let ring = b.ring().clone();
    let mut x = Matrix::zero(&ring, b.cols(), t.cols());
    for j in 0..t.cols() {
        for i in 0..b.rows() {
            if ring.is_zero(t.get(i, j)) {
                continue;
            }
            let q = RingElement::new(ring.clone(), t.get(i, j).clone())
                .divide_exact(&b.at(i, i))?
                .ok_or(ComplexError::Malformed("eta image not divisible by basis".into()))?;
            x.set(i, j, q.into_data());
        }
    }
    Ok(x)
}

/// The natural transformation `L-eta_f -> id` as the inclusion chain map.
pub fn eta_nat(n_complex: &CochainComplex, f: &RingElement) -> Result<ChainMap, ComplexError> {
    Ok(eta(n_complex, f)?.inclusion)
}

/// Certify that the natural map becomes a quasi-isomorphism after inverting
/// `f`: every elementary divisor of the cone cohomology must divide `f^T`
/// with `T <= 2 * (top degree - base degree)` (capped below by 1).
///
/// Returns the divisors found (normalized), or an error naming the first
/// divisor that fails.
pub fn eta_nat_check(n_complex: &CochainComplex, f: &RingElement) -> Result<Vec<RingElement>, ComplexError> {
    let e = eta(n_complex, f)?;
    let c = cone(&e.inclusion)?;
    let span = (n_complex.max_deg() - e.base_degree).max(1) as u64;
    let ft = f.pow(2 * span);
    let mut found = Vec::new();
    for n in c.min_deg()..=c.max_deg() {
        let h = cohomology_at(&c, n)?;
        for d in h.divisors() {
            if d.is_unit() {
                continue;
            }
            if d.is_zero() || ft.divide_exact(&d).map(|o| o.is_none()).unwrap_or(true) {
                return Err(ComplexError::Malformed(alloc::format!(
                    "cone divisor {d} does not divide f^{}",
                    2 * span
                )));
            }
            found.push(d);
        }
    }
    Ok(found)
}

/// Convenience: `eta` caches nothing across calls; this helper exposes the
/// bases for comparisons of iterated applications as sublattices of the
/// ambient complex.
pub fn composite_basis(outer: &EtaResult, inner: &EtaResult) -> Result<Vec<Matrix>, ComplexError> {
    let mut out = Vec::new();
    for i in 0..outer.basis.len() {
        let deg = outer.complex.min_deg() + i as i64;
        let b_inner = inner.basis_at(deg);
        out.push(b_inner.mul(&outer.basis[i])?);
    }
    Ok(out)
}
