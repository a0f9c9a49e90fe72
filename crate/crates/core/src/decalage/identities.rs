use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::complex::{
    quasi_iso, ChainMap, CochainComplex, ComplexError, PresentedComplex, QuasiIsoMode,
    QuasiIsoVerdict,
};
use crate::linalg::{lattice_canonical, solve_matrix, Matrix};
use crate::ring::{ElementData, RingElement};

use super::bockstein::bockstein;
use super::eta::{composite_basis, eta};

/// Canonical comparison `L-eta_f N tensor A/f -> (H^*(N/f), Bockstein)`:
/// a degree-`n` basis vector `f^n v` maps to the class of `v`. Certified a
/// quasi-isomorphism by acyclicity of the presented-complex cone.
pub fn eta_bockstein_compare(n_complex: &CochainComplex, f: &RingElement) -> Result<QuasiIsoVerdict, ComplexError> {
    let ring = n_complex.ring().clone();
    let e = eta(n_complex, f)?;
    let b = bockstein(n_complex, f)?;
    // left side: the eta complex with every generator cut by (f)
    let left = PresentedComplex {
        pid: ring.clone(),
        min_deg: e.complex.min_deg(),
        divisors: e
            .complex
            .ranks()
            .iter()
            .map(|&r| (0..r).map(|_| f.clone()).collect())
            .collect(),
        diffs: e.complex.diffs().to_vec(),
    };
    let right = b.presented();
    // comparison map: divide the basis column by f^w, take the class
    let mut components: Vec<(i64, Matrix)> = Vec::new();
    for n in e.complex.min_deg()..=e.complex.max_deg() {
        let bn = e.basis_at(n);
        let w = e.weight(n);
        let fw = f.pow(w as u64);
        let target = b
            .module_at(n)
            .ok_or(ComplexError::Malformed("degree ranges differ".into()))?;
        let mut t = Matrix::zero(&ring, target.gen_count(), bn.cols());
        for j in 0..bn.cols() {
            let v: Vec<ElementData> = bn
                .col(j)
                .iter()
                .map(|x| {
                    RingElement::new(ring.clone(), x.clone())
                        .divide_exact(&fw)
                        .ok()
                        .flatten()
                        .map(|q| q.into_data())
                        .ok_or(ComplexError::Malformed("basis column not divisible by f^w".into()))
                })
                .collect::<Result<_, _>>()?;
            let coords = target
                .coords(&v)
                .ok_or(ComplexError::Malformed("comparison image is not a cocycle".into()))?;
            for r in 0..target.gen_count() {
                t.set(r, j, coords[r].clone());
            }
        }
        components.push((n, t));
    }
    let cone = PresentedComplex::cone_of_map(&left, &right, &components)?;
    cone.acyclicity(QuasiIsoMode::Exact)
}

/// Outcome of the base-change leg of [`eta_identities`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaseChangeVerdict {
    Verified,
    /// A hypothesis failed; the case is reported, not decided.
    Skipped(String),
}

/// Report for the multiplicativity and base-change identities.
#[derive(Clone, Debug)]
pub struct EtaIdentitiesReport {
    /// `L-eta_{fg} N = L-eta_f L-eta_g N` as subcomplexes (lattice equality
    /// in every degree).
    pub multiplicative: bool,
    pub base_change: BaseChangeVerdict,
}

/// Check `L-eta_{fg} = L-eta_f . L-eta_g` (exactly, as sublattices of `N`)
/// and the base-change comparison
/// `(L-eta_f N) tensor A/g ~ L-eta_{f mod g}(N tensor A/g)`.
///
/// The encoded base-change hypotheses: `A/g` Euclidean, `f mod g` regular in
/// `A/g`, and `H^0(N/gN)` f-torsion-free. Hypothesis failures are reported
/// as skips, never as errors.
pub fn eta_identities(n_complex: &CochainComplex, f: &RingElement, g: &RingElement) -> Result<EtaIdentitiesReport, ComplexError> {
    let fg = f.mul(g)?;
    let e_fg = eta(n_complex, &fg)?;
    let e_g = eta(n_complex, g)?;
    let e_f_of = eta(&e_g.complex, f)?;
    let composite = composite_basis(&e_f_of, &e_g)?;
    let mut multiplicative = true;
    for (i, comp) in composite.iter().enumerate() {
        let deg = n_complex.min_deg() + i as i64;
        let lhs = lattice_canonical(&e_fg.basis_at(deg))?;
        let rhs = lattice_canonical(comp)?;
        if lhs != rhs {
            multiplicative = false;
        }
    }

    let base_change = base_change_leg(n_complex, f, g)?;
    Ok(EtaIdentitiesReport { multiplicative, base_change })
}

fn base_change_leg(n_complex: &CochainComplex, f: &RingElement, g: &RingElement) -> Result<BaseChangeVerdict, ComplexError> {
    if g.is_unit() {
        // A/g is the zero ring: both sides vanish
        return Ok(BaseChangeVerdict::Verified);
    }
    let reduced = match n_complex.tensor_reduce(g) {
        Ok(c) => c,
        Err(_) => return Ok(BaseChangeVerdict::Skipped(format!("A/({g}) not available"))),
    };
    let qring = reduced.ring().clone();
    if !qring.is_euclidean() {
        return Ok(BaseChangeVerdict::Skipped(format!("A/({g}) is not Euclidean")));
    }
    // f mod g regular (non-zero in the quotient field / domain)
    let f_red = reduce_scalar(f, &qring);
    let f_red = RingElement::new(qring.clone(), f_red);
    if f_red.is_zero() || !qring.is_regular(f_red.data()) {
        return Ok(BaseChangeVerdict::Skipped(format!(
            "f mod g = {f_red} is not regular in A/({g})"
        )));
    }
    // H^0(N/gN) f-torsion-free
    let h0 = crate::complex::cohomology_at(&reduced, n_complex.min_deg())?;
    for d in h0.divisors() {
        if d.is_zero() || d.is_unit() {
            continue;
        }
        let gcd = d.gcd(&f_red).map_err(ComplexError::Ring)?;
        if !gcd.is_unit() {
            return Ok(BaseChangeVerdict::Skipped(format!(
                "H^0(N/gN) has f-torsion (divisor {d})"
            )));
        }
    }
    // both sides and the canonical comparison map
    let e_f = eta(n_complex, f)?;
    let lhs = reduce_complex(&e_f.complex, &qring);
    let rhs = eta(&reduced, &f_red)?;
    let mut comps = Vec::new();
    for deg in lhs.min_deg()..=lhs.max_deg() {
        let cols = reduce_matrix(&e_f.basis_at(deg), &qring);
        let t = solve_matrix(&rhs.basis_at(deg), &cols).ok_or(ComplexError::Malformed(
            "base-change image leaves the eta lattice".into(),
        ))?;
        comps.push(t);
    }
    let map = ChainMap::new(lhs, rhs.complex.clone(), n_complex.min_deg(), comps)?;
    let verdict = quasi_iso(&map, QuasiIsoMode::Exact)?;
    if verdict.is_quasi_iso {
        Ok(BaseChangeVerdict::Verified)
    } else {
        Err(ComplexError::Malformed(format!(
            "base-change comparison failed: witnesses {:?}",
            verdict.witnesses
        )))
    }
}

fn reduce_scalar(x: &RingElement, qring: &crate::ring::Ring) -> ElementData {
    match x.data() {
        ElementData::Int(b) => qring.from_bigint(b),
        other => qring.quot_from_base(other.clone()),
    }
}

fn reduce_complex(c: &CochainComplex, qring: &crate::ring::Ring) -> CochainComplex {
    let diffs: Vec<Matrix> = c
        .diffs()
        .iter()
        .map(|m| reduce_matrix(m, qring))
        .collect();
    CochainComplex::new(qring.clone(), c.min_deg(), c.ranks().to_vec(), diffs)
        .expect("reduction preserves the complex structure")
}

fn reduce_matrix(m: &Matrix, qring: &crate::ring::Ring) -> Matrix {
    m.convert(qring, &|e| match e {
        ElementData::Int(b) => qring.from_bigint(b),
        other => qring.quot_from_base(other.clone()),
    })
}
