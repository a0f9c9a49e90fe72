//! Cohomology as presented modules over a covering PID.
//!
//! Every coefficient ring in use is either a Euclidean domain `P` or a
//! quotient `P/(m)`; modules over the latter are presented as `P`-modules
//! with `m` joining the relation lattice. A [`CohomologyModule`] is a
//! subquotient `Z/B` of an ambient free lattice together with a diagonalized
//! generator system, so membership, class coordinates and triviality are all
//! decidable. [`PresentedComplex`] extends this to complexes whose terms are
//! presented modules (Bockstein complexes, process towers), with cones and
//! acyclicity in the same framework.

use alloc::string::String;
use alloc::vec::Vec;

use crate::linalg::{
    kernel, lattice_canonical, smith_form, solve_matrix, solve_vec, Matrix,
};
use crate::ring::{ElementData, Ring, RingDescriptor, RingElement};

use super::chain_map::QuasiIsoMode;
use super::{CochainComplex, ComplexError};

/// A subquotient `Z/B` of `P^ambient` with a diagonalized generator system:
/// the module is `(+)_i P/(d_i)` on the columns of `gens`.
#[derive(Clone, Debug)]
pub struct CohomologyModule {
    pid: Ring,
    ambient_rank: usize,
    z_basis: Matrix,
    gens: Matrix,
    u: Matrix,
    divisors: Vec<RingElement>,
}

impl CohomologyModule {
    /// Present `span(z_basis) / span(boundaries)`; boundary columns must lie
    /// in the span of `z_basis`.
    pub fn from_lattices(pid: &Ring, z_basis: Matrix, boundaries: &Matrix) -> Result<CohomologyModule, ComplexError> {
        let z = z_basis.cols();
        let y = solve_matrix(&z_basis, boundaries)
            .ok_or(ComplexError::Malformed("boundaries outside the cocycle lattice".into()))?;
        let s = smith_form(&y)?;
        let uinv = solve_matrix(&s.u, &Matrix::identity(pid, z))
            .ok_or(ComplexError::Malformed("singular Smith transform".into()))?;
        let gens = z_basis.mul(&uinv)?;
        let n = core::cmp::min(s.d.rows(), s.d.cols());
        let mut divisors = Vec::with_capacity(z);
        for i in 0..z {
            if i < n {
                divisors.push(s.d.at(i, i));
            } else {
                divisors.push(RingElement::zero(pid));
            }
        }
        Ok(CohomologyModule {
            pid: pid.clone(),
            ambient_rank: z_basis.rows(),
            z_basis,
            gens,
            u: s.u,
            divisors,
        })
    }

    pub fn pid(&self) -> &Ring {
        &self.pid
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    /// Generator representatives (ambient vectors), aligned with `divisors`.
    pub fn gens(&self) -> &Matrix {
        &self.gens
    }

    /// Divisor chain aligned with the generators: a unit marks a collapsed
    /// generator, zero marks a free one.
    pub fn divisors(&self) -> Vec<RingElement> {
        self.divisors.clone()
    }

    /// Non-zero, non-unit divisors (the torsion annihilators).
    pub fn nonunit_divisors(&self) -> Vec<RingElement> {
        self.divisors
            .iter()
            .filter(|d| !d.is_zero() && !d.is_unit())
            .cloned()
            .collect()
    }

    pub fn free_rank(&self) -> usize {
        self.divisors.iter().filter(|d| d.is_zero()).count()
    }

    pub fn is_trivial(&self) -> bool {
        self.divisors.iter().all(|d| d.is_unit())
    }

    /// Class coordinates of an ambient vector: `None` when the vector is not
    /// in the cocycle lattice; otherwise one entry per generator, reduced
    /// modulo its divisor.
    pub fn coords(&self, v: &[ElementData]) -> Option<Vec<ElementData>> {
        let y = solve_vec(&self.z_basis, v)?;
        let w = self.u.mul_vec(&y);
        Some(self.reduce_coords(w))
    }

    pub(crate) fn reduce_coords(&self, w: Vec<ElementData>) -> Vec<ElementData> {
        let ring = &self.pid;
        w.into_iter()
            .zip(self.divisors.iter())
            .map(|(x, d)| {
                if d.is_zero() {
                    x
                } else {
                    ring.euclid_divmod(&x, d.data()).map(|(_, r)| r).unwrap_or(x)
                }
            })
            .collect()
    }

    pub fn class_is_zero(&self, v: &[ElementData]) -> Option<bool> {
        let c = self.coords(v)?;
        Some(c.iter().all(|x| self.pid.is_zero(x)))
    }

    /// Number of generators (including collapsed ones).
    pub fn gen_count(&self) -> usize {
        self.divisors.len()
    }

    /// Dimension over the base field when the pid is `F_p[x]`-like and the
    /// module is torsion (`None` when a free generator makes it infinite).
    pub fn fd_dimension(&self) -> Option<u64> {
        let mut dim = 0u64;
        for d in &self.divisors {
            if d.is_zero() {
                return None;
            }
            dim += poly_degree(d)? as u64;
        }
        Some(dim)
    }
}

fn poly_degree(d: &RingElement) -> Option<usize> {
    match d.data() {
        ElementData::Poly(p) => {
            if p.coeffs.is_empty() {
                None
            } else {
                Some(p.coeffs.len() - 1)
            }
        }
        _ => None,
    }
}

/// Lift an element of `ring` into its covering PID.
pub(crate) fn lift_entry(ring: &Ring, pid: &Ring, e: &ElementData) -> ElementData {
    match (ring.descriptor(), e) {
        (RingDescriptor::Quotient { .. }, ElementData::Quot(x)) => (**x).clone(),
        (RingDescriptor::IntegersMod(_), ElementData::Mod(x)) => pid.from_i64(*x as i64),
        _ => e.clone(),
    }
}

pub(crate) fn lift_matrix(m: &Matrix, ring: &Ring, pid: &Ring) -> Matrix {
    if ring == pid {
        return m.clone();
    }
    m.convert(pid, &|e| lift_entry(ring, pid, e))
}

/// Cohomology of a free complex at one degree, over the covering PID.
pub fn cohomology_at(c: &CochainComplex, n: i64) -> Result<CohomologyModule, ComplexError> {
    let ring = c.ring().clone();
    let (pid, modulus) = ring
        .pid_cover()
        .ok_or(ComplexError::Unsupported("cohomology needs a Euclidean ring or a quotient of one"))?;
    let dn = lift_matrix(&c.diff_at(n), &ring, &pid);
    let dm = lift_matrix(&c.diff_at(n - 1), &ring, &pid);
    let rank = c.rank_at(n);
    let z = match &modulus {
        None => lattice_canonical(&kernel(&dn)?)?,
        Some(m) => crate::linalg::solve_in_submodule(&dn, m)?,
    };
    let boundaries = match &modulus {
        None => dm,
        Some(m) => {
            let mi = Matrix::identity(&pid, rank).scale(m.data());
            dm.hstack(&mi)?
        }
    };
    CohomologyModule::from_lattices(&pid, z, &boundaries)
}

/// Per-degree cohomology summary.
#[derive(Clone, Debug)]
pub struct CohomologySummary {
    pub degree: i64,
    pub free_rank: usize,
    /// Non-unit, non-zero elementary divisors, normalized.
    pub divisors: Vec<RingElement>,
    /// Dimension over the prime field, in finite-dimensional-algebra mode.
    pub dimension: Option<u64>,
    /// Action of the polynomial variable on the generators, in
    /// finite-dimensional-algebra mode.
    pub q_action: Option<Matrix>,
}

/// Cohomology of the whole complex as a report of module presentations.
#[derive(Clone, Debug)]
pub struct CohomologyReport {
    pub summaries: Vec<CohomologySummary>,
}

impl CohomologyReport {
    pub fn at(&self, degree: i64) -> Option<&CohomologySummary> {
        self.summaries.iter().find(|s| s.degree == degree)
    }

    /// Alternating sum of free ranks (defined when all torsion is non-zero).
    pub fn euler_characteristic(&self) -> i64 {
        self.summaries
            .iter()
            .map(|s| {
                let sign = if s.degree.rem_euclid(2) == 0 { 1i64 } else { -1 };
                sign * s.free_rank as i64
            })
            .sum()
    }
}

/// Cohomology presentations in every degree.
///
/// Rings: any with a covering PID (Euclidean domains, `Z/m`, quotients of
/// Euclidean rings); additionally, monomial-supported complexes over a
/// non-Euclidean tower domain are handled diagonally.
pub fn cohomology(c: &CochainComplex) -> Result<CohomologyReport, ComplexError> {
    let ring = c.ring().clone();
    if ring.pid_cover().is_some() {
        let fd_mode = matches!(ring.descriptor(), RingDescriptor::Quotient { base, .. } if base.char_prime().is_some());
        let mut summaries = Vec::new();
        for n in c.min_deg()..=c.max_deg() {
            let h = cohomology_at(c, n)?;
            let q_action = if fd_mode { q_action_matrix(&h)? } else { None };
            summaries.push(CohomologySummary {
                degree: n,
                free_rank: h.free_rank(),
                divisors: h.nonunit_divisors(),
                dimension: if fd_mode { h.fd_dimension() } else { None },
                q_action,
            });
        }
        return Ok(CohomologyReport { summaries });
    }
    if ring.is_domain() && c.monomial_supported() {
        return diagonal_cohomology(c);
    }
    Err(ComplexError::Unsupported(
        "cohomology over this ring needs a monomial-supported (weight-diagonal) complex",
    ))
}

fn q_action_matrix(h: &CohomologyModule) -> Result<Option<Matrix>, ComplexError> {
    let pid = h.pid().clone();
    if pid.var_name().is_none() {
        return Ok(None);
    }
    let z = h.gen_count();
    let q = pid.var();
    let mut m = Matrix::zero(&pid, z, z);
    for j in 0..z {
        let col: Vec<ElementData> = (0..h.ambient_rank()).map(|i| pid.mul(&q, h.gens().get(i, j))).collect();
        let coords = h
            .coords(&col)
            .ok_or(ComplexError::Malformed("q-action leaves the cocycle lattice".into()))?;
        for i in 0..z {
            m.set(i, j, coords[i].clone());
        }
    }
    Ok(Some(m))
}

/// Strand-wise cohomology of a monomial-supported complex over a domain:
/// a basis vector with a non-zero outgoing scalar contributes nothing, all
/// others contribute `A/(incoming scalar)` (free when there is none).
fn diagonal_cohomology(c: &CochainComplex) -> Result<CohomologyReport, ComplexError> {
    let ring = c.ring().clone();
    let mut summaries = Vec::new();
    for n in c.min_deg()..=c.max_deg() {
        let dn = c.diff_at(n);
        let dm = c.diff_at(n - 1);
        let mut free = 0usize;
        let mut divisors = Vec::new();
        for j in 0..c.rank_at(n) {
            let out_nonzero = (0..dn.rows()).any(|i| !ring.is_zero(dn.get(i, j)));
            if out_nonzero {
                continue;
            }
            let incoming = (0..dm.cols()).find(|&jj| !ring.is_zero(dm.get(j, jj)));
            match incoming {
                None => free += 1,
                Some(jj) => {
                    let d = RingElement::new(ring.clone(), dm.get(j, jj).clone());
                    let (normal, _) = normalize(&d);
                    if !normal.is_unit() {
                        divisors.push(normal);
                    }
                }
            }
        }
        summaries.push(CohomologySummary {
            degree: n,
            free_rank: free,
            divisors,
            dimension: None,
            q_action: None,
        });
    }
    Ok(CohomologyReport { summaries })
}

fn normalize(d: &RingElement) -> (RingElement, RingElement) {
    let (n, u) = d.ring().normalize_associate(d.data());
    (
        RingElement::new(d.ring().clone(), n),
        RingElement::new(d.ring().clone(), u),
    )
}

/// A bounded complex of presented modules `(+)_i P/(d_i)` over one PID, with
/// differentials given on generators (entries reduced per target divisor).
#[derive(Clone, Debug)]
pub struct PresentedComplex {
    pub pid: Ring,
    pub min_deg: i64,
    /// Divisor chain per degree; the degree-`n` module is `(+) P/(d_i)`.
    pub divisors: Vec<Vec<RingElement>>,
    /// `diffs[i]`: generator matrix from degree `min+i` to `min+i+1`.
    pub diffs: Vec<Matrix>,
}

impl PresentedComplex {
    /// Reinterpret a free complex over `P` or `P/(m)` as a presented complex
    /// over `P` (each free rank-one summand becomes `P/(m)`, or `P` itself).
    pub fn from_free(c: &CochainComplex) -> Result<PresentedComplex, ComplexError> {
        let ring = c.ring().clone();
        let (pid, modulus) = ring
            .pid_cover()
            .ok_or(ComplexError::Unsupported("presented complexes need a covering PID"))?;
        let d0 = modulus
            .map(|m| m)
            .unwrap_or_else(|| RingElement::zero(&pid));
        let divisors: Vec<Vec<RingElement>> = c
            .ranks()
            .iter()
            .map(|&r| (0..r).map(|_| d0.clone()).collect())
            .collect();
        let diffs: Vec<Matrix> = c.diffs().iter().map(|m| lift_matrix(m, &ring, &pid)).collect();
        Ok(PresentedComplex { pid, min_deg: c.min_deg(), divisors, diffs })
    }

    pub fn max_deg(&self) -> i64 {
        self.min_deg + self.divisors.len() as i64 - 1
    }

    pub fn gen_count_at(&self, n: i64) -> usize {
        let i = n - self.min_deg;
        if i < 0 || i as usize >= self.divisors.len() {
            0
        } else {
            self.divisors[i as usize].len()
        }
    }

    pub fn divisors_at(&self, n: i64) -> Vec<RingElement> {
        let i = n - self.min_deg;
        if i < 0 || i as usize >= self.divisors.len() {
            Vec::new()
        } else {
            self.divisors[i as usize].clone()
        }
    }

    pub fn diff_at(&self, n: i64) -> Matrix {
        let i = n - self.min_deg;
        if i >= 0 && (i as usize) < self.diffs.len() {
            self.diffs[i as usize].clone()
        } else {
            Matrix::zero(&self.pid, self.gen_count_at(n + 1), self.gen_count_at(n))
        }
    }

    fn relation_matrix(&self, n: i64) -> Matrix {
        let ds = self.divisors_at(n);
        let mut m = Matrix::zero(&self.pid, ds.len(), ds.len());
        for (i, d) in ds.iter().enumerate() {
            m.set(i, i, d.data().clone());
        }
        m
    }

    /// Checks shapes, well-definedness of the differentials on the presented
    /// modules, and `d.d = 0` in class coordinates.
    pub fn validate(&self) -> Result<(), ComplexError> {
        for n in self.min_deg..self.max_deg() {
            let d = self.diff_at(n);
            if d.rows() != self.gen_count_at(n + 1) || d.cols() != self.gen_count_at(n) {
                return Err(ComplexError::Malformed(alloc::format!(
                    "presented differential at degree {n} has wrong shape"
                )));
            }
            // well-defined: d * rel_n lands in rel_{n+1}
            let img = d.mul(&self.relation_matrix(n))?;
            if !self.class_matrix_is_zero(n + 1, &img)? {
                return Err(ComplexError::Malformed(alloc::format!(
                    "presented differential at degree {n} not well defined"
                )));
            }
            // d.d = 0 modulo relations
            let dd = self.diff_at(n + 1).mul(&d)?;
            if !self.class_matrix_is_zero(n + 2, &dd)? {
                return Err(ComplexError::NotAComplex { degree: n });
            }
        }
        Ok(())
    }

    fn class_matrix_is_zero(&self, target_deg: i64, m: &Matrix) -> Result<bool, ComplexError> {
        let rel = self.relation_matrix(target_deg);
        if m.is_zero() {
            return Ok(true);
        }
        Ok(solve_matrix(&rel, m).is_some())
    }

    /// Cohomology at one degree, as a subquotient of the generator lattice.
    pub fn cohomology_at(&self, n: i64) -> Result<CohomologyModule, ComplexError> {
        let dn = self.diff_at(n);
        let rel_next = self.relation_matrix(n + 1);
        let aug = dn.hstack(&Matrix::zero(&self.pid, dn.rows(), 0))?;
        // cocycles: {x : d x in rel_{n+1}}
        let z = if dn.rows() == 0 {
            Matrix::identity(&self.pid, self.gen_count_at(n))
        } else {
            let k = kernel(&aug.hstack(&rel_next)?)?;
            let top: Vec<usize> = (0..dn.cols()).collect();
            let proj = Matrix::from_fn(&self.pid, dn.cols(), k.cols(), |i, j| k.get(top[i], j).clone());
            lattice_canonical(&proj)?
        };
        let boundaries = self.diff_at(n - 1).hstack(&self.relation_matrix(n))?;
        CohomologyModule::from_lattices(&self.pid, z, &boundaries)
    }

    /// Acyclicity with witnesses, in exact or junk mode.
    pub fn acyclicity(&self, mode: QuasiIsoMode) -> Result<super::QuasiIsoVerdict, ComplexError> {
        let mut ok = true;
        let mut witnesses: Vec<(i64, Vec<String>)> = Vec::new();
        for n in self.min_deg..=self.max_deg() {
            let h = self.cohomology_at(n)?;
            let mut bad = Vec::new();
            for d in h.divisors() {
                if d.is_unit() {
                    continue;
                }
                let pass = match mode {
                    QuasiIsoMode::Exact => false,
                    QuasiIsoMode::UpToJunk { p_exp, adic_exp } => {
                        !d.is_zero()
                            && self.pid.tower_params().is_some()
                            && crate::ring::unit_in_truncation(&d, p_exp, adic_exp)?
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
        Ok(super::QuasiIsoVerdict { is_quasi_iso: ok, witnesses })
    }

    /// Mapping cone of a generator-level chain map `t` between presented
    /// complexes (validated to commute in class coordinates).
    pub fn cone_of_map(src: &PresentedComplex, tgt: &PresentedComplex, t: &[(i64, Matrix)]) -> Result<PresentedComplex, ComplexError> {
        if src.pid != tgt.pid {
            return Err(ComplexError::Malformed("cone across different PIDs".into()));
        }
        let comp = |n: i64| -> Matrix {
            t.iter()
                .find(|(d, _)| *d == n)
                .map(|(_, m)| m.clone())
                .unwrap_or_else(|| Matrix::zero(&src.pid, tgt.gen_count_at(n), src.gen_count_at(n)))
        };
        // chain-map check in class coordinates
        let lo = core::cmp::min(src.min_deg, tgt.min_deg);
        let hi = core::cmp::max(src.max_deg(), tgt.max_deg());
        for n in lo..hi {
            let left = tgt.diff_at(n).mul(&comp(n))?;
            let right = comp(n + 1).mul(&src.diff_at(n))?;
            let diff = left.add(&right.neg())?;
            if !tgt.class_matrix_is_zero(n + 1, &diff)? {
                return Err(ComplexError::NotChainMap { degree: n });
            }
        }
        let min_deg = core::cmp::min(src.min_deg - 1, tgt.min_deg);
        let max_deg = core::cmp::max(src.max_deg() - 1, tgt.max_deg());
        let mut divisors = Vec::new();
        for n in min_deg..=max_deg {
            let mut ds = src.divisors_at(n + 1);
            ds.extend(tgt.divisors_at(n));
            divisors.push(ds);
        }
        let mut diffs = Vec::new();
        for n in min_deg..max_deg {
            let sc = src.gen_count_at(n + 1);
            let tc = tgt.gen_count_at(n);
            let sr = src.gen_count_at(n + 2);
            let tr = tgt.gen_count_at(n + 1);
            let ds = src.diff_at(n + 1);
            let dt = tgt.diff_at(n);
            let fc = comp(n + 1);
            let mut m = Matrix::zero(&src.pid, sr + tr, sc + tc);
            for i in 0..sr {
                for j in 0..sc {
                    m.set(i, j, src.pid.neg(ds.get(i, j)));
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
        Ok(PresentedComplex { pid: src.pid.clone(), min_deg, divisors, diffs })
    }
}

