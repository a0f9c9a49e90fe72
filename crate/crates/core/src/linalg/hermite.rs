//! Column Hermite normal form over Euclidean domains, with the unimodular
//! transform tracked; kernels, exact solving, canonical lattice bases, and the
//! `f`-preimage lattice `{x : A x in f * ambient}`.

use alloc::vec::Vec;

use crate::ring::{ElementData, RingElement};

use super::{LinalgError, Matrix};

/// Column echelon data: `a * u = h` with `u` unimodular.
pub struct Hermite {
    pub h: Matrix,
    pub u: Matrix,
    /// Pivot positions `(row, col)`, rows strictly increasing, cols `0..rank`.
    pub pivots: Vec<(usize, usize)>,
}

impl Hermite {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Deterministic column Hermite form (canonical): pivots are canonical
/// associates, entries left of a pivot in its row are reduced modulo it.
pub fn col_hermite(a: &Matrix) -> Result<Hermite, LinalgError> {
    let ring = a.ring().clone();
    if !ring.is_euclidean() {
        return Err(LinalgError::Unsupported("Hermite form needs a Euclidean ring"));
    }
    let rows = a.rows();
    let cols = a.cols();
    let mut h = a.clone();
    let mut u = Matrix::identity(&ring, cols);
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut c = 0usize;

    let swap_cols = |m: &mut Matrix, x: usize, y: usize| {
        if x == y {
            return;
        }
        for i in 0..m.rows() {
            let t = m.get(i, x).clone();
            let s = m.get(i, y).clone();
            m.set(i, x, s);
            m.set(i, y, t);
        }
    };
    // col_j -= q * col_c
    let sub_col = |m: &mut Matrix, j: usize, q: &ElementData, cc: usize| {
        for i in 0..m.rows() {
            let t = m.ring().mul(q, m.get(i, cc));
            let v = m.ring().sub(m.get(i, j), &t);
            m.set(i, j, v);
        }
    };
    let scale_col = |m: &mut Matrix, j: usize, s: &ElementData| {
        for i in 0..m.rows() {
            let v = m.ring().mul(s, m.get(i, j));
            m.set(i, j, v);
        }
    };

    for row in 0..rows {
        if c >= cols {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for j in c..cols {
                if ring.is_zero(h.get(row, j)) {
                    continue;
                }
                best = match best {
                    None => Some(j),
                    Some(b) => {
                        if ring.size_cmp(h.get(row, j), h.get(row, b)) == core::cmp::Ordering::Less {
                            Some(j)
                        } else {
                            Some(b)
                        }
                    }
                };
            }
            let Some(b) = best else { break };
            swap_cols(&mut h, b, c);
            swap_cols(&mut u, b, c);
            let mut finished = true;
            for j in c + 1..cols {
                if ring.is_zero(h.get(row, j)) {
                    continue;
                }
                let (q, r) = ring
                    .euclid_divmod(h.get(row, j), h.get(row, c))
                    .expect("euclidean ring");
                if !ring.is_zero(&q) {
                    sub_col(&mut h, j, &q, c);
                    sub_col(&mut u, j, &q, c);
                }
                if !ring.is_zero(&r) {
                    finished = false;
                }
            }
            if finished {
                let (_, unit) = ring.normalize_associate(h.get(row, c));
                let inv = ring.inverse(&unit).expect("unit");
                if !ring.is_one(&inv) {
                    scale_col(&mut h, c, &inv);
                    scale_col(&mut u, c, &inv);
                }
                pivots.push((row, c));
                c += 1;
                break;
            }
        }
    }

    // canonical reduction of entries left of each pivot
    for (idx, &(r, pc)) in pivots.iter().enumerate() {
        let _ = idx;
        for j in 0..pc {
            if ring.is_zero(h.get(r, j)) {
                continue;
            }
            let (q, _) = ring.euclid_divmod(h.get(r, j), h.get(r, pc)).expect("euclidean");
            if !ring.is_zero(&q) {
                sub_col(&mut h, j, &q, pc);
                sub_col(&mut u, j, &q, pc);
            }
        }
    }

    Ok(Hermite { h, u, pivots })
}

/// Basis of the kernel lattice `{x : a x = 0}`, as matrix columns.
pub fn kernel(a: &Matrix) -> Result<Matrix, LinalgError> {
    let he = col_hermite(a)?;
    let cols = a.cols();
    let free: Vec<usize> = (he.rank()..cols).collect();
    Ok(he.u.select_cols(&free))
}

/// Solve `a x = b` exactly; `None` when there is no solution over the ring.
pub fn solve_vec(a: &Matrix, b: &[ElementData]) -> Option<Vec<ElementData>> {
    let ring = a.ring().clone();
    let he = col_hermite(a).ok()?;
    let mut y: Vec<ElementData> = (0..a.cols()).map(|_| ring.zero()).collect();
    for &(r, c) in &he.pivots {
        let mut acc = b[r].clone();
        for j in 0..c {
            if ring.is_zero(&y[j]) || ring.is_zero(he.h.get(r, j)) {
                continue;
            }
            let t = ring.mul(he.h.get(r, j), &y[j]);
            acc = ring.sub(&acc, &t);
        }
        let q = ring.try_divide(&acc, he.h.get(r, c))?;
        y[c] = q;
    }
    // verify all rows (rows without pivots must also match)
    let hy = he.h.mul_vec(&y);
    for i in 0..a.rows() {
        if !ring.is_zero(&ring.sub(&hy[i], &b[i])) {
            return None;
        }
    }
    Some(he.u.mul_vec(&y))
}

/// Columnwise [`solve_vec`]: solve `a X = B`.
pub fn solve_matrix(a: &Matrix, b: &Matrix) -> Option<Matrix> {
    let ring = a.ring().clone();
    let mut out = Matrix::zero(&ring, a.cols(), b.cols());
    for j in 0..b.cols() {
        let x = solve_vec(a, &b.col(j))?;
        for i in 0..a.cols() {
            out.set(i, j, x[i].clone());
        }
    }
    Some(out)
}

/// Canonical basis (column HNF, zero columns dropped) of the column span.
///
/// Two matrices span the same column lattice iff their canonical bases are
/// equal entry for entry.
pub fn lattice_canonical(a: &Matrix) -> Result<Matrix, LinalgError> {
    let he = col_hermite(a)?;
    let keep: Vec<usize> = (0..he.rank()).collect();
    Ok(he.h.select_cols(&keep))
}

/// Basis of the preimage lattice `{x : a x in f * A^rows}`.
///
/// Computed as the kernel of `[a | f I]` projected to the `x` block; the
/// projection is injective because `f` is regular.
pub fn solve_in_submodule(a: &Matrix, f: &RingElement) -> Result<Matrix, LinalgError> {
    let ring = a.ring().clone();
    if ring != *f.ring() {
        return Err(LinalgError::Unsupported("scalar ring differs from matrix ring"));
    }
    if f.is_zero() {
        return kernel(a);
    }
    let fi = Matrix::identity(&ring, a.rows()).scale(f.data());
    let aug = a.hstack(&fi)?;
    let k = kernel(&aug)?;
    let top: Vec<usize> = (0..a.cols()).collect();
    let proj = Matrix::from_fn(&ring, a.cols(), k.cols(), |i, j| k.get(top[i], j).clone());
    lattice_canonical(&proj)
}
