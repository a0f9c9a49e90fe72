use alloc::vec::Vec;
use core::fmt;

use crate::ring::{ElementData, Ring, RingElement};

use super::LinalgError;

/// A dense matrix over a single ring, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    data: Vec<ElementData>,
}

impl Matrix {
    pub fn zero(ring: &Ring, rows: usize, cols: usize) -> Matrix {
        Matrix {
            ring: ring.clone(),
            rows,
            cols,
            data: (0..rows * cols).map(|_| ring.zero()).collect(),
        }
    }

    pub fn identity(ring: &Ring, n: usize) -> Matrix {
        let mut m = Matrix::zero(ring, n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    pub fn from_fn(ring: &Ring, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> ElementData) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { ring: ring.clone(), rows, cols, data }
    }

    pub fn from_i64(ring: &Ring, rows: usize, cols: usize, entries: &[i64]) -> Matrix {
        assert_eq!(entries.len(), rows * cols);
        Matrix::from_fn(ring, rows, cols, |i, j| ring.from_i64(entries[i * cols + j]))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &ElementData {
        &self.data[i * self.cols + j]
    }

    pub fn at(&self, i: usize, j: usize) -> RingElement {
        RingElement::new(self.ring.clone(), self.get(i, j).clone())
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: ElementData) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| self.ring.is_zero(e))
    }

    pub fn col(&self, j: usize) -> Vec<ElementData> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.ring, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.check_same_shape(other)?;
        Ok(Matrix::from_fn(&self.ring, self.rows, self.cols, |i, j| {
            self.ring.add(self.get(i, j), other.get(i, j))
        }))
    }

    pub fn neg(&self) -> Matrix {
        Matrix::from_fn(&self.ring, self.rows, self.cols, |i, j| self.ring.neg(self.get(i, j)))
    }

    pub fn scale(&self, c: &ElementData) -> Matrix {
        Matrix::from_fn(&self.ring, self.rows, self.cols, |i, j| self.ring.mul(c, self.get(i, j)))
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.ring != other.ring {
            return Err(LinalgError::Unsupported("matrix rings differ"));
        }
        if self.cols != other.rows {
            return Err(LinalgError::Shape(alloc::format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let ring = &self.ring;
        Ok(Matrix::from_fn(ring, self.rows, other.cols, |i, j| {
            let mut acc = ring.zero();
            for k in 0..self.cols {
                let a = self.get(i, k);
                if ring.is_zero(a) {
                    continue;
                }
                let t = ring.mul(a, other.get(k, j));
                acc = ring.add(&acc, &t);
            }
            acc
        }))
    }

    pub fn mul_vec(&self, v: &[ElementData]) -> Vec<ElementData> {
        assert_eq!(v.len(), self.cols);
        let ring = &self.ring;
        (0..self.rows)
            .map(|i| {
                let mut acc = ring.zero();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    if ring.is_zero(a) || ring.is_zero(&v[k]) {
                        continue;
                    }
                    acc = ring.add(&acc, &ring.mul(a, &v[k]));
                }
                acc
            })
            .collect()
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.rows != other.rows {
            return Err(LinalgError::Shape("hstack row mismatch".into()));
        }
        Ok(Matrix::from_fn(&self.ring, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        }))
    }

    /// Vertical concatenation `[self; other]`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != other.cols {
            return Err(LinalgError::Shape("vstack col mismatch".into()));
        }
        Ok(Matrix::from_fn(&self.ring, self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self.get(i, j).clone()
            } else {
                other.get(i - self.rows, j).clone()
            }
        }))
    }

    pub fn select_cols(&self, cols: &[usize]) -> Matrix {
        Matrix::from_fn(&self.ring, self.rows, cols.len(), |i, j| self.get(i, cols[j]).clone())
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        Matrix::from_fn(&self.ring, rows.len(), self.cols, |i, j| self.get(rows[i], j).clone())
    }

    /// Entry-wise conversion into another ring.
    pub fn convert(&self, target: &Ring, f: &dyn Fn(&ElementData) -> ElementData) -> Matrix {
        Matrix::from_fn(target, self.rows, self.cols, |i, j| f(self.get(i, j)))
    }

    /// Block-diagonal stack of two matrices.
    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        Matrix::from_fn(&self.ring, self.rows + other.rows, self.cols + other.cols, |i, j| {
            if i < self.rows && j < self.cols {
                self.get(i, j).clone()
            } else if i >= self.rows && j >= self.cols {
                other.get(i - self.rows, j - self.cols).clone()
            } else {
                self.ring.zero()
            }
        })
    }

    fn check_same_shape(&self, other: &Matrix) -> Result<(), LinalgError> {
        if self.ring != other.ring || self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::Shape("shapes or rings differ".into()));
        }
        Ok(())
    }

    /// Fraction-free determinant (Bareiss) over a domain.
    pub fn determinant(&self) -> Result<RingElement, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::Shape("determinant of non-square matrix".into()));
        }
        if !self.ring.is_domain() {
            return Err(LinalgError::Unsupported("determinant needs a domain"));
        }
        let ring = self.ring.clone();
        let n = self.rows;
        if n == 0 {
            return Ok(RingElement::one(&ring));
        }
        let mut a: Vec<Vec<ElementData>> = (0..n).map(|i| (0..n).map(|j| self.get(i, j).clone()).collect()).collect();
        let mut prev = ring.one();
        let mut sign = false;
        for k in 0..n - 1 {
            if ring.is_zero(&a[k][k]) {
                let swap = (k + 1..n).find(|&i| !ring.is_zero(&a[i][k]));
                match swap {
                    Some(i) => {
                        a.swap(k, i);
                        sign = !sign;
                    }
                    None => return Ok(RingElement::zero(&ring)),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t1 = ring.mul(&a[i][j], &a[k][k]);
                    let t2 = ring.mul(&a[i][k], &a[k][j]);
                    let num = ring.sub(&t1, &t2);
                    let q = ring
                        .divide_exact(&num, &prev)
                        .ok()
                        .flatten()
                        .expect("Bareiss divisions are exact over a domain");
                    a[i][j] = q;
                }
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        Ok(RingElement::new(ring.clone(), if sign { ring.neg(&det) } else { det }))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{} over {}]", self.rows, self.cols, self.ring.name())?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{}  ", self.at(i, j))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
