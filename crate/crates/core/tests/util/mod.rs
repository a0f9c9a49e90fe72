//! Shared test helpers: a random-complex generator with `d.d = 0` by
//! construction, and an independent brute-force rank oracle over `F_p`.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use qeta_core::complex::CochainComplex;
use qeta_core::linalg::Matrix;
use qeta_core::ring::{ElementData, Ring, RingElement};
use rand::Rng;

/// Random free Z-complex: direct sums and tensor products of elementary
/// two-term complexes (never rejection sampling), mixed by a few unimodular
/// shears when the entries stay small. At most 4 degrees, ranks at most 5,
/// entries bounded by 9.
pub fn random_z_complex<R: Rng>(rng: &mut R) -> CochainComplex {
    let z = Ring::integers();
    let two = |rng: &mut R| {
        let a = rng.gen_range(-9i64..=9);
        CochainComplex::two_term(&RingElement::from_i64(&z, a))
    };
    let piece = |rng: &mut R| -> CochainComplex {
        match rng.gen_range(0..4) {
            0 => two(rng),
            1 => two(rng).shift(-(rng.gen_range(0..2) as i64)),
            2 => {
                let t = two(rng).tensor_product(&two(rng)).unwrap();
                t
            }
            _ => CochainComplex::concentrated(&z, rng.gen_range(0..2), 1),
        }
    };
    let mut c = piece(rng);
    if rng.gen_bool(0.6) {
        let q = piece(rng);
        if let Ok(sum) = c.direct_sum(&q) {
            if sum.ranks().iter().all(|&r| r <= 5) && sum.ranks().len() <= 4 {
                c = sum;
            }
        }
    }
    // a few shears to break the block-diagonal look
    for _ in 0..rng.gen_range(0..3) {
        c = shear(&c, rng).unwrap_or(c);
    }
    c
}

fn shear<R: Rng>(c: &CochainComplex, rng: &mut R) -> Option<CochainComplex> {
    let z = Ring::integers();
    if c.is_empty() {
        return None;
    }
    let deg = rng.gen_range(c.min_deg()..=c.max_deg());
    let r = c.rank_at(deg);
    if r < 2 {
        return None;
    }
    let i = rng.gen_range(0..r);
    let mut j = rng.gen_range(0..r);
    if i == j {
        j = (j + 1) % r;
    }
    let s: i64 = if rng.gen_bool(0.5) { 1 } else { -1 };
    let mut b = Matrix::identity(&z, r);
    b.set(i, j, z.from_i64(s));
    let mut binv = Matrix::identity(&z, r);
    binv.set(i, j, z.from_i64(-s));
    let mut diffs: Vec<Matrix> = Vec::new();
    for d in c.min_deg()..c.max_deg() {
        let m = if d == deg {
            c.diff_at(d).mul(&b).ok()?
        } else if d + 1 == deg {
            binv.mul(&c.diff_at(d)).ok()?
        } else {
            c.diff_at(d)
        };
        diffs.push(m);
    }
    let out = CochainComplex::new(z, c.min_deg(), c.ranks().to_vec(), diffs).ok()?;
    let small = out.diffs().iter().all(|m| {
        (0..m.rows()).all(|i| {
            (0..m.cols()).all(|j| match m.get(i, j) {
                ElementData::Int(x) => x.to_i64().map(|v| v.abs() <= 9).unwrap_or(false),
                _ => false,
            })
        })
    });
    if small {
        Some(out)
    } else {
        None
    }
}

/// Independent dimension oracle: `dim H^n(N mod p)` by plain Gaussian
/// elimination on `u64` residue matrices (no shared code with the library).
pub fn brute_force_mod_p_dims(c: &CochainComplex, p: u64) -> Vec<usize> {
    let mut dims = Vec::new();
    for n in c.min_deg()..=c.max_deg() {
        let rank_n = c.rank_at(n);
        let r_out = rank_mod_p(&c.diff_at(n), p);
        let r_in = rank_mod_p(&c.diff_at(n - 1), p);
        dims.push(rank_n - r_out - r_in);
    }
    dims
}

fn rank_mod_p(m: &Matrix, p: u64) -> usize {
    let rows = m.rows();
    let cols = m.cols();
    let mut a: Vec<Vec<u64>> = (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| match m.get(i, j) {
                    ElementData::Int(x) => x.mod_floor(&BigInt::from(p)).to_u64().unwrap(),
                    ElementData::Mod(x) => *x % p,
                    _ => panic!("integer matrix expected"),
                })
                .collect()
        })
        .collect();
    let mut rank = 0usize;
    let mut row = 0usize;
    for col in 0..cols {
        let piv = (row..rows).find(|&i| a[i][col] % p != 0);
        let Some(piv) = piv else { continue };
        a.swap(row, piv);
        let inv = inv_mod(a[row][col], p);
        for j in 0..cols {
            a[row][j] = a[row][j] * inv % p;
        }
        for i in 0..rows {
            if i != row && a[i][col] != 0 {
                let f = a[i][col];
                for j in 0..cols {
                    a[i][j] = (a[i][j] + (p - f) * a[row][j]) % p;
                }
            }
        }
        row += 1;
        rank += 1;
        if row == rows {
            break;
        }
    }
    rank
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let mut x = 1u64;
    for _ in 0..p - 2 {
        x = x * a % p;
    }
    x
}
