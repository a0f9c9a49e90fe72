//! Complex-level behavior: validation, cohomology, base change, cones,
//! tensor products.

mod util;

use qeta_core::complex::{cohomology, cone, quasi_iso, ChainMap, CochainComplex, QuasiIsoMode};
use qeta_core::linalg::Matrix;
use qeta_core::ring::{Ring, RingElement};
use rand::Rng;
use rand::SeedableRng;
use util::{brute_force_mod_p_dims, random_z_complex};

fn two_term_z(c: i64) -> CochainComplex {
    CochainComplex::two_term(&RingElement::from_i64(&Ring::integers(), c))
}

#[test]
fn validate_examples() {
    assert!(two_term_z(5).validate().is_ok());

    // two-step with d1 d0 = [1] -> violation at degree 0
    let z = Ring::integers();
    let d0 = Matrix::from_i64(&z, 1, 1, &[1]);
    let d1 = Matrix::from_i64(&z, 1, 1, &[1]);
    let bad = CochainComplex::new(z.clone(), 0, vec![1, 1, 1], vec![d0, d1]);
    match bad {
        Err(qeta_core::complex::ComplexError::NotAComplex { degree }) => assert_eq!(degree, 0),
        other => panic!("expected NotAComplex, got {other:?}"),
    }

    assert!(CochainComplex::empty(&z).validate().is_ok());
}

#[test]
fn cohomology_two_term_examples() {
    // [Z ->^p Z]: H^0 = 0, H^1 = Z/p
    let r = cohomology(&two_term_z(5)).unwrap();
    let h0 = r.at(0).unwrap();
    assert_eq!(h0.free_rank, 0);
    assert!(h0.divisors.is_empty());
    let h1 = r.at(1).unwrap();
    assert_eq!(h1.free_rank, 0);
    assert_eq!(h1.divisors.len(), 1);
    assert_eq!(h1.divisors[0], RingElement::from_i64(&Ring::integers(), 5));

    // [Z ->^0 Z]: H^0 = Z, H^1 = Z
    let r = cohomology(&two_term_z(0)).unwrap();
    assert_eq!(r.at(0).unwrap().free_rank, 1);
    assert_eq!(r.at(1).unwrap().free_rank, 1);
}

#[test]
fn cohomology_koszul_2_3_is_acyclic() {
    // Koszul on the regular sequence (2,3) over Z: (1,2,1), acyclic since
    // gcd(2,3) = 1; brute-force check via the SNF machinery itself is
    // avoided: the unit Bezout combination certifies exactness by hand:
    // H^2 = Z/(2,3) = Z/1 = 0.
    let a = two_term_z(2);
    let b = two_term_z(3);
    let k = a.tensor_product(&b).unwrap();
    assert_eq!(k.ranks(), &[1, 2, 1]);
    let r = cohomology(&k).unwrap();
    for n in 0..=2 {
        let s = r.at(n).unwrap();
        assert_eq!(s.free_rank, 0, "H^{n}");
        assert!(s.divisors.is_empty(), "H^{n}");
    }
}

#[test]
fn tensor_reduce_examples() {
    let z = Ring::integers();
    // [Z ->^p Z] mod p: zero differential
    let c = two_term_z(5).tensor_reduce(&RingElement::from_i64(&z, 5)).unwrap();
    assert!(c.diff_at(0).is_zero());

    // [Z ->^{p^2} Z] mod p
    let c = two_term_z(25).tensor_reduce(&RingElement::from_i64(&z, 5)).unwrap();
    assert!(c.diff_at(0).is_zero());

    // [F_2[q] ->^{q^2-1} F_2[q]] reduced mod (q-1): differential 0
    let f2q = Ring::tower(Ring::prime_field(2).unwrap(), 2, 0).unwrap();
    let c = CochainComplex::two_term(&RingElement::poly_from_i64(&f2q, 0, &[-1, 0, 1]));
    let qm1 = RingElement::poly_from_i64(&f2q, 0, &[-1, 1]);
    let red = c.tensor_reduce(&qm1).unwrap();
    assert!(red.diff_at(0).is_zero());

    // zero divisors are refused
    let zm = two_term_z(6).tensor_reduce(&RingElement::from_i64(&z, 0));
    assert!(zm.is_err());
}

#[test]
fn cone_examples() {
    // cone(id) acyclic
    let c = two_term_z(7);
    let id = ChainMap::identity(&c);
    let v = quasi_iso(&id, QuasiIsoMode::Exact).unwrap();
    assert!(v.is_quasi_iso);

    // cone(0 -> C) = C (as cohomology)
    let zero = ChainMap::zero(CochainComplex::empty(&Ring::integers()), c.clone());
    let cn = cone(&zero).unwrap();
    let r = cohomology(&cn).unwrap();
    assert_eq!(r.at(1).unwrap().divisors.len(), 1);

    // cone of multiplication by p on Z (degree-0 complexes): H^1 = Z/p
    let z = Ring::integers();
    let pt = CochainComplex::concentrated(&z, 0, 1);
    let mult = ChainMap::new(
        pt.clone(),
        pt.clone(),
        0,
        vec![Matrix::from_i64(&z, 1, 1, &[5])],
    )
    .unwrap();
    let cn = cone(&mult).unwrap();
    let r = cohomology(&cn).unwrap();
    let h0 = r.at(0).unwrap();
    assert_eq!(h0.divisors.len(), 1);
    assert_eq!(h0.divisors[0], RingElement::from_i64(&z, 5));
}

#[test]
fn tensor_product_sign_rule() {
    // [A ->^c A] tensor [A ->^c' A]: ranks (1,2,1), d0 = (c, c')^T, d1 = (-c', c)
    let a = two_term_z(2);
    let b = two_term_z(3);
    let t = a.tensor_product(&b).unwrap();
    assert_eq!(t.ranks(), &[1, 2, 1]);
    let d0 = t.diff_at(0);
    assert_eq!(d0.at(0, 0), RingElement::from_i64(&Ring::integers(), 2));
    assert_eq!(d0.at(1, 0), RingElement::from_i64(&Ring::integers(), 3));
    let d1 = t.diff_at(1);
    assert_eq!(d1.at(0, 0), RingElement::from_i64(&Ring::integers(), -3));
    assert_eq!(d1.at(0, 1), RingElement::from_i64(&Ring::integers(), 2));

    // C tensor (A in degree 0) = C
    let unit = CochainComplex::concentrated(&Ring::integers(), 0, 1);
    let t = a.tensor_product(&unit).unwrap();
    assert_eq!(t.ranks(), a.ranks());
    assert_eq!(t.diff_at(0), a.diff_at(0));
}

#[test]
fn tensor_product_random_validate_and_euler() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    for _ in 0..30 {
        let c = random_z_complex(&mut rng);
        let d = random_z_complex(&mut rng);
        let t = c.tensor_product(&d).unwrap();
        t.validate().unwrap();
        assert_eq!(
            t.euler_characteristic(),
            c.euler_characteristic() * d.euler_characteristic()
        );
    }
}

#[test]
fn cohomology_mod_p_matches_brute_force_dimensions() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
    for case in 0..100 {
        let c = random_z_complex(&mut rng);
        for p in [2u64, 3] {
            let reduced = c.tensor_reduce(&RingElement::from_i64(&Ring::integers(), p as i64)).unwrap();
            let report = cohomology(&reduced).unwrap();
            let brute = brute_force_mod_p_dims(&c, p);
            for (i, dim) in brute.iter().enumerate() {
                let deg = c.min_deg() + i as i64;
                let s = report.at(deg).unwrap();
                // over F_p the presentation divisors are p-multiples: free
                // rank plus torsion counts the dimension
                let got = s.free_rank + s.divisors.len();
                assert_eq!(got, *dim, "case {case} p {p} degree {deg}");
            }
        }
    }
}

#[test]
fn quasi_iso_exact_vs_degreewise_presentations() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
    for _ in 0..40 {
        let c = random_z_complex(&mut rng);
        // identity is always a quasi-isomorphism
        let id = ChainMap::identity(&c);
        assert!(quasi_iso(&id, QuasiIsoMode::Exact).unwrap().is_quasi_iso);
        // the zero map to the zero complex is one iff all cohomology vanishes
        let zero = ChainMap::zero(c.clone(), CochainComplex::empty(&Ring::integers()));
        let verdict = quasi_iso(&zero, QuasiIsoMode::Exact).unwrap();
        let report = cohomology(&c).unwrap();
        let acyclic = report
            .summaries
            .iter()
            .all(|s| s.free_rank == 0 && s.divisors.is_empty());
        assert_eq!(verdict.is_quasi_iso, acyclic);
    }
}

#[test]
fn junk_mode_quasi_iso_example() {
    // [F_2[q_1] ->^{[3]_{q_1}} F_2[q_1]] vs 0 in junk mode (n=1, M=8)
    let f2q1 = Ring::tower(Ring::prime_field(2).unwrap(), 2, 1).unwrap();
    let three = qeta_core::ring::q_int(&f2q1, 3).unwrap();
    let c = CochainComplex::two_term(&three);
    let zero = ChainMap::zero(c.clone(), CochainComplex::empty(&f2q1));
    let v = quasi_iso(&zero, QuasiIsoMode::UpToJunk { p_exp: 1, adic_exp: 8 }).unwrap();
    assert!(v.is_quasi_iso, "witnesses: {:?}", v.witnesses);

    // [Z ->^p Z] vs 0 in exact mode: NOT a quasi-iso, witness p
    let c = two_term_z(5);
    let zero = ChainMap::zero(c.clone(), CochainComplex::empty(&Ring::integers()));
    let v = quasi_iso(&zero, QuasiIsoMode::Exact).unwrap();
    assert!(!v.is_quasi_iso);
    let mentioned = v.witnesses.iter().any(|(_, w)| w.iter().any(|s| s == "5"));
    assert!(mentioned, "witnesses: {:?}", v.witnesses);
}

#[test]
fn fd_algebra_mode_reports_dimension_and_q_action() {
    // F_3[q]/(q^2 - 1): two-dimensional algebra; complex [A ->^{q-1} A]
    let f3q = Ring::tower(Ring::prime_field(3).unwrap(), 3, 0).unwrap();
    let modulus = RingElement::poly_from_i64(&f3q, 0, &[-1, 0, 1]);
    let qm1 = RingElement::poly_from_i64(&f3q, 0, &[-1, 1]);
    let c = CochainComplex::two_term(&qm1).tensor_reduce(&modulus).unwrap();
    let r = cohomology(&c).unwrap();
    let h1 = r.at(1).unwrap();
    // H^1 = A/(q-1): one-dimensional over F_3
    assert_eq!(h1.dimension, Some(1));
    assert!(h1.q_action.is_some());

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
    let _ = rng.gen_range(0..2);
}
