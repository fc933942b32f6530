use proptest::prelude::*;
use spinor_core::recipe::{assemble_euclidean, intertwiners, Variant};
use spinor_core::spin::*;
use spinor_core::{rat, Multivector, RMatrix, Rational, Signature};

/// (a, b) with a² + b² a perfect square, from m > k ≥ 1.
fn pythagorean_pair() -> impl Strategy<Value = (i64, i64)> {
    (2i64..6, 1i64..5, any::<bool>(), any::<bool>()).prop_filter_map("k < m", |(m, k, swap, neg)| {
        if k >= m {
            return None;
        }
        let (a, b) = (m * m - k * k, 2 * m * k);
        let (a, b) = if swap { (b, a) } else { (a, b) };
        Some(if neg { (a, -b) } else { (a, b) })
    })
}

fn rotation(n: usize) -> impl Strategy<Value = RMatrix> {
    prop::collection::vec((0..n, 0..n, pythagorean_pair()), 1..5).prop_map(move |steps| {
        let mut r = RMatrix::identity(n);
        for (i, j, (a, b)) in steps {
            if i != j {
                r = r.matmul(&half_angle_rotation(n, i, j, a, b).unwrap());
            }
        }
        r
    })
}

fn rotation_up_to_six() -> impl Strategy<Value = RMatrix> {
    (2usize..=6).prop_flat_map(rotation)
}

fn e(sig: Signature, i: usize) -> Multivector {
    Multivector::generator(sig, i)
}

#[test]
fn twisted_adjoint_of_one_and_bivector() {
    let sig = Signature::euclidean(3);
    let v = vec![rat(1, 2), rat(-3, 1), rat(2, 7)];
    assert_eq!(twisted_adjoint(&Multivector::one(sig), &v).unwrap(), v);
    let g = e(sig, 0).gp(&e(sig, 1)).unwrap();
    // rotation by π in the e1e2-plane, composed from two reflections
    let by_reflections = reflection(&[Rational::one(), Rational::zero(), Rational::zero()], &v, sig)
        .and_then(|x| reflection(&[Rational::zero(), Rational::one(), Rational::zero()], &x, sig))
        .unwrap();
    assert_eq!(twisted_adjoint(&g, &v).unwrap(), by_reflections);
}

#[test]
fn non_invertible_twisted_adjoint() {
    let sig = Signature::new(1, 1).unwrap();
    let null = e(sig, 0).add(&e(sig, 1)).unwrap();
    assert!(twisted_adjoint(&null, &[Rational::one(), Rational::zero()]).is_err());
}

#[test]
fn double_cover_on_identity_and_bivector() {
    let m = assemble_euclidean(2, Variant::Plus).unwrap();
    let one = SpinElement::one(m.signature);
    let r = double_cover_check(&one, Some(&m)).unwrap();
    assert!(r.passed());
    assert!(spin_action(&m, &one).unwrap().is_identity());
    let g = SpinElement::new(e(m.signature, 0).gp(&e(m.signature, 1)).unwrap()).unwrap();
    assert!(double_cover_check(&g, Some(&m)).unwrap().passed());
}

#[test]
fn spin_action_is_orthogonal_in_two_dimensions() {
    let m = assemble_euclidean(2, Variant::Plus).unwrap();
    let sig = m.signature;
    let g = Multivector::scalar(sig, rat(3, 5)).add(&e(sig, 0).gp(&e(sig, 1)).unwrap().scale(&rat(4, 5))).unwrap();
    let g = SpinElement::new(g).unwrap();
    let p = spin_action(&m, &g).unwrap();
    assert_eq!(p.transpose().matmul(&m.spin_metric).matmul(&p), m.spin_metric);
}

#[test]
fn spin_element_rejects_odd_and_non_unit() {
    let sig = Signature::euclidean(3);
    assert!(SpinElement::new(e(sig, 0)).is_err());
    assert!(SpinElement::new(Multivector::scalar(sig, rat(2, 1))).is_err());
}

#[test]
fn coordinate_system_from_lift() {
    let m = assemble_euclidean(5, Variant::Plus).unwrap();
    let r = half_angle_rotation(5, 1, 3, 3, 4).unwrap().matmul(&half_angle_rotation(5, 0, 4, 12, -5).unwrap());
    let g = spin_lift(&r).unwrap();
    let scs = SpinCoordinateSystem::from_spin(&m, &g).unwrap();
    assert_eq!(scs.covered_frame, r);
    assert!(scs.verify(&m).unwrap());
    let shifted = SpinCoordinateSystem { iso: scs.iso.clone(), covered_frame: RMatrix::identity(5) };
    assert!(!shifted.verify(&m).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn lift_round_trip(r in rotation_up_to_six()) {
        let g = spin_lift(&r).unwrap();
        prop_assert_eq!(adjoint_matrix(g.value()).unwrap(), r);
        prop_assert!(g.value().is_even());
    }

    #[test]
    fn lift_of_inverse(r in rotation_up_to_six()) {
        let g = spin_lift(&r).unwrap();
        let h = spin_lift(&r.transpose()).unwrap();
        let prod = g.mul(&h).unwrap();
        let one = SpinElement::one(g.signature());
        prop_assert!(prod == one || prod == one.neg());
    }

    #[test]
    fn adjoint_is_a_homomorphism((a, b) in (2usize..=5).prop_flat_map(|n| (rotation(n), rotation(n)))) {
        let n = a.rows();
        let g = spin_lift(&a).unwrap();
        let h = spin_lift(&b).unwrap();
        let gh = g.mul(&h).unwrap();
        prop_assert_eq!(adjoint_matrix(gh.value()).unwrap(), a.matmul(&b));
        let m = assemble_euclidean(n, Variant::Plus).unwrap();
        prop_assert_eq!(spin_action(&m, &gh).unwrap(), spin_action(&m, &g).unwrap().matmul(&spin_action(&m, &h).unwrap()));
    }

    #[test]
    fn double_cover_and_metric(r in rotation_up_to_six()) {
        let n = r.rows();
        let g = spin_lift(&r).unwrap();
        let m = assemble_euclidean(n, Variant::Plus).unwrap();
        prop_assert!(double_cover_check(&g, Some(&m)).unwrap().passed());
        let p = spin_action(&m, &g).unwrap();
        prop_assert_eq!(p.transpose().matmul(&m.spin_metric).matmul(&p), m.spin_metric.clone());
        for b in intertwiners(&m, true).unwrap().basis {
            prop_assert!(b.commutes_with(&p));
        }
    }

    #[test]
    fn twisted_adjoint_preserves_form(
        w1 in prop::collection::vec((-5i64..=5).prop_map(Rational::from_int), 4),
        w2 in prop::collection::vec((-5i64..=5).prop_map(Rational::from_int), 4),
        v in prop::collection::vec((-5i64..=5).prop_map(Rational::from_int), 4),
    ) {
        let sig = Signature::new(2, 2).unwrap();
        prop_assume!(!sig.inner(&w1, &w1).is_zero() && !sig.inner(&w2, &w2).is_zero());
        let g = Multivector::vector(sig, &w1).unwrap().gp(&Multivector::vector(sig, &w2).unwrap()).unwrap();
        let out = twisted_adjoint(&g, &v).unwrap();
        prop_assert_eq!(sig.inner(&out, &out), sig.inner(&v, &v));
    }
}
