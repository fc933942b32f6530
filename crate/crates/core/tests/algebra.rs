use proptest::prelude::*;
use spinor_core::clifford::{blade_product, hodge_star, volume_square, wedge};
use spinor_core::division::{conj, inverse, left_mul_matrix, mul, norm_sq, right_mul_matrix};
use spinor_core::recipe::octonion_action;
use spinor_core::{rat, Algebra, Blade, KElement, Multivector, RMatrix, Rational, Signature};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=6).prop_map(|(p, q)| rat(p, q))
}

fn element(a: Algebra) -> impl Strategy<Value = KElement> {
    prop::collection::vec(small_rational(), a.dim()).prop_map(move |c| KElement::new(a, c).unwrap())
}

/// Hamilton's table written out by hand.
fn hamilton(x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    let (a1, b1, c1, d1) = (&x[0], &x[1], &x[2], &x[3]);
    let (a2, b2, c2, d2) = (&y[0], &y[1], &y[2], &y[3]);
    vec![
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    ]
}

/// Sign of the blade product by sorting index lists, with e_i² from the signature.
fn blade_oracle(sig: &Signature, a: u32, b: u32) -> (i64, u32) {
    let mut idx: Vec<usize> = (0..32).filter(|i| a >> i & 1 == 1).collect();
    idx.extend((0..32).filter(|i| b >> i & 1 == 1));
    let mut sign = 1i64;
    let mut changed = true;
    while changed {
        changed = false;
        for k in 0..idx.len().saturating_sub(1) {
            if idx[k] > idx[k + 1] {
                idx.swap(k, k + 1);
                sign = -sign;
                changed = true;
            }
        }
    }
    let mut out: Vec<usize> = Vec::new();
    for i in idx {
        if out.last() == Some(&i) {
            out.pop();
            sign *= sig.square(i) as i64;
        } else {
            out.push(i);
        }
    }
    (sign, out.iter().fold(0, |m, i| m | 1 << i))
}

fn multivector(sig: Signature) -> impl Strategy<Value = Multivector> {
    let size = 1usize << sig.n();
    prop::collection::vec(small_rational(), size)
        .prop_map(move |c| Multivector::from_terms(sig, c.into_iter().enumerate().map(|(i, x)| (Blade(i as u32), x))))
}

#[test]
fn quaternion_units() {
    let i = KElement::basis(Algebra::H, 1);
    let j = KElement::basis(Algebra::H, 2);
    let k = KElement::basis(Algebra::H, 3);
    assert_eq!(mul(&i, &j).unwrap(), k);
    assert_eq!(mul(&j, &i).unwrap(), k.neg());
    assert_eq!(mul(&k, &k).unwrap(), KElement::one(Algebra::H).neg());
}

#[test]
fn octonions_are_not_associative() {
    let e = |u| KElement::basis(Algebra::O, u);
    let lhs = mul(&mul(&e(1), &e(2)).unwrap(), &e(4)).unwrap();
    let rhs = mul(&e(1), &mul(&e(2), &e(4)).unwrap()).unwrap();
    assert_eq!(lhs, rhs.neg());
}

#[test]
fn blade_products_match_oracle() {
    for (r, s) in [(0, 4), (2, 2), (3, 1), (4, 0), (1, 3)] {
        let sig = Signature::new(r, s).unwrap();
        for a in 0..16u32 {
            for b in 0..16u32 {
                let (sign, out) = blade_product(&sig, Blade(a), Blade(b));
                assert_eq!((sign as i64, out.0), blade_oracle(&sig, a, b), "{sig} {a} {b}");
            }
        }
    }
}

#[test]
fn volume_squares() {
    // ν² = (−1)^{n(n−1)/2} · Π e_i²
    for n in 1..=10 {
        for r in 0..=n {
            let sig = Signature::new(r, n - r).unwrap();
            let flips = if (n * (n - 1) / 2) % 2 == 0 { 1 } else { -1 };
            let squares = if (n - r) % 2 == 0 { 1 } else { -1 };
            assert_eq!(volume_square(sig) as i64, flips * squares, "{sig}");
        }
    }
}

#[test]
fn hodge_star_in_four_dimensions() {
    let sig = Signature::euclidean(4);
    let e12 = Multivector::blade(sig, Blade(0b0011), Rational::one());
    let e34 = Multivector::blade(sig, Blade(0b1100), Rational::one());
    assert_eq!(hodge_star(4, &e12).unwrap(), e34);
    assert_eq!(hodge_star(4, &hodge_star(4, &e12).unwrap()).unwrap(), e12);
}

proptest! {
    #[test]
    fn quaternion_product_matches_hamilton(x in element(Algebra::H), y in element(Algebra::H)) {
        prop_assert_eq!(mul(&x, &y).unwrap().coeffs().to_vec(), hamilton(x.coeffs(), y.coeffs()));
    }

    #[test]
    fn norm_is_multiplicative(x in element(Algebra::O), y in element(Algebra::O)) {
        prop_assert_eq!(norm_sq(&mul(&x, &y).unwrap()), norm_sq(&x) * norm_sq(&y));
    }

    #[test]
    fn conjugation_reverses_products(x in element(Algebra::O), y in element(Algebra::O)) {
        prop_assert_eq!(conj(&mul(&x, &y).unwrap()), mul(&conj(&y), &conj(&x)).unwrap());
    }

    #[test]
    fn octonions_are_alternative(x in element(Algebra::O), y in element(Algebra::O)) {
        let xx = mul(&x, &x).unwrap();
        prop_assert_eq!(mul(&xx, &y).unwrap(), mul(&x, &mul(&x, &y).unwrap()).unwrap());
        let yy = mul(&y, &y).unwrap();
        prop_assert_eq!(mul(&mul(&x, &y).unwrap(), &y).unwrap(), mul(&x, &yy).unwrap());
    }

    #[test]
    fn inverse_is_two_sided(x in element(Algebra::O)) {
        prop_assume!(!x.is_zero());
        let inv = inverse(&x).unwrap();
        prop_assert_eq!(mul(&x, &inv).unwrap(), KElement::one(Algebra::O));
        prop_assert_eq!(mul(&inv, &x).unwrap(), KElement::one(Algebra::O));
    }

    #[test]
    fn multiplication_matrices(x in element(Algebra::H), y in element(Algebra::H)) {
        let y_col: Vec<Rational> = y.coeffs().to_vec();
        prop_assert_eq!(left_mul_matrix(&x).mul_vec(&y_col), mul(&x, &y).unwrap().coeffs().to_vec());
        let x_col: Vec<Rational> = x.coeffs().to_vec();
        prop_assert_eq!(right_mul_matrix(&y).mul_vec(&x_col), mul(&x, &y).unwrap().coeffs().to_vec());
    }

    #[test]
    fn c8_squares_to_minus_norm(x in element(Algebra::O)) {
        let c = octonion_action(&x).unwrap();
        prop_assert_eq!(c.matmul(&c), RMatrix::scalar(16, -norm_sq(&x)));
    }

    #[test]
    fn geometric_product_is_associative(
        a in multivector(Signature::new(1, 2).unwrap()),
        b in multivector(Signature::new(1, 2).unwrap()),
        c in multivector(Signature::new(1, 2).unwrap()),
    ) {
        prop_assert_eq!(a.gp(&b).unwrap().gp(&c).unwrap(), a.gp(&b.gp(&c).unwrap()).unwrap());
    }

    #[test]
    fn involutions(a in multivector(Signature::new(2, 2).unwrap()), b in multivector(Signature::new(2, 2).unwrap())) {
        let ab = a.gp(&b).unwrap();
        prop_assert_eq!(ab.reversion(), b.reversion().gp(&a.reversion()).unwrap());
        prop_assert_eq!(ab.grade_involution(), a.grade_involution().gp(&b.grade_involution()).unwrap());
    }

    #[test]
    fn vectors_anticommute(v in prop::collection::vec(small_rational(), 4), w in prop::collection::vec(small_rational(), 4)) {
        let sig = Signature::new(1, 3).unwrap();
        let x = Multivector::vector(sig, &v).unwrap();
        let y = Multivector::vector(sig, &w).unwrap();
        let anti = x.gp(&y).unwrap().add(&y.gp(&x).unwrap()).unwrap();
        let g = sig.inner(&v, &w);
        prop_assert_eq!(anti, Multivector::scalar(sig, Rational::from_int(-2) * g));
    }

    #[test]
    fn wedge_is_antisymmetric_on_vectors(v in prop::collection::vec(small_rational(), 4), w in prop::collection::vec(small_rational(), 4)) {
        let sig = Signature::euclidean(4);
        let x = Multivector::vector(sig, &v).unwrap();
        let y = Multivector::vector(sig, &w).unwrap();
        prop_assert_eq!(wedge(&x, &y).unwrap(), wedge(&y, &x).unwrap().neg());
    }

    #[test]
    fn versor_inverse(v in prop::collection::vec(small_rational(), 3), w in prop::collection::vec(small_rational(), 3)) {
        let sig = Signature::euclidean(3);
        let x = Multivector::vector(sig, &v).unwrap().gp(&Multivector::vector(sig, &w).unwrap()).unwrap();
        prop_assume!(!x.is_zero());
        prop_assert_eq!(x.gp(&x.inverse().unwrap()).unwrap(), Multivector::one(sig));
    }
}
