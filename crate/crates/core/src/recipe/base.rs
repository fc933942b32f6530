use crate::clifford::Signature;
use crate::division::{conj, left_mul_matrix, right_mul_matrix, Algebra, KElement};
use crate::error::{input, Result};
use crate::linalg::RMatrix;
use crate::matrix_rep::{realify, KMatrix, Side};
use crate::rational::Rational;

use super::module::{Family, SpinorModule, Variant};

pub(crate) fn quat(i: usize) -> KElement {
    KElement::basis(Algebra::H, i)
}

fn quat_units() -> [KElement; 4] {
    [quat(0), quat(1), quat(2), quat(3)]
}

/// Right multiplication by i, j, k on ℍ^m.
pub(crate) fn quaternion_right_units(m: usize) -> Vec<RMatrix> {
    (1..4).map(|u| RMatrix::identity(m).kron(&right_mul_matrix(&quat(u)))).collect()
}

/// c⁴ᴿ(q) on ∧_ℍℍ = ℍ², (λ, w) ↦ (−q̄w, qλ), as a right-module map.
pub fn c4_kmatrix(q: &KElement) -> Result<KMatrix> {
    if q.algebra() != Algebra::H {
        return input("c4 takes a quaternion");
    }
    let z = KElement::zero(Algebra::H);
    KMatrix::new(Algebra::H, 2, 2, vec![z.clone(), conj(q).neg(), q.clone(), z], Side::RightModuleMap)
}

/// c4(q) realified on ℝ⁸.
pub fn c4_action(q: &KElement) -> Result<RMatrix> {
    Ok(realify(&c4_kmatrix(q)?))
}

/// c⁴ᴸ(q): the left-module version, (λ, w) ↦ (−wq, λq̄) on row vectors.
pub fn c4_left_kmatrix(q: &KElement) -> Result<KMatrix> {
    Ok(c4_kmatrix(q)?.conjugate_transport())
}

/// c_{4,0}(q): (λ, w) ↦ (q̄w, qλ), squaring to +|q|².
pub fn c40_kmatrix(q: &KElement) -> Result<KMatrix> {
    if q.algebra() != Algebra::H {
        return input("c40 takes a quaternion");
    }
    let z = KElement::zero(Algebra::H);
    KMatrix::new(Algebra::H, 2, 2, vec![z.clone(), conj(q), q.clone(), z], Side::RightModuleMap)
}

pub fn c40_left_kmatrix(q: &KElement) -> Result<KMatrix> {
    Ok(c40_kmatrix(q)?.conjugate_transport())
}

fn quaternion_module(
    sig: Signature,
    field: Algebra,
    gens: Vec<RMatrix>,
    grading: Option<Vec<i8>>,
    units: Vec<RMatrix>,
    family: Family,
    variant: Variant,
) -> SpinorModule {
    let d = gens[0].rows();
    let mut m = SpinorModule {
        signature: sig,
        field,
        real_dim: d,
        generators: gens,
        grading,
        spin_metric: RMatrix::identity(d),
        right_units: units,
        family,
        variant,
    };
    m.adopt_volume_grading();
    m
}

pub(crate) fn s4_grading() -> Vec<i8> {
    [1i8; 4].into_iter().chain([-1i8; 4]).collect()
}

/// Base modules S₁ = ℂ, S₂ = S₃ = ℍ, S₄ = ∧_ℍℍ for Cl(0,n).
pub fn base_module(n: usize, variant: Variant) -> Result<SpinorModule> {
    if variant == Variant::Minus && n != 3 {
        return input("the minus variant exists only for n = 3 among the base modules");
    }
    let sig = Signature::euclidean(n);
    let fam = Family::QuaternionicMultivector;
    Ok(match n {
        1 => {
            let i = KElement::basis(Algebra::C, 1);
            let li = left_mul_matrix(&i);
            quaternion_module(sig, Algebra::C, vec![li], None, vec![right_mul_matrix(&i)], fam, variant)
        }
        2 | 3 => {
            let s = variant.sign();
            let gens = (1..=n).map(|u| left_mul_matrix(&quat(u)).scale(&s)).collect();
            quaternion_module(sig, Algebra::H, gens, None, quaternion_right_units(1), fam, variant)
        }
        4 => {
            let gens = quat_units().iter().map(c4_action).collect::<Result<Vec<_>>>()?;
            quaternion_module(sig, Algebra::H, gens, Some(s4_grading()), quaternion_right_units(2), fam, variant)
        }
        _ => return input(format!("base modules exist for n = 1..4, not {n}")),
    })
}

/// The three generators of S_{3,0} = ℂ² as complex matrices.
pub(crate) fn s30_kmatrices() -> Vec<KMatrix> {
    let c = |re: i64, im: i64| KElement::from_ints(Algebra::C, &[re, im]).expect("two coefficients");
    let mk = |e: [KElement; 4]| KMatrix::new(Algebra::C, 2, 2, e.to_vec(), Side::RightModuleMap).expect("2x2");
    vec![
        mk([c(0, 0), c(1, 0), c(1, 0), c(0, 0)]),
        mk([c(0, 0), c(0, -1), c(0, 1), c(0, 0)]),
        mk([c(1, 0), c(0, 0), c(0, 0), c(-1, 0)]),
    ]
}

/// Base modules for Cl(n,0), n = 1..4, with every generator squaring to +1.
pub fn base_module_pos(n: usize, variant: Variant) -> Result<SpinorModule> {
    if variant == Variant::Minus && n != 1 {
        return input("the minus variant exists only for n = 1 among the positive base modules");
    }
    let sig = Signature::positive(n);
    let fam = Family::PositiveMultivector;
    Ok(match n {
        1 => quaternion_module(sig, Algebra::R, vec![RMatrix::scalar(1, variant.sign())], None, vec![], fam, variant),
        2 => {
            let e1 = RMatrix::from_ints(&[&[0, 1], &[1, 0]]);
            let e2 = RMatrix::from_ints(&[&[1, 0], &[0, -1]]);
            quaternion_module(sig, Algebra::R, vec![e1, e2], None, vec![], fam, variant)
        }
        3 => {
            let gens = s30_kmatrices().iter().map(realify).collect();
            let ri = RMatrix::identity(2).kron(&right_mul_matrix(&KElement::basis(Algebra::C, 1)));
            quaternion_module(sig, Algebra::C, gens, None, vec![ri], fam, variant)
        }
        4 => {
            let gens = quat_units().iter().map(|u| c40_kmatrix(u).map(|k| realify(&k))).collect::<Result<Vec<_>>>()?;
            quaternion_module(sig, Algebra::H, gens, Some(s4_grading()), quaternion_right_units(2), fam, variant)
        }
        _ => return input(format!("positive base modules exist for n = 1..4, not {n}")),
    })
}

// Exterior algebra ∧ℝ^i on blade masks in ascending numeric order.
fn wedge_op(i: usize, a: usize) -> RMatrix {
    let dim = 1usize << i;
    let mut m = RMatrix::zeros(dim, dim);
    for blade in 0..dim {
        if blade >> a & 1 == 0 {
            let before = (blade & ((1 << a) - 1)).count_ones();
            let s = if before.is_multiple_of(2) { 1 } else { -1 };
            m.set(blade | 1 << a, blade, Rational::from_int(s));
        }
    }
    m
}

fn contract_op(i: usize, a: usize) -> RMatrix {
    wedge_op(i, a).transpose()
}

/// c_{i,i}(x, ω) = x∧ − ι_ω on ∧ℝ^i.
pub fn split_action(i: usize, x: &[Rational], omega: &[Rational]) -> Result<RMatrix> {
    if x.len() != i || omega.len() != i {
        return input(format!("split action needs two vectors of length {i}"));
    }
    let dim = 1usize << i;
    let mut m = RMatrix::zeros(dim, dim);
    for a in 0..i {
        m = &m + &wedge_op(i, a).scale(&x[a]);
        m = &m - &contract_op(i, a).scale(&omega[a]);
    }
    Ok(m)
}

/// S_{i,i} = ∧ℝ^i for Cl(i,i). Generators e_a = f_a∧ + ι_{f^a} square to +1,
/// e_{i+a} = f_a∧ − ι_{f^a} square to −1; the quadratic form is g/2.
pub fn split_signature_module(i: usize) -> Result<SpinorModule> {
    if i == 0 {
        return input("split signature needs i ≥ 1");
    }
    let plus = (0..i).map(|a| &wedge_op(i, a) + &contract_op(i, a));
    let minus = (0..i).map(|a| &wedge_op(i, a) - &contract_op(i, a));
    let gens: Vec<RMatrix> = plus.chain(minus).collect();
    let grading = (0..1usize << i).map(|b| if b.count_ones() % 2 == 0 { 1 } else { -1 }).collect();
    let sig = Signature::new(i, i)?;
    Ok(quaternion_module(sig, Algebra::R, gens, Some(grading), vec![], Family::SplitExterior, Variant::Plus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn hv(c: &[i64]) -> Vec<Rational> {
        c.iter().map(|&x| Rational::from_int(x)).collect()
    }

    #[test]
    fn c4_examples() {
        let c1 = c4_action(&quat(0)).unwrap();
        // (λ, w) = (1, 2i) ↦ (−2i, 1)
        let x = hv(&[1, 0, 0, 0, 0, 2, 0, 0]);
        assert_eq!(c1.mul_vec(&x), hv(&[0, -2, 0, 0, 1, 0, 0, 0]));
        let ci = c4_action(&quat(1)).unwrap();
        assert_eq!(ci.mul_vec(&hv(&[0, 0, 0, 0, 1, 0, 0, 0])), hv(&[0, 1, 0, 0, 0, 0, 0, 0]));
        let q = KElement::from_ints(Algebra::H, &[1, 2, -1, 3]).unwrap();
        let cq = c4_action(&q).unwrap();
        assert_eq!(cq.matmul(&cq), RMatrix::scalar(8, rat(-15, 1)));
    }

    #[test]
    fn c4_left_squares_and_is_left_linear() {
        let q = KElement::from_ints(Algebra::H, &[2, 0, 1, -1]).unwrap();
        let l = realify(&c4_left_kmatrix(&q).unwrap());
        assert_eq!(l.matmul(&l), RMatrix::scalar(8, rat(-6, 1)));
        let lj = RMatrix::identity(2).kron(&left_mul_matrix(&quat(2)));
        assert!(l.commutes_with(&lj));
    }

    #[test]
    fn base_volume_signs() {
        let plus = base_module(3, Variant::Plus).unwrap();
        let minus = base_module(3, Variant::Minus).unwrap();
        assert_eq!(plus.volume_operator(), RMatrix::scalar(4, rat(-1, 1)));
        assert_eq!(minus.volume_operator(), RMatrix::identity(4));
        let s1 = base_module(1, Variant::Plus).unwrap();
        assert_eq!(s1.generators[0].matmul(&s1.generators[0]), RMatrix::scalar(2, rat(-1, 1)));
        assert!(base_module(2, Variant::Minus).is_err());
    }

    #[test]
    fn s4_grading_matches_volume() {
        let s4 = base_module(4, Variant::Plus).unwrap();
        assert_eq!(s4.volume_operator(), RMatrix::diag_signs(&s4_grading()));
    }

    #[test]
    fn positive_bases() {
        let p1 = base_module_pos(1, Variant::Plus).unwrap();
        assert!(p1.generators[0].is_identity());
        let p2 = base_module_pos(2, Variant::Plus).unwrap();
        assert_eq!(p2.generators[1], RMatrix::diag_signs(&[1, -1]));
        let p4 = base_module_pos(4, Variant::Plus).unwrap();
        let q = KElement::from_ints(Algebra::H, &[1, 1, 1, 1]).unwrap();
        let cq = realify(&c40_kmatrix(&q).unwrap());
        assert_eq!(cq.matmul(&cq), RMatrix::scalar(8, rat(4, 1)));
        for n in 1..=4 {
            assert!(base_module_pos(n, Variant::Plus).unwrap().clifford_report().passed(), "n={n}");
        }
        assert!(p4.grading.is_some());
        assert!(base_module_pos(2, Variant::Minus).is_err());
    }

    #[test]
    fn split_examples() {
        let one = Rational::one();
        let c = split_action(1, std::slice::from_ref(&one), std::slice::from_ref(&one)).unwrap();
        // λ + μ f ↦ −μ + λ f
        assert_eq!(c.mul_vec(&hv(&[3, 5])), hv(&[-5, 3]));
        assert_eq!(c.matmul(&c), RMatrix::scalar(2, rat(-1, 1)));
        let s2 = split_signature_module(2).unwrap();
        assert_eq!(s2.real_dim, 4);
        assert!(s2.clifford_report().passed());
    }
}
