use crate::clifford::{form_inner, hodge_star, interior, wedge, Blade, Multivector, Signature};
use crate::division::{conj, left_mul_matrix, right_mul_matrix, Algebra, KElement};
use crate::error::{input, Result};
use crate::linalg::{self, RMatrix};
use crate::matrix_rep::{self, AlgebraTag};
use crate::rational::{rat, Rational};

use super::module::{Family, SpinorModule, Variant};

/// Orthonormal imaginary units of a ℂ or ℍ commutant, read off its trace-free part.
pub(crate) fn derive_right_units(gens: &[RMatrix]) -> Result<(Algebra, Vec<RMatrix>)> {
    let c = matrix_rep::commutant(gens)?;
    let field = match c.division_algebra {
        AlgebraTag::R => return Ok((Algebra::R, vec![])),
        AlgebraTag::C => Algebra::C,
        AlgebraTag::H => Algebra::H,
        AlgebraTag::Matrix(_) => return Ok((Algebra::R, vec![])),
    };
    let d = gens[0].rows();
    let dr = Rational::from_int(d as i64);
    let mut units: Vec<RMatrix> = Vec::new();
    // ⟨X, Y⟩ = −tr(XY)/d is positive definite on Im K.
    let ip = |x: &RMatrix, y: &RMatrix| -(x.matmul(y).trace() / &dr);
    for b in &c.basis {
        let mut x = b - &RMatrix::scalar(d, &b.trace() / &dr);
        for u in &units {
            x = &x - &u.scale(&ip(&x, u));
        }
        if x.is_zero() {
            continue;
        }
        let n = ip(&x, &x);
        match n.sqrt_exact() {
            Some(r) => units.push(x.scale(&r.recip())),
            None => return input("commutant units cannot be normalized over the rationals"),
        }
    }
    if units.len() + 1 != field.dim() {
        return input("commutant units do not span Im K");
    }
    if field == Algebra::H && units[0].matmul(&units[1]) != units[2] {
        units[2] = -&units[2];
    }
    Ok((field, units))
}

fn form(sig: Signature, terms: &[(u32, Rational)]) -> Multivector {
    Multivector::from_terms(sig, terms.iter().map(|(m, c)| (Blade(*m), c.clone())))
}

// Anti-self-dual basis τ̂_a = τ_a/2 in dimension 4.
fn asd_basis(sig: Signature) -> [Multivector; 3] {
    let h = rat(1, 2);
    let e12 = 0b0011;
    let e34 = 0b1100;
    let e13 = 0b0101;
    let e24 = 0b1010;
    let e14 = 0b1001;
    let e23 = 0b0110;
    [
        form(sig, &[(e12, h.clone()), (e34, -&h)]),
        form(sig, &[(e13, h.clone()), (e24, h.clone())]),
        form(sig, &[(e14, h.clone()), (e23, -&h)]),
    ]
}

/// P₋ω = (ω − ⋆ω)/2 on 2-forms in dimension 4.
pub fn asd_projection(w: &Multivector) -> Result<Multivector> {
    let star = hodge_star(4, w)?;
    Ok(w.sub(&star)?.scale(&rat(1, 2)))
}

/// c(v) on the square-root-of-space model, n = 1..4.
///
/// n = 1, 2: v∧ − ι_v on ∧ℝⁿ. n = 3: (λ, w) ↦ (−⟨v,w⟩, λv + ⋆(v∧w)) on ℝ ⊕ ℝ³.
/// n = 4: (λ, w, τ) ↦ (−⟨v,w⟩, λv + ⋆(v∧τ) − ι_vτ, P₋(v∧w)) on ℝ ⊕ ℝ⁴ ⊕ ∧⁻,
/// with ∧⁻ in the basis τ̂.
pub fn sqrt_space_action(n: usize, v: &[Rational]) -> Result<RMatrix> {
    if !(1..=4).contains(&n) {
        return input(format!("the square-root-of-space model exists for n = 1..4, not {n}"));
    }
    if v.len() != n {
        return input(format!("vector must have length {n}"));
    }
    let sig = Signature::euclidean(n);
    let vf = Multivector::vector(sig, v)?;
    match n {
        1 | 2 => {
            let dim = 1usize << n;
            let mut m = RMatrix::zeros(dim, dim);
            for col in 0..dim {
                let x = form(sig, &[(col as u32, Rational::one())]);
                let y = wedge(&vf, &x)?.sub(&interior(v, &x)?)?;
                for (b, c) in y.terms() {
                    m.set(b.0 as usize, col, c.clone());
                }
            }
            Ok(m)
        }
        3 => {
            // basis: λ, e1, e2, e3
            let mut m = RMatrix::zeros(4, 4);
            m_set_column(&mut m, 0, &[Rational::zero()], &vf)?;
            for a in 0..3 {
                let w = Multivector::generator(sig, a);
                let lam = -form_inner(&vf, &w);
                let out = hodge_star(3, &wedge(&vf, &w)?)?;
                m_set_column(&mut m, a + 1, &[lam], &out)?;
            }
            Ok(m)
        }
        _ => {
            // basis: λ, e1..e4, τ̂1..τ̂3
            let taus = asd_basis(sig);
            let tau_norm = form_inner(&taus[0], &taus[0]);
            let mut m = RMatrix::zeros(8, 8);
            let vec_coords = |x: &Multivector| -> Vec<Rational> { (0..4).map(|i| x.coeff(Blade(1 << i))).collect() };
            let tau_coords =
                |x: &Multivector| -> Vec<Rational> { taus.iter().map(|t| form_inner(x, t) / &tau_norm).collect() };
            let mut put = |col: usize, lam: Rational, w: Vec<Rational>, t: Vec<Rational>| {
                m.set(0, col, lam);
                for (i, c) in w.into_iter().enumerate() {
                    m.set(1 + i, col, c);
                }
                for (i, c) in t.into_iter().enumerate() {
                    m.set(5 + i, col, c);
                }
            };
            put(0, Rational::zero(), vec_coords(&vf), vec![Rational::zero(); 3]);
            for a in 0..4 {
                let w = Multivector::generator(sig, a);
                let lam = -form_inner(&vf, &w);
                let p = asd_projection(&wedge(&vf, &w)?)?;
                put(1 + a, lam, vec![Rational::zero(); 4], tau_coords(&p));
            }
            for (a, tau) in taus.iter().enumerate() {
                let mid = hodge_star(4, &wedge(&vf, tau)?)?.sub(&interior(v, tau)?)?;
                put(5 + a, Rational::zero(), vec_coords(&mid), vec![Rational::zero(); 3]);
            }
            Ok(m)
        }
    }
}

fn m_set_column(m: &mut RMatrix, col: usize, lam: &[Rational], vecpart: &Multivector) -> Result<()> {
    m.set(0, col, lam[0].clone());
    for (b, c) in vecpart.terms() {
        if b.grade() != 1 {
            return input("expected a 1-form");
        }
        m.set(1 + b.0.trailing_zeros() as usize, col, c.clone());
    }
    Ok(())
}

fn alt_module(sig: Signature, gens: Vec<RMatrix>, grading: Option<Vec<i8>>, family: Family) -> Result<SpinorModule> {
    let (field, units) = derive_right_units(&gens)?;
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
        variant: Variant::Plus,
    };
    m.adopt_volume_grading();
    Ok(m)
}

/// The square-root-of-space module for Cl(0,n), n = 1..4.
pub fn sqrt_space_module(n: usize) -> Result<SpinorModule> {
    if !(1..=4).contains(&n) {
        return input(format!("the square-root-of-space model exists for n = 1..4, not {n}"));
    }
    let gens = (0..n)
        .map(|a| {
            let v: Vec<Rational> = (0..n).map(|i| Rational::from_int((i == a) as i64)).collect();
            sqrt_space_action(n, &v)
        })
        .collect::<Result<Vec<_>>>()?;
    let grading = match n {
        2 => Some((0..4u32).map(|b| if b.count_ones() % 2 == 0 { 1 } else { -1 }).collect()),
        4 => Some(vec![1, -1, -1, -1, -1, 1, 1, 1]),
        _ => None,
    };
    alt_module(Signature::euclidean(n), gens, grading, Family::SqrtSpace)
}

/// c₈(x)(u, v) = (−x̄v, xu) on 𝕆 ⊕ 𝕆.
pub fn octonion_action(x: &KElement) -> Result<RMatrix> {
    if x.algebra() != Algebra::O {
        return input("c8 takes an octonion");
    }
    let grid = vec![vec![None, Some(-&left_mul_matrix(&conj(x)))], vec![Some(left_mul_matrix(x)), None]];
    Ok(RMatrix::from_blocks(&grid, 8, 8))
}

/// Octonionic modules for Cl(0,k), 4 ≤ k ≤ 8: right multiplication by the
/// first k imaginary units on 𝕆 for k ≤ 7, and c₈ on 𝕆 ⊕ 𝕆 for k = 8.
pub fn octonion_module(k: usize) -> Result<SpinorModule> {
    if !(4..=8).contains(&k) {
        return input(format!("the octonion family covers k = 4..8, not {k}"));
    }
    let sig = Signature::euclidean(k);
    if k == 8 {
        let gens = (0..8).map(|u| octonion_action(&KElement::basis(Algebra::O, u))).collect::<Result<Vec<_>>>()?;
        let grading = [1i8; 8].into_iter().chain([-1i8; 8]).collect();
        return alt_module(sig, gens, Some(grading), Family::Octonion);
    }
    let gens = (1..=k).map(|u| right_mul_matrix(&KElement::basis(Algebra::O, u))).collect();
    alt_module(sig, gens, None, Family::Octonion)
}

/// Rank of the projector onto ∧⁻; exposed for checks.
pub fn asd_dimension() -> usize {
    let sig = Signature::euclidean(4);
    let cols: Vec<Vec<Rational>> = (0..16u32)
        .filter(|m| m.count_ones() == 2)
        .map(|m| {
            let p = asd_projection(&form(sig, &[(m, Rational::one())])).expect("dimension 4");
            (0..16u32).map(|b| p.coeff(Blade(b))).collect()
        })
        .collect();
    linalg::rank(&cols)
}
