use crate::clifford::Signature;
use crate::division::{Algebra, KElement};
use crate::error::{input, Result};
use crate::linalg::RMatrix;
use crate::matrix_rep::{graded_tensor_operator, tensor_module, GradedOp, GradedSpace, KMatrix, Side};

use super::base::{
    base_module, base_module_pos, c40_left_kmatrix, c4_left_kmatrix, quat, s30_kmatrices, split_signature_module,
};
use super::module::{minus_allowed, Family, SpinorModule, Variant};

/// A real matrix as a column-convention K-matrix over ℝ.
fn kreal(m: &RMatrix) -> KMatrix {
    KMatrix::from_fn(Algebra::R, m.rows(), m.cols(), Side::RightModuleMap, |i, j| {
        KElement::real(Algebra::R, m.get(i, j))
    })
    .expect("square real matrix")
}

struct Parts {
    left: Vec<RMatrix>,
    right: Vec<RMatrix>,
    grading: Option<Vec<i8>>,
    real_dim: usize,
}

/// One-slot operators c_M(u)⊗̂1 and 1⊗̂c_N(v) on M ⊗_K N.
fn tensor_parts(a: &SpinorModule, n: &GradedSpace, n_ops: &[KMatrix], over: Algebra, graded: bool) -> Result<Parts> {
    let m = a.space();
    let b = n.real_dim / over.dim();
    let id_n = KMatrix::identity(over, b, Side::LeftModuleMap);
    let id_m = RMatrix::identity(m.real_dim);
    let left = a
        .generators
        .iter()
        .map(|g| graded_tensor_operator(&GradedOp::odd(g.clone()), &GradedOp::even(id_n.clone()), &m, n, over))
        .collect::<Result<Vec<_>>>()?;
    let right = n_ops
        .iter()
        .map(|s| graded_tensor_operator(&GradedOp::even(id_m.clone()), &GradedOp::odd(s.clone()), &m, n, over))
        .collect::<Result<Vec<_>>>()?;
    let grading = if graded { tensor_module(&m, n, over, true)?.grading } else { None };
    Ok(Parts { left, right, grading, real_dim: m.real_dim * b })
}

/// Right units of M carried over to M ⊗_K N as T ⊗̂ 1.
fn units_from_left(a: &SpinorModule, units: &[RMatrix], n: &GradedSpace, over: Algebra) -> Result<Vec<RMatrix>> {
    let m = a.space();
    let id_n = KMatrix::identity(over, n.real_dim / over.dim(), Side::LeftModuleMap);
    units
        .iter()
        .map(|u| graded_tensor_operator(&GradedOp::even(u.clone()), &GradedOp::even(id_n.clone()), &m, n, over))
        .collect()
}

/// Right units of a real factor N carried over as 1 ⊗̂ U.
fn units_from_right(a: &SpinorModule, b: &SpinorModule) -> Result<Vec<RMatrix>> {
    let m = a.space();
    let n = b.space();
    let id_m = RMatrix::identity(a.real_dim);
    b.right_units
        .iter()
        .map(|u| graded_tensor_operator(&GradedOp::even(id_m.clone()), &GradedOp::even(kreal(u)), &m, &n, Algebra::R))
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn finish(
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

enum Units {
    Left,
    Right,
}

/// a ⊗_ℝ b (graded or not) with the Koszul operator rule.
fn real_tensor(
    a: &SpinorModule,
    b: &SpinorModule,
    graded: bool,
    units: Units,
    variant: Variant,
) -> Result<SpinorModule> {
    let ops: Vec<KMatrix> = b.generators.iter().map(kreal).collect();
    let n = b.space();
    let p = tensor_parts(a, &n, &ops, Algebra::R, graded)?;
    let (field, units) = match units {
        Units::Left => (a.field, units_from_left(a, &a.right_units, &n, Algebra::R)?),
        Units::Right => (b.field, units_from_right(a, b)?),
    };
    let sig = Signature { r: a.signature.r + b.signature.r, s: a.signature.s + b.signature.s };
    let gens = p.left.into_iter().chain(p.right).collect();
    Ok(finish(sig, field, gens, p.grading, units, a.family, variant))
}

/// S₄ ⊗̂_ℍ S₄ with c⁴ᴿ(u)⊗̂1 + 1⊗̂c⁴ᴸ(v).
fn s8_euclidean() -> Result<SpinorModule> {
    let s4 = base_module(4, Variant::Plus)?;
    let ops = (0..4).map(|u| c4_left_kmatrix(&quat(u))).collect::<Result<Vec<_>>>()?;
    let p = tensor_parts(&s4, &s4.space(), &ops, Algebra::H, true)?;
    let gens = p.left.into_iter().chain(p.right).collect();
    Ok(finish(
        Signature::euclidean(8),
        Algebra::R,
        gens,
        p.grading,
        vec![],
        Family::QuaternionicMultivector,
        Variant::Plus,
    ))
}

fn s8_positive() -> Result<SpinorModule> {
    let s4 = base_module_pos(4, Variant::Plus)?;
    let ops = (0..4).map(|u| c40_left_kmatrix(&quat(u))).collect::<Result<Vec<_>>>()?;
    let p = tensor_parts(&s4, &s4.space(), &ops, Algebra::H, true)?;
    let gens = p.left.into_iter().chain(p.right).collect();
    Ok(finish(Signature::positive(8), Algebra::R, gens, p.grading, vec![], Family::PositiveMultivector, Variant::Plus))
}

// Sign of the extra generators D∘R_u on S_{8k+4}, fixed so that the plus
// variant in dimension 8k+7 has c(ν) = −1.
const EXTRA_SIGN: i64 = -1;

/// S_{8k+4+m} for m = 1..3: the module S_{8k+4} itself, with extra
/// generators D∘R_u for the first m imaginary units of its right ℍ action.
fn extend_by_units(a: &SpinorModule, m: usize, variant: Variant) -> Result<SpinorModule> {
    let Some(d) = a.space().grading_operator() else {
        return input("extension needs a graded module");
    };
    if a.right_units.len() < 3 {
        return input("extension needs a right quaternionic action");
    }
    let sign = variant.sign() * crate::rational::Rational::from_int(EXTRA_SIGN);
    let extras = a.right_units[..m].iter().map(|u| d.matmul(u).scale(&sign));
    let gens: Vec<RMatrix> = a.generators.iter().cloned().chain(extras).collect();
    let (field, units) = if m == 1 { (Algebra::C, vec![a.right_units[0].clone()]) } else { (Algebra::R, vec![]) };
    let sig = Signature { r: a.signature.r, s: a.signature.s + m };
    Ok(finish(sig, field, gens, None, units, a.family, variant))
}

fn s8k(k: usize, positive: bool) -> Result<SpinorModule> {
    let base = if positive { s8_positive()? } else { s8_euclidean()? };
    let mut s = base.clone();
    for _ in 1..k {
        s = real_tensor(&s, &base, true, Units::Right, Variant::Plus)?;
    }
    Ok(s)
}

/// Irreducible module for the Euclidean Cl(0,n).
pub fn assemble_euclidean(n: usize, variant: Variant) -> Result<SpinorModule> {
    if n == 0 {
        return input("dimension must be at least 1");
    }
    if variant == Variant::Minus && n % 4 != 3 {
        return input("the minus variant needs n ≡ 3 mod 4");
    }
    let (k, r) = (n / 8, n % 8);
    let mut m = if k == 0 {
        match r {
            1..=4 => base_module(r, variant)?,
            _ => extend_by_units(&base_module(4, Variant::Plus)?, r - 4, variant)?,
        }
    } else {
        let core = s8k(k, false)?;
        match r {
            0 => core,
            1..=3 => real_tensor(&core, &base_module(r, variant)?, false, Units::Right, variant)?,
            4 => real_tensor(&core, &base_module(4, Variant::Plus)?, true, Units::Right, variant)?,
            _ => {
                let s84 = real_tensor(&core, &base_module(4, Variant::Plus)?, true, Units::Right, Variant::Plus)?;
                extend_by_units(&s84, r - 4, variant)?
            }
        }
    };
    m.family = Family::QuaternionicMultivector;
    m.variant = variant;
    Ok(m)
}

fn complex_tensor_s30(a: &SpinorModule, variant: Variant) -> Result<SpinorModule> {
    let s30 = base_module_pos(3, Variant::Plus)?;
    let n = s30.space();
    let p = tensor_parts(a, &n, &s30_kmatrices(), Algebra::C, false)?;
    let units = units_from_left(a, &a.right_units[..1], &n, Algebra::C)?;
    let sig = Signature { r: a.signature.r + 3, s: a.signature.s };
    let gens = p.left.into_iter().chain(p.right).collect();
    debug_assert_eq!(p.real_dim, 2 * a.real_dim);
    Ok(finish(sig, Algebra::C, gens, None, units, a.family, variant))
}

/// Irreducible module for Cl(n,0), every generator squaring to +1.
pub fn assemble_positive(n: usize, variant: Variant) -> Result<SpinorModule> {
    if n == 0 {
        return input("dimension must be at least 1");
    }
    if variant == Variant::Minus && n % 4 != 1 {
        return input("the minus variant needs n ≡ 1 mod 4 in positive signature");
    }
    if n <= 4 {
        return base_module_pos(n, variant);
    }
    let (k, r) = (n / 8, n % 8);
    let core = if k > 0 { Some(s8k(k, true)?) } else { None };
    let s4 = base_module_pos(4, Variant::Plus)?;
    let s84 = |c: &Option<SpinorModule>| -> Result<SpinorModule> {
        match c {
            None => Ok(s4.clone()),
            Some(c) => real_tensor(c, &s4, true, Units::Right, Variant::Plus),
        }
    };
    let mut m = match r {
        0 => core.expect("n ≥ 8"),
        1..=3 => {
            real_tensor(core.as_ref().expect("n ≥ 8"), &base_module_pos(r, variant)?, false, Units::Right, variant)?
        }
        4 => s84(&core)?,
        5 => real_tensor(&s84(&core)?, &base_module_pos(1, variant)?, false, Units::Left, variant)?,
        6 => real_tensor(&s84(&core)?, &base_module_pos(2, Variant::Plus)?, false, Units::Left, variant)?,
        _ => complex_tensor_s30(&s84(&core)?, variant)?,
    };
    m.family = Family::PositiveMultivector;
    m.variant = variant;
    Ok(m)
}

/// Irreducible module for Cl(r,s): S_{i,i} ⊗ S_{a,0} or S_{i,i} ⊗ S_{0,b}
/// with i = min(r,s), generators ordered so that e_1..e_r square to +1.
pub fn assemble_signature(r: usize, s: usize, variant: Variant) -> Result<SpinorModule> {
    let sig = Signature::new(r, s)?;
    if variant == Variant::Minus && !minus_allowed(sig) {
        return input(format!("no minus variant for {sig}"));
    }
    let i = r.min(s);
    if i == 0 {
        return if r == 0 { assemble_euclidean(s, variant) } else { assemble_positive(r, variant) };
    }
    let split = split_signature_module(i)?;
    if r == s {
        return Ok(split);
    }
    let other = if r > s { assemble_positive(r - i, variant)? } else { assemble_euclidean(s - i, variant)? };
    let ops: Vec<KMatrix> = other.generators.iter().map(kreal).collect();
    let n = other.space();
    let graded = other.grading.is_some();
    let p = tensor_parts(&split, &n, &ops, Algebra::R, graded)?;
    let units = units_from_right(&split, &other)?;
    let (plus, minus) = p.left.split_at(i);
    let gens: Vec<RMatrix> = if r > s {
        plus.iter().chain(&p.right).chain(minus).cloned().collect()
    } else {
        plus.iter().chain(minus).chain(&p.right).cloned().collect()
    };
    Ok(finish(sig, other.field, gens, p.grading, units, Family::Assembled, variant))
}
