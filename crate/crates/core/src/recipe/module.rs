use std::fmt;
use std::str::FromStr;

use crate::clifford::{Blade, Multivector, Signature};
use crate::division::Algebra;
use crate::error::{input, Error, Result};
use crate::linalg::{self, RMatrix};
use crate::matrix_rep::{self, CliffordReport, Commutant, GradedSpace};
use crate::rational::Rational;

/// Construction family of a module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    QuaternionicMultivector,
    SqrtSpace,
    Octonion,
    SplitExterior,
    PositiveMultivector,
    Assembled,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::QuaternionicMultivector => "quaternionic-multivector",
            Family::SqrtSpace => "sqrt-space",
            Family::Octonion => "octonion",
            Family::SplitExterior => "split-exterior",
            Family::PositiveMultivector => "positive-multivector",
            Family::Assembled => "assembled",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "quaternionic-multivector" => Family::QuaternionicMultivector,
            "sqrt-space" => Family::SqrtSpace,
            "octonion" => Family::Octonion,
            "split-exterior" => Family::SplitExterior,
            "positive-multivector" => Family::PositiveMultivector,
            "assembled" => Family::Assembled,
            _ => return input(format!("unknown family {s:?}")),
        })
    }
}

/// Sign choice for the modules whose volume element acts as ±1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Variant {
    #[default]
    Plus,
    Minus,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Plus => "plus",
            Variant::Minus => "minus",
        }
    }

    pub fn sign(self) -> Rational {
        match self {
            Variant::Plus => Rational::one(),
            Variant::Minus => Rational::from_int(-1),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plus" | "+" => Ok(Variant::Plus),
            "minus" | "-" => Ok(Variant::Minus),
            _ => input(format!("unknown variant {s:?}")),
        }
    }
}

/// A realified Clifford module with its coefficient field and spin metric.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinorModule {
    pub signature: Signature,
    /// The intertwiner field K acting on the right.
    pub field: Algebra,
    pub real_dim: usize,
    /// c(e_1), …, c(e_n) as real matrices.
    pub generators: Vec<RMatrix>,
    /// Degree (±1) of each real basis vector, when graded.
    pub grading: Option<Vec<i8>>,
    pub spin_metric: RMatrix,
    /// Right multiplication by an orthonormal basis of Im K.
    pub right_units: Vec<RMatrix>,
    pub family: Family,
    pub variant: Variant,
}

impl SpinorModule {
    pub fn n(&self) -> usize {
        self.signature.n()
    }

    /// c(e_A) as the ordered product of generators.
    pub fn blade_operator(&self, b: Blade) -> RMatrix {
        let mut m = RMatrix::identity(self.real_dim);
        for i in b.indices() {
            m = m.matmul(&self.generators[i]);
        }
        m
    }

    pub fn volume_operator(&self) -> RMatrix {
        self.blade_operator(Blade(self.signature.full_mask()))
    }

    /// c(x) for a multivector of the module's signature.
    pub fn multivector_operator(&self, x: &Multivector) -> Result<RMatrix> {
        if x.signature() != self.signature {
            return input(format!("multivector in {} acting on a {} module", x.signature(), self.signature));
        }
        let mut m = RMatrix::zeros(self.real_dim, self.real_dim);
        for (b, c) in x.terms() {
            m = &m + &self.blade_operator(b).scale(c);
        }
        Ok(m)
    }

    pub fn clifford_report(&self) -> CliffordReport {
        matrix_rep::verify_clifford_condition(&self.generators, self.signature)
    }

    pub fn space(&self) -> GradedSpace {
        GradedSpace {
            field: self.field,
            real_dim: self.real_dim,
            grading: self.grading.clone(),
            right_action: self.right_units.clone(),
        }
    }

    /// Generators of the even subalgebra's action: c(e_1)c(e_j) for j ≥ 2.
    pub fn even_generators(&self) -> Vec<RMatrix> {
        if self.n() == 1 {
            return vec![RMatrix::identity(self.real_dim)];
        }
        (1..self.n()).map(|j| self.generators[0].matmul(&self.generators[j])).collect()
    }

    pub fn right_action_commutes(&self) -> bool {
        self.right_units.iter().all(|u| self.generators.iter().all(|g| u.commutes_with(g)))
    }

    /// Replace the grading by the diagonal of c(ν) when that is available.
    pub(crate) fn adopt_volume_grading(&mut self) {
        let sig = self.signature;
        if sig.n().is_multiple_of(2) && crate::clifford::volume_square(sig) == 1 {
            if let Some(g) = self.volume_operator().as_sign_diagonal() {
                self.grading = Some(g);
            }
        }
    }
}

/// (r − s) mod 8.
pub fn clifford_class(sig: Signature) -> usize {
    (sig.r as i64 - sig.s as i64).rem_euclid(8) as usize
}

/// Real dimension of the commutant of an irreducible Cl(r,s) module.
pub fn commutant_dim(sig: Signature) -> usize {
    [1, 1, 1, 2, 4, 4, 4, 2][clifford_class(sig)]
}

pub fn commutant_field(sig: Signature) -> Algebra {
    Algebra::from_dim(commutant_dim(sig)).expect("1, 2 or 4")
}

/// Real dimension of an irreducible Cl(r,s) module, from the algebra's
/// structure as one or two copies of a matrix algebra over ℝ, ℂ or ℍ.
pub fn irreducible_real_dim(sig: Signature) -> usize {
    let d = commutant_dim(sig);
    let class = clifford_class(sig);
    let copies = if class == 1 || class == 5 { 2 } else { 1 };
    let total = (1usize << sig.n()) * d / copies;
    let root = (total as f64).sqrt().round() as usize;
    debug_assert_eq!(root * root, total);
    root
}

/// Whether the minus variant exists: the volume element is central and squares to 1.
pub fn minus_allowed(sig: Signature) -> bool {
    (sig.r as i64 - sig.s as i64).rem_euclid(4) == 1
}

/// K_n real dimensions for Euclidean n mod 8 = 1..8.
pub const K_TABLE: [usize; 8] = [2, 4, 4, 4, 2, 1, 1, 1];
/// K⁰_n real dimensions for Euclidean n mod 8 = 1..8.
pub const K0_TABLE: [usize; 8] = [4, 8, 4, 4, 4, 2, 1, 1];
/// Irreducible real dimensions for Euclidean n = 1..8.
pub const DIM_TABLE: [usize; 8] = [2, 4, 4, 8, 8, 8, 8, 16];

pub fn table_index(n: usize) -> usize {
    (n - 1) % 8
}

/// Expected irreducible real dimension of Cl(0,n).
pub fn euclidean_dim(n: usize) -> usize {
    DIM_TABLE[table_index(n)] * 16usize.pow(((n - 1) / 8) as u32)
}

/// Outcome of the spin-metric compatibility checks.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MetricReport {
    pub symmetric: bool,
    pub positive_definite: bool,
    /// 1-based generators failing (anti-)self-adjointness.
    pub generator_failures: Vec<usize>,
    /// 1-based right units failing skew-adjointness.
    pub unit_failures: Vec<usize>,
}

impl MetricReport {
    pub fn passed(&self) -> bool {
        self.symmetric && self.positive_definite && self.generator_failures.is_empty() && self.unit_failures.is_empty()
    }
}

fn is_positive_definite(g: &RMatrix) -> bool {
    if let Some(d) = diagonal_entries(g) {
        return d.iter().all(Rational::is_positive);
    }
    let mut m = g.to_dense();
    let n = m.len();
    for c in 0..n {
        if !m[c][c].is_positive() {
            return false;
        }
        let inv = m[c][c].recip();
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] * &inv;
            let pr = m[c].clone();
            for (x, p) in m[i].iter_mut().zip(&pr) {
                *x -= &(&f * p);
            }
        }
    }
    true
}

fn diagonal_entries(g: &RMatrix) -> Option<Vec<Rational>> {
    (0..g.rows())
        .map(|i| match g.row(i) {
            [(j, v)] if *j == i => Some(v.clone()),
            _ => None,
        })
        .collect()
}

/// Generators squaring to −1 must be skew-adjoint and those squaring to +1
/// self-adjoint for the spin metric; right units of Im K must be skew-adjoint.
pub fn spin_metric_verify(module: &SpinorModule) -> MetricReport {
    metric_checks(&module.spin_metric, &module.generators, module.signature, &module.right_units)
}

pub fn metric_checks(g: &RMatrix, generators: &[RMatrix], sig: Signature, units: &[RMatrix]) -> MetricReport {
    let mut rep = MetricReport { symmetric: *g == g.transpose(), positive_definite: false, ..Default::default() };
    rep.positive_definite = rep.symmetric && is_positive_definite(g);
    let adjoint_sign = |a: &RMatrix, sign: i8| {
        let lhs = a.transpose().matmul(g);
        let rhs = g.matmul(a);
        if sign > 0 {
            lhs == rhs
        } else {
            lhs == -&rhs
        }
    };
    for (i, a) in generators.iter().enumerate() {
        if !adjoint_sign(a, sig.square(i)) {
            rep.generator_failures.push(i + 1);
        }
    }
    for (i, u) in units.iter().enumerate() {
        if !adjoint_sign(u, -1) {
            rep.unit_failures.push(i + 1);
        }
    }
    rep
}

/// Commutant of the full action, or of the even subalgebra when `even_only`.
pub fn intertwiners(module: &SpinorModule, even_only: bool) -> Result<Commutant> {
    if even_only {
        matrix_rep::commutant(&module.even_generators())
    } else {
        matrix_rep::commutant(&module.generators)
    }
}

/// Commutant of the even subalgebra on one isotypic block of the restricted module.
///
/// When n is even and ν² = 1, c(ν) is central in the even action and splits the
/// module into two inequivalent halves exchanged by every c(e_i); the even
/// commutant is then a sum of two isomorphic algebras and this returns one of
/// them, computed on the +1 eigenspace of c(ν). Otherwise it is the full even
/// commutant.
pub fn even_commutant_factor(module: &SpinorModule) -> Result<Commutant> {
    let sig = module.signature;
    if sig.n() % 2 == 1 || crate::clifford::volume_square(sig) != 1 {
        return intertwiners(module, true);
    }
    let vol = module.volume_operator();
    let d = module.real_dim;
    let shifted = (&vol - &RMatrix::identity(d)).to_dense();
    let cols = linalg::nullspace(&shifted, d);
    if cols.is_empty() || cols.len() == d {
        return intertwiners(module, true);
    }
    let b = RMatrix::from_dense(&(0..d).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect::<Vec<_>>());
    let bt = b.transpose();
    let left_inv = bt.matmul(&b).inverse().expect("independent columns").matmul(&bt);
    let restricted: Vec<RMatrix> = module.even_generators().iter().map(|g| left_inv.matmul(g).matmul(&b)).collect();
    matrix_rep::commutant(&restricted)
}

/// Real dimension of the maps commuting with both the Clifford action and the
/// full even commutant.
pub fn bimodule_endomorphism_dim(module: &SpinorModule) -> Result<usize> {
    let even = intertwiners(module, true)?;
    let mut ops = module.generators.clone();
    ops.extend(even.basis);
    Ok(matrix_rep::intertwiner_space(&ops, &ops)?.len())
}

/// Maps X with X·c_a(e_i) = c_b(e_i)·X for all i.
pub fn joint_intertwiners(a: &SpinorModule, b: &SpinorModule) -> Result<Vec<RMatrix>> {
    if a.signature != b.signature {
        return input("modules have different signatures");
    }
    matrix_rep::intertwiner_space(&a.generators, &b.generators)
}

/// x ↦ s1·h(s2, x), with h the K-valued metric whose real part is the spin metric.
pub fn rank_one_operator(module: &SpinorModule, s1: &[Rational], s2: &[Rational]) -> Result<RMatrix> {
    let d = module.real_dim;
    if s1.len() != d || s2.len() != d {
        return input(format!("spinors must have length {d}"));
    }
    let g = &module.spin_metric;
    let row = |s: &[Rational]| g.transpose().mul_vec(s);
    let mut op = RMatrix::outer(s1, &row(s2));
    for u in &module.right_units {
        op = &op + &RMatrix::outer(&u.mul_vec(s1), &row(&u.mul_vec(s2)));
    }
    Ok(op)
}

/// The unique ω with c(ω) = s1 ⊗ s̄2, solved exactly over all blades, or
/// over even blades when n ≡ 3 mod 4.
pub fn spinor_square(module: &SpinorModule, s1: &[Rational], s2: &[Rational]) -> Result<Multivector> {
    let target = rank_one_operator(module, s1, s2)?;
    let n = module.n();
    if n > 10 {
        return input("spinor squares are limited to n ≤ 10");
    }
    let even_only = n % 4 == 3;
    let blades: Vec<Blade> = (0..1u32 << n).map(Blade).filter(|b| !even_only || b.grade() % 2 == 0).collect();
    let cols: Vec<Vec<Rational>> = blades.iter().map(|b| module.blade_operator(*b).flatten()).collect();
    let rows = module.real_dim * module.real_dim;
    let a: Vec<Vec<Rational>> = (0..rows).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
    let Some((omega, nullity)) = linalg::solve(&a, &target.flatten()) else {
        return Err(Error::Structural("rank-one operator is not in the image of the Clifford algebra".into()));
    };
    if nullity != 0 {
        return Err(Error::Structural("blade operators are linearly dependent; the solution is not unique".into()));
    }
    let w = Multivector::from_terms(module.signature, blades.into_iter().zip(omega));
    if module.multivector_operator(&w)? != target {
        return Err(Error::Structural("nonzero residual".into()));
    }
    Ok(w)
}
