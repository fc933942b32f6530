//! Matrices over ℝ, ℂ, ℍ with side-tagged linearity, realification,
//! graded tensor products and commutant computation.
//!
//! Layout convention for realified K-vectors: real index = component·dim(K) + μ.

use std::fmt;

use crate::clifford::{volume_square, Signature};
use crate::division::{self, left_mul_matrix, right_mul_matrix, Algebra, KElement};
use crate::error::{input, Error, Result};
use crate::linalg::{self, RMatrix};
use crate::rational::Rational;
use crate::recipe::SpinorModule;

/// Which scalar action a K-matrix is linear for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// Acts on column vectors, v ↦ A v; commutes with right scalar multiplication.
    RightModuleMap,
    /// Acts on row vectors, n ↦ n S; commutes with left scalar multiplication.
    LeftModuleMap,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KMatrix {
    field: Algebra,
    rows: usize,
    cols: usize,
    entries: Vec<KElement>,
    side: Side,
}

impl KMatrix {
    pub fn new(field: Algebra, rows: usize, cols: usize, entries: Vec<KElement>, side: Side) -> Result<Self> {
        if field == Algebra::O {
            return input("matrices over the octonions are not supported");
        }
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return input(format!("{}x{} matrix needs {} entries, got {}", rows, cols, rows * cols, entries.len()));
        }
        if let Some(e) = entries.iter().find(|e| e.algebra() != field) {
            return input(format!("entry over {} in a matrix over {}", e.algebra(), field));
        }
        Ok(KMatrix { field, rows, cols, entries, side })
    }

    pub fn from_fn(
        field: Algebra,
        rows: usize,
        cols: usize,
        side: Side,
        f: impl Fn(usize, usize) -> KElement,
    ) -> Result<Self> {
        let entries = (0..rows).flat_map(|i| (0..cols).map(move |j| (i, j))).map(|(i, j)| f(i, j)).collect();
        Self::new(field, rows, cols, entries, side)
    }

    pub fn identity(field: Algebra, n: usize, side: Side) -> Self {
        Self::from_fn(field, n, n, side, |i, j| if i == j { KElement::one(field) } else { KElement::zero(field) })
            .expect("identity is well formed")
    }

    pub fn field(&self) -> Algebra {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn get(&self, i: usize, j: usize) -> &KElement {
        &self.entries[i * self.cols + j]
    }

    /// Matrix product over K; both factors must share field and side.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.field != other.field || self.side != other.side {
            return input("product of matrices with different fields or sides");
        }
        if self.cols != other.rows {
            return input("dimension mismatch in K-matrix product");
        }
        Self::from_fn(self.field, self.rows, other.cols, self.side, |i, j| {
            let mut acc = KElement::zero(self.field);
            for k in 0..self.cols {
                let p = division::mul(self.get(i, k), other.get(k, j)).expect("same field");
                acc = acc.add(&p).expect("same field");
            }
            acc
        })
    }

    /// Entrywise conjugate of the transpose with the side flipped: the
    /// transport of a map through conjugation of the module basis.
    pub fn conjugate_transport(&self) -> Self {
        let side = match self.side {
            Side::RightModuleMap => Side::LeftModuleMap,
            Side::LeftModuleMap => Side::RightModuleMap,
        };
        Self::from_fn(self.field, self.cols, self.rows, side, |i, j| division::conj(self.get(j, i)))
            .expect("well formed")
    }

    pub fn scale_real(&self, s: &Rational) -> Self {
        KMatrix { entries: self.entries.iter().map(|e| e.scale(s)).collect(), ..self.clone() }
    }
}

/// Real form of a K-matrix.
///
/// Right-module maps realify with left-multiplication blocks and the map is
/// multiplicative. Left-module maps act on row vectors and realify with
/// transposed right-multiplication blocks, so products reverse order.
pub fn realify(m: &KMatrix) -> RMatrix {
    let d = m.field.dim();
    match m.side {
        Side::RightModuleMap => {
            let grid: Vec<Vec<Option<RMatrix>>> = (0..m.rows)
                .map(|a| {
                    (0..m.cols)
                        .map(|b| {
                            let e = m.get(a, b);
                            (!e.is_zero()).then(|| left_mul_matrix(e))
                        })
                        .collect()
                })
                .collect();
            RMatrix::from_blocks(&grid, d, d)
        }
        Side::LeftModuleMap => {
            let grid: Vec<Vec<Option<RMatrix>>> = (0..m.cols)
                .map(|b| {
                    (0..m.rows)
                        .map(|a| {
                            let e = m.get(a, b);
                            (!e.is_zero()).then(|| right_mul_matrix(e))
                        })
                        .collect()
                })
                .collect();
            RMatrix::from_blocks(&grid, d, d)
        }
    }
}

/// A realified module with an optional ℤ₂-grading and a right action of its field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSpace {
    pub field: Algebra,
    pub real_dim: usize,
    /// Degree (±1) of each real basis vector.
    pub grading: Option<Vec<i8>>,
    /// Right multiplication by the imaginary units of `field`, in basis order.
    pub right_action: Vec<RMatrix>,
}

impl GradedSpace {
    pub fn new(field: Algebra, real_dim: usize, grading: Option<Vec<i8>>, right_action: Vec<RMatrix>) -> Result<Self> {
        if !real_dim.is_multiple_of(field.dim()) {
            return input(format!("real dimension {} is not a multiple of dim {}", real_dim, field));
        }
        if let Some(g) = &grading {
            if g.len() != real_dim || g.iter().any(|&x| x != 1 && x != -1) {
                return input("grading must list ±1 for every real basis vector");
            }
        }
        Ok(GradedSpace { field, real_dim, grading, right_action })
    }

    /// Standard K^m with the componentwise right K action.
    pub fn standard(field: Algebra, m: usize, grading: Option<Vec<i8>>) -> Result<Self> {
        let d = field.dim();
        let units = (1..d).map(|u| RMatrix::identity(m).kron(&right_mul_matrix(&KElement::basis(field, u)))).collect();
        let real = grading.map(|g| g.iter().flat_map(|&x| std::iter::repeat_n(x, d)).collect());
        Self::new(field, m * d, real, units)
    }

    /// Dimension over the field.
    pub fn dim(&self) -> usize {
        self.real_dim / self.field.dim()
    }

    /// (#even, #odd) real basis vectors.
    pub fn counts(&self) -> Option<(usize, usize)> {
        self.grading.as_ref().map(|g| {
            let p = g.iter().filter(|&&x| x > 0).count();
            (p, g.len() - p)
        })
    }

    pub fn grading_operator(&self) -> Option<RMatrix> {
        self.grading.as_ref().map(|g| RMatrix::diag_signs(g))
    }

    /// Real matrix of right multiplication by `q`, an element of a subfield.
    pub fn right_mul(&self, q: &KElement) -> Result<RMatrix> {
        let k = q.algebra().dim();
        if k > self.field.dim() || self.right_action.len() + 1 < k {
            return input(format!("{} does not act on a module over {}", q.algebra(), self.field));
        }
        let mut m = RMatrix::scalar(self.real_dim, q.re().clone());
        for (u, c) in q.coeffs().iter().enumerate().skip(1) {
            if !c.is_zero() {
                m = &m + &self.right_action[u - 1].scale(c);
            }
        }
        Ok(m)
    }
}

/// Tensor product space M ⊗_K N realified as M^b, real index l·dim(M) + μ.
///
/// N is read as a free left K-module with b = dim_ℝ N / dim K basis vectors
/// laid out in K-blocks. When `graded`, degree(m⊗f_l) = deg m · deg f_l.
pub fn tensor_module(m: &GradedSpace, n: &GradedSpace, over: Algebra, graded: bool) -> Result<GradedSpace> {
    check_tensor_fields(m, n, over)?;
    let b = n.real_dim / over.dim();
    let real_dim = m.real_dim * b;
    let grading = if graded {
        let (Some(gm), Some(gn)) = (&m.grading, &n.grading) else {
            return input("graded tensor product needs both factors graded");
        };
        let gn = block_grading(gn, over.dim())?;
        Some(gn.iter().flat_map(|&x| gm.iter().map(move |&y| x * y)).collect())
    } else {
        None
    };
    GradedSpace::new(Algebra::R, real_dim, grading, Vec::new())
}

fn check_tensor_fields(m: &GradedSpace, n: &GradedSpace, over: Algebra) -> Result<()> {
    if over == Algebra::O {
        return input("no tensor products over the octonions");
    }
    if m.field.dim() < over.dim() || m.right_action.len() + 1 < over.dim() {
        return input(format!("left factor carries no right {} action", over));
    }
    if n.field.dim() < over.dim() || !n.real_dim.is_multiple_of(over.dim()) {
        return input(format!("right factor is not a {} module", over));
    }
    Ok(())
}

fn block_grading(g: &[i8], d: usize) -> Result<Vec<i8>> {
    g.chunks(d)
        .map(|c| if c.iter().all(|&x| x == c[0]) { Ok(c[0]) } else { input("grading is not aligned with the K-basis") })
        .collect()
}

/// An operator with an optional declared ℤ₂-degree (0 even, 1 odd).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedOp<T> {
    pub op: T,
    pub degree: Option<u8>,
}

impl<T> GradedOp<T> {
    pub fn even(op: T) -> Self {
        GradedOp { op, degree: Some(0) }
    }

    pub fn odd(op: T) -> Self {
        GradedOp { op, degree: Some(1) }
    }

    pub fn undeclared(op: T) -> Self {
        GradedOp { op, degree: None }
    }
}

/// Split an operator into even and odd parts for a basis-aligned grading.
pub fn split_degrees(op: &RMatrix, grading: &[i8]) -> (RMatrix, RMatrix) {
    let mut even = RMatrix::zeros(op.rows(), op.cols());
    let mut odd = RMatrix::zeros(op.rows(), op.cols());
    for (i, j, v) in op.entries() {
        if grading[i] == grading[j] {
            even.set(i, j, v.clone());
        } else {
            odd.set(i, j, v.clone());
        }
    }
    (even, odd)
}

fn split_kdegrees(s: &KMatrix, grading: &[i8]) -> (KMatrix, KMatrix) {
    let f = s.field();
    let keep = |want_even: bool| {
        KMatrix::from_fn(f, s.rows(), s.cols(), s.side(), |i, j| {
            if (grading[i] == grading[j]) == want_even {
                s.get(i, j).clone()
            } else {
                KElement::zero(f)
            }
        })
        .expect("well formed")
    };
    (keep(true), keep(false))
}

/// Degree of a realified operator against a grading, if homogeneous.
pub fn degree_of(op: &RMatrix, grading: &[i8]) -> Option<u8> {
    let (e, o) = split_degrees(op, grading);
    match (e.is_zero(), o.is_zero()) {
        (_, true) => Some(0),
        (true, false) => Some(1),
        _ => None,
    }
}

/// T ⊗̂_K S with the Koszul rule (T⊗̂S)(m⊗n) = (−1)^{deg S·deg m} Tm ⊗ Sn.
///
/// T is a realified right-K-linear operator on M; S is a K-matrix on the
/// basis of N. Block (l', l) of the result is R^M_{S[l][l']} ∘ T ∘ D_M^{deg S}
/// in row convention for S.
pub fn graded_tensor_operator(
    t: &GradedOp<RMatrix>,
    s: &GradedOp<KMatrix>,
    m: &GradedSpace,
    n: &GradedSpace,
    over: Algebra,
) -> Result<RMatrix> {
    check_tensor_fields(m, n, over)?;
    let b = n.real_dim / over.dim();
    if s.op.field() != over || s.op.rows() != b || s.op.cols() != b {
        return input(format!("S must be a {}x{} matrix over {}", b, b, over));
    }
    if t.op.rows() != m.real_dim || t.op.cols() != m.real_dim {
        return input("T does not act on M");
    }
    if m.grading.is_some() && (t.degree.is_none() || s.degree.is_none()) {
        return input("undeclared degree on a graded space");
    }
    let row_s = match (s.op.side(), over) {
        (Side::LeftModuleMap, _) => s.op.clone(),
        (Side::RightModuleMap, Algebra::H) => {
            return input("a right-module map cannot act on the left module N over H");
        }
        (Side::RightModuleMap, _) => {
            let src = &s.op;
            KMatrix::from_fn(over, b, b, Side::LeftModuleMap, |i, j| src.get(j, i).clone())?
        }
    };
    let td = if s.degree == Some(1) {
        let Some(d) = m.grading_operator() else {
            return input("odd S needs a grading on M");
        };
        t.op.matmul(&d)
    } else {
        t.op.clone()
    };
    let dm = m.real_dim;
    let mut grid: Vec<Vec<Option<RMatrix>>> = vec![vec![None; b]; b];
    for (l, row) in grid.iter_mut().enumerate().take(b) {
        for (lin, slot) in row.iter_mut().enumerate() {
            let e = row_s.get(lin, l);
            if e.is_zero() {
                continue;
            }
            *slot = Some(m.right_mul(e)?.matmul(&td));
        }
    }
    Ok(RMatrix::from_blocks(&grid, dm, dm))
}

/// Graded tensor product for operators of possibly mixed degree: both sides
/// are split into homogeneous parts and the results summed.
pub fn graded_tensor_mixed(
    t: &RMatrix,
    s: &KMatrix,
    m: &GradedSpace,
    n: &GradedSpace,
    over: Algebra,
) -> Result<RMatrix> {
    let (Some(gm), Some(gn)) = (&m.grading, &n.grading) else {
        return input("mixed-degree tensor needs graded factors");
    };
    let gn = block_grading(gn, over.dim())?;
    let (te, to) = split_degrees(t, gm);
    let (se, so) = split_kdegrees(s, &gn);
    let mut total = RMatrix::zeros(m.real_dim * gn.len(), m.real_dim * gn.len());
    for (tp, td) in [(te, 0u8), (to, 1u8)] {
        for (sp, sd) in [(&se, 0u8), (&so, 1u8)] {
            let part = graded_tensor_operator(
                &GradedOp { op: tp.clone(), degree: Some(td) },
                &GradedOp { op: sp.clone(), degree: Some(sd) },
                m,
                n,
                over,
            )?;
            total = &total + &part;
        }
    }
    Ok(total)
}

/// Intertwiner algebra classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraTag {
    R,
    C,
    H,
    Matrix(usize),
}

impl fmt::Display for AlgebraTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraTag::R => write!(f, "R"),
            AlgebraTag::C => write!(f, "C"),
            AlgebraTag::H => write!(f, "H"),
            AlgebraTag::Matrix(d) => write!(f, "M({d})"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Commutant {
    pub real_dimension: usize,
    pub division_algebra: AlgebraTag,
    pub basis: Vec<RMatrix>,
}

/// All X with `to[i]·X = X·from[i]` for every i.
pub fn intertwiner_space(from: &[RMatrix], to: &[RMatrix]) -> Result<Vec<RMatrix>> {
    if from.is_empty() || from.len() != to.len() {
        return input("need matching, non-empty generator lists");
    }
    let df = from[0].rows();
    let dt = to[0].rows();
    if from.iter().any(|g| g.rows() != df || g.cols() != df) || to.iter().any(|g| g.rows() != dt || g.cols() != dt) {
        return input("generators must be square and of one size");
    }
    let var = |p: usize, q: usize| p * df + q;
    let from_t: Vec<RMatrix> = from.iter().map(RMatrix::transpose).collect();
    let eqs = to.iter().zip(&from_t).flat_map(|(a, bt)| {
        (0..dt).flat_map(move |p| {
            (0..df).map(move |q| {
                let mut eq: Vec<(usize, Rational)> = Vec::new();
                for (k, v) in a.row(p) {
                    eq.push((var(*k, q), v.clone()));
                }
                for (k, v) in bt.row(q) {
                    eq.push((var(p, *k), -v));
                }
                eq
            })
        })
    });
    let sol = linalg::solve_homogeneous(dt * df, eqs);
    Ok(sol.iter().map(|v| RMatrix::from_flat(dt, df, v)).collect())
}

/// Commutant of a set of real d×d generators, with its classification.
pub fn commutant(generators: &[RMatrix]) -> Result<Commutant> {
    let basis = intertwiner_space(generators, generators)?;
    let tag = classify_algebra(&basis);
    Ok(Commutant { real_dimension: basis.len(), division_algebra: tag, basis })
}

/// R for dimension 1; C or H for dimensions 2 and 4 when the trace form on
/// the trace-free part is negative definite; otherwise a matrix algebra.
pub fn classify_algebra(basis: &[RMatrix]) -> AlgebraTag {
    match basis.len() {
        1 => AlgebraTag::R,
        2 if is_division_algebra(basis) => AlgebraTag::C,
        4 if is_division_algebra(basis) => AlgebraTag::H,
        d => AlgebraTag::Matrix(d),
    }
}

/// Name of a matrix algebra spanned by `basis`, such as "H", "M2(R)" or "M2(C)".
///
/// Simple algebras are told apart by their center and by the inertia of the
/// trace form, which is (m(m+1)/2, m(m−1)/2) for M_m(R) and has more negative
/// squares than positive for M_k(H).
pub fn algebra_name(basis: &[RMatrix]) -> String {
    match classify_algebra(basis) {
        AlgebraTag::Matrix(_) => {}
        tag => return tag.to_string(),
    }
    let k = basis.len();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for b in basis {
        let comms: Vec<Vec<(usize, Rational)>> = basis
            .iter()
            .map(|a| {
                let c = &a.matmul(b) - &b.matmul(a);
                let d = c.cols();
                c.entries().map(|(i, j, v)| (i * d + j, v.clone())).collect()
            })
            .collect();
        let mut keys: Vec<usize> = comms.iter().flatten().map(|(e, _)| *e).collect();
        keys.sort_unstable();
        keys.dedup();
        for e in keys {
            let mut row = vec![Rational::zero(); k];
            for (a, c) in comms.iter().enumerate() {
                if let Some((_, v)) = c.iter().find(|(x, _)| *x == e) {
                    row[a] = v.clone();
                }
            }
            rows.push(row);
        }
    }
    let center = linalg::nullspace(&rows, k);
    let combo = |x: &[Rational]| {
        let d = basis[0].rows();
        basis.iter().zip(x).fold(RMatrix::zeros(d, d), |acc, (b, c)| &acc + &b.scale(c))
    };
    let square_root = |x: usize| (1..=x).find(|m| m * m == x);
    match center.len() {
        1 => {
            let gram: Vec<Vec<Rational>> =
                basis.iter().map(|a| basis.iter().map(|b| a.matmul(b).trace()).collect()).collect();
            let (pos, neg, zero) = linalg::inertia(&gram);
            if zero > 0 {
                return format!("non-semisimple({k})");
            }
            match (pos > neg, square_root(k), square_root(k / 4)) {
                (true, Some(m), _) => format!("M{m}(R)"),
                (false, _, Some(m)) if k.is_multiple_of(4) => format!("M{m}(H)"),
                _ => format!("M({k})"),
            }
        }
        2 => {
            let z = center.iter().map(|x| combo(x)).find(|z| {
                !z.is_zero() && {
                    let d = z.rows();
                    let t = &z.trace() / &Rational::from_int(d as i64);
                    !(z - &RMatrix::scalar(d, t)).is_zero()
                }
            });
            let Some(z) = z else { return format!("M({k})") };
            let d = z.rows();
            let t = &z.trace() / &Rational::from_int(d as i64);
            let y = &z - &RMatrix::scalar(d, t);
            let sq = y.matmul(&y);
            let complex = sq.get(0, 0).is_negative() && sq == RMatrix::scalar(d, sq.get(0, 0));
            match (complex, square_root(k / 2)) {
                (true, Some(m)) if k.is_multiple_of(2) => format!("M{m}(C)"),
                _ => format!("sum of simple factors({k})"),
            }
        }
        _ => format!("sum of simple factors({k})"),
    }
}

/// Exact test that a unital algebra of matrices is ℂ or ℍ: its trace-free
/// part must have dimension one less and tr(XY) must be negative definite there.
pub fn is_division_algebra(basis: &[RMatrix]) -> bool {
    let Some(first) = basis.first() else {
        return false;
    };
    let d = first.rows();
    let dr = Rational::from_int(d as i64);
    let traceless: Vec<Vec<Rational>> = basis
        .iter()
        .map(|b| {
            let shift = RMatrix::scalar(d, &b.trace() / &dr);
            (b - &shift).flatten()
        })
        .collect();
    let mut reduced = traceless.clone();
    let ncols = d * d;
    let piv = linalg::rref(&mut reduced, ncols);
    if piv.len() + 1 != basis.len() {
        return false;
    }
    let xs: Vec<RMatrix> = reduced[..piv.len()]
        .iter()
        .map(|row| {
            let flat: Vec<(usize, Rational)> =
                row.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, v)| (i, v.clone())).collect();
            RMatrix::from_flat(d, d, &flat)
        })
        .collect();
    let k = xs.len();
    let gram: Vec<Vec<Rational>> = (0..k).map(|a| (0..k).map(|b| -xs[a].matmul(&xs[b]).trace()).collect()).collect();
    (1..=k).all(|m| {
        let minor: Vec<Vec<Rational>> = gram[..m].iter().map(|r| r[..m].to_vec()).collect();
        linalg::det(&minor).is_positive()
    })
}

/// Outcome of checking G_iG_j + G_jG_i = −2g_ij·I.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CliffordReport {
    pub checked_pairs: usize,
    /// 1-based generator pairs (i ≤ j) that fail.
    pub violations: Vec<(usize, usize)>,
    pub shape_error: Option<String>,
}

impl CliffordReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.shape_error.is_none()
    }
}

pub fn verify_clifford_condition(generators: &[RMatrix], sig: Signature) -> CliffordReport {
    let mut report = CliffordReport::default();
    if generators.len() != sig.n() {
        report.shape_error = Some(format!("expected {} generators, got {}", sig.n(), generators.len()));
        return report;
    }
    let d = generators[0].rows();
    if generators.iter().any(|g| g.rows() != d || g.cols() != d) {
        report.shape_error = Some("generators must be square and of one size".into());
        return report;
    }
    for i in 0..generators.len() {
        for j in i..generators.len() {
            let ac = generators[i].anticommutator(&generators[j]);
            let want = if i == j {
                RMatrix::scalar(d, Rational::from_int(2 * sig.square(i) as i64))
            } else {
                RMatrix::zeros(d, d)
            };
            report.checked_pairs += 1;
            if ac != want {
                report.violations.push((i + 1, j + 1));
            }
        }
    }
    report
}

/// M± = (1 ± c(ν))·M for a module whose volume element squares to one.
pub fn grading_from_volume(module: &SpinorModule) -> Result<GradedSpace> {
    let sig = module.signature;
    if !sig.n().is_multiple_of(2) || volume_square(sig) != 1 {
        return Err(Error::Precondition(format!("volume element of {} does not give a grading", sig)));
    }
    let v = module.volume_operator();
    let d = module.real_dim;
    let id = RMatrix::identity(d);
    let half = Rational::new(1, 2);
    let p_plus = (&id + &v).scale(&half);
    let p_minus = (&id - &v).scale(&half);
    let rp = linalg::rank(&p_plus.to_dense());
    let rm = linalg::rank(&p_minus.to_dense());
    if rp + rm != d {
        return Err(Error::Structural("volume projector ranks do not add up".into()));
    }
    let Some(g) = v.as_sign_diagonal() else {
        return Err(Error::Structural("volume operator is not diagonal in the module basis".into()));
    };
    GradedSpace::new(module.field, d, Some(g), module.right_units.clone())
}
