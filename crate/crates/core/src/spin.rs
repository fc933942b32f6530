//! Spin(n) as even unit multivectors and its action on spinor modules.

use crate::clifford::{Multivector, Signature};
use crate::error::{input, Error, Result};
use crate::linalg::{self, RMatrix};
use crate::rational::Rational;
use crate::recipe::SpinorModule;

/// An even multivector g with g·rev(g) = 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinElement {
    value: Multivector,
}

impl SpinElement {
    pub fn new(value: Multivector) -> Result<Self> {
        if !value.is_even() {
            return input("spin elements are even");
        }
        let norm = value.gp(&value.reversion())?;
        if norm != Multivector::one(value.signature()) {
            return input("spin elements satisfy g·rev(g) = 1");
        }
        Ok(SpinElement { value })
    }

    pub fn one(sig: Signature) -> Self {
        SpinElement { value: Multivector::one(sig) }
    }

    pub fn value(&self) -> &Multivector {
        &self.value
    }

    pub fn signature(&self) -> Signature {
        self.value.signature()
    }

    pub fn neg(&self) -> Self {
        SpinElement { value: self.value.neg() }
    }

    pub fn inverse(&self) -> Self {
        SpinElement { value: self.value.reversion() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Ok(SpinElement { value: self.value.gp(&other.value)? })
    }
}

/// v − 2 g(v,w)/g(w,w) · w.
pub fn reflection(w: &[Rational], v: &[Rational], sig: Signature) -> Result<Vec<Rational>> {
    if w.len() != sig.n() || v.len() != sig.n() {
        return input(format!("vectors must have length {}", sig.n()));
    }
    let ww = sig.inner(w, w);
    if ww.is_zero() {
        return input("cannot reflect through a null vector");
    }
    let k = Rational::from_int(2) * sig.inner(v, w) / ww;
    Ok(v.iter().zip(w).map(|(a, b)| a - &(&k * b)).collect())
}

/// g·v·φ(g)⁻¹ for a vector v.
pub fn twisted_adjoint(g: &Multivector, v: &[Rational]) -> Result<Vec<Rational>> {
    let sig = g.signature();
    let inv = g.grade_involution().inverse().map_err(|_| Error::Input("g is not invertible".into()))?;
    let out = g.gp(&Multivector::vector(sig, v)?)?.gp(&inv)?;
    out.as_vector().ok_or_else(|| Error::Input("g does not preserve the space of vectors".into()))
}

/// The matrix of v ↦ g·v·φ(g)⁻¹, column i the image of e_i.
pub fn adjoint_matrix(g: &Multivector) -> Result<RMatrix> {
    let sig = g.signature();
    let n = sig.n();
    let inv = g.grade_involution().inverse().map_err(|_| Error::Input("g is not invertible".into()))?;
    let mut m = RMatrix::zeros(n, n);
    for i in 0..n {
        let out = g.gp(&Multivector::generator(sig, i))?.gp(&inv)?;
        let col = out.as_vector().ok_or_else(|| Error::Input("g does not preserve the space of vectors".into()))?;
        for (r, c) in col.into_iter().enumerate() {
            m.set(r, i, c);
        }
    }
    Ok(m)
}

fn check_rotation(r: &RMatrix) -> Result<usize> {
    let n = r.rows();
    if !r.is_square() || n == 0 {
        return input("rotation must be a non-empty square matrix");
    }
    if !r.transpose().matmul(r).is_identity() {
        return input("matrix is not orthogonal");
    }
    if !linalg::det(&r.to_dense()).is_one() {
        return input("matrix has determinant −1");
    }
    Ok(n)
}

/// Lift an exact rotation of Euclidean ℝⁿ to Spin(n).
///
/// Householder reduction writes R as a product of an even number of
/// reflections; the product of their normals is normalized exactly, which
/// fails with an input error when the lift is irrational.
pub fn spin_lift(r: &RMatrix) -> Result<SpinElement> {
    let n = check_rotation(r)?;
    let sig = Signature::new(0, n)?;
    let mut a = r.clone();
    let mut normals: Vec<Vec<Rational>> = Vec::new();
    for i in 0..n {
        let x = a.column(i);
        let w: Vec<Rational> =
            x.iter().enumerate().map(|(k, c)| if k == i { c - &Rational::one() } else { c.clone() }).collect();
        if w.iter().all(Rational::is_zero) {
            continue;
        }
        let h = householder(&w);
        a = h.matmul(&a);
        normals.push(w);
    }
    debug_assert!(a.is_identity());
    if normals.len() % 2 == 1 {
        return Err(Error::Structural("odd number of reflections for a rotation".into()));
    }
    let mut g = Multivector::one(sig);
    let mut norm = Rational::one();
    for w in &normals {
        g = g.gp(&Multivector::vector(sig, w)?)?;
        norm *= &sig.inner(w, w);
    }
    let Some(root) = norm.sqrt_exact() else {
        return input("rotation has no spin lift with rational coefficients");
    };
    let g = g.scale(&root.recip());
    if adjoint_matrix(&g)? != *r {
        return Err(Error::Structural("lift does not cover the rotation".into()));
    }
    SpinElement::new(g)
}

fn householder(w: &[Rational]) -> RMatrix {
    let n = w.len();
    let ww: Rational = w.iter().map(Rational::square).sum();
    let k = Rational::from_int(2) / ww;
    &RMatrix::identity(n) - &RMatrix::outer(w, w).scale(&k)
}

/// Rotation by θ in the (e_i, e_j) plane with cos θ = c, sin θ = s.
pub fn givens(n: usize, i: usize, j: usize, c: Rational, s: Rational) -> Result<RMatrix> {
    if i >= n || j >= n || i == j {
        return input("plane indices must be distinct and below n");
    }
    if &c.square() + &s.square() != Rational::one() {
        return input("cos² + sin² must equal 1");
    }
    let mut m = RMatrix::identity(n);
    m.set(i, i, c.clone());
    m.set(j, j, c);
    m.set(j, i, s.clone());
    m.set(i, j, -s);
    Ok(m)
}

/// Givens rotation whose half angle has cos = a/h, sin = b/h with h² = a² + b².
pub fn half_angle_rotation(n: usize, i: usize, j: usize, a: i64, b: i64) -> Result<RMatrix> {
    let h2 = Rational::from_int(a * a + b * b);
    if h2.is_zero() {
        return input("a and b cannot both vanish");
    }
    let c = Rational::from_int(a * a - b * b) / &h2;
    let s = Rational::from_int(2 * a * b) / h2;
    givens(n, i, j, c, s)
}

/// Ad̃(g) = Ad̃(−g), and on a module π(g) ≠ π(−g).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCoverReport {
    pub same_rotation: bool,
    pub distinct_actions: Option<bool>,
}

impl DoubleCoverReport {
    pub fn passed(&self) -> bool {
        self.same_rotation && self.distinct_actions.unwrap_or(true)
    }
}

pub fn double_cover_check(g: &SpinElement, module: Option<&SpinorModule>) -> Result<DoubleCoverReport> {
    let same_rotation = adjoint_matrix(g.value())? == adjoint_matrix(g.neg().value())?;
    let distinct_actions = match module {
        Some(m) => Some(spin_action(m, g)? != spin_action(m, &g.neg())?),
        None => None,
    };
    Ok(DoubleCoverReport { same_rotation, distinct_actions })
}

/// π(g) = Σ g_A c(e_A).
pub fn spin_action(module: &SpinorModule, g: &SpinElement) -> Result<RMatrix> {
    if module.signature != g.signature() {
        return input("spin element and module have different signatures");
    }
    module.multivector_operator(g.value())
}

/// An isometry of spinor spaces covering an oriented orthonormal frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinCoordinateSystem {
    pub iso: RMatrix,
    pub covered_frame: RMatrix,
}

impl SpinCoordinateSystem {
    /// π(g) composed with the identity base isomorphism; covers Ad̃(g).
    pub fn from_spin(module: &SpinorModule, g: &SpinElement) -> Result<Self> {
        Ok(SpinCoordinateSystem { iso: spin_action(module, g)?, covered_frame: adjoint_matrix(g.value())? })
    }

    /// Φ·c(e_i) = c(φ e_i)·Φ, Φ commutes with the even commutant, and Φ is a
    /// spin-metric isometry.
    pub fn verify(&self, module: &SpinorModule) -> Result<bool> {
        let n = module.n();
        if self.covered_frame.rows() != n || self.iso.rows() != module.real_dim {
            return input("coordinate system does not fit the module");
        }
        for i in 0..n {
            let mut image = RMatrix::zeros(module.real_dim, module.real_dim);
            for (j, gen) in module.generators.iter().enumerate() {
                let c = self.covered_frame.get(j, i);
                if !c.is_zero() {
                    image = &image + &gen.scale(&c);
                }
            }
            if self.iso.matmul(&module.generators[i]) != image.matmul(&self.iso) {
                return Ok(false);
            }
        }
        let k0 = crate::recipe::intertwiners(module, true)?;
        if !k0.basis.iter().all(|b| b.commutes_with(&self.iso)) {
            return Ok(false);
        }
        let g = &module.spin_metric;
        Ok(self.iso.transpose().matmul(g).matmul(&self.iso) == *g)
    }
}
