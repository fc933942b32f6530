//! Frames, parallel transport and spinor transport on surfaces in ℝ³.

use std::f64::consts::PI;

use nalgebra::{Matrix3, Quaternion, Vector3};

use crate::division::{conj, mul, norm_sq, Algebra, KElement};
use crate::error::{input, Error, Result};
use crate::lift::{quaternion_lift_path_lenient, ORTHO_TOL};

pub type V3 = Vector3<f64>;

const FD_STEP: f64 = 1e-6;
const DEGENERATE: f64 = 1e-12;
/// Largest re-orthonormalization correction a single RK4 step may need before it is flagged.
pub const STEP_TOL: f64 = 1e-8;

/// An immersed chart (u, v) ↦ X(u, v) ∈ ℝ³.
pub trait ParametricSurface {
    fn point(&self, u: f64, v: f64) -> V3;

    /// (X_u, X_v); central differences unless overridden.
    fn partials(&self, u: f64, v: f64) -> (V3, V3) {
        let h = FD_STEP;
        let xu = (self.point(u + h, v) - self.point(u - h, v)) / (2.0 * h);
        let xv = (self.point(u, v + h) - self.point(u, v - h)) / (2.0 * h);
        (xu, xv)
    }

    /// (ν_u, ν_v) when known in closed form.
    fn normal_partials(&self, _u: f64, _v: f64) -> Option<(V3, V3)> {
        None
    }

    /// X_u × X_v normalized, or `None` at a non-immersed point.
    fn normal(&self, u: f64, v: f64) -> Option<V3> {
        let (xu, xv) = self.partials(u, v);
        let n = xu.cross(&xv);
        let len = n.norm();
        (len > DEGENERATE).then(|| n / len)
    }
}

/// The round sphere of radius `radius`, X = r(cos v sin u, sin v, cos v cos u).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sphere {
    pub radius: f64,
}

impl Default for Sphere {
    fn default() -> Self {
        Sphere { radius: 1.0 }
    }
}

impl ParametricSurface for Sphere {
    fn point(&self, u: f64, v: f64) -> V3 {
        let (su, cu) = u.sin_cos();
        let (sv, cv) = v.sin_cos();
        self.radius * V3::new(cv * su, sv, cv * cu)
    }

    fn partials(&self, u: f64, v: f64) -> (V3, V3) {
        let (su, cu) = u.sin_cos();
        let (sv, cv) = v.sin_cos();
        let r = self.radius;
        (r * V3::new(cv * cu, 0.0, -cv * su), r * V3::new(-sv * su, cv, -sv * cu))
    }

    fn normal_partials(&self, u: f64, v: f64) -> Option<(V3, V3)> {
        let (xu, xv) = self.partials(u, v);
        Some((xu / self.radius, xv / self.radius))
    }
}

/// The plane z = 0 with X = (u, v, 0).
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Plane;

impl ParametricSurface for Plane {
    fn point(&self, u: f64, v: f64) -> V3 {
        V3::new(u, v, 0.0)
    }

    fn partials(&self, _u: f64, _v: f64) -> (V3, V3) {
        (V3::x(), V3::y())
    }

    fn normal_partials(&self, _u: f64, _v: f64) -> Option<(V3, V3)> {
        Some((V3::zeros(), V3::zeros()))
    }
}

/// A curve t ↦ (u(t), v(t)) in chart coordinates, t ∈ [0, 1].
pub trait Curve {
    fn eval(&self, t: f64) -> (f64, f64);

    fn derivative(&self, t: f64) -> (f64, f64) {
        let h = FD_STEP;
        let (a, b) = self.eval(t + h);
        let (c, d) = self.eval(t - h);
        ((a - c) / (2.0 * h), (b - d) / (2.0 * h))
    }
}

/// The straight segment from `start` to `end`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LineCurve {
    pub start: (f64, f64),
    pub end: (f64, f64),
}

impl LineCurve {
    /// u from 0 to 2π at v = 0: on the unit sphere, the great circle through
    /// the north pole in the xz-plane.
    pub fn great_circle() -> Self {
        LineCurve { start: (0.0, 0.0), end: (2.0 * PI, 0.0) }
    }

    /// One full turn in u at fixed latitude v.
    pub fn latitude(v: f64) -> Self {
        LineCurve { start: (0.0, v), end: (2.0 * PI, v) }
    }
}

impl Curve for LineCurve {
    fn eval(&self, t: f64) -> (f64, f64) {
        (self.start.0 + t * (self.end.0 - self.start.0), self.start.1 + t * (self.end.1 - self.start.1))
    }

    fn derivative(&self, _t: f64) -> (f64, f64) {
        (self.end.0 - self.start.0, self.end.1 - self.start.1)
    }
}

/// An oriented orthonormal frame (e1, e2, ν) at a surface point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Frame {
    pub e1: V3,
    pub e2: V3,
    pub nu: V3,
}

impl Frame {
    /// R with R·[i j k] = [e1 e2 ν].
    pub fn rotation(&self) -> Matrix3<f64> {
        Matrix3::from_columns(&[self.e1, self.e2, self.nu])
    }

    /// Largest deviation of the Gram matrix from I.
    pub fn orthonormality_defect(&self) -> f64 {
        let r = self.rotation();
        (r.transpose() * r - Matrix3::identity()).abs().max()
    }
}

/// e1 ∝ X_u, e2 the Gram–Schmidt of X_v against e1, ν = e1 × e2.
pub fn surface_frame(surface: &dyn ParametricSurface, u: f64, v: f64) -> Result<Frame> {
    let (xu, xv) = surface.partials(u, v);
    if xu.cross(&xv).norm() <= DEGENERATE {
        return input(format!("chart is not immersed at ({u}, {v})"));
    }
    let e1 = xu.normalize();
    let e2 = (xv - e1 * e1.dot(&xv)).normalize();
    Ok(Frame { e1, e2, nu: e1.cross(&e2) })
}

fn normal_and_rate(surface: &dyn ParametricSurface, curve: &dyn Curve, t: f64) -> Result<(V3, V3)> {
    let (u, v) = curve.eval(t);
    let nu = surface.normal(u, v).ok_or_else(|| Error::Numeric { t, msg: "chart is not immersed".into() })?;
    let rate = match surface.normal_partials(u, v) {
        Some((nu_u, nu_v)) => {
            let (du, dv) = curve.derivative(t);
            nu_u * du + nu_v * dv
        }
        None => {
            let h = FD_STEP;
            let fwd = curve.eval(t + h);
            let bwd = curve.eval(t - h);
            let a = surface.normal(fwd.0, fwd.1);
            let b = surface.normal(bwd.0, bwd.1);
            match (a, b) {
                (Some(a), Some(b)) => (a - b) / (2.0 * h),
                _ => return Err(Error::Numeric { t, msg: "chart is not immersed".into() }),
            }
        }
    };
    Ok((nu, rate))
}

/// Sampled frames, rotations, lifts and spinors along a curve.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct TransportTrace {
    pub times: Vec<f64>,
    pub positions: Vec<V3>,
    pub frames: Vec<Frame>,
    pub rotations: Vec<Matrix3<f64>>,
    pub lifts: Vec<Quaternion<f64>>,
    pub spinors: Vec<Quaternion<f64>>,
    /// Per sample: frame orthonormal within tolerance and lift well defined.
    pub flags: Vec<bool>,
}

impl TransportTrace {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }
}

fn reorthonormalize(e1: V3, e2: V3, nu: V3) -> (V3, V3) {
    let e1 = (e1 - nu * nu.dot(&e1)).normalize();
    let e2 = e2 - nu * nu.dot(&e2);
    let e2 = (e2 - e1 * e1.dot(&e2)).normalize();
    (e1, e2)
}

/// Integrates V̇ = −(V·ν̇)ν for e1 and e2 with fixed-step RK4 over t ∈ [0, 1].
pub fn parallel_transport_frame(
    surface: &dyn ParametricSurface,
    curve: &dyn Curve,
    frame0: (V3, V3),
    steps: usize,
) -> Result<TransportTrace> {
    if steps < 2 {
        return input("at least 2 steps are required");
    }
    let (u0, v0) = curve.eval(0.0);
    let nu0 = surface.normal(u0, v0).ok_or_else(|| Error::Input("chart is not immersed at the start".into()))?;
    let (e1, e2) = frame0;
    let tangent = e1.dot(&nu0).abs().max(e2.dot(&nu0).abs());
    let frame = Frame { e1, e2, nu: nu0 };
    if tangent > ORTHO_TOL || frame.orthonormality_defect() > ORTHO_TOL {
        return input("initial frame must be tangent and orthonormal");
    }
    if e1.cross(&e2).dot(&nu0) < 0.0 {
        return input("initial frame must be positively oriented");
    }

    let dt = 1.0 / steps as f64;
    let rhs = |t: f64, a: V3, b: V3| -> Result<(V3, V3)> {
        let (nu, rate) = normal_and_rate(surface, curve, t)?;
        Ok((-nu * a.dot(&rate), -nu * b.dot(&rate)))
    };

    let mut trace = TransportTrace::default();
    let (mut a, mut b) = (e1, e2);
    let mut step_ok = true;
    for k in 0..=steps {
        let t = k as f64 * dt;
        let (u, v) = curve.eval(t);
        let nu = surface.normal(u, v).ok_or_else(|| Error::Numeric { t, msg: "chart is not immersed".into() })?;
        let frame = Frame { e1: a, e2: b, nu };
        trace.times.push(t);
        trace.positions.push(surface.point(u, v));
        trace.rotations.push(frame.rotation());
        trace.flags.push(step_ok && frame.orthonormality_defect() <= ORTHO_TOL);
        trace.frames.push(frame);
        if k == steps {
            break;
        }
        let (k1a, k1b) = rhs(t, a, b)?;
        let (k2a, k2b) = rhs(t + dt / 2.0, a + k1a * (dt / 2.0), b + k1b * (dt / 2.0))?;
        let (k3a, k3b) = rhs(t + dt / 2.0, a + k2a * (dt / 2.0), b + k2b * (dt / 2.0))?;
        let (k4a, k4b) = rhs(t + dt, a + k3a * dt, b + k3b * dt)?;
        let na = a + (k1a + k2a * 2.0 + k3a * 2.0 + k4a) * (dt / 6.0);
        let nb = b + (k1b + k2b * 2.0 + k3b * 2.0 + k4b) * (dt / 6.0);
        let t1 = t + dt;
        let (u1, v1) = curve.eval(t1);
        let nu1 =
            surface.normal(u1, v1).ok_or_else(|| Error::Numeric { t: t1, msg: "chart is not immersed".into() })?;
        // a step that turns the normal by a right angle or more, or needs a
        // large re-orthonormalization, is kept but flagged
        let drift = Frame { e1: na, e2: nb, nu: nu1 }.orthonormality_defect();
        step_ok = nu1.dot(&nu) > 0.0 && drift <= STEP_TOL;
        (a, b) = reorthonormalize(na, nb, nu1);
        if !(a.iter().chain(b.iter()).all(|x| x.is_finite())) {
            return Err(Error::Numeric { t: t1, msg: "frame integration diverged".into() });
        }
    }
    Ok(trace)
}

/// Frame transport, its continuous spin lift g(t), and q(t) = g(t)·q₀.
///
/// The lift starts at `initial_sign` times the canonical lift of R(0), so a
/// negative sign negates g and q pointwise.
pub fn spin_parallel_transport(
    surface: &dyn ParametricSurface,
    curve: &dyn Curve,
    frame0: (V3, V3),
    q0: Quaternion<f64>,
    initial_sign: i8,
    steps: usize,
) -> Result<TransportTrace> {
    if initial_sign != 1 && initial_sign != -1 {
        return input("initial sign must be +1 or -1");
    }
    let mut trace = parallel_transport_frame(surface, curve, frame0, steps)?;
    let lifts = quaternion_lift_path_lenient(&trace.rotations, initial_sign);
    for (flag, s) in trace.flags.iter_mut().zip(&lifts) {
        *flag &= s.ok;
    }
    trace.lifts = lifts.iter().map(|s| s.q).collect();
    trace.spinors = trace.lifts.iter().map(|g| g * q0).collect();
    Ok(trace)
}

/// The default frame of [`surface_frame`] at the curve's start.
pub fn initial_frame(surface: &dyn ParametricSurface, curve: &dyn Curve) -> Result<(V3, V3)> {
    let (u, v) = curve.eval(0.0);
    let f = surface_frame(surface, u, v)?;
    Ok((f.e1, f.e2))
}

/// Clifford action of a tangent vector on spinors of a hypersurface in ℝ⁴ ≅ ℍ:
/// (v, q) ↦ v·ν̄·q, with ν the unit normal.
///
/// The tangent space at ν is ν·Im ℍ; v ↦ v·ν̄ identifies it isometrically with
/// Im ℍ, so the operator squares to −|v|².
pub fn hypersurface4_action(normal: &KElement, v: &KElement, q: &KElement) -> Result<KElement> {
    for x in [normal, v, q] {
        if x.algebra() != Algebra::H {
            return input("hypersurface action takes quaternions");
        }
    }
    if !norm_sq(normal).is_one() {
        return input("normal must be a unit quaternion");
    }
    let im = mul(v, &conj(normal))?;
    if !im.re().is_zero() {
        return input("v is not tangent: Re(v·ν̄) ≠ 0");
    }
    mul(&im, q)
}

/// A·q = ν·q·w + q·w′, the two-parameter right action commuting with the even
/// Clifford action span{1, ν} of a surface.
pub fn surface_even_commutant_action(nu: &KElement, w: &KElement, w2: &KElement, q: &KElement) -> Result<KElement> {
    mul(&mul(nu, q)?, w)?.add(&mul(q, w2)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, Rational};

    fn h(c: &[i64]) -> KElement {
        KElement::from_ints(Algebra::H, c).unwrap()
    }

    #[test]
    fn north_pole_frame() {
        let f = surface_frame(&Sphere::default(), 0.0, 0.0).unwrap();
        assert!((f.e1 - V3::x()).norm() < 1e-15);
        assert!((f.e2 - V3::y()).norm() < 1e-15);
        assert!((f.nu - V3::z()).norm() < 1e-15);
        let p = surface_frame(&Plane, 3.0, -1.0).unwrap();
        assert_eq!(p.rotation(), Matrix3::identity());
    }

    #[test]
    fn degenerate_chart_point() {
        assert!(surface_frame(&Sphere::default(), 0.0, PI / 2.0).is_err());
    }

    #[test]
    fn too_few_steps() {
        let c = LineCurve::great_circle();
        assert!(parallel_transport_frame(&Sphere::default(), &c, (V3::x(), V3::y()), 1).is_err());
    }

    #[test]
    fn hypersurface_examples() {
        assert_eq!(
            hypersurface4_action(&h(&[1, 0, 0, 0]), &h(&[0, 1, 0, 0]), &h(&[1, 0, 0, 0])).unwrap(),
            h(&[0, 1, 0, 0])
        );
        let k = h(&[0, 0, 0, 1]);
        let v = h(&[0, 1, 0, 0]);
        let once = hypersurface4_action(&k, &v, &h(&[1, 0, 0, 0])).unwrap();
        assert_eq!(once, h(&[0, 0, 1, 0]));
        let twice = hypersurface4_action(&k, &v, &once).unwrap();
        assert_eq!(twice, h(&[-1, 0, 0, 0]));
        assert!(hypersurface4_action(&k, &h(&[1, 0, 0, 1]), &once).is_err());
        assert!(hypersurface4_action(&k, &h(&[0; 4]), &once).unwrap().is_zero());
    }

    #[test]
    fn surface_commutant_action_commutes_with_even_part() {
        let nu = KElement::new(Algebra::H, vec![Rational::zero(), rat(3, 5), Rational::zero(), rat(4, 5)]).unwrap();
        let w = h(&[1, -2, 3, 1]);
        let w2 = h(&[0, 1, 1, -4]);
        let q = h(&[2, 1, 0, 5]);
        let lhs = surface_even_commutant_action(&nu, &w, &w2, &mul(&nu, &q).unwrap()).unwrap();
        let rhs = mul(&nu, &surface_even_commutant_action(&nu, &w, &w2, &q).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }
}
