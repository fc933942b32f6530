//! Continuous lifting of sampled SO(3) paths to unit quaternions.

use nalgebra::{Matrix3, Quaternion, Rotation3, UnitQuaternion};

use crate::error::{input, Result};

/// Frobenius tolerance on ‖RᵀR − I‖ for a float rotation sample.
pub const ORTHO_TOL: f64 = 1e-9;

fn orthogonality_defect(r: &Matrix3<f64>) -> f64 {
    (r.transpose() * r - Matrix3::identity()).norm()
}

/// Whether R is a rotation within [`ORTHO_TOL`].
pub fn is_rotation(r: &Matrix3<f64>) -> bool {
    orthogonality_defect(r) <= ORTHO_TOL && r.determinant() > 0.0
}

/// The unit quaternion with nonnegative leading nonzero component covering R.
pub fn rotation_to_quaternion(r: &Matrix3<f64>) -> Quaternion<f64> {
    let rot = Rotation3::from_matrix_unchecked(*r);
    let q = UnitQuaternion::from_rotation_matrix(&rot).into_inner();
    let lead = [q.w, q.i, q.j, q.k].into_iter().find(|c| c.abs() > 1e-12).unwrap_or(1.0);
    if lead < 0.0 {
        -q
    } else {
        q
    }
}

/// q·v·q̄ for v ∈ Im ℍ ≅ ℝ³.
pub fn rotate(q: &Quaternion<f64>, v: [f64; 3]) -> [f64; 3] {
    let p = Quaternion::new(0.0, v[0], v[1], v[2]);
    let out = q * p * q.conjugate();
    [out.i, out.j, out.k]
}

/// Neighbors must differ by a rotation of angle below π/2, i.e. tr(R_prevᵀR) > 1.
fn close_enough(prev: &Matrix3<f64>, next: &Matrix3<f64>) -> bool {
    (prev.transpose() * next).trace() > 1.0
}

/// One lifted sample and whether it met the preconditions.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LiftSample {
    pub q: Quaternion<f64>,
    pub ok: bool,
}

/// Lift without failing: each sample is flagged when it is not a rotation
/// within tolerance or is too far from its predecessor.
pub fn quaternion_lift_path_lenient(samples: &[Matrix3<f64>], initial_sign: i8) -> Vec<LiftSample> {
    let sign = if initial_sign < 0 { -1.0 } else { 1.0 };
    let mut out: Vec<LiftSample> = Vec::with_capacity(samples.len());
    for (idx, r) in samples.iter().enumerate() {
        let mut q = rotation_to_quaternion(r);
        let mut ok = is_rotation(r);
        match out.last() {
            None => q *= sign,
            Some(prev) => {
                ok &= close_enough(&samples[idx - 1], r);
                if prev.q.coords.dot(&q.coords) < 0.0 {
                    q = -q;
                }
            }
        }
        out.push(LiftSample { q, ok });
    }
    out
}

/// The continuous lift ±g(t) of a sampled rotation path, with g(t₀) carrying
/// `initial_sign` relative to the canonical choice.
pub fn quaternion_lift_path(samples: &[Matrix3<f64>], initial_sign: i8) -> Result<Vec<Quaternion<f64>>> {
    if initial_sign != 1 && initial_sign != -1 {
        return input("initial sign must be +1 or -1");
    }
    for (idx, r) in samples.iter().enumerate() {
        if !is_rotation(r) {
            return input(format!("sample {idx} is not a rotation within {ORTHO_TOL:e}"));
        }
        if idx > 0 && !close_enough(&samples[idx - 1], r) {
            return input(format!("samples {} and {idx} are too far apart to lift unambiguously", idx - 1));
        }
    }
    Ok(quaternion_lift_path_lenient(samples, initial_sign).into_iter().map(|s| s.q).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn family(t: f64) -> Matrix3<f64> {
        let (s, c) = (2.0 * PI * t).sin_cos();
        Matrix3::new(c, 0.0, s, 0.0, 1.0, 0.0, -s, 0.0, c)
    }

    #[test]
    fn sphere_family_lifts_to_exp_pi_j_t() {
        let n = 10_000;
        let samples: Vec<_> = (0..=n).map(|k| family(k as f64 / n as f64)).collect();
        let lift = quaternion_lift_path(&samples, 1).unwrap();
        for (k, q) in lift.iter().enumerate() {
            let t = k as f64 / n as f64;
            let expect = Quaternion::new((PI * t).cos(), 0.0, (PI * t).sin(), 0.0);
            assert!((q - expect).norm() < 1e-9, "t = {t}");
        }
        let end = lift.last().unwrap();
        assert!((end + Quaternion::identity()).norm() < 1e-9);
    }

    #[test]
    fn constant_path() {
        let samples = vec![Matrix3::identity(); 5];
        for sign in [1, -1] {
            let lift = quaternion_lift_path(&samples, sign).unwrap();
            assert!(lift.iter().all(|q| (q.w - sign as f64).abs() < 1e-15));
        }
    }

    #[test]
    fn rejects_jumps_and_non_rotations() {
        let samples = vec![family(0.0), family(0.5)];
        assert!(quaternion_lift_path(&samples, 1).is_err());
        let lenient = quaternion_lift_path_lenient(&samples, 1);
        assert!(lenient[0].ok && !lenient[1].ok);
        let bad = vec![Matrix3::identity() * 1.1];
        assert!(quaternion_lift_path(&bad, 1).is_err());
    }

    #[test]
    fn lift_covers_samples() {
        let r = family(0.37);
        let q = rotation_to_quaternion(&r);
        for v in [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]] {
            let got = rotate(&q, v);
            let want = r * nalgebra::Vector3::from(v);
            for a in 0..3 {
                assert!((got[a] - want[a]).abs() < 1e-12);
            }
        }
    }
}
