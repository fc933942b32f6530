//! Surface, curve and quaternion specs for `transport`, and the CSV writer.

use std::f64::consts::PI;

use nalgebra::Quaternion;
use spinor_core::surface::{
    initial_frame, spin_parallel_transport, Curve, LineCurve, ParametricSurface, Plane, Sphere, TransportTrace,
};

use crate::error::{CliError, CliResult};

pub const CSV_HEADER: &str = "t,px,py,pz,e1x,e1y,e1z,e2x,e2y,e2z,nx,ny,nz,g0,g1,g2,g3,q0,q1,q2,q3,flag";

fn bad(what: &str, s: &str) -> CliError {
    CliError::Input(format!("cannot parse {what} {s:?}"))
}

/// A real number, optionally a multiple or fraction of π: `1.5`, `2pi`, `-pi/2`.
pub fn parse_real(s: &str) -> CliResult<f64> {
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a, Some(b)),
        None => (t, None),
    };
    let value = match num.strip_suffix("pi") {
        Some(coef) => {
            let c = match coef {
                "" | "+" => 1.0,
                "-" => -1.0,
                c => c.parse::<f64>().map_err(|_| bad("number", s))?,
            };
            c * PI
        }
        None => num.parse::<f64>().map_err(|_| bad("number", s))?,
    };
    let value = match den {
        Some(d) => value / d.trim().parse::<f64>().map_err(|_| bad("number", s))?,
        None => value,
    };
    if !value.is_finite() {
        return Err(bad("number", s));
    }
    Ok(value)
}

pub fn parse_surface(s: &str) -> CliResult<Box<dyn ParametricSurface + Sync>> {
    match s {
        "unit-sphere" => Ok(Box::new(Sphere::default())),
        "plane" => Ok(Box::new(Plane)),
        _ => match s.strip_prefix("sphere:") {
            Some(r) => {
                let radius = parse_real(r)?;
                if radius <= 0.0 {
                    return Err(CliError::Input("sphere radius must be positive".into()));
                }
                Ok(Box::new(Sphere { radius }))
            }
            None => Err(CliError::Input(format!("unknown surface {s:?}; expected unit-sphere, sphere:R or plane"))),
        },
    }
}

pub fn parse_curve(s: &str) -> CliResult<LineCurve> {
    if s == "great-circle" {
        return Ok(LineCurve::great_circle());
    }
    if let Some(v) = s.strip_prefix("latitude:") {
        return Ok(LineCurve::latitude(parse_real(v)?));
    }
    if let Some(rest) = s.strip_prefix("line:") {
        let xs = rest.split(',').map(parse_real).collect::<CliResult<Vec<_>>>()?;
        if xs.len() != 4 {
            return Err(bad("line curve (expected u0,v0,u1,v1)", s));
        }
        return Ok(LineCurve { start: (xs[0], xs[1]), end: (xs[2], xs[3]) });
    }
    Err(CliError::Input(format!("unknown curve {s:?}; expected great-circle, latitude:V or line:u0,v0,u1,v1")))
}

/// `w,x,y,z` or one of `1`, `i`, `j`, `k` with an optional sign.
pub fn parse_quaternion(s: &str) -> CliResult<Quaternion<f64>> {
    let t = s.trim();
    let (sign, body) = match t.strip_prefix('-') {
        Some(b) => (-1.0, b),
        None => (1.0, t.strip_prefix('+').unwrap_or(t)),
    };
    let unit = match body {
        "1" => Some(Quaternion::new(1.0, 0.0, 0.0, 0.0)),
        "i" => Some(Quaternion::new(0.0, 1.0, 0.0, 0.0)),
        "j" => Some(Quaternion::new(0.0, 0.0, 1.0, 0.0)),
        "k" => Some(Quaternion::new(0.0, 0.0, 0.0, 1.0)),
        _ => None,
    };
    if let Some(q) = unit {
        return Ok(q * sign);
    }
    let xs = t.split(',').map(parse_real).collect::<CliResult<Vec<_>>>()?;
    if xs.len() != 4 {
        return Err(bad("quaternion (expected w,x,y,z)", s));
    }
    Ok(Quaternion::new(xs[0], xs[1], xs[2], xs[3]))
}

pub fn parse_sign(s: &str) -> CliResult<i8> {
    match s {
        "plus" | "+" | "1" | "+1" => Ok(1),
        "minus" | "-" | "-1" => Ok(-1),
        _ => Err(bad("sign", s)),
    }
}

pub fn run_transport(
    surface: &dyn ParametricSurface,
    curve: &dyn Curve,
    q0: Quaternion<f64>,
    sign: i8,
    steps: usize,
) -> CliResult<TransportTrace> {
    let frame0 = initial_frame(surface, curve)?;
    Ok(spin_parallel_transport(surface, curve, frame0, q0, sign, steps)?)
}

pub fn trace_csv(trace: &TransportTrace) -> String {
    let mut out = String::with_capacity(trace.len() * 400);
    out.push_str(CSV_HEADER);
    out.push('\n');
    for k in 0..trace.len() {
        let f = &trace.frames[k];
        let p = &trace.positions[k];
        let g = &trace.lifts[k];
        let q = &trace.spinors[k];
        let vals = [
            trace.times[k],
            p.x,
            p.y,
            p.z,
            f.e1.x,
            f.e1.y,
            f.e1.z,
            f.e2.x,
            f.e2.y,
            f.e2.z,
            f.nu.x,
            f.nu.y,
            f.nu.z,
            g.w,
            g.i,
            g.j,
            g.k,
            q.w,
            q.i,
            q.j,
            q.k,
        ];
        for v in vals {
            out.push_str(&format!("{v:.16e},"));
        }
        out.push(if trace.flags[k] { '1' } else { '0' });
        out.push('\n');
    }
    out
}
