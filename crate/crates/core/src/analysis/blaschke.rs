use serde::Serialize;

use crate::bodies::ConvexBody;
use crate::error::{GeometryError, Result};
use crate::kernel::HPoint;
use crate::widths::thickness;

/// The radius `r` with `tanh r = sinh t cosh t / (3 cosh² d + sinh² t)`.
pub fn blaschke_radius(t: f64, d: f64) -> Result<f64> {
    if !(t > 0.0 && d > 0.0 && t <= d * (1.0 + 1e-9)) {
        return Err(GeometryError::ArgumentOutOfRange(format!(
            "thickness {t} and diameter {d} need 0 < t ≤ d"
        )));
    }
    let x = t.sinh() * t.cosh() / (3.0 * d.cosh().powi(2) + t.sinh().powi(2));
    if x >= 1.0 {
        return Err(GeometryError::ArgumentOutOfRange(format!("tanh r = {x}")));
    }
    Ok(x.atanh())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Inradius {
    pub radius: f64,
    pub center: HPoint,
}

/// Largest distance from an interior point to the boundary: a 64×64 grid over
/// the Klein bounding box, then coordinate descent down to a `1e-8` step.
pub fn inradius(k: &ConvexBody) -> Inradius {
    let f = |p: HPoint| {
        if k.contains(p) {
            k.nearest_boundary(p).1
        } else {
            f64::NEG_INFINITY
        }
    };
    let pts = k.boundary_samples(256);
    let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for p in &pts {
        x0 = x0.min(p.x());
        x1 = x1.max(p.x());
        y0 = y0.min(p.y());
        y1 = y1.max(p.y());
    }
    let c = k.interior_point();
    let mut best = (f(c).max(0.0), c);
    const N: usize = 64;
    for i in 0..N {
        for j in 0..N {
            let x = x0 + (x1 - x0) * (i as f64 + 0.5) / N as f64;
            let y = y0 + (y1 - y0) * (j as f64 + 0.5) / N as f64;
            if let Ok(p) = HPoint::new(x, y) {
                let v = f(p);
                if v > best.0 {
                    best = (v, p);
                }
            }
        }
    }
    let mut step = (x1 - x0).max(y1 - y0) / N as f64;
    while step > 1e-8 {
        let mut moved = false;
        for (dx, dy) in [(step, 0.0), (-step, 0.0), (0.0, step), (0.0, -step)] {
            if let Ok(p) = HPoint::new(best.1.x() + dx, best.1.y() + dy) {
                let v = f(p);
                if v > best.0 {
                    best = (v, p);
                    moved = true;
                }
            }
        }
        if !moved {
            step *= 0.5;
        }
    }
    Inradius {
        radius: best.0,
        center: best.1,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BlaschkeReport {
    pub thickness: f64,
    pub diameter: f64,
    pub radius: f64,
    pub inradius: f64,
    pub center: HPoint,
    /// `inradius - radius`.
    pub margin: f64,
    pub pass: bool,
}

/// Checks that an h-convex body contains a circle of the radius given by its
/// thickness and diameter.
pub fn blaschke_verify(k: &ConvexBody) -> Result<BlaschkeReport> {
    if !k.is_h_convex() {
        return Err(GeometryError::NotHConvex);
    }
    let t = thickness(k).value;
    let d = k.diameter().length;
    let radius = blaschke_radius(t.min(d), d)?;
    let ins = inradius(k);
    let margin = ins.radius - radius;
    Ok(BlaschkeReport {
        thickness: t,
        diameter: d,
        radius,
        inradius: ins.radius,
        center: ins.center,
        margin,
        pass: margin >= -1e-6,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radius_values() {
        let direct = (2f64.sinh() * 2f64.cosh() / (3.0 * 2f64.cosh().powi(2) + 2f64.sinh().powi(2))).atanh();
        assert!((blaschke_radius(2.0, 2.0).unwrap() - direct).abs() < 1e-15);
        assert!((blaschke_radius(2.0, 2.0).unwrap() - 0.2504).abs() < 5e-5);
        let small = blaschke_radius(0.01, 0.01).unwrap();
        assert!((small / 0.01 - 1.0 / 3.0).abs() < 1e-4);
        assert!(blaschke_radius(1.0, 0.5).is_err());
        let mut prev = 0.0;
        for i in 1..=100 {
            let r = blaschke_radius(i as f64 * 0.015, 1.5).unwrap();
            assert!(r > prev);
            prev = r;
        }
    }

    #[test]
    fn circle_inradius_and_bound() {
        let c = HPoint::new(0.3, -0.1).unwrap();
        for r in [0.1, 0.5, 1.0, 2.0] {
            let k = ConvexBody::circle(c, r).unwrap();
            let ins = inradius(&k);
            assert!((ins.radius - r).abs() < 1e-6, "r={r} got {}", ins.radius);
            let rep = blaschke_verify(&k).unwrap();
            assert!(rep.pass);
            assert!((rep.radius - blaschke_radius(2.0 * r, 2.0 * r).unwrap()).abs() < 1e-9);
        }
        let k = ConvexBody::circle(c, 0.01).unwrap();
        let rep = blaschke_verify(&k).unwrap();
        assert!((rep.margin - 0.01 / 3.0).abs() < 1e-5);
    }

    #[test]
    fn polygons_are_refused() {
        let k = ConvexBody::regular_polygon(5, 0.6).unwrap();
        assert!(matches!(blaschke_verify(&k), Err(GeometryError::NotHConvex)));
    }
}
