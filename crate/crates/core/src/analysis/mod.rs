//! Constancy verdicts, double normals, regular-polygon radii and the
//! Blaschke-type inradius bound.

mod blaschke;
mod polygons;

pub use blaschke::{blaschke_radius, blaschke_verify, inradius, BlaschkeReport, Inradius};
pub use polygons::{
    regular_polygon_rmin, regular_polygon_width_formula, regular_polygon_width_formula_with, table1,
    PolygonWidthReport, Table1, Table1Row, TABLE1_VALUES,
};

use std::f64::consts::{FRAC_PI_2, TAU};

use rayon::prelude::*;
use serde::Serialize;

use crate::bodies::ConvexBody;
use crate::error::Result;
use crate::kernel::{tangent_angle, Geodesic, HPoint, IdealPoint, V3};
use crate::widths::{feasible_arc, thickness_dir_with, width_profile_with, SearchConfig};

/// Default absolute tolerance of the constancy verdicts.
pub const DEFAULT_TOLERANCE: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConstancyKind {
    Width,
    Shadow,
    Diameter,
}

/// Where the smallest value of a checked quantity was found.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Witness {
    Direction { ideal_point: IdealPoint },
    Line { line: Geodesic },
    Point { point: HPoint },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConstancyVerdict {
    pub kind: ConstancyKind,
    pub constant: bool,
    pub value: f64,
    pub min: f64,
    pub max: f64,
    pub worst_witness: Witness,
    pub tolerance: f64,
}

impl ConstancyVerdict {
    fn new(kind: ConstancyKind, min: f64, max: f64, worst_witness: Witness, tolerance: f64) -> Self {
        ConstancyVerdict {
            kind,
            constant: max - min <= tolerance,
            value: 0.5 * (min + max),
            min,
            max,
            worst_witness,
            tolerance,
        }
    }
}

/// Constant width: the width function over `m` ideal points varies by at
/// most `tol`.
pub fn is_constant_width(k: &ConvexBody, tol: f64, m: usize) -> ConstancyVerdict {
    is_constant_width_with(k, tol, m, &SearchConfig::default())
}

pub fn is_constant_width_with(k: &ConvexBody, tol: f64, m: usize, cfg: &SearchConfig) -> ConstancyVerdict {
    let p = width_profile_with(k, m.max(90), cfg);
    ConstancyVerdict::new(
        ConstancyKind::Width,
        p.inf.value,
        p.sup.value,
        Witness::Direction {
            ideal_point: p.inf.direction,
        },
        tol,
    )
}

/// Constant shadow: every line meeting the body has the same strip width.
///
/// Lines are sampled as 64 ideal points `X` times an even grid over each
/// feasible arc of `Y`, tangent lines included, with at least
/// `line_samples` lines in total. Each `X` also contributes its thinnest line.
pub fn is_constant_shadow(k: &ConvexBody, tol: f64, line_samples: usize) -> ConstancyVerdict {
    is_constant_shadow_with(k, tol, line_samples, &SearchConfig::default())
}

pub fn is_constant_shadow_with(k: &ConvexBody, tol: f64, line_samples: usize, cfg: &SearchConfig) -> ConstancyVerdict {
    let nx = 64;
    let ny = line_samples.max(1000).div_ceil(nx).max(2);
    let per_x: Vec<(f64, Geodesic, f64, Geodesic)> = (0..nx)
        .into_par_iter()
        .map(|i| {
            let x = IdealPoint::new(TAU * i as f64 / nx as f64);
            let arc = feasible_arc(k, x, cfg);
            let mut lo = (f64::INFINITY, None);
            let mut hi = (f64::NEG_INFINITY, None);
            for j in 0..ny {
                let phi = arc.lo + (arc.hi - arc.lo) * j as f64 / (ny - 1) as f64;
                let Some(g) = arc.line(phi) else { continue };
                let Ok(s) = k.support_strip(&g) else { continue };
                let w = s.width();
                if w < lo.0 {
                    lo = (w, Some(g));
                }
                if w > hi.0 {
                    hi = (w, Some(g));
                }
            }
            let thin = thickness_dir_with(k, x, cfg);
            if thin.value < lo.0 {
                lo = (thin.value, Some(thin.strip.leading));
            }
            let g0 = lo.1.or(hi.1).expect("some feasible line meets the body");
            (lo.0, lo.1.unwrap_or(g0), hi.0, hi.1.unwrap_or(g0))
        })
        .collect();
    let min = per_x.iter().min_by(|a, b| a.0.total_cmp(&b.0)).expect("nonempty");
    let max = per_x.iter().map(|r| r.2).fold(f64::NEG_INFINITY, f64::max);
    ConstancyVerdict::new(ConstancyKind::Shadow, min.0, max, Witness::Line { line: min.1 }, tol)
}

/// Constant diameter: every boundary point is the endpoint of a chord of
/// length equal to the diameter.
pub fn is_constant_diameter(k: &ConvexBody, tol: f64, m: usize) -> ConstancyVerdict {
    let diam = k.diameter().length;
    let pts = k.boundary_samples(m.max(256));
    let far: Vec<f64> = pts.par_iter().map(|p| k.farthest_from(*p).1).collect();
    let (i, min) = far
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .map(|(i, v)| (i, *v))
        .expect("boundary samples");
    let mut v = ConstancyVerdict::new(
        ConstancyKind::Diameter,
        min,
        diam,
        Witness::Point { point: pts[i] },
        tol,
    );
    v.value = diam;
    v
}

/// How far the chord `pq` is from being normal to a supporting line at each
/// end: the largest excess over a right angle between the chord and a
/// one-sided boundary tangent. Zero or negative for a double normal.
pub fn double_normal_deviation(k: &ConvexBody, p: HPoint, q: HPoint) -> Result<f64> {
    let mut worst = f64::NEG_INFINITY;
    for (a, b) in [(p, q), (q, p)] {
        let (back, fwd) = k.one_sided_tangents(a)?;
        let al = a.lift();
        let c = V3::tangent_toward(al, b.lift());
        for t in [fwd, -back] {
            worst = worst.max(tangent_angle(al, c, t).radians() - FRAC_PI_2);
        }
    }
    Ok(worst)
}

/// Whether the chord `pq` is orthogonal to a supporting line at both ends,
/// within the angle `tol`.
pub fn double_normal_check(k: &ConvexBody, p: HPoint, q: HPoint, tol: f64) -> Result<bool> {
    Ok(double_normal_deviation(k, p, q)? <= tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bodies::Pose;
    use crate::error::GeometryError;

    #[test]
    fn circle_is_constant_in_every_sense() {
        let k = ConvexBody::circle(HPoint::new(0.2, 0.1).unwrap(), 0.5).unwrap();
        for v in [
            is_constant_width(&k, 1e-6, 90),
            is_constant_shadow(&k, 1e-6, 1000),
            is_constant_diameter(&k, 1e-6, 256),
        ] {
            assert!(v.constant, "{v:?}");
            assert!((v.value - 1.0).abs() < 1e-8);
        }
    }

    #[test]
    fn segment_is_not_constant() {
        let k = ConvexBody::symmetric_segment(0.8).unwrap();
        let w = is_constant_width(&k, 1e-3, 90);
        assert!(!w.constant);
        assert!(w.min < 1e-9 && (w.max - 0.8).abs() < 1e-9);
        assert!(!is_constant_shadow(&k, 1e-3, 1000).constant);
    }

    #[test]
    fn circle_double_normals() {
        let k = ConvexBody::circle(HPoint::ORIGIN, 0.7).unwrap();
        let c = k.diameter();
        assert!(double_normal_check(&k, c.p, c.q, 1e-9).unwrap());
        let pts = k.boundary_samples(16);
        assert!(!double_normal_check(&k, pts[0], pts[5], 1e-3).unwrap());
        assert!(matches!(
            double_normal_check(&k, HPoint::ORIGIN, pts[0], 1e-3),
            Err(GeometryError::PointNotOnBoundary { .. })
        ));
    }

    #[test]
    fn reuleaux_diametral_chords_are_double_normals() {
        let k = ConvexBody::reuleaux(3, 1.0, Pose::default()).unwrap();
        let pts = k.boundary_samples(60);
        for p in pts {
            let (q, d) = k.farthest_from(p);
            assert!((d - 1.0).abs() < 1e-9);
            assert!(double_normal_check(&k, p, q, 1e-9).unwrap());
        }
    }
}
