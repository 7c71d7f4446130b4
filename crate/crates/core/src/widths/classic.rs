//! The four classical width notions, and the symmetric strip of an ideal point.

use std::f64::consts::FRAC_PI_2;

use serde::Serialize;

use super::{feasible_arc, DirectionalWidth, SearchConfig};
use crate::bodies::boundary::{self, Piece};
use crate::bodies::{BodyKind, ConvexBody};
use crate::error::{GeometryError, Result};
use crate::kernel::{
    busemann_lifted, dist_lifted, line_line_distance, ray_ideal_point, tangent_angle, Geodesic, HPoint, IdealPoint,
    Isometry, V3,
};
use crate::optimize::bisect_root;

/// Distance tolerance for a point to count as lying on a line.
const ON_LINE: f64 = 1e-8;
/// Largest `sinh` depth by which a body may cross a supporting line.
const SUPPORT_SLACK: f64 = 1e-9;
/// Largest alternate-angle mismatch accepted for opposite points.
const ANGLE_TOL: f64 = 1e-6;

/// The line through `base` perpendicular to the ray `base → θ`, with its left
/// side facing `θ`. Its forward endpoint lies at `θ - π/2` in the frame at `base`.
pub fn leading_line(base: HPoint, theta: f64) -> Geodesic {
    let (f1, f2, b) = Isometry::boost(base.x(), base.y()).frame();
    let phi = theta - FRAC_PI_2;
    Geodesic::through_dir(b, f1 * phi.cos() + f2 * phi.sin())
}

/// The breadth of the body for the boundary point `z` with supporting line
/// `lz`: the farthest foot along the inner normal at `z`.
pub fn width1_santalo(k: &ConvexBody, z: HPoint, lz: &Geodesic) -> Result<f64> {
    let zl = z.lift();
    let off = lz.sinh_signed_dist(zl).asinh();
    if off.abs() > ON_LINE {
        return Err(GeometryError::PointNotOnGeodesic { distance: off.abs() });
    }
    let n = lz.normal();
    let (lo, hi) = k.linear_extremes(n);
    let inward = if -lo.value <= hi.value { n } else { -n };
    let depth = (-lo.value).min(hi.value);
    if depth > SUPPORT_SLACK {
        return Err(GeometryError::NotSupporting { depth: depth.asinh() });
    }
    let m = V3::tangent_toward(zl, inward).unit_spacelike();
    let r = boundary::ratio_max(k.pieces(), m, -zl).value;
    Ok(r.clamp(0.0, 1.0 - 1e-16).atanh())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Width2 {
    pub value: f64,
    /// Busemann height of the body in direction `θ`, measured from `base`.
    pub h_forward: f64,
    pub h_backward: f64,
    /// Set when the body is not declared h-convex.
    pub warning: bool,
}

/// Horocyclic width: the distance between the two horocycles supporting the
/// body on opposite sides of the line `base → θ`.
///
/// Each support height is the largest Busemann value over the body for the
/// ideal point behind it, normalized at `base`.
pub fn width2_fillmore(k: &ConvexBody, theta: f64, base: HPoint) -> Width2 {
    let b = base.lift();
    let height = |x: IdealPoint| {
        let xi = x.null_vector();
        let (lo, _) = k.linear_extremes(xi);
        (-lo.value).ln() - busemann_lifted(xi, b)
    };
    let ahead = ray_ideal_point(base, theta);
    let behind = ray_ideal_point(base, theta + std::f64::consts::PI);
    let h_forward = height(behind);
    let h_backward = height(ahead);
    Width2 {
        value: h_forward + h_backward,
        h_forward,
        h_backward,
        warning: !k.is_h_convex(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Width3 {
    pub value: f64,
    pub h_forward: f64,
    pub h_backward: f64,
    pub leading: Geodesic,
}

/// Hypercyclic width: the strip width of the line through `base`
/// perpendicular to direction `θ`.
pub fn width3_leichtweiss(k: &ConvexBody, theta: f64, base: HPoint) -> Result<Width3> {
    if !k.contains(base) {
        return Err(GeometryError::BaseOutsideBody);
    }
    let leading = leading_line(base, theta);
    let s = k.support_strip(&leading)?;
    Ok(Width3 {
        value: s.width(),
        h_forward: s.d_plus,
        h_backward: s.d_minus,
        leading,
    })
}

/// An opposite point `w` of a boundary point `z` with the distance of the two
/// tangent lines.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Width4Match {
    pub w: HPoint,
    /// Boundary parameter of `w`: a fractional sample index.
    pub param: f64,
    pub value: f64,
    /// Common alternate angle of the chord `zw` with both tangents.
    pub angle: f64,
}

impl Width4Match {
    /// Whether the chord `zw` is perpendicular to both tangents.
    pub fn is_double_normal(&self, tol: f64) -> bool {
        (self.angle - FRAC_PI_2).abs() <= tol
    }
}

/// Boundary samples with tangents, for repeated opposite-point searches.
///
/// Bodies with curved pieces use the exact boundary and its tangents.
/// Polygonal bodies estimate tangents from neighboring samples.
#[derive(Debug, Clone)]
pub struct Width4Scanner<'a> {
    body: &'a ConvexBody,
    exact: bool,
    params: Vec<f64>,
    points: Vec<V3>,
    tangents: Vec<V3>,
    corners: Vec<bool>,
}

fn locate(k: &ConvexBody, s: f64) -> (&Piece, f64) {
    let ps = k.pieces();
    let n = ps.len();
    let s = s.rem_euclid(n as f64);
    let i = (s.floor() as usize).min(n - 1);
    let p = &ps[i];
    (p, p.t0 + (s - i as f64) * (p.t1 - p.t0))
}

fn unit_toward(p: V3, q: V3) -> V3 {
    V3::tangent_toward(p, q).unit_spacelike()
}

impl<'a> Width4Scanner<'a> {
    pub fn new(k: &'a ConvexBody, m: usize) -> Width4Scanner<'a> {
        if k.is_polygonal() {
            Self::estimated(k, m)
        } else {
            Self::exact(k, m)
        }
    }

    fn exact(k: &'a ConvexBody, m: usize) -> Width4Scanner<'a> {
        let m = match k.kind() {
            BodyKind::SampledBody { boundary, .. } => boundary.len(),
            _ => m,
        };
        let params = k.sample_params(m);
        let ps = k.pieces();
        let mut points = Vec::with_capacity(params.len());
        let mut tangents = Vec::with_capacity(params.len());
        let mut corners = Vec::with_capacity(params.len());
        for &s in &params {
            let (p, t) = locate(k, s);
            let pt = p.point(t);
            let tan = p.unit_tangent(t);
            let junction = s.fract() == 0.0;
            let corner = junction && {
                let i = s as usize;
                let prev = &ps[(i + ps.len() - 1) % ps.len()];
                tangent_angle(pt, prev.unit_tangent(prev.t1), tan).radians() > 1e-6
            };
            points.push(pt);
            tangents.push(tan);
            corners.push(corner);
        }
        Width4Scanner {
            body: k,
            exact: true,
            params,
            points,
            tangents,
            corners,
        }
    }

    fn estimated(k: &'a ConvexBody, m: usize) -> Width4Scanner<'a> {
        let points: Vec<V3> = k.boundary_samples(m).iter().map(HPoint::lift).collect();
        let n = points.len();
        let mut tangents = Vec::with_capacity(n);
        let mut turning = Vec::with_capacity(n);
        for i in 0..n {
            let p = points[i];
            let (prev, next) = (points[(i + n - 1) % n], points[(i + 1) % n]);
            let (uf, ub) = (unit_toward(p, next), unit_toward(p, prev));
            let (a, b) = (dist_lifted(p, next), dist_lifted(p, prev));
            tangents.push((uf * b - ub * a).unit_spacelike());
            turning.push(std::f64::consts::PI - tangent_angle(p, uf, ub).radians());
        }
        let corners = (0..n).map(|i| turning[i] > 1e-9).collect();
        Width4Scanner {
            body: k,
            exact: false,
            params: (0..n).map(|i| i as f64).collect(),
            points,
            tangents,
            corners,
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, i: usize) -> HPoint {
        HPoint::from_lift(self.points[i]).expect("boundary sample inside the disk")
    }

    pub fn is_corner(&self, i: usize) -> bool {
        self.corners[i]
    }

    /// The tangent line at sample `i`, oriented with the boundary.
    pub fn tangent_line(&self, i: usize) -> Geodesic {
        Geodesic::through_dir(self.points[i], self.tangents[i])
    }

    /// Point and unit tangent at a fractional sample index.
    fn at(&self, u: f64) -> (V3, V3) {
        let n = self.len();
        let u = u.rem_euclid(n as f64);
        let j = (u.floor() as usize).min(n - 1);
        let f = u - j as f64;
        if self.exact {
            let (s0, mut s1) = (self.params[j], self.params[(j + 1) % n]);
            if j + 1 == n {
                s1 += self.body.pieces().len() as f64;
            }
            let (p, t) = locate(self.body, s0 + f * (s1 - s0));
            (p.point(t), p.unit_tangent(t))
        } else {
            let (a, b) = (self.points[j], self.points[(j + 1) % n]);
            let d = dist_lifted(a, b);
            let p = if d > 0.0 {
                let u = unit_toward(a, b);
                a * (f * d).cosh() + u * (f * d).sinh()
            } else {
                a
            };
            let t = self.tangents[j] * (1.0 - f) + self.tangents[(j + 1) % n] * f;
            (p, V3::tangent_toward(p, t).unit_spacelike())
        }
    }

    /// Opposite points of sample `i`.
    pub fn at_index(&self, i: usize) -> Result<Vec<Width4Match>> {
        if self.corners[i] {
            return Err(GeometryError::CornerPoint { index: i });
        }
        let n = self.len();
        let found = self.scan(
            self.points[i],
            self.tangents[i],
            (2..n.saturating_sub(1)).map(|d| i + d),
        );
        if found.is_empty() {
            Err(GeometryError::NoOppositeFound { index: i })
        } else {
            Ok(found)
        }
    }

    /// Opposite points of an arbitrary boundary point with its tangent.
    pub fn at_point(&self, z: HPoint, tangent: V3) -> Result<Vec<Width4Match>> {
        let zl = z.lift();
        let t = V3::tangent_toward(zl, tangent).unit_spacelike();
        let found = self.scan(zl, t, 0..=self.len());
        if found.is_empty() {
            Err(GeometryError::NoOppositeFound { index: usize::MAX })
        } else {
            Ok(found)
        }
    }

    fn mismatch(&self, z: V3, tz: V3, u: f64) -> f64 {
        let (w, tw) = self.at(u);
        let cz = V3::tangent_toward(z, w);
        let cw = V3::tangent_toward(w, z);
        tangent_angle(z, tz, cz).radians() - tangent_angle(w, tw, cw).radians()
    }

    fn scan(&self, z: V3, tz: V3, range: impl Iterator<Item = usize>) -> Vec<Width4Match> {
        let n = self.len();
        let lz = Geodesic::through_dir(z, tz);
        let g = |u: f64| {
            let (w, _) = self.at(u);
            if dist_lifted(z, w) < 1e-12 {
                f64::NAN
            } else {
                self.mismatch(z, tz, u)
            }
        };
        let mut out: Vec<Width4Match> = Vec::new();
        let idx: Vec<usize> = range.collect();
        for pair in idx.windows(2) {
            let (a, b) = (pair[0] as f64, pair[1] as f64);
            let (ga, gb) = (g(a), g(b));
            if !(ga.is_finite() && gb.is_finite()) || ga.signum() == gb.signum() && ga != 0.0 {
                continue;
            }
            let u = if ga == 0.0 { a } else { bisect_root(g, a, b, 1e-13) };
            if g(u).abs() > ANGLE_TOL {
                continue;
            }
            let (w, tw) = self.at(u);
            if self.corners[(u.round() as usize) % n] && (u - u.round()).abs() < 1e-9 {
                continue;
            }
            let lw = Geodesic::through_dir(w, tw);
            let Ok(value) = line_line_distance(&lz, &lw) else {
                continue;
            };
            let param = u.rem_euclid(n as f64);
            if out.iter().any(|m| (m.param - param).abs() < 1e-9) {
                continue;
            }
            out.push(Width4Match {
                w: HPoint::from_lift(w).expect("boundary point inside the disk"),
                param,
                value,
                angle: tangent_angle(z, tz, V3::tangent_toward(z, w)).radians(),
            });
        }
        out
    }
}

/// Opposite points and tangent-line distances at boundary sample `index` of
/// an `m`-point sampling.
pub fn width4_jeronimo(k: &ConvexBody, index: usize, m: usize) -> Result<Vec<Width4Match>> {
    let s = Width4Scanner::new(k, m);
    if index >= s.len() {
        return Err(GeometryError::ArgumentOutOfRange(format!(
            "index {index} beyond {} samples",
            s.len()
        )));
    }
    s.at_index(index)
}

/// The line `YX` whose two supporting hypercycles are equidistant from it.
pub fn symmetric_strip(k: &ConvexBody, x: IdealPoint, cfg: &SearchConfig) -> DirectionalWidth {
    let arc = feasible_arc(k, x, cfg);
    let gap = |phi: f64| {
        arc.line(phi)
            .and_then(|g| k.support_strip(&g).ok())
            .map_or(0.0, |s| s.d_plus - s.d_minus)
    };
    let phi = bisect_root(gap, arc.lo, arc.hi, cfg.arc_tol);
    let strip = arc
        .line(phi)
        .and_then(|g| k.support_strip(&g).ok())
        .expect("feasible arc lines meet the body");
    DirectionalWidth {
        value: strip.width(),
        x,
        y: arc.y(phi),
        strip,
    }
}
