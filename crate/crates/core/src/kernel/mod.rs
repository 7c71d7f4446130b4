//! Exact-formula primitives of the Klein disk model.
//!
//! Orientation convention: a geodesic runs from its `from` ideal point to its
//! `to` ideal point, and signed distances are positive on the left of that
//! direction of travel. Every higher module inherits this convention.

pub mod minkowski;
mod point;

pub use minkowski::{Isometry, V3};
pub use point::{normalize_angle, Angle, HPoint, IdealPoint, IDEAL_EPS, MAX_KLEIN_NORM};

use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use crate::error::{GeometryError, Result};

/// Tolerance used to decide that a point lies on a geodesic.
pub const ON_LINE_TOL: f64 = 1e-10;

/// An oriented hyperbolic line, a chord of the Klein disk.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(into = "GeodesicRepr", try_from = "GeodesicRepr")]
pub struct Geodesic {
    from: IdealPoint,
    to: IdealPoint,
    /// Unit spacelike normal; `asinh <P, normal>` is the signed distance.
    normal: V3,
}

#[derive(Serialize, Deserialize)]
struct GeodesicRepr {
    from: f64,
    to: f64,
}

impl From<Geodesic> for GeodesicRepr {
    fn from(g: Geodesic) -> Self {
        GeodesicRepr {
            from: g.from.theta(),
            to: g.to.theta(),
        }
    }
}

impl TryFrom<GeodesicRepr> for Geodesic {
    type Error = GeometryError;
    fn try_from(r: GeodesicRepr) -> Result<Self> {
        geodesic(IdealPoint::new(r.from), IdealPoint::new(r.to))
    }
}

impl PartialEq for Geodesic {
    fn eq(&self, other: &Self) -> bool {
        self.from == other.from && self.to == other.to
    }
}

impl Geodesic {
    #[inline]
    pub fn from(&self) -> IdealPoint {
        self.from
    }

    #[inline]
    pub fn to(&self) -> IdealPoint {
        self.to
    }

    /// Unit spacelike normal pointing to the positive (left) side.
    #[inline]
    pub fn normal(&self) -> V3 {
        self.normal
    }

    pub fn reversed(&self) -> Geodesic {
        Geodesic {
            from: self.to,
            to: self.from,
            normal: -self.normal,
        }
    }

    /// `sinh` of the signed distance from a lifted point.
    #[inline]
    pub fn sinh_signed_dist(&self, lifted: V3) -> f64 {
        lifted.mdot(self.normal)
    }

    /// The line through `p` and `q`, oriented from `p` toward `q`.
    pub fn through(p: HPoint, q: HPoint) -> Result<Geodesic> {
        let (pl, ql) = (p.lift(), q.lift());
        let t = V3::tangent_toward(pl, ql);
        if t.mdot(t) <= 0.0 || (p.x() == q.x() && p.y() == q.y()) {
            return Err(GeometryError::DegenerateRay);
        }
        Ok(Geodesic::through_dir(pl, t.unit_spacelike()))
    }

    /// The line through the lifted point `p` with unit tangent `t`, oriented along `t`.
    pub fn through_dir(p: V3, t: V3) -> Geodesic {
        let from = IdealPoint::from_null(p - t);
        let to = IdealPoint::from_null(p + t);
        Geodesic {
            from,
            to,
            normal: p.mcross(t).unit_spacelike(),
        }
    }

    /// The line `<P, n> = 0`, oriented so that `n` points to its left.
    pub fn from_normal(n: V3) -> Result<Geodesic> {
        let r = n.x.hypot(n.y);
        let c = n.z / r;
        if !(c.abs() < 1.0) {
            return Err(GeometryError::ArgumentOutOfRange(
                "normal does not describe a line through the disk".into(),
            ));
        }
        let psi = n.y.atan2(n.x);
        let a = c.acos();
        let g = geodesic(IdealPoint::new(psi + a), IdealPoint::new(psi - a))?;
        if g.normal.mdot(n) > 0.0 {
            Ok(g)
        } else {
            Ok(g.reversed())
        }
    }

    pub fn transformed(&self, iso: &Isometry) -> Geodesic {
        let from = self.from.transformed(iso);
        let to = self.to.transformed(iso);
        Geodesic {
            from,
            to,
            normal: iso.apply(self.normal),
        }
    }

    /// Both ideal endpoints on the unit circle, for rendering.
    pub fn chord(&self) -> ((f64, f64), (f64, f64)) {
        (self.from.unit(), self.to.unit())
    }
}

/// Hyperbolic distance between two points.
pub fn dist(p: HPoint, q: HPoint) -> f64 {
    // sinh^2 d = (|p - q|^2 - (p x q)^2) / ((1 - |p|^2)(1 - |q|^2)), accurate
    // for nearby points where the cosh form cancels.
    let (dx, dy) = (p.x() - q.x(), p.y() - q.y());
    let cr = p.x() * q.y() - p.y() * q.x();
    let num = (dx * dx + dy * dy - cr * cr).max(0.0);
    let den = (1.0 - p.norm_sq()) * (1.0 - q.norm_sq());
    (num / den).sqrt().asinh()
}

/// Distance between lifted points.
#[inline]
pub fn dist_lifted(p: V3, q: V3) -> f64 {
    let t = V3::tangent_toward(p, q);
    t.mdot(t).max(0.0).sqrt().asinh()
}

/// The geodesic from `from` to `to`.
pub fn geodesic(from: IdealPoint, to: IdealPoint) -> Result<Geodesic> {
    if from == to {
        return Err(GeometryError::CoincidentIdealPoints { theta: from.theta() });
    }
    let ((ux, uy), (vx, vy)) = (from.unit(), to.unit());
    let e = V3::new(ux, uy, 1.0).cross(V3::new(vx, vy, 1.0));
    let normal = V3::new(e.x, e.y, -e.z).unit_spacelike();
    Ok(Geodesic { from, to, normal })
}

/// Signed distance from `p` to `g`, positive on the left of `g`.
pub fn signed_dist(p: HPoint, g: &Geodesic) -> f64 {
    g.sinh_signed_dist(p.lift()).asinh()
}

/// Orthogonal projection of `p` onto `g`.
pub fn foot_of_perpendicular(p: HPoint, g: &Geodesic) -> HPoint {
    let pl = p.lift();
    let n = g.normal();
    let f = pl - n * pl.mdot(n);
    HPoint::from_lift(f).expect("projection of an interior point stays inside the disk")
}

/// The perpendicular to `g` through its point `p`, oriented from the right
/// side of `g` to the left side.
pub fn perpendicular_at(g: &Geodesic, p: HPoint) -> Result<Geodesic> {
    let s = signed_dist(p, g);
    if s.abs() > ON_LINE_TOL {
        return Err(GeometryError::PointNotOnGeodesic { distance: s.abs() });
    }
    let pl = p.lift();
    let n = g.normal();
    // Remove the residual component so the direction is exactly tangent at p.
    let t = (n + pl * n.mdot(pl)).unit_spacelike();
    Ok(Geodesic::through_dir(pl, t))
}

/// Hyperbolic angle at `p` between the rays toward `q` and `r`.
pub fn angle_at(p: HPoint, q: HPoint, r: HPoint) -> Result<Angle> {
    let pl = p.lift();
    angle_between_targets(pl, q.lift(), r.lift())
}

/// Angle at the lifted point `p` between the directions toward two targets,
/// each either a lifted point or a null vector.
pub fn angle_between_targets(p: V3, a: V3, b: V3) -> Result<Angle> {
    let u = V3::tangent_toward(p, a);
    let v = V3::tangent_toward(p, b);
    let (nu, nv) = (u.mdot(u), v.mdot(v));
    if !(nu > 1e-28) || !(nv > 1e-28) {
        return Err(GeometryError::DegenerateRay);
    }
    Ok(tangent_angle(p, u, v))
}

/// Unsigned angle between tangent vectors at `p`.
#[inline]
pub(crate) fn tangent_angle(p: V3, u: V3, v: V3) -> Angle {
    Angle::clamped(p.det(u, v).abs().atan2(u.mdot(v)))
}

/// Angle of parallelism: the `Π(d)` with `cos Π(d) = tanh d`.
pub fn parallel_angle(d: f64) -> Angle {
    Angle::clamped(d.tanh().acos())
}

/// Busemann function of the ideal point `x`, normalized to vanish at `base`.
pub fn busemann(x: IdealPoint, p: HPoint, base: HPoint) -> f64 {
    let xi = x.null_vector();
    busemann_lifted(xi, p.lift()) - busemann_lifted(xi, base.lift())
}

/// `ln(-<P, ξ>)`, the unnormalized Busemann function of the null vector `ξ`.
#[inline]
pub(crate) fn busemann_lifted(xi: V3, p: V3) -> f64 {
    (-p.mdot(xi)).ln()
}

/// The ideal point reached by the ray leaving `base` in direction `theta`,
/// measured in the frame obtained by boosting the model center's frame to `base`.
pub fn ray_ideal_point(base: HPoint, theta: f64) -> IdealPoint {
    let iso = Isometry::boost(base.x(), base.y());
    IdealPoint::new(theta).transformed(&iso)
}

/// Length of the common perpendicular of two ultraparallel lines.
pub fn line_line_distance(g1: &Geodesic, g2: &Geodesic) -> Result<f64> {
    let (a, b, c, d) = (g1.from(), g1.to(), g2.from(), g2.to());
    if a == c || a == d || b == c || b == d {
        return Err(GeometryError::LinesAsymptotic);
    }
    // Chords cross iff g2's endpoints fall on different arcs cut by g1.
    if on_ccw_arc(c.theta(), a.theta(), b.theta()) != on_ccw_arc(d.theta(), a.theta(), b.theta()) {
        return Err(GeometryError::LinesIntersect);
    }
    let m = g1.normal().mdot(g2.normal()).abs();
    Ok(m.max(1.0).acosh())
}

/// Whether `t` lies on the counterclockwise arc from `a` to `b`.
pub(crate) fn on_ccw_arc(t: f64, a: f64, b: f64) -> bool {
    let span = (b - a).rem_euclid(TAU);
    let off = (t - a).rem_euclid(TAU);
    off <= span
}
