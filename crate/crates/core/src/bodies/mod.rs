//! Convex bodies of the hyperbolic plane.
//!
//! Every body carries an exact boundary made of circle arcs, geodesic
//! segments and hypercycle arcs (see [`boundary`]). Support strips, diameters
//! and boundary distances are evaluated on those pieces in closed form.

pub(crate) mod boundary;
mod generate;
mod spec;

pub use generate::{random_h_convex, DiskBodyConfig};
pub use spec::BodySpec;

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::error::{GeometryError, Result};
use crate::kernel::{dist_lifted, normalize_angle, Geodesic, HPoint, Isometry, V3};
use crate::optimize::golden_max;
use boundary::{linear_extremes, Ext, Piece};

/// Position and orientation of a body built in a standard frame.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Pose {
    pub center: HPoint,
    /// Rotation about `center`, in radians.
    #[serde(default)]
    pub rotation: f64,
}

impl Default for Pose {
    fn default() -> Self {
        Pose {
            center: HPoint::ORIGIN,
            rotation: 0.0,
        }
    }
}

impl Pose {
    pub fn isometry(&self) -> Isometry {
        Isometry::boost(self.center.x(), self.center.y()).compose(&Isometry::rotation(self.rotation))
    }

    fn from_isometry(m: &Isometry) -> Result<Pose> {
        let (e1, _, o) = m.frame();
        let center = HPoint::from_lift(o)?;
        let back = Isometry::boost(center.x(), center.y()).inverse();
        let r = back.apply(e1);
        Ok(Pose {
            center,
            rotation: normalize_angle(r.y.atan2(r.x)),
        })
    }
}

/// The family a body belongs to and its defining parameters.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "variant", rename_all = "kebab-case")]
pub enum BodyKind {
    Circle {
        center: HPoint,
        r: f64,
    },
    Segment {
        a: HPoint,
        b: HPoint,
    },
    GeodesicPolygon {
        vertices: Vec<HPoint>,
    },
    SymmetricHypercycleDomain {
        a: f64,
        h: f64,
        pose: Pose,
    },
    ReuleauxPolygon {
        n: usize,
        width: f64,
        pose: Pose,
    },
    SampledBody {
        boundary: Vec<HPoint>,
        declared_h_convex: bool,
    },
}

/// A compact convex body.
#[derive(Debug, Clone)]
pub struct ConvexBody {
    kind: BodyKind,
    pieces: Vec<Piece>,
    interior: HPoint,
}

/// The supporting strip of a body for a leading line.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Strip {
    pub leading: Geodesic,
    pub d_plus: f64,
    pub d_minus: f64,
    pub touch_plus: HPoint,
    pub touch_minus: HPoint,
}

impl Strip {
    #[inline]
    pub fn width(&self) -> f64 {
        self.d_plus + self.d_minus
    }
}

/// A chord of a body with its length.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Chord {
    pub p: HPoint,
    pub q: HPoint,
    pub length: f64,
}

/// Slack on `sinh` of signed distances when testing whether a line meets a body.
const HIT_TOL: f64 = 1e-12;

fn invalid(msg: impl Into<String>) -> GeometryError {
    GeometryError::InvalidBody(msg.into())
}

fn positive(name: &str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(invalid(format!("{name}: must be a positive finite length, got {v}")))
    }
}

fn to_point(v: V3) -> HPoint {
    HPoint::from_lift(v).expect("boundary point inside the model disk")
}

/// Euclidean cross product of `b - a` and `c - a` in Klein coordinates.
fn turn(a: HPoint, b: HPoint, c: HPoint) -> f64 {
    (b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x())
}

fn centroid(pts: &[HPoint]) -> HPoint {
    let n = pts.len() as f64;
    let (sx, sy) = pts.iter().fold((0.0, 0.0), |(x, y), p| (x + p.x(), y + p.y()));
    HPoint::new(sx / n, sy / n).expect("centroid of disk points is inside the disk")
}

fn closed_polygon(vertices: &[HPoint]) -> Vec<Piece> {
    let n = vertices.len();
    (0..n)
        .map(|i| Piece::geodesic(vertices[i].lift(), vertices[(i + 1) % n].lift()))
        .collect()
}

impl ConvexBody {
    pub fn circle(center: HPoint, r: f64) -> Result<ConvexBody> {
        positive("r", r)?;
        let (e1, e2, c) = Isometry::boost(center.x(), center.y()).frame();
        Ok(ConvexBody {
            kind: BodyKind::Circle { center, r },
            pieces: vec![Piece::arc(c, e1, e2, r, 0.0, TAU)],
            interior: center,
        })
    }

    pub fn segment(a: HPoint, b: HPoint) -> Result<ConvexBody> {
        if a == b {
            return Err(invalid("b: segment endpoints coincide"));
        }
        let (al, bl) = (a.lift(), b.lift());
        let mid = to_point((al + bl).unit_timelike());
        Ok(ConvexBody {
            kind: BodyKind::Segment { a, b },
            pieces: vec![Piece::geodesic(al, bl), Piece::geodesic(bl, al)],
            interior: mid,
        })
    }

    /// The segment of length `d` centred on the model center along the x-axis.
    pub fn symmetric_segment(d: f64) -> Result<ConvexBody> {
        positive("d", d)?;
        let x = (d / 2.0).tanh();
        ConvexBody::segment(HPoint::new(-x, 0.0)?, HPoint::new(x, 0.0)?)
    }

    /// A strictly convex geodesic polygon with counterclockwise vertices.
    pub fn polygon(vertices: Vec<HPoint>) -> Result<ConvexBody> {
        let n = vertices.len();
        if n < 3 {
            return Err(invalid(format!("vertices: need at least 3, got {n}")));
        }
        for i in 0..n {
            let (a, b) = (vertices[i], vertices[(i + 1) % n]);
            for (j, &v) in vertices.iter().enumerate() {
                if j == i || j == (i + 1) % n {
                    continue;
                }
                if !(turn(a, b, v) > 0.0) {
                    return Err(invalid(format!(
                        "vertices: not strictly convex and counterclockwise at edge {i}, vertex {j}"
                    )));
                }
            }
        }
        let pieces = closed_polygon(&vertices);
        let interior = centroid(&vertices);
        Ok(ConvexBody {
            kind: BodyKind::GeodesicPolygon { vertices },
            pieces,
            interior,
        })
    }

    /// Regular `n`-gon with circumradius `r` about the model center, first
    /// vertex on the positive x-axis.
    pub fn regular_polygon(n: usize, r: f64) -> Result<ConvexBody> {
        if n < 3 {
            return Err(invalid(format!("n: need at least 3 vertices, got {n}")));
        }
        positive("r", r)?;
        let vertices = (0..n)
            .map(|j| HPoint::polar(r, TAU * j as f64 / n as f64))
            .collect::<Result<Vec<_>>>()
            .map_err(|_| invalid("r: circumradius too large for double precision"))?;
        ConvexBody::polygon(vertices)
    }

    /// Reuleaux polygon with `n` (odd) vertices and width `d`.
    pub fn reuleaux(n: usize, d: f64, pose: Pose) -> Result<ConvexBody> {
        if n < 3 || n.is_multiple_of(2) {
            return Err(invalid(format!("n: must be odd and at least 3, got {n}")));
        }
        positive("d", d)?;
        let k = n.div_ceil(2);
        let r = reuleaux_circumradius(n, d);
        let iso = pose.isometry();
        let verts: Vec<V3> = (0..n)
            .map(|j| {
                let a = TAU * j as f64 / n as f64;
                iso.apply(V3::new(r.sinh() * a.cos(), r.sinh() * a.sin(), r.cosh()))
            })
            .collect();
        let pieces = (0..n)
            .map(|j| {
                let c = verts[(j + k) % n];
                let cp = to_point(c);
                let (e1, e2, c) = Isometry::boost(cp.x(), cp.y()).frame();
                let phi = |p: V3| {
                    let u = V3::tangent_toward(c, p);
                    u.mdot(e2).atan2(u.mdot(e1))
                };
                let p0 = phi(verts[j]);
                let mut p1 = phi(verts[(j + 1) % n]);
                if p1 < p0 {
                    p1 += TAU;
                }
                Piece::arc(c, e1, e2, d, p0, p1)
            })
            .collect();
        Ok(ConvexBody {
            kind: BodyKind::ReuleauxPolygon { n, width: d, pose },
            pieces,
            interior: pose.center,
        })
    }

    /// The domain bounded by the hypercycles at distance `h` from a line and
    /// the perpendiculars to that line at foot coordinates `±a`. The line is
    /// the x-axis of `pose`.
    pub fn hypercycle_domain(a: f64, h: f64, pose: Pose) -> Result<ConvexBody> {
        positive("a", a)?;
        positive("h", h)?;
        let iso = pose.isometry();
        let (u, n, o) = iso.frame();
        let corner = |t: f64, s: f64| n * s.sinh() + (o * t.cosh() + u * t.sinh()) * s.cosh();
        let pieces = vec![
            Piece::hypercycle(o, u, n, -h, -a, a, false),
            Piece::geodesic(corner(a, -h), corner(a, h)),
            Piece::hypercycle(o, u, n, h, -a, a, true),
            Piece::geodesic(corner(-a, h), corner(-a, -h)),
        ];
        Ok(ConvexBody {
            kind: BodyKind::SymmetricHypercycleDomain { a, h, pose },
            pieces,
            interior: pose.center,
        })
    }

    /// The geodesic quadrangle spanned by the corners of the hypercycle domain
    /// with the magic parameters: a regular quadrangle with diagonal `2 acosh √2`.
    pub fn magic_quadrangle() -> ConvexBody {
        let (a, h) = magic_parameters();
        let klein = |t: f64, s: f64| {
            let v = V3::new(t.sinh() * s.cosh(), s.sinh(), t.cosh() * s.cosh());
            to_point(v)
        };
        ConvexBody::polygon(vec![klein(a, -h), klein(a, h), klein(-a, h), klein(-a, -h)])
            .expect("magic quadrangle corners are in convex position")
    }

    /// A body given by boundary samples in convex position, counterclockwise.
    pub fn sampled(boundary: Vec<HPoint>, declared_h_convex: bool) -> Result<ConvexBody> {
        let n = boundary.len();
        if n < 16 {
            return Err(invalid(format!("boundary: need at least 16 points, got {n}")));
        }
        let mut winding = 0.0;
        for i in 0..n {
            let (a, b, c) = (boundary[i], boundary[(i + 1) % n], boundary[(i + 2) % n]);
            if !(turn(a, b, c) > 0.0) {
                return Err(invalid(format!(
                    "boundary: points {}..{} are not in convex counterclockwise position",
                    i,
                    (i + 2) % n
                )));
            }
            let d1 = (b.y() - a.y()).atan2(b.x() - a.x());
            let d2 = (c.y() - b.y()).atan2(c.x() - b.x());
            winding += (d2 - d1 + PI).rem_euclid(TAU) - PI;
        }
        if (winding - TAU).abs() > 1e-6 {
            return Err(invalid("boundary: curve winds more than once"));
        }
        let pieces = closed_polygon(&boundary);
        let interior = centroid(&boundary);
        Ok(ConvexBody {
            kind: BodyKind::SampledBody {
                boundary,
                declared_h_convex,
            },
            pieces,
            interior,
        })
    }

    /// A sampled body whose exact boundary is known piecewise.
    pub(crate) fn sampled_exact(pieces: Vec<Piece>, interior: HPoint, samples: usize) -> ConvexBody {
        let mut body = ConvexBody {
            kind: BodyKind::SampledBody {
                boundary: Vec::new(),
                declared_h_convex: true,
            },
            pieces,
            interior,
        };
        let pts = body.piece_samples(samples);
        body.kind = BodyKind::SampledBody {
            boundary: pts,
            declared_h_convex: true,
        };
        body
    }

    #[inline]
    pub fn kind(&self) -> &BodyKind {
        &self.kind
    }

    #[inline]
    pub(crate) fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    /// A point in the interior (for a segment, its midpoint).
    #[inline]
    pub fn interior_point(&self) -> HPoint {
        self.interior
    }

    /// Declared horocyclic convexity.
    pub fn is_h_convex(&self) -> bool {
        match &self.kind {
            BodyKind::Circle { .. } => true,
            BodyKind::SampledBody { declared_h_convex, .. } => *declared_h_convex,
            _ => false,
        }
    }

    pub fn is_segment(&self) -> bool {
        matches!(self.kind, BodyKind::Segment { .. })
    }

    /// Whether every boundary piece is a geodesic segment.
    pub fn is_polygonal(&self) -> bool {
        self.pieces.iter().all(|p| p.straight)
    }

    /// Short family name used in reports.
    pub fn family(&self) -> &'static str {
        match self.kind {
            BodyKind::Circle { .. } => "circle",
            BodyKind::Segment { .. } => "segment",
            BodyKind::GeodesicPolygon { .. } => "polygon",
            BodyKind::SymmetricHypercycleDomain { .. } => "hypercycle-domain",
            BodyKind::ReuleauxPolygon { .. } => "reuleaux",
            BodyKind::SampledBody { .. } => "sampled",
        }
    }

    pub fn perimeter(&self) -> f64 {
        self.pieces.iter().map(Piece::length).sum()
    }

    /// The images of the body under an isometry.
    pub fn transformed(&self, iso: &Isometry) -> Result<ConvexBody> {
        let map = |p: &HPoint| p.transformed(iso);
        let pose = |p: &Pose| Pose::from_isometry(&iso.compose(&p.isometry()));
        let kind = match &self.kind {
            BodyKind::Circle { center, r } => BodyKind::Circle {
                center: map(center)?,
                r: *r,
            },
            BodyKind::Segment { a, b } => BodyKind::Segment { a: map(a)?, b: map(b)? },
            BodyKind::GeodesicPolygon { vertices } => BodyKind::GeodesicPolygon {
                vertices: vertices.iter().map(map).collect::<Result<_>>()?,
            },
            BodyKind::SymmetricHypercycleDomain { a, h, pose: p } => BodyKind::SymmetricHypercycleDomain {
                a: *a,
                h: *h,
                pose: pose(p)?,
            },
            BodyKind::ReuleauxPolygon { n, width, pose: p } => BodyKind::ReuleauxPolygon {
                n: *n,
                width: *width,
                pose: pose(p)?,
            },
            BodyKind::SampledBody {
                boundary,
                declared_h_convex,
            } => BodyKind::SampledBody {
                boundary: boundary.iter().map(map).collect::<Result<_>>()?,
                declared_h_convex: *declared_h_convex,
            },
        };
        Ok(ConvexBody {
            kind,
            pieces: self.pieces.iter().map(|p| p.transformed(iso)).collect(),
            interior: map(&self.interior)?,
        })
    }

    /// Boundary point at a global parameter `s ∈ [0, pieces)`: the integer
    /// part picks the piece, the fraction runs linearly through its range.
    pub(crate) fn point_at(&self, s: f64) -> V3 {
        let n = self.pieces.len();
        let s = s.rem_euclid(n as f64);
        let i = (s.floor() as usize).min(n - 1);
        let p = &self.pieces[i];
        p.point(p.t0 + (s - i as f64) * (p.t1 - p.t0))
    }

    /// Arclength-balanced global parameters, always including every junction.
    pub(crate) fn sample_params(&self, m: usize) -> Vec<f64> {
        let np = self.pieces.len();
        let m = m.max(np);
        let lens: Vec<f64> = self.pieces.iter().map(Piece::length).collect();
        let total: f64 = lens.iter().sum();
        let raw: Vec<f64> = lens.iter().map(|l| m as f64 * l / total).collect();
        let mut counts: Vec<usize> = raw.iter().map(|r| (r.floor() as usize).max(1)).collect();
        let mut sum: usize = counts.iter().sum();
        while sum < m {
            let i = (0..np)
                .max_by(|&i, &j| (raw[i] - counts[i] as f64).total_cmp(&(raw[j] - counts[j] as f64)))
                .unwrap();
            counts[i] += 1;
            sum += 1;
        }
        while sum > m {
            let i = (0..np)
                .filter(|&i| counts[i] > 1)
                .min_by(|&i, &j| (raw[i] - counts[i] as f64).total_cmp(&(raw[j] - counts[j] as f64)))
                .unwrap();
            counts[i] -= 1;
            sum -= 1;
        }
        let mut out = Vec::with_capacity(m);
        for (i, &k) in counts.iter().enumerate() {
            for j in 0..k {
                out.push(i as f64 + j as f64 / k as f64);
            }
        }
        out
    }

    fn piece_samples(&self, m: usize) -> Vec<HPoint> {
        self.sample_params(m)
            .into_iter()
            .map(|s| to_point(self.point_at(s)))
            .collect()
    }

    /// `m` counterclockwise boundary points, spaced by arclength.
    ///
    /// Junctions between boundary pieces are always included, so a polygon
    /// with more than `m` vertices yields its vertices. A sampled body returns
    /// its stored samples and a segment returns `m` points from `a` to `b`.
    pub fn boundary_samples(&self, m: usize) -> Vec<HPoint> {
        match &self.kind {
            BodyKind::SampledBody { boundary, .. } => boundary.clone(),
            BodyKind::Segment { .. } => {
                let p = &self.pieces[0];
                let m = m.max(2);
                (0..m)
                    .map(|j| to_point(p.point(p.t0 + (p.t1 - p.t0) * j as f64 / (m - 1) as f64)))
                    .collect()
            }
            _ => self.piece_samples(m),
        }
    }

    /// Minimum and maximum over the boundary of `<P, v>`.
    pub(crate) fn linear_extremes(&self, v: V3) -> (Ext, Ext) {
        linear_extremes(&self.pieces, v)
    }

    /// The hit test used by the feasible-line searches: the line meets the
    /// closed body.
    #[inline]
    pub(crate) fn line_hits(&self, g: &Geodesic) -> bool {
        let (lo, hi) = self.linear_extremes(g.normal());
        lo.value <= HIT_TOL && hi.value >= -HIT_TOL
    }

    pub fn support_strip(&self, g: &Geodesic) -> Result<Strip> {
        let (lo, hi) = self.linear_extremes(g.normal());
        if hi.value < -HIT_TOL {
            return Err(GeometryError::LineMissesBody { gap: -hi.value.asinh() });
        }
        if lo.value > HIT_TOL {
            return Err(GeometryError::LineMissesBody { gap: lo.value.asinh() });
        }
        let point = |e: &Ext| {
            let p = &self.pieces[e.piece];
            to_point(p.point(e.t))
        };
        Ok(Strip {
            leading: *g,
            d_plus: hi.value.asinh().max(0.0),
            d_minus: (-lo.value.asinh()).max(0.0),
            touch_plus: point(&hi),
            touch_minus: point(&lo),
        })
    }

    /// Farthest boundary point from `p` and its distance.
    pub fn farthest_from(&self, p: HPoint) -> (HPoint, f64) {
        let (lo, _) = self.linear_extremes(p.lift());
        let q = self.pieces[lo.piece].point(lo.t);
        (to_point(q), (-lo.value).max(1.0).acosh())
    }

    /// Distance from `p` to the nearest boundary point, with that point.
    pub fn nearest_boundary(&self, p: HPoint) -> (HPoint, f64) {
        let (_, hi) = self.linear_extremes(p.lift());
        let q = self.pieces[hi.piece].point(hi.t);
        (to_point(q), dist_lifted(q, p.lift()))
    }

    /// Maximum pairwise distance with a witness chord.
    pub fn diameter(&self) -> Chord {
        if let BodyKind::Circle { r, .. } = self.kind {
            let p = &self.pieces[0];
            return Chord {
                p: to_point(p.point(0.0)),
                q: to_point(p.point(PI)),
                length: 2.0 * r,
            };
        }
        if self.is_polygonal() {
            let vs: Vec<V3> = self.pieces.iter().map(Piece::start).collect();
            let mut best = (f64::NEG_INFINITY, 0, 0);
            for i in 0..vs.len() {
                for j in i + 1..vs.len() {
                    let c = -vs[i].mdot(vs[j]);
                    if c > best.0 {
                        best = (c, i, j);
                    }
                }
            }
            let (p, q) = (vs[best.1], vs[best.2]);
            return Chord {
                p: to_point(p),
                q: to_point(q),
                length: dist_lifted(p, q),
            };
        }
        // Farthest-point distance is exact for a fixed endpoint; maximize it
        // along the boundary.
        let far = |s: f64| -self.linear_extremes(self.point_at(s)).0.value;
        let params = self.sample_params(512);
        let n = params.len();
        let vals: Vec<f64> = params.iter().map(|&s| far(s)).collect();
        let np = self.pieces.len() as f64;
        let mut order: Vec<usize> = (0..n)
            .filter(|&i| vals[i] >= vals[(i + n - 1) % n] && vals[i] >= vals[(i + 1) % n])
            .collect();
        order.sort_by(|&i, &j| vals[j].total_cmp(&vals[i]));
        order.truncate(3);
        let mut best = (params[order[0]], vals[order[0]]);
        for &i in &order {
            let mut lo = params[(i + n - 1) % n];
            let mut hi = params[(i + 1) % n];
            if lo > params[i] {
                lo -= np;
            }
            if hi < params[i] {
                hi += np;
            }
            let r = golden_max(far, lo, hi, 1e-12);
            if r.1 > best.1 {
                best = r;
            }
        }
        let p = self.point_at(best.0);
        let (lo, _) = self.linear_extremes(p);
        let q = self.pieces[lo.piece].point(lo.t);
        Chord {
            p: to_point(p),
            q: to_point(q),
            length: dist_lifted(p, q),
        }
    }

    /// Unit tangents at a boundary point along the boundary orientation:
    /// the incoming one and the outgoing one. They differ at corners.
    pub fn one_sided_tangents(&self, p: HPoint) -> Result<(V3, V3)> {
        const ON_BOUNDARY: f64 = 1e-8;
        let pl = p.lift();
        let (_, hi) = self.linear_extremes(pl);
        let i = hi.piece;
        let piece = &self.pieces[i];
        let d = dist_lifted(piece.point(hi.t), pl);
        if d > ON_BOUNDARY {
            return Err(GeometryError::PointNotOnBoundary { distance: d });
        }
        let n = self.pieces.len();
        let (prev, next) = (&self.pieces[(i + n - 1) % n], &self.pieces[(i + 1) % n]);
        let here = piece.unit_tangent(hi.t);
        let project = |t: V3| V3::tangent_toward(pl, t).unit_spacelike();
        if dist_lifted(piece.start(), pl) <= ON_BOUNDARY {
            Ok((
                project(prev.unit_tangent(prev.t1)),
                project(piece.unit_tangent(piece.t0)),
            ))
        } else if dist_lifted(piece.end(), pl) <= ON_BOUNDARY {
            Ok((
                project(piece.unit_tangent(piece.t1)),
                project(next.unit_tangent(next.t0)),
            ))
        } else {
            Ok((here, here))
        }
    }

    /// Whether `p` lies in the closed body.
    pub fn contains(&self, p: HPoint) -> bool {
        const TOL: f64 = 1e-10;
        match &self.kind {
            BodyKind::Circle { center, r } => crate::kernel::dist(*center, p) <= r + TOL,
            BodyKind::Segment { a, b } => {
                let g = Geodesic::through(*a, *b).expect("distinct endpoints");
                if crate::kernel::signed_dist(p, &g).abs() > TOL {
                    return false;
                }
                let (dx, dy) = (b.x() - a.x(), b.y() - a.y());
                let t = ((p.x() - a.x()) * dx + (p.y() - a.y()) * dy) / (dx * dx + dy * dy);
                (-TOL..=1.0 + TOL).contains(&t)
            }
            BodyKind::SymmetricHypercycleDomain { a, h, pose } => {
                let q = pose.isometry().inverse().apply(p.lift());
                q.y.asinh().abs() <= h + TOL && (q.x / q.z).atanh().abs() <= a + TOL
            }
            BodyKind::ReuleauxPolygon { n, width, pose } => {
                let r = reuleaux_circumradius(*n, *width);
                let iso = pose.isometry();
                (0..*n).all(|j| {
                    let a = TAU * j as f64 / *n as f64;
                    let v = iso.apply(V3::new(r.sinh() * a.cos(), r.sinh() * a.sin(), r.cosh()));
                    dist_lifted(v, p.lift()) <= width + TOL
                })
            }
            BodyKind::GeodesicPolygon { vertices } => in_convex_polygon(vertices, p),
            BodyKind::SampledBody { boundary, .. } => {
                if self.is_polygonal() {
                    in_convex_polygon(boundary, p)
                } else {
                    self.contains_by_ray(p)
                }
            }
        }
    }

    /// Exact membership for a piecewise boundary: compare `p` with the exit
    /// point of the ray from the interior point through `p`.
    fn contains_by_ray(&self, p: HPoint) -> bool {
        let c = self.interior;
        let Ok(g) = Geodesic::through(c, p) else {
            return true;
        };
        let (cl, pl) = (c.lift(), p.lift());
        let dir = V3::tangent_toward(cl, pl);
        let exit = self
            .pieces
            .iter()
            .flat_map(|pc| pc.crossings(g.normal()))
            .filter(|x| V3::tangent_toward(cl, *x).mdot(dir) > 0.0)
            .map(|x| -x.mdot(cl))
            .fold(f64::NEG_INFINITY, f64::max);
        -pl.mdot(cl) <= exit * (1.0 + 1e-12)
    }
}

fn in_convex_polygon(vertices: &[HPoint], p: HPoint) -> bool {
    let n = vertices.len();
    (0..n).all(|i| turn(vertices[i], vertices[(i + 1) % n], p) >= -1e-12)
}

/// Circumradius of the Reuleaux polygon with `n = 2k - 1` vertices and width `d`.
pub fn reuleaux_circumradius(n: usize, d: f64) -> f64 {
    let k = n.div_ceil(2);
    let s = ((k - 1) as f64 * PI / n as f64).sin();
    ((d / 2.0).sinh() / s).asinh()
}

/// The half-chord `a = acosh √(4/3)` and half-height `h = acosh √(3/2)` for
/// which the hypercycle domain's corners span the magic quadrangle.
pub fn magic_parameters() -> (f64, f64) {
    ((4.0f64 / 3.0).sqrt().acosh(), 1.5f64.sqrt().acosh())
}

pub fn boundary_samples(k: &ConvexBody, m: usize) -> Vec<HPoint> {
    k.boundary_samples(m)
}

pub fn support_strip(k: &ConvexBody, g: &Geodesic) -> Result<Strip> {
    k.support_strip(g)
}

pub fn make_regular_polygon(n: usize, r: f64) -> Result<ConvexBody> {
    ConvexBody::regular_polygon(n, r)
}

pub fn make_reuleaux(n: usize, d: f64) -> Result<ConvexBody> {
    ConvexBody::reuleaux(n, d, Pose::default())
}

pub fn make_hypercycle_domain(a: f64, h: f64) -> Result<ConvexBody> {
    ConvexBody::hypercycle_domain(a, h, Pose::default())
}

pub fn diameter(k: &ConvexBody) -> Chord {
    k.diameter()
}

pub fn contains(k: &ConvexBody, p: HPoint) -> bool {
    k.contains(p)
}
