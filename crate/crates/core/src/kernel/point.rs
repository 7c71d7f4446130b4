use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use super::minkowski::{Isometry, V3};
use crate::error::{GeometryError, Result};

/// Points with Klein norm at or beyond this are rejected.
pub const MAX_KLEIN_NORM: f64 = 1.0 - 1e-12;

/// Ideal points closer than this (mod 2π) are the same point.
pub const IDEAL_EPS: f64 = 1e-12;

/// A point of the hyperbolic plane in Klein disk coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 2]", into = "[f64; 2]")]
pub struct HPoint {
    x: f64,
    y: f64,
}

impl HPoint {
    pub const ORIGIN: HPoint = HPoint { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Result<Self> {
        let n2 = x * x + y * y;
        if !n2.is_finite() || n2 >= MAX_KLEIN_NORM * MAX_KLEIN_NORM {
            return Err(GeometryError::OutsideDisk { x, y });
        }
        Ok(HPoint { x, y })
    }

    /// The point at hyperbolic distance `r` from the center in direction `angle`.
    pub fn polar(r: f64, angle: f64) -> Result<Self> {
        let t = r.tanh();
        HPoint::new(t * angle.cos(), t * angle.sin())
    }

    /// Projects a future timelike vector to its Klein point.
    pub fn from_lift(v: V3) -> Result<Self> {
        HPoint::new(v.x / v.z, v.y / v.z)
    }

    #[inline]
    pub fn x(&self) -> f64 {
        self.x
    }

    #[inline]
    pub fn y(&self) -> f64 {
        self.y
    }

    #[inline]
    pub fn norm_sq(&self) -> f64 {
        self.x * self.x + self.y * self.y
    }

    /// The hyperboloid point over this Klein point.
    #[inline]
    pub fn lift(&self) -> V3 {
        let g = 1.0 / (1.0 - self.norm_sq()).sqrt();
        V3::new(g * self.x, g * self.y, g)
    }

    pub fn transformed(&self, g: &Isometry) -> Result<Self> {
        HPoint::from_lift(g.apply(self.lift()))
    }
}

impl TryFrom<[f64; 2]> for HPoint {
    type Error = GeometryError;
    fn try_from(v: [f64; 2]) -> Result<Self> {
        HPoint::new(v[0], v[1])
    }
}

impl From<HPoint> for [f64; 2] {
    fn from(p: HPoint) -> Self {
        [p.x, p.y]
    }
}

/// A point at infinity: a point of the unit circle bounding the Klein disk.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct IdealPoint {
    theta: f64,
}

impl IdealPoint {
    pub fn new(theta: f64) -> Self {
        IdealPoint {
            theta: normalize_angle(theta),
        }
    }

    /// Ideal point of a (nonzero) null or spacelike-ish direction in the
    /// hyperboloid picture; only the spatial part's direction is used.
    pub fn from_null(v: V3) -> Self {
        IdealPoint::new(v.y.atan2(v.x))
    }

    #[inline]
    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// Position on the unit circle.
    #[inline]
    pub fn unit(&self) -> (f64, f64) {
        let (s, c) = self.theta.sin_cos();
        (c, s)
    }

    /// Null vector `(cos, sin, 1)`.
    #[inline]
    pub fn null_vector(&self) -> V3 {
        let (c, s) = self.unit();
        V3::new(c, s, 1.0)
    }

    pub fn transformed(&self, g: &Isometry) -> Self {
        IdealPoint::from_null(g.apply(self.null_vector()))
    }

    /// Angular separation on the circle, in `[0, π]`.
    pub fn separation(&self, other: &IdealPoint) -> f64 {
        let d = (self.theta - other.theta).abs() % TAU;
        d.min(TAU - d)
    }
}

impl PartialEq for IdealPoint {
    fn eq(&self, other: &Self) -> bool {
        self.separation(other) < IDEAL_EPS
    }
}

/// An angle in `[0, π]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct Angle(f64);

impl Angle {
    pub const RIGHT: Angle = Angle(PI / 2.0);

    pub fn new(value: f64) -> Result<Self> {
        if !(0.0..=PI).contains(&value) {
            return Err(GeometryError::ArgumentOutOfRange(format!(
                "angle {value} outside [0, π]"
            )));
        }
        Ok(Angle(value))
    }

    /// Clamps tiny overshoots from floating point into `[0, π]`.
    pub(crate) fn clamped(value: f64) -> Self {
        Angle(value.clamp(0.0, PI))
    }

    #[inline]
    pub fn radians(&self) -> f64 {
        self.0
    }
}

/// Reduces an angle to `[0, 2π)`.
pub fn normalize_angle(theta: f64) -> f64 {
    let t = theta.rem_euclid(TAU);
    if t >= TAU {
        0.0
    } else {
        t
    }
}
