//! Vectors of R^{2,1} and the Lorentz group acting on the hyperboloid.
//!
//! The hyperboloid sheet `<P, P> = -1, z > 0` carries the hyperbolic metric.
//! A Klein point `(x, y)` lifts to `(x, y, 1) / sqrt(1 - x^2 - y^2)`; an ideal
//! point at angle `theta` corresponds to the null ray through `(cos, sin, 1)`.
//! Geodesics are cut out by planes `<P, n> = 0` with `n` spacelike, and
//! `asinh <P, n>` is the signed distance from `P` to that geodesic when
//! `<n, n> = 1`.

use std::ops::{Add, Mul, Neg, Sub};

/// A vector of R^3 carrying the Minkowski form `x x' + y y' - z z'`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct V3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl V3 {
    pub const ORIGIN: V3 = V3 { x: 0.0, y: 0.0, z: 1.0 };
    pub const E1: V3 = V3 { x: 1.0, y: 0.0, z: 0.0 };
    pub const E2: V3 = V3 { x: 0.0, y: 1.0, z: 0.0 };

    #[inline]
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        V3 { x, y, z }
    }

    /// Minkowski bilinear form.
    #[inline]
    pub fn mdot(self, o: V3) -> f64 {
        self.x * o.x + self.y * o.y - self.z * o.z
    }

    /// Euclidean dot product.
    #[inline]
    pub fn dot(self, o: V3) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    #[inline]
    pub fn cross(self, o: V3) -> V3 {
        V3::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    /// Minkowski cross product `J (a x b)`; equivariant under SO+(2,1).
    #[inline]
    pub fn mcross(self, o: V3) -> V3 {
        let c = self.cross(o);
        V3::new(c.x, c.y, -c.z)
    }

    /// `det[self, b, c]`.
    #[inline]
    pub fn det(self, b: V3, c: V3) -> f64 {
        self.dot(b.cross(c))
    }

    /// Normalizes a spacelike vector to `<v, v> = 1`.
    #[inline]
    pub fn unit_spacelike(self) -> V3 {
        self * (1.0 / self.mdot(self).sqrt())
    }

    /// Normalizes a future timelike vector onto the hyperboloid.
    #[inline]
    pub fn unit_timelike(self) -> V3 {
        self * (1.0 / (-self.mdot(self)).sqrt())
    }

    /// Tangent vector at `p` (a hyperboloid point) pointing toward `target`,
    /// which may be timelike (a point) or null (an ideal point). Not normalized.
    #[inline]
    pub fn tangent_toward(p: V3, target: V3) -> V3 {
        target + p * target.mdot(p)
    }
}

impl Add for V3 {
    type Output = V3;
    #[inline]
    fn add(self, o: V3) -> V3 {
        V3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for V3 {
    type Output = V3;
    #[inline]
    fn sub(self, o: V3) -> V3 {
        V3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Mul<f64> for V3 {
    type Output = V3;
    #[inline]
    fn mul(self, s: f64) -> V3 {
        V3::new(self.x * s, self.y * s, self.z * s)
    }
}

impl Neg for V3 {
    type Output = V3;
    #[inline]
    fn neg(self) -> V3 {
        V3::new(-self.x, -self.y, -self.z)
    }
}

/// An orientation-preserving isometry of the hyperbolic plane, stored as a
/// matrix of SO+(2,1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Isometry {
    m: [[f64; 3]; 3],
}

impl Default for Isometry {
    fn default() -> Self {
        Self::identity()
    }
}

impl Isometry {
    pub const fn identity() -> Self {
        Isometry {
            m: [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
        }
    }

    /// Rotation about the model center by `angle` radians, counterclockwise.
    pub fn rotation(angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Isometry {
            m: [[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]],
        }
    }

    /// The boost carrying the model center to the Klein point `(vx, vy)`
    /// without rotation.
    pub fn boost(vx: f64, vy: f64) -> Self {
        let v2 = vx * vx + vy * vy;
        let g = 1.0 / (1.0 - v2).sqrt();
        // (g - 1) / v^2 rewritten to avoid 0/0 at the identity.
        let k = g * g / (g + 1.0);
        Isometry {
            m: [
                [1.0 + k * vx * vx, k * vx * vy, g * vx],
                [k * vx * vy, 1.0 + k * vy * vy, g * vy],
                [g * vx, g * vy, g],
            ],
        }
    }

    /// Translation along the x-axis diameter by hyperbolic distance `s`.
    pub fn translation_x(s: f64) -> Self {
        let (sh, ch) = (s.sinh(), s.cosh());
        Isometry {
            m: [[ch, 0.0, sh], [0.0, 1.0, 0.0], [sh, 0.0, ch]],
        }
    }

    #[inline]
    pub fn apply(&self, v: V3) -> V3 {
        let m = &self.m;
        V3::new(
            m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
            m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
            m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z,
        )
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Isometry) -> Isometry {
        let mut m = [[0.0; 3]; 3];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..3).map(|k| self.m[i][k] * other.m[k][j]).sum();
            }
        }
        Isometry { m }
    }

    /// Inverse via `J M^T J`.
    pub fn inverse(&self) -> Isometry {
        let m = &self.m;
        let sign = |i: usize, j: usize| if (i == 2) ^ (j == 2) { -1.0 } else { 1.0 };
        let mut out = [[0.0; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = sign(i, j) * m[j][i];
            }
        }
        Isometry { m: out }
    }

    /// Image of the standard frame: the columns `(E1, E2, ORIGIN)`.
    pub fn frame(&self) -> (V3, V3, V3) {
        (self.apply(V3::E1), self.apply(V3::E2), self.apply(V3::ORIGIN))
    }
}
