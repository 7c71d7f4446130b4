//! Closed-form boundary pieces.
//!
//! Each piece is a curve `P(t) = a0 + a1 f1(t) + a2 f2(t)` on the hyperboloid,
//! with `(f1, f2) = (cos, sin)` for circle arcs and `(cosh, sinh)` for geodesic
//! segments and hypercycle arcs. Any Minkowski pairing with a fixed vector is
//! then a trigonometric or hyperbolic polynomial of degree one in `t`, and the
//! extremes of such a pairing, or of a ratio of two of them, have closed-form
//! critical points.

use std::f64::consts::{PI, TAU};

use crate::kernel::{Isometry, V3};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Basis {
    Trig,
    Hyp,
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Piece {
    basis: Basis,
    a: [V3; 3],
    pub t0: f64,
    pub t1: f64,
    /// Arclength per unit parameter.
    speed: f64,
    /// Zero geodesic curvature.
    pub straight: bool,
}

/// An extreme value of a boundary functional and where it is attained.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Ext {
    pub value: f64,
    pub piece: usize,
    pub t: f64,
}

/// Up to six candidate parameters, stack allocated.
struct Cands {
    v: [f64; 6],
    n: usize,
}

impl Cands {
    fn new() -> Self {
        Cands { v: [0.0; 6], n: 0 }
    }

    fn push(&mut self, t: f64) {
        if self.n < self.v.len() {
            self.v[self.n] = t;
            self.n += 1;
        }
    }

    fn as_slice(&self) -> &[f64] {
        &self.v[..self.n]
    }
}

impl Piece {
    /// Geodesic segment between two hyperboloid points.
    pub fn geodesic(p: V3, q: V3) -> Piece {
        let t = V3::tangent_toward(p, q);
        let n2 = t.mdot(t);
        let len = n2.max(0.0).sqrt().asinh();
        let u = if n2 > 0.0 { t * (1.0 / n2.sqrt()) } else { V3::E1 };
        Piece {
            basis: Basis::Hyp,
            a: [V3::default(), p, u],
            t0: 0.0,
            t1: len,
            speed: 1.0,
            straight: true,
        }
    }

    /// Circle arc of radius `rho` about `center`, in the frame `(e1, e2)` at
    /// the center, for angles `phi0 ≤ φ ≤ phi1`.
    pub fn arc(center: V3, e1: V3, e2: V3, rho: f64, phi0: f64, phi1: f64) -> Piece {
        let (sh, ch) = (rho.sinh(), rho.cosh());
        Piece {
            basis: Basis::Trig,
            a: [center * ch, e1 * sh, e2 * sh],
            t0: phi0,
            t1: phi1,
            speed: sh,
            straight: false,
        }
    }

    /// Arc of the hypercycle at signed distance `h` from the line through `o`
    /// with unit tangent `u` and left normal `n`, for foot coordinates in
    /// `[t0, t1]`; `backward` traverses it against `u`.
    pub fn hypercycle(o: V3, u: V3, n: V3, h: f64, t0: f64, t1: f64, backward: bool) -> Piece {
        let (sh, ch) = (h.sinh(), h.cosh());
        let (u, t0, t1) = if backward { (-u, -t1, -t0) } else { (u, t0, t1) };
        Piece {
            basis: Basis::Hyp,
            a: [n * sh, o * ch, u * ch],
            t0,
            t1,
            speed: ch,
            straight: h == 0.0,
        }
    }

    pub fn transformed(&self, iso: &Isometry) -> Piece {
        Piece {
            a: [iso.apply(self.a[0]), iso.apply(self.a[1]), iso.apply(self.a[2])],
            ..*self
        }
    }

    #[inline]
    fn basis_values(&self, t: f64) -> (f64, f64) {
        match self.basis {
            Basis::Trig => {
                let (s, c) = t.sin_cos();
                (c, s)
            }
            Basis::Hyp => (t.cosh(), t.sinh()),
        }
    }

    #[inline]
    pub fn point(&self, t: f64) -> V3 {
        let (f1, f2) = self.basis_values(t);
        self.a[0] + self.a[1] * f1 + self.a[2] * f2
    }

    /// Unit tangent in the direction of increasing parameter.
    pub fn unit_tangent(&self, t: f64) -> V3 {
        let (f1, f2) = self.basis_values(t);
        let d = match self.basis {
            Basis::Trig => self.a[2] * f1 - self.a[1] * f2,
            Basis::Hyp => self.a[1] * f2 + self.a[2] * f1,
        };
        d * (1.0 / self.speed)
    }

    #[inline]
    pub fn start(&self) -> V3 {
        self.point(self.t0)
    }

    #[inline]
    pub fn end(&self) -> V3 {
        self.point(self.t1)
    }

    #[inline]
    pub fn length(&self) -> f64 {
        (self.t1 - self.t0) * self.speed
    }

    #[inline]
    fn coeffs(&self, v: V3) -> [f64; 3] {
        [self.a[0].mdot(v), self.a[1].mdot(v), self.a[2].mdot(v)]
    }

    #[inline]
    fn eval(&self, c: &[f64; 3], t: f64) -> f64 {
        let (f1, f2) = self.basis_values(t);
        c[0] + c[1] * f1 + c[2] * f2
    }

    fn push_periodic(&self, base: f64, period: f64, out: &mut Cands) {
        let k0 = ((self.t0 - base) / period).ceil();
        let mut t = base + k0 * period;
        while t < self.t1 {
            out.push(t);
            t += period;
        }
    }

    fn push_hyp(&self, t: f64, out: &mut Cands) {
        if t > self.t0 && t < self.t1 {
            out.push(t);
        }
    }

    /// Stationary parameters of `c0 + c1 f1 + c2 f2` inside the open range.
    fn linear_critical(&self, c: &[f64; 3], out: &mut Cands) {
        match self.basis {
            Basis::Trig => {
                if c[1] != 0.0 || c[2] != 0.0 {
                    self.push_periodic(c[2].atan2(c[1]), PI, out);
                }
            }
            Basis::Hyp => {
                // c1 sinh t + c2 cosh t = 0
                if c[2].abs() < c[1].abs() {
                    self.push_hyp((-c[2] / c[1]).atanh(), out);
                }
            }
        }
    }

    /// Parameters in the open range solving `k + a f1(t) + b f2(t) = 0`.
    fn solve(&self, k: f64, a: f64, b: f64, out: &mut Cands) {
        match self.basis {
            Basis::Trig => {
                let r = a.hypot(b);
                if r > 0.0 && k.abs() <= r {
                    let psi = b.atan2(a);
                    let w = (-k / r).acos();
                    self.push_periodic(psi + w, TAU, out);
                    if w > 0.0 {
                        self.push_periodic(psi - w, TAU, out);
                    }
                }
            }
            Basis::Hyp => {
                // With u = e^t: (a + b) u^2 + 2 k u + (a - b) = 0.
                let (qa, qb, qc) = (a + b, 2.0 * k, a - b);
                let scale = qa.abs().max(qb.abs()).max(qc.abs());
                if scale == 0.0 {
                    return;
                }
                if qa.abs() <= 1e-15 * scale {
                    if qb != 0.0 {
                        let u = -qc / qb;
                        if u > 0.0 {
                            self.push_hyp(u.ln(), out);
                        }
                    }
                    return;
                }
                let disc = qb * qb - 4.0 * qa * qc;
                if disc < 0.0 {
                    return;
                }
                let q = -0.5 * (qb + qb.signum() * disc.sqrt());
                let r1 = q / qa;
                if r1 > 0.0 {
                    self.push_hyp(r1.ln(), out);
                }
                if q != 0.0 && disc > 0.0 {
                    let r2 = qc / q;
                    if r2 > 0.0 {
                        self.push_hyp(r2.ln(), out);
                    }
                }
            }
        }
    }

    /// Stationary parameters of the ratio `(c . f) / (d . f)`.
    fn ratio_critical(&self, c: &[f64; 3], d: &[f64; 3], out: &mut Cands) {
        let k = c[2] * d[1] - c[1] * d[2];
        let a = c[2] * d[0] - c[0] * d[2];
        let b = match self.basis {
            Basis::Trig => c[0] * d[1] - c[1] * d[0],
            Basis::Hyp => c[1] * d[0] - c[0] * d[1],
        };
        self.solve(k, a, b, out);
    }

    /// Points of the piece on the line `<P, v> = 0`, endpoints included.
    pub fn crossings(&self, v: V3) -> Vec<V3> {
        let c = self.coeffs(v);
        let mut cands = Cands::new();
        self.solve(c[0], c[1], c[2], &mut cands);
        let mut out: Vec<V3> = cands.as_slice().iter().map(|&t| self.point(t)).collect();
        for t in [self.t0, self.t1] {
            let p = self.point(t);
            if p.mdot(v).abs() <= 1e-13 * p.z {
                out.push(p);
            }
        }
        out
    }

    /// Minimum and maximum of `<P(t), v>` over the piece.
    pub fn linear_extremes(&self, v: V3) -> ((f64, f64), (f64, f64)) {
        let c = self.coeffs(v);
        let mut cands = Cands::new();
        self.linear_critical(&c, &mut cands);
        let mut lo = (self.eval(&c, self.t0), self.t0);
        let mut hi = lo;
        for &t in std::iter::once(&self.t1).chain(cands.as_slice()) {
            let f = self.eval(&c, t);
            if f < lo.0 {
                lo = (f, t);
            }
            if f > hi.0 {
                hi = (f, t);
            }
        }
        (lo, hi)
    }

    /// Maximum of `<P, num> / <P, den>` over the piece; `<P, den>` must keep
    /// one sign along the piece.
    pub fn ratio_max(&self, num: V3, den: V3) -> (f64, f64) {
        let c = self.coeffs(num);
        let d = self.coeffs(den);
        let mut cands = Cands::new();
        self.ratio_critical(&c, &d, &mut cands);
        let mut hi = (self.eval(&c, self.t0) / self.eval(&d, self.t0), self.t0);
        for &t in std::iter::once(&self.t1).chain(cands.as_slice()) {
            let f = self.eval(&c, t) / self.eval(&d, t);
            if f > hi.0 {
                hi = (f, t);
            }
        }
        hi
    }
}

/// Minimum and maximum of `<P, v>` over a closed chain of pieces.
pub(crate) fn linear_extremes(pieces: &[Piece], v: V3) -> (Ext, Ext) {
    let mut lo = Ext {
        value: f64::INFINITY,
        piece: 0,
        t: 0.0,
    };
    let mut hi = Ext {
        value: f64::NEG_INFINITY,
        piece: 0,
        t: 0.0,
    };
    for (i, p) in pieces.iter().enumerate() {
        let ((l, tl), (h, th)) = p.linear_extremes(v);
        if l < lo.value {
            lo = Ext {
                value: l,
                piece: i,
                t: tl,
            };
        }
        if h > hi.value {
            hi = Ext {
                value: h,
                piece: i,
                t: th,
            };
        }
    }
    (lo, hi)
}

/// Maximum of `<P, num> / <P, den>` over a chain of pieces.
pub(crate) fn ratio_max(pieces: &[Piece], num: V3, den: V3) -> Ext {
    let mut hi = Ext {
        value: f64::NEG_INFINITY,
        piece: 0,
        t: 0.0,
    };
    for (i, p) in pieces.iter().enumerate() {
        let (h, th) = p.ratio_max(num, den);
        if h > hi.value {
            hi = Ext {
                value: h,
                piece: i,
                t: th,
            };
        }
    }
    hi
}
