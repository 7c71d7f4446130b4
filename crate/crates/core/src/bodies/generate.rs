//! Random smooth h-convex bodies: outer parallel bodies of intersections of
//! metric disks that all contain the model center.

use std::f64::consts::TAU;

use rand::Rng;

use super::boundary::Piece;
use super::ConvexBody;
use crate::kernel::{normalize_angle, HPoint, Isometry, V3};

/// Parameters of [`random_h_convex`].
#[derive(Debug, Clone, PartialEq)]
pub struct DiskBodyConfig {
    pub min_disks: usize,
    pub max_disks: usize,
    /// Disk radii are drawn uniformly from this range.
    pub radius: (f64, f64),
    /// Offset distance rounding the corners.
    pub offset: (f64, f64),
    /// Number of stored boundary samples.
    pub samples: usize,
}

impl Default for DiskBodyConfig {
    fn default() -> Self {
        DiskBodyConfig {
            min_disks: 3,
            max_disks: 5,
            radius: (0.5, 1.4),
            offset: (0.05, 0.15),
            samples: 2048,
        }
    }
}

struct Disk {
    center: V3,
    e1: V3,
    e2: V3,
    rho: f64,
}

struct Arc {
    disk: usize,
    phi0: f64,
    phi1: f64,
}

fn intersect(a: &[(f64, f64)], b: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    for &(a0, a1) in a {
        for &(b0, b1) in b {
            let (lo, hi) = (a0.max(b0), a1.min(b1));
            if hi > lo {
                out.push((lo, hi));
            }
        }
    }
    out
}

/// Angles of the circle of disk `i` lying in every other disk, as arcs.
fn boundary_arcs(disks: &[Disk], i: usize) -> Vec<(f64, f64)> {
    let d = &disks[i];
    let (sh, ch) = (d.rho.sinh(), d.rho.cosh());
    let mut allowed = vec![(0.0, TAU)];
    for (j, o) in disks.iter().enumerate() {
        if j == i {
            continue;
        }
        // -<P(φ), C_j> = a + b cos(φ - ψ) must stay below cosh ρ_j.
        let a = -ch * d.center.mdot(o.center);
        let bx = -sh * d.e1.mdot(o.center);
        let by = -sh * d.e2.mdot(o.center);
        let b = bx.hypot(by);
        let bound = o.rho.cosh();
        if a + b <= bound {
            continue;
        }
        if a - b >= bound {
            return Vec::new();
        }
        let w = ((bound - a) / b).acos();
        let s = normalize_angle(by.atan2(bx) + w);
        let len = TAU - 2.0 * w;
        let arc = if s + len <= TAU {
            vec![(s, s + len)]
        } else {
            vec![(s, TAU), (0.0, s + len - TAU)]
        };
        allowed = intersect(&allowed, &arc);
    }
    allowed.sort_by(|p, q| p.0.total_cmp(&q.0));
    // Rejoin an arc split at angle zero.
    if allowed.len() >= 2 && allowed[0].0 == 0.0 && allowed[allowed.len() - 1].1 == TAU {
        let first = allowed.remove(0);
        let last = allowed.last_mut().unwrap();
        last.1 = TAU + first.1;
    }
    allowed.retain(|(a, b)| b - a > 1e-9);
    allowed
}

fn klein_angle(v: V3) -> f64 {
    normalize_angle(v.y.atan2(v.x))
}

fn outward(p: V3, center: V3) -> V3 {
    (-V3::tangent_toward(p, center)).unit_spacelike()
}

/// Builds the rounded disk intersection, or `None` when the arrangement is
/// degenerate.
fn build(disks: &[Disk], eps: f64, samples: usize) -> Option<ConvexBody> {
    let mut arcs: Vec<Arc> = Vec::new();
    for i in 0..disks.len() {
        for (phi0, phi1) in boundary_arcs(disks, i) {
            arcs.push(Arc { disk: i, phi0, phi1 });
        }
    }
    if arcs.len() < 3 {
        return None;
    }
    let point = |a: &Arc, phi: f64| {
        let d = &disks[a.disk];
        d.center * d.rho.cosh() + (d.e1 * phi.cos() + d.e2 * phi.sin()) * d.rho.sinh()
    };
    arcs.sort_by(|p, q| {
        let mp = klein_angle(point(p, 0.5 * (p.phi0 + p.phi1)));
        let mq = klein_angle(point(q, 0.5 * (q.phi0 + q.phi1)));
        mp.total_cmp(&mq)
    });
    let n = arcs.len();
    let mut pieces = Vec::with_capacity(2 * n);
    for k in 0..n {
        let (a, b) = (&arcs[k], &arcs[(k + 1) % n]);
        let corner = point(a, a.phi1);
        if crate::kernel::dist_lifted(corner, point(b, b.phi0)) > 1e-9 {
            return None;
        }
        let d = &disks[a.disk];
        pieces.push(Piece::arc(d.center, d.e1, d.e2, d.rho + eps, a.phi0, a.phi1));
        let cp = HPoint::from_lift(corner).ok()?;
        let (f1, f2, c) = Isometry::boost(cp.x(), cp.y()).frame();
        let angle = |v: V3| v.mdot(f2).atan2(v.mdot(f1));
        let b_in = angle(outward(c, d.center));
        let mut b_out = angle(outward(c, disks[b.disk].center));
        if b_out < b_in {
            b_out += TAU;
        }
        pieces.push(Piece::arc(c, f1, f2, eps, b_in, b_out));
    }
    Some(ConvexBody::sampled_exact(pieces, HPoint::ORIGIN, samples))
}

/// A random smooth h-convex body: the `ε`-parallel body of an intersection of
/// at least three metric disks that all contain the model center.
///
/// The returned body is a sampled body declared h-convex; it keeps the exact
/// arc boundary for strip and distance evaluations.
pub fn random_h_convex<R: Rng + ?Sized>(rng: &mut R, cfg: &DiskBodyConfig) -> ConvexBody {
    loop {
        let count = rng.gen_range(cfg.min_disks.max(3)..=cfg.max_disks.max(cfg.min_disks).max(3));
        let disks: Vec<Disk> = (0..count)
            .map(|_| {
                let rho = rng.gen_range(cfg.radius.0..=cfg.radius.1);
                let off = rng.gen_range(0.0..=(0.8 * rho).max(0.05));
                let ang = rng.gen_range(0.0..TAU);
                let c = HPoint::polar(off, ang).expect("moderate offsets stay in the disk");
                let (e1, e2, center) = Isometry::boost(c.x(), c.y()).frame();
                Disk { center, e1, e2, rho }
            })
            .collect();
        let eps = rng.gen_range(cfg.offset.0..=cfg.offset.1);
        if let Some(body) = build(&disks, eps, cfg.samples) {
            return body;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::dist_lifted;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generated_boundary_is_closed_and_tangent_continuous() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let k = random_h_convex(&mut rng, &DiskBodyConfig::default());
            assert!(k.is_h_convex());
            let ps = k.pieces();
            for i in 0..ps.len() {
                let (a, b) = (&ps[i], &ps[(i + 1) % ps.len()]);
                assert!(dist_lifted(a.end(), b.start()) < 1e-9);
                let (ta, tb) = (a.unit_tangent(a.t1), b.unit_tangent(b.t0));
                assert!((ta.mdot(tb) - 1.0).abs() < 1e-8, "kink at junction {i}");
            }
            assert!(k.contains(HPoint::ORIGIN));
            assert_eq!(k.boundary_samples(0).len(), 2048);
        }
    }
}
