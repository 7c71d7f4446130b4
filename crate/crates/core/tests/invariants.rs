use std::f64::consts::{PI, TAU};

use hypwidth_core::kernel::{
    angle_at, busemann, dist, foot_of_perpendicular, geodesic, line_line_distance, parallel_angle, signed_dist,
    Geodesic, V3,
};
use hypwidth_core::widths::{segment_width_at, strip_width, thickness, thickness_dir, width_new, width_profile};
use hypwidth_core::{ConvexBody, HPoint, IdealPoint, Isometry, Pose};
use proptest::prelude::*;

fn point() -> impl Strategy<Value = HPoint> {
    (0.0..0.9f64, 0.0..TAU).prop_map(|(r, a)| HPoint::new(r * a.cos(), r * a.sin()).unwrap())
}

fn line() -> impl Strategy<Value = Geodesic> {
    (0.0..TAU, 0.2..(TAU - 0.2)).prop_map(|(a, gap)| geodesic(IdealPoint::new(a), IdealPoint::new(a + gap)).unwrap())
}

fn pose() -> impl Strategy<Value = Pose> {
    (0.0..0.5f64, 0.0..TAU, 0.0..TAU).prop_map(|(r, a, rotation)| Pose {
        center: HPoint::new(r * a.cos(), r * a.sin()).unwrap(),
        rotation,
    })
}

fn body() -> impl Strategy<Value = ConvexBody> {
    prop_oneof![
        (point(), 0.2..1.5f64).prop_map(|(c, r)| ConvexBody::circle(c, r).unwrap()),
        (3usize..8, 0.3..1.5f64).prop_map(|(n, r)| ConvexBody::regular_polygon(n, r).unwrap()),
        (prop::sample::select(vec![3usize, 5, 7]), 0.3..1.5f64, pose())
            .prop_map(|(n, d, p)| ConvexBody::reuleaux(n, d, p).unwrap()),
        (0.3..1.0f64, 0.2..0.8f64, pose()).prop_map(|(a, h, p)| ConvexBody::hypercycle_domain(a, h, p).unwrap()),
        (0.2..2.0f64).prop_map(|d| ConvexBody::symmetric_segment(d).unwrap()),
    ]
}

fn midpoint(p: HPoint, q: HPoint) -> HPoint {
    HPoint::from_lift((p.lift() + q.lift()).unit_timelike()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn metric_axioms(p in point(), q in point(), r in point()) {
        prop_assert_eq!(dist(p, q), dist(q, p));
        prop_assert!(dist(p, r) <= dist(p, q) + dist(q, r) + 1e-12);
    }

    #[test]
    fn signed_distance_and_feet(p in point(), g in line()) {
        prop_assert_eq!(signed_dist(p, &g.reversed()), -signed_dist(p, &g));
        let f = foot_of_perpendicular(p, &g);
        prop_assert!((signed_dist(p, &g).abs() - dist(p, f)).abs() < 1e-10);
    }

    #[test]
    fn right_triangle_angle(p in point(), g in line(), s in -2.0..2.0f64) {
        let f = foot_of_perpendicular(p, &g);
        let m = dist(p, f);
        prop_assume!(m > 1e-3 && s.abs() > 1e-3);
        let fl = f.lift();
        let t = fl.mcross(g.normal()).unit_spacelike();
        let Ok(q) = HPoint::from_lift(fl * s.cosh() + t * s.sinh()) else { return Ok(()) };
        let c = dist(p, q);
        let gamma = angle_at(p, f, q).unwrap().radians();
        prop_assert!((gamma.cos() - m.tanh() / c.tanh()).abs() < 1e-10);
        prop_assert!(gamma < parallel_angle(m).radians() + 1e-12);
    }

    #[test]
    fn busemann_along_a_ray(base in point(), theta in 0.0..TAU, s in 0.0..3.0f64) {
        let x = IdealPoint::new(theta);
        let bl = base.lift();
        let t = V3::tangent_toward(bl, x.null_vector()).unit_spacelike();
        let p = HPoint::from_lift(bl * s.cosh() + t * s.sinh()).unwrap();
        prop_assert!((busemann(x, p, base) + s).abs() < 1e-10);
    }

    #[test]
    fn line_distance_symmetry(g in line(), h in line()) {
        if let Ok(d) = line_line_distance(&g, &h) {
            prop_assert!((line_line_distance(&h, &g).unwrap() - d).abs() < 1e-12);
            prop_assert!((line_line_distance(&g.reversed(), &h).unwrap() - d).abs() < 1e-12);
            prop_assert!((line_line_distance(&g, &h.reversed()).unwrap() - d).abs() < 1e-12);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bodies_are_convex(k in body(), i in 0usize..64, j in 0usize..64) {
        let pts = k.boundary_samples(64);
        prop_assert!(k.contains(midpoint(pts[i], pts[j])));
    }

    #[test]
    fn strip_witnesses(k in body(), g in line()) {
        if let Ok(s) = k.support_strip(&g) {
            prop_assert!((signed_dist(s.touch_plus, &g) - s.d_plus).abs() < 1e-9);
            prop_assert!((signed_dist(s.touch_minus, &g) + s.d_minus).abs() < 1e-9);
            prop_assert!(s.width() <= k.diameter().length + 1e-8);
        }
    }

    #[test]
    fn diameter_dominates_pairs(k in body(), i in 0usize..128, j in 0usize..128) {
        let pts = k.boundary_samples(128);
        let c = k.diameter();
        prop_assert!(dist(pts[i], pts[j]) <= c.length + 1e-9);
        prop_assert!((dist(c.p, c.q) - c.length).abs() < 1e-9);
    }

    #[test]
    fn width_chain(k in body(), theta in 0.0..TAU) {
        let x = IdealPoint::new(theta);
        let t = thickness(&k).value;
        let td = thickness_dir(&k, x);
        let w = width_new(&k, x);
        prop_assert!(t <= td.value + 1e-8);
        prop_assert!(td.value <= w.value + 1e-8);
        prop_assert!(w.value <= k.diameter().length + 1e-8);
        prop_assert!((strip_width(&k, &w.strip.leading).unwrap() - w.value).abs() < 1e-9);
    }

    #[test]
    fn segment_closed_form_matches_the_pipeline(d in 0.2..2.5f64, theta in 0.0..TAU) {
        let k = ConvexBody::symmetric_segment(d).unwrap();
        let (_, closed) = segment_width_at(d, theta).unwrap();
        prop_assert!((width_new(&k, IdealPoint::new(theta)).value - closed).abs() < 1e-5);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn profile_is_rotation_equivariant(k in body(), step in 0usize..36) {
        let m = 36;
        let rot = Isometry::rotation(TAU * step as f64 / m as f64);
        let moved = k.transformed(&rot).unwrap();
        let a = width_profile(&k, m).values;
        let b = width_profile(&moved, m).values;
        for i in 0..m {
            prop_assert!((b[(i + step) % m] - a[i]).abs() < 1e-8, "i={} {} vs {}", i, a[i], b[(i + step) % m]);
        }
    }
}

#[test]
fn right_angle_at_the_foot() {
    let p = HPoint::new(0.3, 0.4).unwrap();
    let g = geodesic(IdealPoint::new(0.0), IdealPoint::new(PI / 2.0)).unwrap();
    let f = foot_of_perpendicular(p, &g);
    let q = HPoint::from_lift(g.to().null_vector() * 1e-3 + f.lift()).unwrap();
    let a = angle_at(f, p, q).unwrap().radians();
    assert!((a - PI / 2.0).abs() < 1e-9);
}
