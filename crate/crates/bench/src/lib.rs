//! Fixture bodies shared by the benchmarks.

use hypwidth_core::bodies::{random_h_convex, DiskBodyConfig};
use hypwidth_core::{ConvexBody, HPoint, Pose};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// One body per family, fixed across runs.
pub fn fixtures() -> Vec<(&'static str, ConvexBody)> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    vec![
        (
            "circle",
            ConvexBody::circle(HPoint::new(0.2, 0.1).unwrap(), 1.0).unwrap(),
        ),
        ("segment", ConvexBody::symmetric_segment(1.0).unwrap()),
        ("hexagon", ConvexBody::regular_polygon(6, 0.9).unwrap()),
        ("reuleaux-5", ConvexBody::reuleaux(5, 1.0, Pose::default()).unwrap()),
        ("magic-quadrangle", ConvexBody::magic_quadrangle()),
        (
            "disk-intersection",
            random_h_convex(&mut rng, &DiskBodyConfig::default()),
        ),
    ]
}
