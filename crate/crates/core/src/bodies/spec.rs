use serde::{Deserialize, Serialize};

use super::{ConvexBody, Pose};
use crate::error::{GeometryError, Result};
use crate::kernel::HPoint;

/// Serializable description of a body, as read from body files.
///
/// ```json
/// {"variant": "reuleaux", "n": 3, "d": 1.0}
/// {"variant": "polygon", "vertices": [[0.5, 0.0], [0.0, 0.5], [-0.5, -0.5]]}
/// ```
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "kebab-case")]
pub enum BodySpec {
    Circle {
        #[serde(default = "origin")]
        center: HPoint,
        r: f64,
    },
    /// Either both endpoints, or a length `d` for the segment centred on the
    /// model center along the x-axis.
    Segment {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        a: Option<HPoint>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        b: Option<HPoint>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        d: Option<f64>,
    },
    Polygon {
        vertices: Vec<HPoint>,
    },
    RegularPolygon {
        n: usize,
        r: f64,
    },
    Reuleaux {
        n: usize,
        d: f64,
        #[serde(default)]
        pose: Pose,
    },
    HypercycleDomain {
        a: f64,
        h: f64,
        #[serde(default)]
        pose: Pose,
    },
    MagicQuadrangle,
    Sampled {
        boundary: Vec<HPoint>,
        #[serde(default)]
        h_convex: bool,
    },
}

fn origin() -> HPoint {
    HPoint::ORIGIN
}

impl BodySpec {
    pub fn build(&self) -> Result<ConvexBody> {
        match self {
            BodySpec::Circle { center, r } => ConvexBody::circle(*center, *r),
            BodySpec::Segment { a, b, d } => match (a, b, d) {
                (Some(a), Some(b), None) => ConvexBody::segment(*a, *b),
                (None, None, Some(d)) => ConvexBody::symmetric_segment(*d),
                (_, _, Some(_)) => Err(GeometryError::InvalidBody(
                    "d: give either d or both endpoints a and b".into(),
                )),
                (None, _, None) => Err(GeometryError::InvalidBody("a: missing endpoint".into())),
                (_, None, None) => Err(GeometryError::InvalidBody("b: missing endpoint".into())),
            },
            BodySpec::Polygon { vertices } => ConvexBody::polygon(vertices.clone()),
            BodySpec::RegularPolygon { n, r } => ConvexBody::regular_polygon(*n, *r),
            BodySpec::Reuleaux { n, d, pose } => ConvexBody::reuleaux(*n, *d, *pose),
            BodySpec::HypercycleDomain { a, h, pose } => ConvexBody::hypercycle_domain(*a, *h, *pose),
            BodySpec::MagicQuadrangle => Ok(ConvexBody::magic_quadrangle()),
            BodySpec::Sampled { boundary, h_convex } => ConvexBody::sampled(boundary.clone(), *h_convex),
        }
    }
}
