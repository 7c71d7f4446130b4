//! Widths, thicknesses and constant-width tests for convex bodies of the
//! hyperbolic plane, computed in the Klein disk model.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analysis;
pub mod bodies;
pub mod error;
pub mod kernel;
mod optimize;
pub mod widths;

pub use bodies::{BodyKind, BodySpec, Chord, ConvexBody, Pose, Strip};
pub use error::{GeometryError, Result};
pub use kernel::{Angle, Geodesic, HPoint, IdealPoint, Isometry};
