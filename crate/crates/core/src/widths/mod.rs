//! Strip widths, the ideal-point width function and thickness.
//!
//! For an ideal point `X` the leading lines `YX` that meet the body form a
//! closed arc of `Y` values. It is located by bisection from the line through
//! an interior point, and the strip width is then searched over it.

mod classic;
mod hypdomain;
mod segment;

pub use classic::{
    leading_line, symmetric_strip, width1_santalo, width2_fillmore, width3_leichtweiss, width4_jeronimo, Width2,
    Width3, Width4Match, Width4Scanner,
};
pub use hypdomain::{hypercycle_domain_width_forms, HypercycleWidthForms};
pub use segment::{
    segment_endpoints, segment_f, segment_f_argmax, segment_ideal_point, segment_width_at, segment_width_closed_form,
    SegmentBranch, SegmentWidthParams,
};

use std::f64::consts::TAU;

use rayon::prelude::*;
use serde::Serialize;

use crate::bodies::{ConvexBody, Strip};
use crate::error::Result;
use crate::kernel::{geodesic, Geodesic, IdealPoint, V3};
use crate::optimize::{bisect_predicate, golden_min, grid_max, grid_min};

/// Sampling and tolerance parameters of the line searches.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SearchConfig {
    /// Grid points over the feasible arc of `Y`.
    pub grid: usize,
    /// Local extrema refined by golden-section search.
    pub refine: usize,
    /// Angular tolerance of the feasible-arc bisection.
    pub arc_tol: f64,
    /// Angular tolerance of golden-section refinement.
    pub tol: f64,
    /// Directions scanned by [`thickness`].
    pub thickness_directions: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            grid: 512,
            refine: 3,
            arc_tol: 1e-12,
            tol: 1e-12,
            thickness_directions: 720,
        }
    }
}

/// The closed arc of ideal points `Y` for which the line `YX` meets the body,
/// as angle offsets from `X` in `(0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FeasibleArc {
    pub x: IdealPoint,
    pub lo: f64,
    pub hi: f64,
}

impl FeasibleArc {
    pub fn y(&self, offset: f64) -> IdealPoint {
        IdealPoint::new(self.x.theta() + offset)
    }

    pub fn line(&self, offset: f64) -> Option<Geodesic> {
        geodesic(self.y(offset), self.x).ok()
    }
}

/// A width-type extreme over the lines through one ideal point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DirectionalWidth {
    pub value: f64,
    pub x: IdealPoint,
    pub y: IdealPoint,
    pub strip: Strip,
}

pub fn feasible_arc(k: &ConvexBody, x: IdealPoint, cfg: &SearchConfig) -> FeasibleArc {
    let c = k.interior_point().lift();
    let t = V3::tangent_toward(c, x.null_vector()).unit_spacelike();
    let y0 = Geodesic::through_dir(c, t).from();
    let phi0 = (y0.theta() - x.theta()).rem_euclid(TAU);
    let arc = FeasibleArc { x, lo: phi0, hi: phi0 };
    let hits = |phi: f64| arc.line(phi).is_some_and(|g| k.line_hits(&g));
    FeasibleArc {
        x,
        lo: bisect_predicate(hits, 0.0, phi0, cfg.arc_tol),
        hi: bisect_predicate(hits, TAU, phi0, cfg.arc_tol),
    }
}

fn strip_at(k: &ConvexBody, arc: &FeasibleArc, phi: f64) -> Option<Strip> {
    arc.line(phi).and_then(|g| k.support_strip(&g).ok())
}

fn directional(k: &ConvexBody, x: IdealPoint, cfg: &SearchConfig, maximize: bool) -> DirectionalWidth {
    let arc = feasible_arc(k, x, cfg);
    let missing = if maximize { f64::NEG_INFINITY } else { f64::INFINITY };
    let f = |phi: f64| strip_at(k, &arc, phi).map_or(missing, |s| s.width());
    let (phi, _) = if maximize {
        grid_max(f, arc.lo, arc.hi, cfg.grid, cfg.refine, cfg.tol)
    } else {
        grid_min(f, arc.lo, arc.hi, cfg.grid, cfg.refine, cfg.tol)
    };
    let strip = strip_at(k, &arc, phi).expect("feasible arc lines meet the body");
    DirectionalWidth {
        value: strip.width(),
        x,
        y: arc.y(phi),
        strip,
    }
}

/// `d_K(g) = d⁺ + d⁻` for a line meeting the body.
pub fn strip_width(k: &ConvexBody, g: &Geodesic) -> Result<f64> {
    Ok(k.support_strip(g)?.width())
}

/// The width in the direction of `X`: the largest strip width over all lines
/// `YX` meeting the body, with a witness `Y`.
pub fn width_new(k: &ConvexBody, x: IdealPoint) -> DirectionalWidth {
    width_new_with(k, x, &SearchConfig::default())
}

pub fn width_new_with(k: &ConvexBody, x: IdealPoint, cfg: &SearchConfig) -> DirectionalWidth {
    directional(k, x, cfg, true)
}

/// The thickness in the direction of `X`: the smallest strip width over all
/// lines `YX` meeting the body.
pub fn thickness_dir(k: &ConvexBody, x: IdealPoint) -> DirectionalWidth {
    thickness_dir_with(k, x, &SearchConfig::default())
}

pub fn thickness_dir_with(k: &ConvexBody, x: IdealPoint, cfg: &SearchConfig) -> DirectionalWidth {
    directional(k, x, cfg, false)
}

/// The thickness: the infimum of [`thickness_dir`] over all ideal points.
pub fn thickness(k: &ConvexBody) -> DirectionalWidth {
    thickness_with(k, &SearchConfig::default())
}

pub fn thickness_with(k: &ConvexBody, cfg: &SearchConfig) -> DirectionalWidth {
    let m = cfg.thickness_directions.max(8);
    let step = TAU / m as f64;
    let vals: Vec<DirectionalWidth> = (0..m)
        .into_par_iter()
        .map(|i| thickness_dir_with(k, IdealPoint::new(step * i as f64), cfg))
        .collect();
    let mut best = vals[0];
    let mut order: Vec<usize> = (0..m)
        .filter(|&i| vals[i].value <= vals[(i + m - 1) % m].value && vals[i].value <= vals[(i + 1) % m].value)
        .collect();
    order.sort_by(|&i, &j| vals[i].value.total_cmp(&vals[j].value).then(i.cmp(&j)));
    order.truncate(cfg.refine.max(1));
    for &i in &order {
        if vals[i].value < best.value {
            best = vals[i];
        }
        let c = step * i as f64;
        let (theta, _) = golden_min(
            |t| thickness_dir_with(k, IdealPoint::new(t), cfg).value,
            c - step,
            c + step,
            1e-10,
        );
        let r = thickness_dir_with(k, IdealPoint::new(theta), cfg);
        if r.value < best.value {
            best = r;
        }
    }
    best
}

/// Extreme value of a width profile with its direction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProfileExtreme {
    pub value: f64,
    pub direction: IdealPoint,
}

/// Widths at uniformly spaced ideal points.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WidthProfile {
    pub directions: Vec<IdealPoint>,
    pub values: Vec<f64>,
    pub sup: ProfileExtreme,
    pub inf: ProfileExtreme,
}

impl WidthProfile {
    fn from_values(directions: Vec<IdealPoint>, values: Vec<f64>) -> WidthProfile {
        let (mut sup, mut inf) = (0, 0);
        for (i, v) in values.iter().enumerate() {
            if *v > values[sup] {
                sup = i;
            }
            if *v < values[inf] {
                inf = i;
            }
        }
        WidthProfile {
            sup: ProfileExtreme {
                value: values[sup],
                direction: directions[sup],
            },
            inf: ProfileExtreme {
                value: values[inf],
                direction: directions[inf],
            },
            directions,
            values,
        }
    }
}

/// [`width_new`] at `m` uniformly spaced ideal points starting at angle 0.
pub fn width_profile(k: &ConvexBody, m: usize) -> WidthProfile {
    width_profile_with(k, m, &SearchConfig::default())
}

pub fn width_profile_with(k: &ConvexBody, m: usize, cfg: &SearchConfig) -> WidthProfile {
    let m = m.max(8);
    let directions: Vec<IdealPoint> = (0..m).map(|i| IdealPoint::new(TAU * i as f64 / m as f64)).collect();
    let values: Vec<f64> = directions
        .par_iter()
        .map(|x| width_new_with(k, *x, cfg).value)
        .collect();
    WidthProfile::from_values(directions, values)
}
