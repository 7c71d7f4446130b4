//! Closed-form width function of a segment.
//!
//! The segment `AB` of length `d` sits on the x-axis with `A = (-tanh(d/2), 0)`
//! and `B = (tanh(d/2), 0)`. `X_AB` is the ideal point at angle 0, `X_BA` the
//! one at angle π. `X₁` and `X₂` are the endpoints of the perpendiculars at `B`
//! and `A`; between them the width equals `d`. For `X` between `X_AB` and `X₁`
//! the width depends on the angle `α` at `A` between `AB` and `AX`, and
//! symmetrically on the angle `β` at `B` between `X₂` and `X_BA`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{GeometryError, Result};
use crate::kernel::{angle_between_targets, normalize_angle, parallel_angle, Angle, HPoint, IdealPoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SegmentBranch {
    #[serde(rename = "at_AB")]
    AtAB,
    #[serde(rename = "alpha_branch")]
    AlphaBranch,
    #[serde(rename = "plateau")]
    Plateau,
    #[serde(rename = "beta_branch")]
    BetaBranch,
    #[serde(rename = "at_BA")]
    AtBA,
}

impl SegmentBranch {
    fn name(self) -> &'static str {
        match self {
            SegmentBranch::AtAB => "at_AB",
            SegmentBranch::AlphaBranch => "alpha_branch",
            SegmentBranch::Plateau => "plateau",
            SegmentBranch::BetaBranch => "beta_branch",
            SegmentBranch::AtBA => "at_BA",
        }
    }
}

/// Inputs of [`segment_width_closed_form`]. On the beta branch `alpha`
/// carries `β`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SegmentWidthParams {
    pub d: f64,
    pub alpha: Angle,
    pub branch: SegmentBranch,
}

pub(crate) fn oblique(d: f64, a: f64) -> f64 {
    (a.sin() * d.sinh() / (d.cosh() - a.cos() * d.sinh())).asinh()
}

/// The five-branch width of a segment of length `d`.
pub fn segment_width_closed_form(p: &SegmentWidthParams) -> Result<f64> {
    if !(p.d > 0.0) {
        return Err(GeometryError::ArgumentOutOfRange(format!("d = {}", p.d)));
    }
    let a = p.alpha.radians();
    let limit = parallel_angle(p.d).radians();
    let mismatch = || GeometryError::BranchMismatch {
        branch: p.branch.name(),
        angle: a,
        length: p.d,
    };
    match p.branch {
        SegmentBranch::AtAB | SegmentBranch::AtBA => {
            if a == 0.0 {
                Ok(0.0)
            } else {
                Err(mismatch())
            }
        }
        SegmentBranch::AlphaBranch | SegmentBranch::BetaBranch => {
            if a > 0.0 && a <= limit {
                Ok(oblique(p.d, a))
            } else {
                Err(mismatch())
            }
        }
        SegmentBranch::Plateau => {
            if a > limit && a <= PI / 2.0 {
                Ok(p.d)
            } else {
                Err(mismatch())
            }
        }
    }
}

/// The segment `AB` of length `d` in the standard position.
pub fn segment_endpoints(d: f64) -> (HPoint, HPoint) {
    let x = (d / 2.0).tanh();
    (
        HPoint::new(-x, 0.0).expect("segment endpoint inside the disk"),
        HPoint::new(x, 0.0).expect("segment endpoint inside the disk"),
    )
}

/// The ideal point at angle `theta` for the standard segment.
pub fn segment_ideal_point(theta: f64) -> IdealPoint {
    IdealPoint::new(theta)
}

/// Branch and angle parameter of the ideal point at angle `theta` for the
/// standard segment of length `d`, with the closed-form width there.
pub fn segment_width_at(d: f64, theta: f64) -> Result<(SegmentWidthParams, f64)> {
    let t = normalize_angle(theta);
    // The lower half mirrors the upper half.
    let t = if t > PI { 2.0 * PI - t } else { t };
    let (a, b) = segment_endpoints(d);
    let x = IdealPoint::new(t).null_vector();
    let params = if t == 0.0 {
        SegmentWidthParams {
            d,
            alpha: Angle::new(0.0)?,
            branch: SegmentBranch::AtAB,
        }
    } else if t == PI {
        SegmentWidthParams {
            d,
            alpha: Angle::new(0.0)?,
            branch: SegmentBranch::AtBA,
        }
    } else {
        let alpha = angle_between_targets(a.lift(), b.lift(), x)?;
        let beta = angle_between_targets(b.lift(), a.lift(), x)?;
        let limit = parallel_angle(d).radians();
        if alpha.radians() <= limit {
            SegmentWidthParams {
                d,
                alpha,
                branch: SegmentBranch::AlphaBranch,
            }
        } else if beta.radians() < limit {
            SegmentWidthParams {
                d,
                alpha: beta,
                branch: SegmentBranch::BetaBranch,
            }
        } else {
            SegmentWidthParams {
                d,
                alpha: Angle::new(alpha.radians().min(PI / 2.0))?,
                branch: SegmentBranch::Plateau,
            }
        }
    };
    let w = segment_width_closed_form(&params)?;
    Ok((params, w))
}

/// `f(t) = d_A + d_B`: the strip width of the line through `X` meeting the
/// segment at distance `t` from `A`, as a function of `t`.
pub fn segment_f(t: f64, alpha: Angle, d: f64) -> f64 {
    let a = alpha.radians();
    let sin_delta = a.sin() / (t.cosh() - a.cos() * t.sinh());
    (sin_delta * t.sinh()).asinh() + (sin_delta * (d - t).sinh()).asinh()
}

/// The maximizer of [`segment_f`] on `[0, d]`: `tanh t* = cos α`, clipped.
pub fn segment_f_argmax(alpha: Angle, d: f64) -> f64 {
    let c = alpha.radians().cos();
    if c <= f64::EPSILON {
        0.0
    } else if c >= d.tanh() {
        d
    } else {
        c.atanh()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ang(a: f64) -> Angle {
        Angle::new(a).unwrap()
    }

    #[test]
    fn branch_values() {
        let d = 1.0;
        let at = |branch, a| {
            segment_width_closed_form(&SegmentWidthParams {
                d,
                alpha: ang(a),
                branch,
            })
        };
        assert_eq!(at(SegmentBranch::AtAB, 0.0).unwrap(), 0.0);
        assert_eq!(at(SegmentBranch::Plateau, 1.2).unwrap(), 1.0);
        let lim = parallel_angle(d).radians();
        assert!((at(SegmentBranch::AlphaBranch, lim).unwrap() - d).abs() < 1e-12);
        let w = at(SegmentBranch::AlphaBranch, 0.5).unwrap();
        assert!(w > 0.0 && w < d);
        assert!(matches!(
            at(SegmentBranch::AlphaBranch, PI / 4.0),
            Err(GeometryError::BranchMismatch { .. })
        ));
    }

    #[test]
    fn printed_formula_at_the_sample_angle() {
        // Evaluating the oblique formula outside its branch gives 0.994662,
        // while the true width at that direction is the plateau value 1.
        assert!((oblique(1.0, PI / 4.0) - 0.994662).abs() < 1e-6);
        assert!((segment_f(1.0, ang(PI / 4.0), 1.0) - oblique(1.0, PI / 4.0)).abs() < 1e-12);
        let sup = (0..=10_000)
            .map(|i| segment_f(i as f64 * 1e-4, ang(PI / 4.0), 1.0))
            .fold(f64::MIN, f64::max);
        assert!((sup - 1.0).abs() < 1e-7);
    }

    #[test]
    fn f_maximizer_matches_brute_force() {
        for d in [0.5, 1.0, 2.0] {
            for a in [PI / 6.0, PI / 4.0, PI / 3.0] {
                let n = 10_000;
                let grid = (0..=n)
                    .map(|i| segment_f(d * i as f64 / n as f64, ang(a), d))
                    .fold(f64::MIN, f64::max);
                let ts = segment_f_argmax(ang(a), d);
                assert!((segment_f(ts, ang(a), d) - grid).abs() < 1e-6);
                assert!(segment_f(0.0, ang(a), d) <= segment_f(ts, ang(a), d) + 1e-15);
                let closed = if a <= parallel_angle(d).radians() {
                    oblique(d, a)
                } else {
                    d
                };
                assert!((grid - closed).abs() < 1e-6, "d={d} a={a}");
            }
        }
        assert_eq!(segment_f_argmax(ang(PI / 2.0), 1.0), 0.0);
    }

    #[test]
    fn f_argmax_is_a_stationary_point() {
        // Oracle: bisection on a central difference of f.
        let (a, d) = (ang(1.0), 3.0);
        let df = |t: f64| (segment_f(t + 1e-6, a, d) - segment_f(t - 1e-6, a, d)) / 2e-6;
        let (mut lo, mut hi) = (0.01, 2.9);
        for _ in 0..60 {
            let m = 0.5 * (lo + hi);
            if df(m) > 0.0 {
                lo = m;
            } else {
                hi = m;
            }
        }
        assert!((segment_f_argmax(a, d) - lo).abs() < 1e-6);
        assert!((segment_f_argmax(a, d).tanh() - a.radians().cos()).abs() < 1e-12);
    }

    #[test]
    fn branches_by_direction() {
        let d = 1.0;
        let t1 = (d / 2.0f64).tanh().acos();
        assert_eq!(segment_width_at(d, 0.0).unwrap().1, 0.0);
        assert_eq!(segment_width_at(d, PI).unwrap().1, 0.0);
        assert_eq!(segment_width_at(d, 0.5 * PI).unwrap().0.branch, SegmentBranch::Plateau);
        assert_eq!(
            segment_width_at(d, t1 - 1e-3).unwrap().0.branch,
            SegmentBranch::AlphaBranch
        );
        assert_eq!(
            segment_width_at(d, PI - t1 + 1e-3).unwrap().0.branch,
            SegmentBranch::BetaBranch
        );
        let (lo, hi) = (segment_width_at(d, -0.3).unwrap(), segment_width_at(d, 0.3).unwrap());
        assert_eq!(lo.0.branch, hi.0.branch);
        assert!((lo.1 - hi.1).abs() < 1e-12);
        // Continuity across X₁.
        let l = segment_width_at(d, t1 - 1e-9).unwrap().1;
        assert!((l - d).abs() < 1e-7);
    }
}
