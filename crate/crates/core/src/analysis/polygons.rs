use std::f64::consts::PI;

use serde::Serialize;

use crate::bodies::ConvexBody;
use crate::error::{GeometryError, Result};
use crate::widths::width_profile;

fn check_n(n: usize) -> Result<()> {
    if n < 3 {
        return Err(GeometryError::ArgumentOutOfRange(format!("n = {n}, need n ≥ 3")));
    }
    Ok(())
}

/// `(k - 1)π / n` for `n = 2k - 1` or `n = 2k`.
fn half_angle(n: usize) -> f64 {
    let k = n / 2 + n % 2;
    (k - 1) as f64 * PI / n as f64
}

/// `tanh r_min` of the regular `n`-gon, by the printed odd and even formulas.
pub fn regular_polygon_rmin(n: usize) -> Result<f64> {
    check_n(n)?;
    let a = half_angle(n);
    Ok(if n % 2 == 1 {
        let s = (PI / n as f64).sin();
        (-1.0 + (1.0 + 4.0 * s / a.tan()).sqrt()) / (2.0 * a.cos())
    } else {
        1.0 / (a.cos().powi(2) + a.tan().powi(2)).sqrt()
    })
}

/// Four-digit reference values of `tanh r_min` for `n = 3..=12`.
pub const TABLE1_VALUES: [f64; 10] = [
    0.7321, 0.8165, 0.5309, 0.5547, 0.4080, 0.4091, 0.3286, 0.3233, 0.2739, 0.2673,
];

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Table1Row {
    pub n: usize,
    pub tanh_rmin: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Table1 {
    pub rows: Vec<Table1Row>,
    /// Both the odd-`n` and the even-`n` subsequences strictly decrease.
    pub odd_decreasing: bool,
    pub even_decreasing: bool,
    /// The `n` at which the value exceeds the one before it.
    pub increases_at: Vec<usize>,
    /// First odd `n = 2k - 1` whose value exceeds the value at `2k`.
    pub pair_sign_change: Option<usize>,
}

/// `tanh r_min` for `n = 3..=12`.
pub fn table1() -> Table1 {
    let rows: Vec<Table1Row> = (3..=12)
        .map(|n| Table1Row {
            n,
            tanh_rmin: regular_polygon_rmin(n).expect("n ≥ 3"),
        })
        .collect();
    let t = |n: usize| rows[n - 3].tanh_rmin;
    let decreasing = |start: usize| (start..=10).step_by(2).all(|n| t(n + 2) < t(n));
    Table1 {
        odd_decreasing: decreasing(3),
        even_decreasing: decreasing(4),
        increases_at: (4..=12).filter(|&n| t(n) > t(n - 1)).collect(),
        pair_sign_change: (3..=11).step_by(2).find(|&n| t(n) > t(n + 1)),
        rows,
    }
}

/// The printed width of a regular polygon against its geometry.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PolygonWidthReport {
    pub n: usize,
    pub r: f64,
    pub tanh_rmin: f64,
    pub rmin: f64,
    /// `sinh(d/2)` by the printed formula.
    pub sinh_half_d: f64,
    pub d_formula: f64,
    /// Longest diagonal of the polygon.
    pub d_geometric: f64,
    pub numeric_profile_min: f64,
    pub numeric_profile_max: f64,
    /// The printed `d` differs from the diagonal or from the width profile
    /// by more than `1e-3`.
    pub discrepancy_flag: bool,
}

/// [`regular_polygon_width_formula_with`] at 180 directions.
pub fn regular_polygon_width_formula(n: usize, r: f64) -> Result<PolygonWidthReport> {
    regular_polygon_width_formula_with(n, r, 180)
}

pub fn regular_polygon_width_formula_with(n: usize, r: f64, m: usize) -> Result<PolygonWidthReport> {
    check_n(n)?;
    let k = ConvexBody::regular_polygon(n, r)?;
    let tanh_rmin = regular_polygon_rmin(n)?;
    let sinh_half_d = r.sinh() / half_angle(n).sin();
    let d_formula = 2.0 * sinh_half_d.asinh();
    let d_geometric = k.diameter().length;
    let p = width_profile(&k, m);
    let off = |v: f64| (v - d_formula).abs() > 1e-3;
    Ok(PolygonWidthReport {
        n,
        r,
        tanh_rmin,
        rmin: tanh_rmin.atanh(),
        sinh_half_d,
        d_formula,
        d_geometric,
        numeric_profile_min: p.inf.value,
        numeric_profile_max: p.sup.value,
        discrepancy_flag: off(d_geometric) || off(p.inf.value) || off(p.sup.value),
    })
}
