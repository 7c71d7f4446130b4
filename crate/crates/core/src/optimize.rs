//! One-dimensional search helpers shared by the width and analysis code.

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Golden-section search for a maximum of `f` on `[a, b]`.
pub(crate) fn golden_max(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while (b - a).abs() > tol {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    if fc >= fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

/// Golden-section search for a minimum of `f` on `[a, b]`.
pub(crate) fn golden_min(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> (f64, f64) {
    let (x, v) = golden_max(|t| -f(t), a, b, tol);
    (x, -v)
}

/// Bisection on a predicate that is false at `off` and true at `on`;
/// returns a point on the `on` side within `tol` of the transition.
pub(crate) fn bisect_predicate(pred: impl Fn(f64) -> bool, mut off: f64, mut on: f64, tol: f64) -> f64 {
    while (on - off).abs() > tol {
        let mid = 0.5 * (on + off);
        if mid == on || mid == off {
            break;
        }
        if pred(mid) {
            on = mid;
        } else {
            off = mid;
        }
    }
    on
}

/// Root of `f` on a bracket where it changes sign.
pub(crate) fn bisect_root(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> f64 {
    let mut fa = f(a);
    while (b - a).abs() > tol {
        let m = 0.5 * (a + b);
        if m == a || m == b {
            break;
        }
        let fm = f(m);
        if fm == 0.0 {
            return m;
        }
        if (fm < 0.0) == (fa < 0.0) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

/// Global maximum of a possibly multimodal `f` on `[a, b]`: a uniform grid of
/// `n` points, golden refinement around the best `top` local maxima, and the
/// smallest argument among near-ties so plateaus give a stable witness.
pub(crate) fn grid_max(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize, top: usize, tol: f64) -> (f64, f64) {
    let n = n.max(3);
    let h = (b - a) / (n - 1) as f64;
    let xs: Vec<f64> = (0..n).map(|i| if i + 1 == n { b } else { a + h * i as f64 }).collect();
    let ys: Vec<f64> = xs.iter().map(|&x| f(x)).collect();

    let mut peaks: Vec<usize> = (0..n)
        .filter(|&i| {
            let left = i == 0 || ys[i] >= ys[i - 1];
            let right = i + 1 == n || ys[i] >= ys[i + 1];
            left && right
        })
        .collect();
    peaks.sort_by(|&i, &j| ys[j].total_cmp(&ys[i]).then(i.cmp(&j)));
    peaks.truncate(top.max(1));

    let mut cands: Vec<(f64, f64)> = xs.iter().copied().zip(ys.iter().copied()).collect();
    for &i in &peaks {
        let lo = xs[i.saturating_sub(1)];
        let hi = xs[(i + 1).min(n - 1)];
        cands.push(golden_max(&f, lo, hi, tol));
    }
    let best = cands.iter().map(|c| c.1).fold(f64::NEG_INFINITY, f64::max);
    let cut = best - 1e-12 * best.abs().max(1.0);
    cands
        .into_iter()
        .filter(|c| c.1 >= cut)
        .min_by(|p, q| p.0.total_cmp(&q.0))
        .map(|(x, _)| (x, best))
        .unwrap_or((a, best))
}

/// Minimum counterpart of [`grid_max`].
pub(crate) fn grid_min(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize, top: usize, tol: f64) -> (f64, f64) {
    let (x, v) = grid_max(|t| -f(t), a, b, n, top, tol);
    (x, -v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_finds_parabola_peak() {
        let (x, v) = golden_max(|t| -(t - 0.3) * (t - 0.3) + 2.0, -1.0, 4.0, 1e-12);
        assert!((x - 0.3).abs() < 1e-6 && (v - 2.0).abs() < 1e-12);
    }

    #[test]
    fn grid_max_escapes_local_peaks() {
        let f = |t: f64| (3.0 * t).sin() + 0.3 * t;
        let (x, v) = grid_max(f, 0.0, 10.0, 512, 3, 1e-12);
        let brute = (0..=1_000_000)
            .map(|i| f(10.0 * i as f64 / 1e6))
            .fold(f64::NEG_INFINITY, f64::max);
        assert!(v >= brute - 1e-12);
        assert!((f(x) - v).abs() < 1e-12);
    }

    #[test]
    fn plateau_returns_smallest_witness() {
        let f = |t: f64| {
            if (2.0..=5.0).contains(&t) {
                1.0
            } else {
                1.0 - (t - 3.5).abs() * 0.1
            }
        };
        let (x, v) = grid_max(f, 0.0, 10.0, 512, 3, 1e-12);
        assert_eq!(v, 1.0);
        assert!((x - 2.0).abs() < 0.02);
    }

    #[test]
    fn bisection_helpers() {
        let r = bisect_root(|t| t * t - 2.0, 0.0, 2.0, 1e-14);
        assert!((r - 2f64.sqrt()).abs() < 1e-13);
        let e = bisect_predicate(|t| t > 0.75, 0.0, 1.0, 1e-13);
        assert!(e > 0.75 && e - 0.75 < 1e-12);
    }
}
