use serde::Serialize;

use super::segment::oblique;

/// The two printed routes to the width of a symmetric hypercycle domain,
/// evaluated side by side.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HypercycleWidthForms {
    /// Length `d` of the diagonals.
    pub diagonal: f64,
    /// The compact first-branch formula.
    pub compact: f64,
    /// The segment width formula of a diagonal at the derived angle `α`.
    pub alpha_chain: f64,
    pub sin_alpha: f64,
    pub cos_alpha: f64,
    /// The two values differ by more than `1e-9`.
    pub disagreement: bool,
}

/// Both forms of the first branch of the width of the domain with half-length
/// `a` and hypercycle distance `h`.
pub fn hypercycle_domain_width_forms(a: f64, h: f64) -> HypercycleWidthForms {
    let (ca, sa) = (a.cosh(), a.sinh());
    let (ch, sh, th) = (h.cosh(), h.sinh(), h.tanh());
    let cosh_d = ch * ch * (2.0 * a).cosh() + sh * sh;
    let diagonal = cosh_d.acosh();
    let s_half = (0.5 * (cosh_d - 1.0)).sqrt();
    let compact = (th * (ca + sa) / (ca * ca * ch * ch - 1.0).sqrt()).asinh();
    let sin_alpha = th * (ca - sa) / s_half;
    let cos_alpha = (ca * sh * sh + sa) / (ch * s_half);
    let alpha_chain = oblique(diagonal, sin_alpha.atan2(cos_alpha));
    HypercycleWidthForms {
        diagonal,
        compact,
        alpha_chain,
        sin_alpha,
        cos_alpha,
        disagreement: (compact - alpha_chain).abs() > 1e-9,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bodies::{magic_parameters, ConvexBody, Pose};
    use crate::kernel::{dist, HPoint};

    #[test]
    fn magic_parameters_expose_the_conflict() {
        let (a, h) = magic_parameters();
        let f = hypercycle_domain_width_forms(a, h);
        let d = 2.0 * 2f64.sqrt().acosh();
        assert!((f.diagonal - d).abs() < 1e-12);
        assert!((f.alpha_chain - d).abs() < 1e-9);
        assert!((f.compact - 1f64.asinh()).abs() < 1e-12);
        assert!(f.disagreement);
        assert!((f.sin_alpha - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn alpha_is_a_true_angle() {
        for (a, h) in [(0.3, 0.2), (0.8, 0.5), (1.5, 0.1), (0.2, 1.3)] {
            let f = hypercycle_domain_width_forms(a, h);
            assert!((f.sin_alpha.powi(2) + f.cos_alpha.powi(2) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn diagonal_matches_the_body() {
        let (a, h) = (0.6, 0.35);
        let k = ConvexBody::hypercycle_domain(a, h, Pose::default()).unwrap();
        let corner = |sx: f64, sy: f64| {
            let (x, y, z) = (sx * a.sinh() * h.cosh(), sy * h.sinh(), a.cosh() * h.cosh());
            HPoint::new(x / z, y / z).unwrap()
        };
        let d = dist(corner(1.0, 1.0), corner(-1.0, -1.0));
        assert!((hypercycle_domain_width_forms(a, h).diagonal - d).abs() < 1e-12);
        assert!(k.diameter().length >= d - 1e-9);
    }
}
