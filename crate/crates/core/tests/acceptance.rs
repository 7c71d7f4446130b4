use std::f64::consts::{PI, TAU};
use std::time::{Duration, Instant};

use hypwidth_core::analysis::{
    blaschke_verify, double_normal_check, double_normal_deviation, is_constant_diameter, is_constant_shadow,
    is_constant_width, regular_polygon_rmin, table1, ConstancyVerdict, Witness, TABLE1_VALUES,
};
use hypwidth_core::bodies::{magic_parameters, random_h_convex, DiskBodyConfig};
use hypwidth_core::kernel::Geodesic;
use hypwidth_core::widths::{
    hypercycle_domain_width_forms, segment_f, segment_width_at, strip_width, thickness, width1_santalo,
    width2_fillmore, width3_leichtweiss, width_new, Width4Scanner,
};
use hypwidth_core::{Angle, ConvexBody, HPoint, IdealPoint, Pose};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

struct Outcome {
    pass: bool,
    detail: String,
    artifact: String,
}

fn outcome(pass: bool, detail: String, artifact: serde_json::Value) -> Outcome {
    Outcome {
        pass,
        detail,
        artifact: artifact.to_string(),
    }
}

fn disk_bodies(seed: u64, count: usize) -> Vec<ConvexBody> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_h_convex(&mut rng, &DiskBodyConfig::default()))
        .collect()
}

fn table_reproduction() -> Outcome {
    let t = table1();
    let worst = t
        .rows
        .iter()
        .zip(TABLE1_VALUES)
        .map(|(r, p)| (r.tanh_rmin - p).abs())
        .fold(0.0, f64::max);
    let e3 = (regular_polygon_rmin(3).unwrap() - (3f64.sqrt() - 1.0)).abs();
    let e4 = (regular_polygon_rmin(4).unwrap() - (2.0f64 / 3.0).sqrt()).abs();
    outcome(
        worst < 5e-5 && e3 < 1e-12 && e4 < 1e-12,
        format!("max |diff| {worst:.2e}, n=3 {e3:.1e}, n=4 {e4:.1e}"),
        json!(t),
    )
}

/// Root of a central-difference derivative of `f` by bisection.
fn derivative_root(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let h = 1e-5;
    let df = |t: f64| f(t + h) - f(t - h);
    for _ in 0..200 {
        let m = 0.5 * (lo + hi);
        if df(m) > 0.0 {
            lo = m;
        } else {
            hi = m;
        }
    }
    0.5 * (lo + hi)
}

fn segment_end_to_end() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut values = Vec::new();
    for d in [0.5, 1.0, 2.0] {
        let k = ConvexBody::symmetric_segment(d).unwrap();
        for i in 0..90 {
            let theta = TAU * i as f64 / 90.0;
            let (params, closed) = segment_width_at(d, theta).unwrap();
            let numeric = width_new(&k, IdealPoint::new(theta)).value;
            worst = worst.max((closed - numeric).abs());
            values.push(json!([d, theta, params.branch, closed, numeric]));
        }
    }
    let mut t_err: f64 = 0.0;
    for d in [0.5f64, 1.0, 2.0] {
        for j in 1..20 {
            let alpha = PI / 2.0 * j as f64 / 20.0;
            if alpha.cos() >= d.tanh() {
                continue;
            }
            let a = Angle::new(alpha).unwrap();
            let t = derivative_root(|t| segment_f(t, a, d), 0.0, d);
            t_err = t_err.max((t.tanh() - alpha.cos()).abs());
        }
    }
    outcome(
        worst < 1e-5 && t_err < 1e-8,
        format!("max |closed - numeric| {worst:.2e} over 270 directions, max |tanh t* - cos α| {t_err:.1e}"),
        json!(values),
    )
}

fn verdict_json(v: &ConstancyVerdict) -> serde_json::Value {
    json!(v)
}

fn constant_width_zoo() -> Outcome {
    let mut ok = true;
    let mut worst: f64 = 0.0;
    let mut shadow_worst: f64 = 0.0;
    let mut art = Vec::new();
    for r in [0.5, 1.0, 2.0] {
        let k = ConvexBody::circle(HPoint::ORIGIN, r).unwrap();
        let v = is_constant_width(&k, 1e-3, 360);
        let s = is_constant_shadow(&k, 1e-6, 1000);
        ok &= v.constant && s.constant;
        worst = worst.max(v.max - v.min);
        shadow_worst = shadow_worst.max(s.max - s.min);
        art.push(verdict_json(&v));
        art.push(verdict_json(&s));
    }
    for n in [3, 5, 7] {
        for d in [0.5, 1.0] {
            let k = ConvexBody::reuleaux(n, d, Pose::default()).unwrap();
            let v = is_constant_width(&k, 1e-3, 360);
            ok &= v.constant && (v.value - d).abs() < 1e-3;
            worst = worst.max(v.max - v.min);
            art.push(verdict_json(&v));
        }
    }
    outcome(
        ok,
        format!("width spread ≤ {worst:.2e}, circle shadow spread ≤ {shadow_worst:.2e}"),
        json!(art),
    )
}

fn magic_quadrangle() -> Outcome {
    let k = ConvexBody::magic_quadrangle();
    let (_, h) = magic_parameters();
    let lambda = 2.0 * 2f64.sqrt().acosh();
    let w = is_constant_width(&k, 1e-3, 360);
    let dm = is_constant_diameter(&k, 1e-3, 256);
    let sh = is_constant_shadow(&k, 1e-3, 1000);
    let witness = match sh.worst_witness {
        Witness::Line { line } => strip_width(&k, &line).unwrap(),
        _ => f64::INFINITY,
    };
    let thi = thickness(&k);
    let pass = w.constant
        && (w.value - lambda).abs() < 1e-3
        && !dm.constant
        && !sh.constant
        && witness <= 2.0 * h + 1e-6
        && thi.value <= 2.0 * h + 1e-6
        && thi.value < w.value;
    outcome(
        pass,
        format!(
            "λ {:.6} (2acosh√2 {lambda:.6}), diameter verdict {}, shadow verdict {} with witness width {witness:.9} ≤ 2h {:.9}, thickness {:.9}",
            w.value,
            dm.constant,
            sh.constant,
            2.0 * h,
            thi.value
        ),
        json!([w, dm, sh, thi.value]),
    )
}

fn inequality_chains() -> Outcome {
    let bodies = disk_bodies(5, 20);
    let mut w41: f64 = f64::INFINITY;
    let mut w23: f64 = f64::INFINITY;
    let mut wn3: f64 = f64::INFINITY;
    let mut errors = 0;
    let (mut dn_not_eq, mut eq_not_dn, mut dn_count, mut eq_count) = (0, 0, 0, 0);
    let mut art = Vec::new();
    for k in &bodies {
        let s = Width4Scanner::new(k, 0);
        let n = s.len();
        let mut check = |z: HPoint, lz: &Geodesic, matches: Vec<hypwidth_core::widths::Width4Match>| {
            let w1 = width1_santalo(k, z, lz).unwrap();
            for m in matches {
                let diff = m.value - w1;
                w41 = w41.min(diff);
                let dev = double_normal_deviation(k, z, m.w).unwrap();
                let dn = dev <= 1e-4;
                if dn {
                    dn_count += 1;
                    if diff > 1e-6 {
                        dn_not_eq += 1;
                    }
                }
                if diff <= 1e-8 {
                    eq_count += 1;
                    if dev > 1e-3 {
                        eq_not_dn += 1;
                    }
                }
                art.push(json!([w1, m.value, dev]));
            }
        };
        for j in 0..64 {
            let i = j * n / 64;
            match s.at_index(i) {
                Ok(ms) => check(s.point(i), &s.tangent_line(i), ms),
                Err(_) => errors += 1,
            }
        }
        let c = k.diameter();
        for z in [c.p, c.q] {
            let (_, fwd) = k.one_sided_tangents(z).unwrap();
            match s.at_point(z, fwd) {
                Ok(ms) => check(z, &Geodesic::through_dir(z.lift(), fwd), ms),
                Err(_) => errors += 1,
            }
        }
        let base = k.interior_point();
        for j in 0..64 {
            let theta = TAU * j as f64 / 64.0;
            let w3 = width3_leichtweiss(k, theta, base).unwrap();
            let w2 = width2_fillmore(k, theta, base);
            w23 = w23.min(w2.value - w3.value);
            wn3 = wn3.min(width_new(k, w3.leading.to()).value - w3.value);
            art.push(json!([w2.value, w3.value]));
        }
    }
    let pass =
        errors == 0 && w41 >= -1e-6 && w23 >= -1e-6 && wn3 >= -1e-6 && dn_not_eq == 0 && eq_not_dn == 0 && dn_count > 0;
    outcome(
        pass,
        format!(
            "min w4-w1 {w41:.1e}, min w2-w3 {w23:.2e}, min width-w3 {wn3:.2e}, {dn_count} double normals all equal, {eq_count} equalities all double normal (misses {dn_not_eq}/{eq_not_dn}), {errors} search errors"
        ),
        json!(art),
    )
}

fn theorem_chain() -> Outcome {
    let (rmin3, rmin4) = (
        regular_polygon_rmin(3).unwrap().atanh(),
        regular_polygon_rmin(4).unwrap().atanh(),
    );
    let zoo: Vec<(&str, ConvexBody)> = vec![
        (
            "circle",
            ConvexBody::circle(HPoint::new(0.1, -0.2).unwrap(), 0.8).unwrap(),
        ),
        ("reuleaux-3", ConvexBody::reuleaux(3, 1.0, Pose::default()).unwrap()),
        ("reuleaux-5", ConvexBody::reuleaux(5, 1.0, Pose::default()).unwrap()),
        ("reuleaux-7", ConvexBody::reuleaux(7, 1.0, Pose::default()).unwrap()),
        ("magic-quadrangle", ConvexBody::magic_quadrangle()),
        ("triangle", ConvexBody::regular_polygon(3, rmin3).unwrap()),
        ("square", ConvexBody::regular_polygon(4, rmin4).unwrap()),
        ("hexagon", ConvexBody::regular_polygon(6, 0.9).unwrap()),
        ("segment", ConvexBody::symmetric_segment(1.0).unwrap()),
    ];
    let mut pass = true;
    let mut lines = Vec::new();
    let mut art = Vec::new();
    for (name, k) in &zoo {
        let w = is_constant_width(k, 1e-3, 360).constant;
        let d = is_constant_diameter(k, 1e-3, 256).constant;
        let s = is_constant_shadow(k, 1e-3, 1000).constant;
        let chain = (!s || d) && (!d || w);
        let mut normals = true;
        if s {
            let diam = k.diameter().length;
            for p in k.boundary_samples(32) {
                let (q, len) = k.farthest_from(p);
                if (len - diam).abs() < 1e-9 {
                    normals &= double_normal_check(k, p, q, 1e-6).unwrap();
                }
            }
        }
        pass &= chain && normals;
        lines.push(format!("{name} s{} d{} w{}", s as u8, d as u8, w as u8));
        art.push(json!([name, s, d, w]));
    }
    outcome(pass, lines.join(", "), json!(art))
}

fn blaschke_bound() -> Outcome {
    let mut pass = true;
    let mut min_margin = f64::INFINITY;
    let mut art = Vec::new();
    let mut ratio = 0.0;
    for r in [0.01, 0.1, 0.5, 1.0, 2.0] {
        let k = ConvexBody::circle(HPoint::ORIGIN, r).unwrap();
        let rep = blaschke_verify(&k).unwrap();
        pass &= rep.pass;
        min_margin = min_margin.min(rep.margin);
        if r == 0.01 {
            ratio = rep.radius / rep.thickness;
        }
        art.push(json!(rep));
    }
    for k in disk_bodies(11, 10) {
        let rep = blaschke_verify(&k).unwrap();
        pass &= rep.pass;
        min_margin = min_margin.min(rep.margin);
        art.push(json!(rep));
    }
    pass &= (ratio - 1.0 / 3.0).abs() < 1e-3;
    outcome(
        pass,
        format!("min margin {min_margin:.4}, small-circle r/t {ratio:.6}"),
        json!(art),
    )
}

fn hypercycle_forms() -> Outcome {
    let (a, h) = magic_parameters();
    let f = hypercycle_domain_width_forms(a, h);
    let d = 2.0 * 2f64.sqrt().acosh();
    let pass = (f.alpha_chain - d).abs() < 1e-9;
    outcome(
        pass,
        format!(
            "α-chain {:.12} vs 2acosh√2 {d:.12}; compact {:.12} vs asinh 1 {:.12} (off by {:.1e}); disagreement flag {}",
            f.alpha_chain,
            f.compact,
            1f64.asinh(),
            (f.compact - 1f64.asinh()).abs(),
            f.disagreement
        ),
        json!(f),
    )
}

type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);

fn main() {
    let criteria: [Criterion; 8] = [
        ("Table 1 reproduction", table_reproduction, Some(Duration::from_secs(1))),
        (
            "segment width end-to-end",
            segment_end_to_end,
            Some(Duration::from_secs(30)),
        ),
        ("constant-width zoo", constant_width_zoo, Some(Duration::from_secs(120))),
        ("magic quadrangle separation", magic_quadrangle, None),
        ("inequality chains", inequality_chains, None),
        ("theorem chain", theorem_chain, None),
        ("Blaschke bound", blaschke_bound, Some(Duration::from_secs(120))),
        ("hypercycle-domain dual forms", hypercycle_forms, None),
    ];
    let mut failures = 0;
    let mut artifacts = Vec::new();
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        let elapsed = start.elapsed();
        let in_time = limit.is_none_or(|l| elapsed < l);
        let pass = o.pass && in_time;
        if !pass {
            failures += 1;
        }
        println!(
            "{} [{}] {name}: {} ({:.2} s{})",
            if pass { "PASS" } else { "FAIL" },
            i + 1,
            o.detail,
            elapsed.as_secs_f64(),
            limit.map_or(String::new(), |l| format!(", limit {} s", l.as_secs()))
        );
        artifacts.push(o.artifact);
    }
    let start = Instant::now();
    let same = criteria
        .iter()
        .zip(&artifacts)
        .filter(|((_, run, _), first)| run().artifact == **first)
        .count();
    let pass = same == criteria.len();
    if !pass {
        failures += 1;
    }
    println!(
        "{} [9] determinism: {same}/{} criteria reproduce byte-identical artifacts ({:.2} s)",
        if pass { "PASS" } else { "FAIL" },
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failures > 0 {
        println!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
}
