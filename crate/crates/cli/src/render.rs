use std::f64::consts::TAU;
use std::fmt::Write;

use hypwidth_core::widths::WidthProfile;

pub fn profile_csv(p: &WidthProfile) -> String {
    let mut out = String::from("theta,width\n");
    for (x, w) in p.directions.iter().zip(&p.values) {
        writeln!(out, "{},{}", x.theta(), w).unwrap();
    }
    out
}

/// Polar plot of a width profile on an 800×800 canvas.
pub fn profile_svg(p: &WidthProfile, title: &str) -> String {
    const SIZE: f64 = 800.0;
    const C: f64 = SIZE / 2.0;
    const R: f64 = 320.0;
    let scale = if p.sup.value > 0.0 { R / p.sup.value } else { 0.0 };
    let point = |theta: f64, w: f64| (C + w * scale * theta.cos(), C - w * scale * theta.sin());

    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="800" height="800" viewBox="0 0 800 800">"#
    )
    .unwrap();
    writeln!(s, r#"<rect width="800" height="800" fill="white"/>"#).unwrap();
    for k in 1..=4 {
        writeln!(
            s,
            r##"<circle cx="{C}" cy="{C}" r="{}" fill="none" stroke="#ddd"/>"##,
            R * k as f64 / 4.0
        )
        .unwrap();
    }
    for k in 0..12 {
        let (x, y) = (
            C + R * (TAU * k as f64 / 12.0).cos(),
            C - R * (TAU * k as f64 / 12.0).sin(),
        );
        writeln!(
            s,
            r##"<line x1="{C}" y1="{C}" x2="{x:.3}" y2="{y:.3}" stroke="#eee"/>"##
        )
        .unwrap();
    }
    let pts: Vec<String> = p
        .directions
        .iter()
        .zip(&p.values)
        .map(|(x, w)| {
            let (x, y) = point(x.theta(), *w);
            format!("{x:.3},{y:.3}")
        })
        .collect();
    writeln!(
        s,
        r##"<polygon points="{}" fill="none" stroke="#1f4e8c" stroke-width="2"/>"##,
        pts.join(" ")
    )
    .unwrap();
    for (label, e, color) in [("max", &p.sup, "#b22222"), ("min", &p.inf, "#228b22")] {
        let (x, y) = point(e.direction.theta(), e.value);
        writeln!(s, r#"<circle cx="{x:.3}" cy="{y:.3}" r="5" fill="{color}"/>"#).unwrap();
        writeln!(
            s,
            r#"<text x="20" y="{}" font-family="monospace" font-size="14" fill="{color}">{label} {:.9} at theta {:.6}</text>"#,
            if label == "max" { 50 } else { 70 },
            e.value,
            e.direction.theta()
        )
        .unwrap();
    }
    writeln!(
        s,
        r#"<text x="20" y="28" font-family="monospace" font-size="16">{}</text>"#,
        escape(title)
    )
    .unwrap();
    s.push_str("</svg>\n");
    s
}

fn escape(t: &str) -> String {
    t.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
