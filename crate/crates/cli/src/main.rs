mod body;
mod render;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hypwidth_core::analysis::{
    blaschke_verify, is_constant_diameter, is_constant_shadow_with, is_constant_width_with, table1, TABLE1_VALUES,
};
use hypwidth_core::widths::{
    hypercycle_domain_width_forms, segment_width_at, width_new_with, width_profile_with, SearchConfig,
};
use hypwidth_core::{ConvexBody, GeometryError, IdealPoint};
use serde_json::json;

/// Widths, thickness and constancy checks for convex bodies in the hyperbolic plane.
#[derive(Parser)]
#[command(name = "hypwidth", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Width profile of a body over uniformly spaced ideal points.
    Profile(Params),
    /// Constancy or Blaschke check with a JSON verdict.
    Check {
        #[arg(long, value_enum)]
        kind: CheckKind,
        #[command(flatten)]
        params: Params,
    },
    /// `tanh r_min` of regular polygons for n = 3..12 against the reference table.
    Table1(Params),
    /// Closed-form segment width against the numeric width.
    SegmentWidth(Params),
    /// The two closed forms of the hypercycle-domain width against the numeric profile.
    HypdomainWidth(Params),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckKind {
    Width,
    Shadow,
    Diameter,
    Blaschke,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(Args)]
pub struct Params {
    /// Built-in body name or path to a JSON body file.
    #[arg(long, default_value = "circle")]
    body: String,
    #[arg(long)]
    r: Option<f64>,
    #[arg(long)]
    d: Option<f64>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    a: Option<f64>,
    #[arg(long)]
    h: Option<f64>,
    /// Number of ideal points (at least 8).
    #[arg(long, default_value_t = 360)]
    directions: usize,
    /// Line or boundary samples of the checks, grid size of the width search (at least 16).
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    out: Option<PathBuf>,
}

pub enum CliError {
    Input(String),
    Precondition(String),
}

impl Params {
    fn validate(&self) -> Result<(), CliError> {
        if self.directions < 8 {
            return Err(CliError::Input(format!(
                "--directions: {} is below the minimum 8",
                self.directions
            )));
        }
        if let Some(s) = self.samples.filter(|s| *s < 16) {
            return Err(CliError::Input(format!("--samples: {s} is below the minimum 16")));
        }
        if let Some(t) = self.tol.filter(|t| !(*t > 0.0 && t.is_finite())) {
            return Err(CliError::Input(format!("--tol: {t} must be positive")));
        }
        Ok(())
    }

    fn search(&self) -> SearchConfig {
        let mut cfg = SearchConfig::default();
        if let Some(s) = self.samples {
            cfg.grid = s;
        }
        cfg
    }

    fn format(&self, default: Format, allowed: &[Format]) -> Result<Format, CliError> {
        let f = self.format.unwrap_or(default);
        if allowed.contains(&f) {
            Ok(f)
        } else {
            Err(CliError::Input("--format: not supported by this command".into()))
        }
    }

    fn emit(&self, text: &str) -> Result<(), CliError> {
        match &self.out {
            Some(path) => {
                std::fs::write(path, text).map_err(|e| CliError::Input(format!("--out: {}: {e}", path.display())))
            }
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn profile(p: &Params) -> Result<bool, CliError> {
    let format = p.format(Format::Csv, &[Format::Csv, Format::Json, Format::Svg])?;
    let (spec, k) = body::load(&p.body, p)?;
    let prof = width_profile_with(&k, p.directions, &p.search());
    let text = match format {
        Format::Csv => render::profile_csv(&prof),
        Format::Svg => render::profile_svg(&prof, &format!("{} width profile", k.family())),
        Format::Json => {
            let rows: Vec<_> = prof
                .directions
                .iter()
                .zip(&prof.values)
                .map(|(x, w)| json!({"theta": x.theta(), "width": w}))
                .collect();
            pretty(&json!({
                "body": spec,
                "directions": p.directions,
                "rows": rows,
                "min": {"theta": prof.inf.direction.theta(), "width": prof.inf.value},
                "max": {"theta": prof.sup.direction.theta(), "width": prof.sup.value},
            }))
        }
    };
    p.emit(&text)?;
    Ok(true)
}

fn check(kind: CheckKind, p: &Params) -> Result<bool, CliError> {
    p.format(Format::Json, &[Format::Json])?;
    let (spec, k) = body::load(&p.body, p)?;
    let tol = p.tol.unwrap_or(hypwidth_core::analysis::DEFAULT_TOLERANCE);
    let cfg = p.search();
    let samples = p.samples.unwrap_or(1000);
    let (record, pass) = match kind {
        CheckKind::Blaschke => match blaschke_verify(&k) {
            Ok(rep) => (json!({"kind": "blaschke", "body": spec, "report": rep}), rep.pass),
            Err(GeometryError::NotHConvex) => {
                return Err(CliError::Precondition(format!(
                    "{}: the Blaschke bound needs an h-convex body; {} bodies are not declared h-convex",
                    p.body,
                    k.family()
                )))
            }
            Err(e) => return Err(CliError::Precondition(format!("{}: {e}", p.body))),
        },
        _ => {
            let v = match kind {
                CheckKind::Width => is_constant_width_with(&k, tol, p.directions, &cfg),
                CheckKind::Shadow => is_constant_shadow_with(&k, tol, samples, &cfg),
                _ => is_constant_diameter(&k, tol, samples),
            };
            (json!({"body": spec, "verdict": v}), v.constant)
        }
    };
    p.emit(&pretty(&record))?;
    Ok(pass)
}

fn table(p: &Params) -> Result<bool, CliError> {
    let format = p.format(Format::Csv, &[Format::Csv, Format::Json])?;
    let t = table1();
    let rows: Vec<(usize, f64, f64, f64)> = t
        .rows
        .iter()
        .zip(TABLE1_VALUES)
        .map(|(r, v)| (r.n, r.tanh_rmin, v, (r.tanh_rmin - v).abs()))
        .collect();
    let pass = rows.iter().all(|r| r.3 < 5e-5);
    let note = format!(
        "odd n decreasing: {}; even n decreasing: {}; value rises at n = {:?}; first odd n above its even successor: {}",
        t.odd_decreasing,
        t.even_decreasing,
        t.increases_at,
        t.pair_sign_change.map_or("none".into(), |n| n.to_string())
    );
    let text = match format {
        Format::Json => pretty(&json!({
            "rows": rows
                .iter()
                .map(|r| json!({"n": r.0, "tanh_rmin": r.1, "reference": r.2, "abs_diff": r.3}))
                .collect::<Vec<_>>(),
            "odd_decreasing": t.odd_decreasing,
            "even_decreasing": t.even_decreasing,
            "increases_at": t.increases_at,
            "pair_sign_change": t.pair_sign_change,
            "note": note,
        })),
        _ => {
            let mut s = String::from("n,tanh_rmin,reference,abs_diff\n");
            for r in &rows {
                writeln!(s, "{},{},{},{}", r.0, r.1, r.2, r.3).unwrap();
            }
            writeln!(s, "# {note}").unwrap();
            s
        }
    };
    p.emit(&text)?;
    Ok(pass)
}

fn segment_width(p: &Params) -> Result<bool, CliError> {
    let format = p.format(Format::Csv, &[Format::Csv, Format::Json])?;
    let d = p.d.unwrap_or(1.0);
    let k = ConvexBody::symmetric_segment(d).map_err(|e| CliError::Input(format!("--d: {e}")))?;
    let tol = p.tol.unwrap_or(1e-5);
    let cfg = p.search();
    let mut rows = Vec::with_capacity(p.directions);
    for i in 0..p.directions {
        let theta = std::f64::consts::TAU * i as f64 / p.directions as f64;
        let (params, closed) = segment_width_at(d, theta).map_err(|e| CliError::Input(e.to_string()))?;
        let numeric = width_new_with(&k, IdealPoint::new(theta), &cfg).value;
        rows.push((theta, params, closed, numeric));
    }
    let worst = rows.iter().map(|r| (r.2 - r.3).abs()).fold(0.0, f64::max);
    let text = match format {
        Format::Json => pretty(&json!({
            "d": d,
            "max_abs_diff": worst,
            "tolerance": tol,
            "rows": rows
                .iter()
                .map(|(t, prm, c, n)| json!({"theta": t, "params": prm, "closed_form": c, "numeric": n}))
                .collect::<Vec<_>>(),
        })),
        _ => {
            let mut s = String::from("theta,branch,angle,closed_form,numeric,abs_diff\n");
            for (t, prm, c, n) in &rows {
                let branch = serde_json::to_value(prm.branch).expect("serializable");
                writeln!(
                    s,
                    "{t},{},{},{c},{n},{}",
                    branch.as_str().unwrap_or_default(),
                    prm.alpha.radians(),
                    (c - n).abs()
                )
                .unwrap();
            }
            s
        }
    };
    p.emit(&text)?;
    Ok(worst <= tol)
}

fn hypdomain_width(p: &Params) -> Result<bool, CliError> {
    p.format(Format::Json, &[Format::Json])?;
    let (a, h) = body::hypdomain_params(p);
    let k = ConvexBody::hypercycle_domain(a, h, Default::default())
        .map_err(|e| CliError::Input(format!("--a/--h: {e}")))?;
    let forms = hypercycle_domain_width_forms(a, h);
    let prof = width_profile_with(&k, p.directions, &p.search());
    let near = |v: f64| (prof.sup.value - v).abs();
    p.emit(&pretty(&json!({
        "a": a,
        "h": h,
        "forms": forms,
        "numeric_min": prof.inf.value,
        "numeric_max": prof.sup.value,
        "closest_form": if near(forms.alpha_chain) <= near(forms.compact) { "alpha_chain" } else { "compact" },
    })))?;
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let run = |p: &Params, f: &dyn Fn(&Params) -> Result<bool, CliError>| p.validate().and_then(|_| f(p));
    let result = match &cli.command {
        Command::Profile(p) => run(p, &profile),
        Command::Check { kind, params } => run(params, &|p| check(*kind, p)),
        Command::Table1(p) => run(p, &table),
        Command::SegmentWidth(p) => run(p, &segment_width),
        Command::HypdomainWidth(p) => run(p, &hypdomain_width),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(CliError::Precondition(m)) => {
            eprintln!("precondition not met: {m}");
            ExitCode::from(3)
        }
    }
}
