use std::path::Path;

use hypwidth_core::analysis::regular_polygon_rmin;
use hypwidth_core::bodies::magic_parameters;
use hypwidth_core::{BodySpec, ConvexBody, GeometryError, HPoint, Pose};
use serde::Deserialize;
use serde_json::Value;

use crate::{CliError, Params};

pub const BUILTINS: [&str; 6] = [
    "circle",
    "segment",
    "regular-polygon",
    "reuleaux",
    "hypercycle-domain",
    "magic-quadrangle",
];

/// Resolves `--body` as a built-in name or a JSON body file.
pub fn load(source: &str, p: &Params) -> Result<(BodySpec, ConvexBody), CliError> {
    let spec = if BUILTINS.contains(&source) {
        builtin(source, p)?
    } else {
        let path = Path::new(source);
        if !path.exists() {
            return Err(CliError::Input(format!(
                "--body: {source} is neither a file nor a built-in body ({})",
                BUILTINS.join(", ")
            )));
        }
        parse_file(path)?
    };
    let body = spec.build().map_err(|e| match e {
        GeometryError::InvalidBody(m) => match m.split_once(": ") {
            Some((field, rest)) if !field.contains(' ') => {
                CliError::Input(format!("{source}: field `{field}`: {rest}"))
            }
            _ => CliError::Input(format!("{source}: {m}")),
        },
        e => CliError::Input(format!("{source}: {e}")),
    })?;
    Ok((spec, body))
}

pub fn parse_file(path: &Path) -> Result<BodySpec, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let fail =
        |field: &str, e: &dyn std::fmt::Display| CliError::Input(format!("{}: field `{field}`: {e}", path.display()));
    let de = &mut serde_json::Deserializer::from_str(&text);
    let value: Value = serde_json::Value::deserialize(de)
        .map_err(|e| CliError::Input(format!("{}: malformed JSON: {e}", path.display())))?;
    match serde_json::from_value::<BodySpec>(value.clone()) {
        Ok(spec) => Ok(spec),
        Err(e) => {
            let field = value
                .as_object()
                .and_then(|obj| obj.iter().find(|(k, v)| !field_type_ok(k, v)))
                .map_or("variant".to_string(), |(k, _)| k.clone());
            let msg = e.to_string();
            let field = match msg.strip_prefix("missing field `") {
                Some(rest) => rest.split('`').next().unwrap_or_default().to_string(),
                None => field,
            };
            Err(fail(&field, &e))
        }
    }
}

/// Whether a body-file field holds a value of the type its name expects.
fn field_type_ok(name: &str, v: &Value) -> bool {
    use serde_json::from_value as from;
    let v = v.clone();
    match name {
        "variant" => v.is_string(),
        "r" | "d" | "a" | "h" => from::<f64>(v).is_ok(),
        "n" => from::<usize>(v).is_ok(),
        "center" => from::<HPoint>(v).is_ok(),
        "vertices" | "boundary" => from::<Vec<HPoint>>(v).is_ok(),
        "pose" => from::<Pose>(v).is_ok(),
        "h_convex" => v.is_boolean(),
        _ => true,
    }
}

fn need(v: Option<f64>, flag: &str, name: &str) -> Result<f64, CliError> {
    v.ok_or_else(|| CliError::Input(format!("--{flag} is required for the {name} body")))
}

fn builtin(name: &str, p: &Params) -> Result<BodySpec, CliError> {
    let n = p.n.unwrap_or(3);
    Ok(match name {
        "circle" => BodySpec::Circle {
            center: HPoint::ORIGIN,
            r: p.r.unwrap_or(1.0),
        },
        "segment" => BodySpec::Segment {
            a: None,
            b: None,
            d: Some(p.d.unwrap_or(1.0)),
        },
        "regular-polygon" => {
            let r = match p.r {
                Some(r) => r,
                None => regular_polygon_rmin(n)
                    .map_err(|e| CliError::Input(format!("--n: {e}")))?
                    .atanh(),
            };
            BodySpec::RegularPolygon { n, r }
        }
        "reuleaux" => BodySpec::Reuleaux {
            n,
            d: p.d.unwrap_or(1.0),
            pose: Default::default(),
        },
        "hypercycle-domain" => BodySpec::HypercycleDomain {
            a: need(p.a, "a", name)?,
            h: need(p.h, "h", name)?,
            pose: Default::default(),
        },
        _ => BodySpec::MagicQuadrangle,
    })
}

/// `(a, h)` from the flags, falling back to the magic quadrangle.
pub fn hypdomain_params(p: &Params) -> (f64, f64) {
    let (a, h) = magic_parameters();
    (p.a.unwrap_or(a), p.h.unwrap_or(h))
}
