//! Serialization: scattering JSON with 17-significant-digit decimal strings,
//! CSV tables and minimal SVG line plots.

use crate::asymptotics::AsymptoticExpansion;
use crate::error::{Error, Result};
use crate::phase::PhasePortrait;
use crate::scattering::{DiscreteSpectrum, Eigenvalue, InitialProfile, ScatteringData, Validation};
use num_complex::Complex64 as C;
use serde_json::{json, Map, Value};
use std::fmt::Write as _;

pub const SCHEMA_VERSION: u32 = 1;

/// Shortest-safe decimal form: 17 significant digits round-trip every f64.
pub fn num(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        v.to_string()
    }
}

fn parse_num(v: &Value, what: &str) -> Result<f64> {
    match v {
        Value::String(s) => s.parse::<f64>().map_err(|e| Error::Parse(format!("{what}: {e}"))),
        Value::Number(n) => n.as_f64().ok_or_else(|| Error::Parse(format!("{what}: not a double"))),
        _ => Err(Error::Parse(format!("{what}: expected a decimal string"))),
    }
}

fn complex(z: C) -> Value {
    json!({"re": num(z.re), "im": num(z.im)})
}

fn parse_complex(v: &Value, what: &str) -> Result<C> {
    Ok(C::new(parse_num(&v["re"], what)?, parse_num(&v["im"], what)?))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Parse(format!("missing field `{key}`")))
}

fn array<'a>(v: &'a Value, key: &str) -> Result<&'a Vec<Value>> {
    field(v, key)?.as_array().ok_or_else(|| Error::Parse(format!("`{key}` is not an array")))
}

/// Scattering data in the interchange schema; `profile` is embedded when known.
pub fn scattering_to_json(data: &ScatteringData, profile: Option<&InitialProfile>) -> Result<Value> {
    let poles: Vec<Value> = data
        .discrete
        .poles
        .iter()
        .map(|p| json!({"re": num(p.z.re), "im": num(p.z.im), "c_re": num(p.c.re), "c_im": num(p.c.im), "orbit_id": p.orbit}))
        .collect();
    let mut v = Map::new();
    v.insert("version".into(), json!(SCHEMA_VERSION));
    v.insert("profile".into(), profile.map(serde_json::to_value).transpose()?.unwrap_or(Value::Null));
    v.insert("z_grid".into(), Value::Array(data.z_grid.iter().map(|z| Value::String(num(*z))).collect()));
    for (key, col) in [("a", &data.a), ("b", &data.b), ("r", &data.r)] {
        v.insert(key.into(), Value::Array(col.iter().map(|z| complex(*z)).collect()));
    }
    v.insert("poles".into(), Value::Array(poles));
    v.insert(
        "validation".into(),
        json!({
            "unimodularity_max": num(data.validation.unimodularity_max),
            "trace_residual": num(data.validation.trace_residual),
            "x0_drift_max": num(data.validation.x0_drift_max),
        }),
    );
    Ok(Value::Object(v))
}

pub fn scattering_from_json(v: &Value) -> Result<(ScatteringData, Option<InitialProfile>)> {
    let version = field(v, "version")?.as_u64().unwrap_or(0);
    if version != SCHEMA_VERSION as u64 {
        return Err(Error::Parse(format!("unsupported schema version {version}")));
    }
    let z_grid = array(v, "z_grid")?.iter().map(|z| parse_num(z, "z_grid")).collect::<Result<Vec<_>>>()?;
    let col = |key: &str| -> Result<Vec<C>> { array(v, key)?.iter().map(|z| parse_complex(z, key)).collect() };
    let (a, b, r) = (col("a")?, col("b")?, col("r")?);
    if a.len() != z_grid.len() || b.len() != z_grid.len() || r.len() != z_grid.len() {
        return Err(Error::Parse("a, b, r and z_grid must have equal length".into()));
    }
    let poles = array(v, "poles")?
        .iter()
        .map(|p| {
            Ok(Eigenvalue {
                z: C::new(parse_num(&p["re"], "pole")?, parse_num(&p["im"], "pole")?),
                c: C::new(parse_num(&p["c_re"], "pole")?, parse_num(&p["c_im"], "pole")?),
                orbit: p["orbit_id"].as_u64().ok_or_else(|| Error::Parse("pole orbit_id".into()))? as usize,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let val = field(v, "validation")?;
    let validation = Validation {
        unimodularity_max: parse_num(&val["unimodularity_max"], "validation")?,
        trace_residual: parse_num(&val["trace_residual"], "validation")?,
        x0_drift_max: val.get("x0_drift_max").map(|x| parse_num(x, "validation")).transpose()?.unwrap_or(0.0),
    };
    let profile = match v.get("profile") {
        None | Some(Value::Null) => None,
        Some(p) => Some(serde_json::from_value::<InitialProfile>(p.clone())?.rebuild()?),
    };
    let data = ScatteringData { z_grid, a, b, r, discrete: DiscreteSpectrum { poles }, validation };
    Ok((data, profile))
}

/// Stationary-point table row; boundary ξ values carry the error message.
pub fn phase_csv(rows: &[(f64, Result<PhasePortrait>)]) -> String {
    let width = rows.iter().filter_map(|(_, r)| r.as_ref().ok()).map(|p| p.points.len()).max().unwrap_or(0);
    let mut out = String::from("xi,region");
    for kind in ["point", "sign", "curvature"] {
        for j in 1..=width {
            let _ = write!(out, ",{kind}{j}");
        }
    }
    out.push_str(",error\n");
    for (xi, r) in rows {
        let _ = write!(out, "{}", num(*xi));
        match r {
            Ok(p) => {
                let _ = write!(out, ",{}", p.region.name());
                let pad = |out: &mut String, vals: Vec<String>| {
                    for j in 0..width {
                        let _ = write!(out, ",{}", vals.get(j).cloned().unwrap_or_default());
                    }
                };
                pad(&mut out, p.points.iter().map(|v| num(*v)).collect());
                pad(&mut out, p.signs.iter().map(|v| v.to_string()).collect());
                pad(&mut out, p.curvatures.iter().map(|v| num(*v)).collect());
                out.push_str(",\n");
            }
            Err(e) => {
                out.push(',');
                out.push_str(&",".repeat(3 * width));
                let _ = writeln!(out, ",\"{e}\"");
            }
        }
    }
    out
}

/// Columns y, t, xi, region, x, q_leading, q_correction, error_order.
pub fn asymptote_csv(rows: &[AsymptoticExpansion]) -> String {
    let mut out = String::from("y,t,xi,region,x,q_leading,q_correction,error_order\n");
    for a in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            num(a.y),
            num(a.t),
            num(a.xi),
            a.region.name(),
            num(a.x_map),
            num(a.q_leading),
            num(a.q_correction),
            a.error_order.label()
        );
    }
    out
}

pub fn asymptote_json(rows: &[AsymptoticExpansion]) -> Value {
    Value::Array(
        rows.iter()
            .map(|a| {
                let mut v = json!({
                    "y": num(a.y), "t": num(a.t), "xi": num(a.xi), "region": a.region.name(),
                    "x": num(a.x_map), "q_leading": num(a.q_leading), "q_correction": num(a.q_correction),
                    "error_order": a.error_order.label(), "c_plus": num(a.c_plus),
                    "t_at_i": complex(a.t_at_i), "t0": complex(a.t0),
                });
                if let Some(d) = &a.diagnostics {
                    let mat = |m: &nalgebra::Matrix2<C>| Value::Array(m.iter().map(|z| complex(*z)).collect());
                    v["diagnostics"] = json!({
                        "f1_column_major": mat(&d.f1), "f2_column_major": mat(&d.f2),
                        "h11": complex(d.h11), "h12": complex(d.h12),
                    });
                }
                v
            })
            .collect(),
    )
}

/// Generic numeric CSV with a header.
pub fn table_csv(header: &[&str], rows: &[Vec<f64>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for r in rows {
        out.push_str(&r.iter().map(|v| num(*v)).collect::<Vec<_>>().join(","));
        out.push('\n');
    }
    out
}

/// Static line plot of one or more series sharing the axes.
pub fn svg_lines(title: &str, xlabel: &str, ylabel: &str, series: &[(&str, &[(f64, f64)])]) -> String {
    let (w, h, m) = (640.0, 400.0, 50.0);
    let pts = series.iter().flat_map(|s| s.1.iter()).filter(|p| p.0.is_finite() && p.1.is_finite());
    let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for p in pts {
        x0 = x0.min(p.0);
        x1 = x1.max(p.0);
        y0 = y0.min(p.1);
        y1 = y1.max(p.1);
    }
    if !(x1 > x0) {
        x1 = x0 + 1.0;
    }
    if !(y1 > y0) {
        y0 -= 0.5;
        y1 = y0 + 1.0;
    }
    let sx = |x: f64| m + (x - x0) / (x1 - x0) * (w - 2.0 * m);
    let sy = |y: f64| h - m - (y - y0) / (y1 - y0) * (h - 2.0 * m);
    let mut out = format!("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" font-family=\"sans-serif\" font-size=\"12\">\n");
    let _ = writeln!(out, "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>");
    let _ = writeln!(out, "<text x=\"{}\" y=\"20\" text-anchor=\"middle\">{}</text>", w / 2.0, escape(title));
    let _ = writeln!(out, "<path d=\"M{m} {m} V{} H{}\" stroke=\"black\" fill=\"none\"/>", h - m, w - m);
    let _ = writeln!(out, "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>", w / 2.0, h - 15.0, escape(xlabel));
    let _ = writeln!(out, "<text x=\"15\" y=\"{}\" transform=\"rotate(-90 15 {})\" text-anchor=\"middle\">{}</text>", h / 2.0, h / 2.0, escape(ylabel));
    for (v, x, y, anchor) in [(x0, sx(x0), h - m + 15.0, "start"), (x1, sx(x1), h - m + 15.0, "end")] {
        let _ = writeln!(out, "<text x=\"{x:.1}\" y=\"{y:.1}\" text-anchor=\"{anchor}\">{v:.4}</text>");
    }
    for (v, y) in [(y0, sy(y0)), (y1, sy(y1))] {
        let _ = writeln!(out, "<text x=\"{:.1}\" y=\"{y:.1}\" text-anchor=\"end\">{v:.4}</text>", m - 4.0);
    }
    let colors = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd"];
    for (k, (name, s)) in series.iter().enumerate() {
        let path: Vec<String> = s.iter().filter(|p| p.0.is_finite() && p.1.is_finite()).map(|p| format!("{:.2},{:.2}", sx(p.0), sy(p.1))).collect();
        let c = colors[k % colors.len()];
        let _ = writeln!(out, "<polyline fill=\"none\" stroke=\"{c}\" stroke-width=\"1.2\" points=\"{}\"/>", path.join(" "));
        let _ = writeln!(out, "<text x=\"{}\" y=\"{}\" fill=\"{c}\">{}</text>", w - m - 120.0, m + 14.0 * (k as f64 + 1.0), escape(name));
    }
    out.push_str("</svg>\n");
    out
}

/// Heat map of a scalar field on a regular grid, one rect per cell.
pub fn svg_heatmap(title: &str, cells: &[(C, f64)], h_cell: f64) -> String {
    let (mut re0, mut re1, mut im0, mut im1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    let mut vmax = 0.0f64;
    for (z, v) in cells {
        re0 = re0.min(z.re);
        re1 = re1.max(z.re);
        im0 = im0.min(z.im);
        im1 = im1.max(z.im);
        if v.is_finite() {
            vmax = vmax.max(v.abs());
        }
    }
    let scale = 600.0 / (re1 - re0 + h_cell).max(im1 - im0 + h_cell);
    let (w, h) = ((re1 - re0 + h_cell) * scale, (im1 - im0 + h_cell) * scale);
    let mut out = format!("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w:.0}\" height=\"{:.0}\" font-family=\"sans-serif\" font-size=\"12\">\n", h + 30.0);
    let _ = writeln!(out, "<text x=\"{:.0}\" y=\"18\" text-anchor=\"middle\">{}</text>", w / 2.0, escape(title));
    let side = h_cell * scale;
    for (z, v) in cells {
        // signed log-compressed color: red for Im θ > 0, blue for < 0
        let u = if v.is_finite() && vmax > 0.0 { (1.0 + v.abs()).ln() / (1.0 + vmax).ln() } else { 0.0 };
        let k = (255.0 * (1.0 - u)).round() as u8;
        let fill = if *v >= 0.0 { format!("rgb(255,{k},{k})") } else { format!("rgb({k},{k},255)") };
        let _ = writeln!(
            out,
            "<rect x=\"{:.2}\" y=\"{:.2}\" width=\"{:.2}\" height=\"{:.2}\" fill=\"{fill}\"/>",
            (z.re - re0) * scale,
            30.0 + (im1 - z.im) * scale,
            side + 0.05,
            side + 0.05
        );
    }
    out.push_str("</svg>\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Parse `a:b:h` into the inclusive grid a, a + h, ..., b.
pub fn parse_range(s: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(Error::Config(format!("range `{s}` must have the form a:b:h")));
    }
    let p = |x: &str| x.trim().parse::<f64>().map_err(|e| Error::Config(format!("range `{s}`: {e}")));
    let (a, b, h) = (p(parts[0])?, p(parts[1])?, p(parts[2])?);
    if !(h > 0.0) || !(b >= a) || !a.is_finite() || !b.is_finite() {
        return Err(Error::Config(format!("range `{s}` needs a <= b and h > 0")));
    }
    let n = ((b - a) / h * (1.0 + 1e-12)).floor() as usize;
    if n > 50_000_000 {
        return Err(Error::Config(format!("range `{s}` has too many nodes")));
    }
    Ok((0..=n).map(|i| a + h * i as f64).collect())
}
