//! Command-line front end: argument types, tolerance overrides and the five
//! subcommands. The `mch` binary only parses and dispatches.

use crate::asymptotics::{evaluate, AsymptoticExpansion};
use crate::error::{Error, Result};
use crate::io;
use crate::phase::{im_theta_field, stationary_points, FieldGrid};
use crate::rhfactors::Reflection;
use crate::scattering::{
    admissible_grid, discrete_spectrum_search, scattering_matrix, DiscreteSpectrum, InitialProfile, ScatteringData, SearchBox,
};
use crate::soliton::{q_on_x_grid, SolitonData};
use crate::tol::Tolerances;
use crate::validate::{run_all, ValidateConfig};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64 as C;
use rayon::prelude::*;
use std::path::{Path, PathBuf};

#[derive(Debug, Parser)]
#[command(name = "mch", version, about = "Scattering, solitons and long-time asymptotics for mCH on a nonzero background")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub tol: TolArgs,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Stationary points of θ and optional Im θ field.
    Phase(PhaseArgs),
    /// Direct scattering of an initial profile.
    Scatter(ScatterArgs),
    /// Reflectionless solution q(y, t) and the x-map.
    Soliton(SolitonArgs),
    /// Long-time asymptotic expansion.
    Asymptote(AsymptoteArgs),
    /// Run the gate suite.
    Validate(ValidateArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProfileKind {
    Gaussian,
    Sech2,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReflectionKind {
    Zero,
    Synthetic,
    Data,
}

#[derive(Debug, Args, Clone)]
pub struct TolArgs {
    #[arg(long, global = true, default_value_t = 1e-10)]
    pub tol_quad: f64,
    #[arg(long, global = true, default_value_t = 1e-10)]
    pub tol_ode: f64,
    #[arg(long, global = true, default_value_t = 1e-10)]
    pub tol_residue: f64,
    #[arg(long, global = true, default_value_t = 0.1)]
    pub tol_eps0_factor: f64,
    #[arg(long, global = true, default_value_t = 1e-3)]
    pub tol_eps0_floor: f64,
}

impl TolArgs {
    pub fn tolerances(&self) -> Result<Tolerances> {
        let t = Tolerances {
            quad: self.tol_quad,
            ode: self.tol_ode,
            residue: self.tol_residue,
            eps0_factor: self.tol_eps0_factor,
            eps0_floor: self.tol_eps0_floor,
        };
        t.validate()?;
        Ok(t)
    }
}

#[derive(Debug, Args)]
pub struct PhaseArgs {
    /// Comma-separated ξ values.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    pub xi: Vec<f64>,
    /// Im θ field on the square a:b with spacing h (first ξ only).
    #[arg(long, allow_hyphen_values = true)]
    pub field: Option<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ScatterArgs {
    #[arg(long, value_enum, default_value_t = ProfileKind::Gaussian)]
    pub profile: ProfileKind,
    #[arg(long, default_value_t = 0.3, allow_negative_numbers = true)]
    pub amp: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub width: f64,
    /// CSV (x, value) of m̆₀ − 1 for `--profile table`.
    #[arg(long)]
    pub data: Option<PathBuf>,
    /// z-interval lo:hi and node count, as lo:hi:n.
    #[arg(long, default_value = "-5:5:200", allow_hyphen_values = true)]
    pub z_grid: String,
    /// Search box re0:re1:im0:im1 for discrete eigenvalues.
    #[arg(long, allow_hyphen_values = true)]
    pub search: Option<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args, Clone)]
pub struct SpectrumArgs {
    /// Pole seed re,im; the full symmetry orbit is added. Repeatable.
    #[arg(long, allow_hyphen_values = true)]
    pub pole: Vec<String>,
    /// Norming constant re,im for each --pole.
    #[arg(long, allow_hyphen_values = true)]
    pub c: Vec<String>,
    /// Scattering JSON written by `scatter`.
    #[arg(long)]
    pub data: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SolitonArgs {
    #[command(flatten)]
    pub spectrum: SpectrumArgs,
    #[arg(long, default_value = "-10:10:0.1", allow_hyphen_values = true)]
    pub y_range: String,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub t: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct AsymptoteArgs {
    #[command(flatten)]
    pub spectrum: SpectrumArgs,
    /// ξ values (y = ξt), comma-separated; overrides --y-range.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub xi: Vec<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub y_range: Option<String>,
    #[arg(long, default_value_t = 100.0, allow_negative_numbers = true)]
    pub t: f64,
    #[arg(long, value_enum, default_value_t = ReflectionKind::Synthetic)]
    pub reflection: ReflectionKind,
    /// sup|r| of the synthetic reflection.
    #[arg(long, default_value_t = 0.5)]
    pub amp: f64,
    /// Phase parameter γ of the synthetic reflection.
    #[arg(long, default_value_t = 0.3)]
    pub gamma: f64,
    /// Λ threshold; default from the ε₀ rule.
    #[arg(long)]
    pub eps0: Option<f64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    /// Shorter PDE stencil window (t up to 0.05).
    #[arg(long)]
    pub quick: bool,
    /// Machine-readable report.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Cap rayon's pool from MCH_THREADS.
pub fn init_threads() -> Result<()> {
    if let Ok(v) = std::env::var("MCH_THREADS") {
        let n: usize = v.trim().parse().map_err(|_| Error::Config(format!("MCH_THREADS = `{v}` is not a positive integer")))?;
        if n == 0 {
            return Err(Error::Config("MCH_THREADS must be positive".into()));
        }
        // a second initialization in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Ok(())
}

fn emit(out: Option<&Path>, content: &str) -> Result<()> {
    match out {
        Some(p) => Ok(std::fs::write(p, content)?),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn parse_complex(s: &str) -> Result<C> {
    let p: Vec<&str> = s.split(',').collect();
    let f = |x: &str| x.trim().parse::<f64>().map_err(|e| Error::Config(format!("`{s}`: {e}")));
    match p.as_slice() {
        [re, im] => Ok(C::new(f(re)?, f(im)?)),
        _ => Err(Error::Config(format!("`{s}` must be re,im"))),
    }
}

fn colon_list(s: &str, n: usize) -> Result<Vec<f64>> {
    let v: Vec<f64> = s.split(':').map(|x| x.trim().parse::<f64>()).collect::<std::result::Result<_, _>>().map_err(|e| Error::Config(format!("`{s}`: {e}")))?;
    if v.len() != n {
        return Err(Error::Config(format!("`{s}` needs {n} colon-separated numbers")));
    }
    Ok(v)
}

pub fn read_scattering(path: &Path) -> Result<ScatteringData> {
    let text = std::fs::read_to_string(path)?;
    Ok(io::scattering_from_json(&serde_json::from_str(&text)?)?.0)
}

fn spectrum_from(args: &SpectrumArgs) -> Result<(DiscreteSpectrum, Option<ScatteringData>)> {
    if args.pole.len() != args.c.len() {
        return Err(Error::Config("every --pole needs a matching --c".into()));
    }
    let data = args.data.as_deref().map(read_scattering).transpose()?;
    let mut s = data.as_ref().map(|d| d.discrete.clone()).unwrap_or_default();
    for (p, c) in args.pole.iter().zip(&args.c) {
        s.push_orbit(parse_complex(p)?, parse_complex(c)?)?;
    }
    Ok((s, data))
}

pub fn cmd_phase(a: &PhaseArgs) -> Result<()> {
    if let Some(spec) = &a.field {
        let g = io::parse_range(spec)?;
        let (lo, hi) = (g[0], *g.last().unwrap_or(&g[0]));
        let h = if g.len() > 1 { g[1] - g[0] } else { 1.0 };
        let grid = FieldGrid { re: (lo, hi), im: (lo, hi), h };
        let cells = im_theta_field(a.xi[0], grid)?;
        let content = match a.format {
            Format::Svg => io::svg_heatmap(&format!("Im theta, xi = {}", a.xi[0]), &cells, h),
            _ => {
                let rows: Vec<Vec<f64>> = cells.iter().map(|(z, v)| vec![z.re, z.im, *v]).collect();
                io::table_csv(&["re", "im", "im_theta"], &rows)
            }
        };
        return emit(a.out.as_deref(), &content);
    }
    let rows: Vec<_> = a.xi.iter().map(|&xi| (xi, stationary_points(xi))).collect();
    for (xi, r) in &rows {
        if let Err(e) = r {
            eprintln!("xi = {xi}: {e}");
        }
    }
    let content = match a.format {
        Format::Json => {
            let v: Vec<_> = rows
                .iter()
                .map(|(xi, r)| match r {
                    Ok(p) => serde_json::json!({"xi": io::num(*xi), "region": p.region.name(),
                        "points": p.points.iter().map(|v| io::num(*v)).collect::<Vec<_>>(),
                        "signs": p.signs, "curvatures": p.curvatures.iter().map(|v| io::num(*v)).collect::<Vec<_>>()}),
                    Err(e) => serde_json::json!({"xi": io::num(*xi), "error": e.to_string()}),
                })
                .collect();
            serde_json::to_string_pretty(&v)? + "\n"
        }
        _ => io::phase_csv(&rows),
    };
    emit(a.out.as_deref(), &content)
}

pub fn cmd_scatter(a: &ScatterArgs, tol: &Tolerances) -> Result<()> {
    let profile = match a.profile {
        ProfileKind::Gaussian => InitialProfile::gaussian(a.amp, a.width, 0.0)?,
        ProfileKind::Sech2 => InitialProfile::sech2(a.amp, a.width)?,
        ProfileKind::Table => {
            let path = a.data.as_ref().ok_or_else(|| Error::Config("--profile table needs --data".into()))?;
            let (x, v) = read_table(path)?;
            InitialProfile::table(x, v)?
        }
    };
    let z = colon_list(&a.z_grid, 3)?;
    if !(z[2] >= 1.0) {
        return Err(Error::Config("z-grid node count must be positive".into()));
    }
    let grid = admissible_grid(z[0], z[1], z[2] as usize);
    let discrete = match &a.search {
        Some(s) => {
            let b = colon_list(s, 4)?;
            discrete_spectrum_search(&profile, SearchBox { re: (b[0], b[1]), im: (b[2], b[3]) }, tol.ode)?
        }
        None => DiscreteSpectrum::empty(),
    };
    let data = scattering_matrix(&profile, &grid, discrete, tol.ode)?;
    if data.validation.trace_residual > 1e-8 {
        return Err(Error::Config(format!("trace-formula gate failed: residual {:.3e}", data.validation.trace_residual)));
    }
    let v = io::scattering_to_json(&data, Some(&profile))?;
    emit(a.out.as_deref(), &(serde_json::to_string_pretty(&v)? + "\n"))
}

/// Two-column CSV (x, value), header optional.
pub fn read_table(path: &Path) -> Result<(Vec<f64>, Vec<f64>)> {
    let text = std::fs::read_to_string(path)?;
    let (mut x, mut v) = (Vec::new(), Vec::new());
    for (k, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let p: Vec<&str> = line.split(',').collect();
        let num = |s: &str| s.trim().parse::<f64>();
        match (p.first().map(|s| num(s)), p.get(1).map(|s| num(s))) {
            (Some(Ok(a)), Some(Ok(b))) => {
                x.push(a);
                v.push(b);
            }
            _ if k == 0 => continue,
            _ => return Err(Error::Parse(format!("{}: line {} is not `x,value`", path.display(), k + 1))),
        }
    }
    Ok((x, v))
}

pub fn cmd_soliton(a: &SolitonArgs, tol: &Tolerances) -> Result<()> {
    let (spec, _) = spectrum_from(&a.spectrum)?;
    let data = SolitonData::from_spectrum(&spec)?;
    let ys = io::parse_range(&a.y_range)?;
    let rec = ys
        .par_iter()
        .map(|&y| {
            let s = data.solve(y, a.t, tol.residue)?;
            if s.residual > tol.residue {
                return Err(Error::Residual(s.residual));
            }
            s.reconstruct()
        })
        .collect::<Result<Vec<_>>>()?;
    let content = match a.format {
        Format::Svg => {
            let x = q_on_x_grid(&rec)?;
            let pts: Vec<(f64, f64)> = x.x.iter().copied().zip(x.q.iter().copied()).collect();
            io::svg_lines(&format!("q at t = {}", a.t), "x", "q", &[("q", &pts)])
        }
        Format::Json => {
            let v: Vec<_> = rec.iter().map(|r| serde_json::json!({"y": io::num(r.y), "x": io::num(r.x), "q": io::num(r.q)})).collect();
            serde_json::to_string_pretty(&v)? + "\n"
        }
        Format::Csv => io::table_csv(&["y", "x", "q"], &rec.iter().map(|r| vec![r.y, r.x, r.q]).collect::<Vec<_>>()),
    };
    emit(a.out.as_deref(), &content)
}

pub fn asymptote_rows(a: &AsymptoteArgs, tol: &Tolerances) -> Result<Vec<AsymptoticExpansion>> {
    let (spec, data) = spectrum_from(&a.spectrum)?;
    let refl = match a.reflection {
        ReflectionKind::Zero => Reflection::zero(),
        ReflectionKind::Synthetic => Reflection::synthetic(a.amp, a.gamma)?,
        ReflectionKind::Data => Reflection::from_scattering(data.as_ref().ok_or_else(|| Error::Config("--reflection data needs --data".into()))?)?,
    };
    let ys: Vec<f64> = if !a.xi.is_empty() {
        a.xi.iter().map(|x| x * a.t).collect()
    } else {
        io::parse_range(a.y_range.as_deref().ok_or_else(|| Error::Config("give --xi or --y-range".into()))?)?
    };
    ys.par_iter().map(|&y| evaluate(y, a.t, &refl, &spec, a.eps0, tol)).collect()
}

pub fn cmd_asymptote(a: &AsymptoteArgs, tol: &Tolerances) -> Result<()> {
    let rows = asymptote_rows(a, tol)?;
    let content = match a.format {
        Format::Csv => io::asymptote_csv(&rows),
        Format::Json => serde_json::to_string_pretty(&io::asymptote_json(&rows))? + "\n",
        Format::Svg => {
            let lead: Vec<(f64, f64)> = rows.iter().map(|r| (r.x_map, r.q_leading)).collect();
            let full: Vec<(f64, f64)> = rows.iter().map(|r| (r.x_map, r.q())).collect();
            io::svg_lines(&format!("asymptotic q at t = {}", a.t), "x", "q", &[("soliton level", &lead), ("with t^-1/2 correction", &full)])
        }
    };
    emit(a.out.as_deref(), &content)
}

/// Returns whether every gate passed.
pub fn cmd_validate(a: &ValidateArgs, tol: &Tolerances) -> Result<bool> {
    let cfg = ValidateConfig { seed: a.seed, tol: *tol, pde_t_max: if a.quick { 0.05 } else { 1.0 } };
    let report = run_all(&cfg);
    for g in &report.gates {
        println!("{}", g.line());
    }
    println!("{}", if report.passed { "ALL PASS" } else { "FAILURES PRESENT" });
    if let Some(p) = &a.out {
        std::fs::write(p, serde_json::to_string_pretty(&report)? + "\n")?;
    }
    Ok(report.passed)
}

/// Exit code: 0 on success, 1 on a failed gate, 2 on an error.
pub fn run(cli: Cli) -> i32 {
    let result = (|| -> Result<bool> {
        init_threads()?;
        let tol = cli.tol.tolerances()?;
        match &cli.command {
            Command::Phase(a) => cmd_phase(a).map(|_| true),
            Command::Scatter(a) => cmd_scatter(a, &tol).map(|_| true),
            Command::Soliton(a) => cmd_soliton(a, &tol).map(|_| true),
            Command::Asymptote(a) => cmd_asymptote(a, &tol).map(|_| true),
            Command::Validate(a) => cmd_validate(a, &tol),
        }
    })();
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("mch: {e}");
            2
        }
    }
}
