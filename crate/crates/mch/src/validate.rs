//! The consolidated gate suite behind `mch validate` and the acceptance test.
//! Each gate measures one quantity against a threshold; an upstream error
//! turns into a failed gate carrying the message.

use crate::asymptotics::{error_coeffs_printed, error_coeffs_quadrature, evaluate, evaluate_with, DISK_NODES};
use crate::error::{Error, Result};
use crate::localmodel::SaddleModel;
use crate::phase::{stationary_points, stationary_points_oracle, verify_decay_bounds};
use crate::rhfactors::{Reflection, RHFactorization};
use crate::scattering::{a_at_i, admissible_grid, scattering_matrix, DiscreteSpectrum, InitialProfile, ScatteringData};
use crate::soliton::{field_on_grid, pde_residual, SolitonData};
use crate::tol::Tolerances;
use nalgebra::Matrix2;
use num_complex::Complex64 as C;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::f64::consts::PI;
use std::time::Instant;

/// Quartet seeds with Im θ = 0 at ξ = 1 and ξ = −1/8.
pub const LAMBDA_SEED_XI_1: C = C::new(1.0, 1.203892510319538);
pub const LAMBDA_SEED_XI_M18: C = C::new(1.0, 1.4444522670586597);

/// exp(−0.15√π), 30-digit value.
pub const TRACE_TARGET: f64 = 0.766_540_244_632_372_3;

/// Positive stationary points at ξ = 1 (mpmath, 30 digits).
pub const XI_ONE: [f64; 2] = [1.597654212259488, 0.62591766874619667];
/// The same values as listed to 7 decimals in the reference material; both
/// last digits are off by one.
pub const XI_ONE_LISTED: [f64; 2] = [1.5976541, 0.6259178];
const XI_EIGHTH: [f64; 8] = [
    7.2531654213729959,
    2.6896753804970365,
    0.37179207842368166,
    0.13787083871729812,
    -0.13787083871729812,
    -0.37179207842368166,
    -2.6896753804970365,
    -7.2531654213729959,
];

#[derive(Debug, Clone, Serialize)]
pub struct Gate {
    pub id: u8,
    pub name: String,
    pub value: f64,
    pub threshold: f64,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

impl Gate {
    pub fn line(&self) -> String {
        format!(
            "[{}] {:>2} {}: {:.3e} (limit {:.1e}) {:.1}s{}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.value,
            self.threshold,
            self.seconds,
            if self.detail.is_empty() { String::new() } else { format!("  {}", self.detail) }
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub seed: u64,
    pub gates: Vec<Gate>,
    pub passed: bool,
}

#[derive(Debug, Clone)]
pub struct ValidateConfig {
    pub seed: u64,
    pub tol: Tolerances,
    /// Upper end of the t-window of the PDE stencil (1 for the full gate).
    pub pde_t_max: f64,
}

impl Default for ValidateConfig {
    fn default() -> Self {
        ValidateConfig { seed: 7, tol: Tolerances::default(), pde_t_max: 1.0 }
    }
}

struct Measure {
    value: f64,
    threshold: f64,
    passed: bool,
    detail: String,
}

fn run(id: u8, name: &str, f: impl FnOnce() -> Result<Measure>) -> Gate {
    let t0 = Instant::now();
    let (value, threshold, passed, detail) = match f() {
        Ok(m) => (m.value, m.threshold, m.passed && m.value.is_finite(), m.detail),
        Err(e) => (f64::NAN, f64::NAN, false, format!("error: {e}")),
    };
    Gate { id, name: name.into(), value, threshold, passed, detail, seconds: t0.elapsed().as_secs_f64() }
}

fn below(value: f64, threshold: f64, detail: String) -> Measure {
    Measure { value, threshold, passed: value < threshold, detail }
}

fn max_abs(m: &Matrix2<C>) -> f64 {
    m.iter().map(|v| v.norm()).fold(0.0, f64::max)
}

/// Gaussian profile (amplitude 0.3, width 1) of the scattering gates.
pub fn reference_profile() -> Result<InitialProfile> {
    InitialProfile::gaussian(0.3, 1.0, 0.0)
}

pub fn reference_scattering(tol: &Tolerances) -> Result<ScatteringData> {
    let grid = admissible_grid(-5.0, 5.0, 200);
    scattering_matrix(&reference_profile()?, &grid, DiscreteSpectrum::empty(), tol.ode)
}

pub fn gate_xi_one() -> Gate {
    run(1, "stationary points at xi = 1", || {
        let p = stationary_points(1.0)?;
        let x = &p.points;
        if x.len() != 4 {
            return Err(Error::Config(format!("expected 4 points, found {}", x.len())));
        }
        let dev = |r: [f64; 2]| x.iter().zip([r[0], r[1], -r[1], -r[0]]).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        let (dev_frozen, dev_listed) = (dev(XI_ONE), dev(XI_ONE_LISTED));
        let products = ((x[0] * x[1] - 1.0).abs()).max((x[0] * x[2] + 1.0).abs());
        let oracle = stationary_points_oracle(1.0)?;
        let dev_oracle = x.iter().zip(&oracle).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        let worst = dev_frozen.max(products).max(dev_oracle);
        Ok(Measure {
            value: worst,
            threshold: 1e-9,
            passed: worst < 1e-9 && oracle.len() == 4,
            detail: format!(
                "high-precision values {dev_frozen:.1e}, products {products:.1e}, polynomial oracle {dev_oracle:.1e}; 7-digit listing off by {dev_listed:.1e} (info)"
            ),
        })
    })
}

pub fn gate_xi_eighth() -> Gate {
    run(2, "stationary points at xi = -1/8", || {
        let p = stationary_points(-0.125)?;
        let x = &p.points;
        if x.len() != 8 {
            return Err(Error::Config(format!("expected 8 points, found {}", x.len())));
        }
        let dev = x.iter().zip(XI_EIGHTH).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        let products = ((x[0] * x[3] - 1.0).abs()).max((x[1] * x[5] + 1.0).abs());
        let degenerate = matches!(stationary_points(-0.25), Err(Error::DegenerateXi { .. }));
        // the merging pairs approach 2 ± √3 just above the boundary
        let near = stationary_points(-0.25 + 1e-10)?;
        let s3 = 3f64.sqrt();
        let merge = near.points[..4].iter().zip([2.0 + s3, 2.0 + s3, 2.0 - s3, 2.0 - s3]).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        Ok(Measure {
            value: dev,
            threshold: 1e-7,
            passed: dev < 1e-7 && products < 1e-6 && degenerate && merge < 1e-3,
            detail: format!("products {products:.1e}, degeneracy at -1/4 detected: {degenerate}, merge distance {merge:.1e}"),
        })
    })
}

pub fn gate_unimodularity(data: &Result<ScatteringData>) -> Gate {
    run(3, "scattering unimodularity (gaussian 0.3/1, 200 nodes)", || {
        let d = data.as_ref().map_err(Clone::clone)?;
        let worst = d.a.iter().zip(&d.b).map(|(a, b)| (a.norm_sqr() - b.norm_sqr() - 1.0).abs()).fold(0.0, f64::max);
        Ok(below(worst, 1e-6, format!("{} nodes", d.z_grid.len())))
    })
}

pub fn gate_trace(tol: &Tolerances) -> Gate {
    run(4, "trace formula a(i)", || {
        let ai = a_at_i(&reference_profile()?, tol.ode)?;
        let dev = (ai - 0.76654).norm();
        let exact = (ai - TRACE_TARGET).norm();
        Ok(Measure { value: dev, threshold: 1e-5, passed: dev < 1e-5 && exact < 1e-8, detail: format!("a(i) = {:.10}, |a(i) - exp(-0.15 sqrt pi)| = {exact:.1e}", ai.re) })
    })
}

pub fn gate_delta_jump(data: &Result<ScatteringData>, tol: &Tolerances) -> Gate {
    run(5, "delta jump on Sigma_b(1)", || {
        let d = data.as_ref().map_err(Clone::clone)?;
        let f = RHFactorization::new(1.0, Reflection::from_scattering(d)?, DiscreteSpectrum::empty(), None, tol.quad)?;
        let mut worst = 0.0f64;
        let mut count = 0;
        for &(a, b) in &f.portrait.sigma_b() {
            for i in 1..=10 {
                worst = worst.max(f.delta_jump_residual(a + (b - a) * i as f64 / 11.0, 1e-3)?);
                count += 1;
            }
        }
        Ok(below(worst, 1e-5, format!("{count} nodes")))
    })
}

pub fn gate_local_model(seed: u64) -> Gate {
    run(6, "parabolic cylinder model identities", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut worst_beta = 0.0f64;
        let mut models = Vec::new();
        for _ in 0..50 {
            let v: f64 = rng.random_range(1e-6..0.69);
            let r = C::from_polar((1.0 - (-2.0 * PI * v).exp()).sqrt(), rng.random_range(-PI..PI));
            let eta: i8 = if rng.random_bool(0.5) { 1 } else { -1 };
            let t: f64 = rng.random_range(1.0..1e4);
            let d2 = eta as f64 * rng.random_range(0.1..5.0);
            let m = SaddleModel::new(0, 0.0, eta, d2, r, C::from_polar(1.0, rng.random_range(-PI..PI)), rng.random_range(-1e3..1e3), t)?;
            worst_beta = worst_beta.max((m.beta12.norm_sqr() - v).abs()).max((m.beta12 * m.beta21 - v).norm());
            models.push(m);
        }
        let mut worst_jump = 0.0f64;
        for (k, s) in [-1.3, -0.4, 0.2, 0.7, 1.6].iter().enumerate() {
            let m = &models[k];
            worst_jump = worst_jump.max((m.jump_identity(*s)? + m.r_hat.conj()).norm());
        }
        Ok(Measure {
            value: worst_beta,
            threshold: 1e-10,
            passed: worst_beta < 1e-10 && worst_jump < 1e-6,
            detail: format!("50 samples; jump identity at 5 nodes {worst_jump:.1e} (limit 1e-6)"),
        })
    })
}

/// Quartet 1.2 + 0.2i with c = 10: its singular core stays beyond y = 10 for t ∈ [0, 1].
pub fn pde_quartet() -> Result<SolitonData> {
    let mut s = DiscreteSpectrum::empty();
    s.push_orbit(C::new(1.2, 0.2), C::new(10.0, 0.0))?;
    SolitonData::from_spectrum(&s)
}

pub fn gate_soliton(cfg: &ValidateConfig) -> Gate {
    run(7, "reflectionless quartet: residues and PDE residual", || {
        let tol = cfg.tol.residue;
        let mut s = DiscreteSpectrum::empty();
        s.push_orbit(C::new(2.0, 3.0), C::new(0.5, -0.2))?;
        let q = SolitonData::from_spectrum(&s)?;
        let mut residual = 0.0f64;
        for y in [-8.0, -1.0, 0.0, 2.5, 8.0] {
            residual = residual.max(q.solve(y, 0.5, tol)?.residual);
        }
        let d = pde_quartet()?;
        let h = 1e-2;
        let nt = (cfg.pde_t_max / h).round() as usize + 1;
        let t_end = h * (nt - 1) as f64;
        let x_at = |y: f64, t: f64| -> Result<f64> { Ok(d.solve(y, t, tol)?.reconstruct()?.x) };
        let lo = x_at(-10.0, 0.0)?.max(x_at(-10.0, t_end)?);
        let hi = x_at(10.0, 0.0)?.min(x_at(10.0, t_end)?);
        let nx = ((hi - lo) / h).floor() as usize + 1;
        let xs: Vec<f64> = (0..nx).map(|i| lo + h * i as f64).collect();
        let ts: Vec<f64> = (0..nt).map(|j| h * j as f64).collect();
        let field = field_on_grid(&d, &xs, &ts, tol)?;
        let r = pde_residual(&field, h, h)?;
        Ok(Measure {
            value: r.max,
            threshold: 1e-5,
            passed: r.max < 1e-5 && residual < 1e-10,
            detail: format!(
                "residue residual {residual:.1e} (limit 1e-10); stencil {nx}x{nt} on x in [{lo:.3}, {hi:.3}], noise scale {:.1e}",
                r.noise_scale
            ),
        })
    })
}

fn saddle_case(xi: f64, t: f64, tol: &Tolerances) -> Result<(RHFactorization, crate::asymptotics::AsymptoticExpansion, crate::soliton::SolitonState)> {
    let seed = if xi > 0.0 { LAMBDA_SEED_XI_1 } else { LAMBDA_SEED_XI_M18 };
    let mut s = DiscreteSpectrum::empty();
    s.push_orbit(seed, C::new(0.1, 0.0))?;
    let f = RHFactorization::new(xi, Reflection::synthetic(0.5, 0.3)?, s, Some(0.5), tol.quad)?;
    let a = evaluate_with(&f, xi * t, t, tol)?;
    let sol = SolitonData::from_factorization(&f)?.solve(xi * t, t, tol.residue)?;
    Ok((f, a, sol))
}

/// Residue closed form against contour quadrature, and the printed inverse
/// form against the same closed form (informational).
pub fn gate_error_coeffs(tol: &Tolerances) -> (Gate, Gate) {
    let mut printed = 0.0f64;
    let g = run(8, "f1/f2 residue form vs radius-0.1 quadrature", || {
        let mut worst = 0.0f64;
        let mut saddles = 0;
        for xi in [1.0, -0.125] {
            let (_, a, sol) = saddle_case(xi, 100.0, tol)?;
            let d = a.diagnostics.ok_or(Error::Config("no saddle diagnostics".into()))?;
            let (q1, q2) = error_coeffs_quadrature(&d.models, &sol, DISK_NODES)?;
            worst = worst.max(max_abs(&(q1 - d.f1))).max(max_abs(&(q2 - d.f2)));
            let (p1, p2) = error_coeffs_printed(&d.models, &sol)?;
            printed = printed.max(max_abs(&(p1 - d.f1))).max(max_abs(&(p2 - d.f2)));
            saddles += d.models.len();
        }
        Ok(below(worst, 1e-8, format!("{saddles} saddles, xi in {{1, -1/8}}, t = 100, one quartet in Lambda")))
    });
    let info = Gate {
        id: 8,
        name: "info: printed sigma2 M sigma2/(1 - xi^-2) inverse form vs residue form".into(),
        value: printed,
        threshold: f64::NAN,
        passed: true,
        detail: "not a gate; the printed form is not M^-1".into(),
        seconds: 0.0,
    };
    (g, info)
}

pub fn gate_scaling(tol: &Tolerances) -> Gate {
    run(9, "asymptotic scaling and reflectionless collapse", || {
        let mut worst_slope = 0.0f64;
        let mut slopes = Vec::new();
        for xi in [1.0, -0.125] {
            let f = RHFactorization::new(xi, Reflection::synthetic(0.5, 0.3)?, DiscreteSpectrum::empty(), None, tol.quad)?;
            let n = 2001;
            let mut pts = Vec::with_capacity(n);
            for k in 0..n {
                let t = 10f64.powf(2.0 + 4.0 * k as f64 / (n - 1) as f64);
                let a = evaluate_with(&f, xi * t, t, tol)?;
                let d = a.diagnostics.ok_or(Error::Config("no saddle diagnostics".into()))?;
                pts.push((t.ln(), (d.e_at_i - Matrix2::identity()).norm().ln()));
            }
            let slope = fit_slope(&pts);
            worst_slope = worst_slope.max((slope + 0.5).abs());
            slopes.push(slope);
        }
        let mut collapse = 0.0f64;
        for (xi, seed) in [(1.0, LAMBDA_SEED_XI_1), (-0.125, LAMBDA_SEED_XI_M18), (3.0, LAMBDA_SEED_XI_1), (-1.0, LAMBDA_SEED_XI_1)] {
            let mut s = DiscreteSpectrum::empty();
            s.push_orbit(seed, C::new(0.1, 0.0))?;
            let full = SolitonData::from_spectrum(&s)?;
            for t in [10.0, 100.0] {
                let a = evaluate(xi * t, t, &Reflection::zero(), &s, Some(1e3), tol)?;
                let r = full.solve(xi * t, t, tol.residue)?.reconstruct()?;
                collapse = collapse.max((a.q() - r.q).abs() / r.q.abs().max(1.0)).max((a.x_map - r.x).abs() / r.x.abs().max(1.0));
            }
        }
        Ok(Measure {
            value: worst_slope,
            threshold: 0.02,
            passed: worst_slope <= 0.02 && collapse <= 1e-12,
            detail: format!(
                "|slope + 0.5|; slopes {:.4} (xi = 1), {:.4} (xi = -1/8) from 2001 log-spaced t in [1e2, 1e6]; collapse {collapse:.1e} (limit 1e-12)",
                slopes[0], slopes[1]
            ),
        })
    })
}

/// Least-squares slope of y against x.
pub fn fit_slope(p: &[(f64, f64)]) -> f64 {
    let n = p.len() as f64;
    let mx = p.iter().map(|v| v.0).sum::<f64>() / n;
    let my = p.iter().map(|v| v.1).sum::<f64>() / n;
    let sxy: f64 = p.iter().map(|v| (v.0 - mx) * (v.1 - my)).sum();
    let sxx: f64 = p.iter().map(|v| (v.0 - mx).powi(2)).sum();
    sxy / sxx
}

pub fn gate_decay(seed: u64) -> Gate {
    run(10, "Im theta decay bounds, 1e3 samples per check", || {
        let mut failed = Vec::new();
        let mut worst = f64::INFINITY;
        let mut checks = 0;
        for xi in [3.0, -1.0, 1.0, -0.125] {
            let r = verify_decay_bounds(xi, 0.1, 1000, seed)?;
            for c in &r.checks {
                worst = worst.min(c.worst_margin);
                checks += 1;
                if !c.passed {
                    failed.push(format!("{} at xi = {xi}", c.name));
                }
            }
        }
        Ok(Measure {
            value: (-worst).max(0.0),
            threshold: 1e-12,
            passed: failed.is_empty(),
            detail: if failed.is_empty() { format!("{checks} checks, worst margin {worst:.2e}") } else { failed.join("; ") },
        })
    })
}

/// All gates in order, the scattering data shared by gates 3 and 5.
pub fn run_all(cfg: &ValidateConfig) -> Report {
    let data = reference_scattering(&cfg.tol);
    let mut gates = vec![
        gate_xi_one(),
        gate_xi_eighth(),
        gate_unimodularity(&data),
        gate_trace(&cfg.tol),
        gate_delta_jump(&data, &cfg.tol),
        gate_local_model(cfg.seed),
        gate_soliton(cfg),
    ];
    let (g8, info) = gate_error_coeffs(&cfg.tol);
    gates.push(g8);
    gates.push(info);
    gates.push(gate_scaling(&cfg.tol));
    gates.push(gate_decay(cfg.seed));
    let passed = gates.iter().all(|g| g.passed);
    Report { seed: cfg.seed, gates, passed }
}
