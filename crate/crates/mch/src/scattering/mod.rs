//! Direct scattering for finite-density initial data: a(z), b(z), r(z) on the
//! real line, the trace identity at z = i, and the discrete spectrum.

pub mod jost;
pub mod ode;
pub mod profile;
pub mod spectrum;

pub use jost::{check_parameter, jost_column, jost_solve, Column, Side, EXCLUSION};
pub use profile::{InitialProfile, Shape};
pub use spectrum::{discrete_spectrum_search, orbit, DiscreteSpectrum, Eigenvalue, SearchBox};

use crate::error::{Error, Result};
use jost::wronskian;
use num_complex::Complex64 as C;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Unimodularity deviation beyond which the truncation is deemed too short.
pub const UNIMODULARITY_GATE: f64 = 1e-6;

/// a, b at one real node together with the matching-point drift.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NodeCoefficients {
    pub z: f64,
    pub a: C,
    pub b: C,
    /// Relative change of (a, b) between matching points x₀ = 0 and x₀ = 1.
    pub drift: f64,
}

/// a(z) = det[Ψ̃₋,₁, Ψ̃₊,₂] and b(z) = e^{2p(x₀)} det[Ψ̃₊,₂, Ψ̃₋,₂] at a real node,
/// with p(x₀) = ik y(x₀) at t = 0.
pub fn coefficients(profile: &InitialProfile, z: f64, tol: f64) -> Result<NodeCoefficients> {
    let zc = C::new(z, 0.0);
    check_parameter(zc)?;
    let xs = [0.0, 1.0f64.min(0.5 * profile.half_width)];
    let u = jost_column(profile, zc, Side::Minus, Column::First, &xs, tol)?;
    let w = jost_column(profile, zc, Side::Minus, Column::Second, &xs, tol)?;
    let mut v = jost_column(profile, zc, Side::Plus, Column::Second, &[xs[1], xs[0]], tol)?;
    v.reverse();
    let k = (z - 1.0 / z) / 4.0;
    let mut ab = [(C::new(0.0, 0.0), C::new(0.0, 0.0)); 2];
    for i in 0..2 {
        let y0 = profile.y_of_x(xs[i], tol)?;
        let e2p = C::new(0.0, 2.0 * k * y0).exp();
        ab[i] = (wronskian(&u[i], &v[i]), e2p * wronskian(&v[i], &w[i]));
    }
    let scale = ab[0].0.norm().max(1.0);
    let drift = (ab[0].0 - ab[1].0).norm().max((ab[0].1 - ab[1].1).norm()) / scale;
    Ok(NodeCoefficients { z, a: ab[0].0, b: ab[0].1, drift })
}

/// r = b/ā at a real node.
pub fn reflection_at(profile: &InitialProfile, z: f64, tol: f64) -> Result<C> {
    let c = coefficients(profile, z, tol)?;
    if c.a.norm() < 1e-8 {
        return Err(Error::ZeroOfA(z));
    }
    Ok(c.b / c.a.conj())
}

/// a(i) from the Jost functions.
pub fn a_at_i(profile: &InitialProfile, tol: f64) -> Result<C> {
    spectrum::a_upper(profile, C::i(), tol)
}

/// exp(−½∫(m̆₀ − 1)), the trace-formula value of a(i).
pub fn trace_value(profile: &InitialProfile, tol: f64) -> Result<f64> {
    Ok((-0.5 * profile.total_excess(tol)?).exp())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Validation {
    pub unimodularity_max: f64,
    pub trace_residual: f64,
    pub x0_drift_max: f64,
}

/// Scattering coefficients on a real grid plus the discrete spectrum.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScatteringData {
    pub z_grid: Vec<f64>,
    pub a: Vec<C>,
    pub b: Vec<C>,
    pub r: Vec<C>,
    pub discrete: DiscreteSpectrum,
    pub validation: Validation,
}

/// Grid of n nodes on [lo, hi] with the neighborhoods of 0, ±1 removed.
pub fn admissible_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(n);
    // oversample uniformly, then drop excluded nodes until n remain
    let mut m = n;
    while out.len() < n && m < 100 * n + 10 {
        out = (0..m)
            .map(|i| lo + (hi - lo) * (i as f64 + 0.5) / m as f64)
            .filter(|z| check_parameter(C::new(*z, 0.0)).is_ok())
            .collect();
        m += 1;
    }
    out.truncate(n);
    out
}

/// Evaluate S(z) over the grid in parallel, checking unimodularity and the trace identity.
pub fn scattering_matrix(
    profile: &InitialProfile,
    z_grid: &[f64],
    discrete: DiscreteSpectrum,
    tol: f64,
) -> Result<ScatteringData> {
    let nodes: Vec<NodeCoefficients> = z_grid
        .par_iter()
        .map(|&z| coefficients(profile, z, tol))
        .collect::<Result<_>>()?;
    let mut unimod = 0.0f64;
    let mut drift = 0.0f64;
    let mut r = Vec::with_capacity(nodes.len());
    for n in &nodes {
        let dev = (n.a.norm_sqr() - n.b.norm_sqr() - 1.0).abs();
        if dev > UNIMODULARITY_GATE {
            return Err(Error::Unimodularity { z: n.z, dev });
        }
        if n.a.norm() < 1e-8 {
            return Err(Error::ZeroOfA(n.z));
        }
        unimod = unimod.max(dev);
        drift = drift.max(n.drift);
        r.push(n.b / n.a.conj());
    }
    let trace_residual = (a_at_i(profile, tol)? - trace_value(profile, tol)?).norm();
    Ok(ScatteringData {
        z_grid: z_grid.to_vec(),
        a: nodes.iter().map(|n| n.a).collect(),
        b: nodes.iter().map(|n| n.b).collect(),
        r,
        discrete,
        validation: Validation { unimodularity_max: unimod, trace_residual, x0_drift_max: drift },
    })
}

/// ‖r(z) + conj r(−z)‖∞ and ‖r(z) + r(−1/z)‖∞ over the admissible nodes.
///
/// The Jost symmetries under z ↦ −z and z ↦ 1/z give b(−1/z) = −b(z) while
/// a(−1/z) = a(z), so the inversion pairing of r carries a minus sign.
pub fn symmetry_residuals(profile: &InitialProfile, z_grid: &[f64], tol: f64) -> Result<(f64, f64)> {
    let res: Vec<(f64, f64)> = z_grid
        .par_iter()
        .map(|&z| -> Result<(f64, f64)> {
            let r = reflection_at(profile, z, tol)?;
            let odd = (r + reflection_at(profile, -z, tol)?.conj()).norm();
            let inv = if check_parameter(C::new(-1.0 / z, 0.0)).is_ok() && (1.0 / z).abs() < 60.0 {
                (r + reflection_at(profile, -1.0 / z, tol)?).norm()
            } else {
                0.0
            };
            Ok((odd, inv))
        })
        .collect::<Result<_>>()?;
    Ok(res.iter().fold((0.0f64, 0.0f64), |acc, v| (acc.0.max(v.0), acc.1.max(v.1))))
}
